//! Token-once-more lift: unbounded token issuance under one master key.
//!
//! The master key is an AEAD key. Every token carries a fresh base key
//! encrypted as `e`; signatures append `e`, and verification decrypts the
//! signature's copy, rejecting outright when authentication fails. The
//! AEAD's strong unforgeability is what stops an adversary from smuggling
//! in a base key of its own choosing.

use classical::{aead_dec, aead_enc, aead_keygen, AeadCiphertext, AeadKey};
use rand::RngCore;

use crate::scheme::{DocumentDomain, LiftError, TmacScheme};
use crate::wire::{Reader, Writer, TAG_TOM};

#[derive(Debug, Clone)]
pub struct Tom<S> {
    base: S,
}

#[derive(Debug, Clone)]
pub struct TomToken<Inner> {
    pub inner: Inner,
    pub e: AeadCiphertext,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TomSignature<Inner> {
    pub inner: Inner,
    pub e: AeadCiphertext,
}

impl<S: TmacScheme> Tom<S> {
    pub fn new(base: S) -> Self {
        Tom { base }
    }

    pub fn base(&self) -> &S {
        &self.base
    }
}

impl<S: TmacScheme> TmacScheme for Tom<S> {
    type Key = AeadKey;
    type Token = TomToken<S::Token>;
    type Signature = TomSignature<S::Signature>;

    fn document_domain(&self) -> DocumentDomain {
        self.base.document_domain()
    }

    fn key_gen(&self, rng: &mut dyn RngCore) -> Self::Key {
        aead_keygen(256, rng)
    }

    fn token_gen(
        &self,
        key: &mut Self::Key,
        rng: &mut dyn RngCore,
    ) -> Result<Self::Token, LiftError> {
        let mut fresh = self.base.key_gen(rng);
        let inner = self.base.token_gen(&mut fresh, rng)?;
        // Serialized after the base issuance so any state the base keeps in
        // its key (a nested token counter, say) rides along in e.
        let e = aead_enc(key, &self.base.key_to_bytes(&fresh), rng);
        Ok(TomToken { inner, e })
    }

    fn sign(
        &self,
        token: Self::Token,
        document: &[bool],
        rng: &mut dyn RngCore,
    ) -> Result<Self::Signature, LiftError> {
        let inner = self.base.sign(token.inner, document, rng)?;
        Ok(TomSignature { inner, e: token.e })
    }

    fn verify(&self, key: &Self::Key, document: &[bool], signature: &Self::Signature) -> bool {
        let Ok(fresh_bytes) = aead_dec(key, &signature.e) else {
            return false;
        };
        let Some(fresh) = self.base.key_from_bytes(&fresh_bytes) else {
            return false;
        };
        self.base.verify(&fresh, document, &signature.inner)
    }

    fn quantum_parts<'a>(&self, token: &'a Self::Token) -> Vec<&'a ctmac::Token> {
        self.base.quantum_parts(&token.inner)
    }

    fn quantum_parts_mut<'a>(&self, token: &'a mut Self::Token) -> Vec<&'a mut ctmac::Token> {
        self.base.quantum_parts_mut(&mut token.inner)
    }

    fn key_to_bytes(&self, key: &Self::Key) -> Vec<u8> {
        key.to_bytes()
    }

    fn key_from_bytes(&self, bytes: &[u8]) -> Option<Self::Key> {
        AeadKey::from_bytes(bytes)
    }

    fn sig_to_bytes(&self, signature: &Self::Signature) -> Vec<u8> {
        let mut w = Writer::new();
        w.put_u8(TAG_TOM)
            .put_block(&self.base.sig_to_bytes(&signature.inner))
            .put_block(&signature.e.to_bytes());
        w.finish()
    }

    fn sig_from_bytes(&self, bytes: &[u8]) -> Option<Self::Signature> {
        let mut r = Reader::new(bytes);
        r.expect_tag(TAG_TOM)?;
        let inner = self.base.sig_from_bytes(r.block()?)?;
        let e = AeadCiphertext::from_bytes(r.block()?).ok()?;
        r.finish()?;
        Some(TomSignature { inner, e })
    }
}
