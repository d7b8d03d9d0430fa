//! Bounded-issuance lift: exactly `j` tokens per key, information
//! theoretically.
//!
//! Where the unbounded wrapper leans on computational AEAD security, this
//! one spends limited-independence resources instead: each token's fresh
//! base key is encrypted under a j-wise independent family and the
//! ciphertext is tagged by a j-time MAC. Issuing token j+1 would need a
//! pad that does not exist, so `token_gen` fails with a budget error.

use classical::{
    wc_keygen, wc_sign, wc_verify, JwiseBytesCiphertext, JwiseBytesKey, WcMacError, WcMacKey,
};
use rand::RngCore;

use crate::scheme::{DocumentDomain, LiftError, TmacScheme};
use crate::wire::{Reader, Writer, TAG_TOMJ};

const TAG_BITS: u32 = 32;

#[derive(Debug, Clone)]
pub struct TomJ<S> {
    base: S,
    j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TomJKey {
    pub cenc: JwiseBytesKey,
    pub cmac: WcMacKey,
}

#[derive(Debug, Clone)]
pub struct TomJToken<Inner> {
    pub inner: Inner,
    pub c: JwiseBytesCiphertext,
    pub ksig: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TomJSignature<Inner> {
    pub inner: Inner,
    pub c: JwiseBytesCiphertext,
    pub ksig: Vec<u8>,
}

impl<S: TmacScheme> TomJ<S> {
    pub fn new(base: S, j: usize) -> Self {
        assert!(j >= 1, "token budget must be positive");
        TomJ { base, j }
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn j(&self) -> usize {
        self.j
    }
}

impl<S: TmacScheme> TmacScheme for TomJ<S> {
    type Key = TomJKey;
    type Token = TomJToken<S::Token>;
    type Signature = TomJSignature<S::Signature>;

    fn document_domain(&self) -> DocumentDomain {
        self.base.document_domain()
    }

    fn key_gen(&self, rng: &mut dyn RngCore) -> Self::Key {
        // The encryption family is keyed per message length, so size it
        // with a probe key; base key encodings are fixed-width for a fixed
        // scheme configuration.
        let probe = self.base.key_to_bytes(&self.base.key_gen(rng));
        TomJKey {
            cenc: JwiseBytesKey::sample(self.j, probe.len(), rng),
            cmac: wc_keygen(self.j, TAG_BITS, rng),
        }
    }

    fn token_gen(
        &self,
        key: &mut Self::Key,
        rng: &mut dyn RngCore,
    ) -> Result<Self::Token, LiftError> {
        let mut fresh = self.base.key_gen(rng);
        let fresh_bytes = self.base.key_to_bytes(&fresh);
        assert_eq!(
            fresh_bytes.len(),
            key.cenc.msg_len(),
            "base key encoding must be fixed-width"
        );
        let c = key.cenc.enc(&fresh_bytes, rng);
        let ksig = wc_sign(&mut key.cmac, &c.to_bytes())
            .map_err(|WcMacError::PadExhausted(n)| LiftError::TokenBudgetExhausted(n))?;
        let inner = self.base.token_gen(&mut fresh, rng)?;
        Ok(TomJToken { inner, c, ksig })
    }

    fn sign(
        &self,
        token: Self::Token,
        document: &[bool],
        rng: &mut dyn RngCore,
    ) -> Result<Self::Signature, LiftError> {
        let inner = self.base.sign(token.inner, document, rng)?;
        Ok(TomJSignature { inner, c: token.c, ksig: token.ksig })
    }

    fn verify(&self, key: &Self::Key, document: &[bool], signature: &Self::Signature) -> bool {
        if !wc_verify(&key.cmac, &signature.c.to_bytes(), &signature.ksig) {
            return false;
        }
        if signature.c.blocks.len() != key.cenc.msg_len().div_ceil(8).max(1) {
            return false;
        }
        let Some(fresh) = self.base.key_from_bytes(&key.cenc.dec(&signature.c)) else {
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
        let mut w = Writer::new();
        w.put_block(&key.cenc.to_bytes()).put_block(&key.cmac.to_bytes());
        w.finish()
    }

    fn key_from_bytes(&self, bytes: &[u8]) -> Option<Self::Key> {
        let mut r = Reader::new(bytes);
        let cenc = JwiseBytesKey::from_bytes(r.block()?)?;
        let cmac = WcMacKey::from_bytes(r.block()?)?;
        r.finish()?;
        Some(TomJKey { cenc, cmac })
    }

    fn sig_to_bytes(&self, signature: &Self::Signature) -> Vec<u8> {
        let mut w = Writer::new();
        w.put_u8(TAG_TOMJ)
            .put_block(&self.base.sig_to_bytes(&signature.inner))
            .put_block(&signature.c.to_bytes())
            .put_block(&signature.ksig);
        w.finish()
    }

    fn sig_from_bytes(&self, bytes: &[u8]) -> Option<Self::Signature> {
        let mut r = Reader::new(bytes);
        r.expect_tag(TAG_TOMJ)?;
        let inner = self.base.sig_from_bytes(r.block()?)?;
        let c = JwiseBytesCiphertext::from_bytes(r.block()?)?;
        let ksig = r.block()?.to_vec();
        r.finish()?;
        Some(TomJSignature { inner, c, ksig })
    }
}
