//! Many-signatures lift: salt every document with fresh randomness.
//!
//! `sign(m)` draws `rnd` and signs `m || rnd`; the salt is published in the
//! signature. Distinct signings of one document then hit distinct inner
//! strings, which is what turns one-time unforgeability of the base into
//! security against an adversary who sees many signatures.

use rand::{Rng, RngCore};

use crate::scheme::{DocumentDomain, LiftError, TmacScheme};
use crate::wire::{Reader, Writer, TAG_TMS};

#[derive(Debug, Clone)]
pub struct Tms<S> {
    base: S,
    rnd_bits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmsSignature<Inner> {
    pub rnd: Vec<bool>,
    pub inner: Inner,
}

impl<S: TmacScheme> Tms<S> {
    pub fn new(base: S, rnd_bits: usize) -> Self {
        assert!(rnd_bits >= 1, "salt width must be positive");
        assert_eq!(
            base.document_domain(),
            DocumentDomain::Unrestricted,
            "the salted document must stay in the base domain"
        );
        Tms { base, rnd_bits }
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn rnd_bits(&self) -> usize {
        self.rnd_bits
    }

    fn salted(&self, document: &[bool], rnd: &[bool]) -> Vec<bool> {
        let mut inner = document.to_vec();
        inner.extend_from_slice(rnd);
        inner
    }
}

impl<S: TmacScheme> TmacScheme for Tms<S> {
    type Key = S::Key;
    type Token = S::Token;
    type Signature = TmsSignature<S::Signature>;

    fn document_domain(&self) -> DocumentDomain {
        DocumentDomain::Unrestricted
    }

    fn key_gen(&self, rng: &mut dyn RngCore) -> Self::Key {
        self.base.key_gen(rng)
    }

    fn token_gen(
        &self,
        key: &mut Self::Key,
        rng: &mut dyn RngCore,
    ) -> Result<Self::Token, LiftError> {
        self.base.token_gen(key, rng)
    }

    fn sign(
        &self,
        token: Self::Token,
        document: &[bool],
        rng: &mut dyn RngCore,
    ) -> Result<Self::Signature, LiftError> {
        let rnd: Vec<bool> = (0..self.rnd_bits).map(|_| rng.gen()).collect();
        let inner = self.base.sign(token, &self.salted(document, &rnd), rng)?;
        Ok(TmsSignature { rnd, inner })
    }

    fn verify(&self, key: &Self::Key, document: &[bool], signature: &Self::Signature) -> bool {
        signature.rnd.len() == self.rnd_bits
            && self.base.verify(key, &self.salted(document, &signature.rnd), &signature.inner)
    }

    fn quantum_parts<'a>(&self, token: &'a Self::Token) -> Vec<&'a ctmac::Token> {
        self.base.quantum_parts(token)
    }

    fn quantum_parts_mut<'a>(&self, token: &'a mut Self::Token) -> Vec<&'a mut ctmac::Token> {
        self.base.quantum_parts_mut(token)
    }

    fn key_to_bytes(&self, key: &Self::Key) -> Vec<u8> {
        self.base.key_to_bytes(key)
    }

    fn key_from_bytes(&self, bytes: &[u8]) -> Option<Self::Key> {
        self.base.key_from_bytes(bytes)
    }

    fn sig_to_bytes(&self, signature: &Self::Signature) -> Vec<u8> {
        let mut w = Writer::new();
        w.put_u8(TAG_TMS)
            .put_bits(&signature.rnd)
            .put_block(&self.base.sig_to_bytes(&signature.inner));
        w.finish()
    }

    fn sig_from_bytes(&self, bytes: &[u8]) -> Option<Self::Signature> {
        let mut r = Reader::new(bytes);
        r.expect_tag(TAG_TMS)?;
        let rnd = r.bits()?;
        let inner = self.base.sig_from_bytes(r.block()?)?;
        r.finish()?;
        if rnd.len() != self.rnd_bits {
            return None;
        }
        Some(TmsSignature { rnd, inner })
    }
}
