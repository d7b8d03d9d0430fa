//! Hash-and-sign lift to unrestricted documents.
//!
//! Signing samples a fresh hash index `s`, hashes the document, and signs
//! the fixed-length string `s || h_s(m)` with the base scheme; the index
//! travels in the signature so verification can recompute the inner string.
//! Sampling `s` after the adversary has committed to a document is what
//! lets a target-collision-resistant hash (rather than a fully
//! collision-resistant one) carry the reduction.

use classical::{uowhf_eval, uowhf_index, UowhfIndex};
use rand::RngCore;

use crate::scheme::{DocumentDomain, LiftError, TmacScheme};
use crate::wire::{pack_bits_framed, Reader, Writer, TAG_OT};

#[derive(Debug, Clone)]
pub struct Ot<S> {
    base: S,
    index_bits: usize,
    hash_bits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OtSignature<Inner> {
    pub index: UowhfIndex,
    pub inner: Inner,
}

impl<S: TmacScheme> Ot<S> {
    /// The base must sign exactly `index_bits + hash_bits`-bit documents.
    pub fn new(base: S, index_bits: usize, hash_bits: usize) -> Self {
        assert!((1..=512).contains(&hash_bits), "hash width must be 1..=512 bits");
        assert!(index_bits >= 1, "index width must be positive");
        assert_eq!(
            base.document_domain(),
            DocumentDomain::FixedLength(index_bits + hash_bits),
            "base domain must fit index || digest"
        );
        Ot { base, index_bits, hash_bits }
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn index_bits(&self) -> usize {
        self.index_bits
    }

    pub fn hash_bits(&self) -> usize {
        self.hash_bits
    }

    /// `s || h_s(m)`: the string the base scheme actually signs.
    pub fn inner_document(&self, index: &UowhfIndex, document: &[bool]) -> Vec<bool> {
        let mut inner = index.bits().to_vec();
        inner.extend(uowhf_eval(index, &pack_bits_framed(document), self.hash_bits));
        inner
    }
}

impl<S: TmacScheme> TmacScheme for Ot<S> {
    type Key = S::Key;
    type Token = S::Token;
    type Signature = OtSignature<S::Signature>;

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
        let index = uowhf_index(self.index_bits, rng);
        let inner = self.base.sign(token, &self.inner_document(&index, document), rng)?;
        Ok(OtSignature { index, inner })
    }

    fn verify(&self, key: &Self::Key, document: &[bool], signature: &Self::Signature) -> bool {
        signature.index.lambda() == self.index_bits
            && self.base.verify(
                key,
                &self.inner_document(&signature.index, document),
                &signature.inner,
            )
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
        w.put_u8(TAG_OT)
            .put_bits(signature.index.bits())
            .put_block(&self.base.sig_to_bytes(&signature.inner));
        w.finish()
    }

    fn sig_from_bytes(&self, bytes: &[u8]) -> Option<Self::Signature> {
        let mut r = Reader::new(bytes);
        r.expect_tag(TAG_OT)?;
        let index_bits = r.bits()?;
        let inner = self.base.sig_from_bytes(r.block()?)?;
        r.finish()?;
        if index_bits.len() != self.index_bits {
            return None;
        }
        Some(OtSignature { index: UowhfIndex::from_bits(index_bits), inner })
    }
}
