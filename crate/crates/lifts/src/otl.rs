//! One-time lift from single-bit to fixed-length documents: `ell`
//! independent copies of the base scheme, one per document bit, verified as
//! a conjunction.

use rand::RngCore;

use crate::scheme::{DocumentDomain, LiftError, TmacScheme};
use crate::wire::{Reader, Writer, TAG_OTL};

#[derive(Debug, Clone)]
pub struct Otl<S> {
    base: S,
    ell: usize,
}

impl<S: TmacScheme> Otl<S> {
    pub fn new(base: S, ell: usize) -> Self {
        assert!(ell >= 1, "document length must be positive");
        assert_eq!(
            base.document_domain(),
            DocumentDomain::SingleBit,
            "this lift instantiates one single-bit scheme per document bit"
        );
        Otl { base, ell }
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    fn check(&self, len: usize) -> Result<(), LiftError> {
        if len == self.ell {
            Ok(())
        } else {
            Err(LiftError::DomainMismatch {
                expected: DocumentDomain::FixedLength(self.ell),
                got: len,
            })
        }
    }
}

impl<S: TmacScheme> TmacScheme for Otl<S> {
    type Key = Vec<S::Key>;
    type Token = Vec<S::Token>;
    type Signature = Vec<S::Signature>;

    fn document_domain(&self) -> DocumentDomain {
        DocumentDomain::FixedLength(self.ell)
    }

    fn key_gen(&self, rng: &mut dyn RngCore) -> Self::Key {
        (0..self.ell).map(|_| self.base.key_gen(rng)).collect()
    }

    fn token_gen(
        &self,
        key: &mut Self::Key,
        rng: &mut dyn RngCore,
    ) -> Result<Self::Token, LiftError> {
        key.iter_mut().map(|k| self.base.token_gen(k, rng)).collect()
    }

    fn sign(
        &self,
        token: Self::Token,
        document: &[bool],
        rng: &mut dyn RngCore,
    ) -> Result<Self::Signature, LiftError> {
        self.check(document.len())?;
        token
            .into_iter()
            .zip(document)
            .map(|(t, &bit)| self.base.sign(t, &[bit], rng))
            .collect()
    }

    fn verify(&self, key: &Self::Key, document: &[bool], signature: &Self::Signature) -> bool {
        document.len() == self.ell
            && signature.len() == self.ell
            && key
                .iter()
                .zip(document)
                .zip(signature)
                .all(|((k, &bit), s)| self.base.verify(k, &[bit], s))
    }

    fn quantum_parts<'a>(&self, token: &'a Self::Token) -> Vec<&'a ctmac::Token> {
        token.iter().flat_map(|t| self.base.quantum_parts(t)).collect()
    }

    fn quantum_parts_mut<'a>(&self, token: &'a mut Self::Token) -> Vec<&'a mut ctmac::Token> {
        token.iter_mut().flat_map(|t| self.base.quantum_parts_mut(t)).collect()
    }

    fn key_to_bytes(&self, key: &Self::Key) -> Vec<u8> {
        let mut w = Writer::new();
        w.put_u32(key.len() as u32);
        for k in key {
            w.put_block(&self.base.key_to_bytes(k));
        }
        w.finish()
    }

    fn key_from_bytes(&self, bytes: &[u8]) -> Option<Self::Key> {
        let mut r = Reader::new(bytes);
        let n = r.u32()? as usize;
        if n != self.ell {
            return None;
        }
        let key = (0..n)
            .map(|_| r.block().and_then(|b| self.base.key_from_bytes(b)))
            .collect::<Option<_>>()?;
        r.finish()?;
        Some(key)
    }

    fn sig_to_bytes(&self, signature: &Self::Signature) -> Vec<u8> {
        let mut w = Writer::new();
        w.put_u8(TAG_OTL).put_u32(signature.len() as u32);
        for s in signature {
            w.put_block(&self.base.sig_to_bytes(s));
        }
        w.finish()
    }

    fn sig_from_bytes(&self, bytes: &[u8]) -> Option<Self::Signature> {
        let mut r = Reader::new(bytes);
        r.expect_tag(TAG_OTL)?;
        let n = r.u32()? as usize;
        if n != self.ell {
            return None;
        }
        let sigs = (0..n)
            .map(|_| r.block().and_then(|b| self.base.sig_from_bytes(b)))
            .collect::<Option<_>>()?;
        r.finish()?;
        Some(sigs)
    }
}
