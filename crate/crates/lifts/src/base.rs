//! The one-bit scheme dressed in the generic interface, the floor of every
//! lifting tower.

use rand::RngCore;

use crate::scheme::{DocumentDomain, LiftError, TmacScheme};
use crate::wire::{Reader, Writer, TAG_CTMAC};

/// One-bit tokenized MAC at tolerance `eta`: `eta = 0` is the exact scheme,
/// positive `eta` tolerates a miss fraction up to `eta` of the key length.
#[derive(Debug, Clone, Copy)]
pub struct CtmacBase {
    lambda: usize,
    eta: f64,
}

impl CtmacBase {
    pub fn new(lambda: usize, eta: f64) -> Self {
        assert!(lambda >= 1, "key length must be positive");
        assert!(eta >= 0.0, "tolerance must be nonnegative");
        CtmacBase { lambda, eta }
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }
}

impl TmacScheme for CtmacBase {
    type Key = ctmac::SecretKey1;
    type Token = ctmac::Token;
    type Signature = ctmac::Signature1;

    fn document_domain(&self) -> DocumentDomain {
        DocumentDomain::SingleBit
    }

    fn key_gen(&self, rng: &mut dyn RngCore) -> Self::Key {
        ctmac::key_gen(self.lambda, rng).expect("lambda is validated at construction")
    }

    fn token_gen(
        &self,
        key: &mut Self::Key,
        _rng: &mut dyn RngCore,
    ) -> Result<Self::Token, LiftError> {
        Ok(ctmac::token_gen(key))
    }

    fn sign(
        &self,
        mut token: Self::Token,
        document: &[bool],
        rng: &mut dyn RngCore,
    ) -> Result<Self::Signature, LiftError> {
        if document.len() != 1 {
            return Err(LiftError::DomainMismatch {
                expected: DocumentDomain::SingleBit,
                got: document.len(),
            });
        }
        ctmac::sign(&mut token, document[0], rng).map_err(|_| LiftError::TokenConsumed)
    }

    fn verify(&self, key: &Self::Key, document: &[bool], signature: &Self::Signature) -> bool {
        if document.len() != 1 {
            return false;
        }
        ctmac::verify(key, document[0], signature, self.eta)
            .map(|report| report.accepted)
            .unwrap_or(false)
    }

    fn quantum_parts<'a>(&self, token: &'a Self::Token) -> Vec<&'a ctmac::Token> {
        vec![token]
    }

    fn quantum_parts_mut<'a>(&self, token: &'a mut Self::Token) -> Vec<&'a mut ctmac::Token> {
        vec![token]
    }

    fn key_to_bytes(&self, key: &Self::Key) -> Vec<u8> {
        let mut w = Writer::new();
        w.put_bits(key.a()).put_bits(key.b());
        w.finish()
    }

    fn key_from_bytes(&self, bytes: &[u8]) -> Option<Self::Key> {
        let mut r = Reader::new(bytes);
        let a = r.bits()?;
        let b = r.bits()?;
        r.finish()?;
        if a.len() != self.lambda {
            return None;
        }
        ctmac::SecretKey1::new(a, b).ok()
    }

    fn sig_to_bytes(&self, signature: &Self::Signature) -> Vec<u8> {
        let mut w = Writer::new();
        w.put_u8(TAG_CTMAC).put_bits(&signature.bits);
        w.finish()
    }

    fn sig_from_bytes(&self, bytes: &[u8]) -> Option<Self::Signature> {
        let mut r = Reader::new(bytes);
        r.expect_tag(TAG_CTMAC)?;
        let bits = r.bits()?;
        r.finish()?;
        if bits.len() != self.lambda {
            return None;
        }
        Some(ctmac::Signature1 { bits })
    }
}
