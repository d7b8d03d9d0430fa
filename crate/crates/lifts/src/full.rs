//! The flagship scheme, written out flat.
//!
//! One signing pass: salt the document with `r2`, hash it under a fresh
//! index `r1`, append `r1`, and measure one sub-token per bit of the
//! resulting string. The signature is `((s^1..s^ell), e, r1, r2)` where `e`
//! is the encrypted bundle of sub-keys minted at token issuance.
//!
//! The same behavior is expressible by stacking the four generic lifts over
//! the one-bit scheme; this type implements the flat algorithm directly and
//! the equivalence with the stacked tower is checked by tests, so drift
//! between the two formulations shows up as a test failure rather than a
//! silent semantic change.
//!
//! Two security parameters on purpose: `outer_lambda` sizes the hash index
//! and salt, `sub_lambda` sizes each sub-token, so noise experiments can
//! scale qubit counts without dragging the hash along.

use classical::{aead_dec, aead_enc, aead_keygen, uowhf_eval, uowhf_index, AeadCiphertext,
    AeadKey, UowhfIndex};
use rand::{Rng, RngCore};

use crate::base::CtmacBase;
use crate::ot::Ot;
use crate::otl::Otl;
use crate::scheme::{DocumentDomain, LiftError, TmacScheme};
use crate::tms::Tms;
use crate::tom::Tom;
use crate::wire::{pack_bits_framed, Reader, Writer, TAG_FULL};

pub const DEFAULT_ETA: f64 = 0.07;
pub const DEFAULT_HASH_BITS: usize = 256;

#[derive(Debug, Clone, Copy)]
pub struct FullCtmac {
    outer_lambda: usize,
    sub_lambda: usize,
    ell_prime: usize,
    eta: f64,
}

#[derive(Debug, Clone)]
pub struct FullToken {
    pub subs: Vec<ctmac::Token>,
    pub e: AeadCiphertext,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FullSignature {
    pub subs: Vec<ctmac::Signature1>,
    pub e: AeadCiphertext,
    pub r1: UowhfIndex,
    pub r2: Vec<bool>,
}

impl FullCtmac {
    pub fn new(outer_lambda: usize, sub_lambda: usize) -> Self {
        Self::with_profile(outer_lambda, sub_lambda, DEFAULT_HASH_BITS, DEFAULT_ETA)
    }

    pub fn with_profile(
        outer_lambda: usize,
        sub_lambda: usize,
        ell_prime: usize,
        eta: f64,
    ) -> Self {
        assert!(outer_lambda >= 1 && sub_lambda >= 1, "security parameters must be positive");
        assert!((1..=512).contains(&ell_prime), "hash width must be 1..=512 bits");
        assert!(eta >= 0.0, "tolerance must be nonnegative");
        FullCtmac { outer_lambda, sub_lambda, ell_prime, eta }
    }

    pub fn outer_lambda(&self) -> usize {
        self.outer_lambda
    }

    pub fn sub_lambda(&self) -> usize {
        self.sub_lambda
    }

    pub fn ell_prime(&self) -> usize {
        self.ell_prime
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// Number of sub-instances: hash width plus index width.
    pub fn ell(&self) -> usize {
        self.ell_prime + self.outer_lambda
    }

    /// The fixed-length tower over the same sub-instances; its key codec is
    /// reused verbatim so the encrypted bundle `e` is byte-compatible with
    /// the stacked formulation.
    fn sub_key_codec(&self) -> Otl<CtmacBase> {
        Otl::new(CtmacBase::new(self.sub_lambda, self.eta), self.ell())
    }

    /// `h_{r1}(m || r2) || r1`, the string the sub-tokens measure.
    pub fn inner_document(&self, r1: &UowhfIndex, document: &[bool], r2: &[bool]) -> Vec<bool> {
        let mut salted = document.to_vec();
        salted.extend_from_slice(r2);
        let mut inner = uowhf_eval(r1, &pack_bits_framed(&salted), self.ell_prime);
        inner.extend_from_slice(r1.bits());
        inner
    }
}

impl TmacScheme for FullCtmac {
    type Key = AeadKey;
    type Token = FullToken;
    type Signature = FullSignature;

    fn document_domain(&self) -> DocumentDomain {
        DocumentDomain::Unrestricted
    }

    fn key_gen(&self, rng: &mut dyn RngCore) -> Self::Key {
        aead_keygen(256, rng)
    }

    fn token_gen(
        &self,
        key: &mut Self::Key,
        rng: &mut dyn RngCore,
    ) -> Result<Self::Token, LiftError> {
        let kappa: Vec<ctmac::SecretKey1> = (0..self.ell())
            .map(|_| ctmac::key_gen(self.sub_lambda, rng).expect("sub_lambda is positive"))
            .collect();
        let subs = kappa.iter().map(ctmac::token_gen).collect();
        let e = aead_enc(key, &self.sub_key_codec().key_to_bytes(&kappa), rng);
        Ok(FullToken { subs, e })
    }

    fn sign(
        &self,
        token: Self::Token,
        document: &[bool],
        rng: &mut dyn RngCore,
    ) -> Result<Self::Signature, LiftError> {
        let r1 = uowhf_index(self.outer_lambda, rng);
        let r2: Vec<bool> = (0..self.outer_lambda).map(|_| rng.gen()).collect();
        let inner = self.inner_document(&r1, document, &r2);
        let subs = token
            .subs
            .into_iter()
            .zip(&inner)
            .map(|(mut t, &bit)| {
                ctmac::sign(&mut t, bit, rng).map_err(|_| LiftError::TokenConsumed)
            })
            .collect::<Result<_, _>>()?;
        Ok(FullSignature { subs, e: token.e, r1, r2 })
    }

    fn verify(&self, key: &Self::Key, document: &[bool], signature: &Self::Signature) -> bool {
        if signature.r1.lambda() != self.outer_lambda
            || signature.r2.len() != self.outer_lambda
            || signature.subs.len() != self.ell()
        {
            return false;
        }
        let Ok(kappa_bytes) = aead_dec(key, &signature.e) else {
            return false;
        };
        let Some(kappa) = self.sub_key_codec().key_from_bytes(&kappa_bytes) else {
            return false;
        };
        let inner = self.inner_document(&signature.r1, document, &signature.r2);
        kappa
            .iter()
            .zip(&inner)
            .zip(&signature.subs)
            .all(|((k, &bit), s)| {
                ctmac::verify(k, bit, s, self.eta).map(|r| r.accepted).unwrap_or(false)
            })
    }

    fn quantum_parts<'a>(&self, token: &'a Self::Token) -> Vec<&'a ctmac::Token> {
        token.subs.iter().collect()
    }

    fn quantum_parts_mut<'a>(&self, token: &'a mut Self::Token) -> Vec<&'a mut ctmac::Token> {
        token.subs.iter_mut().collect()
    }

    fn key_to_bytes(&self, key: &Self::Key) -> Vec<u8> {
        key.to_bytes()
    }

    fn key_from_bytes(&self, bytes: &[u8]) -> Option<Self::Key> {
        AeadKey::from_bytes(bytes)
    }

    fn sig_to_bytes(&self, signature: &Self::Signature) -> Vec<u8> {
        let mut w = Writer::new();
        w.put_u8(TAG_FULL).put_u32(signature.subs.len() as u32);
        for s in &signature.subs {
            w.put_bits(&s.bits);
        }
        w.put_block(&signature.e.to_bytes())
            .put_bits(signature.r1.bits())
            .put_bits(&signature.r2);
        w.finish()
    }

    fn sig_from_bytes(&self, bytes: &[u8]) -> Option<Self::Signature> {
        let mut r = Reader::new(bytes);
        r.expect_tag(TAG_FULL)?;
        let n = r.u32()? as usize;
        if n != self.ell() {
            return None;
        }
        let subs = (0..n)
            .map(|_| r.bits().map(|bits| ctmac::Signature1 { bits }))
            .collect::<Option<_>>()?;
        let e = AeadCiphertext::from_bytes(r.block()?).ok()?;
        let r1 = r.bits()?;
        let r2 = r.bits()?;
        r.finish()?;
        if r1.len() != self.outer_lambda || r2.len() != self.outer_lambda {
            return None;
        }
        Some(FullSignature { subs, e, r1: UowhfIndex::from_bits(r1), r2 })
    }
}

/// The stacked formulation of the same scheme: per-bit instances, then the
/// hash-and-sign layer, then unbounded issuance, then salting.
pub type ComposedCtmac = Tms<Tom<Ot<Otl<CtmacBase>>>>;

pub fn composed_ctmac(
    outer_lambda: usize,
    sub_lambda: usize,
    ell_prime: usize,
    eta: f64,
) -> ComposedCtmac {
    let ell = ell_prime + outer_lambda;
    Tms::new(
        Tom::new(Ot::new(
            Otl::new(CtmacBase::new(sub_lambda, eta), ell),
            outer_lambda,
            ell_prime,
        )),
        outer_lambda,
    )
}
