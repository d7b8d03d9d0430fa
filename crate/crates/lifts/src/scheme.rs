//! The scheme interface every lifting layer consumes and produces.
//!
//! Documents are bit slices throughout; [`DocumentDomain`] says which
//! lengths a scheme admits. Tokens are owned, single-use values: `sign`
//! consumes its token, so double-signing is unrepresentable. `token_gen`
//! borrows the key mutably because one layer (the j-token wrapper) spends a
//! one-time pad per issued token; every other layer leaves the key alone.

use bb84::NoiseSpec;
use rand::RngCore;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentDomain {
    SingleBit,
    FixedLength(usize),
    Unrestricted,
}

impl DocumentDomain {
    pub fn admits(&self, len: usize) -> bool {
        match self {
            DocumentDomain::SingleBit => len == 1,
            DocumentDomain::FixedLength(ell) => len == *ell,
            DocumentDomain::Unrestricted => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("document of {got} bits is outside the scheme domain {expected:?}")]
    DomainMismatch { expected: DocumentDomain, got: usize },
    #[error("token was already consumed")]
    TokenConsumed,
    #[error("token budget of {0} issuances is exhausted")]
    TokenBudgetExhausted(usize),
}

/// A tokenized MAC: four algorithms plus enough introspection to corrupt
/// tokens in experiments and to move keys and signatures over a wire.
///
/// Correctness contract: for every in-domain document, `verify` accepts the
/// signature produced by `sign` on an untouched token, with probability one.
/// `verify` itself is deterministic; all randomness is drawn in `key_gen`,
/// `token_gen` and `sign`.
pub trait TmacScheme {
    type Key;
    type Token;
    type Signature;

    fn document_domain(&self) -> DocumentDomain;

    fn key_gen(&self, rng: &mut dyn RngCore) -> Self::Key;

    fn token_gen(&self, key: &mut Self::Key, rng: &mut dyn RngCore)
        -> Result<Self::Token, LiftError>;

    fn sign(
        &self,
        token: Self::Token,
        document: &[bool],
        rng: &mut dyn RngCore,
    ) -> Result<Self::Signature, LiftError>;

    fn verify(&self, key: &Self::Key, document: &[bool], signature: &Self::Signature) -> bool;

    /// Every quantum register inside the token, in a fixed layer order.
    /// The slices let experiments inject channel noise and let tests assert
    /// that tokens stay conjugate-coding states no matter how many layers
    /// wrap them.
    fn quantum_parts<'a>(&self, token: &'a Self::Token) -> Vec<&'a ctmac::Token>;
    fn quantum_parts_mut<'a>(&self, token: &'a mut Self::Token) -> Vec<&'a mut ctmac::Token>;

    fn key_to_bytes(&self, key: &Self::Key) -> Vec<u8>;
    fn key_from_bytes(&self, bytes: &[u8]) -> Option<Self::Key>;
    fn sig_to_bytes(&self, signature: &Self::Signature) -> Vec<u8>;
    fn sig_from_bytes(&self, bytes: &[u8]) -> Option<Self::Signature>;
}

/// Run every quantum register of a token through the channel.
pub fn corrupt_token<S: TmacScheme>(
    scheme: &S,
    token: &mut S::Token,
    noise: &NoiseSpec,
    rng: &mut dyn RngCore,
) {
    for part in scheme.quantum_parts_mut(token) {
        part.apply_noise(noise, rng);
    }
}

/// MSB-first bit view of a byte string, the conventional document encoding
/// for unrestricted schemes.
pub fn bytes_to_bits(bytes: &[u8]) -> Vec<bool> {
    let mut bits = Vec::with_capacity(bytes.len() * 8);
    for byte in bytes {
        for i in 0..8 {
            bits.push(byte & (0x80 >> i) != 0);
        }
    }
    bits
}
