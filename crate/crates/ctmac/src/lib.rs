//! One-bit tokenized message authentication over conjugate coding.
//!
//! The signer holds a quantum token of `lambda` BB84 qubits; the verifier
//! holds the classical key behind it. To sign the single-bit document `m`
//! the signer measures every token qubit in basis `m` and sends the
//! outcomes. The verifier knows which coordinates were encoded in basis `m`
//! (the *consistent* set) and checks the outcomes there; coordinates encoded
//! in the conjugate basis are random coins and carry no information.
//!
//! Verification takes a tolerance `eta`: up to `eta * lambda` failures
//! inside the consistent set are forgiven, which is what makes the scheme
//! usable over a noisy channel. `eta = 0` is the exact-match scheme.
//!
//! Verification is deterministic and classical. That is load-bearing for
//! two of the security games downstream (re-verification can never change
//! its mind, and a verification oracle can be queried in superposition),
//! so `verify` takes no RNG by design.

use bb84::{measure, Basis, NoiseSpec, QubitState};
use rand::Rng;
use thiserror::Error;

pub mod codec;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CtmacError {
    #[error("key length must be at least 1")]
    ZeroLength,
    #[error("token already consumed by a previous sign")]
    TokenConsumed,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Classical key: bit vector `a` (the encoded bits) and basis vector `b`.
/// Both have length `lambda >= 1`; the pair is kept consistent by
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecretKey1 {
    a: Vec<bool>,
    b: Vec<bool>,
}

impl SecretKey1 {
    /// Assemble a key from raw vectors, enforcing the length invariants.
    pub fn new(a: Vec<bool>, b: Vec<bool>) -> Result<Self, CtmacError> {
        if a.is_empty() {
            return Err(CtmacError::ZeroLength);
        }
        if a.len() != b.len() {
            return Err(CtmacError::LengthMismatch { expected: a.len(), got: b.len() });
        }
        Ok(SecretKey1 { a, b })
    }

    pub fn lambda(&self) -> usize {
        self.a.len()
    }

    /// Encoded bits.
    pub fn a(&self) -> &[bool] {
        &self.a
    }

    /// Encoding bases (`false` = computational, `true` = Hadamard).
    pub fn b(&self) -> &[bool] {
        &self.b
    }

    /// Coordinates whose encoding basis matches document `m`.
    pub fn consistent_set(&self, m: bool) -> Vec<usize> {
        (0..self.lambda()).filter(|&i| self.b[i] == m).collect()
    }
}

/// The quantum token `H^b |a>`. Single-use: the first `sign` consumes it.
#[derive(Debug, Clone)]
pub struct Token {
    qubits: Vec<QubitState>,
    consumed: bool,
}

impl Token {
    pub fn lambda(&self) -> usize {
        self.qubits.len()
    }

    pub fn is_consumed(&self) -> bool {
        self.consumed
    }

    /// Read access to the register, for channels and for adversaries in the
    /// security games (the simulator is omniscient; the *schemes* never look).
    pub fn qubits(&self) -> &[QubitState] {
        &self.qubits
    }

    /// Mutable register access for adversarial gate application.
    pub fn qubits_mut(&mut self) -> &mut [QubitState] {
        &mut self.qubits
    }

    /// Send the token through a noisy channel in place.
    pub fn apply_noise<R: Rng + ?Sized>(&mut self, spec: &NoiseSpec, rng: &mut R) {
        self.qubits = bb84::apply_noise(&self.qubits, spec, rng);
    }
}

/// Signature on a one-bit document: the `lambda` measurement outcomes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature1 {
    pub bits: Vec<bool>,
}

/// Everything `verify` decided and why.
///
/// Invariants: `miss` is a subset of `cons`; `accepted` holds exactly when
/// `miss.len() as f64 <= threshold` with `threshold = eta * lambda`
/// compared as reals (no flooring).
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    /// Coordinates checked: `{ i : b_i == m }`.
    pub cons: Vec<usize>,
    /// Checked coordinates whose signature bit disagrees with `a`.
    pub miss: Vec<usize>,
    /// `eta * lambda`, the largest tolerated miss count.
    pub threshold: f64,
    pub accepted: bool,
}

/// Sample a fresh key: `a` and `b` uniform in `{0,1}^lambda`.
pub fn key_gen<R: Rng + ?Sized>(lambda: usize, rng: &mut R) -> Result<SecretKey1, CtmacError> {
    if lambda == 0 {
        return Err(CtmacError::ZeroLength);
    }
    let a = (0..lambda).map(|_| rng.gen()).collect();
    let b = (0..lambda).map(|_| rng.gen()).collect();
    Ok(SecretKey1 { a, b })
}

/// Prepare the token for `key`: qubit `i` is `H^{b_i} |a_i>`.
pub fn token_gen(key: &SecretKey1) -> Token {
    let qubits = key
        .a
        .iter()
        .zip(&key.b)
        .map(|(&bit, &basis)| QubitState::pure(bit, Basis::from_bit(basis)))
        .collect();
    Token { qubits, consumed: false }
}

/// Sign document `m`: measure every qubit in basis `m`, consuming the token.
pub fn sign<R: Rng + ?Sized>(
    token: &mut Token,
    m: bool,
    rng: &mut R,
) -> Result<Signature1, CtmacError> {
    if token.consumed {
        return Err(CtmacError::TokenConsumed);
    }
    token.consumed = true;
    let basis = Basis::from_bit(m);
    let bits = token.qubits.iter().map(|&q| measure(q, basis, rng)).collect();
    Ok(Signature1 { bits })
}

/// Check `sig` against `key` for document `m` at tolerance `eta`.
///
/// Deterministic; callable any number of times. Only the consistent set is
/// inspected, and the signature is accepted iff at most `eta * lambda` of
/// those coordinates disagree with the key.
pub fn verify(
    key: &SecretKey1,
    m: bool,
    sig: &Signature1,
    eta: f64,
) -> Result<VerifyReport, CtmacError> {
    assert!(eta >= 0.0, "tolerance must be non-negative, got {eta}");
    if sig.bits.len() != key.lambda() {
        return Err(CtmacError::LengthMismatch { expected: key.lambda(), got: sig.bits.len() });
    }
    let cons = key.consistent_set(m);
    let miss: Vec<usize> = cons.iter().copied().filter(|&i| sig.bits[i] != key.a[i]).collect();
    let threshold = eta * key.lambda() as f64;
    let accepted = miss.len() as f64 <= threshold;
    Ok(VerifyReport { cons, miss, threshold, accepted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use bb84::rng::stream;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    /// The worked four-qubit example: a = 1010, b = 0110, document 0.
    /// Consistent set {0, 3}; the signature is judged only there.
    #[test]
    fn four_qubit_worked_example() {
        let key = SecretKey1::new(bits("1010"), bits("0110")).unwrap();
        let ok = verify(&key, false, &Signature1 { bits: bits("1110") }, 0.0).unwrap();
        assert_eq!(ok.cons, vec![0, 3]);
        assert!(ok.miss.is_empty());
        assert!(ok.accepted);

        let one_miss = verify(&key, false, &Signature1 { bits: bits("0110") }, 0.0).unwrap();
        assert_eq!(one_miss.miss, vec![0]);
        assert!(!one_miss.accepted, "a single miss must fail at eta = 0");

        let tolerated = verify(&key, false, &Signature1 { bits: bits("0110") }, 0.25).unwrap();
        assert_eq!(tolerated.threshold, 1.0);
        assert!(tolerated.accepted, "one miss is within 0.25 * 4");
    }

    #[test]
    fn zero_length_keys_are_rejected() {
        assert_eq!(key_gen(0, &mut stream(0, 0)).unwrap_err(), CtmacError::ZeroLength);
        assert_eq!(SecretKey1::new(vec![], vec![]).unwrap_err(), CtmacError::ZeroLength);
    }

    #[test]
    fn mismatched_key_vectors_are_rejected() {
        let err = SecretKey1::new(bits("10"), bits("101")).unwrap_err();
        assert_eq!(err, CtmacError::LengthMismatch { expected: 2, got: 3 });
    }

    #[test]
    fn signature_length_is_checked() {
        let key = key_gen(8, &mut stream(1, 0)).unwrap();
        let err = verify(&key, false, &Signature1 { bits: bits("101") }, 0.0).unwrap_err();
        assert_eq!(err, CtmacError::LengthMismatch { expected: 8, got: 3 });
    }

    #[test]
    fn tokens_are_single_use() {
        let mut rng = stream(2, 0);
        let key = key_gen(16, &mut rng).unwrap();
        let mut token = token_gen(&key);
        assert!(!token.is_consumed());
        sign(&mut token, true, &mut rng).unwrap();
        assert!(token.is_consumed());
        assert_eq!(sign(&mut token, false, &mut rng).unwrap_err(), CtmacError::TokenConsumed);
    }

    #[test]
    fn threshold_is_compared_as_a_real() {
        // lambda = 3, eta = 0.5: threshold 1.5, so 1 miss passes and 2 fail;
        // nothing is rounded to 1 or 2.
        let key = SecretKey1::new(bits("111"), bits("000")).unwrap();
        let r1 = verify(&key, false, &Signature1 { bits: bits("110") }, 0.5).unwrap();
        assert_eq!(r1.threshold, 1.5);
        assert!(r1.accepted);
        let r2 = verify(&key, false, &Signature1 { bits: bits("100") }, 0.5).unwrap();
        assert!(!r2.accepted);
    }
}
