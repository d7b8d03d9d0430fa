//! Dense statevector registers.
//!
//! This is the slow, honest implementation the symbolic simulator is
//! checked against, and the machinery for games that hand an adversary a
//! coherent register. Qubit `i` occupies bit `i` of the amplitude index
//! (little-endian), so amplitude `amps[x]` belongs to the computational
//! basis state whose `i`-th qubit reads `(x >> i) & 1`.
//!
//! Registers are capped at 14 qubits: the games that need coherent access
//! stay below that, and the cap keeps an accidental 2^lambda allocation
//! from looking like a supported operation.

use num_complex::Complex64;
use rand::Rng;
use thiserror::Error;

use crate::state::{Basis, QubitState};

/// Largest register `sv_prepare` will build.
pub const MAX_QUBITS: usize = 14;

const NORM_TOL: f64 = 1e-9;
const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateVectorError {
    #[error("register of {0} qubits exceeds the {MAX_QUBITS}-qubit statevector cap")]
    OversizeRegister(usize),
    #[error("maximally mixed qubits have no statevector representation")]
    MixedStateUnsupported,
    #[error("expected {expected} basis choices, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("amplitude vector length {0} is not a power of two")]
    BadLength(usize),
    #[error("state norm deviates from 1 by more than {NORM_TOL}")]
    NotNormalized,
}

/// A normalized pure state on `n` qubits.
#[derive(Debug, Clone)]
pub struct StateVector {
    amps: Vec<Complex64>,
    n: usize,
}

impl StateVector {
    /// Wrap raw amplitudes, checking the type invariants: power-of-two
    /// length and unit norm within `1e-9`.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self, StateVectorError> {
        if amps.is_empty() || !amps.len().is_power_of_two() {
            return Err(StateVectorError::BadLength(amps.len()));
        }
        let n = amps.len().trailing_zeros() as usize;
        if n > MAX_QUBITS {
            return Err(StateVectorError::OversizeRegister(n));
        }
        let sv = StateVector { amps, n };
        if !sv.is_normalized() {
            return Err(StateVectorError::NotNormalized);
        }
        Ok(sv)
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn is_normalized(&self) -> bool {
        let norm2: f64 = self.amps.iter().map(|a| a.norm_sqr()).sum();
        (norm2.sqrt() - 1.0).abs() <= NORM_TOL
    }

    /// Apply a single-qubit unitary `u` (row-major 2x2) to qubit `i`.
    pub fn apply_one_qubit(&mut self, i: usize, u: [[Complex64; 2]; 2]) {
        assert!(i < self.n, "qubit index {i} out of range for {}-qubit register", self.n);
        let bit = 1usize << i;
        for x in 0..self.amps.len() {
            if x & bit == 0 {
                let a0 = self.amps[x];
                let a1 = self.amps[x | bit];
                self.amps[x] = u[0][0] * a0 + u[0][1] * a1;
                self.amps[x | bit] = u[1][0] * a0 + u[1][1] * a1;
            }
        }
    }

    /// Hadamard on qubit `i`.
    pub fn apply_h(&mut self, i: usize) {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        self.apply_one_qubit(i, [[h, h], [h, -h]]);
    }

    /// Pauli X on qubit `i`.
    pub fn apply_x(&mut self, i: usize) {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        self.apply_one_qubit(i, [[zero, one], [one, zero]]);
    }

    /// Measure the boolean observable `f` of the computational basis index:
    /// mark every basis state `x` with `f(x)`, measure the mark, collapse.
    ///
    /// This is the reversible-marking-then-measure primitive a coherent
    /// oracle query compiles to. The post-measurement state is renormalized
    /// in place and the sampled mark returned.
    pub fn measure_predicate<R: Rng + ?Sized>(
        &mut self,
        f: impl Fn(usize) -> bool,
        rng: &mut R,
    ) -> bool {
        let p_one: f64 = self
            .amps
            .iter()
            .enumerate()
            .filter(|(x, _)| f(*x))
            .map(|(_, a)| a.norm_sqr())
            .sum();
        let outcome = rng.gen::<f64>() < p_one;
        let keep = if outcome { p_one } else { 1.0 - p_one };
        // keep > 0: the sampled branch has positive probability.
        let scale = 1.0 / keep.sqrt();
        for (x, a) in self.amps.iter_mut().enumerate() {
            if f(x) == outcome {
                *a *= scale;
            } else {
                *a = Complex64::new(0.0, 0.0);
            }
        }
        outcome
    }

    /// Sample a full computational-basis measurement, consuming the state.
    pub fn measure_all<R: Rng + ?Sized>(self, rng: &mut R) -> Vec<bool> {
        let mut target = rng.gen::<f64>();
        let mut chosen = self.amps.len() - 1;
        for (x, a) in self.amps.iter().enumerate() {
            target -= a.norm_sqr();
            if target < 0.0 {
                chosen = x;
                break;
            }
        }
        (0..self.n).map(|i| (chosen >> i) & 1 == 1).collect()
    }
}

/// Build the statevector of a register of pure BB84 qubits.
///
/// The empty register yields the scalar state `[1]`. Mixed qubits are
/// rejected: they have no pure-state representation and the callers that
/// need them never take this path.
pub fn sv_prepare(register: &[QubitState]) -> Result<StateVector, StateVectorError> {
    if register.len() > MAX_QUBITS {
        return Err(StateVectorError::OversizeRegister(register.len()));
    }
    let mut amps = vec![Complex64::new(1.0, 0.0)];
    for (i, q) in register.iter().enumerate() {
        let (a0, a1) = match *q {
            QubitState::Pure { bit, basis: Basis::Computational } => {
                if bit {
                    (0.0, 1.0)
                } else {
                    (1.0, 0.0)
                }
            }
            QubitState::Pure { bit, basis: Basis::Hadamard } => {
                if bit {
                    (FRAC_1_SQRT_2, -FRAC_1_SQRT_2)
                } else {
                    (FRAC_1_SQRT_2, FRAC_1_SQRT_2)
                }
            }
            QubitState::MaximallyMixed => return Err(StateVectorError::MixedStateUnsupported),
        };
        // Tensor the new qubit onto the high end; it occupies bit i.
        let mut next = vec![Complex64::new(0.0, 0.0); amps.len() * 2];
        for (x, amp) in amps.iter().enumerate() {
            next[x] = amp * a0;
            next[x | (1 << i)] = amp * a1;
        }
        amps = next;
    }
    Ok(StateVector { n: register.len(), amps })
}

/// Measure every qubit, the `i`-th in `bases[i]`, consuming the register.
///
/// Hadamard-basis coordinates are rotated into the computational basis and
/// the whole register is then sampled once.
pub fn sv_measure_all<R: Rng + ?Sized>(
    mut sv: StateVector,
    bases: &[Basis],
    rng: &mut R,
) -> Result<Vec<bool>, StateVectorError> {
    if bases.len() != sv.n {
        return Err(StateVectorError::LengthMismatch { expected: sv.n, got: bases.len() });
    }
    for (i, &b) in bases.iter().enumerate() {
        if b == Basis::Hadamard {
            sv.apply_h(i);
        }
    }
    Ok(sv.measure_all(rng))
}
