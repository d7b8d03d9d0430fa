//! Conjugate-coding qubit model.
//!
//! Everything downstream of this crate manipulates registers of BB84 states:
//! a qubit is either `|0>`, `|1>`, `|+>`, `|->` (a classical bit stored in
//! one of two conjugate bases) or the maximally mixed state. Because the
//! protocols only ever prepare these states and measure in one of the two
//! bases, the whole simulation can run symbolically: a measurement in the
//! matching basis returns the stored bit, a measurement in the conjugate
//! basis returns a fresh coin. Global phases are dropped throughout; no
//! operation in this crate can observe one.
//!
//! The [`statevec`] module carries an independent dense statevector
//! implementation of the same operations. It exists so the symbolic fast
//! path can be checked against textbook linear algebra, and so that games
//! which need genuinely coherent queries (superposition access to a
//! verification oracle) have an honest register to act on.
//!
//! Randomness is explicit everywhere. Experiments derive one RNG stream per
//! trial from a master seed with [`rng::stream`]; nothing in this workspace
//! touches ambient randomness.

pub mod noise;
pub mod rng;
pub mod state;
pub mod statevec;

pub use noise::{apply_noise, NoiseKind, NoiseSpec};
pub use state::{hadamard, measure, pauli_x, pauli_y, pauli_z, Basis, QubitState};
pub use statevec::{sv_measure_all, sv_prepare, StateVector, StateVectorError};
