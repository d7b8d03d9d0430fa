//! Independent per-qubit noise channels.
//!
//! The channel hits each qubit independently with probability `p` and
//! otherwise leaves it alone. On the BB84 states every supported map has an
//! exact symbolic action (up to a global phase, which nothing downstream
//! can observe):
//!
//! * `PauliX` flips the stored bit in the computational basis and fixes
//!   `|+>`, `|->`.
//! * `PauliZ` flips the stored bit in the Hadamard basis and fixes
//!   `|0>`, `|1>`.
//! * `PauliY = iXZ` flips the stored bit in both bases. This is the
//!   worst-case map for the protocols here: whichever basis a coordinate is
//!   later checked in, a `Y` hit shows up as a flipped bit.
//! * `Depolarize` replaces the qubit by the maximally mixed state. (The
//!   usual convention replaces with probability `p` inside the channel; we
//!   fold that into the per-qubit hit probability, so a hit replaces
//!   exactly.)
//! * `ReplaceUniform` replaces the qubit by a fresh uniformly random BB84
//!   state: new bit and new basis both uniform.

use rand::Rng;

use crate::rng::stream;
use crate::state::{Basis, QubitState};

/// Which Pauli/replacement map a noise hit applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseKind {
    PauliX,
    PauliY,
    PauliZ,
    Depolarize,
    ReplaceUniform,
}

/// An i.i.d. per-qubit corruption channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    /// Per-qubit hit probability, in `[0, 1]`.
    pub p: f64,
    pub map: NoiseKind,
}

impl NoiseSpec {
    pub fn new(p: f64, map: NoiseKind) -> Self {
        assert!((0.0..=1.0).contains(&p), "noise probability must lie in [0, 1], got {p}");
        NoiseSpec { p, map }
    }
}

fn hit(q: QubitState, map: NoiseKind, rng: &mut impl Rng) -> QubitState {
    match map {
        NoiseKind::PauliX => crate::state::pauli_x(q),
        NoiseKind::PauliY => crate::state::pauli_y(q),
        NoiseKind::PauliZ => crate::state::pauli_z(q),
        NoiseKind::Depolarize => QubitState::MaximallyMixed,
        NoiseKind::ReplaceUniform => QubitState::pure(rng.gen(), Basis::from_bit(rng.gen())),
    }
}

/// Pass a register through the channel, returning the corrupted register.
///
/// Each qubit's randomness comes from its own counter-derived stream, so
/// whether and how noise hits coordinate `i` is a function of `(draw, i)`
/// alone: changing the state at, or the map's effect on, any other
/// coordinate cannot alter the outcome at `i`. The caller's RNG is consumed
/// exactly once (for the draw seed) regardless of register length.
pub fn apply_noise<R: Rng + ?Sized>(
    register: &[QubitState],
    spec: &NoiseSpec,
    rng: &mut R,
) -> Vec<QubitState> {
    let draw: u64 = rng.gen();
    register
        .iter()
        .enumerate()
        .map(|(i, &q)| {
            let mut qrng = stream(draw, i as u64);
            if qrng.gen::<f64>() < spec.p {
                hit(q, spec.map, &mut qrng)
            } else {
                q
            }
        })
        .collect()
}
