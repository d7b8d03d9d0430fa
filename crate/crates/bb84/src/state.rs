//! Symbolic BB84 states and single-qubit measurement.

use rand::Rng;

/// One of the two conjugate measurement bases.
///
/// `Computational` is the `{|0>, |1>}` basis, `Hadamard` the `{|+>, |->}`
/// basis. Protocol documents select bases by bit, so conversions to and
/// from `bool` are provided: `false` is computational, `true` is Hadamard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Computational,
    Hadamard,
}

impl Basis {
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Basis::Hadamard
        } else {
            Basis::Computational
        }
    }

    pub fn as_bit(self) -> bool {
        self == Basis::Hadamard
    }

    /// The other basis.
    pub fn conjugate(self) -> Self {
        match self {
            Basis::Computational => Basis::Hadamard,
            Basis::Hadamard => Basis::Computational,
        }
    }
}

/// A single qubit as the protocols use it.
///
/// `Pure { bit, basis }` is `H^basis |bit>`; `MaximallyMixed` is `I/2`,
/// which is what depolarizing noise produces. No other states arise, so the
/// simulator does not represent them (coherent registers live in
/// [`crate::statevec`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QubitState {
    Pure { bit: bool, basis: Basis },
    MaximallyMixed,
}

impl QubitState {
    pub fn pure(bit: bool, basis: Basis) -> Self {
        QubitState::Pure { bit, basis }
    }
}

/// Pauli X as a deliberate gate: flips the stored bit of a computational
/// qubit, fixes Hadamard-basis states (up to the dropped global phase), and
/// fixes the mixed state.
pub fn pauli_x(q: QubitState) -> QubitState {
    match q {
        QubitState::Pure { bit, basis: Basis::Computational } => {
            QubitState::pure(!bit, Basis::Computational)
        }
        other => other,
    }
}

/// Pauli Z: flips the stored bit of a Hadamard-basis qubit, fixes the rest.
pub fn pauli_z(q: QubitState) -> QubitState {
    match q {
        QubitState::Pure { bit, basis: Basis::Hadamard } => QubitState::pure(!bit, Basis::Hadamard),
        other => other,
    }
}

/// Pauli Y = iXZ: flips the stored bit in either basis.
pub fn pauli_y(q: QubitState) -> QubitState {
    match q {
        QubitState::Pure { bit, basis } => QubitState::pure(!bit, basis),
        QubitState::MaximallyMixed => QubitState::MaximallyMixed,
    }
}

/// Hadamard: exchanges the two bases and keeps the stored bit
/// (`H|0> = |+>`, `H|1> = |->`, and H is an involution).
pub fn hadamard(q: QubitState) -> QubitState {
    match q {
        QubitState::Pure { bit, basis } => QubitState::pure(bit, basis.conjugate()),
        QubitState::MaximallyMixed => QubitState::MaximallyMixed,
    }
}

/// Measure a qubit in `basis`, consuming it conceptually.
///
/// A pure state measured in its own basis returns the stored bit with
/// certainty. Measured in the conjugate basis the outcome is an unbiased
/// coin, and the same holds for the maximally mixed state; both follow from
/// `|<x|H|y>|^2 = 1/2` for computational `x, y`.
pub fn measure<R: Rng + ?Sized>(q: QubitState, basis: Basis, rng: &mut R) -> bool {
    match q {
        QubitState::Pure { bit, basis: b } if b == basis => bit,
        QubitState::Pure { .. } | QubitState::MaximallyMixed => rng.gen(),
    }
}
