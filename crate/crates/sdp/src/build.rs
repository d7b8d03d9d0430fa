//! The two-round deletion game as a semidefinite program in standard form.
//!
//! Setting: the challenger draws a key bit and a message bit uniformly,
//! encodes the message in the conjugate-coding basis named by the key, and
//! sends that single qubit out. The adversary must first return a classical
//! deletion certificate, only then receives the key, and finally returns a
//! guess for the message. It wins when the guess is right and the
//! certificate agrees with the message on coordinates whose key bit matches
//! the deletion basis `m` (a certificate produced by honestly measuring in
//! basis `m` is checkable exactly there).
//!
//! Purifying the challenger turns the interaction into matrix constraints:
//! whatever the adversary does between rounds cannot change the reduced
//! state on the registers it never held. One positive-semidefinite variable
//! on stage ⊗ wires suffices, with the stage digit selecting "after round
//! one" (block 0) or "after round two" (block 1).

use crate::herm::{C64, HermitianMatrix};
use crate::layout::{RegisterLayout, partial_trace, reg};
use crate::problem::{Constraint, SandwichTrace, SdpProblem};
use nalgebra::{DMatrix, DVector};
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_8, SQRT_2};

/// Optimal worth of the game for either deletion basis: cos²(π/8), the
/// success rate of measuring in the basis halfway between the two encoding
/// bases. Equals (2+√2)/4.
pub fn weak_del_optimal_value() -> f64 {
    (2.0 + SQRT_2) / 4.0
}

/// Amplitudes of the encoded qubit: the message bit `a` in basis `k`
/// (0 computational, 1 conjugate).
fn encoded_qubit(k: usize, a: usize) -> [f64; 2] {
    match k {
        0 => {
            let mut e = [0.0; 2];
            e[a] = 1.0;
            e
        }
        _ => [
            FRAC_1_SQRT_2,
            if a == 0 { FRAC_1_SQRT_2 } else { -FRAC_1_SQRT_2 },
        ],
    }
}

/// The challenger's purified state before the adversary touches anything,
/// on the five game wires (dimension 32).
///
/// Uniform superposition over key and message of: pad mirroring the
/// message, the encoded qubit on the certificate wire, and the key copied
/// onto the guess wire and the key register.
pub fn weak_del_initial_state() -> HermitianMatrix {
    let wires = RegisterLayout::game_wires();
    let mut psi = DVector::<C64>::zeros(wires.total());
    for k in 0..2 {
        for a in 0..2 {
            let cipher = encoded_qubit(k, a);
            for c in 0..2 {
                // (pad, cert, guess, key, msg) = (a, c, k, k, a)
                let idx = 16 * a + 8 * c + 4 * k + 2 * k + a;
                psi[idx] += C64::from(0.5 * cipher[c]);
            }
        }
    }
    HermitianMatrix::wrap(&psi * psi.adjoint())
}

/// The accepting projector on the five game wires (dimension 32), diagonal
/// in the computational basis because both returned messages are classical:
/// the guess must equal the message, and the certificate must equal the
/// message wherever the key bit equals the deletion basis `m`. The pad is
/// never inspected.
pub fn weak_del_verifier(m: u8) -> HermitianMatrix {
    assert!(m <= 1, "the deletion basis is a bit");
    let dim = RegisterLayout::game_wires().total();
    let mut pi = DMatrix::<C64>::zeros(dim, dim);
    for idx in 0..dim {
        let cert = (idx >> 3) & 1;
        let guess = (idx >> 2) & 1;
        let key = (idx >> 1) & 1;
        let msg = idx & 1;
        let cert_checkable = key == m as usize;
        if (!cert_checkable || cert == msg) && guess == msg {
            pi[(idx, idx)] = C64::from(1.0);
        }
    }
    HermitianMatrix::wrap(pi)
}

/// Projector onto stage block `s` of the full 64-dimensional space.
fn stage_projector(s: usize) -> DMatrix<C64> {
    let mut g = DMatrix::<C64>::zeros(64, 64);
    for i in 0..32 {
        g[(32 * s + i, 32 * s + i)] = C64::from(1.0);
    }
    g
}

/// Assembles the game for deletion basis `m` in standard form.
///
/// Objective: the verifier on stage block 1 (the state after the guess
/// comes back). Constraints, writing `rho_s` for stage block `s`:
///
/// 1. tracing the certificate wire out of `rho_0` gives the matching trace
///    of the initial state (round one only touches that wire),
/// 2. tracing the guess wire out of `rho_1 - rho_0` gives zero (round two
///    only touches the guess wire),
/// 3. `Tr(rho_0) = 1`,
/// 4. `Tr(rho_1) = 1`.
///
/// Feasible points are exactly the (purification-equivalent) two-round
/// adversary strategies, so the optimal value is the best possible win
/// probability.
pub fn build_weak_del_sdp(m: u8) -> SdpProblem {
    assert!(m <= 1, "the deletion basis is a bit");
    let layout = RegisterLayout::weak_deletion();
    let wires = RegisterLayout::game_wires();

    let sigma0 = weak_del_initial_state();
    let pi = weak_del_verifier(m);

    let mut q = DMatrix::<C64>::zeros(64, 64);
    q.view_mut((32, 32), (32, 32)).copy_from(pi.matrix());
    let objective = HermitianMatrix::wrap(q);

    let gamma0 = stage_projector(0);
    let gamma1 = stage_projector(1);

    // factor 1 of the wire layout is the certificate wire, factor 2 the
    // guess wire (the full layout shifts them by one for the stage digit)
    let cert_reduced = partial_trace(&sigma0, &wires, &[reg::CERT_WIRE - 1])
        .expect("initial state matches the wire layout");
    let out_dim = cert_reduced.dim();

    let all_factors: Vec<usize> = (0..layout.factor_count()).collect();
    let constraints = vec![
        Constraint {
            map: SandwichTrace::new(
                vec![(1.0, gamma0.clone())],
                vec![reg::STAGE, reg::CERT_WIRE],
            ),
            target: cert_reduced,
        },
        Constraint {
            map: SandwichTrace::new(
                vec![(1.0, gamma1.clone()), (-1.0, gamma0.clone())],
                vec![reg::STAGE, reg::GUESS_WIRE],
            ),
            target: HermitianMatrix::zeros(out_dim),
        },
        Constraint {
            map: SandwichTrace::new(vec![(1.0, gamma0)], all_factors.clone()),
            target: HermitianMatrix::scalar(1.0),
        },
        Constraint {
            map: SandwichTrace::new(vec![(1.0, gamma1)], all_factors),
            target: HermitianMatrix::scalar(1.0),
        },
    ];

    SdpProblem {
        layout,
        objective,
        constraints,
    }
}

/// Overlap of intermediate-basis vector `w` with the encoded qubit `(k, a)`.
fn intermediate_overlap(w: usize, k: usize, a: usize) -> f64 {
    let beta = match w {
        0 => [FRAC_PI_8.cos(), FRAC_PI_8.sin()],
        _ => [-FRAC_PI_8.sin(), FRAC_PI_8.cos()],
    };
    let e = encoded_qubit(k, a);
    beta[0] * e[0] + beta[1] * e[1]
}

/// The measure-in-the-middle strategy written down as a feasible point of
/// [`build_weak_del_sdp`] (either basis; the strategy never looks at `m`).
///
/// Round one: measure the incoming qubit in the basis rotated π/8 from
/// computational, write the outcome on the certificate wire. Round two:
/// overwrite the guess wire with the same remembered outcome. The outcome
/// agrees with the message with probability cos²(π/8) in both encoding
/// bases at once, which is the whole point of measuring in the middle, so
/// the objective of this point is exactly [`weak_del_optimal_value`].
pub fn breidbart_point() -> HermitianMatrix {
    let mut rho = DMatrix::<C64>::zeros(64, 64);

    // stage 0: certificate written, coherence across key and message kept;
    // branch w is the measurement outcome
    for w in 0..2 {
        let mut u = DVector::<C64>::zeros(32);
        for k in 0..2 {
            for a in 0..2 {
                // (pad, cert, guess, key, msg) = (a, w, k, k, a)
                u[17 * a + 8 * w + 6 * k] = C64::from(0.5 * intermediate_overlap(w, k, a));
            }
        }
        let outer = &u * u.adjoint();
        let mut block = rho.view_mut((0, 0), (32, 32));
        block += outer;
    }

    // stage 1: guess wire overwritten with the outcome; handing the key
    // copy to the adversary decoheres the key digit, hence one rank-one
    // piece per (outcome, key) pair
    for w in 0..2 {
        for k in 0..2 {
            let mut y = DVector::<C64>::zeros(32);
            for a in 0..2 {
                // (pad, cert, guess, key, msg) = (a, w, w, k, a)
                y[17 * a + 12 * w + 2 * k] = C64::from(0.5 * intermediate_overlap(w, k, a));
            }
            let outer = &y * y.adjoint();
            let mut block = rho.view_mut((32, 32), (32, 32));
            block += outer;
        }
    }

    HermitianMatrix::wrap(rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_state_amplitudes_are_the_four_branches() {
        let sigma = weak_del_initial_state();
        // diagonal entries are |amplitude|^2 of the six nonzero components
        let half_sq = 0.25;
        let eighth = 0.125; // (1/(2*sqrt 2))^2
        let expected = [
            (0usize, half_sq),  // key 0, msg 0: |0> on the cert wire
            (25, half_sq),      // key 0, msg 1: |1>
            (6, eighth),        // key 1, msg 0: |+> component 0
            (14, eighth),       // key 1, msg 0: |+> component 1
            (23, eighth),       // key 1, msg 1: |-> component 0
            (31, eighth),       // key 1, msg 1: |-> component 1
        ];
        let mut total = 0.0;
        for &(idx, val) in &expected {
            assert!((sigma.entry(idx, idx).re - val).abs() < 1e-15);
            total += val;
        }
        assert!((total - 1.0).abs() < 1e-15);
        assert!((sigma.trace() - 1.0).abs() < 1e-15);
        // the conjugate-basis cross terms carry the sign of |->
        assert!((sigma.entry(23, 31).re + eighth).abs() < 1e-15);
        assert!((sigma.entry(6, 14).re - eighth).abs() < 1e-15);
    }

    #[test]
    fn verifier_counts_match_the_acceptance_predicate() {
        for m in 0..=1u8 {
            let pi = weak_del_verifier(m);
            // per pad value: 2 accepted patterns with a checkable
            // certificate, 4 with a free one
            assert!((pi.trace() - 12.0).abs() < 1e-12);
        }
        // the two verifiers differ exactly on the certificate-checkable set
        let a = weak_del_verifier(0);
        let b = weak_del_verifier(1);
        assert_ne!(a.matrix(), b.matrix());
    }

    #[test]
    fn intermediate_overlaps_square_to_the_optimum() {
        // the defining property of the middle basis: outcome w matches the
        // message with probability cos²(π/8) in either encoding basis
        for k in 0..2 {
            for a in 0..2 {
                let agree = intermediate_overlap(a, k, a).powi(2);
                assert!((agree - weak_del_optimal_value()).abs() < 1e-15);
            }
        }
    }
}
