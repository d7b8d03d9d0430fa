//! The symbolic measurement path and the dense statevector path implement
//! the same physics. Matched-basis measurements must agree exactly;
//! conjugate-basis and mixed-state measurements must both be unbiased
//! coins, checked by chi-square at p > 0.01.

use bb84::rng::stream;
use bb84::{measure, sv_measure_all, sv_prepare, Basis, QubitState};
use stats::fair_coin_chi_square_ok;

const ALL_STATES: [QubitState; 4] = [
    QubitState::Pure { bit: false, basis: Basis::Computational },
    QubitState::Pure { bit: true, basis: Basis::Computational },
    QubitState::Pure { bit: false, basis: Basis::Hadamard },
    QubitState::Pure { bit: true, basis: Basis::Hadamard },
];

#[test]
fn matched_basis_agreement_is_exact() {
    let mut rng = stream(11, 0);
    for &q in &ALL_STATES {
        let (bit, basis) = match q {
            QubitState::Pure { bit, basis } => (bit, basis),
            QubitState::MaximallyMixed => unreachable!(),
        };
        for _ in 0..256 {
            let symbolic = measure(q, basis, &mut rng);
            let sv = sv_prepare(&[q]).unwrap();
            let dense = sv_measure_all(sv, &[basis], &mut rng).unwrap()[0];
            assert_eq!(symbolic, bit);
            assert_eq!(dense, bit);
        }
    }
}

#[test]
fn mismatched_basis_measurements_are_unbiased_in_both_oracles() {
    const SAMPLES: u64 = 100_000;
    let mut rng = stream(11, 1);
    for &q in &ALL_STATES {
        let basis = match q {
            QubitState::Pure { basis, .. } => basis.conjugate(),
            QubitState::MaximallyMixed => unreachable!(),
        };
        let mut symbolic_ones = 0u64;
        let mut dense_ones = 0u64;
        for _ in 0..SAMPLES {
            symbolic_ones += measure(q, basis, &mut rng) as u64;
            let sv = sv_prepare(&[q]).unwrap();
            dense_ones += sv_measure_all(sv, &[basis], &mut rng).unwrap()[0] as u64;
        }
        assert!(
            fair_coin_chi_square_ok(symbolic_ones, SAMPLES - symbolic_ones),
            "symbolic path biased for {q:?}: {symbolic_ones}/{SAMPLES}"
        );
        assert!(
            fair_coin_chi_square_ok(dense_ones, SAMPLES - dense_ones),
            "statevector path biased for {q:?}: {dense_ones}/{SAMPLES}"
        );
    }
}

#[test]
fn mixed_state_measurement_is_an_unbiased_coin() {
    const SAMPLES: u64 = 100_000;
    let mut rng = stream(11, 2);
    for &basis in &[Basis::Computational, Basis::Hadamard] {
        let ones: u64 =
            (0..SAMPLES).map(|_| measure(QubitState::MaximallyMixed, basis, &mut rng) as u64).sum();
        assert!(fair_coin_chi_square_ok(ones, SAMPLES - ones), "mixed state biased: {ones}/{SAMPLES}");
    }
}

/// Joint distribution check on a whole register: measuring a mixed-bases
/// register coordinate-wise symbolically and in one dense shot must give
/// the same per-coordinate marginals (deterministic coordinates exactly,
/// conjugate coordinates as fair coins) and independent conjugate
/// coordinates (pairwise chi-square on a 2x2 table).
#[test]
fn register_level_marginals_and_independence_agree() {
    const SAMPLES: usize = 20_000;
    let mut rng = stream(11, 3);
    // Qubits 0, 2 are matched-basis (deterministic); 1, 3 are conjugate.
    let reg = [
        QubitState::pure(true, Basis::Computational),
        QubitState::pure(false, Basis::Hadamard),
        QubitState::pure(false, Basis::Hadamard),
        QubitState::pure(true, Basis::Computational),
    ];
    let bases = [Basis::Computational, Basis::Computational, Basis::Hadamard, Basis::Hadamard];
    let mut dense_table = [[0u64; 2]; 2]; // joint counts for coordinates (1, 3)
    let mut symbolic_table = [[0u64; 2]; 2];
    for _ in 0..SAMPLES {
        let sv = sv_prepare(&reg).unwrap();
        let dense = sv_measure_all(sv, &bases, &mut rng).unwrap();
        assert_eq!(dense[0], true, "matched coordinate 0 must read its bit");
        assert_eq!(dense[2], false, "matched coordinate 2 must read its bit");
        dense_table[dense[1] as usize][dense[3] as usize] += 1;

        let symbolic: Vec<bool> =
            reg.iter().zip(&bases).map(|(&q, &b)| measure(q, b, &mut rng)).collect();
        assert_eq!(symbolic[0], true);
        assert_eq!(symbolic[2], false);
        symbolic_table[symbolic[1] as usize][symbolic[3] as usize] += 1;
    }
    for table in [dense_table, symbolic_table] {
        let flat = [table[0][0], table[0][1], table[1][0], table[1][1]];
        let expected = [SAMPLES as f64 / 4.0; 4];
        let stat = stats::chi_square_stat(&flat, &expected);
        assert!(
            stat < stats::chi_square_crit_p01(3),
            "conjugate coordinates not jointly uniform: {flat:?} (chi2 = {stat:.2})"
        );
    }
}
