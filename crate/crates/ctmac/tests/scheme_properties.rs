//! Functional properties of the one-bit scheme: honest signing always
//! verifies, verification is deterministic and monotone in the tolerance,
//! and exact-match verification is the zero-tolerance special case.

use bb84::rng::stream;
use ctmac::{key_gen, sign, token_gen, verify, Signature1};
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #[test]
    fn honest_signatures_verify_at_any_tolerance(
        lambda in 1usize..200,
        m in any::<bool>(),
        eta in 0.0f64..1.0,
        seed in any::<u64>(),
    ) {
        let mut rng = stream(seed, 0);
        let key = key_gen(lambda, &mut rng).unwrap();
        let mut token = token_gen(&key);
        let sig = sign(&mut token, m, &mut rng).unwrap();
        let report = verify(&key, m, &sig, eta).unwrap();
        prop_assert!(report.miss.is_empty(), "honest signing cannot miss in the consistent set");
        prop_assert!(report.accepted);
    }

    #[test]
    fn verification_is_deterministic(
        lambda in 1usize..100,
        m in any::<bool>(),
        eta in 0.0f64..1.0,
        seed in any::<u64>(),
    ) {
        let mut rng = stream(seed, 1);
        let key = key_gen(lambda, &mut rng).unwrap();
        let sig = Signature1 { bits: (0..lambda).map(|_| rng.gen()).collect() };
        let first = verify(&key, m, &sig, eta).unwrap();
        for _ in 0..8 {
            prop_assert_eq!(&verify(&key, m, &sig, eta).unwrap(), &first);
        }
    }

    #[test]
    fn acceptance_is_monotone_in_the_tolerance(
        lambda in 1usize..100,
        m in any::<bool>(),
        eta_lo in 0.0f64..1.0,
        bump in 0.0f64..1.0,
        seed in any::<u64>(),
    ) {
        let mut rng = stream(seed, 2);
        let key = key_gen(lambda, &mut rng).unwrap();
        let sig = Signature1 { bits: (0..lambda).map(|_| rng.gen()).collect() };
        let lo = verify(&key, m, &sig, eta_lo).unwrap();
        let hi = verify(&key, m, &sig, eta_lo + bump).unwrap();
        prop_assert!(!lo.accepted || hi.accepted, "raising the tolerance may only widen acceptance");
        prop_assert_eq!(lo.cons, hi.cons);
        prop_assert_eq!(lo.miss, hi.miss);
    }

    #[test]
    fn zero_tolerance_is_exact_matching(
        lambda in 1usize..100,
        m in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let mut rng = stream(seed, 3);
        let key = key_gen(lambda, &mut rng).unwrap();
        let sig = Signature1 { bits: (0..lambda).map(|_| rng.gen()).collect() };
        let report = verify(&key, m, &sig, 0.0).unwrap();
        let exact = key.consistent_set(m).iter().all(|&i| sig.bits[i] == key.a()[i]);
        prop_assert_eq!(report.accepted, exact);
    }

    #[test]
    fn report_invariants_hold(
        lambda in 1usize..100,
        m in any::<bool>(),
        eta in 0.0f64..1.0,
        seed in any::<u64>(),
    ) {
        let mut rng = stream(seed, 4);
        let key = key_gen(lambda, &mut rng).unwrap();
        let sig = Signature1 { bits: (0..lambda).map(|_| rng.gen()).collect() };
        let report = verify(&key, m, &sig, eta).unwrap();
        prop_assert!(report.miss.iter().all(|i| report.cons.contains(i)));
        prop_assert_eq!(report.threshold, eta * lambda as f64);
        prop_assert_eq!(report.accepted, report.miss.len() as f64 <= report.threshold);
    }

    #[test]
    fn hex_round_trips(lambda in 1usize..300, seed in any::<u64>()) {
        let mut rng = stream(seed, 5);
        let key = key_gen(lambda, &mut rng).unwrap();
        prop_assert_eq!(ctmac::SecretKey1::from_hex(&key.to_hex()).unwrap(), key);
        let sig = Signature1 { bits: (0..lambda).map(|_| rng.gen()).collect() };
        prop_assert_eq!(Signature1::from_hex(&sig.to_hex()).unwrap(), sig);
    }
}
