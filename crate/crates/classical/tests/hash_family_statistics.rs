//! Distributional checks on the j-wise family, plus an independent
//! evaluation oracle and wire-format round trips.

use classical::{
    jdec, jenc, jwise_sample, wc_keygen, Gf64, Gf8, GfElem, JwiseBytesKey, JwiseHash, WcMacKey,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stats::{chi_square_crit_p01, chi_square_stat};

/// Pairwise independence, tested head on: for fixed r1 != r2 the pair
/// (h(r1), h(r2)) over a fresh degree-1 hash must be uniform on the
/// 256 x 256 grid. One million samples, chi-square at the 1% level.
#[test]
fn degree_one_hashes_are_pairwise_uniform() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10);
    let (r1, r2) = (Gf8(3), Gf8(200));
    let mut counts = vec![0u64; 1 << 16];
    const SAMPLES: u64 = 1_000_000;
    for _ in 0..SAMPLES {
        let h: JwiseHash<Gf8> = jwise_sample(2, &mut rng);
        counts[((h.eval(r1).0 as usize) << 8) | h.eval(r2).0 as usize] += 1;
    }
    let expected = vec![SAMPLES as f64 / counts.len() as f64; counts.len()];
    let stat = chi_square_stat(&counts, &expected);
    let crit = chi_square_crit_p01(counts.len() - 1);
    assert!(stat < crit, "chi-square {stat:.1} exceeds the 1% critical value {crit:.1}");
}

/// Horner against a term-by-term monomial sum built from scratch. The two
/// paths share nothing but the field multiply.
#[test]
fn evaluation_matches_a_monomial_sum_oracle() {
    fn naive<F: GfElem>(coeffs: &[F], x: F) -> F {
        let mut total = F::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            let mut monomial = c;
            for _ in 0..i {
                monomial = monomial.mul(x);
            }
            total = total.add(monomial);
        }
        total
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x11);
    let h8: JwiseHash<Gf8> = jwise_sample(5, &mut rng);
    let h64: JwiseHash<Gf64> = jwise_sample(7, &mut rng);
    for _ in 0..1_000 {
        let x8 = Gf8::sample(&mut rng);
        assert_eq!(h8.eval(x8), naive(h8.coeffs(), x8));
        let x64 = Gf64::sample(&mut rng);
        assert_eq!(h64.eval(x64), naive(h64.coeffs(), x64));
    }
}

proptest! {
    #[test]
    fn element_encryption_round_trips(j in 1usize..6, m in any::<u64>(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h: JwiseHash<Gf64> = jwise_sample(j, &mut rng);
        let ct = jenc(&h, Gf64(m), &mut rng);
        prop_assert_eq!(jdec(&h, ct), Gf64(m));
    }

    #[test]
    fn byte_encryption_round_trips(j in 1usize..4, msg in proptest::collection::vec(any::<u8>(), 0..96), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let key = JwiseBytesKey::sample(j, msg.len(), &mut rng);
        let ct = key.enc(&msg, &mut rng);
        prop_assert_eq!(key.dec(&ct), msg);
    }

    #[test]
    fn key_wire_formats_round_trip(j in 1usize..4, len in 0usize..80, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let hash: JwiseHash<Gf64> = jwise_sample(j, &mut rng);
        prop_assert_eq!(JwiseHash::from_bytes(&hash.to_bytes()), Some(hash.clone()));
        let bytes_key = JwiseBytesKey::sample(j, len, &mut rng);
        prop_assert_eq!(JwiseBytesKey::from_bytes(&bytes_key.to_bytes()), Some(bytes_key.clone()));
        let mac_key = wc_keygen(j, 32, &mut rng);
        prop_assert_eq!(WcMacKey::from_bytes(&mac_key.to_bytes()), Some(mac_key.clone()));
        let ct = bytes_key.enc(&vec![0x5a; len], &mut rng);
        prop_assert_eq!(classical::JwiseBytesCiphertext::from_bytes(&ct.to_bytes()), Some(ct.clone()));
    }
}
