//! Small statistics utilities shared by experiments and their tests:
//! Wilson score intervals for binomial rates and chi-square
//! goodness-of-fit helpers with pinned 99% critical values.

/// z-quantile for two-sided 99% coverage.
pub const Z_99: f64 = 2.575_829_303_548_901;

/// Wilson score interval for `successes` out of `trials` at confidence
/// level `z` (use [`Z_99`] for the workspace default).
///
/// Unlike the normal approximation this stays inside `[0, 1]` and behaves
/// at the extremes, which matters because many experiments here sit at
/// rates of exactly 0 or 1.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    assert!(trials > 0, "wilson interval needs at least one trial");
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = p + z2 / (2.0 * n);
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    // At p = 0 (resp. 1) the matching bound is exactly 0 (resp. 1); snap it
    // so rounding noise cannot leak into reports.
    let lo = if successes == 0 { 0.0 } else { ((center - half) / denom).max(0.0) };
    let hi = if successes == trials { 1.0 } else { ((center + half) / denom).min(1.0) };
    (lo, hi)
}

/// Pearson chi-square statistic for observed counts against expected counts.
pub fn chi_square_stat(observed: &[u64], expected: &[f64]) -> f64 {
    assert_eq!(observed.len(), expected.len());
    observed
        .iter()
        .zip(expected)
        .map(|(&o, &e)| {
            assert!(e > 0.0, "expected count must be positive");
            let d = o as f64 - e;
            d * d / e
        })
        .sum()
}

/// Critical value of the chi-square distribution at p = 0.01 (upper tail)
/// for the given degrees of freedom.
///
/// Small dofs are pinned to table values; larger dofs use the
/// Wilson-Hilferty cube approximation, which is accurate to well under a
/// percent in the regime we use it (dof >= 10).
pub fn chi_square_crit_p01(dof: usize) -> f64 {
    const TABLE: [f64; 9] = [
        6.634_896_601_021_21, // 1
        9.210_340_371_976_18, // 2
        11.344_866_730_144_37,
        13.276_704_135_987_62,
        15.086_272_469_388_99,
        16.811_893_829_770_93,
        18.475_306_906_582_36,
        20.090_235_029_663_23,
        21.665_994_333_461_92, // 9
    ];
    assert!(dof >= 1);
    if dof <= TABLE.len() {
        return TABLE[dof - 1];
    }
    // Wilson-Hilferty: chi2 ~ dof * (1 - 2/(9 dof) + z * sqrt(2/(9 dof)))^3
    // with z the standard normal 0.99 quantile.
    const Z_P99: f64 = 2.326_347_874_040_841;
    let k = dof as f64;
    let t = 2.0 / (9.0 * k);
    k * (1.0 - t + Z_P99 * t.sqrt()).powi(3)
}

/// Convenience: does a two-cell observed split pass a uniformity
/// chi-square test at p > 0.01?
pub fn fair_coin_chi_square_ok(heads: u64, tails: u64) -> bool {
    let n = (heads + tails) as f64;
    let stat = chi_square_stat(&[heads, tails], &[n / 2.0, n / 2.0]);
    stat < chi_square_crit_p01(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilson_interval_brackets_the_point_estimate() {
        let (lo, hi) = wilson_interval(850, 1000, Z_99);
        assert!(lo < 0.85 && 0.85 < hi);
        assert!(lo > 0.80 && hi < 0.90);
    }

    #[test]
    fn wilson_interval_is_proper_at_the_extremes() {
        let (lo, hi) = wilson_interval(0, 1000, Z_99);
        assert_eq!(lo, 0.0);
        assert!(hi > 0.0 && hi < 0.02);
        let (lo, hi) = wilson_interval(1000, 1000, Z_99);
        assert_eq!(hi, 1.0);
        assert!(lo < 1.0 && lo > 0.98);
    }

    #[test]
    fn chi_square_statistic_matches_hand_computation() {
        // obs (60, 40) vs exp (50, 50): (10^2)/50 * 2 = 4.
        let stat = chi_square_stat(&[60, 40], &[50.0, 50.0]);
        assert!((stat - 4.0).abs() < 1e-12);
        assert!(fair_coin_chi_square_ok(60, 40));
        assert!(!fair_coin_chi_square_ok(600, 400));
    }

    #[test]
    fn wilson_hilferty_tracks_the_table_where_they_meet() {
        // dof = 9 from the table vs dof = 10 approximated: the curve must be
        // monotone and the approximation close to the known value 23.209.
        let c9 = chi_square_crit_p01(9);
        let c10 = chi_square_crit_p01(10);
        assert!(c10 > c9);
        assert!((c10 - 23.209).abs() < 0.05, "dof=10 critical value came out {c10}");
    }
}
