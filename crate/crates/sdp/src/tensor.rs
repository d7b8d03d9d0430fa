//! Feasibility of tensored solutions for the two-copy game.
//!
//! Playing two independent copies of the game multiplies the program: the
//! constraint maps, targets, and objective all tensor, a product of primal
//! feasible points is feasible for the product program, and a product of
//! dual feasible points certifies the squared bound. This module checks
//! both directions numerically from a single-copy solution, without ever
//! materializing the squared problem's 4096-dimensional operators densely
//! on the dual side (the slack spectrum is probed by a matrix-free Lanczos
//! iteration).

use crate::error::SdpError;
use crate::herm::{C64, eigh_real, hs_inner, symmetrized};
use crate::problem::SdpProblem;
use crate::solve::SdpSolution;
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Normalized residual allowed on the tensored affine constraints.
pub const TENSOR_PRIMAL_TOL: f64 = 1e-6;
/// How far below zero the tensored dual slack spectrum may reach.
pub const TENSOR_DUAL_FLOOR: f64 = -1e-3;

const LANCZOS_MAX_STEPS: usize = 320;
const LANCZOS_SEED: u64 = 0x7a9d_4c21_35b8_e906;

#[derive(Debug, Clone)]
pub struct TensorPowerReport {
    pub lambda: u32,
    /// `||Phi2(rho (x) rho) - R (x) R||` over all constraint pairs,
    /// normalized by the tensored target norm.
    pub constraint_residual: f64,
    /// Objective of the product point; equals the single-copy value squared.
    pub objective: f64,
    /// Dual bound certified by the product multiplier, `<R, Y>^2`.
    pub certified_value: f64,
    /// Smallest eigenvalue of the tensored dual slack.
    pub dual_slack_min_eig: f64,
    pub lanczos_steps: usize,
    pub primal_feasible: bool,
    pub dual_feasible: bool,
}

/// Verifies that the product of `solution` with itself is feasible for the
/// `lambda`-fold product game and certifies its value. Only `lambda = 2` is
/// supported; higher powers would need sparse representations throughout.
pub fn tensor_power_check(
    problem: &SdpProblem,
    solution: &SdpSolution,
    lambda: u32,
) -> Result<TensorPowerReport, SdpError> {
    if lambda != 2 {
        return Err(SdpError::UnsupportedPower { lambda });
    }

    let rho = solution.rho.matrix();
    let forwarded = problem.forward(rho);
    let targets = problem.targets();

    // the product point's image under a pair of constraint maps factors,
    // so every tensored residual block is computable from single-copy data
    let k = targets.dims().len();
    let mut residual_sq = 0.0;
    let mut target_sq = 0.0;
    for i in 0..k {
        for j in 0..k {
            let fij = forwarded.block(i).kronecker(forwarded.block(j));
            let rij = targets.block(i).kronecker(targets.block(j));
            residual_sq += (&fij - &rij).norm_squared();
            target_sq += rij.norm_squared();
        }
    }
    let constraint_residual = residual_sq.sqrt() / (1.0 + target_sq.sqrt());

    let q = problem.objective.matrix();
    let single_value = hs_inner(q, rho);
    let objective = single_value * single_value;
    let certified_value = solution.dual_value * solution.dual_value;

    // tensored slack: Phi2*(Y (x) Y) - Q (x) Q = A (x) A - Q (x) Q
    let a = symmetrized(&problem.adjoint(&solution.dual));
    let n = problem.dim();
    let apply = |v: &DVector<C64>| kron_square_apply(&a, v) - kron_square_apply(q, v);
    let (dual_slack_min_eig, lanczos_steps) =
        lanczos_min_eigenvalue(n * n, apply, LANCZOS_MAX_STEPS);

    Ok(TensorPowerReport {
        lambda,
        constraint_residual,
        objective,
        certified_value,
        dual_slack_min_eig,
        lanczos_steps,
        primal_feasible: constraint_residual <= TENSOR_PRIMAL_TOL,
        dual_feasible: dual_slack_min_eig >= TENSOR_DUAL_FLOOR,
    })
}

/// Applies `(A (x) A)` to a vector in row-major index convention
/// (`v[i * n + j]` is entry `(i, j)` of the unflattened matrix):
/// `(A (x) A) vec(V) = vec(A V A^T)`.
fn kron_square_apply(a: &DMatrix<C64>, v: &DVector<C64>) -> DVector<C64> {
    let n = a.nrows();
    let vm = DMatrix::from_fn(n, n, |i, j| v[i * n + j]);
    let out = a * vm * a.transpose();
    DVector::from_fn(n * n, |idx, _| out[(idx / n, idx % n)])
}

/// Smallest eigenvalue of a Hermitian operator given only by its action.
/// Lanczos with full reorthogonalization and a fixed deterministic start;
/// returns the converged Ritz value and the number of steps taken.
fn lanczos_min_eigenvalue<F>(dim: usize, apply: F, max_steps: usize) -> (f64, usize)
where
    F: Fn(&DVector<C64>) -> DVector<C64>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(LANCZOS_SEED);
    let mut v = DVector::from_fn(dim, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    v /= C64::from(v.norm());

    let mut basis: Vec<DVector<C64>> = vec![v.clone()];
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut previous_ritz = f64::INFINITY;
    let mut steps = 0;

    for step in 1..=max_steps {
        steps = step;
        let mut w = apply(basis.last().unwrap());
        let alpha = basis.last().unwrap().dotc(&w).re;
        alphas.push(alpha);
        // full reorthogonalization (two sweeps) keeps the basis numerically
        // orthonormal, which matters here because the slack spectrum is
        // heavily degenerate at zero
        for b in &basis {
            let coeff = b.dotc(&w);
            w -= b * coeff;
        }
        for b in &basis {
            let coeff = b.dotc(&w);
            w -= b * coeff;
        }

        let (ritz, _) = tridiagonal_extremes(&alphas, &betas);
        let beta = w.norm();
        let stalled = (previous_ritz - ritz).abs() < 1e-14 && step > 16;
        previous_ritz = ritz;
        if beta < 1e-13 || stalled || step == max_steps {
            break;
        }
        betas.push(beta);
        basis.push(w / C64::from(beta));
    }

    let (min_ritz, _) = tridiagonal_extremes(&alphas, &betas);
    (min_ritz, steps)
}

/// Extreme eigenvalues of the real symmetric tridiagonal matrix with the
/// given diagonal and off-diagonal.
fn tridiagonal_extremes(alphas: &[f64], betas: &[f64]) -> (f64, f64) {
    let k = alphas.len();
    let mut t = DMatrix::<f64>::zeros(k, k);
    for i in 0..k {
        t[(i, i)] = alphas[i];
        if i + 1 < k {
            t[(i, i + 1)] = betas[i];
            t[(i + 1, i)] = betas[i];
        }
    }
    let (vals, _) = eigh_real(&t);
    (vals.min(), vals.max())
}
