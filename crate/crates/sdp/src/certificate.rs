//! Independent verification of dual upper bounds.
//!
//! A dual vector `Y` certifies `value <= <R, Y>` whenever `Phi*(Y) - Q` is
//! positive semidefinite; nothing about how `Y` was produced enters the
//! check. This module recomputes the slack from scratch so that a solver
//! bug cannot vouch for itself.

use crate::error::SdpError;
use crate::herm::{HERMITICITY_TOL, eigh};
use crate::problem::{ConstraintVec, SdpProblem};

#[derive(Debug, Clone)]
pub struct DualCertificateReport {
    /// The bound being certified, `<R, Y>`.
    pub dual_value: f64,
    /// Smallest eigenvalue of `Phi*(Y) - Q`.
    pub min_slack_eigenvalue: f64,
    /// How far below zero the slack spectrum is allowed to dip.
    pub tolerance: f64,
    pub feasible: bool,
}

/// Checks that `dual` is (up to `epsilon`) a feasible dual point for
/// `problem`, i.e. that its value upper-bounds every primal feasible value.
pub fn check_dual_certificate(
    problem: &SdpProblem,
    dual: &ConstraintVec,
    epsilon: f64,
) -> Result<DualCertificateReport, SdpError> {
    let expected = problem.block_dims();
    if dual.dims() != expected {
        return Err(SdpError::DimensionMismatch {
            expected: expected.iter().map(|d| d * d).sum(),
            got: dual.dims().iter().map(|d| d * d).sum(),
        });
    }
    let asym = dual.max_asymmetry();
    if asym > HERMITICITY_TOL {
        return Err(SdpError::NotHermitian {
            max_asymmetry: asym,
        });
    }

    let slack = problem.adjoint(dual) - problem.objective.matrix();
    let min_eig = eigh(&crate::herm::symmetrized(&slack)).0.min();
    let dual_value = problem.targets().inner(dual);

    Ok(DualCertificateReport {
        dual_value,
        min_slack_eigenvalue: min_eig,
        tolerance: epsilon,
        feasible: min_eig >= -epsilon,
    })
}
