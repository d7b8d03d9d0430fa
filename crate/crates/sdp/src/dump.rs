//! JSON snapshots of programs, solutions, and certificates.
//!
//! The snapshots exist so that a run can be archived or diffed: everything
//! that determines the numbers is included (dimensions, constraint targets,
//! residuals), and values are additionally rounded to five decimal places
//! for stable comparison across platforms.

use crate::certificate::DualCertificateReport;
use crate::problem::SdpProblem;
use crate::solve::SdpSolution;
use crate::tensor::TensorPowerReport;
use nalgebra::DMatrix;
use serde_json::{Value, json};

use crate::herm::C64;

fn matrix_json(m: &DMatrix<C64>) -> Value {
    let re: Vec<f64> = m.row_iter().flat_map(|r| r.iter().map(|z| z.re).collect::<Vec<_>>()).collect();
    let im: Vec<f64> = m.row_iter().flat_map(|r| r.iter().map(|z| z.im).collect::<Vec<_>>()).collect();
    json!({
        "dim": m.nrows(),
        "entries_re": re,
        "entries_im": im,
    })
}

fn round5(x: f64) -> f64 {
    (x * 1e5).round() / 1e5
}

pub fn problem_json(problem: &SdpProblem) -> Value {
    let constraints: Vec<Value> = problem
        .constraints
        .iter()
        .map(|c| {
            json!({
                "output_dim": c.target.dim(),
                "trace_over": c.map.trace_over(),
                "target": matrix_json(c.target.matrix()),
            })
        })
        .collect();
    json!({
        "dimension": problem.dim(),
        "factors": problem.layout.dims(),
        "objective_trace": round5(problem.objective.trace()),
        "constraints": constraints,
    })
}

pub fn solution_json(solution: &SdpSolution) -> Value {
    json!({
        "value": solution.value,
        "value_rounded": round5(solution.value),
        "dual_value": solution.dual_value,
        "duality_gap": solution.duality_gap,
        "primal_residual": solution.primal_residual,
        "dual_residual": solution.dual_residual,
        "dual_slack_min_eig": solution.dual_slack_min_eig,
        "rho_min_eig": solution.rho_min_eig,
        "iterations": solution.iterations,
    })
}

pub fn certificate_json(report: &DualCertificateReport) -> Value {
    json!({
        "dual_value": report.dual_value,
        "dual_value_rounded": round5(report.dual_value),
        "min_slack_eigenvalue": report.min_slack_eigenvalue,
        "tolerance": report.tolerance,
        "feasible": report.feasible,
    })
}

pub fn tensor_report_json(report: &TensorPowerReport) -> Value {
    json!({
        "lambda": report.lambda,
        "constraint_residual": report.constraint_residual,
        "objective": report.objective,
        "objective_rounded": round5(report.objective),
        "certified_value": report.certified_value,
        "certified_value_rounded": round5(report.certified_value),
        "dual_slack_min_eig": report.dual_slack_min_eig,
        "lanczos_steps": report.lanczos_steps,
        "primal_feasible": report.primal_feasible,
        "dual_feasible": report.dual_feasible,
    })
}
