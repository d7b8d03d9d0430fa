//! Dense semidefinite programming for the two-round deletion game.
//!
//! The game: a verifier encodes a uniformly random bit in one of two
//! conjugate bases and hands the qubit to the adversary. Round one, the
//! adversary returns a one-bit deletion certificate. The verifier checks it
//! against the encoded bit whenever the basis choice makes it checkable,
//! then reveals the basis. Round two, the adversary guesses the encoded
//! bit. Winning means passing the check and guessing right.
//!
//! The adversary's maximal winning probability is the value of a small
//! semidefinite program over a two-stage register layout (Appendix-style
//! formulations of two-round games reduce to exactly this shape). This
//! crate builds that program ([`build_weak_del_sdp`]), solves it with a
//! deterministic splitting method ([`solve_sdp`]), verifies dual upper
//! bounds independently of the solver ([`check_dual_certificate`]), and
//! checks that products of optimal points stay feasible and optimal for
//! two independent copies of the game ([`tensor_power_check`]), which is
//! the numerical face of the value multiplying under parallel repetition.
//!
//! Everything is dense `nalgebra` linear algebra over `Complex<f64>`; the
//! single-copy program is 64-dimensional and solves in seconds.

mod build;
mod certificate;
mod dump;
mod error;
mod herm;
mod layout;
mod problem;
mod solve;
mod tensor;

pub use build::{
    breidbart_point, build_weak_del_sdp, weak_del_initial_state, weak_del_optimal_value,
    weak_del_verifier,
};
pub use certificate::{DualCertificateReport, check_dual_certificate};
pub use dump::{certificate_json, problem_json, solution_json, tensor_report_json};
pub use error::SdpError;
pub use herm::{C64, HermitianMatrix};
pub use layout::{RegisterLayout, embed, partial_trace, reg};
pub use problem::{Constraint, ConstraintVec, SandwichTrace, SdpProblem};
pub use solve::{SdpSolution, SolveOptions, solve_sdp, solve_sdp_with};
pub use tensor::{TENSOR_DUAL_FLOOR, TENSOR_PRIMAL_TOL, TensorPowerReport, tensor_power_check};
