use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum SdpError {
    #[error("matrix is not conjugate-symmetric (max asymmetry {max_asymmetry:.2e})")]
    NotHermitian { max_asymmetry: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("factor {index} is not usable in a {count}-factor layout")]
    BadFactor { index: usize, count: usize },

    #[error(
        "solver stopped after {iterations} iterations without converging \
         (primal residual {primal_residual:.2e}, dual residual {dual_residual:.2e}, \
         gap {gap:.2e})"
    )]
    NotConverged {
        iterations: usize,
        primal_residual: f64,
        dual_residual: f64,
        gap: f64,
    },

    #[error("tensor power check only handles two copies, got {lambda}")]
    UnsupportedPower { lambda: u32 },
}
