//! Hermitian matrices over `Complex<f64>`.
//!
//! Everything an SDP trades in (states, observables, slack operators, dual
//! blocks) is conjugate-symmetric, so this wrapper is the public currency of
//! the crate. Construction checks the symmetry and then stores the exactly
//! symmetrized matrix, which keeps downstream eigendecompositions honest.

use crate::error::SdpError;
use nalgebra::{Complex, DMatrix, DVector};

pub type C64 = Complex<f64>;

/// How far from exact conjugate symmetry an input may be and still be
/// accepted. Anything built by this crate is symmetrized on construction,
/// so the tolerance only gates matrices coming from outside.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// A dense complex square matrix that is conjugate-symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    m: DMatrix<C64>,
}

pub(crate) fn symmetrized(m: &DMatrix<C64>) -> DMatrix<C64> {
    (m + m.adjoint()).scale(0.5)
}

pub(crate) fn max_asymmetry(m: &DMatrix<C64>) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

impl HermitianMatrix {
    /// Accepts a square matrix that is Hermitian within [`HERMITICITY_TOL`]
    /// and stores its exact symmetrization.
    pub fn new(m: DMatrix<C64>) -> Result<Self, SdpError> {
        if m.nrows() != m.ncols() {
            return Err(SdpError::DimensionMismatch {
                expected: m.nrows(),
                got: m.ncols(),
            });
        }
        let asym = max_asymmetry(&m);
        if asym > HERMITICITY_TOL {
            return Err(SdpError::NotHermitian {
                max_asymmetry: asym,
            });
        }
        Ok(Self {
            m: symmetrized(&m),
        })
    }

    /// Wraps a matrix that is Hermitian by construction. Still symmetrizes,
    /// so rounding noise from upstream arithmetic cannot accumulate.
    pub(crate) fn wrap(m: DMatrix<C64>) -> Self {
        debug_assert!(max_asymmetry(&m) <= HERMITICITY_TOL);
        Self {
            m: symmetrized(&m),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            m: DMatrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            m: DMatrix::identity(dim, dim),
        }
    }

    /// 1x1 matrix holding a real scalar; scalar constraint targets use this
    /// so the constraint space is uniformly "a list of Hermitian blocks".
    pub fn scalar(x: f64) -> Self {
        Self {
            m: DMatrix::from_element(1, 1, C64::from(x)),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.m[(i, j)]
    }

    /// Trace. Real by symmetry; the imaginary part is discarded.
    pub fn trace(&self) -> f64 {
        self.m.trace().re
    }

    /// Hilbert-Schmidt inner product `Tr(A B)`. Real for Hermitian pairs.
    pub fn inner(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "inner product needs equal dims");
        hs_inner(&self.m, &other.m)
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.m.norm()
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            m: self.m.scale(s),
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self {
            m: self.m.kronecker(&other.m),
        }
    }

    pub fn min_eigenvalue(&self) -> f64 {
        let (vals, _) = eigh(&self.m);
        vals.min()
    }
}

/// Eigendecomposition of a Hermitian matrix, `(eigenvalues, eigenvectors)`
/// with eigenvalues ascending and eigenvectors in the matching columns.
///
/// Routed through `faer`: nalgebra's own symmetric eigensolver can silently
/// return a non-decomposition on some well-conditioned inputs (observed on
/// this crate's constraint Gram matrix, where a 1e-14 perturbation of the
/// entries flipped the recomposition error from 1e-15 to 1e-1), and the
/// splitting solver leans on eigendecompositions too heavily to gamble.
pub(crate) fn eigh(m: &DMatrix<C64>) -> (DVector<f64>, DMatrix<C64>) {
    let n = m.nrows();
    let fm = faer::Mat::from_fn(n, n, |i, j| m[(i, j)]);
    let eig = fm
        .self_adjoint_eigen(faer::Side::Lower)
        .expect("self-adjoint eigendecomposition failed (non-finite input?)");
    let vals = DVector::from_fn(n, |i, _| eig.S().column_vector()[i].re);
    let vecs = DMatrix::from_fn(n, n, |i, j| eig.U()[(i, j)]);
    (vals, vecs)
}

/// Real-symmetric counterpart of [`eigh`].
pub(crate) fn eigh_real(m: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let n = m.nrows();
    let fm = faer::Mat::from_fn(n, n, |i, j| m[(i, j)]);
    let eig = fm
        .self_adjoint_eigen(faer::Side::Lower)
        .expect("self-adjoint eigendecomposition failed (non-finite input?)");
    let vals = DVector::from_fn(n, |i, _| eig.S().column_vector()[i]);
    let vecs = DMatrix::from_fn(n, n, |i, j| eig.U()[(i, j)]);
    (vals, vecs)
}

impl std::ops::Add for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn add(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        HermitianMatrix {
            m: &self.m + &rhs.m,
        }
    }
}

impl std::ops::Sub for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn sub(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        HermitianMatrix {
            m: &self.m - &rhs.m,
        }
    }
}

/// `Re Tr(A† B)` on raw matrices. For Hermitian `A` this equals `Tr(A B)`
/// and the imaginary part vanishes.
pub(crate) fn hs_inner(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    let mut acc = 0.0;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            acc += (a[(i, j)].conj() * b[(i, j)]).re;
        }
    }
    acc
}
