//! Register bookkeeping: ordered tensor factors, partial traces, and the
//! adjoint embedding.
//!
//! Indexing is row-major over the factor list: the first factor owns the
//! most significant digit of a basis index, the last factor the least.
//! `partial_trace` and `embed` are adjoint to each other under the
//! Hilbert-Schmidt inner product, and the solver leans on that identity, so
//! it is pinned by a test rather than assumed.

use crate::error::SdpError;
use crate::herm::{C64, HermitianMatrix};
use nalgebra::DMatrix;

/// Ordered tensor factorization of a problem space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterLayout {
    dims: Vec<usize>,
}

/// Factor positions in [`RegisterLayout::weak_deletion`].
pub mod reg {
    /// Two-valued selector gluing the two interaction rounds into one
    /// variable: block 0 of the program variable is the state after the
    /// certificate comes back, block 1 the state after the guess does.
    pub const STAGE: usize = 0;
    /// Purifying pad held by the challenger (mirrors the plaintext bit).
    pub const PAD: usize = 1;
    /// Wire that carries the ciphertext out and the deletion certificate
    /// back.
    pub const CERT_WIRE: usize = 2;
    /// Wire that carries the key copy out and the decryption guess back.
    pub const GUESS_WIRE: usize = 3;
    /// The basis key bit.
    pub const KEY: usize = 4;
    /// The encrypted plaintext bit.
    pub const MSG: usize = 5;
}

impl RegisterLayout {
    pub fn new(dims: Vec<usize>) -> Self {
        assert!(!dims.is_empty(), "layout needs at least one factor");
        assert!(dims.iter().all(|&d| d >= 1), "factor dimensions start at 1");
        Self { dims }
    }

    /// The six qubit-sized factors of the deletion game in standard form:
    /// stage, pad, certificate wire, guess wire, key, message. Total
    /// dimension 64.
    pub fn weak_deletion() -> Self {
        Self::new(vec![2; 6])
    }

    /// The five game wires without the stage selector; the initial state
    /// and the verification measurement live here. Total dimension 32.
    pub fn game_wires() -> Self {
        Self::new(vec![2; 5])
    }

    pub fn factor_count(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self, factor: usize) -> usize {
        self.dims[factor]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    /// Factors not listed in `chosen`, in ascending order.
    pub fn complement(&self, chosen: &[usize]) -> Vec<usize> {
        (0..self.dims.len())
            .filter(|f| !chosen.contains(f))
            .collect()
    }

    /// Validates a factor list: in range, strictly ascending (which also
    /// rules out duplicates).
    pub(crate) fn check_factors(&self, factors: &[usize]) -> Result<(), SdpError> {
        for (pos, &f) in factors.iter().enumerate() {
            let ascending = pos == 0 || factors[pos - 1] < f;
            if f >= self.dims.len() || !ascending {
                return Err(SdpError::BadFactor {
                    index: f,
                    count: self.dims.len(),
                });
            }
        }
        Ok(())
    }

    /// For every full-space basis index, its sub-index on `keep` and its
    /// sub-index on the complement. `keep` must be ascending; both
    /// sub-indices are row-major over their own factor lists.
    fn split_tables(&self, keep: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let total = self.total();
        let n = self.dims.len();
        let mut kept = vec![0usize; total];
        let mut traced = vec![0usize; total];
        for idx in 0..total {
            let mut rest = idx;
            let mut digits = vec![0usize; n];
            for f in (0..n).rev() {
                digits[f] = rest % self.dims[f];
                rest /= self.dims[f];
            }
            let (mut ki, mut ti) = (0usize, 0usize);
            for f in 0..n {
                if keep.contains(&f) {
                    ki = ki * self.dims[f] + digits[f];
                } else {
                    ti = ti * self.dims[f] + digits[f];
                }
            }
            kept[idx] = ki;
            traced[idx] = ti;
        }
        (kept, traced)
    }
}

/// Traces out the listed factors. The result lives on the remaining factors
/// in their original order.
pub fn partial_trace(
    m: &HermitianMatrix,
    layout: &RegisterLayout,
    over: &[usize],
) -> Result<HermitianMatrix, SdpError> {
    layout.check_factors(over)?;
    if m.dim() != layout.total() {
        return Err(SdpError::DimensionMismatch {
            expected: layout.total(),
            got: m.dim(),
        });
    }
    Ok(HermitianMatrix::wrap(partial_trace_raw(
        m.matrix(),
        layout,
        over,
    )))
}

pub(crate) fn partial_trace_raw(
    m: &DMatrix<C64>,
    layout: &RegisterLayout,
    over: &[usize],
) -> DMatrix<C64> {
    let keep = layout.complement(over);
    let out_dim: usize = keep.iter().map(|&f| layout.dim(f)).product();
    let (kept, traced) = layout.split_tables(&keep);
    let mut out = DMatrix::<C64>::zeros(out_dim, out_dim);
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            if traced[r] == traced[c] {
                out[(kept[r], kept[c])] += m[(r, c)];
            }
        }
    }
    out
}

/// Adjoint of [`partial_trace`]: places `m` on the `kept` factors and the
/// identity on the rest, i.e. `embed(Y)` is the unique operator with
/// `Tr(embed(Y) · M) = Tr(Y · partial_trace(M))` for all `M`.
pub fn embed(
    m: &HermitianMatrix,
    layout: &RegisterLayout,
    kept: &[usize],
) -> Result<HermitianMatrix, SdpError> {
    layout.check_factors(kept)?;
    let kept_dim: usize = kept.iter().map(|&f| layout.dim(f)).product();
    if m.dim() != kept_dim {
        return Err(SdpError::DimensionMismatch {
            expected: kept_dim,
            got: m.dim(),
        });
    }
    Ok(HermitianMatrix::wrap(embed_raw(m.matrix(), layout, kept)))
}

pub(crate) fn embed_raw(
    m: &DMatrix<C64>,
    layout: &RegisterLayout,
    kept_factors: &[usize],
) -> DMatrix<C64> {
    let total = layout.total();
    let (kept, traced) = layout.split_tables(kept_factors);
    let mut out = DMatrix::<C64>::zeros(total, total);
    for r in 0..total {
        for c in 0..total {
            if traced[r] == traced[c] {
                out[(r, c)] = m[(kept[r], kept[c])];
            }
        }
    }
    out
}
