//! Constraint maps and the assembled program.
//!
//! A program in standard form is `maximize <Q, rho>` subject to
//! `Phi(rho) = R` and `rho >= 0`, where `Phi` stacks a handful of
//! Hermiticity-preserving blocks. Each block here is a weighted
//! Kraus-sandwich followed by a partial trace; that shape covers every map
//! the deletion game needs (projector sandwiches, differences of them, and
//! full traces) while keeping the adjoint mechanical.

use crate::herm::{self, C64, HermitianMatrix};
use crate::layout::{RegisterLayout, embed_raw, partial_trace_raw};
use nalgebra::{DMatrix, DVector};

/// One constraint block: `rho -> Tr_over( sum_i w_i · K_i rho K_i† )`.
///
/// Weights are real so the map sends Hermitian to Hermitian; a weight of
/// `-1` expresses difference maps without a separate subtraction type.
#[derive(Debug, Clone)]
pub struct SandwichTrace {
    terms: Vec<SandwichTerm>,
    trace_over: Vec<usize>,
}

#[derive(Debug, Clone)]
struct SandwichTerm {
    weight: f64,
    kraus: DMatrix<C64>,
    /// Populated when `kraus` is diagonal. The solver sandwiches thousands
    /// of times per solve and the game's operators are all diagonal
    /// projectors, so this path is worth carrying.
    diagonal: Option<DVector<C64>>,
}

fn diagonal_of(k: &DMatrix<C64>) -> Option<DVector<C64>> {
    for i in 0..k.nrows() {
        for j in 0..k.ncols() {
            if i != j && k[(i, j)] != C64::from(0.0) {
                return None;
            }
        }
    }
    Some(k.diagonal())
}

impl SandwichTrace {
    /// `terms` are (weight, Kraus operator) pairs on the full space;
    /// `trace_over` lists the factors traced out afterwards (ascending).
    pub fn new(terms: Vec<(f64, DMatrix<C64>)>, trace_over: Vec<usize>) -> Self {
        assert!(!terms.is_empty(), "a constraint map needs at least one term");
        let terms = terms
            .into_iter()
            .map(|(weight, kraus)| {
                assert_eq!(kraus.nrows(), kraus.ncols(), "Kraus operators are square");
                let diagonal = diagonal_of(&kraus);
                SandwichTerm {
                    weight,
                    kraus,
                    diagonal,
                }
            })
            .collect();
        Self { terms, trace_over }
    }

    pub fn trace_over(&self) -> &[usize] {
        &self.trace_over
    }

    pub fn terms(&self) -> impl Iterator<Item = (f64, &DMatrix<C64>)> {
        self.terms.iter().map(|t| (t.weight, &t.kraus))
    }

    pub fn output_dim(&self, layout: &RegisterLayout) -> usize {
        layout
            .complement(&self.trace_over)
            .iter()
            .map(|&f| layout.dim(f))
            .product()
    }

    /// Forward application on a raw matrix.
    pub fn apply(&self, layout: &RegisterLayout, rho: &DMatrix<C64>) -> DMatrix<C64> {
        let n = rho.nrows();
        let mut acc = DMatrix::<C64>::zeros(n, n);
        for t in &self.terms {
            match &t.diagonal {
                Some(d) => {
                    for i in 0..n {
                        for j in 0..n {
                            acc[(i, j)] += rho[(i, j)] * d[i] * d[j].conj() * C64::from(t.weight);
                        }
                    }
                }
                None => {
                    acc += (&t.kraus * rho * t.kraus.adjoint()).scale(t.weight);
                }
            }
        }
        partial_trace_raw(&acc, layout, &self.trace_over)
    }

    /// Adjoint application: `y -> sum_i w_i · K_i† embed(y) K_i`.
    pub fn adjoint(&self, layout: &RegisterLayout, y: &DMatrix<C64>) -> DMatrix<C64> {
        let kept = layout.complement(&self.trace_over);
        let e = embed_raw(y, layout, &kept);
        let n = e.nrows();
        let mut acc = DMatrix::<C64>::zeros(n, n);
        for t in &self.terms {
            match &t.diagonal {
                Some(d) => {
                    for i in 0..n {
                        for j in 0..n {
                            acc[(i, j)] += e[(i, j)] * d[i].conj() * d[j] * C64::from(t.weight);
                        }
                    }
                }
                None => {
                    acc += (t.kraus.adjoint() * &e * &t.kraus).scale(t.weight);
                }
            }
        }
        acc
    }
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub map: SandwichTrace,
    pub target: HermitianMatrix,
}

#[derive(Debug, Clone)]
pub struct SdpProblem {
    pub layout: RegisterLayout,
    pub objective: HermitianMatrix,
    pub constraints: Vec<Constraint>,
}

impl SdpProblem {
    /// Dimension of the program variable.
    pub fn dim(&self) -> usize {
        self.layout.total()
    }

    /// Output dimension of every constraint block, in order.
    pub fn block_dims(&self) -> Vec<usize> {
        self.constraints
            .iter()
            .map(|c| c.map.output_dim(&self.layout))
            .collect()
    }

    /// The stacked right-hand side `R`.
    pub fn targets(&self) -> ConstraintVec {
        ConstraintVec {
            blocks: self
                .constraints
                .iter()
                .map(|c| c.target.matrix().clone())
                .collect(),
        }
    }

    /// `Phi(rho)`: every constraint block applied to `rho`.
    pub fn forward(&self, rho: &DMatrix<C64>) -> ConstraintVec {
        ConstraintVec {
            blocks: self
                .constraints
                .iter()
                .map(|c| c.map.apply(&self.layout, rho))
                .collect(),
        }
    }

    /// `Phi*(y)`: the adjoint of [`SdpProblem::forward`], a single operator
    /// on the program space.
    pub fn adjoint(&self, y: &ConstraintVec) -> DMatrix<C64> {
        let n = self.dim();
        let mut acc = DMatrix::<C64>::zeros(n, n);
        for (c, block) in self.constraints.iter().zip(&y.blocks) {
            acc += c.map.adjoint(&self.layout, block);
        }
        acc
    }
}

/// An element of the constraint space: one Hermitian block per constraint.
/// This is the type of the right-hand side `R` and of dual variables `Y`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintVec {
    blocks: Vec<DMatrix<C64>>,
}

impl ConstraintVec {
    pub fn new(blocks: Vec<DMatrix<C64>>) -> Self {
        Self { blocks }
    }

    pub fn zeros(dims: &[usize]) -> Self {
        Self {
            blocks: dims.iter().map(|&d| DMatrix::zeros(d, d)).collect(),
        }
    }

    pub fn blocks(&self) -> &[DMatrix<C64>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &DMatrix<C64> {
        &self.blocks[i]
    }

    pub fn block_mut(&mut self, i: usize) -> &mut DMatrix<C64> {
        &mut self.blocks[i]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.nrows()).collect()
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    /// Blockwise Hilbert-Schmidt inner product; real for Hermitian blocks.
    pub fn inner(&self, other: &Self) -> f64 {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| herm::hs_inner(a, b))
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).max(0.0).sqrt()
    }

    /// Largest deviation of any block from conjugate symmetry.
    pub fn max_asymmetry(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| herm::max_asymmetry(b))
            .fold(0.0, f64::max)
    }

    /// Isometric real coordinates: all blocks svec'd and concatenated.
    /// `u.to_reals() . v.to_reals() == u.inner(v)`, which lets the affine
    /// step work on an ordinary real Gram matrix.
    pub fn to_reals(&self) -> DVector<f64> {
        let total: usize = self.blocks.iter().map(|b| b.nrows() * b.nrows()).sum();
        let mut out = DVector::zeros(total);
        let mut at = 0;
        for b in &self.blocks {
            let v = svec(b);
            out.rows_mut(at, v.len()).copy_from(&v);
            at += v.len();
        }
        out
    }

    pub fn from_reals(dims: &[usize], v: &DVector<f64>) -> Self {
        let mut blocks = Vec::with_capacity(dims.len());
        let mut at = 0;
        for &d in dims {
            let len = d * d;
            blocks.push(unsvec(&v.rows(at, len).into_owned(), d));
            at += len;
        }
        assert_eq!(at, v.len(), "real coordinate length mismatch");
        Self { blocks }
    }
}

/// Real coordinates of a Hermitian `d x d` matrix: the `d` diagonal entries,
/// then for each upper-triangle position the real and imaginary parts scaled
/// by sqrt(2). The scaling makes the map an isometry for the
/// Hilbert-Schmidt inner product.
pub(crate) fn svec(m: &DMatrix<C64>) -> DVector<f64> {
    let d = m.nrows();
    let mut out = DVector::zeros(d * d);
    let mut at = 0;
    for i in 0..d {
        out[at] = m[(i, i)].re;
        at += 1;
    }
    let s = std::f64::consts::SQRT_2;
    for i in 0..d {
        for j in (i + 1)..d {
            out[at] = s * m[(i, j)].re;
            out[at + 1] = s * m[(i, j)].im;
            at += 2;
        }
    }
    out
}

pub(crate) fn unsvec(v: &DVector<f64>, d: usize) -> DMatrix<C64> {
    assert_eq!(v.len(), d * d);
    let mut m = DMatrix::<C64>::zeros(d, d);
    let mut at = 0;
    for i in 0..d {
        m[(i, i)] = C64::from(v[at]);
        at += 1;
    }
    let inv = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..d {
        for j in (i + 1)..d {
            let z = C64::new(v[at] * inv, v[at + 1] * inv);
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
            at += 2;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(rng: &mut ChaCha8Rng, d: usize) -> DMatrix<C64> {
        let raw = DMatrix::from_fn(d, d, |_, _| {
            C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        (&raw + raw.adjoint()).scale(0.5)
    }

    #[test]
    fn svec_is_an_isometry() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..64 {
            let a = random_hermitian(&mut rng, 5);
            let b = random_hermitian(&mut rng, 5);
            let lhs = svec(&a).dot(&svec(&b));
            let rhs = herm::hs_inner(&a, &b);
            assert!((lhs - rhs).abs() < 1e-12);
            assert!((unsvec(&svec(&a), 5) - &a).norm() < 1e-14);
        }
    }

    #[test]
    fn diagonal_fast_path_matches_dense_sandwich() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let layout = RegisterLayout::new(vec![2, 2]);
        let diag = DMatrix::from_diagonal(&DVector::from_fn(4, |_, _| {
            C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        }));
        // same operator, one copy laundered through a dense entry so the
        // diagonal detection cannot fire
        let mut dense = diag.clone();
        dense[(0, 1)] = C64::from(1e-300);
        let fast = SandwichTrace::new(vec![(1.0, diag)], vec![0]);
        let slow = SandwichTrace::new(vec![(1.0, dense)], vec![0]);
        for _ in 0..16 {
            let rho = random_hermitian(&mut rng, 4);
            assert!((fast.apply(&layout, &rho) - slow.apply(&layout, &rho)).norm() < 1e-12);
            let y = random_hermitian(&mut rng, 2);
            assert!((fast.adjoint(&layout, &y) - slow.adjoint(&layout, &y)).norm() < 1e-12);
        }
    }
}
