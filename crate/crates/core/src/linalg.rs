//! Deterministic exact linear algebra: reduced echelon forms, kernels,
//! linear solves, canonical subspaces and symmetric-form inertia.
//!
//! Forward elimination is fraction-free (Bareiss): each update is
//! `row_i <- (p * row_i - a * row_r) / p_prev`, which keeps integer inputs
//! integral and bounds coefficient growth by the size of the minors. A final
//! pass normalizes pivots to one and clears above them. Pivots are chosen as
//! the first nonzero entry of the leftmost usable column, so every reduced
//! form, and everything downstream of it, is reproducible.

use std::cmp::Ordering;

use serde::Serialize;

use crate::field::Field;
use crate::matrix::{dot, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("right-hand side is not in the column space")]
    NoSolution,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("entry {0} depends on t and carries no canonical order")]
    UnorderedScalar(String),
}

/// Output of [`rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref<F> {
    pub rref: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub kernel: Subspace<F>,
}

/// Fraction-free forward elimination to row echelon form. Returns pivot columns.
fn echelon<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut prev = F::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let pivot = m[(r, c)].clone();
        let unit_prev = prev.is_one();
        for i in r + 1..rows {
            let a = m[(i, c)].clone();
            for j in c + 1..cols {
                let lhs = &m[(i, j)];
                let rhs = &m[(r, j)];
                if lhs.is_zero() && (a.is_zero() || rhs.is_zero()) {
                    continue;
                }
                let mut v = pivot.clone() * lhs.clone();
                if !a.is_zero() && !rhs.is_zero() {
                    v = v - a.clone() * rhs.clone();
                }
                if !unit_prev {
                    v = v / prev.clone();
                }
                m[(i, j)] = v;
            }
            m[(i, c)] = F::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Normalizes an echelon form in place to reduced form.
fn reduce<F: Field>(m: &mut Matrix<F>, pivots: &[usize]) {
    let cols = m.cols();
    for (r, &c) in pivots.iter().enumerate().rev() {
        let inv = m[(r, c)].inv();
        for j in c..cols {
            if !m[(r, j)].is_zero() {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
        }
        for i in 0..r {
            let a = m[(i, c)].clone();
            if a.is_zero() {
                continue;
            }
            for j in c..cols {
                let rv = &m[(r, j)];
                if rv.is_zero() {
                    continue;
                }
                let delta = a.clone() * rv.clone();
                m[(i, j)] = m[(i, j)].clone() - delta;
            }
        }
    }
}

fn reduced<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut work = m.clone();
    let pivots = echelon(&mut work);
    reduce(&mut work, &pivots);
    (work, pivots)
}

/// Null space from a reduced form: one basis vector per free column, built
/// so that the resulting basis is already in reduced echelon form.
fn kernel_from_rref<F: Field>(r: &Matrix<F>, pivots: &[usize]) -> Subspace<F> {
    let cols = r.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (row, &p) in pivots.iter().enumerate() {
            let a = &r[(row, free)];
            if !a.is_zero() {
                v[p] = -a.clone();
            }
        }
        basis.push(v);
    }
    // The vectors above are independent; reduce them to canonical form.
    Subspace::span(cols, basis)
}

/// Reduced row echelon form, rank and kernel of `m`.
pub fn rref<F: Field>(m: &Matrix<F>) -> Rref<F> {
    let (r, pivots) = reduced(m);
    let kernel = kernel_from_rref(&r, &pivots);
    let rank = pivots.len();
    Rref { rref: r, rank, pivots, kernel }
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut work = m.clone();
    echelon(&mut work).len()
}

pub fn kernel<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let (r, pivots) = reduced(m);
    kernel_from_rref(&r, &pivots)
}

/// Solves `m x = b`. Free variables are set to zero, so the returned
/// solution is the canonical one.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Result<Vec<F>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch { expected: m.rows(), found: b.len() });
    }
    let aug = m.with_column(b);
    let (r, pivots) = reduced(&aug);
    if pivots.last() == Some(&m.cols()) {
        return Err(LinalgError::NoSolution);
    }
    let mut x = vec![F::zero(); m.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, m.cols())].clone();
    }
    Ok(x)
}

/// A linear subspace of `F^ambient_dim`, stored by its reduced echelon basis.
///
/// Because the reduced basis is unique, two subspaces are equal as sets
/// exactly when they compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient_dim: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<F>>) -> Self {
        let m = Matrix::from_rows(ambient_dim, vectors);
        let (mut r, pivots) = reduced(&m);
        r.truncate_rows(pivots.len());
        Subspace { ambient_dim, basis: r, pivots }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    ///
    /// For a reduced basis the coordinates are simply the entries of `v` at
    /// the pivot columns; membership is then confirmed by reconstruction.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length differs from ambient dimension");
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let residual = self.reduce_vector(v);
        residual.iter().all(F::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `v` minus its component along the basis, measured at pivot columns.
    /// The result vanishes at every pivot column, and is zero iff `v` is in
    /// the subspace.
    pub fn reduce_vector(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            let a = out[p].clone();
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    out[j] = out[j].clone() - a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn is_subset_of(&self, other: &Subspace<F>) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.basis.row_vecs().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.ambient_dim, rows)
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Subspace<F> {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// `{w : b . w = 0 for every basis vector b}`, in the same coordinates.
    pub fn annihilator(&self) -> Subspace<F> {
        kernel(&self.basis)
    }

    /// Canonical complement of `inner` inside `self`: the vectors of `self`
    /// vanishing at every pivot column of `inner`, in reduced form.
    pub fn complement_of(&self, inner: &Subspace<F>) -> Subspace<F> {
        let reduced: Vec<Vec<F>> =
            self.basis_vectors().iter().map(|v| inner.reduce_vector(v)).collect();
        Subspace::span(self.ambient_dim, reduced)
    }

    /// The image of this subspace under `m` (column-vector convention).
    pub fn image_under(&self, m: &Matrix<F>) -> Subspace<F> {
        assert_eq!(m.cols(), self.ambient_dim);
        let rows = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.rows(), rows)
    }
}

/// Column space of `m` as a subspace of `F^rows`.
pub fn column_space<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    Subspace::span(m.rows(), m.transpose().row_vecs())
}

/// Sylvester inertia of a symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Definiteness {
    PosDef,
    NegDef,
    PosSemi,
    NegSemi,
    Indefinite,
    Zero,
}

impl Inertia {
    pub fn classify(&self) -> Definiteness {
        let n = self.positive + self.negative + self.zero;
        match (self.positive, self.negative) {
            (0, 0) => Definiteness::Zero,
            (p, 0) if p == n => Definiteness::PosDef,
            (0, q) if q == n => Definiteness::NegDef,
            (_, 0) => Definiteness::PosSemi,
            (0, _) => Definiteness::NegSemi,
            _ => Definiteness::Indefinite,
        }
    }
}

/// Inertia by symmetric (congruence) elimination.
///
/// At each step a nonzero diagonal pivot is eliminated symmetrically and its
/// sign recorded. When the remaining diagonal is zero but some `a_ij` is not,
/// row/column `i` is replaced by `i + j`, creating the diagonal entry
/// `2 a_ij`. When everything left is zero, the rest counts toward the kernel.
pub fn inertia<F: Field>(s: &Matrix<F>) -> Result<Inertia, LinalgError> {
    if !s.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    if let Some(bad) = s.entries().iter().find(|e| e.sign().is_none()) {
        return Err(LinalgError::UnorderedScalar(bad.to_string()));
    }
    let mut a = s.clone();
    let n = a.rows();
    let mut result = Inertia { positive: 0, negative: 0, zero: 0 };
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[(i, i)].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = active.iter().enumerate().find_map(|(x, &i)| {
                    active[x + 1..].iter().copied().find(|&j| !a[(i, j)].is_zero()).map(|j| (i, j))
                });
                let Some((i, j)) = pair else {
                    result.zero += active.len();
                    break;
                };
                // row_i += row_j, then col_i += col_j
                for &c in &active {
                    let v = a[(j, c)].clone();
                    a[(i, c)] = a[(i, c)].clone() + v;
                }
                for &r in &active {
                    let v = a[(r, j)].clone();
                    a[(r, i)] = a[(r, i)].clone() + v;
                }
                i
            }
        };
        let d = a[(p, p)].clone();
        match d.sign() {
            Some(Ordering::Greater) => result.positive += 1,
            Some(Ordering::Less) => result.negative += 1,
            _ => unreachable!("pivot is nonzero and ordered"),
        }
        active.retain(|&i| i != p);
        for &i in &active {
            let f = a[(i, p)].clone() / d.clone();
            if f.is_zero() {
                continue;
            }
            for &j in &active {
                let v = a[(p, j)].clone();
                if !v.is_zero() {
                    a[(i, j)] = a[(i, j)].clone() - f.clone() * v;
                }
            }
        }
    }
    Ok(result)
}

pub fn definiteness<F: Field>(s: &Matrix<F>) -> Result<Definiteness, LinalgError> {
    inertia(s).map(|i| i.classify())
}

/// Residual `m x - b`; handy for verifying a returned solution exactly.
pub fn residual<F: Field>(m: &Matrix<F>, x: &[F], b: &[F]) -> Vec<F> {
    (0..m.rows())
        .map(|i| dot(m.row(i), x) - b[i].clone())
        .collect()
}
