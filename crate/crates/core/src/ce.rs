//! Chevalley–Eilenberg cochains `Λ^• g*` and their cohomology.
//!
//! Cochains are coordinate vectors in the dual basis `e^S`, `S` running over
//! the lexicographic `k`-subsets of the basis. Every operator is a matrix
//! acting on column vectors.
//!
//! The differential is
//! `(dη)(ξ_0..ξ_k) = Σ_{i<j} (-1)^{i+j} η([ξ_i, ξ_j], ξ_0..ξ̂_i..ξ̂_j..ξ_k)`,
//! which in the dual basis gives
//! `D[T][S] = Σ (-1)^{i+j+pos_S(m)} c[t_i][t_j][m]` over pairs `i < j` of
//! positions in `T` and indices `m` with `T \ {t_i, t_j} ∪ {m} = S`.
//! With the cyclic basis of su(2) this yields `d e^1 = -e^2 ∧ e^3`.

use serde::Serialize;

use crate::exterior::{self, position, ExteriorBasis, SymmetricBasis};
use crate::field::Field;
use crate::liealg::{LieAlgebra, LieError};
use crate::linalg::{self, Subspace};
use crate::matrix::Matrix;

/// Largest symmetric power (number of monomials) built by
/// [`invariant_polynomials_dim`].
pub const MAX_SYMMETRIC_BASIS: usize = 20_000;

/// Largest algebra dimension for which whole Betti tables are computed
/// unless the caller explicitly asks for more.
pub const DEFAULT_MAX_DIM: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CeError {
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("d∘d is nonzero in degree {0}")]
    DSquaredNonzero(usize),
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("vector length {found} does not match algebra dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("symmetric power has {size} monomials, above the limit {limit}")]
    SymmetricPowerTooLarge { size: usize, limit: usize },
    #[error("the differential does not preserve the subspace in degree {0}")]
    NotPreserved(usize),
    #[error("dimension {dim} exceeds the default limit {limit}; request a single degree")]
    TooLarge { dim: usize, limit: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
}

fn check_vector<F: Field>(l: &LieAlgebra<F>, x: &[F]) -> Result<(), CeError> {
    if x.len() != l.dim() {
        return Err(CeError::DimensionMismatch { expected: l.dim(), found: x.len() });
    }
    Ok(())
}

/// Matrix of `d: Λ^k g* → Λ^{k+1} g*`.
pub fn ce_differential<F: Field>(l: &LieAlgebra<F>, k: usize) -> Result<Matrix<F>, CeError> {
    let n = l.dim();
    if k > n {
        return Err(CeError::DegreeOutOfRange { degree: k, max: n });
    }
    let source = ExteriorBasis::new(n, k);
    let target = ExteriorBasis::new(n, k + 1);
    let mut d = Matrix::<F>::zeros(target.len(), source.len());
    for (row, &t) in target.subsets().iter().enumerate() {
        let elems = exterior::elements(t);
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                let rest = t & !(1 << elems[i]) & !(1 << elems[j]);
                for m in 0..n {
                    let c = l.c(elems[i], elems[j], m);
                    if c.is_zero() || exterior::contains(rest, m) {
                        continue;
                    }
                    let s = rest | 1 << m;
                    let col = source.position_of(s).expect("k-subset");
                    let sign = exterior::sign_of(i + j + position(s, m));
                    let term = if sign > 0 { c.clone() } else { -c.clone() };
                    d[(row, col)] = d[(row, col)].clone() + term;
                }
            }
        }
    }
    Ok(d)
}

/// Matrix of the contraction `ι_X: Λ^k → Λ^{k-1}`, `(ι_X η)(ξ..) = η(X, ξ..)`.
/// For `k = 0` the target is the zero space.
pub fn contraction<F: Field>(l: &LieAlgebra<F>, x: &[F], k: usize) -> Result<Matrix<F>, CeError> {
    check_vector(l, x)?;
    let n = l.dim();
    if k > n {
        return Err(CeError::DegreeOutOfRange { degree: k, max: n });
    }
    let source = ExteriorBasis::new(n, k);
    if k == 0 {
        return Ok(Matrix::zeros(0, source.len()));
    }
    let target = ExteriorBasis::new(n, k - 1);
    let mut m = Matrix::<F>::zeros(target.len(), source.len());
    for (col, &s) in source.subsets().iter().enumerate() {
        for j in exterior::elements(s) {
            if x[j].is_zero() {
                continue;
            }
            let row = target.position_of(s & !(1 << j)).expect("(k-1)-subset");
            let v = if position(s, j) % 2 == 0 { x[j].clone() } else { -x[j].clone() };
            m[(row, col)] = m[(row, col)].clone() + v;
        }
    }
    Ok(m)
}

/// Matrix of the coadjoint action `ad*(X)` on `Λ^k`, the derivation
/// extending `ad*(X) α = -α ∘ ad X` on `g*`.
pub fn coadjoint<F: Field>(l: &LieAlgebra<F>, x: &[F], k: usize) -> Result<Matrix<F>, CeError> {
    check_vector(l, x)?;
    let n = l.dim();
    if k > n {
        return Err(CeError::DegreeOutOfRange { degree: k, max: n });
    }
    let basis = ExteriorBasis::new(n, k);
    let ad = l.ad(x);
    let mut m = Matrix::<F>::zeros(basis.len(), basis.len());
    // (ad*(X) e^S)(e_T) = -Σ_i e^S(e_t1, .., [X, e_ti], .., e_tk)
    for (row, &t) in basis.subsets().iter().enumerate() {
        for (i, ti) in exterior::elements(t).into_iter().enumerate() {
            let rest = t & !(1 << ti);
            for mm in 0..n {
                let a = &ad[(mm, ti)];
                if a.is_zero() || exterior::contains(rest, mm) {
                    continue;
                }
                let s = rest | 1 << mm;
                let col = basis.position_of(s).expect("k-subset");
                let moved = i.abs_diff(position(s, mm));
                let v = if moved % 2 == 0 { -a.clone() } else { a.clone() };
                m[(row, col)] = m[(row, col)].clone() + v;
            }
        }
    }
    Ok(m)
}

/// Graded dimensions with differentials `D_k: C^k → C^{k+1}`
/// (`diff[k]` is `dims[k+1] x dims[k]`, and `diff[N]` maps to zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainComplex<F> {
    pub dims: Vec<usize>,
    pub diff: Vec<Matrix<F>>,
    /// When present, `embed[k]` is the `(n choose k) x dims[k]` inclusion into
    /// the full cochains `Λ^k g*`.
    pub embed: Option<Vec<Matrix<F>>>,
}

impl<F: Field> CochainComplex<F> {
    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    /// Zero-width map into degree `k` from degree `k - 1` (zero space when `k = 0`).
    pub fn incoming(&self, k: usize) -> Matrix<F> {
        if k == 0 {
            Matrix::zeros(self.dims[0], 0)
        } else {
            self.diff[k - 1].clone()
        }
    }

    /// First degree where `D_{k+1} D_k` is nonzero.
    pub fn d_squared_defect(&self) -> Option<usize> {
        (0..self.diff.len().saturating_sub(1))
            .find(|&k| !self.diff[k + 1].mul(&self.diff[k]).is_zero())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| exterior::sign_of(k) * d as i64)
            .sum()
    }
}

/// The full complex `(Λ^• g*, d)`.
pub fn full_complex<F: Field>(l: &LieAlgebra<F>) -> CochainComplex<F> {
    let n = l.dim();
    CochainComplex {
        dims: (0..=n).map(|k| exterior::exterior_dim(n, k)).collect(),
        diff: (0..=n).map(|k| ce_differential(l, k).expect("k <= n")).collect(),
        embed: None,
    }
}

/// Restricts the full complex to the given per-degree subspaces, verifying
/// that the differential maps each into the next.
fn restrict<F: Field>(l: &LieAlgebra<F>, spaces: Vec<Subspace<F>>) -> Result<CochainComplex<F>, CeError> {
    let n = l.dim();
    let mut diff = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let d = ce_differential(l, k)?;
        let rows = if k < n { spaces[k + 1].dim() } else { 0 };
        let mut sub = Matrix::zeros(rows, spaces[k].dim());
        for (col, v) in spaces[k].basis_vectors().iter().enumerate() {
            let image = d.mul_vec(v);
            if k == n {
                continue;
            }
            let coords = spaces[k + 1].coordinates(&image).ok_or(CeError::NotPreserved(k))?;
            for (row, c) in coords.into_iter().enumerate() {
                sub[(row, col)] = c;
            }
        }
        diff.push(sub);
    }
    Ok(CochainComplex {
        dims: spaces.iter().map(Subspace::dim).collect(),
        diff,
        embed: Some(spaces.iter().map(|s| s.basis().transpose()).collect()),
    })
}

/// `C(g, h) = {α : ι_X α = 0 and ad*(X) α = 0 for all X in h}`.
pub fn relative_complex<F: Field>(l: &LieAlgebra<F>, h: &Subspace<F>) -> Result<CochainComplex<F>, CeError> {
    if !l.is_subalgebra(h)? {
        return Err(CeError::NotASubalgebra);
    }
    let n = l.dim();
    let generators = h.basis_vectors();
    let mut spaces = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let width = exterior::exterior_dim(n, k);
        let mut blocks = Vec::new();
        for x in &generators {
            blocks.push(contraction(l, x, k)?);
            blocks.push(coadjoint(l, x, k)?);
        }
        spaces.push(if blocks.is_empty() {
            Subspace::full(width)
        } else {
            linalg::kernel(&Matrix::vstack(width, &blocks))
        });
    }
    restrict(l, spaces)
}

/// The ad*-invariant cochains `(Λ^• g*)^g`.
pub fn invariant_complex<F: Field>(l: &LieAlgebra<F>) -> CochainComplex<F> {
    let n = l.dim();
    let mut spaces = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let width = exterior::exterior_dim(n, k);
        let blocks: Vec<Matrix<F>> = (0..n)
            .map(|i| coadjoint(l, &l.basis_vector(i), k).expect("k <= n"))
            .collect();
        spaces.push(if l.is_abelian() || blocks.is_empty() {
            Subspace::full(width)
        } else {
            linalg::kernel(&Matrix::vstack(width, &blocks))
        });
    }
    restrict(l, spaces).expect("the differential commutes with ad*")
}

/// Cohomology dimensions and canonical representative cocycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable<F> {
    pub betti: Vec<usize>,
    /// Per degree, representatives in full `Λ^k g*` coordinates when the
    /// complex carries an embedding, otherwise in the complex's own basis.
    pub representatives: Vec<Vec<Vec<F>>>,
    pub route: String,
}

impl<F> BettiTable<F> {
    pub fn euler(&self) -> i64 {
        self.betti.iter().enumerate().map(|(k, &b)| exterior::sign_of(k) * b as i64).sum()
    }
}

/// Cohomology in degree `k`: `(b_k, representatives)`.
pub fn betti_at<F: Field>(c: &CochainComplex<F>, k: usize) -> Result<(usize, Vec<Vec<F>>), CeError> {
    let top = c.top_degree();
    if k > top {
        return Err(CeError::DegreeOutOfRange { degree: k, max: top });
    }
    let incoming = c.incoming(k);
    if !c.diff[k].mul(&incoming).is_zero() {
        return Err(CeError::DSquaredNonzero(k.saturating_sub(1)));
    }
    let cocycles = linalg::kernel(&c.diff[k]);
    let boundaries = linalg::column_space(&incoming);
    let complement = cocycles.complement_of(&boundaries);
    let b = cocycles.dim() - boundaries.dim();
    debug_assert_eq!(complement.dim(), b);
    let reps = complement
        .basis_vectors()
        .into_iter()
        .map(|v| match &c.embed {
            Some(e) => e[k].mul_vec(&v),
            None => v,
        })
        .collect();
    Ok((b, reps))
}

pub fn betti<F: Field>(c: &CochainComplex<F>, route: impl Into<String>) -> Result<BettiTable<F>, CeError> {
    if let Some(k) = c.d_squared_defect() {
        return Err(CeError::DSquaredNonzero(k));
    }
    let mut betti = Vec::with_capacity(c.dims.len());
    let mut representatives = Vec::with_capacity(c.dims.len());
    for k in 0..c.dims.len() {
        let (b, reps) = betti_at(c, k)?;
        betti.push(b);
        representatives.push(reps);
    }
    Ok(BettiTable { betti, representatives, route: route.into() })
}

/// `H^•(g)` from the full complex.
pub fn lie_algebra_cohomology<F: Field>(l: &LieAlgebra<F>) -> Result<BettiTable<F>, CeError> {
    betti(&full_complex(l), "full")
}

/// `H^k(g)` for a single degree, building only the two differentials needed.
pub fn lie_algebra_cohomology_at<F: Field>(l: &LieAlgebra<F>, k: usize) -> Result<(usize, Vec<Vec<F>>), CeError> {
    let n = l.dim();
    if k > n {
        return Err(CeError::DegreeOutOfRange { degree: k, max: n });
    }
    let dk = ce_differential(l, k)?;
    let incoming = if k == 0 { Matrix::zeros(1, 0) } else { ce_differential(l, k - 1)? };
    let cocycles = linalg::kernel(&dk);
    let boundaries = linalg::column_space(&incoming);
    let reps = cocycles.complement_of(&boundaries).basis_vectors();
    Ok((cocycles.dim() - boundaries.dim(), reps))
}

/// Matrix of `ad*(X)` on `S^i g*` in the monomial basis.
pub fn symmetric_coadjoint<F: Field>(l: &LieAlgebra<F>, x: &[F], basis: &SymmetricBasis) -> Matrix<F> {
    let n = l.dim();
    let ad = l.ad(x);
    let mut m = Matrix::<F>::zeros(basis.len(), basis.len());
    // ad*(X) x_m = -Σ_j ad[m][j] x_j, extended as a derivation on monomials
    for col in 0..basis.len() {
        let mono = basis.monomial(col);
        for p in 0..mono.len() {
            if p > 0 && mono[p] == mono[p - 1] {
                continue;
            }
            let mult = mono.iter().filter(|&&v| v == mono[p]).count() as i64;
            for j in 0..n {
                let a = &ad[(mono[p], j)];
                if a.is_zero() {
                    continue;
                }
                let mut target = mono.to_vec();
                target[p] = j;
                target.sort_unstable();
                let row = basis.position_of(&target).expect("monomial");
                m[(row, col)] = m[(row, col)].clone() - F::from_integer(mult) * a.clone();
            }
        }
    }
    m
}

/// `dim (S^i g*)^g`.
pub fn invariant_polynomials_dim<F: Field>(l: &LieAlgebra<F>, i: usize) -> Result<usize, CeError> {
    let n = l.dim();
    let size = exterior::symmetric_dim(n, i);
    if size > MAX_SYMMETRIC_BASIS {
        return Err(CeError::SymmetricPowerTooLarge { size, limit: MAX_SYMMETRIC_BASIS });
    }
    if l.is_abelian() {
        return Ok(size);
    }
    let basis = SymmetricBasis::new(n, i);
    let blocks: Vec<Matrix<F>> =
        (0..n).map(|a| symmetric_coadjoint(l, &l.basis_vector(a), &basis)).collect();
    Ok(size - linalg::rank(&Matrix::vstack(size, &blocks)))
}

/// Dimensions of the E₁ page `E₁^{i,j} = (S^i g*)^g ⊗ H^{j-i}(M, F)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct E1Table {
    /// `invariants[i] = dim (S^i g*)^g`.
    pub invariants: Vec<usize>,
    pub basic_betti: Vec<usize>,
    /// `entries[i][j]` for `0 <= i <= i_max`, `0 <= j < i_max + basic_betti.len()`.
    pub entries: Vec<Vec<usize>>,
}

pub fn e1_table<F: Field>(l: &LieAlgebra<F>, basic_betti: &[usize], i_max: usize) -> Result<E1Table, CeError> {
    let invariants = (0..=i_max)
        .map(|i| invariant_polynomials_dim(l, i))
        .collect::<Result<Vec<_>, _>>()?;
    let width = i_max + basic_betti.len();
    let entries = invariants
        .iter()
        .enumerate()
        .map(|(i, &inv)| {
            (0..width)
                .map(|j| {
                    j.checked_sub(i)
                        .and_then(|q| basic_betti.get(q))
                        .map_or(0, |&b| inv * b)
                })
                .collect()
        })
        .collect();
    Ok(E1Table { invariants, basic_betti: basic_betti.to_vec(), entries })
}
