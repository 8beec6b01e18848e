//! Finite-dimensional Lie algebras given by structure constants.

mod catalog;

pub use catalog::{catalog, catalog_names, Advisory, CatalogEntry};

use serde::Serialize;

use crate::field::Field;
use crate::linalg::{self, LinalgError, Subspace};
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("bracket index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("bracket [e{i}, e{j}] must be stored with i < j")]
    StorageOrder { i: usize, j: usize },
    #[error("bracket [e{i}, e{j}] given twice")]
    DuplicateBracket { i: usize, j: usize },
    #[error("structure constants are not antisymmetric at ({i}, {j}, {k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("{0}")]
    Jacobi(JacobiViolation),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("structure constant {0} depends on t; definiteness is undefined")]
    UnorderedScalar(String),
    #[error("unknown catalog algebra {0:?}")]
    UnknownName(String),
}

/// First failing triple of the Jacobi identity, reported with 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("Jacobi identity fails at ({}, {}, {}): residual [{}]", triple[0], triple[1], triple[2], residual.join(", "))]
pub struct JacobiViolation {
    pub triple: [usize; 3],
    pub residual: Vec<String>,
}

/// A Lie algebra with basis `e_0 .. e_{n-1}` and
/// `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra<F> {
    name: String,
    dim: usize,
    constants: Vec<F>,
}

impl<F: Field> LieAlgebra<F> {
    /// Builds an algebra from its upper-triangular brackets `(i, j, [(k, c)])`
    /// with 0-based `i < j`, then checks the Jacobi identity.
    pub fn from_brackets<I>(name: impl Into<String>, dim: usize, brackets: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = (usize, usize, Vec<(usize, F)>)>,
    {
        let l = Self::from_brackets_unchecked(name, dim, brackets)?;
        l.jacobi_check().map_err(LieError::Jacobi)?;
        Ok(l)
    }

    /// Same as [`from_brackets`](Self::from_brackets) without the Jacobi check.
    /// Antisymmetry still holds by construction.
    pub fn from_brackets_unchecked<I>(
        name: impl Into<String>,
        dim: usize,
        brackets: I,
    ) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = (usize, usize, Vec<(usize, F)>)>,
    {
        let mut constants = vec![F::zero(); dim * dim * dim];
        let mut seen = vec![false; dim * dim];
        for (i, j, coeffs) in brackets {
            if i >= dim || j >= dim {
                return Err(LieError::IndexOutOfRange(format!("({i}, {j}) in dimension {dim}")));
            }
            if i >= j {
                return Err(LieError::StorageOrder { i, j });
            }
            if std::mem::replace(&mut seen[i * dim + j], true) {
                return Err(LieError::DuplicateBracket { i, j });
            }
            for (k, c) in coeffs {
                if k >= dim {
                    return Err(LieError::IndexOutOfRange(format!("k = {k} in dimension {dim}")));
                }
                constants[(i * dim + j) * dim + k] = constants[(i * dim + j) * dim + k].clone() + c.clone();
                constants[(j * dim + i) * dim + k] = constants[(j * dim + i) * dim + k].clone() - c;
            }
        }
        Ok(LieAlgebra { name: name.into(), dim, constants })
    }

    /// Builds an algebra from the full table `c[i][j][k]`, checking
    /// antisymmetry and the Jacobi identity.
    pub fn from_table(name: impl Into<String>, dim: usize, constants: Vec<F>) -> Result<Self, LieError> {
        if constants.len() != dim * dim * dim {
            return Err(LieError::DimensionMismatch { expected: dim * dim * dim, found: constants.len() });
        }
        let l = LieAlgebra { name: name.into(), dim, constants };
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    if l.c(i, j, k).clone() + l.c(j, i, k).clone() != F::zero() {
                        return Err(LieError::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        l.jacobi_check().map_err(LieError::Jacobi)?;
        Ok(l)
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra { name: format!("abelian{n}"), dim: n, constants: vec![F::zero(); n * n * n] }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `e_k` in `[e_i, e_j]`.
    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> &F {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[F] {
        &self.constants
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`, as `(i, j, [(k, c)])`.
    pub fn upper_brackets(&self) -> Vec<(usize, usize, Vec<(usize, F)>)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let coeffs: Vec<(usize, F)> = (0..n)
                    .filter(|&k| !self.c(i, j, k).is_zero())
                    .map(|k| (k, self.c(i, j, k).clone()))
                    .collect();
                if !coeffs.is_empty() {
                    out.push((i, j, coeffs));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(F::is_zero)
    }

    pub fn is_tau_free(&self) -> bool {
        self.constants.iter().all(|c| c.sign().is_some())
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for i in (0..n).filter(|&i| !x[i].is_zero()) {
            for j in (0..n).filter(|&j| !y[j].is_zero()) {
                let xy = x[i].clone() * y[j].clone();
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *slot = slot.clone() + xy.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    /// Matrix of `ad x`: column `j` holds `[x, e_j]`.
    pub fn ad(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim;
        let mut m = Matrix::<F>::zeros(n, n);
        for i in (0..n).filter(|&i| !x[i].is_zero()) {
            for j in 0..n {
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        m[(k, j)] = m[(k, j)].clone() + x[i].clone() * c.clone();
                    }
                }
            }
        }
        m
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k`.
    pub fn jacobi_check(&self) -> Result<(), JacobiViolation> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut res = vec![F::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for p in 0..n {
                            let ab = self.c(a, b, p);
                            if ab.is_zero() {
                                continue;
                            }
                            for (m, slot) in res.iter_mut().enumerate() {
                                let pc = self.c(p, c, m);
                                if !pc.is_zero() {
                                    *slot = slot.clone() + ab.clone() * pc.clone();
                                }
                            }
                        }
                    }
                    if res.iter().any(|r| !r.is_zero()) {
                        return Err(JacobiViolation {
                            triple: [i + 1, j + 1, k + 1],
                            residual: res.iter().map(|r| r.to_string()).collect(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn structure(&self) -> Structure<F> {
        let n = self.dim;
        // x in the center iff c[i][j][k] x_i sums to zero for every (j, k)
        let mut center_map = Matrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    center_map[(j * n + k, i)] = self.c(i, j, k).clone();
                }
            }
        }
        let center = linalg::kernel(&center_map);
        let derived = Subspace::span(
            n,
            (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| (0..n).map(|k| self.c(i, j, k).clone()).collect())
                .collect(),
        );
        let ads: Vec<Matrix<F>> = (0..n).map(|i| self.ad(&self.basis_vector(i))).collect();
        let mut killing = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = ads[i].mul(&ads[j]).trace();
                killing[(i, j)] = v.clone();
                killing[(j, i)] = v;
            }
        }
        let unimodular = ads.iter().all(|a| a.trace().is_zero());
        Structure { center, derived, killing, unimodular }
    }

    fn check_ambient(&self, s: &Subspace<F>) -> Result<(), LieError> {
        if s.ambient_dim() != self.dim {
            return Err(LieError::DimensionMismatch { expected: self.dim, found: s.ambient_dim() });
        }
        Ok(())
    }

    /// `[S, S] ⊆ S`.
    pub fn is_subalgebra(&self, s: &Subspace<F>) -> Result<bool, LieError> {
        self.check_ambient(s)?;
        let b = s.basis_vectors();
        Ok(b.iter().enumerate().all(|(a, x)| b[a + 1..].iter().all(|y| s.contains(&self.bracket(x, y)))))
    }

    /// `[g, S] ⊆ S`.
    pub fn is_ideal(&self, s: &Subspace<F>) -> Result<bool, LieError> {
        self.check_ambient(s)?;
        let b = s.basis_vectors();
        Ok((0..self.dim).all(|i| {
            let e = self.basis_vector(i);
            b.iter().all(|y| s.contains(&self.bracket(&e, y)))
        }))
    }

    /// Decides whether the algebra admits an ad-invariant inner product:
    /// center and derived algebra must be complementary and the Killing
    /// form must be negative definite on the derived algebra.
    pub fn compact_type(&self) -> Result<CompactTypeCertificate<F>, LieError> {
        if let Some(bad) = self.constants.iter().find(|c| c.sign().is_none()) {
            return Err(LieError::UnorderedScalar(bad.to_string()));
        }
        let Structure { center, derived, killing, .. } = self.structure();
        if center.dim() + derived.dim() != self.dim || center.sum(&derived).dim() != self.dim {
            return Ok(CompactTypeCertificate::No {
                obstruction: Obstruction::CenterDerivedNotComplementary,
            });
        }
        let d = derived.basis();
        let restricted = d.mul(&killing).mul(&d.transpose());
        let inertia = linalg::inertia(&restricted).map_err(|e| match e {
            LinalgError::UnorderedScalar(s) => LieError::UnorderedScalar(s),
            other => unreachable!("Killing form is symmetric: {other}"),
        })?;
        if inertia.negative != derived.dim() {
            return Ok(CompactTypeCertificate::No {
                obstruction: Obstruction::KillingNotNegDefOnDerived,
            });
        }
        Ok(CompactTypeCertificate::Yes { center, derived, killing_on_derived: restricted })
    }

    /// The quotient by an ideal. The quotient basis is the image of the
    /// standard basis vectors at the non-pivot columns of `h`'s reduced basis.
    pub fn quotient(&self, h: &Subspace<F>) -> Result<Quotient<F>, LieError> {
        if !self.is_ideal(h)? {
            return Err(LieError::NotAnIdeal);
        }
        let n = self.dim;
        let mut is_pivot = vec![false; n];
        for &p in h.pivots() {
            is_pivot[p] = true;
        }
        let kept: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        let m = kept.len();
        let project = |v: &[F]| -> Vec<F> {
            let r = h.reduce_vector(v);
            kept.iter().map(|&j| r[j].clone()).collect()
        };
        let mut proj = Matrix::zeros(m, n);
        for i in 0..n {
            for (a, v) in project(&self.basis_vector(i)).into_iter().enumerate() {
                proj[(a, i)] = v;
            }
        }
        let mut brackets = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                let br = project(&self.bracket(&self.basis_vector(kept[a]), &self.basis_vector(kept[b])));
                let coeffs: Vec<(usize, F)> =
                    br.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                if !coeffs.is_empty() {
                    brackets.push((a, b, coeffs));
                }
            }
        }
        let q = LieAlgebra::from_brackets(format!("{}/h", self.name), m, brackets)?;
        // proj must intertwine the brackets on every basis pair
        for i in 0..n {
            for j in i + 1..n {
                let lhs = proj.mul_vec(&self.bracket(&self.basis_vector(i), &self.basis_vector(j)));
                let rhs = q.bracket(&proj.column(i), &proj.column(j));
                assert_eq!(lhs, rhs, "quotient map fails to intertwine brackets");
            }
        }
        Ok(Quotient { algebra: q, proj, kept })
    }

    /// Block-diagonal sum; the basis of `self` comes first.
    pub fn direct_sum(&self, other: &LieAlgebra<F>) -> LieAlgebra<F> {
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 + n2;
        let mut constants = vec![F::zero(); n * n * n];
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    constants[(i * n + j) * n + k] = self.c(i, j, k).clone();
                }
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                for k in 0..n2 {
                    constants[((n1 + i) * n + n1 + j) * n + n1 + k] = other.c(i, j, k).clone();
                }
            }
        }
        LieAlgebra { name: format!("{}+{}", self.name, other.name), dim: n, constants }
    }

    /// The same algebra in the basis `f_a = sum_i p[i][a] e_i`.
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<LieAlgebra<F>, LieError> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n || linalg::rank(p) != n {
            return Err(LieError::DimensionMismatch { expected: n, found: linalg::rank(p) });
        }
        let cols: Vec<Vec<F>> = (0..n).map(|a| p.column(a)).collect();
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let br = self.bracket(&cols[a], &cols[b]);
                let coords = linalg::solve(p, &br).expect("p is invertible");
                let coeffs: Vec<(usize, F)> =
                    coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                if !coeffs.is_empty() {
                    brackets.push((a, b, coeffs));
                }
            }
        }
        LieAlgebra::from_brackets(self.name.clone(), n, brackets)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure<F> {
    pub center: Subspace<F>,
    pub derived: Subspace<F>,
    pub killing: Matrix<F>,
    pub unimodular: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Obstruction {
    CenterDerivedNotComplementary,
    KillingNotNegDefOnDerived,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompactTypeCertificate<F> {
    Yes {
        center: Subspace<F>,
        derived: Subspace<F>,
        killing_on_derived: Matrix<F>,
    },
    No {
        obstruction: Obstruction,
    },
}

impl<F> CompactTypeCertificate<F> {
    pub fn is_yes(&self) -> bool {
        matches!(self, CompactTypeCertificate::Yes { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient<F> {
    pub algebra: LieAlgebra<F>,
    /// `dim Q x dim L` matrix of the quotient map.
    pub proj: Matrix<F>,
    /// Coordinates of `L` whose images form the quotient basis.
    pub kept: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{definiteness, Definiteness};
    use crate::Scalar;
    use num_traits::Zero;

    fn int(n: i64) -> Scalar {
        Scalar::integer(n)
    }

    fn su2() -> LieAlgebra<Scalar> {
        catalog("su2").unwrap().algebra
    }

    fn sl2() -> LieAlgebra<Scalar> {
        catalog("sl2r").unwrap().algebra
    }

    fn heis() -> LieAlgebra<Scalar> {
        catalog("heis3").unwrap().algebra
    }

    fn span(n: usize, rows: &[&[i64]]) -> Subspace<Scalar> {
        Subspace::span(n, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// tr(ad x ad y) evaluated directly from brackets, independent of `ad`.
    fn killing_brute(l: &LieAlgebra<Scalar>, i: usize, j: usize) -> Scalar {
        let n = l.dim();
        let mut tr = Scalar::zero();
        for m in 0..n {
            let inner = l.bracket(&l.basis_vector(j), &l.basis_vector(m));
            let outer = l.bracket(&l.basis_vector(i), &inner);
            tr = tr + outer[m].clone();
        }
        tr
    }

    #[test]
    fn jacobi_on_known_algebras() {
        assert!(LieAlgebra::<Scalar>::abelian(3).jacobi_check().is_ok());
        assert!(su2().jacobi_check().is_ok());
        let bad = LieAlgebra::from_brackets_unchecked(
            "bad",
            3,
            vec![(0, 1, vec![(2, int(1))]), (0, 2, vec![(2, int(1))]), (1, 2, vec![(0, int(1))])],
        )
        .unwrap();
        let v = bad.jacobi_check().unwrap_err();
        assert_eq!(v.triple, [1, 2, 3]);
        // Jacobiator is [e2, e3] = e1
        assert_eq!(v.residual, vec!["1", "0", "0"]);
    }

    #[test]
    fn storage_rules() {
        let r = LieAlgebra::<Scalar>::from_brackets("x", 2, vec![(1, 0, vec![(0, int(1))])]);
        assert_eq!(r.unwrap_err(), LieError::StorageOrder { i: 1, j: 0 });
        let r = LieAlgebra::<Scalar>::from_brackets(
            "x",
            2,
            vec![(0, 1, vec![(0, int(1))]), (0, 1, vec![(1, int(1))])],
        );
        assert_eq!(r.unwrap_err(), LieError::DuplicateBracket { i: 0, j: 1 });
        let mut table = vec![Scalar::zero(); 8];
        table[1] = int(1); // c[0][0][1] nonzero
        assert!(matches!(
            LieAlgebra::from_table("x", 2, table),
            Err(LieError::NotAntisymmetric { .. })
        ));
    }

    #[test]
    fn structure_of_abelian() {
        let s = LieAlgebra::<Scalar>::abelian(4).structure();
        assert_eq!(s.center, Subspace::full(4));
        assert_eq!(s.derived, Subspace::zero(4));
        assert!(s.killing.is_zero());
        assert!(s.unimodular);
    }

    #[test]
    fn structure_of_sl2() {
        let l = sl2();
        let s = l.structure();
        // basis (h, e, f)
        assert_eq!(s.killing[(0, 0)], int(8));
        assert_eq!(s.killing[(1, 2)], int(4));
        assert_eq!(s.killing[(1, 1)], int(0));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(s.killing[(i, j)], killing_brute(&l, i, j));
            }
        }
        assert_eq!(s.center.dim(), 0);
        assert_eq!(s.derived, Subspace::full(3));
        assert!(s.unimodular);
    }

    #[test]
    fn structure_of_heisenberg() {
        let s = heis().structure();
        assert_eq!(s.center, span(3, &[&[0, 0, 1]]));
        assert_eq!(s.derived, span(3, &[&[0, 0, 1]]));
        assert!(s.killing.is_zero());
        assert!(s.unimodular);
    }

    #[test]
    fn aff1_is_not_unimodular() {
        let s = catalog("aff1").unwrap().algebra.structure();
        assert!(!s.unimodular);
    }

    #[test]
    fn su2_killing_is_minus_two_identity() {
        let l = su2();
        let k = l.structure().killing;
        assert_eq!(k, Matrix::identity(3).scale(&int(-2)));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k[(i, j)], killing_brute(&l, i, j));
            }
        }
        assert_eq!(definiteness(&k).unwrap(), Definiteness::NegDef);
    }

    #[test]
    fn subalgebra_and_ideal() {
        let l = sl2();
        assert!(l.is_ideal(&Subspace::zero(3)).unwrap());
        assert!(l.is_ideal(&Subspace::full(3)).unwrap());
        let e = span(3, &[&[0, 1, 0]]);
        assert!(l.is_subalgebra(&e).unwrap());
        assert!(!l.is_ideal(&e).unwrap());
        assert!(matches!(l.is_ideal(&Subspace::zero(2)), Err(LieError::DimensionMismatch { .. })));
        let ex2 = catalog("paper_ex2").unwrap();
        let h = ex2.subalgebra.unwrap();
        assert!(ex2.algebra.is_ideal(&h).unwrap());
    }

    #[test]
    fn compact_type_verdicts() {
        assert_eq!(
            sl2().compact_type().unwrap(),
            CompactTypeCertificate::No { obstruction: Obstruction::KillingNotNegDefOnDerived }
        );
        assert_eq!(
            heis().compact_type().unwrap(),
            CompactTypeCertificate::No { obstruction: Obstruction::CenterDerivedNotComplementary }
        );
        assert!(LieAlgebra::<Scalar>::abelian(3).compact_type().unwrap().is_yes());
        assert!(su2().compact_type().unwrap().is_yes());
        let r_su2 = LieAlgebra::abelian(1).direct_sum(&su2());
        match r_su2.compact_type().unwrap() {
            CompactTypeCertificate::Yes { center, derived, killing_on_derived } => {
                assert_eq!(center, span(4, &[&[1, 0, 0, 0]]));
                assert_eq!(derived.dim(), 3);
                assert_eq!(definiteness(&killing_on_derived).unwrap(), Definiteness::NegDef);
            }
            other => panic!("expected compact type, got {other:?}"),
        }
    }

    #[test]
    fn compact_type_rejects_tau_constants() {
        let l = LieAlgebra::from_brackets("x", 2, vec![(0, 1, vec![(1, Scalar::tau())])]).unwrap();
        assert!(matches!(l.compact_type(), Err(LieError::UnorderedScalar(_))));
    }

    #[test]
    fn quotients() {
        let l = su2();
        let q = l.quotient(&Subspace::full(3)).unwrap();
        assert_eq!(q.algebra.dim(), 0);
        let hq = heis().quotient(&span(3, &[&[0, 0, 1]])).unwrap();
        assert_eq!(hq.algebra.dim(), 2);
        assert!(hq.algebra.is_abelian());
        assert_eq!(hq.proj, Matrix::from_i64(2, 3, &[1, 0, 0, 0, 1, 0]));
        assert_eq!(l.quotient(&span(3, &[&[1, 0, 0]])), Err(LieError::NotAnIdeal));
    }

    #[test]
    fn tau_ideal_quotient_is_r_plus_su2() {
        let ex2 = catalog("paper_ex2").unwrap();
        let q = ex2.algebra.quotient(&ex2.subalgebra.unwrap()).unwrap();
        assert_eq!(q.algebra.dim(), 4);
        let s = q.algebra.structure();
        assert_eq!(s.center.dim(), 1);
        assert_eq!(s.derived.dim(), 3);
        assert!(q.algebra.is_tau_free());
        assert!(q.algebra.compact_type().unwrap().is_yes());
        // the kept coordinates are the third R factor and su(2)
        assert_eq!(q.kept, vec![2, 3, 4, 5]);
        // (0, 1, t, 0, 0, 0) lies in h, so e_2 maps to -t times the image of e_3
        assert_eq!(q.proj[(0, 1)], -Scalar::tau());
    }

    #[test]
    fn direct_sum_and_basis_change() {
        let s = LieAlgebra::abelian(1).direct_sum(&su2());
        assert!(s.jacobi_check().is_ok());
        assert_eq!(s.dim(), 4);
        let p = Matrix::from_i64(3, 3, &[1, 1, 0, 0, 1, 2, 0, 0, 1]);
        let t = su2().change_basis(&p).unwrap();
        assert!(t.jacobi_check().is_ok());
        assert!(t.compact_type().unwrap().is_yes());
        assert_ne!(t.constants(), su2().constants());
    }
}
