//! Linear foliations of the torus `T^n = R^n / Z^n`.
//!
//! A foliation is given by its tangent space `h ⊂ R^n` with entries in ℚ(t).
//! Leaf closures are translates of the subtorus whose Lie algebra is the
//! rational hull of `h`. Forms are trigonometric polynomials in `2πk·x` with
//! constant exterior coefficients, so everything here is exact: basic
//! cohomology mode by mode, the averaging projection over the closure
//! subtorus, and explicit primitives for `A(β) - β`.
//!
//! Powers of `2π` are tracked symbolically by [`TwoPiLaurent`].

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::ce::{self, BettiTable, CochainComplex};
use crate::exterior::{self, ExteriorBasis, Mask};
use crate::field::Field;
use crate::linalg::Subspace;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Default half-width of the mode box for acyclicity checks.
pub const DEFAULT_MODE_BOX: i64 = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorusError {
    #[error("generator {index} has length {found}, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, found: usize },
    #[error("foliation generators are linearly dependent")]
    DependentGenerators,
    #[error("form is not closed")]
    NotClosed,
    #[error("mode {mode:?} has length {found}, expected {expected}")]
    ModeLength { mode: Vec<i64>, expected: usize, found: usize },
    #[error("subset {subset:?} does not have {degree} distinct indices below {n}")]
    BadSubset { subset: Vec<usize>, degree: usize, n: usize },
    #[error("torus dimension {0} exceeds 63")]
    TooLarge(usize),
}

/// A linear foliation of `T^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusFoliation {
    pub n: usize,
    /// Tangent space of the leaves.
    pub h: Subspace<Scalar>,
    /// Lie algebra of the leaf closures: the smallest rational subspace containing `h`.
    pub closure: Subspace<BigRational>,
    /// Rational covectors vanishing on `h`; its integer points are the basic modes.
    pub k0: Subspace<BigRational>,
}

/// Splits `v` into rational layers `v = (Σ_j t^j layer_j) / D` after clearing
/// the common denominator `D`.
fn tau_layers(v: &[Scalar]) -> Vec<Vec<BigRational>> {
    let common = v
        .iter()
        .fold(Scalar::one(), |acc, x| acc * Scalar::from_poly_coeffs(x.denominator_coeffs()));
    let polys: Vec<Vec<BigRational>> = v.iter().map(|x| (x.clone() * common.clone()).numerator_coeffs()).collect();
    let depth = polys.iter().map(Vec::len).max().unwrap_or(0);
    (0..depth)
        .map(|j| polys.iter().map(|p| p.get(j).cloned().unwrap_or_else(BigRational::zero)).collect())
        .collect()
}

pub fn build_foliation(n: usize, generators: &[Vec<Scalar>]) -> Result<TorusFoliation, TorusError> {
    if n > 63 {
        return Err(TorusError::TooLarge(n));
    }
    for (index, g) in generators.iter().enumerate() {
        if g.len() != n {
            return Err(TorusError::DimensionMismatch { index, expected: n, found: g.len() });
        }
    }
    let h = Subspace::span(n, generators.to_vec());
    if h.dim() != generators.len() {
        return Err(TorusError::DependentGenerators);
    }
    let layers: Vec<Vec<BigRational>> = generators.iter().flat_map(|g| tau_layers(g)).collect();
    let closure = Subspace::span(n, layers);
    let k0 = closure.annihilator();
    Ok(TorusFoliation { n, h, closure, k0 })
}

fn rational_dot(k: &[i64], u: &[BigRational]) -> BigRational {
    k.iter().zip(u).map(|(&a, b)| b * BigRational::from_integer(a.into())).sum()
}

fn to_scalars(k: &[i64]) -> Vec<Scalar> {
    k.iter().map(|&a| Scalar::integer(a)).collect()
}

impl TorusFoliation {
    pub fn codim(&self) -> usize {
        self.n - self.h.dim()
    }

    /// True when `k` annihilates the closure, i.e. the mode is basic.
    pub fn is_basic_mode(&self, k: &[i64]) -> bool {
        self.closure.basis_vectors().iter().all(|u| rational_dot(k, u).is_zero())
    }

    /// Nonzero integer points of `k0` with `|k_i| <= bound`, lexicographically
    /// positive, in lexicographic order.
    pub fn basic_modes(&self, bound: i64) -> Vec<Vec<i64>> {
        let basis = self.k0.basis_vectors();
        let pivots = self.k0.pivots().to_vec();
        let mut out = Vec::new();
        if basis.is_empty() {
            return out;
        }
        // An element of k0 is fixed by its pivot coordinates.
        let mut coords = vec![-bound; basis.len()];
        loop {
            let mut k = vec![BigRational::zero(); self.n];
            for (c, b) in coords.iter().zip(&basis) {
                for (ki, bi) in k.iter_mut().zip(b) {
                    *ki += bi * BigRational::from_integer((*c).into());
                }
            }
            debug_assert!(pivots.iter().zip(&coords).all(|(&p, &c)| k[p] == BigRational::from_integer(c.into())));
            if k.iter().all(|x| x.is_integer() && x.abs() <= BigRational::from_integer(bound.into())) {
                let k: Vec<i64> = k.iter().map(|x| x.to_integer().to_i64().expect("bounded")).collect();
                if lex_sign(&k) > 0 {
                    out.push(k);
                }
            }
            let mut i = coords.len();
            loop {
                if i == 0 {
                    out.sort();
                    return out;
                }
                i -= 1;
                if coords[i] < bound {
                    coords[i] += 1;
                    break;
                }
                coords[i] = -bound;
            }
        }
    }
}

fn lex_sign(k: &[i64]) -> i64 {
    k.iter().find(|&&x| x != 0).map_or(0, |x| x.signum())
}

/// Constant-coefficient form on `R^n`: subset mask to coefficient, zeros omitted.
type ConstForm = BTreeMap<Mask, Scalar>;

fn add_into(form: &mut ConstForm, mask: Mask, c: Scalar) {
    let sum = form.remove(&mask).unwrap_or_else(Scalar::zero) + c;
    if !sum.is_zero() {
        form.insert(mask, sum);
    }
}

/// `a ∧ form` for a covector `a`.
fn wedge1(a: &[Scalar], form: &ConstForm) -> ConstForm {
    let mut out = ConstForm::new();
    for (j, aj) in a.iter().enumerate() {
        if aj.is_zero() {
            continue;
        }
        for (&s, c) in form {
            if exterior::contains(s, j) {
                continue;
            }
            let sign = exterior::sign_of(exterior::position(s, j));
            add_into(&mut out, s | 1 << j, Scalar::integer(sign) * aj.clone() * c.clone());
        }
    }
    out
}

/// Contraction `ι_u form`.
fn contract(u: &[Scalar], form: &ConstForm) -> ConstForm {
    let mut out = ConstForm::new();
    for (&s, c) in form {
        for j in exterior::elements(s) {
            if u[j].is_zero() {
                continue;
            }
            let sign = exterior::sign_of(exterior::position(s, j));
            add_into(&mut out, s & !(1 << j), Scalar::integer(sign) * u[j].clone() * c.clone());
        }
    }
    out
}

fn scale_form(c: &Scalar, form: &ConstForm) -> ConstForm {
    let mut out = ConstForm::new();
    for (&s, x) in form {
        add_into(&mut out, s, c.clone() * x.clone());
    }
    out
}

fn form_to_vector(form: &ConstForm, basis: &ExteriorBasis) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); basis.len()];
    for (&s, c) in form {
        v[basis.position_of(s).expect("degree matches")] = c.clone();
    }
    v
}

fn vector_to_form(v: &[Scalar], basis: &ExteriorBasis) -> ConstForm {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (basis.subset(i), c.clone()))
        .collect()
}

/// `Λ^•(ann h)` inside `Λ^•(R^n)*`: per degree, the wedge monomials of the
/// annihilator basis.
fn annihilator_monomials(f: &TorusFoliation) -> Vec<Vec<ConstForm>> {
    let a = f.h.annihilator().basis_vectors();
    let m = a.len();
    (0..=m)
        .map(|d| {
            ExteriorBasis::new(m, d)
                .subsets()
                .iter()
                .map(|&s| {
                    let mut form = ConstForm::from([(0, Scalar::one())]);
                    for i in exterior::elements(s).into_iter().rev() {
                        form = wedge1(&a[i], &form);
                    }
                    form
                })
                .collect()
        })
        .collect()
}

/// Acyclicity evidence for one nonzero basic mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModeCertificate {
    pub mode: Vec<i64>,
    /// Index (0-based) of the coordinate vector `u = e_j` used by the homotopy.
    pub u_index: usize,
    pub k_dot_u: i64,
    /// `ε(k♭)ι_u + ι_u ε(k♭) = (k·u)·id` holds on every basis element.
    pub homotopy_identity: bool,
    /// Betti numbers of `(Λ^•(ann h), k♭ ∧ ·)`.
    pub betti: Vec<usize>,
}

impl ModeCertificate {
    pub fn acyclic(&self) -> bool {
        self.homotopy_identity && self.betti.iter().all(|&b| b == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicCohomology {
    pub table: BettiTable<Scalar>,
    pub mode_box: i64,
    pub certificates: Vec<ModeCertificate>,
}

impl BasicCohomology {
    pub fn all_acyclic(&self) -> bool {
        self.certificates.iter().all(ModeCertificate::acyclic)
    }
}

fn mode_certificate(k: &[i64], monomials: &[Vec<ConstForm>], n: usize) -> ModeCertificate {
    let j = k.iter().position(|&x| x != 0).expect("nonzero mode");
    let kf = to_scalars(k);
    let mut u = vec![Scalar::zero(); n];
    u[j] = Scalar::one();
    let ku = Scalar::integer(k[j]);

    let homotopy_identity = monomials.iter().flatten().all(|w| {
        let mut lhs = wedge1(&kf, &contract(&u, w));
        for (s, c) in contract(&u, &wedge1(&kf, w)) {
            add_into(&mut lhs, s, c);
        }
        lhs == scale_form(&ku, w)
    });

    let bases: Vec<ExteriorBasis> = (0..monomials.len())
        .map(|d| ExteriorBasis::new(n, d))
        .collect();
    let spaces: Vec<Subspace<Scalar>> = monomials
        .iter()
        .zip(&bases)
        .map(|(ws, b)| Subspace::span(b.len(), ws.iter().map(|w| form_to_vector(w, b)).collect()))
        .collect();
    let top = spaces.len() - 1;
    let diff = (0..=top)
        .map(|d| {
            if d == top {
                return Matrix::zeros(0, spaces[d].dim());
            }
            let cols: Vec<Vec<Scalar>> = spaces[d]
                .basis_vectors()
                .iter()
                .map(|v| {
                    let image = wedge1(&kf, &vector_to_form(v, &bases[d]));
                    spaces[d + 1]
                        .coordinates(&form_to_vector(&image, &bases[d + 1]))
                        .expect("k lies in ann h")
                })
                .collect();
            Matrix::from_rows(spaces[d + 1].dim(), cols).transpose()
        })
        .collect();
    let complex = CochainComplex { dims: spaces.iter().map(Subspace::dim).collect(), diff, embed: None };
    let betti = ce::betti(&complex, "mode").expect("wedge by a covector squares to zero").betti;
    ModeCertificate { mode: k.to_vec(), u_index: j, k_dot_u: k[j], homotopy_identity, betti }
}

/// Basic cohomology: the zero mode contributes `Λ^•(ann h)` with zero
/// differential, and every nonzero basic mode in the box is certified acyclic.
pub fn basic_cohomology(f: &TorusFoliation, mode_box: i64) -> BasicCohomology {
    let monomials = annihilator_monomials(f);
    let representatives: Vec<Vec<Vec<Scalar>>> = monomials
        .iter()
        .enumerate()
        .map(|(d, ws)| {
            let b = ExteriorBasis::new(f.n, d);
            ws.iter().map(|w| form_to_vector(w, &b)).collect()
        })
        .collect();
    let table = BettiTable {
        betti: monomials.iter().map(Vec::len).collect(),
        representatives,
        route: "basic".into(),
    };
    let certificates = f.basic_modes(mode_box).iter().map(|k| mode_certificate(k, &monomials, f.n)).collect();
    BasicCohomology { table, mode_box, certificates }
}

/// A finite sum `Σ_p c_p (2π)^p` with `c_p ∈ ℚ(t)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TwoPiLaurent(BTreeMap<i32, Scalar>);

impl TwoPiLaurent {
    pub fn scalar(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Scalar, power: i32) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(power, c);
        }
        TwoPiLaurent(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Scalar)> {
        self.0.iter().map(|(&p, c)| (p, c))
    }

    /// Multiplies by `c (2π)^power`.
    pub fn times(&self, c: &Scalar, power: i32) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            for (&p, x) in &self.0 {
                m.insert(p + power, x.clone() * c.clone());
            }
        }
        TwoPiLaurent(m)
    }

    pub fn add_assign(&mut self, other: &TwoPiLaurent) {
        for (&p, c) in &other.0 {
            let sum = self.0.remove(&p).unwrap_or_else(Scalar::zero) + c.clone();
            if !sum.is_zero() {
                self.0.insert(p, sum);
            }
        }
    }
}

impl fmt::Display for TwoPiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (&p, c)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match p {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*(2pi)")?,
                _ => write!(f, "({c})*(2pi)^{p}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TwoPiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for TwoPiLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Trig {
    Cos,
    Sin,
}

/// Key of one term `trig(2πk·x) dx_S`.
pub type TermKey = (Vec<i64>, Trig, Mask);

/// Homogeneous trigonometric-polynomial `degree`-form on `T^n`.
///
/// Canonical: every stored mode is zero or lexicographically positive, the
/// zero mode carries only `cos`, and no coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigForm {
    n: usize,
    degree: usize,
    terms: BTreeMap<TermKey, TwoPiLaurent>,
}

impl TrigForm {
    pub fn zero(n: usize, degree: usize) -> Self {
        TrigForm { n, degree, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<TermKey, TwoPiLaurent> {
        &self.terms
    }

    /// Distinct modes present.
    pub fn modes(&self) -> Vec<Vec<i64>> {
        let mut m: Vec<Vec<i64>> = self.terms.keys().map(|(k, _, _)| k.clone()).collect();
        m.dedup();
        m
    }

    /// Adds `c · trig(2πk·x) dx_{subset}`; `subset` need not be sorted.
    pub fn add_term(
        &mut self,
        mode: &[i64],
        trig: Trig,
        subset: &[usize],
        c: TwoPiLaurent,
    ) -> Result<(), TorusError> {
        if mode.len() != self.n {
            return Err(TorusError::ModeLength { mode: mode.to_vec(), expected: self.n, found: mode.len() });
        }
        let mask = exterior::mask_of(subset);
        if subset.len() != self.degree || mask.count_ones() as usize != self.degree || subset.iter().any(|&j| j >= self.n) {
            return Err(TorusError::BadSubset { subset: subset.to_vec(), degree: self.degree, n: self.n });
        }
        let mut sorted = subset.to_vec();
        let mut parity = 0;
        for i in 0..sorted.len() {
            for j in 0..sorted.len() - 1 - i {
                if sorted[j] > sorted[j + 1] {
                    sorted.swap(j, j + 1);
                    parity += 1;
                }
            }
        }
        let c = c.times(&Scalar::integer(exterior::sign_of(parity)), 0);
        self.add_canonical(mode.to_vec(), trig, mask, c);
        Ok(())
    }

    fn add_canonical(&mut self, mode: Vec<i64>, trig: Trig, mask: Mask, c: TwoPiLaurent) {
        let (mode, c) = match lex_sign(&mode) {
            0 if trig == Trig::Sin => return,
            -1 => {
                let flipped = mode.iter().map(|x| -x).collect();
                match trig {
                    Trig::Cos => (flipped, c),
                    Trig::Sin => (flipped, c.times(&Scalar::integer(-1), 0)),
                }
            }
            _ => (mode, c),
        };
        let key = (mode, trig, mask);
        let mut sum = self.terms.remove(&key).unwrap_or_default();
        sum.add_assign(&c);
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn add(&self, other: &TrigForm) -> TrigForm {
        assert_eq!((self.n, self.degree), (other.n, other.degree), "forms of different shape");
        let mut out = self.clone();
        for ((k, t, s), c) in &other.terms {
            out.add_canonical(k.clone(), *t, *s, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> TrigForm {
        let mut out = TrigForm::zero(self.n, self.degree);
        for ((k, t, s), x) in &self.terms {
            out.add_canonical(k.clone(), *t, *s, x.times(c, 0));
        }
        out
    }

    pub fn sub(&self, other: &TrigForm) -> TrigForm {
        self.add(&other.scale(&Scalar::integer(-1)))
    }

    /// `d cos(2πk·x) = -2π sin(2πk·x) k♭` and `d sin(2πk·x) = 2π cos(2πk·x) k♭`.
    pub fn d(&self) -> TrigForm {
        let mut out = TrigForm::zero(self.n, self.degree + 1);
        for ((k, t, s), c) in &self.terms {
            let (target, sign) = match t {
                Trig::Cos => (Trig::Sin, -1),
                Trig::Sin => (Trig::Cos, 1),
            };
            for (j, &kj) in k.iter().enumerate() {
                if kj == 0 || exterior::contains(*s, j) {
                    continue;
                }
                let eps = sign * kj * exterior::sign_of(exterior::position(*s, j));
                out.add_canonical(k.clone(), target, s | 1 << j, c.times(&Scalar::integer(eps), 1));
            }
        }
        out
    }

    /// Part of the form carried by the modes accepted by `keep`.
    fn filter_modes(&self, keep: impl Fn(&[i64]) -> bool) -> TrigForm {
        TrigForm {
            n: self.n,
            degree: self.degree,
            terms: self.terms.iter().filter(|((k, _, _), _)| keep(k)).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    /// The constant exterior coefficient of `trig(2πk·x)` at one power of `2π`.
    fn coefficient_form(&self, k: &[i64], trig: Trig, power: i32) -> ConstForm {
        self.terms
            .iter()
            .filter(|((m, t, _), _)| m == k && *t == trig)
            .filter_map(|((_, _, s), c)| c.0.get(&power).map(|x| (*s, x.clone())))
            .collect()
    }

    fn powers(&self, k: &[i64]) -> Vec<i32> {
        let mut p: Vec<i32> = self
            .terms
            .iter()
            .filter(|((m, _, _), _)| m == k)
            .flat_map(|(_, c)| c.0.keys().copied())
            .collect();
        p.sort();
        p.dedup();
        p
    }
}

/// Averages over the closure subtorus: modes not annihilating the closure
/// integrate to zero, the others are invariant.
pub fn average(beta: &TrigForm, f: &TorusFoliation) -> TrigForm {
    beta.filter_modes(|k| f.is_basic_mode(k))
}

/// Primitive of `A(β) - β` with its exactness residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyCertificate {
    pub q: TrigForm,
    pub residual: TrigForm,
}

/// For each dropped mode `k` with closed part `C cos + S sin`, picks the first
/// closure basis vector `u` with `k·u ≠ 0`; then
/// `Q_k = (ι_u S cos - ι_u C sin) / (2π k·u)` satisfies `dQ_k = -(C cos + S sin)`.
pub fn homotopy_certificate(beta: &TrigForm, f: &TorusFoliation) -> Result<HomotopyCertificate, TorusError> {
    if !beta.d().is_zero() {
        return Err(TorusError::NotClosed);
    }
    let closure = f.closure.basis_vectors();
    let mut q = TrigForm::zero(beta.n, beta.degree.saturating_sub(1));
    if beta.degree > 0 {
        for k in beta.modes() {
            if f.is_basic_mode(&k) {
                continue;
            }
            let u = closure.iter().find(|u| !rational_dot(&k, u).is_zero()).expect("mode is not basic");
            let ku = Scalar::rational(rational_dot(&k, u));
            let us: Vec<Scalar> = u.iter().map(Scalar::from_rational).collect();
            let inv = Scalar::one() / ku;
            for p in beta.powers(&k) {
                for (trig, target, sign) in [(Trig::Cos, Trig::Sin, -1), (Trig::Sin, Trig::Cos, 1)] {
                    let c = scale_form(&(Scalar::integer(sign) * inv.clone()), &contract(&us, &beta.coefficient_form(&k, trig, p)));
                    for (s, x) in c {
                        q.add_canonical(k.clone(), target, s, TwoPiLaurent::monomial(x, p - 1));
                    }
                }
            }
        }
    }
    let residual = average(beta, f).sub(beta).sub(&q.d());
    Ok(HomotopyCertificate { q, residual })
}
