//! de Rham cohomology of homogeneous quotients `G/H` by theorem dispatch.
//!
//! Only the Lie algebra pair `(g, h)` is visible to the tool. Topological
//! facts about the groups (compactness of `G/closure(H)`, density of `H`,
//! connectedness of `H`) cannot be decided from structure constants, so they
//! enter as user assertions and are echoed verbatim in the audit.
//!
//! Routes, strongest first:
//! * `H` dense: `h` must be an ideal, and `H_dR(G/H) = H(g/h)`;
//! * `h` an ideal and `G/closure(H)` compact: `H_dR(G/H) = H(g/h)`;
//! * `g` of compact type and `G/closure(H)` compact: `H_dR(G/H) = H(g, h)`.
//!
//! Outside these cases the report is a refusal naming the missing hypothesis.

use serde::Serialize;

use crate::ce::{self, BettiTable, CeError};
use crate::field::Field;
use crate::liealg::{Advisory, CompactTypeCertificate, LieAlgebra, LieError};
use crate::linalg::Subspace;

/// User-asserted topological facts about `H ⊂ G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Assumptions {
    pub compact_quotient: bool,
    pub dense: bool,
    pub h_connected: bool,
}

impl Default for Assumptions {
    fn default() -> Self {
        Assumptions { compact_quotient: false, dense: false, h_connected: true }
    }
}

impl Assumptions {
    /// A dense subgroup has `closure(H) = G`, so the quotient is a point.
    pub fn normalized(self) -> Self {
        Assumptions { compact_quotient: self.compact_quotient || self.dense, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Computed,
    Refused,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// `h` ideal, `G/closure(H)` compact: quotient algebra cohomology.
    #[serde(rename = "Thm1.5")]
    IdealQuotient,
    /// `g` compact type, `G/closure(H)` compact: relative cohomology.
    #[serde(rename = "Thm1.4")]
    RelativeCompactType,
    /// `H` dense: quotient algebra cohomology.
    #[serde(rename = "ThmA.9")]
    DenseSubgroup,
    None,
}

impl Theorem {
    pub fn label(&self) -> &'static str {
        match self {
            Theorem::IdealQuotient => "Thm1.5",
            Theorem::RelativeCompactType => "Thm1.4",
            Theorem::DenseSubgroup => "ThmA.9",
            Theorem::None => "None",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypothesisStatus {
    VerifiedAlgebraically,
    UserAsserted,
    /// A topological hypothesis the user did not assert.
    Missing,
    Failed,
}

impl HypothesisStatus {
    pub fn label(&self) -> &'static str {
        match self {
            HypothesisStatus::VerifiedAlgebraically => "verified-algebraically",
            HypothesisStatus::UserAsserted => "user-asserted",
            HypothesisStatus::Missing => "missing",
            HypothesisStatus::Failed => "failed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub hypothesis: String,
    pub status: HypothesisStatus,
}

pub const HYP_SUBALGEBRA: &str = "h is a subalgebra";
pub const HYP_CONNECTED: &str = "H connected";
pub const HYP_DENSE: &str = "H dense in G";
pub const HYP_COMPACT_QUOTIENT: &str = "G/H̄ compact";
pub const HYP_IDEAL: &str = "h is an ideal";
pub const HYP_COMPACT_TYPE: &str = "g of compact type";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    /// The two tables must agree by a theorem.
    Required,
    /// Recorded for information; disagreement is not an error.
    Informational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteAgreement {
    pub left_route: String,
    pub right_route: String,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub equal: bool,
    pub expectation: Expectation,
}

impl RouteAgreement {
    fn new(left_route: &str, left: Vec<usize>, right_route: &str, right: Vec<usize>, expectation: Expectation) -> Self {
        RouteAgreement {
            left_route: left_route.into(),
            right_route: right_route.into(),
            equal: left == right,
            left,
            right,
            expectation,
        }
    }

    /// False only for a required agreement that failed.
    pub fn holds(&self) -> bool {
        self.equal || self.expectation == Expectation::Informational
    }
}

/// Catalog knowledge compared against the algebraic answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdvisoryRecord {
    pub message: String,
    pub known_de_rham: Vec<usize>,
    /// `H(g/h)` when `h` is an ideal. This is not a de Rham computation.
    pub quotient_algebra_betti: Option<Vec<usize>>,
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GhReport<F> {
    pub verdict: Verdict,
    pub theorem: Theorem,
    pub audit: Vec<AuditEntry>,
    /// `H_dR(G/H)`; present only when computed.
    pub betti: Option<BettiTable<F>>,
    pub cross_checks: Vec<RouteAgreement>,
    pub advisory: Option<AdvisoryRecord>,
    pub note: Option<String>,
}

impl<F> GhReport<F> {
    /// First hypothesis with status `failed` or `missing`.
    pub fn first_unmet(&self) -> Option<&AuditEntry> {
        self.audit
            .iter()
            .find(|a| matches!(a.status, HypothesisStatus::Failed | HypothesisStatus::Missing))
    }
}

fn entry(hypothesis: &str, status: HypothesisStatus) -> AuditEntry {
    AuditEntry { hypothesis: hypothesis.to_string(), status }
}

fn verified(ok: bool) -> HypothesisStatus {
    if ok {
        HypothesisStatus::VerifiedAlgebraically
    } else {
        HypothesisStatus::Failed
    }
}

fn asserted(flag: bool) -> HypothesisStatus {
    if flag {
        HypothesisStatus::UserAsserted
    } else {
        HypothesisStatus::Missing
    }
}

fn quotient_betti<F: Field>(l: &LieAlgebra<F>, h: &Subspace<F>) -> Result<BettiTable<F>, CeError> {
    let q = l.quotient(h)?;
    ce::betti(&ce::full_complex(&q.algebra), "quotient")
}

/// Relative cohomology, truncated at degree `dim g - dim h` where the
/// relative cochains end.
fn relative_betti<F: Field>(l: &LieAlgebra<F>, h: &Subspace<F>) -> Result<BettiTable<F>, CeError> {
    let mut t = ce::betti(&ce::relative_complex(l, h)?, "relative")?;
    let len = l.dim() - h.dim() + 1;
    t.betti.truncate(len);
    t.representatives.truncate(len);
    Ok(t)
}

fn refused<F>(audit: Vec<AuditEntry>, note: impl Into<String>) -> GhReport<F> {
    GhReport {
        verdict: Verdict::Refused,
        theorem: Theorem::None,
        audit,
        betti: None,
        cross_checks: Vec::new(),
        advisory: None,
        note: Some(note.into()),
    }
}

/// Computes `H_dR(G/H)` by the strongest applicable route.
pub fn gh_cohomology<F: Field>(
    l: &LieAlgebra<F>,
    h: &Subspace<F>,
    assumptions: Assumptions,
) -> Result<GhReport<F>, CeError> {
    if !l.is_subalgebra(h)? {
        return Err(CeError::NotASubalgebra);
    }
    let a = assumptions.normalized();
    let mut audit = vec![entry(HYP_SUBALGEBRA, HypothesisStatus::VerifiedAlgebraically)];
    if !a.h_connected {
        audit.push(entry(HYP_CONNECTED, HypothesisStatus::Failed));
        return Ok(refused(
            audit,
            "the theorem routes are stated for connected H; component groups are not handled",
        ));
    }
    audit.push(entry(HYP_CONNECTED, HypothesisStatus::UserAsserted));
    let ideal = l.is_ideal(h)?;

    let (theorem, table) = if a.dense {
        audit.push(entry(HYP_DENSE, HypothesisStatus::UserAsserted));
        audit.push(entry(HYP_COMPACT_QUOTIENT, HypothesisStatus::UserAsserted));
        audit.push(entry(HYP_IDEAL, verified(ideal)));
        if !ideal {
            return Ok(refused(
                audit,
                "density of H forces h to be an ideal of g, but h is not an ideal: \
                 the density assertion is inconsistent with the algebra data",
            ));
        }
        (Theorem::DenseSubgroup, quotient_betti(l, h)?)
    } else if ideal && a.compact_quotient {
        audit.push(entry(HYP_IDEAL, HypothesisStatus::VerifiedAlgebraically));
        audit.push(entry(HYP_COMPACT_QUOTIENT, HypothesisStatus::UserAsserted));
        (Theorem::IdealQuotient, quotient_betti(l, h)?)
    } else if a.compact_quotient {
        audit.push(entry(HYP_IDEAL, HypothesisStatus::Failed));
        audit.push(entry(HYP_COMPACT_QUOTIENT, HypothesisStatus::UserAsserted));
        let compact = l.compact_type().map_err(CeError::Lie)?.is_yes();
        audit.push(entry(HYP_COMPACT_TYPE, verified(compact)));
        if !compact {
            return Ok(refused(
                audit,
                "h is not an ideal and g is not of compact type; no available theorem \
                 determines H_dR(G/H) in this case",
            ));
        }
        (Theorem::RelativeCompactType, relative_betti(l, h)?)
    } else {
        audit.push(entry(HYP_IDEAL, verified(ideal)));
        audit.push(entry(HYP_COMPACT_QUOTIENT, asserted(false)));
        return Ok(refused(
            audit,
            "compactness of G/H̄ was not asserted; every available route requires it",
        ));
    };

    let mut cross_checks = Vec::new();
    if ideal {
        let quotient = table.betti.clone();
        let relative = match theorem {
            Theorem::RelativeCompactType => table.betti.clone(),
            _ => relative_betti(l, h)?.betti,
        };
        let both_theorems = matches!(l.compact_type(), Ok(CompactTypeCertificate::Yes { .. }));
        let (left, right) =
            if both_theorems { ("Thm1.5:quotient", "Thm1.4:relative") } else { ("quotient", "relative") };
        cross_checks.push(RouteAgreement::new(left, quotient, right, relative, Expectation::Required));
    }
    Ok(GhReport {
        verdict: Verdict::Computed,
        theorem,
        audit,
        betti: Some(table),
        cross_checks,
        advisory: None,
        note: None,
    })
}

/// Attaches catalog knowledge to a report. The comparison is made against
/// `H(g/h)` whenever `h` is an ideal, whether or not a theorem applied.
pub fn attach_advisory<F: Field>(
    report: &mut GhReport<F>,
    advisory: &Advisory,
    l: &LieAlgebra<F>,
    h: &Subspace<F>,
) -> Result<(), CeError> {
    let quotient = if l.is_ideal(h)? { Some(quotient_betti(l, h)?.betti) } else { None };
    let agrees = quotient.as_ref().map(|q| *q == advisory.known_de_rham);
    report.advisory = Some(AdvisoryRecord {
        message: advisory.message.clone(),
        known_de_rham: advisory.known_de_rham.clone(),
        quotient_algebra_betti: quotient,
        agrees,
    });
    Ok(())
}

/// Runs every pair of routes that is defined for `(g, h)` and records
/// whether their Betti tables agree.
pub fn cross_validate<F: Field>(l: &LieAlgebra<F>, h: &Subspace<F>) -> Result<Vec<RouteAgreement>, CeError> {
    if !l.is_subalgebra(h)? {
        return Err(CeError::NotASubalgebra);
    }
    let mut out = Vec::new();
    if l.is_ideal(h)? {
        out.push(RouteAgreement::new(
            "relative",
            relative_betti(l, h)?.betti,
            "quotient",
            quotient_betti(l, h)?.betti,
            Expectation::Required,
        ));
    }
    let expectation = match l.compact_type() {
        Ok(cert) if cert.is_yes() => Expectation::Required,
        Ok(_) | Err(LieError::UnorderedScalar(_)) => Expectation::Informational,
        Err(e) => return Err(e.into()),
    };
    out.push(RouteAgreement::new(
        "full",
        ce::lie_algebra_cohomology(l)?.betti,
        "invariant",
        ce::betti(&ce::invariant_complex(l), "invariant")?.betti,
        expectation,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;
    use crate::Scalar;
    use num_traits::{One, Zero};

    fn pair(name: &str) -> (LieAlgebra<Scalar>, Subspace<Scalar>, Option<Advisory>) {
        let e = catalog(name).unwrap();
        (e.algebra, e.subalgebra.unwrap(), e.advisory)
    }

    fn compact() -> Assumptions {
        Assumptions { compact_quotient: true, ..Default::default() }
    }

    #[test]
    fn tau_ideal_uses_quotient_route() {
        let (l, h, _) = pair("paper_ex2");
        let r = gh_cohomology(&l, &h, compact()).unwrap();
        assert_eq!(r.verdict, Verdict::Computed);
        assert_eq!(r.theorem, Theorem::IdealQuotient);
        assert_eq!(r.betti.unwrap().betti, vec![1, 1, 0, 1, 1]);
        assert_eq!(r.cross_checks.len(), 1);
        assert!(r.cross_checks[0].equal);
        assert_eq!(r.cross_checks[0].left_route, "Thm1.5:quotient");
    }

    #[test]
    fn noncompact_quotient_is_refused_with_advisory() {
        let (l, h, adv) = pair("paper_ex1");
        let mut r = gh_cohomology(&l, &h, Assumptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Refused);
        assert!(r.betti.is_none());
        let unmet = r.first_unmet().unwrap();
        assert_eq!(unmet.hypothesis, HYP_COMPACT_QUOTIENT);
        assert_eq!(unmet.status, HypothesisStatus::Missing);
        assert!(r.audit.contains(&entry(HYP_IDEAL, HypothesisStatus::VerifiedAlgebraically)));
        attach_advisory(&mut r, &adv.unwrap(), &l, &h).unwrap();
        let a = r.advisory.unwrap();
        assert_eq!(a.quotient_algebra_betti, Some(vec![1, 1]));
        assert_eq!(a.known_de_rham, vec![1, 0]);
        assert_eq!(a.agrees, Some(false));
    }

    #[test]
    fn dense_irrational_line() {
        let l = LieAlgebra::<Scalar>::abelian(2);
        let h = Subspace::span(2, vec![vec![Scalar::one(), Scalar::tau()]]);
        let a = Assumptions { dense: true, ..Default::default() };
        let r = gh_cohomology(&l, &h, a).unwrap();
        assert_eq!(r.theorem, Theorem::DenseSubgroup);
        assert_eq!(r.betti.unwrap().betti, vec![1, 1]);
    }

    #[test]
    fn dense_but_not_ideal_is_a_contradiction() {
        let (l, h, _) = pair("tsu2");
        let a = Assumptions { dense: true, ..Default::default() };
        let r = gh_cohomology(&l, &h, a).unwrap();
        assert_eq!(r.verdict, Verdict::Refused);
        assert_eq!(r.first_unmet().unwrap().hypothesis, HYP_IDEAL);
        assert!(r.note.unwrap().contains("inconsistent"));
    }

    #[test]
    fn non_ideal_compact_type_uses_relative_route() {
        let (l, h, _) = pair("tsu2");
        let r = gh_cohomology(&l, &h, compact()).unwrap();
        assert_eq!(r.theorem, Theorem::RelativeCompactType);
        let b = r.betti.unwrap();
        assert_eq!(b.route, "relative");
        assert_eq!(b.betti[0], 1);
        assert!(r.cross_checks.is_empty());
    }

    #[test]
    fn open_region_is_refused() {
        let l = catalog("sl2r").unwrap().algebra;
        let e = Subspace::span(3, vec![vec![Scalar::zero(), Scalar::one(), Scalar::zero()]]);
        let r = gh_cohomology(&l, &e, compact()).unwrap();
        assert_eq!(r.verdict, Verdict::Refused);
        assert_eq!(r.first_unmet().unwrap().hypothesis, HYP_IDEAL);
        assert!(r.audit.contains(&entry(HYP_COMPACT_TYPE, HypothesisStatus::Failed)));
    }

    #[test]
    fn disconnected_h_is_refused() {
        let (l, h, _) = pair("paper_ex2");
        let a = Assumptions { h_connected: false, ..compact() };
        let r = gh_cohomology(&l, &h, a).unwrap();
        assert_eq!(r.verdict, Verdict::Refused);
        assert_eq!(r.first_unmet().unwrap().hypothesis, HYP_CONNECTED);
    }

    #[test]
    fn tau_structure_constants_bubble_up_on_relative_route() {
        let l = LieAlgebra::from_brackets(
            "twisted",
            3,
            vec![(0, 1, vec![(1, Scalar::tau())]), (0, 2, vec![(2, Scalar::one())])],
        )
        .unwrap();
        let h = Subspace::span(3, vec![vec![Scalar::one(), Scalar::zero(), Scalar::zero()]]);
        assert!(matches!(
            gh_cohomology(&l, &h, compact()),
            Err(CeError::Lie(LieError::UnorderedScalar(_)))
        ));
    }

    #[test]
    fn cross_validation_records() {
        let (l, h, _) = pair("paper_ex2");
        let r = cross_validate(&l, &h).unwrap();
        assert_eq!(r[0].left, vec![1, 1, 0, 1, 1]);
        assert!(r[0].equal && r.iter().all(RouteAgreement::holds));

        let heis = catalog("heis3").unwrap().algebra;
        let z = Subspace::span(3, vec![vec![Scalar::zero(), Scalar::zero(), Scalar::one()]]);
        let r = cross_validate(&heis, &z).unwrap();
        assert_eq!(r[0].right, vec![1, 2, 1]);
        assert!(r[0].equal);
        assert_eq!(r[1].expectation, Expectation::Informational);
        assert!(!r[1].equal);

        let sl2 = catalog("sl2r").unwrap().algebra;
        let r = cross_validate(&sl2, &Subspace::zero(3)).unwrap();
        let full_vs_inv = r.last().unwrap();
        assert_eq!(full_vs_inv.expectation, Expectation::Informational);
        assert_eq!(full_vs_inv.left[1], 0);
        assert!(full_vs_inv.equal);
    }
}
