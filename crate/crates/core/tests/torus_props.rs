use liecohom::gh::{self, Assumptions};
use liecohom::torus::{self, TorusFoliation, Trig, TrigForm, TwoPiLaurent};
use liecohom::{LieAlgebra, Scalar};
use proptest::prelude::*;

fn int(n: i64) -> Scalar {
    Scalar::integer(n)
}

fn t() -> Scalar {
    Scalar::tau()
}

fn foliations() -> Vec<TorusFoliation> {
    let specs: Vec<(usize, Vec<Vec<Scalar>>)> = vec![
        (1, vec![vec![int(1)]]),
        (2, vec![vec![int(1), t()]]),
        (2, vec![vec![int(1), int(1)]]),
        (2, vec![vec![int(1), int(0)]]),
        (3, vec![vec![int(1), t(), int(0)]]),
        (3, vec![vec![int(1), t(), int(0)], vec![int(0), int(0), int(1)]]),
        (3, vec![vec![int(2), int(-1), int(0)]]),
        (3, vec![vec![int(1), t(), t() * t()]]),
    ];
    specs.into_iter().map(|(n, g)| torus::build_foliation(n, &g).unwrap()).collect()
}

fn coeff() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -1i64..=1).prop_map(|(a, b)| int(a) + int(b) * t())
}

/// A random degree-`p` form on `T^n` with modes in `[-2, 2]^n`.
fn form(n: usize, p: usize) -> impl Strategy<Value = TrigForm> {
    let subsets: Vec<Vec<usize>> = (0..1u64 << n)
        .filter(|m| m.count_ones() as usize == p)
        .map(|m| (0..n).filter(|j| m >> j & 1 == 1).collect())
        .collect();
    let term = (
        prop::collection::vec(-2i64..=2, n),
        prop::bool::ANY,
        prop::sample::select(subsets),
        coeff(),
    );
    prop::collection::vec(term, 0..6).prop_map(move |terms| {
        let mut f = TrigForm::zero(n, p);
        for (k, sin, s, c) in terms {
            let trig = if sin { Trig::Sin } else { Trig::Cos };
            f.add_term(&k, trig, &s, TwoPiLaurent::scalar(c)).unwrap();
        }
        f
    })
}

fn foliation_and_form() -> impl Strategy<Value = (TorusFoliation, TrigForm)> {
    (prop::sample::select(foliations()), 0usize..=3).prop_flat_map(|(f, p)| {
        let p = p.min(f.n);
        (Just(f.clone()), form(f.n, p))
    })
}

/// `dγ` plus a constant-coefficient part: always closed.
fn closed_form() -> impl Strategy<Value = (TorusFoliation, TrigForm)> {
    (prop::sample::select(foliations()), 1usize..=3).prop_flat_map(|(f, p)| {
        let p = p.min(f.n);
        let n = f.n;
        (Just(f), form(n, p - 1), form(n, p), prop::collection::vec(coeff(), 8)).prop_map(move |(f, gamma, junk, cs)| {
            let mut beta = gamma.d();
            // keep only the constant modes of `junk`, reweighted
            for (i, ((k, trig, s), _)) in junk.terms().iter().enumerate() {
                if k.iter().all(|&x| x == 0) && *trig == Trig::Cos {
                    let subset: Vec<usize> = (0..n).filter(|j| s >> j & 1 == 1).collect();
                    let mut c = TrigForm::zero(n, p);
                    c.add_term(k, Trig::Cos, &subset, TwoPiLaurent::scalar(cs[i % 8].clone())).unwrap();
                    beta = beta.add(&c);
                }
            }
            (f, beta)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn averaging_is_a_projection((f, beta) in foliation_and_form()) {
        let a = torus::average(&beta, &f);
        prop_assert_eq!(torus::average(&a, &f), a.clone());
        prop_assert!(a.modes().iter().all(|k| f.is_basic_mode(k)));
    }

    #[test]
    fn averaging_commutes_with_d((f, beta) in foliation_and_form()) {
        prop_assert_eq!(torus::average(&beta, &f).d(), torus::average(&beta.d(), &f));
    }

    #[test]
    fn d_squares_to_zero((_f, beta) in foliation_and_form()) {
        prop_assert!(beta.d().d().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn homotopy_certificates_have_zero_residual((f, beta) in closed_form()) {
        prop_assert!(beta.d().is_zero());
        let cert = torus::homotopy_certificate(&beta, &f).unwrap();
        prop_assert!(cert.residual.is_zero(), "residual {:?}", cert.residual);
        prop_assert_eq!(torus::average(&beta, &f).sub(&beta), cert.q.d());
    }
}

#[test]
fn basic_forms_are_fixed_points() {
    for f in foliations() {
        let mut beta = TrigForm::zero(f.n, 1);
        beta.add_term(&vec![0; f.n], Trig::Cos, &[0], TwoPiLaurent::scalar(int(2))).unwrap();
        for (i, k) in f.basic_modes(2).iter().enumerate() {
            beta.add_term(k, if i % 2 == 0 { Trig::Sin } else { Trig::Cos }, &[f.n - 1], TwoPiLaurent::scalar(t() + int(i as i64)))
                .unwrap();
        }
        assert_eq!(torus::average(&beta, &f), beta);
    }
}

#[test]
fn basic_cohomology_matches_quotient_route() {
    for f in foliations() {
        let basic = torus::basic_cohomology(&f, torus::DEFAULT_MODE_BOX);
        assert!(basic.all_acyclic());
        let l = LieAlgebra::<Scalar>::abelian(f.n);
        let a = Assumptions { compact_quotient: true, ..Default::default() };
        let r = gh::gh_cohomology(&l, &f.h, a).unwrap();
        assert_eq!(basic.table.betti, r.betti.unwrap().betti, "n = {}", f.n);
        assert_eq!(f.closure.dim() + f.k0.dim(), f.n);
    }
}

#[test]
fn acyclicity_certificates_cover_the_box() {
    let f = torus::build_foliation(2, &[vec![int(1), int(1)]]).unwrap();
    let b = torus::basic_cohomology(&f, 3);
    let modes: Vec<Vec<i64>> = b.certificates.iter().map(|c| c.mode.clone()).collect();
    assert_eq!(modes, vec![vec![1, -1], vec![2, -2], vec![3, -3]]);
    assert!(b.certificates.iter().all(|c| c.homotopy_identity && c.k_dot_u == c.mode[c.u_index]));
}
