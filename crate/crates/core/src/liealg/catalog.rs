//! Named algebras, optionally paired with a distinguished subalgebra `h`.

use serde::Serialize;

use super::{LieAlgebra, LieError};
use crate::linalg::Subspace;
use crate::Scalar;

/// Known topological information attached to a catalog pair, for comparison
/// against what the algebraic computation would say.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Advisory {
    pub message: String,
    /// Betti numbers of the true de Rham cohomology of `G/H`.
    pub known_de_rham: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub algebra: LieAlgebra<Scalar>,
    pub subalgebra: Option<Subspace<Scalar>>,
    pub advisory: Option<Advisory>,
}

const FIXED_NAMES: [&str; 10] = [
    "heis3",
    "aff1",
    "su2",
    "so3",
    "sl2r",
    "sl2r_tangent",
    "paper_ex1",
    "paper_ex2",
    "tsu2",
    "abelian(n)",
];

/// Names accepted by [`catalog`]; `abelian(n)` also parses as `abelian<n>`.
pub fn catalog_names() -> &'static [&'static str] {
    &FIXED_NAMES
}

fn int(n: i64) -> Scalar {
    Scalar::integer(n)
}

fn algebra(name: &str, dim: usize, brackets: &[(usize, usize, &[(usize, i64)])]) -> LieAlgebra<Scalar> {
    let b = brackets
        .iter()
        .map(|&(i, j, cs)| (i, j, cs.iter().map(|&(k, c)| (k, int(c))).collect()));
    LieAlgebra::from_brackets(name, dim, b).expect("catalog algebras satisfy Jacobi")
}

/// su(2) in the cyclic basis `[e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2`.
fn su2() -> LieAlgebra<Scalar> {
    algebra("su2", 3, &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (0, 2, &[(1, -1)])])
}

fn rows(n: usize, rows: Vec<Vec<Scalar>>) -> Subspace<Scalar> {
    debug_assert!(rows.iter().all(|r| r.len() == n));
    Subspace::span(n, rows)
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![int(0); n];
    v[i] = int(1);
    v
}

fn parse_abelian(name: &str) -> Option<usize> {
    let rest = name.strip_prefix("abelian")?;
    let digits = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    digits.parse().ok()
}

pub fn catalog(name: &str) -> Result<CatalogEntry, LieError> {
    let entry = |algebra: LieAlgebra<Scalar>, description: &str| CatalogEntry {
        name: name.to_string(),
        description: description.to_string(),
        algebra,
        subalgebra: None,
        advisory: None,
    };
    if let Some(n) = parse_abelian(name) {
        return Ok(entry(LieAlgebra::abelian(n), "abelian Lie algebra R^n"));
    }
    let r_su2 = || LieAlgebra::abelian(1).direct_sum(&su2());
    Ok(match name {
        "heis3" => entry(algebra("heis3", 3, &[(0, 1, &[(2, 1)])]), "Heisenberg algebra [x,y]=z"),
        "aff1" => entry(algebra("aff1", 2, &[(0, 1, &[(1, 1)])]), "affine algebra of the line [x,y]=y"),
        "su2" => entry(su2(), "su(2) in the cyclic basis [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2"),
        "so3" => entry(
            algebra("so3", 3, &[(0, 1, &[(2, -1)]), (0, 2, &[(1, 1)]), (1, 2, &[(0, -1)])]),
            "so(3) in the basis A12, A13, A23 of skew matrices",
        ),
        "sl2r" => entry(
            algebra("sl2r", 3, &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])]),
            "sl(2,R) in the basis h, e, f",
        ),
        "sl2r_tangent" => CatalogEntry {
            subalgebra: Some(rows(4, vec![unit(4, 0)])),
            ..entry(r_su2().with_name("sl2r_tangent"), "R + su(2) with h the central R factor")
        },
        "paper_ex1" => CatalogEntry {
            subalgebra: Some(rows(4, vec![unit(4, 1), unit(4, 2), unit(4, 3)])),
            advisory: Some(Advisory {
                message: "G = R x SU(2), H = SU(2): G/H = R is noncompact, so H^1_dR(G/H) = 0 \
                          whereas H^1(g/h) = R; the algebraic answer does not compute H_dR(G/H) here"
                    .to_string(),
                known_de_rham: vec![1, 0],
            }),
            ..entry(
                r_su2().with_name("paper_ex1"),
                "R + su(2) with h = su(2); G/closure(H) = R is noncompact",
            )
        },
        "paper_ex2" => {
            let mut v = unit(6, 1);
            v[2] = Scalar::tau();
            CatalogEntry {
                subalgebra: Some(rows(6, vec![unit(6, 0), v])),
                ..entry(
                    LieAlgebra::abelian(3).direct_sum(&su2()).with_name("paper_ex2"),
                    "R^3 + su(2) with h = span{(1,0,0,0,0,0), (0,1,t,0,0,0)}, t irrational; \
                     G/closure(H) = SU(2) is compact",
                )
            }
        }
        "tsu2" => {
            let mut v = unit(4, 0);
            v[3] = int(1);
            CatalogEntry {
                subalgebra: Some(rows(4, vec![v])),
                ..entry(r_su2().with_name("tsu2"), "R + su(2) with the non-ideal line h = span{(1,0,0,1)}")
            }
        }
        other => return Err(LieError::UnknownName(other.to_string())),
    })
}
