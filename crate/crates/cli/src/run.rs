use std::fs;
use std::path::Path;

use liecohom::ce::{self, DEFAULT_MAX_DIM};
use liecohom::format::{self, betti_json, form_json, FoliationFile};
use liecohom::gh::{self, Assumptions, GhReport, Verdict};
use liecohom::liealg::{catalog, catalog_names, CatalogEntry};
use liecohom::torus::{self, TorusFoliation};
use liecohom::{BettiTable, CeError, CompactTypeCertificate, Scalar, ScalarLieAlgebra, ScalarSubspace};
use serde_json::{json, Value};

use crate::args::{CatalogArgs, CheckArgs, DegreeArgs, E1Args, GhArgs, Source, TorusArgs, Verb};
use crate::error::CliError;
use crate::render;

/// Result of a successful run: JSON payload, table rendering, exit code.
pub struct Outcome {
    pub result: Value,
    pub table: String,
    pub exit: i32,
}

impl Outcome {
    fn ok(result: Value, table: String) -> Self {
        Outcome { result, table, exit: 0 }
    }
}

/// Bytes fed to the input digest, accumulated while loading.
#[derive(Default)]
pub struct Digest(Vec<u8>);

impl Digest {
    fn add(&mut self, label: &str, bytes: &[u8]) {
        self.0.extend_from_slice(label.as_bytes());
        self.0.push(0);
        self.0.extend_from_slice(&(bytes.len() as u64).to_le_bytes());
        self.0.extend_from_slice(bytes);
    }

    pub fn hex(&self) -> String {
        use sha2::{Digest as _, Sha256};
        Sha256::digest(&self.0).iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn read(path: &Path, digest: &mut Digest, label: &str) -> Result<String, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::new("io", format!("cannot read {}: {e}", path.display())))?;
    digest.add(label, text.as_bytes());
    Ok(text)
}

struct Loaded {
    algebra: ScalarLieAlgebra,
    subalgebra: Option<ScalarSubspace>,
    entry: Option<CatalogEntry>,
}

fn load(source: &Source, digest: &mut Digest) -> Result<Loaded, CliError> {
    let mut loaded = match (&source.catalog, &source.file) {
        (Some(name), None) => {
            digest.add("catalog", name.as_bytes());
            let entry = catalog(name)?;
            Loaded { algebra: entry.algebra.clone(), subalgebra: entry.subalgebra.clone(), entry: Some(entry) }
        }
        (None, Some(path)) => {
            let (algebra, subalgebra) = format::parse_algebra(&read(path, digest, "file")?)?;
            Loaded { algebra, subalgebra, entry: None }
        }
        _ => return Err(CliError::new("usage", "exactly one of --catalog and --file is required")),
    };
    if let Some(spec) = &source.subalgebra {
        let text = if spec.trim_start().starts_with('[') {
            digest.add("subalgebra", spec.as_bytes());
            spec.clone()
        } else {
            read(Path::new(spec), digest, "subalgebra")?
        };
        let h = format::parse_rows(&text, loaded.algebra.dim())?;
        if !loaded.algebra.is_subalgebra(&h)? {
            return Err(CliError::new("not-a-subalgebra", "subalgebra rows are not closed under the bracket"));
        }
        loaded.subalgebra = Some(h);
        // A user-supplied h no longer matches the catalog pair's advisory.
        if let Some(e) = &mut loaded.entry {
            e.advisory = None;
        }
    }
    Ok(loaded)
}

fn require_h(l: &Loaded) -> Result<&ScalarSubspace, CliError> {
    l.subalgebra
        .as_ref()
        .ok_or_else(|| CliError::new("usage", "this verb needs a subalgebra (--subalgebra or a catalog pair)"))
}

fn check_size(dim: usize, degree: Option<usize>) -> Result<(), CliError> {
    if degree.is_none() && dim > DEFAULT_MAX_DIM {
        return Err(CeError::TooLarge { dim, limit: DEFAULT_MAX_DIM }.into());
    }
    Ok(())
}

pub fn run(verb: &Verb, digest: &mut Digest) -> Result<Outcome, CliError> {
    match verb {
        Verb::Check(a) => check(a, digest),
        Verb::Betti(a) => cohomology(a, "full", digest),
        Verb::Relative(a) => cohomology(a, "relative", digest),
        Verb::Invariant(a) => cohomology(a, "invariant", digest),
        Verb::Quotient(a) => cohomology(a, "quotient", digest),
        Verb::Gh(a) => gh_verb(a, digest),
        Verb::E1(a) => e1(a, digest),
        Verb::Torus(a) => torus_verb(a, digest),
        Verb::Catalog(a) => catalog_verb(a, digest),
    }
}

fn rows_json(s: &ScalarSubspace) -> Value {
    serde_json::to_value(s.basis_vectors()).expect("scalars serialize")
}

fn check(a: &CheckArgs, digest: &mut Digest) -> Result<Outcome, CliError> {
    let loaded = load(&a.source, digest)?;
    let l = &loaded.algebra;
    let s = l.structure();
    let compact = match l.compact_type() {
        Ok(CompactTypeCertificate::Yes { .. }) => json!("yes"),
        Ok(CompactTypeCertificate::No { obstruction }) => json!({ "no": obstruction }),
        Err(e) => json!({ "undecided": e.to_string() }),
    };
    let mut result = json!({
        "algebra": l.name(),
        "dim": l.dim(),
        "jacobi": "ok",
        "tau_free": l.is_tau_free(),
        "abelian": l.is_abelian(),
        "center_dim": s.center.dim(),
        "derived_dim": s.derived.dim(),
        "unimodular": s.unimodular,
        "compact_type": compact,
    });
    if let Some(h) = &loaded.subalgebra {
        result["subalgebra"] = json!({
            "dim": h.dim(),
            "rows": rows_json(h),
            "is_subalgebra": true,
            "is_ideal": l.is_ideal(h)?,
        });
    }
    if let Some(e) = &loaded.entry {
        result["description"] = json!(e.description);
    }
    let table = render::check(&result);
    Ok(Outcome::ok(result, table))
}

fn single_degree(table: BettiTable<Scalar>, k: usize) -> Result<BettiTable<Scalar>, CliError> {
    let top = table.betti.len() - 1;
    if k > top {
        return Err(CeError::DegreeOutOfRange { degree: k, max: top }.into());
    }
    Ok(BettiTable {
        betti: vec![table.betti[k]],
        representatives: vec![table.representatives[k].clone()],
        route: table.route,
    })
}

fn cohomology(a: &DegreeArgs, route: &str, digest: &mut Digest) -> Result<Outcome, CliError> {
    let loaded = load(&a.source, digest)?;
    let l = &loaded.algebra;
    check_size(l.dim(), a.degree)?;
    let (name, table) = match route {
        "full" => match a.degree {
            Some(k) => {
                let (b, reps) = ce::lie_algebra_cohomology_at(l, k)?;
                (l.name().to_string(), BettiTable { betti: vec![b], representatives: vec![reps], route: "full".into() })
            }
            None => (l.name().to_string(), ce::lie_algebra_cohomology(l)?),
        },
        "relative" => {
            let h = require_h(&loaded)?;
            let mut t = ce::betti(&ce::relative_complex(l, h)?, "relative")?;
            let len = l.dim() - h.dim() + 1;
            t.betti.truncate(len);
            t.representatives.truncate(len);
            (l.name().to_string(), t)
        }
        "invariant" => (l.name().to_string(), ce::betti(&ce::invariant_complex(l), "invariant")?),
        _ => {
            let h = require_h(&loaded)?;
            if !l.is_ideal(h)? {
                return Err(CliError::new("not-an-ideal", "the quotient g/h needs h to be an ideal"));
            }
            let q = l.quotient(h)?;
            (q.algebra.name().to_string(), ce::betti(&ce::full_complex(&q.algebra), "quotient")?)
        }
    };
    let (table, degree_offset) = match (route, a.degree) {
        ("full", Some(k)) => (table, k),
        (_, Some(k)) => (single_degree(table, k)?, k),
        _ => (table, 0),
    };
    let mut result = betti_json(&name, &table, a.representatives);
    if a.degree.is_some() {
        result["degree"] = json!(degree_offset);
        result.as_object_mut().expect("object").remove("euler");
    }
    let text = render::betti(&result, degree_offset, a.representatives);
    Ok(Outcome::ok(result, text))
}

fn gh_json(report: &GhReport<Scalar>, representatives: bool) -> Value {
    let mut v = serde_json::to_value(report).expect("report serializes");
    match &report.betti {
        Some(t) => {
            v["betti"] = json!(t.betti);
            v["route"] = json!(t.route);
            if representatives {
                v["representatives"] = betti_json("", t, true)["representatives"].clone();
            }
        }
        None => v["betti"] = Value::Null,
    }
    v
}

fn gh_verb(a: &GhArgs, digest: &mut Digest) -> Result<Outcome, CliError> {
    let loaded = load(&a.source, digest)?;
    let l = &loaded.algebra;
    check_size(l.dim(), None)?;
    let h = require_h(&loaded)?;
    let assumptions =
        Assumptions { compact_quotient: a.assume_compact_quotient, dense: a.assume_dense, ..Default::default() };
    let mut report = gh::gh_cohomology(l, h, assumptions)?;
    if let Some(adv) = loaded.entry.as_ref().and_then(|e| e.advisory.as_ref()) {
        gh::attach_advisory(&mut report, adv, l, h)?;
    }
    let mut result = gh_json(&report, a.representatives);
    result["algebra"] = json!(l.name());
    result["assumptions"] = json!(assumptions);
    let table = render::gh(&result);
    let exit = if report.verdict == Verdict::Refused { 2 } else { 0 };
    Ok(Outcome { result, table, exit })
}

fn e1(a: &E1Args, digest: &mut Digest) -> Result<Outcome, CliError> {
    let loaded = load(&a.source, digest)?;
    let l = &loaded.algebra;
    let basic = match &a.basic_betti {
        Some(b) => b.clone(),
        None => {
            check_size(l.dim(), None)?;
            ce::lie_algebra_cohomology(l)?.betti
        }
    };
    let t = ce::e1_table(l, &basic, a.imax)?;
    let result = json!({
        "algebra": l.name(),
        "imax": a.imax,
        "invariants": t.invariants,
        "basic_betti": t.basic_betti,
        "entries": t.entries,
    });
    let table = render::e1(&result);
    Ok(Outcome::ok(result, table))
}

fn foliation_json(f: &TorusFoliation) -> Value {
    json!({
        "n": f.n,
        "h": rows_json(&f.h),
        "closure": f.closure.basis_vectors().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "k0": f.k0.basis_vectors().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn torus_verb(a: &TorusArgs, digest: &mut Digest) -> Result<Outcome, CliError> {
    let spec: FoliationFile = serde_json::from_str(&read(&a.file, digest, "foliation")?)
        .map_err(|e| CliError::from(format::FormatError::from(e)))?;
    let f = torus::build_foliation(spec.n, &spec.generators)?;
    let basic = torus::basic_cohomology(&f, a.mode_box);
    let mut result = json!({
        "foliation": foliation_json(&f),
        "betti": basic.table.betti,
        "mode_box": basic.mode_box,
        "certificates": {
            "checked": basic.certificates.len(),
            "all_acyclic": basic.all_acyclic(),
            "modes": basic.certificates,
        },
    });
    let mut sound = basic.all_acyclic();
    if let Some(path) = &a.form {
        let beta = format::parse_form(&read(path, digest, "form")?, f.n)?;
        let cert = torus::homotopy_certificate(&beta, &f)?;
        sound &= cert.residual.is_zero();
        result["form"] = json!({
            "input": form_json(&beta),
            "average": form_json(&torus::average(&beta, &f)),
            "primitive": form_json(&cert.q),
            "residual_zero": cert.residual.is_zero(),
        });
    }
    if !sound {
        let mut err = CliError::new("certificate", "a torus certificate failed to verify");
        err.detail = Some(result);
        return Err(err);
    }
    let table = render::torus(&result);
    Ok(Outcome::ok(result, table))
}

fn catalog_verb(a: &CatalogArgs, digest: &mut Digest) -> Result<Outcome, CliError> {
    match &a.name {
        None => {
            digest.add("catalog", b"");
            let entries: Vec<Value> = catalog_names()
                .iter()
                .map(|&name| {
                    let e = catalog(if name == "abelian(n)" { "abelian(1)" } else { name }).expect("listed names resolve");
                    json!({
                        "name": name,
                        "dim": if name == "abelian(n)" { Value::from("n") } else { Value::from(e.algebra.dim()) },
                        "pair": e.subalgebra.is_some(),
                        "description": if name == "abelian(n)" { "abelian Lie algebra R^n".to_string() } else { e.description },
                    })
                })
                .collect();
            let result = json!({ "entries": entries });
            let table = render::catalog_list(&result);
            Ok(Outcome::ok(result, table))
        }
        Some(name) => {
            digest.add("catalog", name.as_bytes());
            let e = catalog(name)?;
            let file: Value = serde_json::from_str(&format::print_algebra(&e.algebra, e.subalgebra.as_ref()))
                .expect("printed algebra is JSON");
            let result = json!({
                "name": e.name,
                "description": e.description,
                "algebra": file,
                "advisory": e.advisory,
            });
            let table = format::print_algebra(&e.algebra, e.subalgebra.as_ref());
            Ok(Outcome::ok(result, format!("# {}\n{}\n", e.description, table)))
        }
    }
}
