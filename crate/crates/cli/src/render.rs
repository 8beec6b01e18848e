//! Fixed-width text renderings of the JSON payloads.

use std::fmt::Write;

use serde_json::Value;

fn s(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn ints(v: &Value) -> Vec<String> {
    v.as_array().map(|a| a.iter().map(s).collect()).unwrap_or_default()
}

fn field(out: &mut String, key: &str, value: impl std::fmt::Display) {
    writeln!(out, "{key:<16}{value}").unwrap();
}

fn vector(v: &Value) -> String {
    format!("({})", ints(v).join(", "))
}

pub fn check(r: &Value) -> String {
    let mut out = String::new();
    for key in ["algebra", "dim", "jacobi", "tau_free", "abelian", "center_dim", "derived_dim", "unimodular", "compact_type"] {
        field(&mut out, key, s(&r[key]));
    }
    if let Some(h) = r.get("subalgebra") {
        field(&mut out, "subalgebra_dim", s(&h["dim"]));
        field(&mut out, "is_ideal", s(&h["is_ideal"]));
    }
    if let Some(d) = r.get("description") {
        field(&mut out, "description", s(d));
    }
    out
}

fn representatives(out: &mut String, reps: &Value, offset: usize) {
    let Some(map) = reps.as_object() else { return };
    for (k, vs) in map {
        let k: usize = k.parse().unwrap_or(0) + offset;
        for v in vs.as_array().into_iter().flatten() {
            writeln!(out, "  H^{k}  {}", vector(v)).unwrap();
        }
    }
}

pub fn betti(r: &Value, offset: usize, reps: bool) -> String {
    let mut out = String::new();
    field(&mut out, "algebra", s(&r["algebra"]));
    field(&mut out, "route", s(&r["route"]));
    writeln!(out, "{:>4}  {:>6}", "k", "b_k").unwrap();
    for (k, b) in ints(&r["betti"]).iter().enumerate() {
        writeln!(out, "{:>4}  {:>6}", k + offset, b).unwrap();
    }
    if let Some(e) = r.get("euler") {
        field(&mut out, "euler", s(e));
    }
    if reps {
        writeln!(out, "representatives").unwrap();
        representatives(&mut out, &r["representatives"], offset);
    }
    out
}

pub fn gh(r: &Value) -> String {
    let mut out = String::new();
    field(&mut out, "algebra", s(&r["algebra"]));
    field(&mut out, "verdict", s(&r["verdict"]));
    field(&mut out, "theorem", s(&r["theorem"]));
    writeln!(out, "audit").unwrap();
    for a in r["audit"].as_array().into_iter().flatten() {
        writeln!(out, "  {}: {}", s(&a["hypothesis"]), s(&a["status"])).unwrap();
    }
    if !r["betti"].is_null() {
        field(&mut out, "betti", vector(&r["betti"]));
        field(&mut out, "route", s(&r["route"]));
    }
    for c in r["cross_checks"].as_array().into_iter().flatten() {
        writeln!(
            out,
            "cross-check     {} {} vs {} {}: {} ({})",
            s(&c["left_route"]),
            vector(&c["left"]),
            s(&c["right_route"]),
            vector(&c["right"]),
            if c["equal"] == Value::Bool(true) { "equal" } else { "differ" },
            s(&c["expectation"]),
        )
        .unwrap();
    }
    if let Some(a) = r.get("advisory").filter(|a| !a.is_null()) {
        writeln!(out, "advisory        {}", s(&a["message"])).unwrap();
        field(&mut out, "  known H_dR", vector(&a["known_de_rham"]));
        if !a["quotient_algebra_betti"].is_null() {
            field(&mut out, "  H(g/h)", vector(&a["quotient_algebra_betti"]));
        }
    }
    if let Some(n) = r.get("note").filter(|n| !n.is_null()) {
        field(&mut out, "note", s(n));
    }
    if let Some(reps) = r.get("representatives") {
        writeln!(out, "representatives").unwrap();
        representatives(&mut out, reps, 0);
    }
    out
}

pub fn e1(r: &Value) -> String {
    let mut out = String::new();
    field(&mut out, "algebra", s(&r["algebra"]));
    field(&mut out, "invariants", vector(&r["invariants"]));
    field(&mut out, "basic_betti", vector(&r["basic_betti"]));
    let rows = r["entries"].as_array().cloned().unwrap_or_default();
    let width = rows.first().and_then(Value::as_array).map_or(0, Vec::len);
    write!(out, "{:>6}", "i\\j").unwrap();
    for j in 0..width {
        write!(out, "{j:>6}").unwrap();
    }
    writeln!(out).unwrap();
    for (i, row) in rows.iter().enumerate() {
        write!(out, "{i:>6}").unwrap();
        for x in ints(row) {
            write!(out, "{x:>6}").unwrap();
        }
        writeln!(out).unwrap();
    }
    out
}

pub fn torus(r: &Value) -> String {
    let mut out = String::new();
    let f = &r["foliation"];
    field(&mut out, "n", s(&f["n"]));
    for (key, label) in [("h", "h"), ("closure", "closure"), ("k0", "K0")] {
        let rows: Vec<String> = f[key].as_array().into_iter().flatten().map(vector).collect();
        field(&mut out, label, if rows.is_empty() { "0".to_string() } else { rows.join(" ") });
    }
    field(&mut out, "basic betti", vector(&r["betti"]));
    let c = &r["certificates"];
    field(
        &mut out,
        "modes checked",
        format!("{} in box {} (all acyclic: {})", s(&c["checked"]), s(&r["mode_box"]), s(&c["all_acyclic"])),
    );
    if let Some(form) = r.get("form") {
        field(&mut out, "average", form["average"].to_string());
        field(&mut out, "primitive", form["primitive"].to_string());
        field(&mut out, "residual zero", s(&form["residual_zero"]));
    }
    out
}

pub fn catalog_list(r: &Value) -> String {
    let mut out = String::new();
    writeln!(out, "{:<14}{:>4}  {:<5} description", "name", "dim", "pair").unwrap();
    for e in r["entries"].as_array().into_iter().flatten() {
        writeln!(
            out,
            "{:<14}{:>4}  {:<5} {}",
            s(&e["name"]),
            s(&e["dim"]),
            if e["pair"] == Value::Bool(true) { "yes" } else { "no" },
            s(&e["description"])
        )
        .unwrap();
    }
    out
}
