use std::fmt;
use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use canon_core::maximizers::{b_set, bperm_labeling, max_poset, path_profile, valley_walk, LabeledPath, MaxPoset};
use canon_core::sequences::{report_by_name, SequenceReport, Terms, SEQUENCE_NAMES};
use canon_core::verify::{Suite, Verifier, VerifyConfig};
use canon_core::{
    canon_descent_poly, tableau_descent_poly, tilde_poly, DescentPolynomial, DyckPath, Permutation, RectTableau,
};
use serde_json::{json, Value};

use crate::Config;

/// Successful runs report whether every non-conjectural check passed.
#[repr(u8)]
pub enum Status {
    Ok = 0,
    CheckFailed = 1,
}

pub enum CliError {
    Input(String),
    Bound(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Bound(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Bound(m) => f.write_str(m),
        }
    }
}

impl From<canon_core::Error> for CliError {
    fn from(e: canon_core::Error) -> Self {
        match e {
            canon_core::Error::BruteForceBoundExceeded { .. } => CliError::Bound(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

type Outcome = Result<Status, CliError>;

fn parse_path(text: &str) -> Result<DyckPath, CliError> {
    text.parse().map_err(|e: canon_core::Error| CliError::Input(format!("`{text}`: {e}")))
}

fn emit(value: Value) {
    println!("{value}");
}

fn coeffs_json(p: &DescentPolynomial) -> Value {
    let numbers: Vec<Value> =
        p.coeffs().iter().map(|c| Value::Number(c.to_string().parse().expect("decimal integer"))).collect();
    json!({ "coeffs": numbers })
}

fn perm_json(s: &Permutation) -> Value {
    json!(s.entries())
}

fn perms_json(list: &[Permutation]) -> Value {
    Value::Array(list.iter().map(perm_json).collect())
}

fn words(list: &[Permutation]) -> String {
    list.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn poly(cfg: &Config, path: &str, tilde: bool) -> Outcome {
    let d = parse_path(path)?;
    let p: DescentPolynomial = if tilde { tilde_poly(&d, cfg.bound())? } else { canon_descent_poly(&d, cfg.bound())? };
    if cfg.json() {
        emit(coeffs_json(&p));
    } else {
        println!("{p}");
    }
    Ok(Status::Ok)
}

pub fn tableau_poly(cfg: &Config, text: &str) -> Outcome {
    let t = RectTableau::parse(text)?;
    let p: DescentPolynomial = tableau_descent_poly(&t, cfg.bound())?;
    if cfg.json() {
        emit(coeffs_json(&p));
    } else {
        println!("{p}");
    }
    Ok(Status::Ok)
}

fn labeled_json(c: &LabeledPath) -> Value {
    json!({
        "path": c.path().to_string(),
        "labels": c.labels(),
        "descents": c.descent_set(),
    })
}

pub fn bperm(cfg: &Config, path: &str, labels: bool) -> Outcome {
    let d = parse_path(path)?;
    let c = bperm_labeling(&d);
    let s = c.permutation().expect("bperm yields a canon labeling");
    if cfg.json() {
        emit(json!({ "path": d.to_string(), "bperm": perm_json(&s), "labels": c.labels() }));
    } else {
        println!("{s}");
        if labels {
            println!("{}", join_numbers(c.labels()));
        }
    }
    Ok(Status::Ok)
}

fn join_numbers(xs: &[u32]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn vperm(cfg: &Config, path: &str, trace: bool) -> Outcome {
    let d = parse_path(path)?;
    let walk = valley_walk(&d.bounce(), &d)?;
    let s = walk.last().and_then(LabeledPath::permutation).expect("walk ends on a canon labeling");
    if cfg.json() {
        let mut out = json!({ "path": d.to_string(), "vperm": perm_json(&s) });
        if trace {
            out["trace"] = Value::Array(walk.iter().map(labeled_json).collect());
        }
        emit(out);
    } else {
        if trace {
            for c in &walk {
                println!("{} {}", c.path(), join_numbers(c.labels()));
            }
        }
        println!("{s}");
    }
    Ok(Status::Ok)
}

pub fn maximizers(cfg: &Config, path: &str) -> Outcome {
    let d = parse_path(path)?;
    let n = d.semilength();
    let profile = if n <= cfg.bound() {
        Some(path_profile(&d, cfg.bound())?)
    } else {
        eprintln!("note: semilength {n} exceeds the brute-force bound {}; M_d is not listed", cfg.bound());
        None
    };
    let m_d = profile.as_ref().map_or_else(|| canon_core::maximizers::max_descents_formula(&d), |p| p.max_descents);
    let b = bperm_labeling(&d).permutation().expect("canon labeling");
    let v = canon_core::maximizers::vperm(&d);
    let bs = b_set(&d);
    let mut blocks = Vec::with_capacity(bs.len());
    for b in &bs {
        blocks.push((b, max_poset(&d, b)?.linear_extensions()));
    }
    if cfg.json() {
        let mut out = json!({
            "path": d.to_string(),
            "m_d": m_d,
            "bperm": perm_json(&b),
            "vperm": perm_json(&v),
            "B_d": bs.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "partition": blocks.iter().map(|(b, ext)| json!({ "b": b.to_string(), "extensions": perms_json(ext) })).collect::<Vec<_>>(),
        });
        if let Some(p) = &profile {
            out["M_d"] = perms_json(&p.maximizers);
        }
        emit(out);
    } else {
        println!("path {d}");
        println!("m_d {m_d}");
        println!("bperm {b}");
        println!("vperm {v}");
        println!("B_d {}", bs.len());
        for (b, ext) in &blocks {
            println!("  {b}: {}", words(ext));
        }
        if let Some(p) = &profile {
            println!("M_d {}: {}", p.maximizers.len(), words(&p.maximizers));
        }
    }
    Ok(Status::Ok)
}

pub fn bset(cfg: &Config, path: &str) -> Outcome {
    let d = parse_path(path)?;
    let bs: Vec<String> = b_set(&d).iter().map(ToString::to_string).collect();
    if cfg.json() {
        emit(json!({ "path": d.to_string(), "B_d": bs }));
    } else {
        for b in bs {
            println!("{b}");
        }
    }
    Ok(Status::Ok)
}

fn poset_json(p: &MaxPoset) -> Value {
    let pairs =
        |s: &std::collections::BTreeSet<(usize, usize)>| s.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>();
    json!({
        "size": p.size(),
        "relations": pairs(p.relations()),
        "hasse": pairs(&p.hasse()),
        "chain": p.is_chain(),
    })
}

pub fn poset(cfg: &Config, path: &str, b: &str) -> Outcome {
    let d = parse_path(path)?;
    let b = parse_path(b)?;
    let p = max_poset(&d, &b)?;
    let ext = p.linear_extensions();
    if cfg.json() {
        let mut out = poset_json(&p);
        out["d"] = json!(d.to_string());
        out["b"] = json!(b.to_string());
        out["extensions"] = perms_json(&ext);
        emit(out);
    } else {
        println!("{p}");
        println!("chain {}", if p.is_chain() { "yes" } else { "no" });
        println!("extensions {}: {}", ext.len(), words(&ext));
    }
    Ok(Status::Ok)
}

pub fn bounce(cfg: &Config, path: &str) -> Outcome {
    let d = parse_path(path)?;
    let factors: Vec<String> =
        d.bounce_factors().ranges().into_iter().map(|r| d.steps()[r].iter().map(|s| s.as_char()).collect()).collect();
    if cfg.json() {
        emit(json!({
            "path": d.to_string(),
            "bounce": d.bounce().to_string(),
            "bcomp": d.bcomp().parts(),
            "bpk": d.bpk(),
            "factors": factors,
        }));
    } else {
        println!("bounce {}", d.bounce());
        println!("bcomp {}", d.bcomp());
        println!("bpk {}", d.bpk());
        println!("factors {}", factors.join("|"));
    }
    Ok(Status::Ok)
}

fn terms_json(t: &Terms) -> Value {
    match t {
        Terms::Scalar(v) => Value::Array(v.iter().map(|(n, x)| json!([n, x])).collect()),
        Terms::Rows(rows) => Value::Array(rows.iter().map(|(n, r)| json!([n, r])).collect()),
    }
}

fn report_json(r: &SequenceReport) -> Value {
    json!({
        "name": r.name,
        "method": r.method,
        "conjectural": r.conjectural,
        "passed": r.passed(),
        "series": r.series.iter().map(|s| json!({ "name": s.name, "terms": terms_json(&s.terms) })).collect::<Vec<_>>(),
        "checks": r.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect::<Vec<_>>(),
        "violations": r.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub fn sequence(cfg: &Config, name: &str, max_n: usize, bfile: Option<&Path>) -> Outcome {
    if max_n == 0 {
        return Err(CliError::Input("--max-n must be at least 1".into()));
    }
    eprintln!("computing {name} up to n = {max_n}");
    let report = report_by_name(name, max_n, cfg.exhaustive(), cfg.bound())?.ok_or_else(|| {
        CliError::Input(format!("unknown sequence `{name}` (expected one of {})", SEQUENCE_NAMES.join(", ")))
    })?;
    if let Some(path) = bfile {
        let file = File::create(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        report
            .headline()
            .write_bfile(&mut BufWriter::new(file))
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    if cfg.json() {
        emit(report_json(&report));
    } else {
        for s in &report.series {
            println!("# {}", s.name);
            for line in s.bfile_lines() {
                println!("{line}");
            }
        }
        for c in report.checks.iter().filter(|c| !c.passed) {
            println!("FAILED {}: {}", c.name, c.detail);
        }
        for v in &report.violations {
            println!("{v}");
        }
    }
    if !report.violations.is_empty() {
        eprintln!("warning: {} conjecture violation(s)", report.violations.len());
    }
    Ok(if report.passed() { Status::Ok } else { Status::CheckFailed })
}

pub fn verify(cfg: &Config, max_n: usize, names: &[String]) -> Outcome {
    let mut suites = Vec::new();
    for name in names {
        if name == "all" {
            suites.extend(Suite::ALL);
        } else {
            suites.push(name.parse::<Suite>().map_err(CliError::Input)?);
        }
    }
    suites.dedup();
    let mut config = VerifyConfig::new(max_n);
    config.exhaustive_n = cfg.exhaustive();
    config.brute_force_bound = cfg.bound();
    let verifier = Verifier::new(config);
    let mut results = Vec::new();
    for s in suites {
        eprintln!("running {s}");
        results.push(verifier.run(s)?);
    }
    let passed = results.iter().all(|r| r.passed());
    let violations: usize = results.iter().map(|r| r.violations.len()).sum();
    if cfg.json() {
        emit(json!({
            "max_n": max_n,
            "passed": passed,
            "suites": results.iter().map(|r| json!({
                "name": r.suite.map(Suite::name),
                "passed": r.passed(),
                "checks": r.checks,
                "failures": r.failures,
                "violations": r.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        }));
    } else {
        for r in &results {
            let name = r.suite.map_or("?", Suite::name);
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            println!("{name}: {verdict} ({} checks)", r.checks);
            for f in r.failures.iter().take(10) {
                println!("  {f}");
            }
            for v in &r.violations {
                println!("  {v}");
            }
        }
        println!("{}", if passed { "PASS" } else { "FAIL" });
    }
    if violations > 0 {
        eprintln!("warning: {violations} conjecture violation(s)");
    }
    Ok(if passed { Status::Ok } else { Status::CheckFailed })
}
