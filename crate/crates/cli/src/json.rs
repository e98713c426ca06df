//! JSON rendering for `--json` mode.
//!
//! All integers are decimal strings: numerator coefficients and dimension
//! counts routinely exceed the ranges JSON consumers parse reliably.

use num_bigint::BigUint;
use serde_json::{json, Value};

use hsop_core::classifier::{AdmissibilityReport, ReductionWitness, ScanReport};
use hsop_core::conditions::Theorem1Report;
use hsop_core::forms::catalog::CatalogEntry;
use hsop_core::forms::BinaryForm;
use hsop_core::poly::{IntPolynomial, TruncatedSeries};
use hsop_core::DegreeSequence;

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|v| v.to_string()).collect()
}

fn poly_terms(p: &IntPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!([e.to_string(), c.to_string()]))
        .collect();
    Value::Array(terms)
}

pub fn dims(n: u32, m: u32, order: u64, dim: &BigUint) -> String {
    json!({
        "cmd": "dims",
        "n": n.to_string(),
        "m": m.to_string(),
        "order": order.to_string(),
        "dimension": dim.to_string(),
    })
    .to_string()
}

pub fn table_row(m: u32, row: &[BigUint]) -> String {
    json!({
        "cmd": "table",
        "m": m.to_string(),
        "values": strings(row),
    })
    .to_string()
}

pub fn poincare(n: u32, order: u32, p: &TruncatedSeries) -> String {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!([e.to_string(), c.to_string()]))
        .collect();
    json!({
        "cmd": "poincare",
        "n": n.to_string(),
        "order": order.to_string(),
        "terms": terms,
    })
    .to_string()
}

pub fn numerator(
    n: u32,
    degrees: &[u64],
    p: &IntPolynomial,
    palindromic: bool,
    first_negative: Option<usize>,
) -> String {
    json!({
        "cmd": "numerator",
        "n": n.to_string(),
        "degrees": strings(degrees),
        "terms": poly_terms(p),
        "palindromic": palindromic,
        "first_negative": first_negative.map(|e| e.to_string()),
    })
    .to_string()
}

pub fn check(report: &Theorem1Report, degrees: &[u64]) -> String {
    let requirements: Vec<Value> = report
        .statuses
        .iter()
        .map(|s| {
            json!({
                "modulus": s.requirement.modulus.to_string(),
                "need": s.requirement.min_count.to_string(),
                "have": s.have.to_string(),
                "ok": s.ok,
            })
        })
        .collect();
    json!({
        "cmd": "check",
        "n": report.n.to_string(),
        "degrees": strings(degrees),
        "pass": report.passes(),
        "requirements": requirements,
    })
    .to_string()
}

pub fn admissible(report: &AdmissibilityReport) -> String {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            json!({
                "rule": v.rule,
                "description": v.description,
                "witnesses": strings(&v.witnesses),
            })
        })
        .collect();
    json!({
        "cmd": "admissible",
        "n": report.n.to_string(),
        "degrees": strings(&report.degrees),
        "admissible": report.verdict(),
        "violations": violations,
    })
    .to_string()
}

pub fn minimal(
    n: u32,
    degrees: &[u64],
    admissible: bool,
    minimal: bool,
    reduction: Option<&ReductionWitness>,
) -> String {
    json!({
        "cmd": "minimal",
        "n": n.to_string(),
        "degrees": strings(degrees),
        "admissible": admissible,
        "minimal": minimal,
        "reduction": reduction.map(|w| json!({
            "entry": w.entry.to_string(),
            "split": [w.split.0.to_string(), w.split.1.to_string()],
            "left": strings(&w.left),
            "right": strings(&w.right),
        })),
    })
    .to_string()
}

pub fn sequence_line(seq: &DegreeSequence) -> String {
    json!({
        "cmd": "enumerate",
        "n": seq.n().to_string(),
        "degrees": strings(seq.degrees()),
    })
    .to_string()
}

pub fn scan(report: &ScanReport) -> String {
    let obstructions: Vec<Value> = report
        .obstructions
        .iter()
        .map(|o| {
            json!({
                "degrees": strings(&o.degrees),
                "first_negative": o.first_negative.to_string(),
            })
        })
        .collect();
    json!({
        "cmd": "scan",
        "n": report.n.to_string(),
        "lower": report.lower.to_string(),
        "upper": report.upper.to_string(),
        "passing": report.passing.to_string(),
        "obstructions": obstructions,
    })
    .to_string()
}

pub fn transvect(k: u32, result: &BinaryForm) -> String {
    json!({
        "cmd": "transvect",
        "k": k.to_string(),
        "degree": result.degree().to_string(),
        "coefficients": strings(result.coeffs()),
    })
    .to_string()
}

pub fn nullform(degree: u32, multiplicity: u32, nullform: bool) -> String {
    json!({
        "cmd": "nullform",
        "degree": degree.to_string(),
        "max_multiplicity": multiplicity.to_string(),
        "nullform": nullform,
    })
    .to_string()
}

pub fn catalog_entry(name: &str, degree: u64, order: u32) -> String {
    json!({
        "cmd": "eval-invariant",
        "chain": name,
        "degree": degree.to_string(),
        "order": order.to_string(),
    })
    .to_string()
}

pub fn eval_invariant(entry: &CatalogEntry, value: &BinaryForm) -> String {
    let mut obj = json!({
        "cmd": "eval-invariant",
        "chain": entry.name,
        "degree": entry.degree.to_string(),
        "order": entry.order.to_string(),
    });
    let map = obj.as_object_mut().expect("object literal");
    if let Some(scalar) = value.scalar_value() {
        map.insert("value".into(), Value::String(scalar.to_string()));
    } else {
        map.insert(
            "coefficients".into(),
            Value::Array(
                value
                    .coeffs()
                    .iter()
                    .map(|c| Value::String(c.to_string()))
                    .collect(),
            ),
        );
    }
    obj.to_string()
}
