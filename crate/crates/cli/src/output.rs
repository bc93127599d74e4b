//! JSON renderings of results.

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use vassiliev_core::{CablingPolynomial, DiagramSum, IntersectionMatrix, PartitionVector, Rational};

use crate::suites::Report;

/// Integers as JSON numbers when they fit, everything else as `"p/q"`.
pub fn rational(r: &Rational) -> Value {
    if r.is_integer() {
        if let Some(i) = r.numer().to_i64() {
            return json!(i);
        }
    }
    json!(r.to_string())
}

pub fn sum(v: &DiagramSum) -> Value {
    let terms: Map<String, Value> = v.iter().rev().map(|(d, c)| (d.to_string(), rational(c))).collect();
    json!({ "degree": v.degree(), "terms": terms })
}

pub fn partition_vector(v: &PartitionVector) -> Value {
    let terms: Map<String, Value> = v.iter().map(|(p, c)| (p.to_string(), rational(c))).collect();
    Value::Object(terms)
}

pub fn polynomial(p: &CablingPolynomial) -> Value {
    json!({ "coeffs": p.coeffs().iter().map(rational).collect::<Vec<_>>() })
}

pub fn matrix(m: &IntersectionMatrix) -> Value {
    json!({ "matrix": m.rows() })
}

pub fn report(r: &Report) -> Value {
    let checks: Vec<Value> =
        r.checks.iter().map(|c| json!({ "name": c.name, "ok": c.ok, "detail": c.detail })).collect();
    json!({ "suite": r.suite.name(), "passed": r.passed(), "checks": checks })
}

/// Plain-text matrix, one row per line.
pub fn matrix_text(m: &IntersectionMatrix) -> String {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}
