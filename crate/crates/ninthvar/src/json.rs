//! JSON encodings of polynomials, rational functions and check reports.
//!
//! A polynomial is an array of terms in canonical (graded-lex, ascending) order,
//! each `{"coeff": "p/q", "monomial": {"x1": 2, "c-3": 1}}`.

use ninthvar_core::identities::CheckReport;
use ninthvar_core::ring::{Monomial, Poly, RatFn, Rational, VarId};
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> CliResult<Rational> {
    s.trim().parse::<Rational>().map_err(|e| CliError::format(format!("bad rational {s:?}: {e}")))
}

pub fn monomial_to_json(m: &Monomial) -> Value {
    let mut map = Map::new();
    for &(v, e) in m.pairs() {
        map.insert(v.name(), Value::from(e));
    }
    Value::Object(map)
}

pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(m, c)| json!({ "coeff": rational_to_string(c), "monomial": monomial_to_json(m) }))
            .collect(),
    )
}

pub fn monomial_from_json(v: &Value) -> CliResult<Monomial> {
    let map = v.as_object().ok_or_else(|| CliError::format("a monomial must be an object of exponents"))?;
    let mut pairs = Vec::with_capacity(map.len());
    for (name, e) in map {
        let var = VarId::parse(name).ok_or_else(|| CliError::format(format!("unknown variable {name:?}")))?;
        let e = e
            .as_i64()
            .and_then(|e| i32::try_from(e).ok())
            .ok_or_else(|| CliError::format(format!("exponent of {name} is not a small integer")))?;
        if e < 0 && !var.family().is_laurent() {
            return Err(CliError::format(format!("{name} cannot have a negative exponent")));
        }
        pairs.push((var, e));
    }
    Ok(Monomial::from_pairs(pairs))
}

pub fn poly_from_json(v: &Value) -> CliResult<Poly> {
    let terms = v.as_array().ok_or_else(|| CliError::format("a polynomial must be an array of terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let coeff = t
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or_else(|| CliError::format("each term needs a string \"coeff\""))?;
        let mono = match t.get("monomial") {
            Some(m) => monomial_from_json(m)?,
            None => Monomial::one(),
        };
        out.push((mono, parse_rational(coeff)?));
    }
    Ok(Poly::from_terms(out))
}

/// A value that is either a plain polynomial or `{"numerator", "denominator"}`
/// with the denominator as a list of `{"factor", "multiplicity"}`.
pub fn ratfn_to_json(r: &RatFn) -> Value {
    let r = r.reduced();
    if let Some(p) = r.to_poly() {
        return poly_to_json(&p);
    }
    let den: Vec<Value> =
        r.factors().map(|(g, m)| json!({ "factor": poly_to_json(g), "multiplicity": m })).collect();
    json!({ "numerator": poly_to_json(r.numerator()), "denominator": den })
}

/// Parameter values are echoed as numbers, integer arrays or strings.
fn param_value(s: &str) -> Value {
    if let Ok(n) = s.parse::<i64>() {
        return Value::from(n);
    }
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        if inner.is_empty() {
            return Value::Array(Vec::new());
        }
        let parts: Option<Vec<Value>> = inner.split(',').map(|p| p.trim().parse::<i64>().ok().map(Value::from)).collect();
        if let Some(parts) = parts {
            return Value::Array(parts);
        }
    }
    Value::String(s.to_string())
}

pub fn params_to_json(params: &[(String, String)]) -> Value {
    Value::Object(params.iter().map(|(k, v)| (k.clone(), param_value(v))).collect())
}

/// `elapsed_ms` is only written when `timing` is set, so that identical
/// invocations give identical bytes by default.
pub fn report_to_json(r: &CheckReport, timing: bool) -> Value {
    let mut map = Map::new();
    map.insert("identity_id".into(), Value::from(r.identity_id.clone()));
    map.insert("parameters".into(), params_to_json(&r.params));
    map.insert("verdict".into(), Value::from(if r.holds { "holds" } else { "fails" }));
    map.insert("difference".into(), poly_to_json(&r.witness.terms));
    map.insert("term_count".into(), Value::from(r.witness.term_count));
    map.insert("complete".into(), Value::from(r.witness.is_complete()));
    map.insert("notes".into(), Value::from(r.notes.clone()));
    if timing {
        map.insert("elapsed_ms".into(), Value::from(r.elapsed_ms));
    }
    Value::Object(map)
}

/// Pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialise");
    s.push('\n');
    s
}
