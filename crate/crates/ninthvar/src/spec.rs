//! The sequence-spec and `c`-spec JSON files.
//!
//! ```json
//! {"kind": "custom",
//!  "c": {"kind": "symbolic", "values": {"0": "0"}, "negative_cut": true},
//!  "coeffs": {"0": ["1"], "1": ["-1/2", "1"], "-1": ["0", "1"]}}
//! ```
//!
//! For `n ≥ 0` the list under `"n"` holds the coefficients of `x^0, x^1, …` in
//! `f_n`; under `"-n"` it holds those of `x^0, x^{-1}, …` in `f_{-n}`. Each
//! coefficient is a rational string or a polynomial in JSON form. For a
//! symbolic `c`, `"values"` overrides single entries.

use std::collections::BTreeMap;
use std::path::Path;

use ninthvar_core::ring::{Poly, Rational};
use ninthvar_core::sequences::{AdmissibleSequence, CKind, CSpec, SeqKind};
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};
use crate::json::{parse_rational, poly_from_json, poly_to_json, rational_to_string};

pub fn read_json(path: &Path) -> CliResult<Value> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|e| CliError::format(format!("{}: {e}", path.display())))
}

fn index_key(k: &str) -> CliResult<i64> {
    k.trim().parse::<i64>().map_err(|_| CliError::format(format!("index {k:?} is not an integer")))
}

fn values_from_json(v: Option<&Value>) -> CliResult<BTreeMap<i64, Rational>> {
    let Some(v) = v else { return Ok(BTreeMap::new()) };
    let map = v.as_object().ok_or_else(|| CliError::format("\"values\" must be an object"))?;
    map.iter()
        .map(|(k, r)| {
            let r = r.as_str().ok_or_else(|| CliError::format(format!("c value at {k} must be a rational string")))?;
            Ok((index_key(k)?, parse_rational(r)?))
        })
        .collect()
}

pub fn cspec_from_json(v: &Value) -> CliResult<CSpec> {
    let obj = v.as_object().ok_or_else(|| CliError::format("a c spec must be an object"))?;
    let kind = obj.get("kind").and_then(Value::as_str).unwrap_or("symbolic");
    let values = values_from_json(obj.get("values"))?;
    let c = match kind {
        "symbolic" => CSpec::symbolic_with(values),
        "zeros" if values.is_empty() => CSpec::zeros(),
        "zeros" => return Err(CliError::format("a zeros c spec takes no values")),
        "explicit" => CSpec::explicit(values),
        other => return Err(CliError::format(format!("unknown c kind {other:?}; use symbolic, zeros or explicit"))),
    };
    let cut = match obj.get("negative_cut") {
        None => false,
        Some(b) => b.as_bool().ok_or_else(|| CliError::format("\"negative_cut\" must be a boolean"))?,
    };
    Ok(c.with_negative_cut(cut))
}

pub fn cspec_to_json(c: &CSpec) -> Value {
    let values = |m: &BTreeMap<i64, Rational>| -> Value {
        Value::Object(m.iter().map(|(k, r)| (k.to_string(), Value::from(rational_to_string(r)))).collect())
    };
    let mut obj = match c.kind() {
        CKind::Symbolic { overrides } => json!({ "kind": "symbolic", "values": values(overrides) }),
        CKind::Zeros => json!({ "kind": "zeros" }),
        CKind::Explicit { values: v } => json!({ "kind": "explicit", "values": values(v) }),
    };
    let map = obj.as_object_mut().expect("object");
    map.insert("negative_cut".into(), Value::from(c.has_negative_cut()));
    if c.offset() != 0 {
        map.insert("offset".into(), Value::from(c.offset()));
    }
    if c.is_reversed() {
        map.insert("reversed".into(), Value::from(true));
    }
    obj
}

fn coefficient_from_json(v: &Value) -> CliResult<Poly> {
    match v {
        Value::String(s) => Ok(Poly::constant(parse_rational(s)?)),
        Value::Array(_) => poly_from_json(v),
        _ => Err(CliError::format("a coefficient must be a rational string or a polynomial")),
    }
}

fn coefficient_to_json(p: &Poly) -> Value {
    match p.as_constant() {
        Some(r) => Value::from(rational_to_string(&r)),
        None => poly_to_json(p),
    }
}

/// A parsed sequence file: the sequence and, for the factorial kind, its `c`.
#[derive(Clone, Debug)]
pub struct SequenceSpec {
    pub sequence: AdmissibleSequence,
    pub c: Option<CSpec>,
}

pub fn sequence_from_json(v: &Value) -> CliResult<SequenceSpec> {
    let obj = v.as_object().ok_or_else(|| CliError::format("a sequence spec must be an object"))?;
    let kind = obj.get("kind").and_then(Value::as_str).ok_or_else(|| CliError::format("sequence spec needs \"kind\""))?;
    let c = obj.get("c").map(cspec_from_json).transpose()?;
    match kind {
        "factorial" => {
            let c = c.unwrap_or_else(CSpec::symbolic);
            Ok(SequenceSpec { sequence: AdmissibleSequence::factorial(c.clone()), c: Some(c) })
        }
        "monomial" => Ok(SequenceSpec { sequence: AdmissibleSequence::monomial(), c }),
        "custom" => {
            let coeffs = obj
                .get("coeffs")
                .and_then(Value::as_object)
                .ok_or_else(|| CliError::format("a custom sequence needs a \"coeffs\" object"))?;
            let mut pos: BTreeMap<i64, Vec<Poly>> = BTreeMap::new();
            let mut neg: BTreeMap<i64, Vec<Poly>> = BTreeMap::new();
            for (k, list) in coeffs {
                let n = index_key(k)?;
                let list = list.as_array().ok_or_else(|| CliError::format(format!("coeffs[{k}] must be a list")))?;
                let row = list.iter().map(coefficient_from_json).collect::<CliResult<Vec<_>>>()?;
                if n >= 0 {
                    pos.insert(n, row);
                } else {
                    neg.insert(-n, row);
                }
            }
            let table = contiguous(pos, 0, "f_")?;
            let negative = contiguous(neg, 1, "f_-")?;
            Ok(SequenceSpec { sequence: AdmissibleSequence::custom(table, negative)?, c })
        }
        other => Err(CliError::format(format!("unknown sequence kind {other:?}; use factorial, monomial or custom"))),
    }
}

fn contiguous(rows: BTreeMap<i64, Vec<Poly>>, start: i64, label: &str) -> CliResult<Vec<Vec<Poly>>> {
    let mut out = Vec::with_capacity(rows.len());
    for (expected, (n, row)) in (start..).zip(rows) {
        if n != expected {
            return Err(CliError::format(format!("coefficients for {label}{expected} are missing")));
        }
        out.push(row);
    }
    Ok(out)
}

pub fn sequence_to_json(f: &AdmissibleSequence) -> Value {
    match f.kind() {
        SeqKind::Monomial => json!({ "kind": "monomial" }),
        SeqKind::Factorial(c) => json!({ "kind": "factorial", "c": cspec_to_json(c) }),
        SeqKind::Custom { table, negative } => {
            let mut coeffs = Map::new();
            for (n, row) in table.iter().enumerate() {
                coeffs.insert(n.to_string(), Value::Array(row.iter().map(coefficient_to_json).collect()));
            }
            for (i, row) in negative.iter().enumerate() {
                coeffs.insert(format!("-{}", i + 1), Value::Array(row.iter().map(coefficient_to_json).collect()));
            }
            json!({ "kind": "custom", "coeffs": coeffs })
        }
    }
}
