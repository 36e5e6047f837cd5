//! Batch manifests: a JSON array of checks run on a worker pool.
//!
//! ```json
//! [{"identity": "cauchy", "n": 2, "truncate": 3},
//!  {"identity": "jt", "family": "c", "lambda": [2, 1], "n": 2, "c": "zeros"}]
//! ```
//!
//! `sequence` and `c` take the flag syntax (`"factorial"`, `"file:PATH"`, …)
//! or an inline spec object; relative paths are read from the manifest's
//! directory. Reports come back in manifest order.

use std::path::Path;

use ninthvar_core::identities::CheckReport;
use ninthvar_core::registry::{self, CheckParams};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::cli::{combine, parse_c, parse_sequence, timed_check, Format, Outcome, OutputArgs};
use crate::error::{CliError, CliResult};
use crate::json::{render, report_to_json};
use crate::spec::{cspec_from_json, read_json, sequence_from_json};
use crate::text::report_to_text;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestItem {
    pub identity: String,
    pub family: Option<String>,
    pub lambda: Option<Vec<i64>>,
    pub mu: Option<Vec<i64>>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub truncate: Option<u32>,
    pub sequence: Option<Value>,
    pub c: Option<Value>,
    #[serde(default)]
    pub c_cut: bool,
    #[serde(default)]
    pub c0_zero: bool,
}

pub fn parse_manifest(v: Value) -> CliResult<Vec<ManifestItem>> {
    if !v.is_array() {
        return Err(CliError::format("a manifest must be a JSON array of checks"));
    }
    Ok(serde_json::from_value(v)?)
}

fn item_params(item: &ManifestItem, base: &Path) -> CliResult<CheckParams> {
    registry::lookup(&item.identity)?;
    let spec = match &item.sequence {
        None => parse_sequence("factorial", base)?,
        Some(Value::String(s)) => parse_sequence(s, base)?,
        Some(v @ Value::Object(_)) => sequence_from_json(v)?,
        Some(_) => return Err(CliError::format("\"sequence\" must be a string or an object")),
    };
    let c = match &item.c {
        None => None,
        Some(Value::String(s)) => Some(parse_c(s, base)?),
        Some(v @ Value::Object(_)) => Some(cspec_from_json(v)?),
        Some(_) => return Err(CliError::format("\"c\" must be a string or an object")),
    };
    let resolved = combine(spec, c, item.c_cut, item.c0_zero)?;
    Ok(CheckParams {
        family: item.family.clone(),
        lambda: item.lambda.clone(),
        mu: item.mu.clone(),
        n: item.n,
        m: item.m,
        p: item.p,
        q: item.q,
        truncate: item.truncate.unwrap_or(4),
        sequence: resolved.sequence,
        c: resolved.c,
    })
}

fn run_item(item: &ManifestItem, base: &Path) -> CliResult<CheckReport> {
    let params = item_params(item, base)?;
    timed_check(&item.identity, &params)
}

pub fn run(manifest: &Path, workers: Option<usize>, out: &OutputArgs) -> CliResult<Outcome> {
    if workers == Some(0) {
        return Err(CliError::usage("--workers must be at least 1"));
    }
    let items = parse_manifest(read_json(manifest)?)?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .map_err(|e| CliError::usage(format!("cannot start {workers:?} workers: {e}")))?;
    let results: Vec<CliResult<CheckReport>> = pool.install(|| items.par_iter().map(|i| run_item(i, base)).collect());

    let passed = results.iter().filter(|r| matches!(r, Ok(rep) if rep.holds)).count();
    let failed = results.iter().filter(|r| matches!(r, Ok(rep) if !rep.holds)).count();
    let errors = results.len() - passed - failed;
    let code = if failed > 0 {
        1
    } else if errors > 0 {
        2
    } else {
        0
    };
    let stdout = match out.format {
        Format::Json => {
            let reports: Vec<Value> = items
                .iter()
                .zip(&results)
                .map(|(item, r)| match r {
                    Ok(rep) => report_to_json(rep, out.timing),
                    Err(e) => json!({ "identity_id": item.identity, "error": e.to_string() }),
                })
                .collect();
            render(&json!({
                "reports": reports,
                "summary": { "passed": passed, "failed": failed, "errors": errors, "total": results.len() },
            }))
        }
        Format::Text => {
            let mut s = String::new();
            for (item, r) in items.iter().zip(&results) {
                match r {
                    Ok(rep) => s += &report_to_text(rep, out.timing),
                    Err(e) => s += &format!("{}: error: {e}\n", item.identity),
                }
            }
            s += &format!("{passed}/{} passed\n", results.len());
            s
        }
    };
    Ok(Outcome { code, stdout, stderr: String::new() })
}
