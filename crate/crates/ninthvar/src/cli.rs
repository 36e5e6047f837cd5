//! Argument parsing and the subcommand handlers. Exit codes: 0 on success or
//! when every requested identity holds, 1 when one fails, 2 on usage errors.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ninthvar_core::characters::{
    character, first_vars, gt_character, gt_patterns, schur_signature, schur_truncated, GroupType, GtConvention,
};
use ninthvar_core::identities::CheckReport;
use ninthvar_core::ninth;
use ninthvar_core::partition::{Partition, Signature};
use ninthvar_core::registry::{self, CheckParams, SequenceChoice, CATALOGUE};
use ninthvar_core::ring::{RatFn, VarId};
use ninthvar_core::sequences::{AdmissibleSequence, CSpec, DoubleDualSequence, DualSequence, SeqKind};
use serde_json::{json, Value};

use crate::batch;
use crate::error::{CliError, CliResult};
use crate::json::{poly_to_json, ratfn_to_json, render, report_to_json};
use crate::spec::{cspec_from_json, cspec_to_json, read_json, sequence_from_json, sequence_to_json, SequenceSpec};
use crate::text::{ratfn_to_text, report_to_text};

#[derive(Parser, Debug)]
#[command(name = "ninthvar", version, about = "Generalised classical-group characters and their identities, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute s, sp, so or o of a weight over a sequence.
    Compute(ComputeArgs),
    /// Check one identity from the catalogue.
    Check(CheckArgs),
    /// Run a JSON manifest of checks.
    Batch(BatchArgs),
    /// Print the dual (or double dual) of a sequence to a cap.
    Dual(DualArgs),
    /// Evaluate the Gelfand–Tsetlin sum for a signature.
    Gt(GtArgs),
    /// List the identity ids that `check` understands.
    ListIdentities(OutputArgs),
    /// The abstract ring in the h_{r,s}.
    #[command(subcommand)]
    Ninth(NinthCommand),
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Args, Debug, Clone, Default)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json, alias = "emit")]
    pub format: Format,
    /// Include elapsed times in reports.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SequenceArgs {
    /// factorial, monomial or file:PATH (a sequence-spec JSON file).
    #[arg(long, default_value = "factorial")]
    pub sequence: String,
    /// symbolic, zeros or file:PATH (a c-spec JSON file).
    #[arg(long)]
    pub c: Option<String>,
    /// Set c_m = 0 for m < 0.
    #[arg(long)]
    pub c_cut: bool,
    /// Set c_0 = 0.
    #[arg(long)]
    pub c0_zero: bool,
}

impl Default for SequenceArgs {
    fn default() -> SequenceArgs {
        SequenceArgs { sequence: "factorial".into(), c: None, c_cut: false, c0_zero: false }
    }
}

/// A comma-separated list of parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parts(pub Vec<i64>);

fn parse_parts(s: &str) -> Result<Parts, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Parts(Vec::new()));
    }
    s.split(',').map(|p| p.trim().parse::<i64>().map_err(|_| format!("{p:?} is not an integer"))).collect::<Result<_, _>>().map(Parts)
}

#[derive(Args, Debug, Clone, Default)]
pub struct WeightArgs {
    /// Comma-separated parts, e.g. 2,1 or 1,0,-2.
    #[arg(long, value_parser = parse_parts, allow_hyphen_values = true)]
    pub lambda: Option<Parts>,
    /// Inner partition of a skew shape.
    #[arg(long, value_parser = parse_parts, allow_hyphen_values = true)]
    pub mu: Option<Parts>,
    #[arg(long)]
    pub n: Option<usize>,
}

impl WeightArgs {
    pub fn lambda(&self) -> Option<Vec<i64>> {
        self.lambda.as_ref().map(|p| p.0.clone())
    }

    pub fn mu(&self) -> Option<Vec<i64>> {
        self.mu.as_ref().map(|p| p.0.clone())
    }
}

#[derive(Args, Debug, Clone)]
pub struct ComputeArgs {
    #[arg(long)]
    pub family: Option<String>,
    #[command(flatten)]
    pub weight: WeightArgs,
    /// For custom sequences with negative parts: keep x-degree at least -D.
    #[arg(long, default_value_t = 4)]
    pub truncate: u32,
    #[command(flatten)]
    pub seq: SequenceArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct CheckArgs {
    /// Identity id, see `list-identities`.
    pub id: String,
    #[arg(long)]
    pub family: Option<String>,
    #[command(flatten)]
    pub weight: WeightArgs,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long, default_value_t = 4)]
    pub truncate: u32,
    #[command(flatten)]
    pub seq: SequenceArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct BatchArgs {
    pub manifest: PathBuf,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long)]
    pub workers: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct DualArgs {
    #[arg(long, default_value_t = 4)]
    pub truncate: u32,
    /// Print the double dual instead.
    #[arg(long)]
    pub double: bool,
    #[command(flatten)]
    pub seq: SequenceArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GtArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    #[command(flatten)]
    pub seq: SequenceArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Subcommand, Debug)]
pub enum NinthCommand {
    /// Straight or skew Schur function in the h_{r,s}.
    S(NinthCharArgs),
    /// Symplectic character, straight or skew.
    Sp(NinthCharArgs),
    /// Orthogonal character, straight or skew.
    O(NinthCharArgs),
    /// e_r.
    E {
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Nägelsbach–Kostka: h-determinant against e-determinant.
    CheckNk {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// A·B = A⁺·B⁻ = A∘·Bˣ = I.
    CheckInverse {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct NinthCharArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    match run(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n{}", remedy(&e)) },
    }
}

fn remedy(e: &CliError) -> String {
    let hint = match e {
        CliError::Usage(_) => "run `ninthvar help <command>` for the accepted flags",
        CliError::Format(_) => "see the README for the JSON formats",
        CliError::Io { .. } => "check that the file exists and is readable",
        CliError::Core(ninthvar_core::Error::Unsupported(m)) if m.contains("unknown identity") => {
            "run `ninthvar list-identities` for the catalogue"
        }
        CliError::Core(ninthvar_core::Error::Unsupported(m)) if m.contains("needs --") => {
            "`ninthvar list-identities` shows the flags each check reads"
        }
        CliError::Core(_) => "the inputs are outside what this identity or character accepts",
    };
    format!("hint: {hint}\n")
}

pub fn run(command: Command) -> CliResult<Outcome> {
    match command {
        Command::Compute(a) => compute(&a),
        Command::Check(a) => check(&a),
        Command::Batch(a) => batch::run(&a.manifest, a.workers, &a.out),
        Command::Dual(a) => dual(&a),
        Command::Gt(a) => gt(&a),
        Command::ListIdentities(out) => Ok(list_identities(&out)),
        Command::Ninth(cmd) => run_ninth(cmd),
    }
}

/// `file:PATH` or a keyword.
fn file_arg(s: &str) -> Option<&Path> {
    s.strip_prefix("file:").map(Path::new)
}

/// The resolved `--sequence` and `--c` flags.
pub struct Resolved {
    pub sequence: SequenceChoice,
    pub c: CSpec,
}

impl Resolved {
    pub fn sequence(&self) -> AdmissibleSequence {
        match &self.sequence {
            SequenceChoice::Factorial => AdmissibleSequence::factorial(self.c.clone()),
            SequenceChoice::Monomial => AdmissibleSequence::monomial(),
            SequenceChoice::Given(f) => f.clone(),
        }
    }
}

pub fn parse_c(s: &str, base: &Path) -> CliResult<CSpec> {
    match s {
        "symbolic" => Ok(CSpec::symbolic()),
        "zeros" => Ok(CSpec::zeros()),
        other => match file_arg(other) {
            Some(p) => cspec_from_json(&read_json(&base.join(p))?),
            None => Err(CliError::usage(format!("--c takes symbolic, zeros or file:PATH, not {other:?}"))),
        },
    }
}

/// `--sequence` as given: keywords carry no `c` of their own, files may.
pub fn parse_sequence(s: &str, base: &Path) -> CliResult<SequenceSpec> {
    match s {
        "factorial" => Ok(SequenceSpec { sequence: AdmissibleSequence::factorial(CSpec::symbolic()), c: None }),
        "monomial" => Ok(SequenceSpec { sequence: AdmissibleSequence::monomial(), c: None }),
        other => match file_arg(other) {
            Some(p) => sequence_from_json(&read_json(&base.join(p))?),
            None => Err(CliError::usage(format!("--sequence takes factorial, monomial or file:PATH, not {other:?}"))),
        },
    }
}

/// Merges a sequence with a separately given `c` and the two `c` switches.
pub fn combine(spec: SequenceSpec, flag_c: Option<CSpec>, c_cut: bool, c0_zero: bool) -> CliResult<Resolved> {
    if flag_c.is_some() && spec.c.is_some() {
        return Err(CliError::usage("the sequence file already fixes c; drop --c"));
    }
    let mut c = flag_c.or(spec.c).unwrap_or_else(CSpec::symbolic);
    if c_cut {
        c = c.with_negative_cut(true);
    }
    if c0_zero {
        c = c.with_c0_zero();
    }
    let sequence = match spec.sequence.kind() {
        SeqKind::Factorial(_) => SequenceChoice::Factorial,
        SeqKind::Monomial => SequenceChoice::Monomial,
        SeqKind::Custom { .. } => SequenceChoice::Given(spec.sequence),
    };
    Ok(Resolved { sequence, c })
}

/// Resolves sequence and `c` flags; paths are taken relative to `base`.
pub fn resolve(seq: &SequenceArgs, base: &Path) -> CliResult<Resolved> {
    let spec = parse_sequence(&seq.sequence, base)?;
    let flag_c = seq.c.as_deref().map(|s| parse_c(s, base)).transpose()?;
    combine(spec, flag_c, seq.c_cut, seq.c0_zero)
}

fn emit(out: &OutputArgs, value: Value, text: String) -> String {
    match out.format {
        Format::Json => render(&value),
        Format::Text => text,
    }
}

fn need<T: Clone>(v: &Option<T>, cmd: &str, flag: &str) -> CliResult<T> {
    v.clone().ok_or_else(|| CliError::usage(format!("{cmd} needs --{flag}")))
}

fn group(family: &Option<String>, cmd: &str) -> CliResult<GroupType> {
    let f = need(family, cmd, "family")?;
    f.parse::<GroupType>().map_err(|_| CliError::usage(format!("--family takes a, c, b or d, not {f:?}")))
}

fn compute(a: &ComputeArgs) -> CliResult<Outcome> {
    let ty = group(&a.family, "compute")?;
    let parts = need(&a.weight.lambda(), "compute", "lambda")?;
    if a.weight.mu.is_some() {
        return Err(CliError::usage("compute takes no --mu; skew shapes live under `ninth`"));
    }
    let n = a.weight.n.unwrap_or(parts.len());
    let resolved = resolve(&a.seq, Path::new("."))?;
    let f = resolved.sequence();
    let xs = first_vars(n);
    let sig = Signature::new(&parts)?;
    let mut extra: Option<(&str, Value)> = None;
    let value: RatFn = match sig.to_partition() {
        Some(lambda) => RatFn::from_poly(character(ty, &f, &lambda, &xs)?),
        None if ty != GroupType::A => {
            return Err(CliError::usage("negative parts are only allowed for --family a"));
        }
        None if f.has_exact_negative_part() => schur_signature(&f, &sig, &xs)?,
        None => {
            let floor = -(a.truncate as i64);
            extra = Some(("x_floor", Value::from(floor)));
            RatFn::from_poly(schur_truncated(&f, &sig, &xs, floor)?)
        }
    };
    let mut j = json!({
        "family": ty.letter(),
        "lambda": parts,
        "n": n,
        "sequence": sequence_to_json(&f),
    });
    if let Some((k, v)) = extra {
        j[k] = v;
    }
    j["value"] = ratfn_to_json(&value);
    let text = format!("{}\n", ratfn_to_text(&value));
    Ok(Outcome::ok(emit(&a.out, j, text)))
}

/// Builds the registry parameters from check flags.
pub fn check_params(a: &CheckArgs, base: &Path) -> CliResult<CheckParams> {
    let resolved = resolve(&a.seq, base)?;
    Ok(CheckParams {
        family: a.family.clone(),
        lambda: a.weight.lambda(),
        mu: a.weight.mu(),
        n: a.weight.n,
        m: a.m,
        p: a.p,
        q: a.q,
        truncate: a.truncate,
        sequence: resolved.sequence,
        c: resolved.c,
    })
}

/// Runs one check and stamps its elapsed time.
pub fn timed_check(id: &str, params: &CheckParams) -> CliResult<CheckReport> {
    let start = Instant::now();
    let mut report = registry::run_check(id, params)?;
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn report_outcome(report: &CheckReport, out: &OutputArgs) -> Outcome {
    let stdout = emit(out, report_to_json(report, out.timing), report_to_text(report, out.timing));
    Outcome { code: if report.holds { 0 } else { 1 }, stdout, stderr: String::new() }
}

fn check(a: &CheckArgs) -> CliResult<Outcome> {
    registry::lookup(&a.id)?;
    let params = check_params(a, Path::new("."))?;
    let report = timed_check(&a.id, &params)?;
    Ok(report_outcome(&report, &a.out))
}

fn dual(a: &DualArgs) -> CliResult<Outcome> {
    let resolved = resolve(&a.seq, Path::new("."))?;
    let f = resolved.sequence();
    let (key, name, entries) = if a.double {
        let check = DoubleDualSequence::new(&f, a.truncate)?;
        let v = ninthvar_core::ring::Poly::var(VarId::v(1));
        let entries = (0..=a.truncate as usize).map(|n| check.entry(n, &v)).collect::<Result<Vec<_>, _>>()?;
        ("double_dual", "f̌", entries)
    } else {
        let hat = DualSequence::new(&f, a.truncate)?;
        let entries = (0..=a.truncate as usize)
            .map(|n| hat.entry(n, VarId::u(1)).map(|s| s.into_body()))
            .collect::<Result<Vec<_>, _>>()?;
        ("dual", "f̂", entries)
    };
    let mut j = json!({ "sequence": sequence_to_json(&f), "truncate": a.truncate });
    j[key] = Value::Array(entries.iter().map(poly_to_json).collect());
    let text: String = entries.iter().enumerate().map(|(n, p)| format!("{name}_{n} = {p}\n")).collect();
    Ok(Outcome::ok(emit(&a.out, j, text)))
}

fn gt(a: &GtArgs) -> CliResult<Outcome> {
    let parts = need(&a.weight.lambda(), "gt", "lambda")?;
    let n = a.weight.n.unwrap_or(parts.len());
    if a.seq.sequence != "factorial" {
        return Err(CliError::usage("gt is the factorial formula; pass --c rather than --sequence"));
    }
    let c = resolve(&a.seq, Path::new("."))?.c;
    let sig = ninthvar_core::characters::pad_signature(&Signature::new(&parts)?, n)?;
    let xs = first_vars(n);
    let value = gt_character(&sig, &xs, &c, GtConvention::LOCKED)?;
    let patterns = gt_patterns(&sig).len();
    let j = json!({
        "lambda": sig.parts(),
        "n": n,
        "c": cspec_to_json(&c),
        "patterns": patterns,
        "value": ratfn_to_json(&value),
    });
    let text = format!("{} patterns\n{}\n", patterns, ratfn_to_text(&value));
    Ok(Outcome::ok(emit(&a.out, j, text)))
}

fn list_identities(out: &OutputArgs) -> Outcome {
    let j = Value::Array(
        CATALOGUE.iter().map(|i| json!({ "id": i.id, "summary": i.summary, "params": i.params })).collect(),
    );
    let width = CATALOGUE.iter().map(|i| i.id.len()).max().unwrap_or(0);
    let text: String =
        CATALOGUE.iter().map(|i| format!("{:width$}  {}  [{}]\n", i.id, i.summary, i.params)).collect();
    Outcome::ok(emit(out, j, text))
}

fn partition_arg(v: &Option<Vec<i64>>, cmd: &str, flag: &str) -> CliResult<Partition> {
    Ok(Partition::new(&need(v, cmd, flag)?)?)
}

fn run_ninth(cmd: NinthCommand) -> CliResult<Outcome> {
    let (name, a) = match cmd {
        NinthCommand::S(a) => ("s", a),
        NinthCommand::Sp(a) => ("sp", a),
        NinthCommand::O(a) => ("o", a),
        NinthCommand::E { r, out } => {
            let e = ninth::elementary(r);
            let j = json!({ "character": "e", "r": r, "value": poly_to_json(&e) });
            return Ok(Outcome::ok(emit(&out, j, format!("{e}\n"))));
        }
        NinthCommand::CheckNk { family, weight, m, out } => {
            let lambda = partition_arg(&weight.lambda(), "ninth check-nk", "lambda")?;
            let mu = weight.mu().as_deref().map(Partition::new).transpose()?;
            let n = weight.n.unwrap_or(lambda.len());
            let start = Instant::now();
            let mut report = ninth::check_nk(ninth::NkFamily::parse(&family)?, &lambda, mu.as_ref(), n, m)?;
            report.elapsed_ms = start.elapsed().as_millis() as u64;
            return Ok(report_outcome(&report, &out));
        }
        NinthCommand::CheckInverse { n, m, out } => {
            let start = Instant::now();
            let mut report = ninth::check_inverse_pairs(n, m)?;
            report.elapsed_ms = start.elapsed().as_millis() as u64;
            return Ok(report_outcome(&report, &out));
        }
    };
    let lambda = partition_arg(&a.weight.lambda(), "ninth", "lambda")?;
    let mu = a.weight.mu().as_deref().map(Partition::new).transpose()?;
    let n = a.weight.n.unwrap_or(lambda.len());
    let value = match name {
        "s" => ninth::skew_schur(&lambda, mu.as_ref().unwrap_or(&Partition::empty()), n)?,
        "sp" => ninth::sp(&lambda, n, mu.as_ref())?,
        _ => ninth::o(&lambda, n, mu.as_ref())?,
    };
    let mut j = json!({ "character": name, "lambda": lambda.parts(), "n": n });
    if let Some(mu) = &mu {
        j["mu"] = json!(mu.parts());
    }
    j["value"] = poly_to_json(&value);
    Ok(Outcome::ok(emit(&a.out, j, format!("{value}\n"))))
}
