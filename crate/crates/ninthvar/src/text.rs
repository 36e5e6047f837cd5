//! The text form of polynomials (`x1^2 - 2*c0*x1 + 1/2`, as printed by
//! `Poly`'s `Display`) and plain-text reports.

use ninthvar_core::identities::{describe_params, CheckReport};
use ninthvar_core::ring::{Monomial, Poly, RatFn, Rational, VarId};

use crate::error::{CliError, CliResult};
use crate::json::parse_rational;

/// Splits at the ` + ` and ` - ` separators, keeping the sign with each term.
fn split_terms(s: &str) -> Vec<(bool, &str)> {
    let s = s.trim();
    let (mut neg, mut rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    let mut out = Vec::new();
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        let cut = match (plus, minus) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        match cut {
            Some(i) => {
                out.push((neg, rest[..i].trim()));
                neg = rest[i..].starts_with(" - ");
                rest = &rest[i + 3..];
            }
            None => {
                out.push((neg, rest.trim()));
                return out;
            }
        }
    }
}

fn parse_factor(f: &str) -> CliResult<(VarId, i32)> {
    let (name, e) = match f.split_once('^') {
        Some((n, e)) => (n, e.parse::<i32>().map_err(|_| CliError::format(format!("bad exponent in {f:?}")))?),
        None => (f, 1),
    };
    let var = VarId::parse(name).ok_or_else(|| CliError::format(format!("unknown variable {name:?}")))?;
    if e < 0 && !var.family().is_laurent() {
        return Err(CliError::format(format!("{name} cannot have a negative exponent")));
    }
    Ok((var, e))
}

fn parse_term(t: &str) -> CliResult<(Monomial, Rational)> {
    let mut factors = t.split('*').peekable();
    let mut coeff = Rational::from_integer(1.into());
    if let Some(first) = factors.peek() {
        if first.starts_with(|c: char| c.is_ascii_digit()) {
            coeff = parse_rational(first)?;
            factors.next();
        }
    }
    let pairs = factors.map(parse_factor).collect::<CliResult<Vec<_>>>()?;
    Ok((Monomial::from_pairs(pairs), coeff))
}

pub fn parse_poly(s: &str) -> CliResult<Poly> {
    if s.trim() == "0" {
        return Ok(Poly::zero());
    }
    let mut terms = Vec::new();
    for (neg, t) in split_terms(s) {
        if t.is_empty() {
            return Err(CliError::format(format!("empty term in {s:?}")));
        }
        let (m, c) = parse_term(t)?;
        terms.push((m, if neg { -c } else { c }));
    }
    Ok(Poly::from_terms(terms))
}

pub fn ratfn_to_text(r: &RatFn) -> String {
    r.reduced().to_string()
}

pub fn report_to_text(r: &CheckReport, timing: bool) -> String {
    let mut out = format!("{}: {}\n", r.identity_id, if r.holds { "holds" } else { "fails" });
    out += &format!("  parameters: {}\n", describe_params(&r.params));
    for n in &r.notes {
        out += &format!("  note: {n}\n");
    }
    if !r.holds {
        let shown = if r.witness.is_complete() { "difference" } else { "lowest term of difference" };
        out += &format!("  {shown} ({} terms): {}\n", r.witness.term_count, r.witness.terms);
    }
    if timing {
        out += &format!("  elapsed: {} ms\n", r.elapsed_ms);
    }
    out
}
