//! The catalogue of checkable identities and a dispatcher from identity id plus
//! loosely typed parameters to the individual checks.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::characters::GroupType;
use crate::error::{Error, Result};
use crate::identities::{
    check_cauchy, check_dual_cauchy, check_dual_sequences, check_flagged, check_genfun, check_gt, check_jt, check_jt_a,
    check_jt_c_without_half, check_littlewood, check_littlewood_a, genfun_hypotheses, jt_hypotheses, CheckReport,
    FlaggedKind, GenFun,
};
use crate::ninth::{check_inverse_pairs, check_nk, check_specialisation, NkFamily};
use crate::partition::{Partition, Signature};
use crate::sequences::{AdmissibleSequence, CSpec};

/// One entry of the catalogue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityInfo {
    pub id: &'static str,
    pub summary: &'static str,
    /// Parameters the check reads, in flag syntax.
    pub params: &'static str,
}

const fn info(id: &'static str, summary: &'static str, params: &'static str) -> IdentityInfo {
    IdentityInfo { id, summary, params }
}

pub const CATALOGUE: &[IdentityInfo] = &[
    info("cauchy", "Cauchy identity for s_λ[x|F] against dual Schur functions", "--n --truncate --sequence"),
    info("littlewood", "Littlewood identities of types C, B, D", "--family c|b|d --n --truncate --sequence"),
    info("littlewood-a", "Littlewood identity for mixed signatures", "--p --q --truncate --sequence"),
    info("dual-cauchy", "dual Cauchy identity (finite Laplace expansion)", "--family --n --m --sequence"),
    info("jt", "Jacobi–Trudi for types C, B, D", "--family c|b|d --lambda --n --c"),
    info("jt-a", "block Jacobi–Trudi for signatures", "--lambda --q --c"),
    info("jt-c-no-half", "type C Jacobi–Trudi without the ½ (fails)", "--lambda --n --c"),
    info("flagged-jt", "flagged Jacobi–Trudi", "--family --lambda --n --sequence"),
    info("flagged-nk", "flagged Nägelsbach–Kostka", "--family --lambda --n --sequence"),
    info("giambelli", "Giambelli identity", "--family --lambda --n --sequence"),
    info("genfun", "generating function of one-row characters", "--family a|c|b|d|a-convenient|g --n --truncate --c"),
    info("dual-sequence", "dual and double dual of the factorial sequence", "--truncate --c"),
    info("gt", "Gelfand–Tsetlin formula against the signature bialternant", "--lambda --n --c"),
    info("ninth-inverse", "A·B = A⁺·B⁻ = A∘·Bˣ = I in the h-ring", "--n --m"),
    info("ninth-nk", "Nägelsbach–Kostka in the h-ring", "--family a|c|d --lambda [--mu] --n --m"),
    info("ninth-specialisation", "h-ring characters specialise to factorial ones", "--family --lambda --n --c"),
];

pub fn lookup(id: &str) -> Result<&'static IdentityInfo> {
    CATALOGUE.iter().find(|i| i.id == id).ok_or_else(|| {
        let known: Vec<&str> = CATALOGUE.iter().map(|i| i.id).collect();
        Error::Unsupported(format!("unknown identity {id:?}; known identities: {}", known.join(", ")))
    })
}

/// Which sequence `F` a check runs over.
#[derive(Clone, Debug, Default)]
pub enum SequenceChoice {
    /// The factorial sequence of the check's `c`.
    #[default]
    Factorial,
    Monomial,
    Given(AdmissibleSequence),
}

#[derive(Clone, Debug)]
pub struct CheckParams {
    pub family: Option<String>,
    pub lambda: Option<Vec<i64>>,
    pub mu: Option<Vec<i64>>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub truncate: u32,
    pub sequence: SequenceChoice,
    pub c: CSpec,
}

impl Default for CheckParams {
    fn default() -> CheckParams {
        CheckParams {
            family: None,
            lambda: None,
            mu: None,
            n: None,
            m: None,
            p: None,
            q: None,
            truncate: 4,
            sequence: SequenceChoice::Factorial,
            c: CSpec::symbolic(),
        }
    }
}

fn missing(id: &str, flag: &str) -> Error {
    Error::Unsupported(format!("{id} needs --{flag}"))
}

impl CheckParams {
    pub fn sequence(&self) -> AdmissibleSequence {
        match &self.sequence {
            SequenceChoice::Factorial => AdmissibleSequence::factorial(self.c.clone()),
            SequenceChoice::Monomial => AdmissibleSequence::monomial(),
            SequenceChoice::Given(f) => f.clone(),
        }
    }

    fn family(&self, id: &str) -> Result<&str> {
        self.family.as_deref().ok_or_else(|| missing(id, "family"))
    }

    fn group(&self, id: &str, allowed: &[GroupType]) -> Result<GroupType> {
        let ty: GroupType = self.family(id)?.parse()?;
        if !allowed.contains(&ty) {
            let names: Vec<&str> = allowed.iter().map(|t| t.letter()).collect();
            return Err(Error::Unsupported(format!("{id} takes --family {}", names.join("|"))));
        }
        Ok(ty)
    }

    fn signature(&self, id: &str) -> Result<Signature> {
        Signature::new(self.lambda.as_deref().ok_or_else(|| missing(id, "lambda"))?)
    }

    fn partition(&self, id: &str) -> Result<Partition> {
        Partition::new(self.lambda.as_deref().ok_or_else(|| missing(id, "lambda"))?)
    }

    fn mu(&self) -> Result<Option<Partition>> {
        self.mu.as_deref().map(Partition::new).transpose()
    }

    /// `n`, defaulting to the length of `λ` when `λ` is given.
    fn n(&self, id: &str) -> Result<usize> {
        match (self.n, &self.lambda) {
            (Some(n), _) => Ok(n),
            (None, Some(l)) => Ok(l.len()),
            (None, None) => Err(missing(id, "n")),
        }
    }

    fn need(&self, id: &str, flag: &str, v: Option<usize>) -> Result<usize> {
        v.ok_or_else(|| missing(id, flag))
    }
}

fn noted(report: CheckReport, notes: Vec<String>) -> CheckReport {
    notes.into_iter().fold(report, |r, n| r.with_note(n))
}

/// Runs the identity `id` on `params`.
pub fn run_check(id: &str, params: &CheckParams) -> Result<CheckReport> {
    let id = lookup(id)?.id;
    let all = GroupType::ALL;
    let cbd = [GroupType::C, GroupType::B, GroupType::D];
    match id {
        "cauchy" => check_cauchy(&params.sequence(), params.need(id, "n", params.n)?, params.truncate),
        "littlewood" => check_littlewood(params.group(id, &cbd)?, &params.sequence(), params.need(id, "n", params.n)?, params.truncate),
        "littlewood-a" => check_littlewood_a(
            &params.sequence(),
            params.need(id, "p", params.p)?,
            params.need(id, "q", params.q)?,
            params.truncate,
        ),
        "dual-cauchy" => check_dual_cauchy(
            params.group(id, &all)?,
            &params.sequence(),
            params.need(id, "n", params.n)?,
            params.need(id, "m", params.m)?,
        ),
        "jt" => {
            let ty = params.group(id, &cbd)?;
            let (c, notes) = jt_hypotheses(ty, &params.c);
            Ok(noted(check_jt(ty, &c, &params.partition(id)?, params.n(id)?)?, notes))
        }
        "jt-a" => check_jt_a(&params.c, &params.signature(id)?, params.q),
        "jt-c-no-half" => {
            let (c, notes) = jt_hypotheses(GroupType::C, &params.c);
            Ok(noted(check_jt_c_without_half(&c, &params.partition(id)?, params.n(id)?)?, notes))
        }
        "flagged-jt" | "flagged-nk" | "giambelli" => {
            let kind = match id {
                "flagged-jt" => FlaggedKind::JacobiTrudi,
                "flagged-nk" => FlaggedKind::NagelsbachKostka,
                _ => FlaggedKind::Giambelli,
            };
            check_flagged(kind, params.group(id, &all)?, &params.sequence(), &params.signature(id)?, params.n(id)?)
        }
        "genfun" => {
            let which = GenFun::parse(params.family(id)?)?;
            let (c, notes) = genfun_hypotheses(which, &params.c);
            Ok(noted(check_genfun(which, &c, params.need(id, "n", params.n)?, params.truncate)?, notes))
        }
        "dual-sequence" => check_dual_sequences(&params.c, params.truncate),
        "gt" => check_gt(&params.c, &params.signature(id)?, params.n(id)?),
        "ninth-inverse" => check_inverse_pairs(params.need(id, "n", params.n)?, params.need(id, "m", params.m)?),
        "ninth-nk" => check_nk(
            NkFamily::parse(params.family(id)?)?,
            &params.partition(id)?,
            params.mu()?.as_ref(),
            params.n(id)?,
            params.need(id, "m", params.m)?,
        ),
        "ninth-specialisation" => {
            let ty = params.group(id, &all)?;
            let (c, notes) = if ty == GroupType::A { (params.c.clone(), Vec::new()) } else { jt_hypotheses(ty, &params.c) };
            Ok(noted(check_specialisation(ty, &params.partition(id)?, params.n(id)?, &c)?, notes))
        }
        other => Err(Error::Unsupported(format!("identity {other:?} has no dispatcher"))),
    }
}

/// The catalogue ids, in catalogue order.
pub fn ids() -> Vec<String> {
    CATALOGUE.iter().map(|i| i.id.to_string()).collect()
}
