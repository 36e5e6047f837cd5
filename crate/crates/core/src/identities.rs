//! Identity checkers. Each computes both sides independently and reports the
//! difference.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::characters::{
    character, complement_conjugate, complete_factorial, det_ratfn, doubled_vars, dual_schur, double_dual_schur,
    first_vars, g_function, schur, schur_signature, schur_truncated, xbarv, xv, GroupType,
};
use crate::error::{Error, Result};
use crate::partition::{Partition, Signature};
use crate::ring::matrix::{det, Ring};
use crate::ring::monomial::Monomial;
use crate::ring::poly::{product, rat, sum, x_degree, Poly, Rational};
use crate::ring::ratfn::RatFn;
use crate::ring::series::mul_truncated;
use crate::ring::var::{Families, Family, VarId};
use crate::sequences::{factorial_power, AdmissibleSequence, CSpec, DoubleDualSequence, DualSequence};

/// Reports above this many terms keep only the lowest term of the difference.
pub const WITNESS_LIMIT: usize = 200;

/// The nonzero part of `lhs - rhs`, possibly abbreviated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Number of terms in the full difference.
    pub term_count: usize,
    /// The full difference, or only its lowest term when it is large.
    pub terms: Poly,
}

impl Witness {
    pub fn of(diff: &Poly) -> Witness {
        let terms = if diff.len() <= WITNESS_LIMIT {
            diff.clone()
        } else {
            let (m, c) = diff.trailing_term().expect("nonempty");
            Poly::term(m.clone(), c.clone())
        };
        Witness { term_count: diff.len(), terms }
    }

    pub fn is_complete(&self) -> bool {
        self.term_count == self.terms.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub identity_id: String,
    pub params: Vec<(String, String)>,
    pub holds: bool,
    pub witness: Witness,
    /// Hypotheses the engine imposed on the inputs.
    pub notes: Vec<String>,
    /// Filled in by callers that can read a clock.
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn new(id: &str, params: Vec<(String, String)>, diff: &Poly) -> CheckReport {
        CheckReport {
            identity_id: id.to_string(),
            params,
            holds: diff.is_zero(),
            witness: Witness::of(diff),
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> CheckReport {
        self.notes.push(note.into());
        self
    }

    /// Folds several sub-reports into one; the witness is the first failing one.
    pub fn combine(id: &str, params: Vec<(String, String)>, parts: Vec<CheckReport>) -> CheckReport {
        let failing = parts.iter().find(|r| !r.holds);
        let mut out = match failing {
            Some(f) => CheckReport { identity_id: id.to_string(), params, ..f.clone() },
            None => CheckReport::new(id, params, &Poly::zero()),
        };
        for p in &parts {
            for n in &p.notes {
                if !out.notes.contains(n) {
                    out.notes.push(n.clone());
                }
            }
        }
        if let Some(f) = failing {
            out.notes.push(format!("first failure at {}", describe_params(&f.params)));
        }
        out
    }
}

pub fn describe_params(params: &[(String, String)]) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn param(k: &str, v: impl ToString) -> (String, String) {
    (k.to_string(), v.to_string())
}

fn u_fams() -> Families {
    Families::of(&[Family::U])
}

fn vars_u(n: usize) -> Vec<u32> {
    (1..=n as u32).collect()
}

fn upoly(i: u32) -> Poly {
    Poly::var(VarId::u(i))
}

/// `1/(1 - a)` to degree `cap`, for `a` of positive degree in `fams`.
fn geometric(a: &Poly, fams: Families, cap: u32) -> Poly {
    let mut acc = Poly::one();
    for _ in 0..cap {
        acc = &Poly::one() + &mul_truncated(a, &acc, fams, cap);
    }
    acc
}

fn product_truncated(parts: impl IntoIterator<Item = Poly>, fams: Families, cap: u32) -> Poly {
    parts.into_iter().fold(Poly::one(), |acc, p| mul_truncated(&acc, &p, fams, cap))
}

/// Needed precision of the dual sequence for `ŝ_λ(u_1..u_n)` with `|λ| ≤ cap`.
fn dual_cap(n: usize, cap: u32) -> u32 {
    cap + (n * n.saturating_sub(1) / 2) as u32 + n as u32
}

/// `Σ_{|λ| ≤ D, ℓ(λ) ≤ n} s_λ^F(x) ŝ_λ^F(u)` against `1/∏(1 - x_i u_j)`.
pub fn check_cauchy(f: &AdmissibleSequence, n: usize, cap: u32) -> Result<CheckReport> {
    let params = vec![param("n", n), param("truncate", cap)];
    let xs = first_vars(n);
    let us = vars_u(n);
    let fhat = DualSequence::new(f, dual_cap(n, cap))?;
    let mut lhs = Vec::new();
    for lambda in Partition::up_to_weight(cap as i64, n) {
        let s = schur(f, &lambda, &xs)?;
        let sh = dual_schur(&fhat, &lambda, &us, cap)?;
        lhs.push(mul_truncated(&s, sh.body(), u_fams(), cap));
    }
    let rhs = product_truncated(
        xs.iter().flat_map(|&i| us.iter().map(move |&j| geometric(&(xv(i) * upoly(j)), u_fams(), cap))),
        u_fams(),
        cap,
    );
    Ok(CheckReport::new("cauchy", params, &(sum(lhs) - rhs)))
}

/// The Littlewood identities of types C, B and D.
pub fn check_littlewood(ty: GroupType, f: &AdmissibleSequence, n: usize, cap: u32) -> Result<CheckReport> {
    if ty == GroupType::A {
        return Err(Error::Unsupported("use littlewood-a for type A".into()));
    }
    if ty == GroupType::D && !f.is_constant_term_free() {
        return Err(Error::NotConstantTermFree);
    }
    let params = vec![param("family", ty), param("n", n), param("truncate", cap)];
    let xs = first_vars(n);
    let us = vars_u(n);
    let fhat = DualSequence::new(f, dual_cap(n, cap))?;
    let mut lhs = Vec::new();
    for lambda in Partition::up_to_weight(cap as i64, n) {
        let g = character(ty, f, &lambda, &xs)?;
        let sh = dual_schur(&fhat, &lambda, &us, cap)?;
        lhs.push(mul_truncated(&g, sh.body(), u_fams(), cap));
    }
    let mut factors = Vec::new();
    for &j in &us {
        for &i in &xs {
            factors.push(geometric(&(xv(i) * upoly(j)), u_fams(), cap));
            factors.push(geometric(&(xbarv(i) * upoly(j)), u_fams(), cap));
        }
    }
    let strict = ty == GroupType::C;
    for (a, &i) in us.iter().enumerate() {
        for &j in &us[a + usize::from(strict)..] {
            factors.push(Poly::one() - upoly(i) * upoly(j));
        }
    }
    if ty == GroupType::B {
        factors.extend(us.iter().map(|&j| geometric(&upoly(j), u_fams(), cap)));
    }
    let rhs = product_truncated(factors, u_fams(), cap);
    Ok(CheckReport::new("littlewood", params, &(sum(lhs) - rhs)))
}

/// The type A Littlewood identity, compared as series in `u, v` to joint degree
/// `D` with coefficients expanded in `x^{-1}` down to `x`-degree `-(D + nq + 1)`.
pub fn check_littlewood_a(f: &AdmissibleSequence, p: usize, q: usize, cap: u32) -> Result<CheckReport> {
    let n = p + q;
    let floor = -(cap as i64 + (n * q) as i64 + 1);
    let params = vec![param("p", p), param("q", q), param("truncate", cap), param("x_floor", floor)];
    let fams = Families::of(&[Family::U, Family::V]);
    let xs = first_vars(n);
    let us = vars_u(p);
    let vs: Vec<u32> = (1..=q as u32).collect();
    let fhat = DualSequence::new(f, dual_cap(p, cap))?;
    // |ν| ≤ |μ| - nq - floor keeps every term reaching x-degree `floor`
    let max_nu = cap as i64 - (n * q) as i64 - floor;
    let fcheck = DoubleDualSequence::new(f, (max_nu.max(0) + q as i64 + 1) as u32)?;
    let keep = |p: &Poly| p.retain(|m| x_degree(m) >= floor);
    let mut lhs = Vec::new();
    for mu in Partition::up_to_weight(cap as i64, p) {
        // ŝ_μ has u-order |μ|, so the ν-sum is only needed to v-degree cap - |μ|
        let vcap = cap - mu.weight() as u32;
        let nu_bound = mu.weight() - (n * q) as i64 - floor;
        let mut inner = Poly::zero();
        for nu in Partition::up_to_weight(nu_bound, q) {
            let lambda = Signature::from_split(&mu, &nu, p, q)?.shift(-(q as i64));
            let s = schur_truncated(f, &lambda, &xs, floor)?;
            if s.is_zero() {
                continue;
            }
            let sc = double_dual_schur(&fcheck, &nu, &vs)?.retain(|m| m.degree_in(fams) <= vcap as i64);
            inner = &inner + &mul_truncated(&s, &sc, fams, vcap);
        }
        let sh = dual_schur(&fhat, &mu, &us, cap)?;
        lhs.push(keep(&mul_truncated(&inner, sh.body(), fams, cap)));
    }
    let mut factors = Vec::new();
    for &i in &us {
        for &j in &vs {
            factors.push(Poly::one() - upoly(i) * Poly::var(VarId::v(j)));
        }
        for &k in &xs {
            factors.push(geometric(&(xv(k) * upoly(i)), fams, cap));
        }
    }
    for &j in &vs {
        for &k in &xs {
            // 1/(x - v) = x̄ Σ (x̄ v)^m
            let v = Poly::var(VarId::v(j));
            factors.push(xbarv(k) * geometric(&(xbarv(k) * v), fams, cap));
        }
    }
    let rhs = keep(&product_truncated(factors, fams, cap));
    Ok(CheckReport::new("littlewood-a", params, &(sum(lhs) - rhs)))
}

/// `Σ_{λ ⊆ (m^n)} (-1)^{|λ̃|} g_λ(x) g_λ̃(y)` against the product of differences.
pub fn check_dual_cauchy(ty: GroupType, f: &AdmissibleSequence, n: usize, m: usize) -> Result<CheckReport> {
    let params = vec![param("family", ty), param("n", n), param("m", m)];
    let xs = first_vars(n);
    let ys: Vec<u32> = (n as u32 + 1..=(n + m) as u32).collect();
    let mut lhs = Vec::new();
    for lambda in Partition::in_box(n, m as i64) {
        let tilde = complement_conjugate(&lambda, n, m);
        let term = &character(ty, f, &lambda, &xs)? * &character(ty, f, &tilde, &ys)?;
        lhs.push(if tilde.weight() % 2 == 0 { term } else { -term });
    }
    let rhs = product(xs.iter().flat_map(|&i| {
        ys.iter().map(move |&j| match ty {
            GroupType::A => xv(i) - xv(j),
            _ => xv(i) + xbarv(i) - xv(j) - xbarv(j),
        })
    }));
    Ok(CheckReport::new("dual-cauchy", params, &(sum(lhs) - rhs)))
}

/// The hypotheses of the unflagged C/B/D Jacobi–Trudi theorems: negative cut,
/// and `c_0 = 0` for type D.
pub fn jt_hypotheses(ty: GroupType, c: &CSpec) -> (CSpec, Vec<String>) {
    let mut notes = Vec::new();
    let mut c = c.clone();
    if !c.has_negative_cut() {
        c = c.with_negative_cut(true);
        notes.push("negative cut enabled (c_m = 0 for m < 0)".to_string());
    }
    if ty == GroupType::D && !c.c0_is_zero() {
        c = c.with_c0_zero();
        notes.push("c_0 set to 0".to_string());
    }
    (c, notes)
}

fn check_hypotheses(ty: GroupType, c: &CSpec) -> Result<()> {
    if !c.has_negative_cut() || c.offset() != 0 || c.is_reversed() {
        return Err(Error::HypothesisViolated("the Jacobi–Trudi theorems need c_m = 0 for m < 0".into()));
    }
    if ty == GroupType::D && !c.c0_is_zero() {
        return Err(Error::HypothesisViolated("the type D Jacobi–Trudi theorem needs c_0 = 0".into()));
    }
    Ok(())
}

/// The h-determinant side of the C/B/D Jacobi–Trudi theorems; `half` toggles the
/// `½` of type C.
pub fn jt_determinant(ty: GroupType, c: &CSpec, lambda: &Partition, n: usize, half: bool) -> Result<Poly> {
    let parts = lambda.padded(n);
    let xs = first_vars(n);
    let zs = doubled_vars(&xs, ty == GroupType::B);
    let nn = n as i64;
    let h = |k: i64, shift: i64| complete_factorial(k, &zs, &c.tau(shift));
    let mut m = Vec::with_capacity(n);
    for i in 1..=nn {
        let li = parts[i as usize - 1];
        let row: Vec<Poly> = (1..=nn)
            .map(|j| match ty {
                GroupType::C => h(li - i + j, 1 - nn - j) + h(li - i - j + 2, -1 - nn + j),
                GroupType::B => h(li - i + j, -nn - j) - h(li - i - j, -nn + j),
                GroupType::D => h(li - i + j, 1 - nn - j) - h(li - i - j, 1 - nn + j),
                GroupType::A => unreachable!("type A has its own determinant"),
            })
            .collect();
        m.push(row);
    }
    let d = det(&m)?;
    Ok(if half { d.scale(&rat(1, 2)) } else { d })
}

fn mentions_negative_c(p: &Poly) -> bool {
    p.mentions(|v| v.family() == Family::C && matches!(v.kind(), crate::ring::var::VarKind::C(m) if m < 0))
}

/// The unflagged Jacobi–Trudi theorems of types C, B and D.
pub fn check_jt(ty: GroupType, c: &CSpec, lambda: &Partition, n: usize) -> Result<CheckReport> {
    check_hypotheses(ty, c)?;
    let params = vec![param("family", ty), param("lambda", lambda), param("n", n)];
    let f = AdmissibleSequence::factorial(c.clone());
    let lhs = character(ty, &f, lambda, &first_vars(n))?;
    let rhs = jt_determinant(ty, c, lambda, n, ty == GroupType::C)?;
    if mentions_negative_c(&lhs) || mentions_negative_c(&rhs) {
        return Err(Error::HypothesisViolated("a negative c index survived the cut".into()));
    }
    Ok(CheckReport::new("jt", params, &(lhs - rhs)))
}

/// Type C Jacobi–Trudi with the `½` dropped. Expected to fail.
pub fn check_jt_c_without_half(c: &CSpec, lambda: &Partition, n: usize) -> Result<CheckReport> {
    check_hypotheses(GroupType::C, c)?;
    let params = vec![param("lambda", lambda), param("n", n)];
    let f = AdmissibleSequence::factorial(c.clone());
    let lhs = character(GroupType::C, &f, lambda, &first_vars(n))?;
    let rhs = jt_determinant(GroupType::C, c, lambda, n, false)?;
    Ok(CheckReport::new("jt-c-no-half", params, &(lhs - rhs)))
}

/// The block Jacobi–Trudi identity for `s_{λ-(q^n)}[x|c]` with the canonical
/// split, or with the given `q`.
pub fn check_jt_a(c: &CSpec, lambda: &Signature, q: Option<usize>) -> Result<CheckReport> {
    let n = lambda.len();
    let q = q.unwrap_or_else(|| lambda.parts().iter().filter(|&&x| x < 0).count());
    if q > n {
        return Err(Error::SplitMismatch { p: 0, q });
    }
    let p = n - q;
    let (mu, nu) = lambda.split_at(p, q)?;
    let params = vec![param("lambda", lambda), param("n", n), param("q", q)];
    let xs = first_vars(n);
    let f = AdmissibleSequence::factorial(c.clone());
    let lhs = schur_signature(&f, &lambda.shift(-(q as i64)), &xs)?;
    let nn = n as i64;
    let mut m: Vec<Vec<RatFn>> = Vec::with_capacity(n);
    for i in 1..=q as i64 {
        let nu_i = nu.part((q as i64 - i + 1) as usize);
        m.push((1..=nn).map(|j| g_function(&c.tau(1 - j), nu_i + i - j, &xs)).collect::<Result<_>>()?);
    }
    for i in 1..=p as i64 {
        let mu_i = mu.part(i as usize);
        m.push(
            (1..=nn)
                .map(|j| {
                    let fj = AdmissibleSequence::factorial(c.tau(1 - j));
                    crate::characters::complete(&fj, mu_i - q as i64 - i + j, &xs).map(RatFn::from_poly)
                })
                .collect::<Result<_>>()?,
        );
    }
    let rhs = det_ratfn(&m)?;
    Ok(CheckReport::new("jt-a", params, &lhs.difference_numerator(&rhs)))
}

/// `g_α` for an arbitrary integer sequence `α`, by sorting `α + δ`.
pub fn character_of_sequence(ty: GroupType, f: &AdmissibleSequence, alpha: &[i64], xs: &[u32]) -> Result<RatFn> {
    let n = xs.len();
    let mut alpha = alpha.to_vec();
    alpha.resize(n.max(alpha.len()), 0);
    if alpha.len() > n {
        return Err(Error::LengthExceedsN { len: alpha.len(), n });
    }
    let mut ks: Vec<i64> = alpha.iter().enumerate().map(|(j, &a)| a + (n - 1 - j) as i64).collect();
    // bubble sort into decreasing order, tracking the sign
    let mut sign = 1i64;
    for a in 0..n {
        for b in 0..n - 1 - a {
            if ks[b] < ks[b + 1] {
                ks.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    if ks.windows(2).any(|w| w[0] == w[1]) {
        return Ok(RatFn::zero());
    }
    let parts: Vec<i64> = ks.iter().enumerate().map(|(j, &k)| k - (n - 1 - j) as i64).collect();
    let sig = Signature::new(&parts)?;
    let value = match sig.to_partition() {
        Some(p) => RatFn::from_poly(character(ty, f, &p, xs)?),
        None if ty == GroupType::A => schur_signature(f, &sig, xs)?,
        None => return Err(Error::Unsupported("negative parts outside type A".into())),
    };
    Ok(value.scale(&Rational::from_integer(sign.into())))
}

fn one_row(ty: GroupType, f: &AdmissibleSequence, k: i64, nvars: usize) -> Result<RatFn> {
    let xs = first_vars(nvars);
    if ty == GroupType::A {
        return character_of_sequence(ty, f, &[k], &xs);
    }
    if k < 0 {
        return Ok(RatFn::zero());
    }
    Ok(RatFn::from_poly(character(ty, f, &Partition::new(&[k])?, &xs)?))
}

fn one_column(ty: GroupType, f: &AdmissibleSequence, k: i64, nvars: usize) -> Result<Poly> {
    crate::characters::one_column(ty, f, k, &first_vars(nvars))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlaggedKind {
    JacobiTrudi,
    NagelsbachKostka,
    Giambelli,
}

impl FlaggedKind {
    pub fn id(self) -> &'static str {
        match self {
            FlaggedKind::JacobiTrudi => "flagged-jt",
            FlaggedKind::NagelsbachKostka => "flagged-nk",
            FlaggedKind::Giambelli => "giambelli",
        }
    }
}

/// The flagged Jacobi–Trudi, flagged Nägelsbach–Kostka and Giambelli identities.
/// Only the flagged Jacobi–Trudi identity of type A accepts signatures.
pub fn check_flagged(kind: FlaggedKind, ty: GroupType, f: &AdmissibleSequence, lambda: &Signature, n: usize) -> Result<CheckReport> {
    let params = vec![param("family", ty), param("lambda", lambda), param("n", n)];
    let xs = first_vars(n);
    let partition = lambda.to_partition();
    if partition.is_none() && !(kind == FlaggedKind::JacobiTrudi && ty == GroupType::A) {
        return Err(Error::Unsupported(format!("{} needs a partition", kind.id())));
    }
    let lhs = match &partition {
        Some(p) => RatFn::from_poly(character(ty, f, p, &xs)?),
        None => schur_signature(f, lambda, &xs)?,
    };
    let nn = n as i64;
    let rhs = match kind {
        FlaggedKind::JacobiTrudi => {
            let parts = crate::characters::pad_signature(lambda, n)?.parts().to_vec();
            let mut m = Vec::with_capacity(n);
            for i in 1..=nn {
                let row = (1..=nn)
                    .map(|j| one_row(ty, f, parts[i as usize - 1] - i + j, (nn - j + 1) as usize))
                    .collect::<Result<Vec<_>>>()?;
                m.push(row);
            }
            det_ratfn(&m)?
        }
        FlaggedKind::NagelsbachKostka => {
            let lambda = partition.expect("checked");
            let conj = lambda.conjugate();
            let size = lambda.part(1);
            // stored transposed: the row-by-row expansion then meets the
            // entries in the fewest variables first
            let mut m = Vec::with_capacity(size as usize);
            for j in 1..=size {
                let row = (1..=size)
                    .map(|i| one_column(ty, f, conj.part(i as usize) - i + j, (nn + j - 1) as usize))
                    .collect::<Result<Vec<_>>>()?;
                m.push(row);
            }
            RatFn::from_poly(det(&m)?)
        }
        FlaggedKind::Giambelli => {
            let lambda = partition.expect("checked");
            let (alpha, beta) = lambda.frobenius();
            let mut m = Vec::with_capacity(alpha.len());
            for &a in &alpha {
                let row = beta
                    .iter()
                    .map(|&b| character(ty, f, &Partition::from_frobenius(&[a], &[b])?, &xs))
                    .collect::<Result<Vec<_>>>()?;
                m.push(row);
            }
            RatFn::from_poly(det(&m)?)
        }
    };
    Ok(CheckReport::new(kind.id(), params, &lhs.difference_numerator(&rhs)))
}

/// Which generating function identity to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenFun {
    Family(GroupType),
    /// The type A identity with the first `n` factors moved to the right.
    AConvenient,
    /// `Σ g_k[x|c] [t|c̃]^k = 1/∏(x_i - t)`.
    G,
}

impl GenFun {
    pub fn parse(s: &str) -> Result<GenFun> {
        match s {
            "a-convenient" => Ok(GenFun::AConvenient),
            "g" => Ok(GenFun::G),
            other => other.parse().map(GenFun::Family),
        }
    }

    pub fn name(self) -> String {
        match self {
            GenFun::Family(t) => t.to_string(),
            GenFun::AConvenient => "a-convenient".into(),
            GenFun::G => "g".into(),
        }
    }
}

fn t_fams() -> Families {
    Families::of(&[Family::T])
}

fn tpoly() -> Poly {
    Poly::var(VarId::t())
}

/// `1/∏_{l ∈ range}(1 - t c_l)` to degree `cap`.
fn inv_t_product(c: &CSpec, range: core::ops::Range<i64>, cap: u32) -> Poly {
    product_truncated(range.map(|l| geometric(&(tpoly() * c.lookup(l)), t_fams(), cap)), t_fams(), cap)
}

/// The type D generating function inherits the constant-term free hypothesis of
/// the even orthogonal Littlewood identity: `c_0 = 0`.
pub fn genfun_hypotheses(which: GenFun, c: &CSpec) -> (CSpec, Vec<String>) {
    if which == GenFun::Family(GroupType::D) && !c.c0_is_zero() {
        return (c.clone().with_c0_zero(), vec!["c_0 set to 0".to_string()]);
    }
    (c.clone(), Vec::new())
}

/// The generating functions of the one-row characters, to `t`-degree `D`.
pub fn check_genfun(which: GenFun, c: &CSpec, n: usize, cap: u32) -> Result<CheckReport> {
    let params = vec![param("family", which.name()), param("n", n), param("truncate", cap)];
    let xs = first_vars(n);
    let f = AdmissibleSequence::factorial(c.clone());
    let nn = n as i64;
    let inv_x = |with_bar: bool| {
        let mut fs: Vec<Poly> = xs.iter().map(|&i| geometric(&(xv(i) * tpoly()), t_fams(), cap)).collect();
        if with_bar {
            fs.extend(xs.iter().map(|&i| geometric(&(xbarv(i) * tpoly()), t_fams(), cap)));
        }
        product_truncated(fs, t_fams(), cap)
    };
    let (lhs, rhs) = match which {
        GenFun::Family(ty) => {
            let mut terms = Vec::new();
            for k in 0..=cap as i64 {
                let h = character(ty, &f, &Partition::new(&[k])?, &xs)?;
                let weight = inv_t_product(c, 0..k + nn, cap).mul_term(&Monomial::var(VarId::t(), k as i32), &Rational::one());
                terms.push(mul_truncated(&h, &weight, t_fams(), cap));
            }
            let extra = match ty {
                GroupType::A => Poly::one(),
                GroupType::C => Poly::one(),
                GroupType::B => Poly::one() + tpoly(),
                GroupType::D => Poly::one() - tpoly().pow(2),
            };
            let rhs = mul_truncated(&extra, &inv_x(ty != GroupType::A), t_fams(), cap);
            (sum(terms), rhs)
        }
        GenFun::AConvenient => {
            let mut terms = Vec::new();
            for k in 0..=cap as i64 {
                let h = schur(&f, &Partition::new(&[k])?, &xs)?;
                let weight = inv_t_product(c, nn..nn + k, cap).mul_term(&Monomial::var(VarId::t(), k as i32), &Rational::one());
                terms.push(mul_truncated(&h, &weight, t_fams(), cap));
            }
            let num = product((0..nn).map(|l| Poly::one() - tpoly() * c.lookup(l)));
            (sum(terms), mul_truncated(&num, &inv_x(false), t_fams(), cap))
        }
        GenFun::G => {
            // g_k has x-degree at most -k-n; the right side sits in x-degrees [-n-D, -n]
            let floor = -(nn + cap as i64 + 1);
            let rev = c.reverse();
            let mut terms = Vec::new();
            for k in 0..=(-floor - nn) {
                let g = g_function(c, k, &xs)?.expand_x_inverse(floor)?;
                let tk = factorial_power(&tpoly(), &rev, k as u32);
                terms.push(mul_truncated(&g, &tk, t_fams(), cap).retain(|m| x_degree(m) >= floor));
            }
            let fs = xs.iter().map(|&i| xbarv(i) * geometric(&(xbarv(i) * tpoly()), t_fams(), cap));
            let rhs = product_truncated(fs, t_fams(), cap).retain(|m| x_degree(m) >= floor);
            (sum(terms), rhs)
        }
    };
    Ok(CheckReport::new("genfun", params, &(lhs - rhs)))
}

/// The triangular-inversion dual and double dual of the factorial sequence
/// against their closed forms, coefficientwise to `cap`.
pub fn check_dual_sequences(c: &CSpec, cap: u32) -> Result<CheckReport> {
    let params = vec![param("truncate", cap)];
    let f = AdmissibleSequence::factorial(c.clone());
    let fhat = DualSequence::new(&f, cap)?;
    let fcheck = DoubleDualSequence::new(&f, cap)?;
    let v = Poly::var(VarId::v(1));
    let rev = c.reverse();
    let mut diffs = Vec::new();
    for k in 0..=cap as usize {
        let marker = Poly::var_pow(VarId::t(), k as i32);
        let closed = DualSequence::factorial_closed_form(c, k, VarId::u(1), cap)?;
        diffs.push(&(fhat.entry(k, VarId::u(1))?.into_body() - closed.into_body()) * &marker);
        let expected = if k == 0 { Poly::one() } else { &v * &factorial_power(&v, &rev, k as u32 - 1) };
        diffs.push(&(fcheck.entry(k, &v)? - expected) * &marker);
    }
    Ok(CheckReport::new("dual-sequence", params, &sum(diffs)))
}

/// The Gelfand–Tsetlin sum against the exact signature bialternant.
pub fn check_gt(c: &CSpec, lambda: &Signature, n: usize) -> Result<CheckReport> {
    let params = vec![param("lambda", lambda), param("n", n)];
    let xs = first_vars(n);
    let lhs = crate::characters::gt_character(lambda, &xs, c, crate::characters::GtConvention::LOCKED)?;
    let rhs = schur_signature(&AdmissibleSequence::factorial(c.clone()), lambda, &xs)?;
    Ok(CheckReport::new("gt", params, &lhs.difference_numerator(&rhs)))
}
