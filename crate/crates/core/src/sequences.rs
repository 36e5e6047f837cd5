//! Parameter sequences `c`, admissible polynomial sequences `F` and their duals.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::monomial::Monomial;
use crate::ring::poly::{product, Poly, Rational};
use crate::ring::ratfn::RatFn;
use crate::ring::series::Series;
use crate::ring::var::{Families, Family, VarId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CKind {
    /// `c_m` is the indeterminate `c_m`, except at the listed indices.
    Symbolic { overrides: BTreeMap<i64, Rational> },
    /// `c ≡ 0`.
    Zeros,
    /// Listed values, zero elsewhere.
    Explicit { values: BTreeMap<i64, Rational> },
}

/// A doubly infinite sequence `c`, seen through an affine reindexing
/// `m ↦ sign·m + offset` of an underlying base sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CSpec {
    kind: CKind,
    sign: i64,
    offset: i64,
    negative_cut: bool,
}

impl CSpec {
    fn with_kind(kind: CKind) -> CSpec {
        CSpec { kind, sign: 1, offset: 0, negative_cut: false }
    }

    pub fn symbolic() -> CSpec {
        CSpec::with_kind(CKind::Symbolic { overrides: BTreeMap::new() })
    }

    /// Symbolic except at the listed indices.
    pub fn symbolic_with(overrides: BTreeMap<i64, Rational>) -> CSpec {
        CSpec::with_kind(CKind::Symbolic { overrides })
    }

    pub fn zeros() -> CSpec {
        CSpec::with_kind(CKind::Zeros)
    }

    pub fn explicit(values: BTreeMap<i64, Rational>) -> CSpec {
        CSpec::with_kind(CKind::Explicit { values })
    }

    pub fn kind(&self) -> &CKind {
        &self.kind
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn is_reversed(&self) -> bool {
        self.sign < 0
    }

    pub fn has_negative_cut(&self) -> bool {
        self.negative_cut
    }

    /// Forces `c_m = 0` for every negative index of the base sequence.
    pub fn with_negative_cut(mut self, cut: bool) -> CSpec {
        self.negative_cut = cut;
        self
    }

    /// Forces `c_0 = 0` in the base sequence.
    pub fn with_c0_zero(mut self) -> CSpec {
        match &mut self.kind {
            CKind::Symbolic { overrides } => {
                overrides.insert(0, Rational::zero());
            }
            CKind::Explicit { values } => {
                values.remove(&0);
            }
            CKind::Zeros => {}
        }
        self
    }

    fn base(&self, b: i64) -> Poly {
        if self.negative_cut && b < 0 {
            return Poly::zero();
        }
        match &self.kind {
            CKind::Symbolic { overrides } => match overrides.get(&b) {
                Some(v) => Poly::constant(v.clone()),
                None => Poly::var(VarId::c(b)),
            },
            CKind::Zeros => Poly::zero(),
            CKind::Explicit { values } => values.get(&b).cloned().map(Poly::constant).unwrap_or_default(),
        }
    }

    /// The base-sequence index that `lookup(m)` reads.
    pub fn base_index(&self, m: i64) -> i64 {
        self.sign * m + self.offset
    }

    /// `c_m` of this (shifted, possibly reversed) sequence.
    pub fn lookup(&self, m: i64) -> Poly {
        self.base(self.base_index(m))
    }

    /// `τ^r c`, with `(τ^r c)_m = c_{m+r}`.
    pub fn tau(&self, r: i64) -> CSpec {
        CSpec { offset: self.offset + self.sign * r, ..self.clone() }
    }

    /// `c̃`, with `c̃_m = c_{-m-1}`.
    pub fn reverse(&self) -> CSpec {
        CSpec { sign: -self.sign, offset: self.offset - self.sign, ..self.clone() }
    }

    /// Whether every lookup is zero at the base index 0 (with negative cut or not).
    pub fn c0_is_zero(&self) -> bool {
        self.lookup(0).is_zero()
    }
}

/// `[z | c]^k` for `k ≥ 0`: `(z - c_0)…(z - c_{k-1})`.
pub fn factorial_power(z: &Poly, c: &CSpec, k: u32) -> Poly {
    product((0..k as i64).map(|l| z - &c.lookup(l)))
}

/// `[z | c]^k` for any integer `k`; negative powers are `1/((z - c_{-1})…(z - c_{k}))`.
pub fn factorial_power_any(z: &Poly, c: &CSpec, k: i64) -> RatFn {
    if k >= 0 {
        return RatFn::from_poly(factorial_power(z, c, k as u32));
    }
    RatFn::new(Poly::one(), (1..=-k).map(|l| z - &c.lookup(-l)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqKind {
    Monomial,
    Factorial(CSpec),
    /// `table[n][j]` is the coefficient of `x^j` in `f_n`; `negative[n-1][k]` the
    /// coefficient of `x^{-k}` in `f_{-n}`, known for `k` up to the list length.
    Custom { table: Vec<Vec<Poly>>, negative: Vec<Vec<Poly>> },
}

/// An admissible sequence `F = (f_n)`, possibly extended to negative indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSequence {
    kind: SeqKind,
}

fn trimmed(v: &[Poly]) -> &[Poly] {
    let mut end = v.len();
    while end > 0 && v[end - 1].is_zero() {
        end -= 1;
    }
    &v[..end]
}

impl AdmissibleSequence {
    pub fn monomial() -> AdmissibleSequence {
        AdmissibleSequence { kind: SeqKind::Monomial }
    }

    pub fn factorial(c: CSpec) -> AdmissibleSequence {
        AdmissibleSequence { kind: SeqKind::Factorial(c) }
    }

    /// Validates a coefficient table. Coefficients may involve the parameter
    /// families (`c`, `h`) but no other variables.
    pub fn custom(table: Vec<Vec<Poly>>, negative: Vec<Vec<Poly>>) -> Result<AdmissibleSequence> {
        let foreign = |p: &Poly| p.mentions(|v| !matches!(v.family(), Family::C | Family::H));
        if table.iter().chain(negative.iter()).flatten().any(foreign) {
            return Err(Error::Unsupported("sequence coefficients may only involve c and h variables".into()));
        }
        for (n, row) in table.iter().enumerate() {
            let row = trimmed(row);
            if n == 0 {
                if row.len() != 1 || !row[0].is_one() {
                    return Err(Error::F0NotOne);
                }
                continue;
            }
            if row.len() != n + 1 {
                return Err(Error::WrongDegree { n, found: row.len().saturating_sub(1) });
            }
            if !row[n].is_one() {
                return Err(Error::NotMonic { n });
            }
        }
        if table.is_empty() {
            return Err(Error::MissingIndex { n: 0 });
        }
        for (i, row) in negative.iter().enumerate() {
            let n = i + 1;
            let lead_ok = row.get(n).is_some_and(|a| !a.is_zero());
            if row.iter().take(n).any(|a| !a.is_zero()) || !lead_ok {
                return Err(Error::NegativePartWrongOrder { n });
            }
        }
        let table = table.iter().map(|r| trimmed(r).to_vec()).collect();
        Ok(AdmissibleSequence { kind: SeqKind::Custom { table, negative } })
    }

    pub fn kind(&self) -> &SeqKind {
        &self.kind
    }

    pub fn c_spec(&self) -> Option<&CSpec> {
        match &self.kind {
            SeqKind::Factorial(c) => Some(c),
            _ => None,
        }
    }

    /// Whether negative-index characters can be computed exactly (as rational functions).
    pub fn has_exact_negative_part(&self) -> bool {
        !matches!(self.kind, SeqKind::Custom { .. })
    }

    /// Largest `n` with `f_n` available, `None` if unbounded.
    pub fn max_index(&self) -> Option<usize> {
        match &self.kind {
            SeqKind::Custom { table, .. } => Some(table.len() - 1),
            _ => None,
        }
    }

    /// Coefficients of `f_n` in increasing powers of `x`.
    pub fn coefficients(&self, n: usize) -> Result<Vec<Poly>> {
        match &self.kind {
            SeqKind::Monomial => {
                let mut v = vec![Poly::zero(); n + 1];
                v[n] = Poly::one();
                Ok(v)
            }
            SeqKind::Factorial(c) => {
                // multiply out (x - c_0)...(x - c_{n-1}) coefficientwise
                let mut v = vec![Poly::one()];
                for l in 0..n as i64 {
                    let cl = c.lookup(l);
                    let mut next = vec![Poly::zero(); v.len() + 1];
                    for (j, a) in v.iter().enumerate() {
                        next[j + 1] = &next[j + 1] + a;
                        next[j] = &next[j] - &(a * &cl);
                    }
                    v = next;
                }
                Ok(v)
            }
            SeqKind::Custom { table, .. } => {
                let row = table.get(n).ok_or(Error::IndexOutOfTable { n: n as i64, available: table.len() - 1 })?;
                let mut v = row.clone();
                v.resize(n + 1, Poly::zero());
                Ok(v)
            }
        }
    }

    /// `f_n(z)` for `n ≥ 0` at an arbitrary polynomial argument.
    pub fn eval(&self, n: usize, z: &Poly) -> Result<Poly> {
        match &self.kind {
            SeqKind::Monomial => Ok(z.pow(n as u32)),
            SeqKind::Factorial(c) => Ok(factorial_power(z, c, n as u32)),
            SeqKind::Custom { .. } => {
                let coeffs = self.coefficients(n)?;
                // Horner
                let mut acc = Poly::zero();
                for a in coeffs.iter().rev() {
                    acc = &(&acc * z) + a;
                }
                Ok(acc)
            }
        }
    }

    /// Coefficients `a_{n,k}` of `x^{-k}` in `f_{-n}`, for `k = 0..=order`.
    pub fn negative_coefficients(&self, n: usize, order: usize) -> Result<Vec<Poly>> {
        let mut out = vec![Poly::zero(); order + 1];
        match &self.kind {
            SeqKind::Monomial => {
                if n <= order {
                    out[n] = Poly::one();
                }
            }
            SeqKind::Factorial(c) => {
                // x^{-n} prod_l 1/(1 - c_{-l}/x): complete homogeneous in c_{-1..-n}
                let mut h = vec![Poly::zero(); order + 1];
                if n <= order {
                    h[0] = Poly::one();
                }
                for l in 1..=n as i64 {
                    let cl = c.lookup(-l);
                    for j in 1..h.len() {
                        let add = &h[j - 1] * &cl;
                        h[j] = &h[j] + &add;
                    }
                }
                out[n..=order].clone_from_slice(&h[..=order - n]);
            }
            SeqKind::Custom { negative, .. } => {
                if n == 0 {
                    out[0] = Poly::one();
                    return Ok(out);
                }
                let row = negative.get(n - 1).filter(|r| r.len() > order).ok_or(Error::InsufficientNegativePart { n, order: order as i64 })?;
                out.clone_from_slice(&row[..=order]);
            }
        }
        if n == 0 {
            out = vec![Poly::zero(); order + 1];
            out[0] = Poly::one();
        }
        Ok(out)
    }

    /// `f_{-n}(x)` for the variable `x`, truncated below `x`-degree `floor`.
    pub fn eval_negative(&self, n: usize, x: VarId, floor: i64) -> Result<Poly> {
        let order = (-floor).max(n as i64 - 1);
        if (n as i64) > -floor {
            return Ok(Poly::zero());
        }
        let coeffs = self.negative_coefficients(n, order as usize)?;
        Ok(crate::ring::poly::sum(
            coeffs.into_iter().enumerate().map(|(k, a)| a.mul_term(&Monomial::var(x, -(k as i32)), &Rational::one())),
        ))
    }

    /// `f_k(x)` for any integer `k`, truncated below `x`-degree `floor` when `k < 0`.
    pub fn eval_any(&self, k: i64, x: VarId, floor: i64) -> Result<Poly> {
        if k >= 0 {
            self.eval(k as usize, &Poly::var(x))
        } else {
            self.eval_negative((-k) as usize, x, floor)
        }
    }

    /// `f_n(0) = 0` for every `n > 0`.
    pub fn is_constant_term_free(&self) -> bool {
        match &self.kind {
            SeqKind::Monomial => true,
            SeqKind::Factorial(c) => c.lookup(0).is_zero(),
            SeqKind::Custom { table, .. } => table.iter().skip(1).all(|r| r[0].is_zero()),
        }
    }
}

/// The truncated dual `f̂_n(u) = Σ_k G[n][k] u^k`, `n, k ≤ cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSequence {
    coeffs: Vec<Vec<Poly>>,
    cap: u32,
}

/// Inverse of a lower unitriangular matrix by forward substitution.
fn unitriangular_inverse(l: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = l.len();
    let mut inv = vec![vec![Poly::zero(); n]; n];
    for i in 0..n {
        inv[i][i] = Poly::one();
        for j in 0..i {
            let mut acc = Poly::zero();
            for k in j..i {
                if !l[i][k].is_zero() && !inv[k][j].is_zero() {
                    acc = &acc + &(&l[i][k] * &inv[k][j]);
                }
            }
            inv[i][j] = -acc;
        }
    }
    inv
}

impl DualSequence {
    /// The coefficient matrix of the dual is the transposed inverse of the
    /// (lower unitriangular) coefficient matrix of `F`.
    pub fn new(f: &AdmissibleSequence, cap: u32) -> Result<DualSequence> {
        let d = cap as usize;
        let mut fm = vec![vec![Poly::zero(); d + 1]; d + 1];
        for n in 0..=d {
            for (j, a) in f.coefficients(n)?.into_iter().enumerate() {
                fm[n][j] = a;
            }
        }
        let inv = unitriangular_inverse(&fm);
        let coeffs = (0..=d).map(|n| (0..=d).map(|k| inv[k][n].clone()).collect()).collect();
        Ok(DualSequence { coeffs, cap })
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Coefficient of `u^k` in `f̂_n`.
    pub fn coefficient(&self, n: usize, k: usize) -> &Poly {
        &self.coeffs[n][k]
    }

    /// `f̂_n(u)` in the variable `u`, as a series in the `u` family.
    pub fn entry(&self, n: usize, u: VarId) -> Result<Series> {
        if n > self.cap as usize {
            return Err(Error::CapTooSmall { cap: self.cap, needed: n as u32 });
        }
        let body = crate::ring::poly::sum(
            self.coeffs[n].iter().enumerate().map(|(k, a)| a.mul_term(&Monomial::var(u, k as i32), &Rational::one())),
        );
        Series::truncate(&body, Families::of(&[Family::U]), self.cap)
    }

    /// The closed form `u^k / ∏_{l=0}^{k} (1 - u c_l)` for the factorial sequence.
    pub fn factorial_closed_form(c: &CSpec, k: usize, u: VarId, cap: u32) -> Result<Series> {
        let fams = Families::of(&[Family::U]);
        let uu = Poly::var(u);
        let den = product((0..=k as i64).map(|l| &Poly::one() - &(&uu * &c.lookup(l))));
        let inv = Series::truncate(&den, fams, cap)?.geometric_inverse()?;
        inv.mul_poly(&uu.pow(k as u32))
    }

    /// `Σ_{n ≤ cap} f_n(x) f̂_n(u)`, which should be `1/(1 - xu)` to the cap.
    pub fn pairing_sum(&self, f: &AdmissibleSequence, x: VarId, u: VarId) -> Result<Series> {
        let mut acc = Series::zero(Families::of(&[Family::U]), self.cap);
        for n in 0..=self.cap as usize {
            acc = acc.add(&self.entry(n, u)?.mul_poly(&f.eval(n, &Poly::var(x))?)?)?;
        }
        Ok(acc)
    }
}

/// The double dual `f̌_n(v) = Σ_l B[n][l] v^l`, `n ≤ cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleDualSequence {
    coeffs: Vec<Vec<Poly>>,
}

impl DoubleDualSequence {
    /// `B = (Aᵀ)^{-1}` where `A[n][k]` is the coefficient of `x^{-k}` in `f_{-n}`.
    pub fn new(f: &AdmissibleSequence, cap: u32) -> Result<DoubleDualSequence> {
        let d = cap as usize;
        let a: Vec<Vec<Poly>> = (0..=d).map(|n| f.negative_coefficients(n, d)).collect::<Result<_>>()?;
        // L = Aᵀ is lower triangular with diagonal a_{n,n}; rescale to unitriangular.
        let mut diag_inv = Vec::with_capacity(d + 1);
        for (n, row) in a.iter().enumerate() {
            let lead = row[n].as_constant().filter(|c| !c.is_zero()).ok_or(Error::NonInvertibleLeadingCoefficient { n })?;
            diag_inv.push(Rational::one() / lead);
        }
        // L = U D with U unitriangular: U[k][n] = A[n][k] / a_{n,n}
        let u: Vec<Vec<Poly>> = (0..=d).map(|k| (0..=d).map(|n| a[n][k].scale(&diag_inv[n])).collect()).collect();
        let uinv = unitriangular_inverse(&u);
        // L^{-1} = D^{-1} U^{-1}
        let coeffs = (0..=d).map(|n| (0..=d).map(|l| uinv[n][l].scale(&diag_inv[n])).collect()).collect();
        Ok(DoubleDualSequence { coeffs })
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, n: usize, l: usize) -> &Poly {
        &self.coeffs[n][l]
    }

    /// `f̌_n(v)`.
    pub fn entry(&self, n: usize, v: &Poly) -> Result<Poly> {
        let row = self.coeffs.get(n).ok_or(Error::CapTooSmall { cap: self.cap() as u32, needed: n as u32 })?;
        let mut acc = Poly::zero();
        for a in row[..=n].iter().rev() {
            acc = &(&acc * v) + a;
        }
        Ok(acc)
    }

    /// `f̌_n(v) / v` for `n ≥ 1`.
    pub fn entry_over_v(&self, n: usize, v: &Poly) -> Result<Poly> {
        assert!(n >= 1);
        let row = self.coeffs.get(n).ok_or(Error::CapTooSmall { cap: self.cap() as u32, needed: n as u32 })?;
        let mut acc = Poly::zero();
        for a in row[1..=n].iter().rev() {
            acc = &(&acc * v) + a;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::poly::{int, x};

    fn c(m: i64) -> Poly {
        Poly::var(VarId::c(m))
    }

    #[test]
    fn shifts_and_reversal() {
        let s = CSpec::symbolic();
        assert_eq!(s.tau(1).lookup(0), c(1));
        assert_eq!(s.tau(2).tau(-5), s.tau(-3));
        assert_eq!(s.reverse().lookup(0), c(-1));
        assert_eq!(s.reverse().reverse(), s);
        for n in 1..4 {
            assert_eq!(s.reverse().tau(n - 1), s.tau(1 - n).reverse());
        }
        let cut = CSpec::symbolic().with_negative_cut(true);
        assert!(cut.tau(-3).lookup(1).is_zero());
        assert_eq!(cut.tau(-3).lookup(3), c(0));
        assert!(CSpec::symbolic().with_c0_zero().lookup(0).is_zero());
    }

    #[test]
    fn factorial_values() {
        let f = AdmissibleSequence::factorial(CSpec::symbolic());
        assert_eq!(f.eval(0, &x(1)).unwrap(), Poly::one());
        assert_eq!(f.eval(1, &x(1)).unwrap(), x(1) - c(0));
        assert_eq!(f.eval(2, &x(1)).unwrap(), (x(1) - c(0)) * (x(1) - c(1)));
        let z = AdmissibleSequence::factorial(CSpec::zeros());
        assert_eq!(z.eval(3, &x(1)).unwrap(), x(1).pow(3));
        let neg = f.eval_negative(1, VarId::x(1), -3).unwrap();
        let xb = |k: i32| Poly::var_pow(VarId::x(1), -k);
        assert_eq!(neg, xb(1) + c(-1) * xb(2) + c(-1).pow(2) * xb(3));
        let m = AdmissibleSequence::monomial();
        assert_eq!(m.eval_negative(2, VarId::x(1), -5).unwrap(), xb(2));
    }

    #[test]
    fn coefficient_table_matches_eval() {
        let f = AdmissibleSequence::factorial(CSpec::symbolic());
        for n in 0..5 {
            let coeffs = f.coefficients(n).unwrap();
            let rebuilt = crate::ring::poly::sum(coeffs.into_iter().enumerate().map(|(j, a)| a * x(1).pow(j as u32)));
            assert_eq!(rebuilt, f.eval(n, &x(1)).unwrap());
        }
    }

    #[test]
    fn custom_validation() {
        let p = |v: &[i64]| v.iter().map(|&a| Poly::int(a)).collect::<Vec<_>>();
        assert!(AdmissibleSequence::custom(vec![p(&[1]), p(&[1, 1]), p(&[0, 1, 1])], vec![]).is_ok());
        assert_eq!(AdmissibleSequence::custom(vec![p(&[1]), p(&[0, 2])], vec![]), Err(Error::NotMonic { n: 1 }));
        assert_eq!(
            AdmissibleSequence::custom(vec![p(&[1]), p(&[0, 1]), p(&[0, 1])], vec![]),
            Err(Error::WrongDegree { n: 2, found: 1 })
        );
        assert_eq!(AdmissibleSequence::custom(vec![p(&[2])], vec![]), Err(Error::F0NotOne));
        assert_eq!(
            AdmissibleSequence::custom(vec![p(&[1])], vec![p(&[1, 1])]),
            Err(Error::NegativePartWrongOrder { n: 1 })
        );
        assert_eq!(
            AdmissibleSequence::custom(vec![p(&[1])], vec![p(&[0, 0, 1])]),
            Err(Error::NegativePartWrongOrder { n: 1 })
        );
    }

    #[test]
    fn monomial_is_self_dual() {
        let d = DualSequence::new(&AdmissibleSequence::monomial(), 5).unwrap();
        for n in 0..=5 {
            assert_eq!(d.entry(n, VarId::u(1)).unwrap().body(), &Poly::var_pow(VarId::u(1), n as i32));
        }
        let dd = DoubleDualSequence::new(&AdmissibleSequence::monomial(), 4).unwrap();
        assert_eq!(dd.entry(3, &Poly::var(VarId::v(1))).unwrap(), Poly::var_pow(VarId::v(1), 3));
    }

    #[test]
    fn dual_pairing() {
        let f = AdmissibleSequence::factorial(CSpec::symbolic());
        let d = DualSequence::new(&f, 4).unwrap();
        let lhs = d.pairing_sum(&f, VarId::x(1), VarId::u(1)).unwrap();
        let rhs = Series::truncate(&(Poly::one() - x(1) * Poly::var(VarId::u(1))), lhs.vars(), 4)
            .unwrap()
            .geometric_inverse()
            .unwrap();
        assert_eq!(lhs, rhs);
        // constant-term free iff f̂_0 = 1
        assert!(!d.entry(0, VarId::u(1)).unwrap().body().is_one());
        let g = AdmissibleSequence::factorial(CSpec::symbolic().with_c0_zero());
        assert!(g.is_constant_term_free());
        assert!(DualSequence::new(&g, 4).unwrap().entry(0, VarId::u(1)).unwrap().body().is_one());
    }

    #[test]
    fn rescaled_double_dual() {
        // f_{-1} = 2/x: f̌_1 = v/2
        let p = |v: &[i64]| v.iter().map(|&a| Poly::int(a)).collect::<Vec<_>>();
        let f = AdmissibleSequence::custom(vec![p(&[1])], vec![p(&[0, 2, 0]), p(&[0, 0, 1])]).unwrap();
        let dd = DoubleDualSequence::new(&f, 2).unwrap();
        let v = Poly::var(VarId::v(1));
        assert_eq!(dd.entry(1, &v).unwrap(), v.scale(&crate::ring::poly::rat(1, 2)));
        assert_eq!(dd.entry(0, &v).unwrap(), Poly::one());
        let _ = int(0);
    }
}
