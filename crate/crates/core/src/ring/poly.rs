use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::var::{Families, Family, VarId};
use crate::error::{Error, Result};

/// Exact coefficients: arbitrary-precision rationals, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse Laurent polynomial over the rationals in canonical form: terms sorted by
/// [`Monomial`] order, no zero coefficients. Equality is structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(int(n))
    }

    pub fn var(v: VarId) -> Poly {
        Poly::term(Monomial::var(v, 1), Rational::one())
    }

    pub fn var_pow(v: VarId, e: i32) -> Poly {
        Poly::term(Monomial::var(v, e), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: alloc::vec![(m, c)] }
    }

    /// Canonicalises an arbitrary list of terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Poly {
        let mut v: Vec<(Monomial, Rational)> = terms.into_iter().collect();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Poly { terms: combine_sorted(v) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// The rational value of a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    /// Lowest term in the monomial order.
    pub fn trailing_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn vars(&self) -> Vec<VarId> {
        let mut v: Vec<VarId> = self.terms.iter().flat_map(|t| t.0.pairs().iter().map(|p| p.0)).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn mentions(&self, pred: impl Fn(VarId) -> bool) -> bool {
        self.terms.iter().any(|t| t.0.pairs().iter().any(|p| pred(p.0)))
    }

    /// Range of total degree over the given families, `None` for the zero polynomial.
    pub fn degree_range(&self, fams: Families) -> Option<(i64, i64)> {
        let mut it = self.terms.iter().map(|t| t.0.degree_in(fams));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Multiplication by a single term; the monomial order is multiplicative, so the
    /// result is still sorted.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn retain(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Poly {
        Poly { terms: self.terms.iter().filter(|t| keep(&t.0)).cloned().collect() }
    }

    /// Applies a monomial map that may merge terms.
    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> Monomial) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Renames variables; the map must be injective on the variables present.
    pub fn rename(&self, f: impl Fn(VarId) -> VarId) -> Poly {
        self.map_monomials(|m| m.map_exps(|v, e| (f(v), e)))
    }

    /// Simultaneous substitution of polynomials for variables.
    ///
    /// A variable occurring with a negative exponent must be sent to a single
    /// monomial term, which is then inverted.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, Poly>) -> Result<Poly> {
        let mut cache: BTreeMap<(VarId, i32), Poly> = BTreeMap::new();
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            let mut rest = Vec::new();
            for &(v, e) in m.pairs() {
                let Some(image) = bindings.get(&v) else {
                    rest.push((v, e));
                    continue;
                };
                let factor = match cache.get(&(v, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = if e >= 0 { image.pow(e as u32) } else { invert_term(image, v)?.pow((-e) as u32) };
                        cache.insert((v, e), p.clone());
                        p
                    }
                };
                acc = &acc * &factor;
                if acc.is_zero() {
                    break;
                }
            }
            if !acc.is_zero() {
                out.push(acc.mul_term(&Monomial::from_pairs(rest), &Rational::one()));
            }
        }
        Ok(sum(out))
    }

    /// Exact division. Laurent content in the `x`/`y` families is factored out of
    /// both operands, then ordinary multivariate division runs in graded-lex order
    /// and fails as soon as a leading term is not divisible.
    pub fn exact_div(&self, den: &Poly) -> Result<Poly> {
        if den.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let (num_content, num) = self.split_laurent_content();
        let (den_content, den) = den.split_laurent_content();
        let shift = num_content.mul(&den_content.inverse());
        let q = if den.len() == 1 {
            let (dm, dc) = &den.terms[0];
            let inv = Rational::one() / dc;
            let mut terms = Vec::with_capacity(num.len());
            for (m, c) in &num.terms {
                let qm = dm.divides_into(m).or_else(|| m.eq(dm).then(Monomial::one)).ok_or(Error::NotDivisible)?;
                terms.push((qm, c * &inv));
            }
            Poly { terms }
        } else {
            polynomial_division(&num, &den)?
        };
        Ok(q.mul_term(&shift, &Rational::one()))
    }

    /// Splits `self = m * p` where `m` is a Laurent monomial in the `x`/`y` families
    /// and `p` has minimal `x`/`y` exponent exactly zero in each such variable.
    fn split_laurent_content(&self) -> (Monomial, Poly) {
        let mut content: Option<Monomial> = None;
        for (m, _) in &self.terms {
            let (_, laurent) = m.split_off(|v| v.family().is_laurent());
            content = Some(match content {
                None => laurent,
                Some(g) => g.gcd_laurent(&laurent),
            });
        }
        let content = content.unwrap_or_default();
        if content.is_one() {
            return (content, self.clone());
        }
        let inv = content.inverse();
        (content, self.mul_term(&inv, &Rational::one()))
    }
}

fn invert_term(p: &Poly, v: VarId) -> Result<Poly> {
    match p.terms.as_slice() {
        [(m, c)] if m.pairs().iter().all(|q| q.0.family().is_laurent()) => {
            Ok(Poly::term(m.inverse(), Rational::one() / c))
        }
        _ => Err(Error::NonInvertibleImage { var: v.name() }),
    }
}

fn polynomial_division(num: &Poly, den: &Poly) -> Result<Poly> {
    let (lead_m, lead_c) = den.leading_term().expect("nonzero divisor");
    let lead_inv = Rational::one() / lead_c;
    let mut rem: BTreeMap<Monomial, Rational> = num.terms.iter().cloned().collect();
    let mut quotient = Vec::new();
    while let Some((m, c)) = rem.pop_last() {
        let qm = if m == *lead_m { Monomial::one() } else { lead_m.divides_into(&m).ok_or(Error::NotDivisible)? };
        let qc = &c * &lead_inv;
        for (dm, dc) in &den.terms[..den.terms.len() - 1] {
            let key = dm.mul(&qm);
            let delta = dc * &qc;
            match rem.get_mut(&key) {
                Some(v) => {
                    *v -= delta;
                    if v.is_zero() {
                        rem.remove(&key);
                    }
                }
                None => {
                    rem.insert(key, -delta);
                }
            }
        }
        quotient.push((qm, qc));
    }
    quotient.reverse();
    Ok(Poly { terms: quotient })
}

fn combine_sorted(v: Vec<(Monomial, Rational)>) -> Vec<(Monomial, Rational)> {
    let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 += c,
            _ => {
                if let Some(last) = out.last() {
                    if last.1.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if out.last().is_some_and(|t| t.1.is_zero()) {
        out.pop();
    }
    out
}

fn merge(a: &Poly, b: &Poly, negate_b: bool) -> Poly {
    let (x, y) = (&a.terms, &b.terms);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let nb = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            Ordering::Less => {
                out.push(x[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((y[j].0.clone(), nb(&y[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &x[i].1 - &y[j].1 } else { &x[i].1 + &y[j].1 };
                if !c.is_zero() {
                    out.push((x[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(x[i..].iter().cloned());
    out.extend(y[j..].iter().map(|t| (t.0.clone(), nb(&t.1))));
    Poly { terms: out }
}

/// Sum of many polynomials.
pub fn sum(parts: impl IntoIterator<Item = Poly>) -> Poly {
    let mut all = Vec::new();
    for p in parts {
        all.extend(p.terms);
    }
    Poly::from_terms(all)
}

/// Product of many polynomials.
pub fn product(parts: impl IntoIterator<Item = Poly>) -> Poly {
    parts.into_iter().fold(Poly::one(), |acc, p| &acc * &p)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        merge(self, rhs, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        merge(self, rhs, true)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if self.len() == 1 {
            return rhs.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        if rhs.len() == 1 {
            return self.mul_term(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        let mut v = Vec::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                v.push((ma.mul(mb), ca * cb));
            }
        }
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Poly { terms: combine_sorted(v) }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<VarId> for Poly {
    fn from(v: VarId) -> Poly {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Poly {
        Poly::int(n)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Poly {
        Poly::constant(c)
    }
}

/// `x_i^{-1}` as a polynomial.
pub fn xbar(i: u32) -> Poly {
    Poly::var_pow(VarId::x(i), -1)
}

pub fn x(i: u32) -> Poly {
    Poly::var(VarId::x(i))
}

/// Total degree over the `x` family.
pub fn x_degree(m: &Monomial) -> i64 {
    m.degree_in_family(Family::X)
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Text form, leading term first: `x1^2 - 2*c0*x1 + 1/2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}
