use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::matrix::Ring;
use super::poly::{x_degree, Poly, Rational};
use super::var::Family;
use crate::error::{Error, Result};

/// A polynomial over a product of known factors (each stored monic, with
/// multiplicity). Equality is by cross-multiplication, so representations need
/// not be reduced.
#[derive(Clone)]
pub struct RatFn {
    num: Poly,
    den: BTreeMap<Poly, u32>,
}

fn monic(f: &Poly) -> (Poly, Rational) {
    let lead = f.leading_term().expect("zero denominator factor").1.clone();
    (f.scale(&(Rational::one() / &lead)), lead)
}

impl RatFn {
    pub fn from_poly(p: Poly) -> RatFn {
        RatFn { num: p, den: BTreeMap::new() }
    }

    /// `num / prod factors`.
    pub fn new(num: Poly, factors: impl IntoIterator<Item = Poly>) -> RatFn {
        let mut r = RatFn::from_poly(num);
        for f in factors {
            r.divide_by_factor(&f, 1);
        }
        r
    }

    fn divide_by_factor(&mut self, f: &Poly, mult: u32) {
        if let Some(c) = f.as_constant() {
            let inv = Rational::one() / c.pow(mult as i32);
            self.num = self.num.scale(&inv);
            return;
        }
        let (m, lead) = monic(f);
        self.num = self.num.scale(&(Rational::one() / lead.pow(mult as i32)));
        *self.den.entry(m).or_insert(0) += mult;
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Poly, u32)> {
        self.den.iter().map(|(f, &m)| (f, m))
    }

    pub fn denominator(&self) -> Poly {
        self.den.iter().fold(Poly::one(), |acc, (f, &m)| &acc * &f.pow(m))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// Cancels every denominator factor that divides the numerator.
    pub fn reduced(&self) -> RatFn {
        let mut num = self.num.clone();
        let mut den = BTreeMap::new();
        for (f, &m) in &self.den {
            let mut left = m;
            while left > 0 && !num.is_zero() {
                match num.exact_div(f) {
                    Ok(q) => {
                        num = q;
                        left -= 1;
                    }
                    Err(_) => break,
                }
            }
            if num.is_zero() {
                return RatFn::from_poly(Poly::zero());
            }
            if left > 0 {
                den.insert(f.clone(), left);
            }
        }
        RatFn { num, den }
    }

    /// The polynomial this represents, if it is one.
    pub fn to_poly(&self) -> Option<Poly> {
        let r = self.reduced();
        r.den.is_empty().then_some(r.num)
    }

    /// Numerators of `self` and `other` over their least common denominator.
    fn common(&self, other: &RatFn) -> (Poly, Poly, BTreeMap<Poly, u32>) {
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            let e = den.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |r: &RatFn| {
            let mut p = r.num.clone();
            for (f, &m) in &den {
                let have = r.den.get(f).copied().unwrap_or(0);
                if m > have && !p.is_zero() {
                    p = &p * &f.pow(m - have);
                }
            }
            p
        };
        (lift(self), lift(other), den)
    }

    /// Numerator of `self - other` over the common denominator: zero exactly when equal.
    pub fn difference_numerator(&self, other: &RatFn) -> Poly {
        let (a, b, _) = self.common(other);
        &a - &b
    }

    pub fn scale(&self, c: &Rational) -> RatFn {
        if c.is_zero() {
            return RatFn::from_poly(Poly::zero());
        }
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFn {
        RatFn { num: &self.num * p, den: self.den.clone() }
    }

    /// Expansion in nonpositive powers of the `x` variables, keeping total
    /// `x`-degree at least `floor`. Every factor must be of the form `x_i - a`
    /// with `a` free of `x`.
    pub fn expand_x_inverse(&self, floor: i64) -> Result<Poly> {
        let Some((_, hi)) = self.num.degree_range(family_x()) else {
            return Ok(Poly::zero());
        };
        // the expansion of 1/den starts in x-degree -deg(den) and only goes down
        let budget = floor - hi;
        let mut inv = Poly::one();
        for (f, &m) in &self.den {
            let g = inverse_linear_x(f, budget)?;
            for _ in 0..m {
                inv = (&inv * &g).retain(|mono| x_degree(mono) >= budget);
            }
        }
        Ok((&self.num * &inv).retain(|mono| x_degree(mono) >= floor))
    }
}

fn family_x() -> super::var::Families {
    super::var::Families::of(&[Family::X])
}

/// `1/(x_i - a) = sum_k a^k x_i^{-k-1}`, keeping `x`-degree at least `floor`.
fn inverse_linear_x(f: &Poly, floor: i64) -> Result<Poly> {
    let (xpart, rest): (Vec<_>, Vec<_>) = f.terms().iter().cloned().partition(|t| x_degree(&t.0) != 0);
    let ok = xpart.len() == 1
        && xpart[0].1.is_one()
        && xpart[0].0.pairs().len() == 1
        && xpart[0].0.pairs()[0].1 == 1
        && rest.iter().all(|t| t.0.pairs().iter().all(|p| !p.0.family().is_laurent()));
    if !ok {
        return Err(Error::Unsupported(alloc::format!("cannot expand 1/({f}) in inverse powers of x")));
    }
    let xv = xpart[0].0.pairs()[0].0;
    let a = -Poly::from_terms(rest);
    let mut out = Vec::new();
    let mut apow = Poly::one();
    let mut k = 0i64;
    while -k > floor {
        out.push(apow.mul_term(&super::monomial::Monomial::var(xv, -(k as i32) - 1), &Rational::one()));
        apow = &apow * &a;
        k += 1;
    }
    Ok(super::poly::sum(out))
}

impl PartialEq for RatFn {
    fn eq(&self, other: &RatFn) -> bool {
        self.difference_numerator(other).is_zero()
    }
}

impl From<Poly> for RatFn {
    fn from(p: Poly) -> RatFn {
        RatFn::from_poly(p)
    }
}

impl Ring for RatFn {
    fn zero() -> RatFn {
        RatFn::from_poly(Poly::zero())
    }
    fn one() -> RatFn {
        RatFn::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &RatFn) -> RatFn {
        if other.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return other.clone();
        }
        let (a, b, den) = self.common(other);
        RatFn { num: &a + &b, den }
    }
    fn sub(&self, other: &RatFn) -> RatFn {
        self.add(&other.neg())
    }
    fn mul(&self, other: &RatFn) -> RatFn {
        if self.num.is_zero() || other.num.is_zero() {
            return RatFn::zero();
        }
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        RatFn { num: &self.num * &other.num, den }
    }
    fn neg(&self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / (", self.num)?;
        for (k, (g, m)) in self.den.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            if *m == 1 {
                write!(f, "({g})")?;
            } else {
                write!(f, "({g})^{m}")?;
            }
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::poly::{x, xbar};
    use crate::ring::var::VarId;

    fn c(m: i64) -> Poly {
        Poly::var(VarId::c(m))
    }

    #[test]
    fn partial_fractions() {
        // 1/(x-a) - 1/(x-b) = (a-b)/((x-a)(x-b))
        let a = RatFn::new(Poly::one(), [x(1) - c(0)]);
        let b = RatFn::new(Poly::one(), [x(1) - c(1)]);
        let lhs = a.sub(&b);
        let rhs = RatFn::new(c(0) - c(1), [x(1) - c(0), x(1) - c(1)]);
        assert_eq!(lhs, rhs);
        assert!(lhs != a);
    }

    #[test]
    fn sign_normalisation() {
        let a = RatFn::new(Poly::one(), [c(0) - x(1)]);
        let b = RatFn::new(-Poly::one(), [x(1) - c(0)]);
        assert_eq!(a, b);
        assert_eq!(a.factors().count(), 1);
    }

    #[test]
    fn reduction() {
        let r = RatFn::new((x(1) - c(0)) * (x(2) - c(0)), [x(1) - c(0)]);
        assert_eq!(r.to_poly(), Some(x(2) - c(0)));
        assert_eq!(RatFn::new(Poly::one(), [x(1) + Poly::one()]).to_poly(), None);
    }

    #[test]
    fn inverse_expansion() {
        let r = RatFn::new(Poly::one(), [x(1) - c(-1)]);
        let e = r.expand_x_inverse(-3).unwrap();
        assert_eq!(e, xbar(1) + c(-1) * xbar(1).pow(2) + c(-1).pow(2) * xbar(1).pow(3));
        let s = RatFn::new(x(1), [x(1) - c(0)]);
        assert_eq!(s.expand_x_inverse(-1).unwrap(), Poly::one() + c(0) * xbar(1));
    }
}
