use core::fmt;

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::poly::{Poly, Rational};
use super::var::Families;
use crate::error::{Error, Result};

/// A polynomial read modulo total degree `cap + 1` in the series families.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    body: Poly,
    vars: Families,
    cap: u32,
}

fn series_degree(m: &Monomial, vars: Families) -> i64 {
    m.degree_in(vars)
}

impl Series {
    /// Truncates `p`, rejecting negative exponents in the series families.
    pub fn truncate(p: &Poly, vars: Families, cap: u32) -> Result<Series> {
        for (m, _) in p.terms() {
            if let Some(&(v, _)) = m.pairs().iter().find(|(v, e)| *e < 0 && vars.contains(v.family())) {
                return Err(Error::NegativeSeriesExponent { var: v.name() });
            }
        }
        Ok(Series::wrap(p.retain(|m| series_degree(m, vars) <= cap as i64), vars, cap))
    }

    fn wrap(body: Poly, vars: Families, cap: u32) -> Series {
        Series { body, vars, cap }
    }

    pub fn zero(vars: Families, cap: u32) -> Series {
        Series::wrap(Poly::zero(), vars, cap)
    }

    pub fn one(vars: Families, cap: u32) -> Series {
        Series::wrap(Poly::one(), vars, cap)
    }

    pub fn body(&self) -> &Poly {
        &self.body
    }

    pub fn into_body(self) -> Poly {
        self.body
    }

    pub fn vars(&self) -> Families {
        self.vars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    fn check(&self, other: &Series) -> Result<()> {
        if self.vars != other.vars || self.cap != other.cap {
            return Err(Error::SeriesMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        Ok(Series::wrap(&self.body + &other.body, self.vars, self.cap))
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        Ok(Series::wrap(&self.body - &other.body, self.vars, self.cap))
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        Ok(Series::wrap(mul_truncated(&self.body, &other.body, self.vars, self.cap), self.vars, self.cap))
    }

    /// Multiplication by a polynomial with no negative series exponents.
    pub fn mul_poly(&self, p: &Poly) -> Result<Series> {
        let q = Series::truncate(p, self.vars, self.cap)?;
        self.mul(&q)
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::wrap(self.body.scale(c), self.vars, self.cap)
    }

    /// Lowest total series degree present, `None` for zero.
    pub fn order(&self) -> Option<i64> {
        self.body.degree_range(self.vars).map(|r| r.0)
    }

    /// `1/s`, provided the degree-0 part of `s` is a nonzero rational.
    pub fn geometric_inverse(&self) -> Result<Series> {
        let (head, tail): (Poly, Poly) = (
            self.body.retain(|m| series_degree(m, self.vars) == 0),
            self.body.retain(|m| series_degree(m, self.vars) > 0),
        );
        let a0 = head.as_constant().filter(|c| !c.is_zero()).ok_or(Error::NonUnitConstantTerm)?;
        let inv0 = Rational::one() / &a0;
        let cap = self.cap as usize;
        // slices by series degree: b_d = -(1/a_0) Σ_{j=1..d} a_j b_{d-j}
        let mut a = alloc::vec![Poly::zero(); cap + 1];
        for (m, c) in tail.terms() {
            let d = series_degree(m, self.vars) as usize;
            if d <= cap {
                a[d] = &a[d] + &Poly::term(m.clone(), c.clone());
            }
        }
        let mut b: alloc::vec::Vec<Poly> = alloc::vec![Poly::constant(inv0.clone())];
        for d in 1..=cap {
            let acc = crate::ring::poly::sum((1..=d).filter(|&j| !a[j].is_zero()).map(|j| &a[j] * &b[d - j]));
            b.push(acc.scale(&-inv0.clone()));
        }
        Ok(Series::wrap(crate::ring::poly::sum(b), self.vars, self.cap))
    }
}

/// `a * b` with every product term above `cap` in `vars` skipped.
pub fn mul_truncated(a: &Poly, b: &Poly, vars: Families, cap: u32) -> Poly {
    let cap = cap as i64;
    let da: alloc::vec::Vec<i64> = a.terms().iter().map(|t| series_degree(&t.0, vars)).collect();
    let db: alloc::vec::Vec<i64> = b.terms().iter().map(|t| series_degree(&t.0, vars)).collect();
    let mut out = alloc::vec::Vec::new();
    for (i, (ma, ca)) in a.terms().iter().enumerate() {
        for (j, (mb, cb)) in b.terms().iter().enumerate() {
            if da[i] + db[j] <= cap {
                out.push((ma.mul(mb), ca * cb));
            }
        }
    }
    Poly::from_terms(out)
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg {})", self.body, self.cap + 1)
    }
}
