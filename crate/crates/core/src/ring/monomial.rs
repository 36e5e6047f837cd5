use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::var::{Families, Family, VarId};

/// A Laurent monomial: sorted `(variable, exponent)` pairs with no zero exponents.
///
/// Ordered graded-lexicographically: total degree first, then the exponent of the
/// earliest variable (in canonical variable order) where the two differ.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarId, i32)>,
    deg: i64,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: VarId, e: i32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial { exps: alloc::vec![(v, e)], deg: e as i64 }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, i32)>) -> Monomial {
        let mut exps: Vec<(VarId, i32)> = pairs.into_iter().collect();
        exps.sort_by_key(|p| p.0);
        let mut out: Vec<(VarId, i32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial::from_sorted(out)
    }

    fn from_sorted(exps: Vec<(VarId, i32)>) -> Monomial {
        let deg = exps.iter().map(|p| p.1 as i64).sum();
        Monomial { exps, deg }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn pairs(&self) -> &[(VarId, i32)] {
        &self.exps
    }

    pub fn exponent(&self, v: VarId) -> i32 {
        match self.exps.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    /// Total degree over every variable.
    pub fn degree(&self) -> i64 {
        self.deg
    }

    /// Total degree restricted to the given families.
    pub fn degree_in(&self, fams: Families) -> i64 {
        self.exps.iter().filter(|p| fams.contains(p.0.family())).map(|p| p.1 as i64).sum()
    }

    pub fn degree_in_family(&self, fam: Family) -> i64 {
        self.degree_in(Families::of(&[fam]))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { exps: out, deg: self.deg + other.deg }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect(), deg: -self.deg }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(), deg: self.deg * k as i64 }
    }

    /// `self / other` when every exponent of the quotient is nonnegative.
    pub fn divides_into(&self, num: &Monomial) -> Option<Monomial> {
        let q = num.mul(&self.inverse());
        q.exps.iter().all(|p| p.1 > 0).then_some(q)
    }

    /// Componentwise minimum with `other`, treating absent variables as exponent 0.
    pub fn gcd_laurent(&self, other: &Monomial) -> Monomial {
        let mut vars: Vec<VarId> = self.exps.iter().chain(other.exps.iter()).map(|p| p.0).collect();
        vars.sort();
        vars.dedup();
        Monomial::from_sorted(
            vars.into_iter()
                .map(|v| (v, self.exponent(v).min(other.exponent(v))))
                .filter(|p| p.1 != 0)
                .collect(),
        )
    }

    pub fn map_exps(&self, mut f: impl FnMut(VarId, i32) -> (VarId, i32)) -> Monomial {
        Monomial::from_pairs(self.exps.iter().map(|&(v, e)| f(v, e)))
    }

    /// Drops the given variables, returning the remainder and the removed part.
    pub fn split_off(&self, mut pred: impl FnMut(VarId) -> bool) -> (Monomial, Monomial) {
        let (taken, kept): (Vec<_>, Vec<_>) = self.exps.iter().partition(|p| pred(p.0));
        (Monomial::from_sorted(kept), Monomial::from_sorted(taken))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            let (a, b) = (&self.exps, &other.exps);
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(p), None) => return p.1.cmp(&0),
                    (None, Some(q)) => return 0.cmp(&q.1),
                    (Some(p), Some(q)) => match p.0.cmp(&q.0) {
                        Ordering::Less => return p.1.cmp(&0),
                        Ordering::Greater => return 0.cmp(&q.1),
                        Ordering::Equal => {
                            if p.1 != q.1 {
                                return p.1.cmp(&q.1);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: &[(VarId, i32)]) -> Monomial {
        Monomial::from_pairs(p.iter().copied())
    }

    #[test]
    fn graded_lex_order() {
        let x1 = VarId::x(1);
        let x2 = VarId::x(2);
        // degree dominates
        assert!(m(&[(x2, 1)]) < m(&[(x1, 1), (x2, 1)]));
        // earliest variable decides within a degree
        assert!(m(&[(x2, 2)]) < m(&[(x1, 1), (x2, 1)]));
        assert!(m(&[(x1, 1), (x2, 1)]) < m(&[(x1, 2)]));
        assert!(m(&[(x1, -1), (x2, 1)]) < m(&[]));
    }

    #[test]
    fn order_is_multiplicative() {
        let a = m(&[(VarId::x(1), 2), (VarId::c(0), 1)]);
        let b = m(&[(VarId::x(2), 3)]);
        let w = m(&[(VarId::x(1), -1), (VarId::c(3), 2)]);
        assert_eq!(a.cmp(&b), a.mul(&w).cmp(&b.mul(&w)));
    }

    #[test]
    fn mul_cancels() {
        let a = m(&[(VarId::x(1), 2), (VarId::y(1), -1)]);
        let b = m(&[(VarId::y(1), 1)]);
        assert_eq!(a.mul(&b), m(&[(VarId::x(1), 2)]));
        assert_eq!(a.mul(&a.inverse()), Monomial::one());
    }
}
