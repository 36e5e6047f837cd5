//! Square matrices over a commutative ring and their determinants.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::poly::Poly;
use crate::error::{Error, Result};

/// The operations the determinant and matrix routines need.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for Poly {
    fn zero() -> Poly {
        Poly::zero()
    }
    fn one() -> Poly {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Poly) -> Poly {
        self + other
    }
    fn sub(&self, other: &Poly) -> Poly {
        self - other
    }
    fn mul(&self, other: &Poly) -> Poly {
        self * other
    }
    fn neg(&self) -> Poly {
        -self
    }
}

pub type Matrix<R> = Vec<Vec<R>>;

pub fn check_square<R>(m: &[Vec<R>]) -> Result<()> {
    for (row, r) in m.iter().enumerate() {
        if r.len() != m.len() {
            return Err(Error::NonSquare { rows: m.len(), row, len: r.len() });
        }
    }
    Ok(())
}

/// Laplace expansion along rows, memoised on the set of columns used so far.
/// Division free, so it works over any commutative ring.
pub fn det_cofactor<R: Ring>(m: &[Vec<R>]) -> Result<R> {
    check_square(m)?;
    let n = m.len();
    if n == 0 {
        return Ok(R::one());
    }
    assert!(n < 32, "cofactor expansion is exponential in the size");
    // minors[S] = det of rows 0..|S| restricted to the columns in S
    let mut minors: BTreeMap<u32, R> = BTreeMap::new();
    minors.insert(0, R::one());
    for entries in m {
        let mut next: BTreeMap<u32, R> = BTreeMap::new();
        for (&set, minor) in &minors {
            if minor.is_zero() {
                continue;
            }
            for (col, entry) in entries.iter().enumerate() {
                if set & (1 << col) != 0 || entry.is_zero() {
                    continue;
                }
                // sign from the number of chosen columns to the right of `col`
                let above = (set >> col).count_ones();
                let term = minor.mul(entry);
                let slot = next.entry(set | (1 << col)).or_insert_with(R::zero);
                *slot = if above % 2 == 0 { slot.add(&term) } else { slot.sub(&term) };
            }
        }
        minors = next;
    }
    Ok(minors.remove(&((1u32 << n) - 1)).unwrap_or_else(R::zero))
}

/// Fraction-free Gaussian elimination with row pivoting.
pub fn det_bareiss(m: &[Vec<Poly>]) -> Result<Poly> {
    check_square(m)?;
    let n = m.len();
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut a: Matrix<Poly> = m.to_vec();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].len()) else {
                return Ok(Poly::zero());
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Determinant, by cofactor expansion up to size 8 and Bareiss beyond.
pub fn det(m: &[Vec<Poly>]) -> Result<Poly> {
    if m.len() <= 8 {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

/// Product of `v_i - v_j` over `i < j`.
pub fn vandermonde(vars: &[Poly]) -> Poly {
    let mut acc = Poly::one();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            acc = &acc * &(&vars[i] - &vars[j]);
        }
    }
    acc
}

/// Divides by `prod_{i<j} (v_i - v_j)`, one factor at a time.
pub fn divide_by_vandermonde(num: &Poly, vars: &[Poly]) -> Result<Poly> {
    let mut q = num.clone();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            q = q.exact_div(&(&vars[i] - &vars[j]))?;
        }
    }
    Ok(q)
}

pub fn mat_mul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Matrix<R> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = R::zero();
                    for (k, a_ik) in row.iter().enumerate().take(inner) {
                        if !a_ik.is_zero() && !b[k][j].is_zero() {
                            acc = acc.add(&a_ik.mul(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn identity<R: Ring>(n: usize) -> Matrix<R> {
    (0..n).map(|i| (0..n).map(|j| if i == j { R::one() } else { R::zero() }).collect()).collect()
}

pub fn transpose<R: Clone>(m: &[Vec<R>]) -> Matrix<R> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// The submatrix on the given rows and columns.
pub fn minor_matrix<R: Clone>(m: &[Vec<R>], rows: &[usize], cols: &[usize]) -> Matrix<R> {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect()
}
