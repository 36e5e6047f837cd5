//! Generalised characters of types A, C, B and D as quotients of alternants,
//! the dual and double dual Schur functions, one-row characters and the
//! Gelfand–Tsetlin sum.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::{Partition, Signature};
use crate::ring::matrix::{det, det_cofactor, divide_by_vandermonde, Ring};
use crate::ring::monomial::Monomial;
use crate::ring::poly::{rat, x_degree, Poly, Rational};
use crate::ring::ratfn::RatFn;
use crate::ring::series::Series;
use crate::ring::var::{Families, Family, VarId};
use crate::sequences::{factorial_power_any, AdmissibleSequence, CSpec, DoubleDualSequence, DualSequence, SeqKind};

/// The four character families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupType {
    /// `GL(n)`: `s_λ`.
    A,
    /// `Sp(2n)`: `sp_λ`.
    C,
    /// `SO(2n+1)`: `so_λ`.
    B,
    /// `O(2n)`: `o_λ`.
    D,
}

impl GroupType {
    pub const ALL: [GroupType; 4] = [GroupType::A, GroupType::C, GroupType::B, GroupType::D];

    pub fn letter(self) -> &'static str {
        match self {
            GroupType::A => "a",
            GroupType::C => "c",
            GroupType::B => "b",
            GroupType::D => "d",
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for GroupType {
    type Err = Error;
    fn from_str(s: &str) -> Result<GroupType> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(GroupType::A),
            "c" => Ok(GroupType::C),
            "b" => Ok(GroupType::B),
            "d" => Ok(GroupType::D),
            _ => Err(Error::Unsupported(alloc::format!("unknown family {s:?}, expected a, c, b or d"))),
        }
    }
}

pub fn xv(i: u32) -> Poly {
    Poly::var(VarId::x(i))
}

pub fn xbarv(i: u32) -> Poly {
    Poly::var_pow(VarId::x(i), -1)
}

fn yv(i: u32) -> Poly {
    Poly::var(VarId::y(i))
}

fn ybarv(i: u32) -> Poly {
    Poly::var_pow(VarId::y(i), -1)
}

fn padded(lambda: &Partition, n: usize) -> Result<Vec<i64>> {
    if lambda.len() > n {
        return Err(Error::LengthExceedsN { len: lambda.len(), n });
    }
    Ok(lambda.padded(n))
}

/// The exponents `λ_j + n - j`, `j = 1..n`.
fn shifted(parts: &[i64]) -> Vec<i64> {
    let n = parts.len() as i64;
    parts.iter().enumerate().map(|(j, &p)| p + n - 1 - j as i64).collect()
}

/// `s_λ^F(x_{xs})` for a partition.
pub fn schur(f: &AdmissibleSequence, lambda: &Partition, xs: &[u32]) -> Result<Poly> {
    let ks = shifted(&padded(lambda, xs.len())?);
    let m: Vec<Vec<Poly>> =
        xs.iter().map(|&i| ks.iter().map(|&k| f.eval(k as usize, &xv(i))).collect::<Result<_>>()).collect::<Result<_>>()?;
    let vars: Vec<Poly> = xs.iter().map(|&i| xv(i)).collect();
    divide_by_vandermonde(&det(&m)?, &vars)
}

/// Pads a signature of length below `n` with zeros between its nonnegative and negative parts.
pub fn pad_signature(lambda: &Signature, n: usize) -> Result<Signature> {
    if lambda.len() > n {
        return Err(Error::LengthExceedsN { len: lambda.len(), n });
    }
    let (mu, nu) = lambda.split();
    Signature::from_split(&mu, &nu, n - nu.len(), nu.len())
}

/// `s_λ^F` for a signature, exactly. Negative parts are reduced to a partition
/// with `s_{λ+(1^n)}[x|c] = s_{(1^n)}[x|c] · s_λ[x|τc]`, which introduces the
/// denominators `x_i - c_{-l}`.
pub fn schur_signature(f: &AdmissibleSequence, lambda: &Signature, xs: &[u32]) -> Result<RatFn> {
    let lambda = pad_signature(lambda, xs.len())?;
    let k = -lambda.parts().last().copied().unwrap_or(0).min(0);
    if k == 0 {
        let p = lambda.to_partition().expect("nonnegative");
        return Ok(RatFn::from_poly(schur(f, &p, xs)?));
    }
    let lifted = lambda.shift(k).to_partition().expect("shifted to nonnegative");
    match f.kind() {
        SeqKind::Monomial => {
            let num = schur(f, &lifted, xs)?;
            let xprod = xs.iter().fold(Monomial::one(), |acc, &i| acc.mul(&Monomial::var(VarId::x(i), -(k as i32))));
            Ok(RatFn::from_poly(num.mul_term(&xprod, &Rational::one())))
        }
        SeqKind::Factorial(c) => {
            let num = schur(&AdmissibleSequence::factorial(c.tau(-k)), &lifted, xs)?;
            let factors = (1..=k).flat_map(|l| xs.iter().map(move |&i| xv(i) - c.lookup(-l)));
            Ok(RatFn::new(num, factors))
        }
        SeqKind::Custom { .. } => Err(Error::NegativePartsUnsupported),
    }
}

/// `s_λ^F` for a signature as a Laurent series in `x^{-1}`, keeping total
/// `x`-degree at least `floor`. Works for any sequence with a negative part.
pub fn schur_truncated(f: &AdmissibleSequence, lambda: &Signature, xs: &[u32], floor: i64) -> Result<Poly> {
    let lambda = pad_signature(lambda, xs.len())?;
    let n = xs.len() as i64;
    let ks = shifted(lambda.parts());
    let floor_num = floor + n * (n - 1) / 2;
    let top: i64 = ks.iter().sum();
    let mut m = Vec::with_capacity(xs.len());
    for &i in xs {
        let row = ks.iter().map(|&k| f.eval_any(k, VarId::x(i), floor_num - (top - k))).collect::<Result<Vec<_>>>()?;
        m.push(row);
    }
    let num = det(&m)?.retain(|mono| x_degree(mono) >= floor_num);
    let vars: Vec<Poly> = xs.iter().map(|&i| xv(i)).collect();
    Ok(divide_by_vandermonde(&num, &vars)?.retain(|mono| x_degree(mono) >= floor))
}

/// `sp_λ^F(x^{±1})`.
pub fn symplectic(f: &AdmissibleSequence, lambda: &Partition, xs: &[u32]) -> Result<Poly> {
    let ks = shifted(&padded(lambda, xs.len())?);
    let mut m = Vec::with_capacity(xs.len());
    for &i in xs {
        let (x, xb) = (xv(i), xbarv(i));
        let row: Vec<Poly> = ks
            .iter()
            .map(|&k| Ok(&x * &f.eval(k as usize, &x)? - &xb * &f.eval(k as usize, &xb)?))
            .collect::<Result<_>>()?;
        // each row is antisymmetric under x_i <-> 1/x_i
        let d = &x - &xb;
        m.push(row.iter().map(|e| e.exact_div(&d)).collect::<Result<_>>()?);
    }
    let zs: Vec<Poly> = xs.iter().map(|&i| xv(i) + xbarv(i)).collect();
    divide_by_vandermonde(&det(&m)?, &zs)
}

/// `so_λ^F(x^{±1})`, computed with `y_i = x_i^{1/2}`.
pub fn odd_orthogonal(f: &AdmissibleSequence, lambda: &Partition, xs: &[u32]) -> Result<Poly> {
    let ks = shifted(&padded(lambda, xs.len())?);
    let mut m = Vec::with_capacity(xs.len());
    for &i in xs {
        let (y, yb) = (yv(i), ybarv(i));
        let (y2, yb2) = (y.pow(2), yb.pow(2));
        let row: Vec<Poly> = ks
            .iter()
            .map(|&k| Ok(&y * &f.eval(k as usize, &y2)? - &yb * &f.eval(k as usize, &yb2)?))
            .collect::<Result<_>>()?;
        let d = &y - &yb;
        m.push(row.iter().map(|e| e.exact_div(&d)).collect::<Result<_>>()?);
    }
    let zs: Vec<Poly> = xs.iter().map(|&i| yv(i).pow(2) + ybarv(i).pow(2)).collect();
    let q = divide_by_vandermonde(&det(&m)?, &zs)?;
    halve_y_exponents(&q)
}

/// Rewrites `y_i^{2k}` as `x_i^k`.
pub fn halve_y_exponents(p: &Poly) -> Result<Poly> {
    let mut terms = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let mut pairs = Vec::with_capacity(m.pairs().len());
        for &(v, e) in m.pairs() {
            if v.family() == Family::Y {
                if e % 2 != 0 {
                    return Err(Error::OddHalfExponentResidue);
                }
                pairs.push((VarId::x(v.index().expect("indexed")), e / 2));
            } else {
                pairs.push((v, e));
            }
        }
        terms.push((Monomial::from_pairs(pairs), c.clone()));
    }
    Ok(Poly::from_terms(terms))
}

/// `det[f_{λ_j+n-j}(x_i) + f_{λ_j+n-j}(x̄_i)]`, the even orthogonal numerator without `η`.
pub fn even_orthogonal_alternant(f: &AdmissibleSequence, lambda: &Partition, xs: &[u32]) -> Result<Poly> {
    let ks = shifted(&padded(lambda, xs.len())?);
    let m: Vec<Vec<Poly>> = xs
        .iter()
        .map(|&i| ks.iter().map(|&k| Ok(f.eval(k as usize, &xv(i))? + f.eval(k as usize, &xbarv(i))?)).collect())
        .collect::<Result<_>>()?;
    det(&m)
}

/// `o_λ^F(x^{±1})`. The denominator `½ det[f_{n-j}(x_i) + f_{n-j}(x̄_i)]` equals
/// `V(x + x̄)` for every admissible `F`.
pub fn even_orthogonal(f: &AdmissibleSequence, lambda: &Partition, xs: &[u32]) -> Result<Poly> {
    let n = xs.len();
    let eta = if n > 0 && lambda.part(n) == 0 { rat(1, 2) } else { Rational::one() };
    let num = even_orthogonal_alternant(f, lambda, xs)?.scale(&eta);
    let zs: Vec<Poly> = xs.iter().map(|&i| xv(i) + xbarv(i)).collect();
    divide_by_vandermonde(&num, &zs)
}

/// The character of the given family.
pub fn character(ty: GroupType, f: &AdmissibleSequence, lambda: &Partition, xs: &[u32]) -> Result<Poly> {
    match ty {
        GroupType::A => schur(f, lambda, xs),
        GroupType::C => symplectic(f, lambda, xs),
        GroupType::B => odd_orthogonal(f, lambda, xs),
        GroupType::D => even_orthogonal(f, lambda, xs),
    }
}

/// `x_1, …, x_n` as variable indices.
pub fn first_vars(n: usize) -> Vec<u32> {
    (1..=n as u32).collect()
}

/// `ŝ_λ(u_{us})` to total `u`-degree `cap`. The dual sequence must reach
/// `max(λ_1 + n - 1, cap + n(n-1)/2)`.
pub fn dual_schur(fhat: &DualSequence, lambda: &Partition, us: &[u32], cap: u32) -> Result<Series> {
    let n = us.len();
    let ks = shifted(&padded(lambda, n)?);
    let vdeg = (n * n.saturating_sub(1) / 2) as u32;
    let needed = (cap + vdeg).max(ks.first().copied().unwrap_or(0) as u32);
    if fhat.cap() < needed {
        return Err(Error::CapTooSmall { cap: fhat.cap(), needed });
    }
    let fams = Families::of(&[Family::U]);
    let inner = cap + vdeg;
    let m: Vec<Vec<Poly>> = us
        .iter()
        .map(|&i| ks.iter().map(|&k| Ok(fhat.entry(k as usize, VarId::u(i))?.into_body())).collect())
        .collect::<Result<_>>()?;
    let num = det(&m)?.retain(|mono| mono.degree_in(fams) <= inner as i64);
    let vars: Vec<Poly> = us.iter().map(|&i| Poly::var(VarId::u(i))).collect();
    Series::truncate(&divide_by_vandermonde(&num, &vars)?, fams, cap)
}

/// `š_ν(v_{vs}) = det[f̌_{ν_j+q-j+1}(v_i)/v_i] / V(v)`.
pub fn double_dual_schur(fcheck: &DoubleDualSequence, nu: &Partition, vs: &[u32]) -> Result<Poly> {
    let q = vs.len();
    let ks = shifted(&padded(nu, q)?);
    let needed = ks.first().map_or(0, |&k| k + 1) as usize;
    if fcheck.cap() < needed {
        return Err(Error::CapTooSmall { cap: fcheck.cap() as u32, needed: needed as u32 });
    }
    let m: Vec<Vec<Poly>> = vs
        .iter()
        .map(|&i| ks.iter().map(|&k| fcheck.entry_over_v(k as usize + 1, &Poly::var(VarId::v(i)))).collect())
        .collect::<Result<_>>()?;
    let vars: Vec<Poly> = vs.iter().map(|&i| Poly::var(VarId::v(i))).collect();
    divide_by_vandermonde(&det(&m)?, &vars)
}

/// `h_k^F = s_{(k)}`; zero for `k < 0`.
pub fn complete(f: &AdmissibleSequence, k: i64, xs: &[u32]) -> Result<Poly> {
    if k < 0 {
        return Ok(Poly::zero());
    }
    schur(f, &Partition::new(&[k]).expect("one part"), xs)
}

/// `e_k^F = s_{(1^k)}`; zero for `k < 0` and `k > n`.
pub fn elementary(f: &AdmissibleSequence, k: i64, xs: &[u32]) -> Result<Poly> {
    if k < 0 || k as usize > xs.len() {
        return Ok(Poly::zero());
    }
    schur(f, &Partition::new(&alloc::vec![1; k as usize]).expect("column"), xs)
}

/// `e_j` of the alphabet `zs`, for `j = 0..=k`.
fn elementary_of(zs: &[Poly], k: usize) -> Vec<Poly> {
    let mut e = alloc::vec![Poly::zero(); k + 1];
    e[0] = Poly::one();
    for z in zs {
        for j in (1..=k).rev() {
            e[j] = &e[j] + &(&e[j - 1] * z);
        }
    }
    e
}

/// The character of the column `(1^k)` of the given family in the variables
/// `xs`, zero for `k < 0` or `k > n`.
///
/// Writing `f_m = Σ a_{m,i} x^i`, the alternant expands by Cauchy–Binet into
/// `Σ_j det A[(1^k) + δ, (1^j) + δ] · χ_{(1^j)}` with the classical column
/// characters `χ`, which are elementary functions of `x`, `x, x̄` or `x, x̄, 1`
/// (minus `e_{j-2}` for type C). For type D the `η` of `(1^k)` replaces that of
/// `(1^j)`.
pub fn one_column(ty: GroupType, f: &AdmissibleSequence, k: i64, xs: &[u32]) -> Result<Poly> {
    let n = xs.len();
    if k < 0 || k as usize > n {
        return Ok(Poly::zero());
    }
    let k = k as usize;
    let alphabet: Vec<Poly> = match ty {
        GroupType::A => xs.iter().map(|&i| xv(i)).collect(),
        GroupType::C | GroupType::D => doubled_vars(xs, false),
        GroupType::B => doubled_vars(xs, true),
    };
    let e = elementary_of(&alphabet, k);
    let classical = |j: usize| match ty {
        GroupType::C if j >= 2 => &e[j] - &e[j - 2],
        _ => e[j].clone(),
    };
    let column = |j: usize| -> Vec<usize> { (0..n).map(|r| n - 1 - r + usize::from(r < j)).collect() };
    let rows = column(k);
    let table: Vec<Vec<Poly>> = (0..=n).map(|m| f.coefficients(m)).collect::<Result<_>>()?;
    let entry = |m: usize, i: usize| table[m].get(i).cloned().unwrap_or_default();
    let eta = |j: usize| if n > 0 && j < n { rat(1, 2) } else { Rational::one() };
    let mut acc = Poly::zero();
    for j in 0..=k {
        let cols = column(j);
        let minor: Vec<Vec<Poly>> = rows.iter().map(|&m| cols.iter().map(|&i| entry(m, i)).collect()).collect();
        let mut coeff = det_cofactor(&minor)?;
        if coeff.is_zero() {
            continue;
        }
        if ty == GroupType::D {
            coeff = coeff.scale(&(eta(k) / eta(j)));
        }
        acc = &acc + &(&coeff * &classical(j));
    }
    Ok(acc)
}

/// The signature `(0, …, 0, -k) - (1^n)`.
pub fn g_signature(k: i64, n: usize) -> Signature {
    let mut parts = alloc::vec![-1; n];
    parts[n - 1] = -k - 1;
    Signature::new(&parts).expect("decreasing")
}

/// `g_k[x|c] = s_{(0,…,0,-k)-(1^n)}[x|c]` for `k ≥ 0`, zero for `k < 0`.
pub fn g_function(c: &CSpec, k: i64, xs: &[u32]) -> Result<RatFn> {
    if k < 0 || xs.is_empty() {
        return Ok(RatFn::from_poly(Poly::zero()));
    }
    schur_signature(&AdmissibleSequence::factorial(c.clone()), &g_signature(k, xs.len()), xs)
}

/// The factorial complete symmetric function `h_k[z_1, …, z_N | a]` at arbitrary
/// arguments, by `h_k(z_1..z_N) = h_k(z_1..z_{N-1}) + (z_N - a_{N+k-2}) h_{k-1}(z_1..z_N)`.
pub fn complete_factorial(k: i64, zs: &[Poly], a: &CSpec) -> Poly {
    if k < 0 {
        return Poly::zero();
    }
    let k = k as usize;
    let mut prev: Vec<Poly> = (0..=k).map(|j| if j == 0 { Poly::one() } else { Poly::zero() }).collect();
    for (idx, z) in zs.iter().enumerate() {
        let nn = idx as i64 + 1;
        let mut cur = Vec::with_capacity(k + 1);
        cur.push(Poly::one());
        for j in 1..=k {
            let step = z - &a.lookup(nn + j as i64 - 2);
            let v = &prev[j] + &(&step * &cur[j - 1]);
            cur.push(v);
        }
        prev = cur;
    }
    prev.pop().expect("nonempty")
}

/// `x_1, x̄_1, …, x_n, x̄_n`, optionally followed by the constant `1`.
pub fn doubled_vars(xs: &[u32], with_one: bool) -> Vec<Poly> {
    let mut out: Vec<Poly> = xs.iter().flat_map(|&i| [xv(i), xbarv(i)]).collect();
    if with_one {
        out.push(Poly::one());
    }
    out
}

/// How the Gelfand–Tsetlin sum reads the entry `G_{i-1,i}` outside the triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GtBoundary {
    /// `G_{i-1,i} = 0`.
    Zero,
    /// `G_{i-1,i} = G_{i,i}`, so the diagonal factor is trivial.
    Diagonal,
}

/// The factor at `(i, j)` is `[x_i | τ^{i - j + offset + G_{i-1,j}} c]^{G_{ij} - G_{i-1,j}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GtConvention {
    pub offset: i64,
    pub boundary: GtBoundary,
}

impl GtConvention {
    /// The convention that reproduces the bialternant.
    pub const LOCKED: GtConvention = GtConvention { offset: 0, boundary: GtBoundary::Zero };
    /// The shift `i - j + 1 + G_{i-1,j}` read literally.
    pub const LITERAL: GtConvention = GtConvention { offset: 1, boundary: GtBoundary::Zero };

    pub fn candidates() -> [GtConvention; 4] {
        [
            GtConvention::LOCKED,
            GtConvention::LITERAL,
            GtConvention { offset: 0, boundary: GtBoundary::Diagonal },
            GtConvention { offset: 1, boundary: GtBoundary::Diagonal },
        ]
    }
}

/// All Gelfand–Tsetlin patterns with the given top row, as lists of rows
/// `G_1, …, G_n` (row `i` has `i` entries).
pub fn gt_patterns(top: &Signature) -> Vec<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    let mut rows = alloc::vec![top.parts().to_vec()];
    gt_fill(&mut rows, &mut out);
    out
}

fn gt_fill(rows: &mut Vec<Vec<i64>>, out: &mut Vec<Vec<Vec<i64>>>) {
    let last = rows.last().expect("top row").clone();
    if last.len() <= 1 {
        let mut pattern = rows.clone();
        pattern.reverse();
        out.push(pattern);
        return;
    }
    // G_{i-1,j} ranges over [G_{i,j+1}, G_{i,j}]
    let mut below = Vec::with_capacity(last.len() - 1);
    gt_row(&last, &mut below, rows, out);
}

fn gt_row(above: &[i64], cur: &mut Vec<i64>, rows: &mut Vec<Vec<i64>>, out: &mut Vec<Vec<Vec<i64>>>) {
    let j = cur.len();
    if j == above.len() - 1 {
        rows.push(cur.clone());
        gt_fill(rows, out);
        rows.pop();
        return;
    }
    for g in above[j + 1]..=above[j] {
        cur.push(g);
        gt_row(above, cur, rows, out);
        cur.pop();
    }
}

/// `Σ_G ∏_{i,j} [x_i | τ^{…} c]^{G_{ij} - G_{i-1,j}}` over Gelfand–Tsetlin patterns with top row `λ`.
pub fn gt_character(lambda: &Signature, xs: &[u32], c: &CSpec, conv: GtConvention) -> Result<RatFn> {
    let lambda = pad_signature(lambda, xs.len())?;
    let mut total = RatFn::zero();
    for pattern in gt_patterns(&lambda) {
        let mut term = RatFn::one();
        for (i0, row) in pattern.iter().enumerate() {
            let i = i0 as i64 + 1;
            let x = xv(xs[i0]);
            for (j0, &g) in row.iter().enumerate() {
                let j = j0 as i64 + 1;
                let prev = if j0 < i0 {
                    pattern[i0 - 1][j0]
                } else {
                    match conv.boundary {
                        GtBoundary::Zero => 0,
                        GtBoundary::Diagonal => g,
                    }
                };
                let shift = i - j + conv.offset + prev;
                term = term.mul(&factorial_power_any(&x, &c.tau(shift), g - prev));
            }
        }
        total = total.add(&term);
    }
    Ok(total)
}

/// `λ̃ = (n - λ'_m, …, n - λ'_1)` for `λ ⊆ (m^n)`.
pub fn complement_conjugate(lambda: &Partition, n: usize, m: usize) -> Partition {
    let conj = lambda.conjugate();
    let parts: Vec<i64> = (1..=m).rev().map(|j| n as i64 - conj.part(j)).collect();
    Partition::new(&parts).expect("complement of a partition in a box")
}

/// Determinant over rational functions, used for blocks with `g` entries.
pub fn det_ratfn(m: &[Vec<RatFn>]) -> Result<RatFn> {
    det_cofactor(m)
}

/// Determinant of a matrix whose entries are Series bodies, truncated at `cap` in `fams`.
pub fn det_truncated(m: &[Vec<Poly>], fams: Families, cap: u32) -> Result<Poly> {
    Ok(det(m)?.retain(|mono| mono.degree_in(fams) <= cap as i64))
}

/// Sum of `RatFn`s.
pub fn ratfn_sum(parts: impl IntoIterator<Item = RatFn>) -> RatFn {
    parts.into_iter().fold(RatFn::zero(), |acc, r| acc.add(&r))
}
