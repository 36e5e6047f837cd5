//! Partitions and signatures (weakly decreasing integer tuples).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

fn describe(parts: &[i64]) -> String {
    let body: Vec<String> = parts.iter().map(|p| format!("{p}")).collect();
    format!("({})", body.join(","))
}

/// A partition with trailing zeros removed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: &[i64]) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p < 0) {
            return Err(Error::InvalidWeight(describe(parts)));
        }
        let mut parts = parts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// `λ_i` with 1-based `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> i64 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<i64> {
        (1..=n.max(self.len())).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition { parts: (1..=first).map(|k| self.parts.iter().filter(|&&p| p >= k).count() as i64).collect() }
    }

    /// `self ⊆ other` as Young diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        (1..=self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// Frobenius coordinates `(α | β)`: `α_i = λ_i - i`, `β_i = λ'_i - i`.
    pub fn frobenius(&self) -> (Vec<i64>, Vec<i64>) {
        let conj = self.conjugate();
        let d = (1..=self.len()).take_while(|&i| self.part(i) >= i as i64).count();
        ((1..=d).map(|i| self.part(i) - i as i64).collect(), (1..=d).map(|i| conj.part(i) - i as i64).collect())
    }

    /// The partition with Frobenius coordinates `(α | β)`.
    pub fn from_frobenius(alpha: &[i64], beta: &[i64]) -> Result<Partition> {
        let strict = |v: &[i64]| v.windows(2).all(|w| w[0] > w[1]) && v.iter().all(|&a| a >= 0);
        if alpha.len() != beta.len() || !strict(alpha) || !strict(beta) {
            return Err(Error::InvalidWeight(format!("({:?} | {:?})", alpha, beta)));
        }
        let d = alpha.len();
        let rows = if d == 0 { 0 } else { d + beta[0] as usize };
        let mut parts = Vec::with_capacity(rows);
        for i in 1..=rows {
            let p = if i <= d {
                alpha[i - 1] + i as i64
            } else {
                // below the diagonal square: count the columns j <= d reaching row i
                (1..=d).filter(|&j| beta[j - 1] + j as i64 >= i as i64).count() as i64
            };
            parts.push(p);
        }
        Partition::new(&parts)
    }

    /// All partitions of `weight` with at most `max_len` parts, in reverse
    /// lexicographic order.
    pub fn of_weight(weight: i64, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(weight, weight, max_len, &mut cur, &mut out);
        out
    }

    /// All partitions of weight at most `max_weight` and length at most
    /// `max_len`, by weight and then reverse lexicographically.
    pub fn up_to_weight(max_weight: i64, max_len: usize) -> Vec<Partition> {
        (0..=max_weight).flat_map(|w| Partition::of_weight(w, max_len)).collect()
    }

    /// All partitions inside the `rows × cols` rectangle, by weight.
    pub fn in_box(rows: usize, cols: i64) -> Vec<Partition> {
        Partition::up_to_weight(rows as i64 * cols, rows).into_iter().filter(|p| p.part(1) <= cols).collect()
    }

    /// All partitions contained in `outer`, by weight.
    pub fn contained_in(outer: &Partition) -> Vec<Partition> {
        Partition::up_to_weight(outer.weight(), outer.len()).into_iter().filter(|p| p.is_contained_in(outer)).collect()
    }
}

fn fill(left: i64, max_part: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=left.min(max_part)).rev() {
        cur.push(p);
        fill(left - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&describe(&self.parts))
    }
}

/// A weakly decreasing integer tuple of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    parts: Vec<i64>,
}

impl Signature {
    pub fn new(parts: &[i64]) -> Result<Signature> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(describe(parts)));
        }
        Ok(Signature { parts: parts.to_vec() })
    }

    pub fn from_partition(p: &Partition, n: usize) -> Result<Signature> {
        if p.len() > n {
            return Err(Error::LengthExceedsN { len: p.len(), n });
        }
        Ok(Signature { parts: p.padded(n) })
    }

    /// The signature `(μ_1, …, μ_p, -ν_q, …, -ν_1)`.
    pub fn from_split(mu: &Partition, nu: &Partition, p: usize, q: usize) -> Result<Signature> {
        if mu.len() > p || nu.len() > q {
            return Err(Error::SplitMismatch { p, q });
        }
        let mut parts = mu.padded(p);
        parts.truncate(p);
        let nu = nu.padded(q);
        parts.extend(nu[..q].iter().rev().map(|&v| -v));
        Ok(Signature { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_partition(&self) -> bool {
        self.parts.last().is_none_or(|&p| p >= 0)
    }

    pub fn to_partition(&self) -> Option<Partition> {
        self.is_partition().then(|| Partition::new(&self.parts).expect("checked"))
    }

    /// Adds `k` to every part.
    pub fn shift(&self, k: i64) -> Signature {
        Signature { parts: self.parts.iter().map(|p| p + k).collect() }
    }

    /// The canonical split: `q` is the number of strictly negative parts.
    pub fn split(&self) -> (Partition, Partition) {
        let q = self.parts.iter().filter(|&&p| p < 0).count();
        self.split_at(self.len() - q, q).expect("canonical split always exists")
    }

    /// Split `λ = (μ, ν)` with `ℓ(μ) ≤ p`, `ℓ(ν) ≤ q`, `p + q = n`.
    pub fn split_at(&self, p: usize, q: usize) -> Result<(Partition, Partition)> {
        let n = self.len();
        if p + q != n || self.parts[..p].iter().any(|&x| x < 0) || self.parts[p..].iter().any(|&x| x > 0) {
            return Err(Error::SplitMismatch { p, q });
        }
        let mu = Partition::new(&self.parts[..p])?;
        let nu: Vec<i64> = self.parts[p..].iter().rev().map(|&x| -x).collect();
        Ok((mu, Partition::new(&nu)?))
    }

    /// Every `q` for which a split exists.
    pub fn valid_q(&self) -> Vec<usize> {
        let n = self.len();
        (0..=n).filter(|&q| self.split_at(n - q, q).is_ok()).collect()
    }

    /// All signatures of length `n` with parts in `[lo, hi]`, lexicographically descending.
    pub fn in_range(n: usize, lo: i64, hi: i64) -> Vec<Signature> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        sig_fill(n, lo, hi, &mut cur, &mut out);
        out
    }
}

fn sig_fill(n: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Signature>) {
    if cur.len() == n {
        out.push(Signature { parts: cur.clone() });
        return;
    }
    for p in (lo..=hi).rev() {
        cur.push(p);
        sig_fill(n, lo, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&describe(&self.parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn normalises_and_validates() {
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert!(Partition::new(&[1, 2]).is_err());
        assert!(Partition::new(&[1, -1]).is_err());
        assert_eq!(p(&[]).weight(), 0);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        for q in Partition::up_to_weight(7, 7) {
            assert_eq!(q.conjugate().conjugate(), q);
        }
    }

    #[test]
    fn enumeration_counts() {
        // p(0..=6) = 1, 1, 2, 3, 5, 7, 11
        assert_eq!(Partition::up_to_weight(6, 6).len(), 30);
        assert_eq!(Partition::of_weight(4, 4), vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        assert_eq!(Partition::of_weight(4, 2).len(), 3);
        // C(4, 2) partitions in a 2x2 box
        assert_eq!(Partition::in_box(2, 2).len(), 6);
        assert_eq!(Partition::contained_in(&p(&[3, 2, 1])).len(), 14);
    }

    #[test]
    fn frobenius_round_trip() {
        assert_eq!(p(&[3, 1]).frobenius(), (vec![2], vec![1]));
        assert_eq!(p(&[2, 2]).frobenius(), (vec![1, 0], vec![1, 0]));
        for q in Partition::up_to_weight(8, 8) {
            let (a, b) = q.frobenius();
            assert_eq!(Partition::from_frobenius(&a, &b).unwrap(), q);
        }
    }

    #[test]
    fn signature_splits() {
        let s = Signature::new(&[2, 0, -1, -3]).unwrap();
        let (mu, nu) = s.split();
        assert_eq!((mu.clone(), nu.clone()), (p(&[2]), p(&[3, 1])));
        assert_eq!(Signature::from_split(&mu, &nu, 2, 2).unwrap(), s);
        assert_eq!(s.valid_q(), vec![2, 3]);
        assert!(Signature::new(&[0, 1]).is_err());
        assert_eq!(Signature::in_range(2, -2, 2).len(), 15);
    }
}
