//! Integer partitions, skew-shape predicates and enumeration.
//!
//! Partitions are ordered gradedly: first by size, then by reverse
//! lexicographic order, so `(3) < (2,1) < (1,1,1)` within size 3.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::IqwError;

mod coeffs;
pub use coeffs::{
    b_hl, b_macdonald, d_whit, eta, kappa, psi_macdonald, psibar_macdonald, skew_stats, SkewStats,
};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, IqwError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(IqwError::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn from_slice(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("invalid partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (zero based), zero past the length.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    pub fn conjugate(&self) -> Self {
        let mut c = Vec::with_capacity(self.first());
        for j in 0..self.first() {
            c.push(self.0.iter().filter(|&&p| p > j).count());
        }
        Partition(c)
    }

    /// Number of parts equal to `i >= 1`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// Componentwise maximum.
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((0..n).map(|i| self.get(i).max(other.get(i))).collect())
    }

    /// Componentwise minimum.
    pub fn intersection(&self, other: &Partition) -> Partition {
        let n = self.len().min(other.len());
        Partition((0..n).map(|i| self.get(i).min(other.get(i))).collect())
    }

    /// Dominance order `self >= other`, for partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.get(i);
            b += other.get(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `sum (i-1) lambda_i`
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Parts as a length-`n` exponent vector, padded with zeros.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// Sorts an exponent vector into a partition.
    pub fn from_exponents(e: &[usize]) -> Self {
        let mut v: Vec<usize> = e.iter().copied().filter(|&x| x > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Adds one box in row `i` (zero based) if the result is a partition.
    pub fn add_box(&self, i: usize) -> Option<Partition> {
        if i > self.len() || (i > 0 && self.get(i - 1) == self.get(i)) {
            return None;
        }
        let mut v = self.0.clone();
        if i == self.len() {
            v.push(1);
        } else {
            v[i] += 1;
        }
        Some(Partition(v))
    }

    /// Arm and leg of the box in row `i`, column `j` (zero based).
    pub fn arm_leg(&self, i: usize, j: usize) -> (usize, usize) {
        let arm = self.get(i) - j - 1;
        let leg = self.0.iter().filter(|&&p| p > j).count() - i - 1;
        (arm, leg)
    }

    /// Cells `(row, column)`, zero based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = IqwError;
    fn from_str(s: &str) -> Result<Self, IqwError> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<usize>, _> =
            s.split(',').map(|x| x.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|_| IqwError::Parse(format!("bad partition {s:?}")))?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `mu ≺ lambda`: `lambda/mu` is a horizontal strip.
pub fn interlaces(mu: &Partition, lambda: &Partition) -> bool {
    if mu.len() > lambda.len() || lambda.len() > mu.len() + 1 {
        return false;
    }
    (0..lambda.len()).all(|i| lambda.get(i) >= mu.get(i) && mu.get(i) >= lambda.get(i + 1))
}

/// `lambda/mu` is a vertical strip.
pub fn is_vertical_strip(mu: &Partition, lambda: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| lambda.get(i) - mu.get(i) <= 1)
}

/// `lambda/mu` has at most one box in each row and each column.
pub fn is_rook_strip(mu: &Partition, lambda: &Partition) -> bool {
    interlaces(mu, lambda) && is_vertical_strip(mu, lambda)
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// Partitions of size at most `n`, graded order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Partitions with at most `rows` parts, each at most `cols`, graded order.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if cur.len() == rows {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(rows, p, cur, out);
            cur.pop();
        }
    }
    rec(rows, cols, &mut cur, &mut out);
    out.sort();
    out
}

/// All `kappa` with `lower ⊆ kappa ⊆ upper`, graded order.
pub fn interval(lower: &Partition, upper: &Partition) -> Vec<Partition> {
    if !upper.contains(lower) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        i: usize,
        lo: &Partition,
        hi: &Partition,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == hi.len() {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        let max = if i == 0 {
            hi.get(0)
        } else {
            hi.get(i).min(cur[i - 1])
        };
        for p in lo.get(i)..=max {
            cur.push(p);
            rec(i + 1, lo, hi, cur, out);
            cur.pop();
        }
    }
    rec(0, lower, upper, &mut cur, &mut out);
    out.sort();
    out
}

/// Horizontal strips `lambda ⊇ nu` with `|lambda/nu| <= max_add`, graded order.
pub fn strip_successors(nu: &Partition, max_add: usize) -> Vec<Partition> {
    strips_bounded(nu, max_add, None)
}

/// Horizontal strips over `nu` inside `bound` (if given), graded order.
pub fn strips_bounded(nu: &Partition, max_add: usize, bound: Option<&Partition>) -> Vec<Partition> {
    let n = nu.len() + 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        n: usize,
        nu: &Partition,
        budget: usize,
        bound: Option<&Partition>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == n {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        let lo = nu.get(i);
        let mut hi = if i == 0 {
            lo + budget
        } else {
            nu.get(i - 1).min(lo + budget)
        };
        if let Some(b) = bound {
            hi = hi.min(b.get(i));
        }
        if hi < lo {
            return;
        }
        for p in lo..=hi {
            cur.push(p);
            rec(i + 1, n, nu, budget - (p - lo), bound, cur, out);
            cur.pop();
        }
    }
    if let Some(b) = bound {
        if !b.contains(nu) {
            return out;
        }
    }
    rec(0, n, nu, max_add, bound, &mut cur, &mut out);
    out.sort();
    out
}

/// Horizontal strips `mu ≺ lambda` below `lambda`, graded order.
pub fn strip_predecessors(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(i: usize, lam: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lam.len() {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        for p in lam.get(i + 1)..=lam.get(i) {
            cur.push(p);
            rec(i + 1, lam, cur, out);
            cur.pop();
        }
    }
    rec(0, lambda, &mut cur, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn order_and_enumeration() {
        let v = partitions_of(3);
        assert_eq!(v, vec![p("3"), p("2,1"), p("1,1,1")]);
        let mut w = v.clone();
        w.sort();
        assert_eq!(v, w);
        assert_eq!(partitions_of(10).len(), 42);
        assert_eq!(strip_successors(&p(""), 2), vec![p(""), p("1"), p("2")]);
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(
            interval(&p("1"), &p("2,1")),
            vec![p("1"), p("2"), p("1,1"), p("2,1")]
        );
    }

    #[test]
    fn predicates() {
        assert!(interlaces(&p("2,1"), &p("3,1,1")));
        assert!(!interlaces(&p("1,1"), &p("2,2")));
        assert!(is_vertical_strip(&p("1"), &p("2,1")));
        assert!(is_rook_strip(&p("1"), &p("2,1")));
        assert!(!is_rook_strip(&p(""), &p("2")));
        assert_eq!(p("0"), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    }

    fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0..=max, 0..=max).prop_map(|v| Partition::from_exponents(&v))
    }

    proptest! {
        #[test]
        fn conjugation_is_involution(l in arb_partition(6)) {
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(l.conjugate().size(), l.size());
        }

        #[test]
        fn text_round_trip(l in arb_partition(6)) {
            let back: Partition = l.to_string().parse().unwrap();
            prop_assert_eq!(back, l);
        }

        #[test]
        fn strips_are_strips(l in arb_partition(4), g in 0usize..4) {
            for s in strip_successors(&l, g) {
                prop_assert!(interlaces(&l, &s));
                prop_assert!(s.size() - l.size() <= g);
            }
            for s in strip_predecessors(&l) {
                prop_assert!(interlaces(&s, &l));
            }
        }
    }
}
