use std::collections::BTreeMap;

use super::multipoly::MultiPoly;
use crate::partitions::Partition;
use crate::scalar::Ring;

/// Symmetric polynomial in `n` variables, stored by monomial symmetric coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct SymPoly<K> {
    n: usize,
    coeffs: BTreeMap<Partition, K>,
}

impl<K: Ring> SymPoly<K> {
    pub fn zero(n: usize) -> Self {
        SymPoly {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// Drops zero coefficients and partitions longer than `n`.
    pub fn from_coeffs(n: usize, coeffs: BTreeMap<Partition, K>) -> Self {
        SymPoly {
            n,
            coeffs: coeffs
                .into_iter()
                .filter(|(k, v)| k.len() <= n && !v.is_zero())
                .collect(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, K> {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> BTreeMap<Partition, K> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: &Partition) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn add_term(&mut self, k: Partition, c: K) {
        if c.is_zero() || k.len() > self.n {
            return;
        }
        let v = match self.coeffs.remove(&k) {
            Some(v) => v + c,
            None => c,
        };
        if !v.is_zero() {
            self.coeffs.insert(k, v);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.coeffs {
            r.add_term(k.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.coeffs {
            r.add_term(k.clone(), -c.clone());
        }
        r
    }

    /// `self - a * o`
    pub fn sub_scaled(&mut self, a: &K, o: &Self) {
        for (k, c) in &o.coeffs {
            self.add_term(k.clone(), -(a.clone() * c.clone()));
        }
    }

    pub fn scale(&self, a: &K) -> Self {
        let mut r = Self::zero(self.n);
        for (k, c) in &self.coeffs {
            r.add_term(k.clone(), c.clone() * a.clone());
        }
        r
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|k| k.size()).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|k| k.size()).max()
    }

    fn max_part(&self) -> usize {
        self.coeffs.keys().map(|k| k.first()).max().unwrap_or(0)
    }

    pub fn homogeneous_component(&self, d: usize) -> Self {
        SymPoly {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.size() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncate(&self, max_deg: usize) -> Self {
        SymPoly {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.size() <= max_deg)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product, optionally truncated at total degree `max_deg`.
    pub fn mul(&self, o: &Self, max_deg: Option<usize>) -> Self {
        assert_eq!(self.n, o.n);
        let mut r = Self::zero(self.n);
        let (Some(la), Some(lb)) = (self.min_degree(), o.min_degree()) else {
            return r;
        };
        let hi = self.max_degree().unwrap() + o.max_degree().unwrap();
        let hi = max_deg.map_or(hi, |m| m.min(hi));
        if la + lb > hi {
            return r;
        }
        let cap = self.max_part() + o.max_part();
        for kappa in bounded_partitions(self.n, cap, la + lb, hi) {
            let c = product_coeff(&self.coeffs, &o.coeffs, kappa.parts());
            r.add_term(kappa, c);
        }
        r
    }

    /// All monomials of the orbit sums.
    pub fn to_multipoly(&self) -> MultiPoly<K> {
        let mut p = MultiPoly::zero(self.n);
        for (k, c) in &self.coeffs {
            let e: Vec<u16> = k.padded(self.n).iter().map(|&x| x as u16).collect();
            for perm in distinct_permutations(&e) {
                p.add_term(perm, c.clone());
            }
        }
        p
    }

    pub fn eval(&self, x: &[K]) -> K {
        self.to_multipoly().eval(x)
    }
}

fn product_coeff<K: Ring>(
    a: &BTreeMap<Partition, K>,
    b: &BTreeMap<Partition, K>,
    kappa: &[usize],
) -> K {
    let mut acc = K::zero();
    let mut cur = vec![0usize; kappa.len()];
    fn rec<K: Ring>(
        i: usize,
        kappa: &[usize],
        cur: &mut Vec<usize>,
        a: &BTreeMap<Partition, K>,
        b: &BTreeMap<Partition, K>,
        acc: &mut K,
    ) {
        if i == kappa.len() {
            let pa = Partition::from_exponents(cur);
            let Some(ca) = a.get(&pa) else { return };
            let rest: Vec<usize> = kappa.iter().zip(cur.iter()).map(|(k, c)| k - c).collect();
            if let Some(cb) = b.get(&Partition::from_exponents(&rest)) {
                *acc = acc.clone() + ca.clone() * cb.clone();
            }
            return;
        }
        for v in 0..=kappa[i] {
            cur[i] = v;
            rec(i + 1, kappa, cur, a, b, acc);
        }
    }
    rec(0, kappa, &mut cur, a, b, &mut acc);
    acc
}

/// Partitions with at most `rows` parts, parts at most `cap`, size in `lo..=hi`.
pub fn bounded_partitions(rows: usize, cap: usize, lo: usize, hi: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        rows: usize,
        max: usize,
        lo: usize,
        rem: usize,
        size: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if size >= lo {
            out.push(Partition::new(cur.clone()).unwrap());
        }
        if cur.len() == rows {
            return;
        }
        for p in 1..=max.min(rem) {
            cur.push(p);
            rec(rows, p, lo, rem - p, size + p, cur, out);
            cur.pop();
        }
    }
    rec(rows, cap, lo, hi, 0, &mut cur, &mut out);
    out.sort();
    out
}

/// Distinct permutations of a multiset, lexicographic.
pub fn distinct_permutations(e: &[u16]) -> Vec<Vec<u16>> {
    let mut v = e.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    loop {
        let n = v.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, BigRat};

    #[test]
    fn product_matches_expanded() {
        let mut a = SymPoly::<BigRat>::zero(3);
        a.add_term("1".parse().unwrap(), rat(1, 1));
        a.add_term("".parse().unwrap(), rat(2, 1));
        let mut b = SymPoly::<BigRat>::zero(3);
        b.add_term("1,1".parse().unwrap(), rat(3, 1));
        b.add_term("2".parse().unwrap(), rat(-1, 1));
        let prod = a.mul(&b, None);
        let direct = a.to_multipoly().mul(&b.to_multipoly());
        assert_eq!(prod.to_multipoly(), direct);
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
    }
}
