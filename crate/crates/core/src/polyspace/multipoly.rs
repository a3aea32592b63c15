use std::collections::BTreeMap;
use std::ops::Range;

use crate::error::IqwError;
use crate::partitions::Partition;
use crate::scalar::{Poly, Ring};

pub type Exponents = Vec<u16>;

/// Polynomial in a fixed number of variables, sparse.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<K> {
    n: usize,
    terms: BTreeMap<Exponents, K>,
}

impl<K: Ring> MultiPoly<K> {
    pub fn zero(n: usize) -> Self {
        MultiPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: K) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, K::one())
    }

    /// Variable `x_{i+1}`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        let mut p = Self::zero(n);
        p.add_term(e, K::one());
        p
    }

    pub fn monomial(exps: Exponents, c: K) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, K> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u16]) -> K {
        self.terms.get(e).cloned().unwrap_or_else(K::zero)
    }

    pub fn add_term(&mut self, e: Exponents, c: K) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), -c.clone());
        }
        r
    }

    pub fn scale(&self, a: &K) -> Self {
        if a.is_zero() {
            return Self::zero(self.n);
        }
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.clone() * a.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.mul_trunc(o, 0..0, usize::MAX)
    }

    /// Product keeping only terms whose degree in `vars` is at most `max`.
    pub fn mul_trunc(&self, o: &Self, vars: Range<usize>, max: usize) -> Self {
        assert_eq!(self.n, o.n);
        let deg_in = |e: &[u16]| -> usize { e[vars.clone()].iter().map(|&x| x as usize).sum() };
        let mut r = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            let d1 = deg_in(e1);
            if d1 > max {
                continue;
            }
            for (e2, c2) in &o.terms {
                if d1 + deg_in(e2) > max {
                    continue;
                }
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.clone() * c2.clone());
            }
        }
        r
    }

    /// Drops terms of degree above `max` in `vars`.
    pub fn truncate_in(&self, vars: Range<usize>, max: usize) -> Self {
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[vars.clone()].iter().map(|&x| x as usize).sum::<usize>() <= max)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by a univariate polynomial in variable `i`.
    pub fn mul_univariate(&self, i: usize, p: &Poly<K>) -> Self {
        let mut r = Self::zero(self.n);
        for (e, c) in &self.terms {
            for (k, a) in p.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let mut e2 = e.clone();
                e2[i] += k as u16;
                r.add_term(e2, c.clone() * a.clone());
            }
        }
        r
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .min()
    }

    pub fn homogeneous_component(&self, d: usize) -> Self {
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().map(|&x| x as usize).sum::<usize>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &[K]) -> K {
        assert_eq!(x.len(), self.n);
        let mut acc = K::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t = t * xi.pow(k as usize);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Embeds into `total` variables, this polynomial's variables starting at `offset`.
    pub fn embed(&self, total: usize, offset: usize) -> Self {
        assert!(offset + self.n <= total);
        let mut r = Self::zero(total);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; total];
            e2[offset..offset + self.n].copy_from_slice(e);
            r.terms.insert(e2, c.clone());
        }
        r
    }

    /// Applies `f` to each coefficient.
    pub fn map<L: Ring>(&self, f: impl Fn(&K) -> L) -> MultiPoly<L> {
        let mut r = MultiPoly::zero(self.n);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), f(c));
        }
        r
    }

    /// Checks invariance under adjacent transpositions; the error names a witness.
    pub fn check_symmetric(&self) -> Result<(), IqwError> {
        for i in 0..self.n.saturating_sub(1) {
            for (e, c) in &self.terms {
                let mut s = e.clone();
                s.swap(i, i + 1);
                if self.coeff(&s) != *c {
                    return Err(IqwError::NotSymmetric(format!(
                        "coefficient of {e:?} differs from its image under x{} <-> x{}",
                        i + 1,
                        i + 2
                    )));
                }
            }
        }
        Ok(())
    }

    /// Coefficients at sorted exponent vectors, the monomial symmetric coordinates.
    pub fn sym_coeffs(&self) -> BTreeMap<Partition, K> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                let v: Vec<usize> = e.iter().map(|&x| x as usize).collect();
                out.insert(Partition::from_exponents(&v), c.clone());
            }
        }
        out
    }
}

/// `num / prod_i (1 + x_i)^{den[i]}`
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMulti<K> {
    pub num: MultiPoly<K>,
    pub den: Vec<usize>,
}

impl<K: Ring> RationalMulti<K> {
    pub fn polynomial(num: MultiPoly<K>) -> Self {
        let n = num.n_vars();
        RationalMulti {
            num,
            den: vec![0; n],
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.iter().all(|&d| d == 0)
    }

    /// Power series expansion, truncated at total degree `max` in `vars`.
    pub fn series_in(&self, vars: Range<usize>, max: usize) -> MultiPoly<K> {
        let mut acc = self.num.truncate_in(vars.clone(), max);
        for (i, &d) in self.den.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let s = inv_one_plus_x_pow::<K>(d, max);
            let n = acc.n_vars();
            let mut f = MultiPoly::zero(n);
            for (k, a) in s.coeffs().iter().enumerate() {
                let mut e = vec![0; n];
                e[i] = k as u16;
                f.add_term(e, a.clone());
            }
            acc = acc.mul_trunc(&f, vars.clone(), max);
        }
        acc
    }

    pub fn series(&self, max: usize) -> MultiPoly<K> {
        self.series_in(0..self.num.n_vars(), max)
    }
}

/// Series of `(1 + x)^{-d}` up to `x^max`.
pub fn inv_one_plus_x_pow<K: Ring>(d: usize, max: usize) -> Poly<K> {
    // coefficient of x^k is (-1)^k C(d+k-1, k)
    let mut c = Vec::with_capacity(max + 1);
    let mut binom: i128 = 1;
    for k in 0..=max {
        if k > 0 {
            binom = binom * (d as i128 + k as i128 - 1) / k as i128;
        }
        let v = if k % 2 == 0 { binom } else { -binom };
        c.push(K::from_i64(v as i64));
    }
    Poly::from_coeffs(c)
}
