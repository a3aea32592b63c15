use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::field::{Field, Ring};

/// Univariate polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<K> {
    c: Vec<K>,
}

impl<K: Ring> Poly<K> {
    pub fn from_coeffs(mut c: Vec<K>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn constant(a: K) -> Self {
        Self::from_coeffs(vec![a])
    }

    /// `a * x^k`
    pub fn monomial(a: K, k: usize) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        let mut c = vec![K::zero(); k + 1];
        c[k] = a;
        Poly { c }
    }

    pub fn x() -> Self {
        Self::monomial(K::one(), 1)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.c
    }

    pub fn coeff(&self, k: usize) -> K {
        self.c.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|a| !a.is_zero())
    }

    pub fn lead(&self) -> K {
        self.c.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn scale(&self, a: &K) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.c.iter().map(|x| x.clone() * a.clone()).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![K::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for a in self.c.iter().rev() {
            acc = acc * x.clone() + a.clone();
        }
        acc
    }

    /// Evaluation in an algebra over the coefficients.
    pub fn eval_in<R: Ring>(&self, x: &R, embed: impl Fn(&K) -> R) -> R {
        let mut acc = R::zero();
        for a in self.c.iter().rev() {
            acc = acc * x.clone() + embed(a);
        }
        acc
    }

    pub fn map<L: Ring>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::from_coeffs(self.c.iter().map(f).collect())
    }

    /// Product with all terms of degree above `max` dropped.
    pub fn mul_trunc(&self, other: &Self, max: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let n = (self.c.len() + other.c.len() - 1).min(max + 1);
        let mut c = vec![K::zero(); n];
        for (i, a) in self.c.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(c)
    }

    pub fn truncate(&self, max: usize) -> Self {
        Self::from_coeffs(self.c.iter().take(max + 1).cloned().collect())
    }
}

impl<K: Field> Poly<K> {
    /// Euclidean division.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        if self.c.len() < d.c.len() {
            return (Self::zero(), self.clone());
        }
        let inv = d.lead().inv();
        let mut r = self.c.clone();
        let mut q = vec![K::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let a = r[k + dd].clone();
            if a.is_zero() {
                continue;
            }
            let f = a * inv.clone();
            for (i, b) in d.c.iter().enumerate() {
                r[k + i] = r[k + i].clone() - f.clone() * b.clone();
            }
            q[k] = f;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lead().inv())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

impl<K: Ring> Zero for Poly<K> {
    fn zero() -> Self {
        Poly { c: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl<K: Ring> One for Poly<K> {
    fn one() -> Self {
        Poly { c: vec![K::one()] }
    }
}

fn add_slices<K: Ring>(a: &[K], b: &[K], neg: bool) -> Vec<K> {
    let n = a.len().max(b.len());
    let mut c = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned();
        let y = b.get(i).cloned();
        let v = match (x, y) {
            (Some(x), Some(y)) => {
                if neg {
                    x - y
                } else {
                    x + y
                }
            }
            (Some(x), None) => x,
            (None, Some(y)) => {
                if neg {
                    -y
                } else {
                    y
                }
            }
            (None, None) => K::zero(),
        };
        c.push(v);
    }
    c
}

impl<K: Ring> Add<&Poly<K>> for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, o: &Poly<K>) -> Poly<K> {
        Poly::from_coeffs(add_slices(&self.c, &o.c, false))
    }
}

impl<K: Ring> Sub<&Poly<K>> for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, o: &Poly<K>) -> Poly<K> {
        Poly::from_coeffs(add_slices(&self.c, &o.c, true))
    }
}

impl<K: Ring> Mul<&Poly<K>> for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, o: &Poly<K>) -> Poly<K> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        let mut c = vec![K::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(c)
    }
}

impl<K: Ring> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly {
            c: self.c.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<K: Ring> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<K: Ring> $tr<Poly<K>> for Poly<K> {
            type Output = Poly<K>;
            fn $m(self, o: Poly<K>) -> Poly<K> {
                (&self).$m(&o)
            }
        }
        impl<K: Ring> $tr<&Poly<K>> for Poly<K> {
            type Output = Poly<K>;
            fn $m(self, o: &Poly<K>) -> Poly<K> {
                (&self).$m(o)
            }
        }
        impl<K: Ring> $tr<Poly<K>> for &Poly<K> {
            type Output = Poly<K>;
            fn $m(self, o: Poly<K>) -> Poly<K> {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<K: Ring> AddAssign<&Poly<K>> for Poly<K> {
    fn add_assign(&mut self, o: &Poly<K>) {
        *self = &*self + o;
    }
}

impl<K: Ring> SubAssign<&Poly<K>> for Poly<K> {
    fn sub_assign(&mut self, o: &Poly<K>) {
        *self = &*self - o;
    }
}

impl<K: Ring> Ring for Poly<K> {
    fn from_i64(n: i64) -> Self {
        Poly::constant(K::from_i64(n))
    }
}
