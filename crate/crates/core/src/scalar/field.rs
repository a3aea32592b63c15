use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;

/// Arbitrary precision rational number.
pub type BigRat = BigRational;

/// Commutative ring with unit.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    fn pow(&self, k: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Field: a ring with division by nonzero elements.
pub trait Field: Ring + Div<Output = Self> {
    fn from_rational(r: &BigRat) -> Self;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Scalar `c` such that `c * p` is the chosen representative of `p` up to units.
    fn canonical_scale(p: &Poly<Self>) -> Self {
        p.lead().inv()
    }

    /// Best effort conversion to a float, used for diagnostics and numeric comparison.
    fn approx(&self) -> Option<f64> {
        None
    }
}

impl Ring for BigRat {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for BigRat {
    fn from_rational(r: &BigRat) -> Self {
        r.clone()
    }

    // Integer coefficients, gcd one, positive leading coefficient.
    fn canonical_scale(p: &Poly<Self>) -> Self {
        let mut l = BigInt::one();
        for c in p.coeffs() {
            if !c.is_zero() {
                l = l.lcm(c.denom());
            }
        }
        let mut g = BigInt::zero();
        for c in p.coeffs() {
            if !c.is_zero() {
                let v = c.numer() * (&l / c.denom());
                g = g.gcd(&v);
            }
        }
        let mut s = BigRational::new(l, g);
        if p.lead().is_negative() {
            s = -s;
        }
        s
    }

    fn approx(&self) -> Option<f64> {
        self.to_f64()
    }
}

impl Ring for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn pow(&self, k: usize) -> Self {
        self.powi(k as i32)
    }
}

impl Field for f64 {
    fn from_rational(r: &BigRat) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }

    fn approx(&self) -> Option<f64> {
        Some(*self)
    }
}

/// Rational number from numerator and denominator.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> Option<BigRat> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().ok()?;
        let b: BigInt = b.trim().parse().ok()?;
        if b.is_zero() {
            return None;
        }
        Some(BigRational::new(a, b))
    } else {
        let a: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(a))
    }
}
