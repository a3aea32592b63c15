use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::field::{parse_rational, BigRat, Field, Ring};
use super::poly::Poly;
use crate::error::IqwError;

/// Univariate rational function in canonical form: coprime numerator and
/// denominator, denominator scaled by [`Field::canonical_scale`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<K> {
    num: Poly<K>,
    den: Poly<K>,
}

/// Rational function in one formal parameter over the rationals.
pub type RatQ = RatFunc<BigRat>;

/// Rational function in a second parameter `t` over `RatQ`.
pub type RatQT = RatFunc<RatQ>;

fn is_unit_poly<K: Ring>(p: &Poly<K>) -> bool {
    p.coeffs().len() == 1 && p.coeffs()[0].is_one()
}

impl<K: Field> RatFunc<K> {
    pub fn new(num: Poly<K>, den: Poly<K>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = den.coeffs()[0].inv();
            return Self::finish(num.scale(&inv), Poly::one());
        }
        let g = num.gcd(&den);
        if g.is_constant() {
            Self::finish(num, den)
        } else {
            Self::finish(num.exact_div(&g), den.exact_div(&g))
        }
    }

    fn finish(num: Poly<K>, den: Poly<K>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if is_unit_poly(&den) {
            return RatFunc { num, den };
        }
        let s = K::canonical_scale(&den);
        if s.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.scale(&s),
                den: den.scale(&s),
            }
        }
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(a: K) -> Self {
        Self::from_poly(Poly::constant(a))
    }

    /// The indeterminate.
    pub fn var() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        is_unit_poly(&self.den)
    }

    pub fn as_constant(&self) -> Option<K> {
        if self.is_polynomial() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Value at a point; `None` at a pole.
    pub fn eval(&self, x: &K) -> Option<K> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Value in an extension field; `None` at a pole.
    pub fn eval_in<L: Field>(&self, x: &L, embed: impl Fn(&K) -> L) -> Option<L> {
        let d = self.den.eval_in(x, &embed);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_in(x, &embed) / d)
    }
}

impl<K: Field> Zero for RatFunc<K> {
    fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<K: Field> One for RatFunc<K> {
    fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
}

impl<K: Field> Add<&RatFunc<K>> for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn add(self, o: &RatFunc<K>) -> RatFunc<K> {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let a1 = is_unit_poly(&self.den);
        let b1 = is_unit_poly(&o.den);
        if a1 && b1 {
            return RatFunc::from_poly(&self.num + &o.num);
        }
        if a1 {
            return RatFunc::finish(&(&self.num * &o.den) + &o.num, o.den.clone());
        }
        if b1 {
            return RatFunc::finish(&self.num + &(&o.num * &self.den), self.den.clone());
        }
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        if g.is_constant() {
            let n = &(&self.num * &o.den) + &(&o.num * &self.den);
            return RatFunc::finish(n, &self.den * &o.den);
        }
        let d1 = self.den.exact_div(&g);
        let d2 = o.den.exact_div(&g);
        let n = &(&self.num * &d2) + &(&o.num * &d1);
        RatFunc::new(n, &d1 * &o.den)
    }
}

impl<K: Field> Neg for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn neg(self) -> RatFunc<K> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<K: Field> Neg for RatFunc<K> {
    type Output = RatFunc<K>;
    fn neg(self) -> RatFunc<K> {
        -&self
    }
}

impl<K: Field> Sub<&RatFunc<K>> for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn sub(self, o: &RatFunc<K>) -> RatFunc<K> {
        self + &(-o)
    }
}

impl<K: Field> Mul<&RatFunc<K>> for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn mul(self, o: &RatFunc<K>) -> RatFunc<K> {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        let a1 = is_unit_poly(&self.den);
        let b1 = is_unit_poly(&o.den);
        if a1 && b1 {
            return RatFunc::from_poly(&self.num * &o.num);
        }
        let (mut n1, mut d2) = (self.num.clone(), o.den.clone());
        if !b1 {
            let g = n1.gcd(&d2);
            if !g.is_constant() {
                n1 = n1.exact_div(&g);
                d2 = d2.exact_div(&g);
            }
        }
        let (mut n2, mut d1) = (o.num.clone(), self.den.clone());
        if !a1 {
            let g = n2.gcd(&d1);
            if !g.is_constant() {
                n2 = n2.exact_div(&g);
                d1 = d1.exact_div(&g);
            }
        }
        let den = &d1 * &d2;
        if den.is_constant() {
            let inv = den.coeffs()[0].inv();
            return RatFunc::finish((&n1 * &n2).scale(&inv), Poly::one());
        }
        RatFunc::finish(&n1 * &n2, den)
    }
}

impl<K: Field> Div<&RatFunc<K>> for &RatFunc<K> {
    type Output = RatFunc<K>;
    fn div(self, o: &RatFunc<K>) -> RatFunc<K> {
        assert!(!o.is_zero(), "division by zero rational function");
        let inv = RatFunc::new(o.den.clone(), o.num.clone());
        self * &inv
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<K: Field> $tr<RatFunc<K>> for RatFunc<K> {
            type Output = RatFunc<K>;
            fn $m(self, o: RatFunc<K>) -> RatFunc<K> {
                (&self).$m(&o)
            }
        }
        impl<K: Field> $tr<&RatFunc<K>> for RatFunc<K> {
            type Output = RatFunc<K>;
            fn $m(self, o: &RatFunc<K>) -> RatFunc<K> {
                (&self).$m(o)
            }
        }
        impl<K: Field> $tr<RatFunc<K>> for &RatFunc<K> {
            type Output = RatFunc<K>;
            fn $m(self, o: RatFunc<K>) -> RatFunc<K> {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl<K: Field> Ring for RatFunc<K> {
    fn from_i64(n: i64) -> Self {
        Self::constant(K::from_i64(n))
    }
}

impl<K: Field> Field for RatFunc<K> {
    fn from_rational(r: &BigRat) -> Self {
        Self::constant(K::from_rational(r))
    }
}

impl RatQ {
    /// The formal parameter `q`.
    pub fn q() -> Self {
        Self::var()
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_i64(n)
    }

    pub fn from_rat(r: BigRat) -> Self {
        Self::constant(r)
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        let f = |p: &Poly<BigRat>| p.map(f64::from_rational).eval(&q);
        f(&self.num) / f(&self.den)
    }
}

impl RatQT {
    /// The second parameter `t`.
    pub fn t() -> Self {
        Self::var()
    }

    /// The first parameter `q` as a constant.
    pub fn q() -> Self {
        Self::constant(RatQ::q())
    }

    pub fn from_ratq(a: RatQ) -> Self {
        Self::constant(a)
    }

    /// Substitutes a value for `t`; `None` at a pole.
    pub fn specialize_t(&self, t: &RatQ) -> Option<RatQ> {
        self.eval(t)
    }

    /// Sets `q = 0`; the result is returned as a function of `t` written in
    /// the single parameter of [`RatQ`]. `None` if the limit is a pole.
    pub fn specialize_q_zero(&self) -> Option<RatQ> {
        // Clear q-denominators on numerator and denominator together.
        let mut l = Poly::<BigRat>::one();
        for p in [&self.num, &self.den] {
            for c in p.coeffs() {
                if !c.is_zero() {
                    let g = l.gcd(c.den());
                    l = (&l * c.den()).exact_div(&g);
                }
            }
        }
        let clear = |p: &Poly<RatQ>| -> Vec<Poly<BigRat>> {
            p.coeffs()
                .iter()
                .map(|c| (c.num() * &l).exact_div(c.den()))
                .collect()
        };
        let n = clear(&self.num);
        let d = clear(&self.den);
        let v = n
            .iter()
            .chain(d.iter())
            .filter_map(|p| p.valuation())
            .min()
            .unwrap_or(0);
        let at0 = |cs: &[Poly<BigRat>]| -> Poly<BigRat> {
            Poly::from_coeffs(cs.iter().map(|p| p.coeff(v)).collect())
        };
        let num = at0(&n);
        let den = at0(&d);
        if den.is_zero() {
            return None;
        }
        Some(RatQ::new(num, den))
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_params(&self) -> RatQT {
        let conv = |p: &Poly<RatQ>| -> RatQT {
            let mut acc = RatQT::zero();
            let mut qk = RatQT::one();
            for c in p.coeffs() {
                let a = RatQT::from_poly(c.num().map(|r| RatQ::from_rat(r.clone())));
                let b = RatQT::from_poly(c.den().map(|r| RatQ::from_rat(r.clone())));
                acc = &acc + &(&(&a / &b) * &qk);
                qk = &qk * &RatQT::q();
            }
            acc
        };
        &conv(&self.num) / &conv(&self.den)
    }
}

/// Formatting of polynomial coefficients in the canonical text form.
pub trait Symbolic: Field {
    const VAR: &'static str;
    /// Sign and magnitude text; `None` magnitude means the coefficient is one.
    fn split_sign(&self) -> (bool, Option<String>);
}

impl Symbolic for BigRat {
    const VAR: &'static str = "q";
    fn split_sign(&self) -> (bool, Option<String>) {
        let neg = self.is_negative();
        let a = self.abs();
        if a.is_one() {
            (neg, None)
        } else {
            (neg, Some(a.to_string()))
        }
    }
}

impl Symbolic for RatQ {
    const VAR: &'static str = "t";
    fn split_sign(&self) -> (bool, Option<String>) {
        if let Some(c) = self.as_constant() {
            return c.split_sign();
        }
        (false, Some(format!("({self})")))
    }
}

pub fn format_poly<K: Symbolic>(p: &Poly<K>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = c.split_sign();
        let body = match (k, mag) {
            (0, None) => "1".to_string(),
            (0, Some(m)) => m,
            (1, None) => K::VAR.to_string(),
            (1, Some(m)) => format!("{m}*{}", K::VAR),
            (_, None) => format!("{}^{k}", K::VAR),
            (_, Some(m)) => format!("{m}*{}^{k}", K::VAR),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

impl<K: Symbolic> fmt::Display for RatFunc<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = format_poly(&self.num);
        if self.is_polynomial() {
            return write!(f, "{n}");
        }
        let wrap = |s: String, p: &Poly<K>| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(
            f,
            "{} / {}",
            wrap(n, &self.num),
            wrap(format_poly(&self.den), &self.den)
        )
    }
}

fn parse_poly_q(s: &str) -> Result<Poly<BigRat>, IqwError> {
    let bad = || IqwError::Parse(format!("bad polynomial in q: {s:?}"));
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .unwrap_or(&t)
        .to_string();
    if t.is_empty() {
        return Err(bad());
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in t.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if ch == '-' && i == 0 {
            neg = true;
        } else if ch != '+' {
            cur.push(ch);
        }
    }
    terms.push((neg, cur));
    let mut acc = Poly::<BigRat>::zero();
    for (neg, body) in terms {
        let (coef, power) = match body.split_once('q') {
            None => (parse_rational(&body).ok_or_else(bad)?, 0usize),
            Some((c, rest)) => {
                let c = c.strip_suffix('*').unwrap_or(c);
                let c = if c.is_empty() {
                    BigRat::one()
                } else {
                    parse_rational(c).ok_or_else(bad)?
                };
                let k = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|r| r.parse().ok())
                        .ok_or_else(bad)?
                };
                (c, k)
            }
        };
        let coef = if neg { -coef } else { coef };
        acc = &acc + &Poly::monomial(coef, power);
    }
    Ok(acc)
}

impl FromStr for RatQ {
    type Err = IqwError;
    fn from_str(s: &str) -> Result<Self, IqwError> {
        match s.split_once(" / ") {
            Some((a, b)) => {
                let d = parse_poly_q(b)?;
                if d.is_zero() {
                    return Err(IqwError::Parse("zero denominator".into()));
                }
                Ok(RatQ::new(parse_poly_q(a)?, d))
            }
            None => Ok(RatQ::from_poly(parse_poly_q(s)?)),
        }
    }
}
