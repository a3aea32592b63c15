//! Families of (skew) symmetric polynomials defined by one-variable weights and
//! branching over interlacing chains.

mod branching;

use std::fmt;
use std::str::FromStr;

use crate::error::IqwError;
use crate::partitions::{
    b_hl, eta, interlaces, kappa, psi_macdonald, psibar_macdonald, skew_stats, Partition,
};
use crate::polyspace::inv_one_plus_x_pow;
use crate::scalar::{qfact, qpoch, Field, Poly, RatQ, RatQT};

pub use branching::{eval_skew, expand_skew, in_vars, lift, Transfer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// Inhomogeneous q-Whittaker.
    F,
    /// Dual inhomogeneous q-Whittaker.
    Ftilde,
    /// q-Whittaker.
    W,
    /// Hall-Littlewood `Q`.
    HallLittlewoodQ,
    /// Inhomogeneous Hall-Littlewood.
    InhomHL,
    /// Dual inhomogeneous Hall-Littlewood.
    DualInhomHL,
    MacdonaldP,
    MacdonaldQ,
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::F,
        FamilyId::Ftilde,
        FamilyId::W,
        FamilyId::HallLittlewoodQ,
        FamilyId::InhomHL,
        FamilyId::DualInhomHL,
        FamilyId::MacdonaldP,
        FamilyId::MacdonaldQ,
    ];

    /// Setting the last variable to zero drops it.
    pub fn is_stable(self) -> bool {
        self != FamilyId::Ftilde
    }

    pub fn is_homogeneous(self) -> bool {
        matches!(
            self,
            FamilyId::W | FamilyId::HallLittlewoodQ | FamilyId::MacdonaldP | FamilyId::MacdonaldQ
        )
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyId::F => "F",
            FamilyId::Ftilde => "Ftilde",
            FamilyId::W => "W",
            FamilyId::HallLittlewoodQ => "Q",
            FamilyId::InhomHL => "j",
            FamilyId::DualInhomHL => "J",
            FamilyId::MacdonaldP => "MacdP",
            FamilyId::MacdonaldQ => "MacdQ",
        };
        f.write_str(s)
    }
}

impl FromStr for FamilyId {
    type Err = IqwError;
    fn from_str(s: &str) -> Result<Self, IqwError> {
        Ok(match s {
            "F" => FamilyId::F,
            "Ftilde" => FamilyId::Ftilde,
            "W" => FamilyId::W,
            "Q" | "HLQ" => FamilyId::HallLittlewoodQ,
            "j" => FamilyId::InhomHL,
            "J" => FamilyId::DualInhomHL,
            "MacdP" => FamilyId::MacdonaldP,
            "MacdQ" => FamilyId::MacdonaldQ,
            _ => return Err(IqwError::Parse(format!("unknown family {s:?}"))),
        })
    }
}

/// Values of the parameters `q` and `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<K> {
    pub q: K,
    pub t: K,
}

impl<K: Field> Params<K> {
    pub fn new(q: K, t: K) -> Self {
        Params { q, t }
    }

    /// Both parameters equal to `q`.
    pub fn single(q: K) -> Self {
        Params { t: q.clone(), q }
    }
}

impl Params<RatQ> {
    /// One formal parameter serving as both `q` and `t`.
    pub fn formal() -> Self {
        Params::single(RatQ::q())
    }
}

impl Params<RatQT> {
    pub fn formal_qt() -> Self {
        Params::new(RatQT::q(), RatQT::t())
    }
}

/// One-variable weight `num(x) / (1 + x)^den_power`.
#[derive(Clone, Debug, PartialEq)]
pub struct UniWeight<K> {
    pub num: Poly<K>,
    pub den_power: usize,
}

impl<K: Field> UniWeight<K> {
    pub fn zero() -> Self {
        UniWeight {
            num: Poly::from_coeffs(vec![]),
            den_power: 0,
        }
    }

    pub fn poly(num: Poly<K>) -> Self {
        UniWeight { num, den_power: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.num.coeffs().is_empty()
    }

    /// `None` at the pole `x = -1`.
    pub fn eval(&self, x: &K) -> Option<K> {
        let n = self.num.eval(x);
        if self.den_power == 0 {
            return Some(n);
        }
        let d = (K::one() + x.clone()).pow(self.den_power);
        if d.is_zero() {
            return None;
        }
        Some(n / d)
    }

    /// Taylor coefficients at zero up to `x^max`.
    pub fn series(&self, max: usize) -> Vec<K> {
        let p = if self.den_power == 0 {
            self.num.truncate(max)
        } else {
            self.num
                .mul_trunc(&inv_one_plus_x_pow(self.den_power, max), max)
        };
        let mut c = p.into_coeffs();
        c.resize(max + 1, K::zero());
        c
    }

    /// Numerator degree, or `None` for the zero weight.
    pub fn degree(&self) -> Option<usize> {
        self.num.degree()
    }
}

/// `prod_{i=1}^{k} (x - q^{i-1})`
fn falling<K: Field>(q: &K, k: usize) -> Poly<K> {
    let mut p = Poly::constant(K::one());
    let mut qi = K::one();
    for _ in 0..k {
        p = &p * &Poly::from_coeffs(vec![-qi.clone(), K::one()]);
        qi = qi * q.clone();
    }
    p
}

/// q-binomial product shared by `F` and `W`.
fn whittaker_coeff<K: Field>(lambda: &Partition, mu: &Partition, q: &K) -> K {
    let mut c = K::one();
    for r in 0..lambda.len() {
        let (l, l1, m) = (lambda.get(r), lambda.get(r + 1), mu.get(r));
        c = c * qfact(q, l - l1) / (qfact(q, l - m) * qfact(q, m - l1));
    }
    c
}

/// The one-variable weight of `family` on `lambda/mu`.
pub fn one_var<K: Field>(
    family: FamilyId,
    lambda: &Partition,
    mu: &Partition,
    p: &Params<K>,
) -> UniWeight<K> {
    if !interlaces(mu, lambda) {
        return UniWeight::zero();
    }
    let d = lambda.size() - mu.size();
    let xd = |c: K| Poly::monomial(c, d);
    let (q, t) = (&p.q, &p.t);
    match family {
        FamilyId::F => {
            let mut num = xd(whittaker_coeff(lambda, mu, q));
            let x = Poly::<K>::x();
            let qc = Poly::constant(q.clone());
            for r in 0..lambda.len() {
                num = &num * &qpoch(&x, &qc, mu.get(r) - lambda.get(r + 1));
            }
            UniWeight::poly(num)
        }
        FamilyId::Ftilde => {
            let mut num = Poly::constant(eta(lambda, mu, q));
            for r in 0..lambda.len() {
                num = &num * &falling(q, lambda.get(r) - mu.get(r));
            }
            UniWeight::poly(num)
        }
        FamilyId::W => UniWeight::poly(xd(whittaker_coeff(lambda, mu, q))),
        FamilyId::HallLittlewoodQ => UniWeight::poly(xd(kappa(lambda, mu, t))),
        FamilyId::InhomHL => {
            let s = skew_stats(lambda, mu);
            let mut num = Poly::monomial(kappa(lambda, mu, t), s.runs);
            for i in s.f_set {
                num = &num * &Poly::from_coeffs(vec![t.pow(lambda.multiplicity(i)), K::one()]);
            }
            UniWeight::poly(num)
        }
        FamilyId::DualInhomHL => {
            let s = skew_stats(lambda, mu);
            let mut num = xd(kappa(lambda, mu, t));
            for i in s.e_set {
                num = &num * &Poly::from_coeffs(vec![K::one(), t.pow(lambda.multiplicity(i))]);
            }
            UniWeight {
                num,
                den_power: s.r_tilde + d,
            }
        }
        FamilyId::MacdonaldP => UniWeight::poly(xd(psi_macdonald(lambda, mu, q, t))),
        FamilyId::MacdonaldQ => UniWeight::poly(xd(psibar_macdonald(lambda, mu, q, t))),
    }
}

/// Supplies one-variable weights to the branching engine.
pub trait WeightSource<K>: Sync {
    fn weight(&self, family: FamilyId, lambda: &Partition, mu: &Partition) -> UniWeight<K>;
    fn params(&self) -> &Params<K>;
}

/// The weights of [`one_var`].
#[derive(Clone, Debug)]
pub struct Standard<K>(pub Params<K>);

impl<K: Field> WeightSource<K> for Standard<K> {
    fn weight(&self, family: FamilyId, lambda: &Partition, mu: &Partition) -> UniWeight<K> {
        one_var(family, lambda, mu, &self.0)
    }
    fn params(&self) -> &Params<K> {
        &self.0
    }
}

/// Hall-Littlewood norm `b_lambda(t)` under the given parameters.
pub fn b_hl_in<K: Field>(lambda: &Partition, p: &Params<K>) -> K {
    b_hl(lambda, &p.t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q() -> RatQ {
        RatQ::q()
    }

    fn px(c: Vec<RatQ>) -> Poly<RatQ> {
        Poly::from_coeffs(c)
    }

    #[test]
    fn worked_one_variable_weights() {
        let pr = Params::formal();
        let one = RatQ::one();
        let w = one_var(FamilyId::F, &p("1"), &p("1"), &pr);
        assert_eq!(w.num, px(vec![one.clone(), -one.clone()]));
        let w = one_var(FamilyId::Ftilde, &p("1"), &p(""), &pr);
        let c = &one / &(&one - &q());
        assert_eq!(w.num, px(vec![-c.clone(), c.clone()]));
        for k in 1..=4usize {
            let w = one_var(FamilyId::DualInhomHL, &Partition::row(k), &p(""), &pr);
            assert_eq!(w.den_power, k);
            assert_eq!(w.num, Poly::monomial(&one - &q(), k));
            let w = one_var(FamilyId::InhomHL, &Partition::row(k), &p(""), &pr);
            let mut want = Poly::monomial(&one - &q(), 1);
            for _ in 1..k {
                want = &want * &px(vec![one.clone(), one.clone()]);
            }
            assert_eq!(w.num, want);
        }
        assert_eq!(
            one_var(FamilyId::F, &p("2"), &p(""), &pr).num,
            Poly::monomial(one.clone(), 2)
        );
        // J_{(1)/(1)} = (1 + q x)/(1 + x)
        let w = one_var(FamilyId::DualInhomHL, &p("1"), &p("1"), &pr);
        assert_eq!(w.num, px(vec![one.clone(), q()]));
        assert_eq!(w.den_power, 1);
        assert!(one_var(FamilyId::F, &p("2,2"), &p(""), &pr).is_zero());
    }

    #[test]
    fn f_weight_degree_and_constant_term() {
        let pr = Params::formal();
        for l in crate::partitions::partitions_up_to(5) {
            for m in crate::partitions::strip_predecessors(&l) {
                let w = one_var(FamilyId::F, &l, &m, &pr);
                assert_eq!(w.degree(), Some(l.first()), "{l}/{m}");
                let c0 = w.num.coeff(0);
                assert_eq!(c0.is_zero(), l != m);
                if l == m {
                    assert!(c0.is_one());
                }
            }
        }
    }
}
