use std::collections::HashMap;

use super::{FamilyId, UniWeight, WeightSource};
use crate::error::IqwError;
use crate::partitions::{interval, strips_bounded, Partition};
use crate::polyspace::{MultiPoly, RationalMulti, SymFunc, SymPoly};
use crate::scalar::{Field, Poly, Ring};

/// Transfer data for the chains `mu = nu^0 ≺ nu^1 ≺ ... ≺ nu^n = lambda`.
#[derive(Clone, Debug)]
pub struct Transfer<K> {
    pub family: FamilyId,
    pub states: Vec<Partition>,
    start: Option<usize>,
    end: Option<usize>,
    edges: Vec<Vec<(usize, UniWeight<K>)>>,
    series: Vec<Vec<Vec<K>>>,
    series_len: usize,
}

impl<K: Field> Transfer<K> {
    /// `series_len` bounds the Taylor expansion of rational weights.
    pub fn new(
        src: &dyn WeightSource<K>,
        family: FamilyId,
        lambda: &Partition,
        mu: &Partition,
        series_len: usize,
    ) -> Self {
        let states = interval(mu, lambda);
        let index: HashMap<Partition, usize> = states
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let mut edges = Vec::with_capacity(states.len());
        for s in &states {
            let mut out = Vec::new();
            for t in strips_bounded(s, lambda.size(), Some(lambda)) {
                let w = src.weight(family, &t, s);
                if !w.is_zero() {
                    out.push((index[&t], w));
                }
            }
            edges.push(out);
        }
        let mut tr = Transfer {
            family,
            start: index.get(mu).copied(),
            end: index.get(lambda).copied(),
            states,
            edges,
            series: Vec::new(),
            series_len: 0,
        };
        tr.set_series_len(series_len);
        tr
    }

    fn set_series_len(&mut self, len: usize) {
        self.series_len = len;
        self.series = self
            .edges
            .iter()
            .map(|es| {
                es.iter()
                    .map(|(_, w)| {
                        if w.den_power == 0 {
                            w.num.coeffs().to_vec()
                        } else {
                            w.series(len)
                        }
                    })
                    .collect()
            })
            .collect();
    }

    pub fn edges(&self) -> &[Vec<(usize, UniWeight<K>)>] {
        &self.edges
    }

    pub fn start(&self) -> Option<usize> {
        self.start
    }

    pub fn end(&self) -> Option<usize> {
        self.end
    }

    /// Largest exponent a single variable can carry.
    pub fn max_exponent(&self) -> usize {
        self.series
            .iter()
            .flatten()
            .map(|s| s.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    fn initial(&self) -> Vec<K> {
        let mut v = vec![K::zero(); self.states.len()];
        if let Some(s) = self.start {
            v[s] = K::one();
        }
        v
    }

    /// One variable with exponent `e`.
    pub fn step(&self, cur: &[K], e: usize) -> Vec<K> {
        let mut next = vec![K::zero(); cur.len()];
        for (from, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for ((to, _), s) in self.edges[from].iter().zip(&self.series[from]) {
                if let Some(a) = s.get(e) {
                    if !a.is_zero() {
                        next[*to] = next[*to].clone() + c.clone() * a.clone();
                    }
                }
            }
        }
        next
    }

    /// Coefficient of `x^e` in the `e.len()`-variable polynomial.
    pub fn coefficient(&self, e: &[usize]) -> K {
        let Some(end) = self.end else {
            return K::zero();
        };
        let mut v = self.initial();
        for &k in e {
            v = self.step(&v, k);
        }
        v[end].clone()
    }

    /// Value at a point, `None` at a pole.
    pub fn eval(&self, xs: &[K]) -> Option<K> {
        let Some(end) = self.end else {
            return Some(K::zero());
        };
        let mut v = self.initial();
        for x in xs {
            let ws: Vec<Vec<K>> = self
                .edges
                .iter()
                .map(|es| {
                    es.iter()
                        .map(|(_, w)| w.eval(x))
                        .collect::<Option<Vec<K>>>()
                })
                .collect::<Option<Vec<_>>>()?;
            let mut next = vec![K::zero(); v.len()];
            for (from, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for ((to, _), a) in self.edges[from].iter().zip(&ws[from]) {
                    next[*to] = next[*to].clone() + c.clone() * a.clone();
                }
            }
            v = next;
        }
        Some(v[end].clone())
    }

    /// Full expansion in `n` variables over the common denominator.
    pub fn expand(&self, n: usize) -> RationalMulti<K> {
        let Some(end) = self.end else {
            return RationalMulti::polynomial(MultiPoly::zero(n));
        };
        let p = self
            .edges
            .iter()
            .flatten()
            .map(|(_, w)| w.den_power)
            .max()
            .unwrap_or(0);
        let one_plus_x = Poly::from_coeffs(vec![K::one(), K::one()]);
        let nums: Vec<Vec<Poly<K>>> = self
            .edges
            .iter()
            .map(|es| {
                es.iter()
                    .map(|(_, w)| &w.num * &one_plus_x.pow(p - w.den_power))
                    .collect()
            })
            .collect();
        let mut v: Vec<MultiPoly<K>> = vec![MultiPoly::zero(n); self.states.len()];
        if let Some(s) = self.start {
            v[s] = MultiPoly::one(n);
        }
        for i in 0..n {
            let mut next: Vec<MultiPoly<K>> = vec![MultiPoly::zero(n); self.states.len()];
            for (from, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for ((to, _), w) in self.edges[from].iter().zip(&nums[from]) {
                    next[*to] = next[*to].add(&c.mul_univariate(i, w));
                }
            }
            v = next;
        }
        RationalMulti {
            num: v[end].clone(),
            den: vec![p; n],
        }
    }

    /// Monomial symmetric coordinates in `n` variables, total degree at most `max_deg`.
    pub fn sym_coeffs(&self, n: usize, max_deg: usize) -> SymPoly<K> {
        let mut out = SymPoly::zero(n);
        let Some(end) = self.end else { return out };
        let stable = self.family.is_stable();
        let max_e = self.max_exponent();
        let mut exps = Vec::new();
        #[allow(clippy::too_many_arguments)]
        fn rec<K: Field>(
            tr: &Transfer<K>,
            v: Vec<K>,
            n: usize,
            prev: usize,
            budget: usize,
            end: usize,
            stable: bool,
            exps: &mut Vec<usize>,
            out: &mut SymPoly<K>,
        ) {
            let val = if stable {
                v[end].clone()
            } else {
                let mut w = v.clone();
                for _ in exps.len()..n {
                    w = tr.step(&w, 0);
                }
                w[end].clone()
            };
            out.add_term(Partition::from_exponents(exps), val);
            if exps.len() == n {
                return;
            }
            for e in 1..=prev.min(budget) {
                let nv = tr.step(&v, e);
                if nv.iter().all(|c| c.is_zero()) {
                    continue;
                }
                exps.push(e);
                rec(tr, nv, n, e, budget - e, end, stable, exps, out);
                exps.pop();
            }
        }
        rec(
            self,
            self.initial(),
            n,
            max_e,
            max_deg,
            end,
            stable,
            &mut exps,
            &mut out,
        );
        out
    }
}

/// The polynomial (or rational function, for the dual inhomogeneous Hall-Littlewood family)
/// `f_{lambda/mu}(x_1, ..., x_n)`.
pub fn expand_skew<K: Field>(
    src: &dyn WeightSource<K>,
    family: FamilyId,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> RationalMulti<K> {
    Transfer::new(src, family, lambda, mu, 0).expand(n)
}

/// Value of `f_{lambda/mu}` at a point; pole error for the rational family at `x_i = -1`.
pub fn eval_skew<K: Field>(
    src: &dyn WeightSource<K>,
    family: FamilyId,
    lambda: &Partition,
    mu: &Partition,
    xs: &[K],
) -> Result<K, IqwError> {
    Transfer::new(src, family, lambda, mu, 0)
        .eval(xs)
        .ok_or_else(|| IqwError::Pole(format!("{family}_{{{lambda}/{mu}}} at {xs:?}")))
}

/// `f_{lambda/mu}` in `n` variables in monomial symmetric coordinates, total degree at most `max_deg`.
pub fn in_vars<K: Field>(
    src: &dyn WeightSource<K>,
    family: FamilyId,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    max_deg: usize,
) -> SymPoly<K> {
    Transfer::new(src, family, lambda, mu, max_deg).sym_coeffs(n, max_deg)
}

/// Symmetric function `f_{lambda/mu}` truncated at degree `max_deg`; stable families only.
pub fn lift<K: Field>(
    src: &dyn WeightSource<K>,
    family: FamilyId,
    lambda: &Partition,
    mu: &Partition,
    max_deg: usize,
) -> Result<SymFunc<K>, IqwError> {
    if !family.is_stable() {
        return Err(IqwError::InvalidArgument(format!(
            "{family} is not stable under x_n -> 0 and has no lift"
        )));
    }
    let p = in_vars(src, family, lambda, mu, max_deg.max(1), max_deg);
    Ok(SymFunc::from_sympoly(&p, max_deg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{Params, Standard};
    use crate::partitions::{partitions_up_to, strip_predecessors};
    use crate::polyspace::{Basis, SymFunc};
    use crate::scalar::{qfact, RatQ};
    use num_traits::One;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q() -> RatQ {
        RatQ::q()
    }

    fn src() -> Standard<RatQ> {
        Standard(Params::formal())
    }

    fn mono(c: RatQ, e: &[u16]) -> MultiPoly<RatQ> {
        MultiPoly::monomial(e.to_vec(), c)
    }

    #[test]
    fn f_two_row_example() {
        let one = RatQ::one();
        let f = expand_skew(&src(), FamilyId::F, &p("2"), &p(""), 2).num;
        let opq = &one + &q();
        let want = [
            mono(one.clone(), &[2, 0]),
            mono(opq.clone(), &[1, 1]),
            mono(one.clone(), &[0, 2]),
            mono(-opq.clone(), &[2, 1]),
            mono(-opq.clone(), &[1, 2]),
            mono(q(), &[2, 2]),
        ]
        .iter()
        .fold(MultiPoly::zero(2), |a, b| a.add(b));
        assert_eq!(f, want);
    }

    #[test]
    fn f_of_single_box_over_itself_is_product() {
        let f = expand_skew(&src(), FamilyId::F, &p("1"), &p("1"), 3).num;
        let mut want = MultiPoly::one(3);
        for i in 0..3 {
            want = want.mul(&MultiPoly::one(3).sub(&MultiPoly::var(3, i)));
        }
        assert_eq!(f, want);
    }

    #[test]
    fn ftilde_and_j_examples() {
        let one = RatQ::one();
        let ft = expand_skew(&src(), FamilyId::Ftilde, &p("2"), &p(""), 2)
            .num
            .scale(&qfact(&q(), 2));
        // (q;q)_2 Ftilde_2 = (x1-1)(x1-q) + (1+q)(x1-1)(x2-1) + (x2-1)(x2-q)
        let x1 = MultiPoly::<RatQ>::var(2, 0);
        let x2 = MultiPoly::<RatQ>::var(2, 1);
        let c = |a: RatQ| MultiPoly::constant(2, a);
        let want = x1
            .sub(&c(one.clone()))
            .mul(&x1.sub(&c(q())))
            .add(
                &x1.sub(&c(one.clone()))
                    .mul(&x2.sub(&c(one.clone())))
                    .scale(&(&one + &q())),
            )
            .add(&x2.sub(&c(one.clone())).mul(&x2.sub(&c(q()))));
        assert_eq!(ft, want);
        let j = expand_skew(&src(), FamilyId::InhomHL, &p("2"), &p(""), 2).num;
        let omq = &one - &q();
        let want = x1
            .mul(&x1.add(&c(one.clone())))
            .add(&x1.mul(&x2).scale(&omq))
            .add(&x2.mul(&x2.add(&c(one.clone()))))
            .scale(&omq);
        assert_eq!(j, want);
    }

    #[test]
    fn w_column_is_elementary() {
        for n in 0..=4 {
            let w = lift(&src(), FamilyId::W, &Partition::column(n), &p(""), 5).unwrap();
            let e = SymFunc::basis_element(Basis::Elementary, &Partition::row(n), 5)
                .to_basis(Basis::Monomial);
            assert_eq!(w, e);
        }
        assert!(lift(&src(), FamilyId::Ftilde, &p("1"), &p(""), 3).is_err());
    }

    #[test]
    fn sym_coeffs_match_expansion() {
        for fam in FamilyId::ALL {
            if fam == FamilyId::DualInhomHL
                || fam == FamilyId::MacdonaldP
                || fam == FamilyId::MacdonaldQ
            {
                continue;
            }
            for (l, m) in [("2,1", ""), ("2,1", "1"), ("3,1", "2"), ("2,2", "1")] {
                let (l, m) = (p(l), p(m));
                let tr = Transfer::new(&src(), fam, &l, &m, 0);
                let full = tr.expand(3).num;
                full.check_symmetric()
                    .unwrap_or_else(|e| panic!("{fam} {l}/{m}: {e}"));
                let sc = tr.sym_coeffs(3, 20);
                assert_eq!(sc.to_multipoly(), full, "{fam} {l}/{m}");
            }
        }
    }

    #[test]
    fn dual_hl_series_and_eval() {
        let tr = Transfer::new(&src(), FamilyId::DualInhomHL, &p("2,1"), &p("1"), 6);
        let rat = tr.expand(2);
        let ser = rat.series(6);
        let sc = tr.sym_coeffs(2, 6);
        assert_eq!(sc.to_multipoly(), ser);
        let x = [RatQ::from_int(2), RatQ::from_int(3)];
        let v = tr.eval(&x).unwrap();
        let num = rat.num.eval(&x);
        let den = &RatQ::from_int(3).pow(rat.den[0]) * &RatQ::from_int(4).pow(rat.den[1]);
        assert_eq!(v, &num / &den);
        assert!(tr.eval(&[-RatQ::one(), RatQ::one()]).is_none());
    }

    fn arb_shape() -> impl Strategy<Value = (Partition, Partition)> {
        (0usize..3, 0usize..3, 0usize..3).prop_flat_map(|(a, b, c)| {
            let l = Partition::from_exponents(&[a + b + c, b + c, c]);
            let preds = crate::partitions::interval(&Partition::empty(), &l);
            (Just(l), proptest::sample::select(preds))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn stable_families_drop_last_variable((l, m) in arb_shape()) {
            for fam in [FamilyId::F, FamilyId::W, FamilyId::InhomHL, FamilyId::HallLittlewoodQ] {
                let tr = Transfer::new(&src(), fam, &l, &m, 0);
                let a = tr.expand(3).num;
                let b = tr.expand(2).num;
                // set x3 = 0
                let mut r = MultiPoly::zero(2);
                for (e, c) in a.terms() {
                    if e[2] == 0 {
                        r.add_term(e[..2].to_vec(), c.clone());
                    }
                }
                prop_assert_eq!(r, b);
            }
        }
    }

    #[test]
    fn top_component_of_f_is_w() {
        for l in partitions_up_to(4) {
            for m in strip_predecessors(&l) {
                let n = 3;
                let f = Transfer::new(&src(), FamilyId::F, &l, &m, 0).expand(n).num;
                let w = Transfer::new(&src(), FamilyId::W, &l, &m, 0).expand(n).num;
                let d = l.size() - m.size();
                assert_eq!(f.homogeneous_component(d), w);
            }
        }
    }
}
