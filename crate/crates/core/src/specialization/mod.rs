//! Positive specializations: variable substitutions, their dual, the
//! Plancherel limit and unions of these, evaluated on power sums and on
//! skew `F` polynomials. Partition measures live in [`measure`].

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::IqwError;
use crate::families::{one_var, FamilyId, Params};
use crate::partitions::{interval, strip_predecessors, Partition};
use crate::polyspace::{alt_sign, Basis, SymFunc};
use crate::scalar::Field;

pub mod measure;

pub use measure::{
    littlewood_check, measure_table, normalization, orientation_experiment, LittlewoodReport,
    MeasureTable, OrientationReport, Sampler,
};

/// Default number of Taylor terms for the Plancherel exponential.
pub const PLANCHEREL_CUTOFF: usize = 32;

/// Parameters `(alphas, betas, gamma)` together with `q`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecDesc<K = f64> {
    pub alphas: Vec<K>,
    pub betas: Vec<K>,
    pub gamma: K,
    pub q: K,
}

/// One generator of a union.
#[derive(Clone, Debug, PartialEq)]
pub enum Generator<K> {
    Alpha(K),
    Beta(K),
    Plancherel(K),
}

/// A value together with an estimate of the neglected series tail.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecValue<K> {
    pub value: K,
    pub tail: f64,
}

impl<K: Field> SpecDesc<K> {
    pub fn new(alphas: Vec<K>, betas: Vec<K>, gamma: K, q: K) -> Self {
        SpecDesc {
            alphas,
            betas,
            gamma,
            q,
        }
    }

    pub fn alpha(a: K, q: K) -> Self {
        SpecDesc::new(vec![a], vec![], K::zero(), q)
    }

    pub fn beta(b: K, q: K) -> Self {
        SpecDesc::new(vec![], vec![b], K::zero(), q)
    }

    pub fn plancherel(gamma: K, q: K) -> Self {
        SpecDesc::new(vec![], vec![], gamma, q)
    }

    /// Generators in the order alphas, betas, Plancherel.
    pub fn generators(&self) -> Vec<Generator<K>> {
        let mut g: Vec<_> = self.alphas.iter().cloned().map(Generator::Alpha).collect();
        g.extend(self.betas.iter().cloned().map(Generator::Beta));
        if !self.gamma.is_zero() {
            g.push(Generator::Plancherel(self.gamma.clone()));
        }
        g
    }

    /// All parameters multiplied by `s`.
    pub fn rescaled(&self, s: &K) -> Self {
        let m = |v: &Vec<K>| v.iter().map(|a| a.clone() * s.clone()).collect();
        SpecDesc::new(
            m(&self.alphas),
            m(&self.betas),
            self.gamma.clone() * s.clone(),
            self.q.clone(),
        )
    }

    /// Image under `x -> -x`, which takes every parameter to its negative.
    pub fn negated(&self) -> Self {
        self.rescaled(&(-K::one()))
    }

    /// Checks ordering and sign constraints; returns warnings for boundary cases.
    pub fn validate(&self) -> Result<Vec<String>, IqwError> {
        let mut warnings = Vec::new();
        let f = |v: &K| v.approx();
        if let Some(q) = f(&self.q) {
            if !(q > 0.0 && q < 1.0) {
                return Err(IqwError::Domain(format!("q = {q} outside (0, 1)")));
            }
        }
        let check = |v: &[K], name: &str, upper: Option<f64>| -> Result<(), IqwError> {
            let xs: Vec<f64> = v.iter().filter_map(f).collect();
            if xs.len() < v.len() {
                return Ok(());
            }
            if xs.windows(2).any(|w| w[0] < w[1]) {
                return Err(IqwError::Domain(format!(
                    "{name} must be weakly decreasing"
                )));
            }
            if xs.iter().any(|&x| x < 0.0 || upper.is_some_and(|u| x > u)) {
                return Err(IqwError::Domain(format!("{name} out of range")));
            }
            Ok(())
        };
        check(&self.alphas, "alphas", Some(1.0))?;
        check(&self.betas, "betas", None)?;
        if f(&self.gamma).is_some_and(|g| g < 0.0) {
            return Err(IqwError::Domain("gamma must be nonnegative".into()));
        }
        if self.alphas.first().and_then(f).is_some_and(|a| a >= 1.0) {
            warnings
                .push("alpha_1 = 1: boundary of the parameter space, measures undefined".into());
        }
        Ok(warnings)
    }
}

/// Value on the power sum `p_n`.
pub fn phi_on_p<K: Field>(spec: &SpecDesc<K>, n: usize) -> K {
    let mut s = K::zero();
    for a in &spec.alphas {
        s = s + a.pow(n);
    }
    let dual = alt_sign::<K>(n) * (K::one() - spec.q.pow(n));
    for b in &spec.betas {
        s = s + dual.clone() * b.pow(n);
    }
    if n == 1 {
        s = s + spec.gamma.clone();
    }
    s
}

/// Value on a truncated symmetric function, through the power-sum basis.
pub fn phi_on_symfunc<K: Field>(spec: &SpecDesc<K>, f: &SymFunc<K>) -> K {
    let p = f.to_basis(Basis::Power);
    let vals: Vec<K> = (0..=f.max_degree)
        .map(|n| if n == 0 { K::one() } else { phi_on_p(spec, n) })
        .collect();
    let mut s = K::zero();
    for (k, c) in p.coeffs() {
        let mut t = c.clone();
        for &i in k.parts() {
            t = t * vals[i].clone();
        }
        s = s + t;
    }
    s
}

/// Values on `e_1, ..., e_n`: Taylor coefficients of
/// `e^{gamma z} prod (1 + alpha z) prod (1 - q beta z)/(1 - beta z)`.
pub fn w_generating_series<K: Field>(spec: &SpecDesc<K>, n: usize) -> Vec<K> {
    let mut s = vec![K::zero(); n + 1];
    s[0] = K::one();
    let mul = |s: &mut Vec<K>, f: &[K]| {
        let mut r = vec![K::zero(); n + 1];
        for (i, a) in s.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in f.iter().enumerate().take(n + 1 - i) {
                r[i + j] = r[i + j].clone() + a.clone() * b.clone();
            }
        }
        *s = r;
    };
    for a in &spec.alphas {
        mul(&mut s, &[K::one(), a.clone()]);
    }
    for b in &spec.betas {
        let c = K::one() - spec.q.clone();
        let f: Vec<K> = (0..=n)
            .map(|k| {
                if k == 0 {
                    K::one()
                } else {
                    c.clone() * b.pow(k)
                }
            })
            .collect();
        mul(&mut s, &f);
    }
    let mut e = vec![K::one()];
    for k in 1..=n {
        let prev = e[k - 1].clone();
        e.push(prev * spec.gamma.clone() / K::from_i64(k as i64));
    }
    mul(&mut s, &e);
    s.remove(0);
    s
}

/// A family of partitions closed under intervals, indexed for the transfer steps.
pub(crate) struct StateSpace {
    pub list: Vec<Partition>,
    index: HashMap<Partition, usize>,
}

impl StateSpace {
    pub fn new(list: Vec<Partition>) -> Self {
        let index = list
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        StateSpace { list, index }
    }

    pub fn interval(mu: &Partition, lambda: &Partition) -> Self {
        Self::new(interval(mu, lambda))
    }

    pub fn get(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }
}

fn qparams<K: Field>(q: &K) -> Params<K> {
    Params::single(q.clone())
}

fn vertical_predecessors(lambda: &Partition) -> Vec<Partition> {
    strip_predecessors(&lambda.conjugate())
        .iter()
        .map(Partition::conjugate)
        .collect()
}

/// `[x^1]` of the one-variable `F` weight, the generator of the Plancherel flow.
fn plancherel_rate<K: Field>(lambda: &Partition, mu: &Partition, q: &K) -> K {
    one_var(FamilyId::F, lambda, mu, &qparams(q)).series(1)[1].clone()
}

fn max_abs<K: Field>(v: &[K]) -> Option<f64> {
    let mut m = 0.0f64;
    for x in v {
        m = m.max(x.approx()?.abs());
    }
    Some(m)
}

/// Applies one generator to a vector of values on `states`; returns the tail estimate.
pub(crate) fn apply_generator<K: Field>(
    states: &StateSpace,
    v: &[K],
    g: &Generator<K>,
    q: &K,
    cutoff: usize,
) -> Result<(Vec<K>, f64), IqwError> {
    let pull = |preds: &dyn Fn(&Partition) -> Vec<Partition>,
                w: &(dyn Fn(&Partition, &Partition) -> Option<K> + Sync)|
     -> Result<Vec<K>, IqwError> {
        let rows: Vec<Vec<(usize, Partition)>> = states
            .list
            .iter()
            .map(|l| {
                preds(l)
                    .into_iter()
                    .filter_map(|m| states.get(&m).map(|i| (i, m)))
                    .collect()
            })
            .collect();
        states
            .list
            .par_iter()
            .zip(rows.par_iter())
            .map(|(l, row)| {
                let mut s = K::zero();
                for (i, m) in row {
                    if v[*i].is_zero() {
                        continue;
                    }
                    let c = w(l, m).ok_or_else(|| IqwError::Pole(format!("weight of {l}/{m}")))?;
                    s = s + c * v[*i].clone();
                }
                Ok(s)
            })
            .collect()
    };
    match g {
        Generator::Alpha(a) => {
            let p = qparams(q);
            let out = pull(&strip_predecessors, &|l, m| {
                one_var(FamilyId::F, l, m, &p).eval(a)
            })?;
            Ok((out, 0.0))
        }
        Generator::Beta(b) => {
            let p = qparams(q);
            let out = pull(&vertical_predecessors, &|l, m| {
                one_var(FamilyId::DualInhomHL, &l.conjugate(), &m.conjugate(), &p).eval(b)
            })?;
            Ok((out, 0.0))
        }
        Generator::Plancherel(gamma) => plancherel_flow(states, v, gamma, q, cutoff),
    }
}

/// `exp(gamma A) v` by its Taylor series, `A` the single-box rate matrix.
fn plancherel_flow<K: Field>(
    states: &StateSpace,
    v: &[K],
    gamma: &K,
    q: &K,
    cutoff: usize,
) -> Result<(Vec<K>, f64), IqwError> {
    let rates: Vec<Vec<(usize, K)>> = states
        .list
        .par_iter()
        .map(|l| {
            let mut row = vec![(states.get(l).unwrap(), plancherel_rate(l, l, q))];
            for r in 0..l.len() {
                if l.get(r) > l.get(r + 1) {
                    let mut p = l.parts().to_vec();
                    p[r] -= 1;
                    let m = Partition::new(p).unwrap();
                    if let Some(i) = states.get(&m) {
                        row.push((i, plancherel_rate(l, &m, q)));
                    }
                }
            }
            row
        })
        .collect();
    let mut term = v.to_vec();
    let mut sum = v.to_vec();
    let mut prev_norm = max_abs(&term);
    let mut tail = 0.0;
    for k in 1..=cutoff {
        let f = gamma.clone() / K::from_i64(k as i64);
        term = rates
            .par_iter()
            .map(|row| {
                let mut s = K::zero();
                for (i, c) in row {
                    s = s + c.clone() * term[*i].clone();
                }
                s * f.clone()
            })
            .collect();
        for (s, t) in sum.iter_mut().zip(&term) {
            *s = s.clone() + t.clone();
        }
        let norm = max_abs(&term);
        if k == cutoff {
            if let (Some(a), Some(b)) = (prev_norm, norm) {
                if b > 0.0 {
                    let r = b / a;
                    if r >= 1.0 {
                        return Err(IqwError::BoundViolation(format!(
                            "Plancherel series not converged after {cutoff} terms (ratio {r:.3})"
                        )));
                    }
                    tail = b * r / (1.0 - r);
                }
            }
        }
        prev_norm = norm;
    }
    Ok((sum, tail))
}

/// Folds the generators in order starting from the indicator of `mu`.
pub(crate) fn fold<K: Field>(
    states: &StateSpace,
    mu: &Partition,
    gens: &[Generator<K>],
    q: &K,
    cutoff: usize,
) -> Result<(Vec<K>, f64), IqwError> {
    let mut v = vec![K::zero(); states.len()];
    match states.get(mu) {
        Some(i) => v[i] = K::one(),
        None => return Ok((v, 0.0)),
    }
    let mut tail = 0.0;
    for g in gens {
        let (w, t) = apply_generator(states, &v, g, q, cutoff)?;
        v = w;
        tail += t;
    }
    Ok((v, tail))
}

/// Value of `F_{lambda/mu}` under a single generator.
pub fn f_spec<K: Field>(
    g: &Generator<K>,
    q: &K,
    lambda: &Partition,
    mu: &Partition,
    cutoff: usize,
) -> Result<SpecValue<K>, IqwError> {
    f_spec_generators(std::slice::from_ref(g), q, lambda, mu, cutoff)
}

/// Value of `F_{lambda/mu}` under the union of `gens`, in the given order.
pub fn f_spec_generators<K: Field>(
    gens: &[Generator<K>],
    q: &K,
    lambda: &Partition,
    mu: &Partition,
    cutoff: usize,
) -> Result<SpecValue<K>, IqwError> {
    if !lambda.contains(mu) {
        return Ok(SpecValue {
            value: K::zero(),
            tail: 0.0,
        });
    }
    let states = StateSpace::interval(mu, lambda);
    let (v, tail) = fold(&states, mu, gens, q, cutoff)?;
    Ok(SpecValue {
        value: v[states.get(lambda).unwrap()].clone(),
        tail,
    })
}

/// Value of `F_{lambda/mu}` under the full specialization.
pub fn f_spec_union<K: Field>(
    spec: &SpecDesc<K>,
    lambda: &Partition,
    mu: &Partition,
) -> Result<SpecValue<K>, IqwError> {
    f_spec_generators(&spec.generators(), &spec.q, lambda, mu, PLANCHEREL_CUTOFF)
}

/// Value of the sign-flipped `(-1)^{|lambda/mu|} F_{lambda/mu}(-x)`.
pub fn fbar_spec_union<K: Field>(
    spec: &SpecDesc<K>,
    lambda: &Partition,
    mu: &Partition,
    cutoff: usize,
) -> Result<SpecValue<K>, IqwError> {
    let n = spec.negated();
    let mut r = f_spec_generators(&n.generators(), &n.q, lambda, mu, cutoff)?;
    if (lambda.size() - mu.size()) % 2 == 1 {
        r.value = -r.value;
    }
    Ok(r)
}

/// `phi_n = phi(F_{1^n})` for `n = 1..=n_max`.
pub fn phi_sequence<K: Field>(
    spec: &SpecDesc<K>,
    n_max: usize,
) -> Result<Vec<SpecValue<K>>, IqwError> {
    let states = StateSpace::interval(&Partition::empty(), &Partition::column(n_max));
    let (v, tail) = fold(
        &states,
        &Partition::empty(),
        &spec.generators(),
        &spec.q,
        PLANCHEREL_CUTOFF,
    )?;
    Ok((1..=n_max)
        .map(|n| SpecValue {
            value: v[states.get(&Partition::column(n)).unwrap()].clone(),
            tail,
        })
        .collect())
}

/// `sum_k binom(n+k-1, k) phi_{n+k}` over `terms` terms; `phis[i]` is `phi_{i+1}`.
pub fn w_from_phi<K: Field>(phis: &[K], n: usize, terms: usize) -> Result<SpecValue<K>, IqwError> {
    if n == 0 || terms == 0 {
        return Err(IqwError::InvalidArgument(
            "n and terms must be positive".into(),
        ));
    }
    if phis.len() < n + terms - 1 {
        return Err(IqwError::InvalidArgument(format!(
            "need phi_1..phi_{}",
            n + terms - 1
        )));
    }
    let mut s = K::zero();
    let mut c = K::one();
    let mut last = Vec::new();
    for k in 0..terms {
        if k > 0 {
            c = c * K::from_i64((n + k - 1) as i64) / K::from_i64(k as i64);
        }
        let t = c.clone() * phis[n + k - 1].clone();
        last.push(t.approx().map(f64::abs));
        s = s + t;
    }
    let mut tail = 0.0;
    if terms >= 2 {
        if let (Some(Some(a)), Some(Some(b))) = (last.get(terms - 2), last.get(terms - 1)) {
            if *b > 0.0 {
                let r = b / a;
                if r >= 1.0 {
                    return Err(IqwError::BoundViolation(format!(
                        "partial sums of W_1^{n} do not settle"
                    )));
                }
                tail = b * r / (1.0 - r);
            }
        }
    }
    Ok(SpecValue { value: s, tail })
}
