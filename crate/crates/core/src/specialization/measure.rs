//! Partition measures `P(lambda) = b_{mu'}/b_{lambda'} phi(F_{lambda/mu}) / Z`,
//! the Littlewood-type identity behind them, and a sampler for
//! variable-substitution specializations.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{f_spec_union, fold, Generator, SpecDesc, StateSpace, PLANCHEREL_CUTOFF};
use crate::error::IqwError;
use crate::families::{one_var, FamilyId, Params};
use crate::partitions::{b_hl, partitions_up_to, strip_successors, Partition};
use crate::scalar::qpoch_infinite;

/// Partitions `lambda ⊇ mu` with `|lambda| <= cap` and at most `rows` rows.
fn upper_set(mu: &Partition, cap: usize, rows: usize) -> StateSpace {
    StateSpace::new(
        partitions_up_to(cap)
            .into_iter()
            .filter(|l| l.len() <= rows && l.contains(mu))
            .collect(),
    )
}

fn b_conj(l: &Partition, q: f64) -> f64 {
    b_hl(&l.conjugate(), &q)
}

fn check_q(q: f64) -> Result<(), IqwError> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(IqwError::Domain(format!("q = {q} outside (0, 1)")))
    }
}

/// `Z = 1 / prod_{k >= 0} (1 - phi_1^{(q^k)})`, `phi^{(s)}` the spec rescaled by `s`.
pub fn normalization(spec: &SpecDesc<f64>, eps: f64) -> Result<f64, IqwError> {
    check_q(spec.q)?;
    let one = Partition::row(1);
    let mut inv = 1.0;
    let mut s = 1.0;
    for _ in 0..100_000 {
        let phi1 = f_spec_union(&spec.rescaled(&s), &one, &Partition::empty())?.value;
        if phi1 >= 1.0 {
            return Err(IqwError::Domain(format!("phi_1 = {phi1} >= 1")));
        }
        inv *= 1.0 - phi1;
        if phi1.abs() < eps * (1.0 - spec.q) {
            return Ok(1.0 / inv);
        }
        s *= spec.q;
    }
    Err(IqwError::BoundViolation(
        "normalization product did not settle".into(),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct MeasureTable {
    pub mu: Partition,
    pub spec: SpecDesc<f64>,
    pub cap: usize,
    pub entries: BTreeMap<Partition, f64>,
    #[serde(rename = "Z")]
    pub z: f64,
    pub tail_mass: f64,
}

impl MeasureTable {
    pub fn prob(&self, l: &Partition) -> f64 {
        self.entries.get(l).copied().unwrap_or(0.0)
    }

    pub fn total(&self) -> f64 {
        self.entries.values().sum()
    }

    /// Expected size over the tabulated support.
    pub fn mean_size(&self) -> f64 {
        self.entries.iter().map(|(l, p)| l.size() as f64 * p).sum()
    }

    pub fn check_tail(&self, bound: f64) -> Result<(), IqwError> {
        if self.tail_mass.abs() > bound {
            return Err(IqwError::BoundViolation(format!(
                "tail mass {} above {bound}",
                self.tail_mass
            )));
        }
        Ok(())
    }
}

/// Tabulates the measure on `lambda ⊇ mu`, `|lambda| <= cap`.
pub fn measure_table(
    spec: &SpecDesc<f64>,
    mu: &Partition,
    cap: usize,
    eps: f64,
) -> Result<MeasureTable, IqwError> {
    spec.validate()?;
    if spec.alphas.first().is_some_and(|&a| a >= 1.0) {
        return Err(IqwError::Domain("measures need alpha_1 < 1".into()));
    }
    let z = normalization(spec, eps)?;
    let rows = if spec.betas.is_empty() && spec.gamma == 0.0 {
        mu.len() + spec.alphas.len()
    } else {
        cap
    };
    let states = upper_set(mu, cap, rows);
    let (v, _) = fold(&states, mu, &spec.generators(), &spec.q, PLANCHEREL_CUTOFF)?;
    let bm = b_conj(mu, spec.q);
    let mut entries = BTreeMap::new();
    for (l, f) in states.list.iter().zip(v) {
        let p = bm / b_conj(l, spec.q) * f / z;
        if p < -1e-12 {
            return Err(IqwError::BoundViolation(format!(
                "negative probability {p} at {l}"
            )));
        }
        if p != 0.0 {
            entries.insert(l.clone(), p.max(0.0));
        }
    }
    let tail_mass = 1.0 - entries.values().sum::<f64>();
    Ok(MeasureTable {
        mu: mu.clone(),
        spec: spec.clone(),
        cap,
        entries,
        z,
        tail_mass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LittlewoodReport {
    pub partial: f64,
    pub kernel: f64,
    pub residual: f64,
}

/// Partial sums with both b-ratio orientations, and the kernel `prod 1/(x_i;q)_inf`.
fn littlewood_sums(
    xs: &[f64],
    q: f64,
    mu: &Partition,
    cap: usize,
) -> Result<(f64, f64, f64), IqwError> {
    check_q(q)?;
    if xs.iter().any(|x| x.abs() >= 1.0) {
        return Err(IqwError::Domain("variables need |x| < 1".into()));
    }
    let mut kernel = 1.0;
    for &x in xs {
        kernel /= qpoch_infinite(x, q, 1e-17)?;
    }
    let states = upper_set(mu, cap, mu.len() + xs.len());
    let gens: Vec<_> = xs.iter().map(|&x| Generator::Alpha(x)).collect();
    let (v, _) = fold(&states, mu, &gens, &q, 0)?;
    let bm = b_conj(mu, q);
    let (mut lower, mut upper) = (0.0, 0.0);
    for (l, f) in states.list.iter().zip(v) {
        let bl = b_conj(l, q);
        lower += bm / bl * f;
        upper += bl / bm * f;
    }
    Ok((lower, upper, kernel))
}

/// Compares `sum_{lambda ⊇ mu} b_{mu'}/b_{lambda'} F_{lambda/mu}(x)` over `|lambda| <= cap` with the kernel.
pub fn littlewood_check(
    xs: &[f64],
    q: f64,
    mu: &Partition,
    cap: usize,
    tol: f64,
) -> Result<LittlewoodReport, IqwError> {
    let (partial, _, kernel) = littlewood_sums(xs, q, mu, cap)?;
    let residual = (partial - kernel).abs();
    if residual > tol {
        return Err(IqwError::BoundViolation(format!(
            "residual {residual:.3e} above {tol:.1e} at cap {cap}"
        )));
    }
    Ok(LittlewoodReport {
        partial,
        kernel,
        residual,
    })
}

/// Normalized totals under the two candidate weights `b_{mu'}/b_{lambda'}` and `b_{lambda'}/b_{mu'}`.
#[derive(Clone, Debug, Serialize)]
pub struct OrientationReport {
    pub kernel: f64,
    pub lower_over_upper: f64,
    pub upper_over_lower: f64,
}

impl OrientationReport {
    /// Which orientation sums to one within `tol`.
    pub fn normalizing(&self, tol: f64) -> (bool, bool) {
        (
            (self.lower_over_upper - 1.0).abs() < tol,
            (self.upper_over_lower - 1.0).abs() < tol,
        )
    }
}

pub fn orientation_experiment(
    xs: &[f64],
    q: f64,
    mu: &Partition,
    cap: usize,
) -> Result<OrientationReport, IqwError> {
    let (a, b, kernel) = littlewood_sums(xs, q, mu, cap)?;
    Ok(OrientationReport {
        kernel,
        lower_over_upper: a / kernel,
        upper_over_lower: b / kernel,
    })
}

type Cdf = Arc<Vec<(Partition, f64)>>;

/// Sequential horizontal-strip growth, one step per `alpha`.
pub struct Sampler {
    alphas: Vec<f64>,
    q: f64,
    mu: Partition,
    eps: f64,
    norms: Vec<f64>,
    cache: RwLock<HashMap<(usize, Partition), Cdf>>,
}

const MAX_STRIP: usize = 1 << 12;

impl Sampler {
    pub fn new(spec: &SpecDesc<f64>, mu: &Partition, eps: f64) -> Result<Self, IqwError> {
        spec.validate()?;
        if !spec.betas.is_empty() || spec.gamma != 0.0 {
            return Err(IqwError::InvalidArgument(
                "sampling supports alphas only".into(),
            ));
        }
        if spec.alphas.first().is_some_and(|&a| a >= 1.0) {
            return Err(IqwError::Domain("measures need alpha_1 < 1".into()));
        }
        let norms = spec
            .alphas
            .iter()
            .map(|&a| qpoch_infinite(a, spec.q, 1e-17))
            .collect::<Result<_, _>>()?;
        Ok(Sampler {
            alphas: spec.alphas.clone(),
            q: spec.q,
            mu: mu.clone(),
            eps,
            norms,
            cache: RwLock::new(HashMap::new()),
        })
    }

    /// Cumulative step distribution out of `nu` for the `i`-th variable.
    fn cdf(&self, i: usize, nu: &Partition) -> Result<Cdf, IqwError> {
        let key = (i, nu.clone());
        if let Some(c) = self.cache.read().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let p = Params::single(self.q);
        let bn = b_conj(nu, self.q);
        let mut k = 8;
        let cdf = loop {
            let mut acc = 0.0;
            let mut cdf = Vec::new();
            for l in strip_successors(nu, k) {
                let f = one_var(FamilyId::F, &l, nu, &p)
                    .eval(&self.alphas[i])
                    .unwrap_or(0.0);
                let w = self.norms[i] * bn / b_conj(&l, self.q) * f;
                if w > 0.0 {
                    acc += w;
                    cdf.push((l, acc));
                }
            }
            if 1.0 - acc < self.eps {
                break cdf;
            }
            k *= 2;
            if k > MAX_STRIP {
                return Err(IqwError::BoundViolation(format!(
                    "step from {nu} needs strips longer than {MAX_STRIP}"
                )));
            }
        };
        let cdf = Arc::new(cdf);
        self.cache.write().unwrap().insert(key, cdf.clone());
        Ok(cdf)
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> Result<Partition, IqwError> {
        let mut nu = self.mu.clone();
        for i in 0..self.alphas.len() {
            let cdf = self.cdf(i, &nu)?;
            let total = cdf.last().map_or(0.0, |c| c.1);
            let u = rng.random::<f64>() * total;
            let j = cdf.partition_point(|c| c.1 <= u).min(cdf.len() - 1);
            nu = cdf[j].0.clone();
        }
        Ok(nu)
    }

    /// `n` samples; sample `i` uses stream `i` of a ChaCha generator seeded by `seed`.
    pub fn sample_many(&self, n: usize, seed: u64) -> Result<Vec<Partition>, IqwError> {
        (0..n)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(i as u64);
                self.sample(&mut rng)
            })
            .collect()
    }
}
