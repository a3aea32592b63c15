//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::time::{Duration, Instant};

use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use iqw_core::partitions::{partitions_of, partitions_up_to};
use iqw_core::polyspace::Expansion;
use iqw_core::specialization::{
    f_spec, f_spec_union, fbar_spec_union, littlewood_check, measure_table, normalization,
    orientation_experiment, phi_sequence, w_from_phi, w_generating_series, Generator, Sampler,
    SpecDesc,
};
use iqw_core::structure::{
    a_expand, b_expand, binomial, pieri_f, product_box, product_f, ProductAlgo,
};
use iqw_core::verify::{
    hl_single_variable, verify_cauchy_f, verify_cauchy_hl, verify_dual_cauchy, verify_macd_cauchy,
    verify_omega_f, verify_omega_lowest, Status, VerifyReport, GOLDEN,
};
use iqw_core::{Partition, RatQ, RatQT, Ring};

mod tol {
    pub const GOLDEN_SECS: u64 = 5;
    pub const RING_SECS: u64 = 600;
    pub const SAMPLER_SECS: u64 = 120;
    /// Plancherel value of the sign-flipped `F_1`.
    pub const PLANCHEREL: f64 = 1e-8;
    pub const LITTLEWOOD: f64 = 1e-6;
    pub const TABLE_MASS: f64 = 1e-6;
    pub const PLANCHEREL_Z: f64 = 1e-8;
    pub const TV: f64 = 0.02;
    /// Slack for rounding in monotonicity and nonnegativity of floating-point values.
    pub const ROUNDING: f64 = 1e-12;
    /// Orientation test: a weighting "normalizes" when its total is within this of 1.
    pub const ORIENTATION: f64 = 1e-6;
}

const CAP_LITTLEWOOD: usize = 30;
const SAMPLES: usize = 100_000;
const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn fail_on(reports: &[VerifyReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(r.to_string()),
        None => Ok(()),
    }
}

fn exact(reports: &[VerifyReport]) -> Result<(), String> {
    fail_on(reports)?;
    match reports.iter().find(|r| r.status != Status::ExactPass) {
        Some(r) => Err(format!("not exact: {r}")),
        None => Ok(()),
    }
}

fn within(start: Instant, secs: u64, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    if t > Duration::from_secs(secs) {
        return Err(format!("{what} took {t:.2?}, limit {secs} s"));
    }
    Ok(t)
}

fn pairs(max: usize) -> Vec<(Partition, Partition)> {
    let ps = partitions_up_to(max);
    ps.iter()
        .flat_map(|a| ps.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn golden() -> Outcome {
    let start = Instant::now();
    let cases = &GOLDEN[..6];
    for c in cases {
        match (c.run)() {
            Ok(Status::ExactPass) => {}
            Ok(s) => return Err(format!("{}: {s:?}", c.name)),
            Err(e) => return Err(format!("{}: {e}", c.name)),
        }
    }
    let t = within(start, tol::GOLDEN_SECS, "golden examples")?;
    let names: Vec<&str> = cases.iter().map(|c| c.name).collect();
    Ok(format!("{} in {t:.2?}", names.join("; ")))
}

fn ring() -> Outcome {
    let start = Instant::now();
    let ps = pairs(3);
    ps.par_iter()
        .try_for_each(|(mu, nu)| -> Result<(), String> {
            let err = |e: iqw_core::IqwError| format!("{mu} x {nu}: {e}");
            let a = product_f(mu, nu, ProductAlgo::Dual).map_err(err)?;
            let b = product_f(mu, nu, ProductAlgo::Direct).map_err(err)?;
            if let Some((k, x, y)) = a.first_difference(&b) {
                return Err(format!("{mu} x {nu} at {k}: dual {x} vs direct {y}"));
            }
            let (rows, cols) = product_box(mu, nu);
            if let Some(l) = a
                .coeffs()
                .keys()
                .find(|l| l.len() > rows || l.first() > cols)
            {
                return Err(format!("{mu} x {nu}: {l} outside the {rows}x{cols} box"));
            }
            Ok(())
        })?;
    let box1 = p("1");
    for nu in partitions_up_to(4) {
        let want = product_f(&box1, &nu, ProductAlgo::Direct).map_err(|e| e.to_string())?;
        if let Some((k, x, y)) = pieri_f(&nu).first_difference(&want) {
            return Err(format!("Pieri at nu={nu}, {k}: {x} vs {y}"));
        }
    }
    let t = within(start, tol::RING_SECS, "products")?;
    Ok(format!(
        "{} products agree and respect the box; Pieri for |nu| <= 4; {t:.2?}",
        ps.len()
    ))
}

fn run_all(
    ps: &[(Partition, Partition)],
    f: impl Fn(&Partition, &Partition) -> iqw_core::Result<VerifyReport> + Sync,
) -> Result<Vec<VerifyReport>, String> {
    ps.par_iter()
        .map(|(a, b)| f(a, b).map_err(|e| format!("{a}, {b}: {e}")))
        .collect()
}

fn cauchy() -> Outcome {
    let ps = pairs(2);
    exact(&run_all(&ps, |mu, nu| verify_cauchy_f(mu, nu, 2, 2, 6))?)?;
    exact(&[hl_single_variable(5).map_err(|e| e.to_string())?])?;
    exact(&run_all(&ps, |mu, nu| verify_cauchy_hl(mu, nu, 2, 2, 5))?)?;
    exact(&run_all(&ps, |mu, nu| verify_dual_cauchy(mu, nu, 2, 2, 5))?)?;
    let macd = verify_macd_cauchy(3).map_err(|e| e.to_string())?;
    exact(&macd)?;
    let names: Vec<&str> = macd.iter().map(|r| r.identity.as_str()).collect();
    Ok(format!(
        "{} pairs each for F (Dx=6), HL (Dy=5), dual (D=5); HL one-variable kernel; {}",
        ps.len(),
        names.join(", ")
    ))
}

/// `(lambda, mu)` for every `mu ⊆ lambda`.
fn sub_shapes(l: Partition) -> Vec<(Partition, Partition)> {
    partitions_up_to(l.size())
        .into_iter()
        .filter(|m| l.contains(m))
        .map(|m| (l.clone(), m))
        .collect()
}

fn omega() -> Outcome {
    let shapes: Vec<(Partition, Partition)> = partitions_up_to(4)
        .into_iter()
        .flat_map(sub_shapes)
        .collect();
    exact(&run_all(&shapes, |l, m| verify_omega_f(l, m, 5))?)?;
    fail_on(&run_all(&shapes, verify_omega_lowest)?)?;
    Ok(format!(
        "{} skew shapes at D=5 and on the lowest layer",
        shapes.len()
    ))
}

/// Polynomial in `q` with nonnegative integer coefficients.
fn in_nq(c: &RatQ) -> bool {
    c.is_polynomial()
        && c.den().coeffs().len() == 1
        && c.den().coeffs()[0].is_one()
        && c.num()
            .coeffs()
            .iter()
            .all(|a| a.is_integer() && !a.is_negative())
}

fn change_of_basis() -> Outcome {
    let mut checked = 0;
    for l in partitions_up_to(4) {
        let d = l.size() + 3;
        let a = a_expand(&l, d).map_err(|e| e.to_string())?;
        let b = b_expand(&l, d).map_err(|e| e.to_string())?;
        for (m, c) in a.coeffs() {
            if !in_nq(c) {
                return Err(format!("a[{l}, {m}] = {c}"));
            }
        }
        for (m, c) in b.coeffs() {
            let signed = if (l.size() + m.size()) % 2 == 0 {
                c.clone()
            } else {
                -c.clone()
            };
            if !in_nq(&signed) {
                return Err(format!("b[{l}, {m}] = {c}"));
            }
        }
        // sum_mu b[l, mu] a[mu, k] = delta(l, k) up to degree d
        let mut comp: Expansion = Expansion::new(iqw_core::polyspace::ExpBasis::F, Some(d));
        for (m, c) in b.coeffs() {
            for (k, x) in a_expand(m, d).map_err(|e| e.to_string())?.coeffs() {
                comp.add(k.clone(), c * x);
            }
        }
        let mut id = Expansion::new(iqw_core::polyspace::ExpBasis::F, Some(d));
        id.add(l.clone(), RatQ::one());
        if let Some((k, x, y)) = comp.first_difference(&id) {
            return Err(format!("a o b at {l}: [{k}] {x} vs {y}"));
        }
        checked += a.len() + b.len();
    }
    for n in 1..=5 {
        let d = n + 3;
        let a = a_expand(&Partition::column(n), d).map_err(|e| e.to_string())?;
        let b = b_expand(&Partition::column(n), d).map_err(|e| e.to_string())?;
        for k in 0..=(d - n) {
            let c: RatQ = binomial(n + k - 1, k);
            let s = if k % 2 == 0 { c.clone() } else { -c.clone() };
            let col = Partition::column(n + k);
            if a.get(&col) != c || b.get(&col) != s {
                return Err(format!("column formula at n={n}, k={k}"));
            }
        }
        if a.len() != d - n + 1 || b.len() != d - n + 1 {
            return Err(format!("column expansions at n={n} have extra terms"));
        }
    }
    Ok(format!(
        "{checked} coefficients in N[q] with signs; a o b = id; columns n <= 5"
    ))
}

fn random_spec(rng: &mut ChaCha8Rng) -> SpecDesc<f64> {
    let mut a: Vec<f64> = (0..rng.random_range(0..4))
        .map(|_| rng.random::<f64>() * 0.95)
        .collect();
    let mut b: Vec<f64> = (0..rng.random_range(0..3))
        .map(|_| rng.random::<f64>() * 2.0)
        .collect();
    a.sort_by(|x, y| y.total_cmp(x));
    b.sort_by(|x, y| y.total_cmp(x));
    let gamma = if rng.random_bool(0.5) {
        rng.random::<f64>()
    } else {
        0.0
    };
    SpecDesc::new(a, b, gamma, 0.05 + 0.9 * rng.random::<f64>())
}

fn specializations() -> Outcome {
    let q = RatQT::q();
    let beta = RatQT::t();
    let one = RatQT::one();
    let ratio = &beta / &(&one + &beta);
    for n in 1..=6 {
        let v = f_spec(
            &Generator::Beta(beta.clone()),
            &q,
            &Partition::column(n),
            &p(""),
            0,
        )
        .map_err(|e| e.to_string())?;
        if v.value != &(&one - &q) * &ratio.pow(n) {
            return Err(format!("dual substitution on F_1^{n}: {}", v.value));
        }
    }
    let g = 0.7f64;
    let v = fbar_spec_union(&SpecDesc::plancherel(g, 0.5), &p("1"), &p(""), 40)
        .map_err(|e| e.to_string())?;
    let plancherel = (v.value - (g.exp() - 1.0)).abs();
    if plancherel >= tol::PLANCHEREL {
        return Err(format!(
            "Plancherel sign-flipped F_1 off by {plancherel:.3e}"
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..20 {
        let spec = random_spec(&mut rng);
        let phi: Vec<f64> = phi_sequence(&spec, 40)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|v| v.value)
            .collect();
        let chain = std::iter::once(1.0)
            .chain(phi.iter().copied())
            .collect::<Vec<_>>();
        if chain.windows(2).any(|w| w[1] > w[0] + tol::ROUNDING)
            || phi.iter().any(|&x| x < -tol::ROUNDING)
        {
            return Err(format!("phi chain not monotone for {spec:?}: {phi:?}"));
        }
    }
    let spec = SpecDesc::new(vec![0.5, 0.3], vec![0.7], 0.4, 0.6);
    let terms = 60;
    let phi: Vec<f64> = phi_sequence(&spec, 5 + terms)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|v| v.value)
        .collect();
    let w = w_generating_series(&spec, 5);
    let mut worst: f64 = 0.0;
    for n in 1..=5 {
        let r = w_from_phi(&phi, n, terms).map_err(|e| e.to_string())?;
        let err = (r.value - w[n - 1]).abs();
        if err > tol::ROUNDING * 1e3 + r.tail {
            return Err(format!(
                "phi(W_1^{n}): {} vs {} (tail {:.2e})",
                r.value,
                w[n - 1],
                r.tail
            ));
        }
        worst = worst.max(err);
    }
    Ok(format!(
        "beta columns n <= 6 exact; Plancherel residual {plancherel:.2e}; 20 monotone chains; W_1^n max deviation {worst:.2e}"
    ))
}

fn measures() -> Outcome {
    let err = |e: iqw_core::IqwError| e.to_string();
    let r1 = littlewood_check(&[0.3], 0.5, &p(""), CAP_LITTLEWOOD, tol::LITTLEWOOD).map_err(err)?;
    let r2 = littlewood_check(&[0.2, 0.1], 0.5, &p("1"), CAP_LITTLEWOOD, tol::LITTLEWOOD)
        .map_err(err)?;
    let t = measure_table(&SpecDesc::alpha(0.4, 0.5), &p(""), 20, 1e-15).map_err(err)?;
    if (t.total() - 1.0).abs() > tol::TABLE_MASS {
        return Err(format!("table mass {}", t.total()));
    }
    let o = orientation_experiment(&[0.2, 0.1], 0.5, &p("1"), CAP_LITTLEWOOD).map_err(err)?;
    let (lower, upper) = o.normalizing(tol::ORIENTATION);
    if !lower {
        return Err(format!(
            "b_mu'/b_lambda' weighting does not normalize: {o:?}"
        ));
    }
    let (g, q) = (0.9, 0.5);
    let z = normalization(&SpecDesc::plancherel(g, q), 1e-15).map_err(err)?;
    let product = (g / (1.0 - q)).exp();
    let printed = (g * q / (1.0 - q)).exp();
    if (z - product).abs() > tol::PLANCHEREL_Z {
        return Err(format!("Plancherel Z = {z}, expected {product}"));
    }
    Ok(format!(
        "Littlewood residuals {:.2e}, {:.2e}; table mass {:.8}; orientation b_mu'/b_lambda' total {:.8} (normalizes: {lower}), \
         b_lambda'/b_mu' total {:.6} (normalizes: {upper}); Plancherel Z {z:.10} vs e^(g/(1-q)) {product:.10}, \
         alternative e^(gq/(1-q)) = {printed:.10}",
        r1.residual,
        r2.residual,
        t.total(),
        o.lower_over_upper,
        o.upper_over_lower
    ))
}

fn sampler() -> Outcome {
    let start = Instant::now();
    let spec = SpecDesc::alpha(0.4, 0.5);
    let t = measure_table(&spec, &p(""), 12, 1e-15).map_err(|e| e.to_string())?;
    let s = Sampler::new(&spec, &p(""), 1e-12).map_err(|e| e.to_string())?;
    let xs = s.sample_many(SAMPLES, SEED).map_err(|e| e.to_string())?;
    let mut counts = std::collections::BTreeMap::<Partition, usize>::new();
    for l in xs.into_iter().filter(|l| l.size() <= 12) {
        *counts.entry(l).or_default() += 1;
    }
    let mut tv = 0.0;
    for l in partitions_up_to(12) {
        let emp = counts.get(&l).copied().unwrap_or(0) as f64 / SAMPLES as f64;
        tv += (emp - t.prob(&l)).abs();
    }
    tv /= 2.0;
    let elapsed = within(start, tol::SAMPLER_SECS, "sampling")?;
    if tv > tol::TV {
        return Err(format!("total variation {tv:.4}"));
    }
    Ok(format!(
        "{SAMPLES} samples, total variation {tv:.4} on |lambda| <= 12, {elapsed:.2?}"
    ))
}

fn positivity() -> Outcome {
    for n in 1..=6 {
        let a = a_expand(&Partition::column(n), n + 4).map_err(|e| e.to_string())?;
        if a.is_empty() || a.coeffs().values().any(|c| c.eval_f64(0.5) <= 0.0) {
            return Err(format!("W_1^{n} has a nonpositive coefficient at q = 1/2"));
        }
    }
    let shapes: Vec<(Partition, Partition)> = (0..=5)
        .flat_map(partitions_of)
        .flat_map(sub_shapes)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let specs: Vec<SpecDesc<f64>> = (0..10).map(|_| random_spec(&mut rng)).collect();
    let mut min = f64::INFINITY;
    for spec in &specs {
        for (l, m) in &shapes {
            let v = f_spec_union(spec, l, m).map_err(|e| e.to_string())?.value;
            if v < -tol::ROUNDING {
                return Err(format!("F_{l}/{m} = {v} under {spec:?}"));
            }
            min = min.min(v);
        }
    }
    Ok(format!(
        "W_1^n positive for n <= 6; {} shapes x 10 specs, min value {min:.3e}",
        shapes.len()
    ))
}

fn main() {
    let criteria: [(&str, Criterion); 9] = [
        ("golden examples", golden),
        ("ring closure", ring),
        ("Cauchy identities", cauchy),
        ("omega duality", omega),
        ("change of basis", change_of_basis),
        ("specializations", specializations),
        ("Littlewood and measures", measures),
        ("sampler", sampler),
        ("positivity", positivity),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (tag, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {} [{name}]: {tag} ({:.2?}) {detail}",
            i + 1,
            start.elapsed()
        );
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
