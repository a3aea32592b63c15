use std::fmt::Display;

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use iqw_core::families::{eval_skew, expand_skew, FamilyId, Params, Standard};
use iqw_core::polyspace::{Expansion, RationalMulti};
use iqw_core::scalar::parse_rational;
use iqw_core::specialization::{
    f_spec_generators, fbar_spec_union, measure_table, phi_sequence, Sampler, SpecDesc, SpecValue,
};
use iqw_core::structure::{
    a_expand, b_expand, pieri_f, product_f, skew_f_expand, skew_f_expand_direct, ProductAlgo,
};
use iqw_core::verify::{
    dual_reading_experiment, golden_suite, hl_single_variable, verify_cauchy_f,
    verify_cauchy_f_with, verify_cauchy_hl, verify_cauchy_hl_with, verify_dual_cauchy,
    verify_dual_cauchy_with, verify_macd_cauchy, verify_omega_f, verify_omega_lowest, VerifyReport,
};
use iqw_core::{BigRat, Field, IqwError, Partition, RatQ, RatQT, Result};

use crate::args::*;

/// A command-line scalar: exact when written as an integer or `p/q`.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(BigRat),
    Float(f64),
}

impl Scalar {
    pub fn parse(s: &str) -> Result<Scalar> {
        if let Some(r) = parse_rational(s) {
            return Ok(Scalar::Exact(r));
        }
        s.trim()
            .parse::<f64>()
            .map(Scalar::Float)
            .map_err(|_| IqwError::Parse(format!("not a number: {s:?}")))
    }

    fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(x) => *x,
        }
    }

    fn exact(&self) -> Option<BigRat> {
        match self {
            Scalar::Exact(r) => Some(r.clone()),
            Scalar::Float(_) => None,
        }
    }
}

fn partition(s: &str) -> Result<Partition> {
    s.parse()
}

fn scalars(v: &[String]) -> Result<Vec<Scalar>> {
    v.iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| Scalar::parse(s))
        .collect()
}

/// Runs the command; `Ok(false)` means a requested check failed.
pub fn dispatch(cli: &Cli) -> Result<bool> {
    let json = cli.json;
    match &cli.command {
        Command::Poly(PolyCmd::Expand(a)) => poly_expand(a, json),
        Command::Poly(PolyCmd::Eval(a)) => poly_eval(a, json),
        Command::Product(a) => product(a, json),
        Command::Pieri(a) => {
            print_expansion(&pieri_f(&partition(&a.nu)?), json);
            Ok(true)
        }
        Command::SkewExpand(a) => {
            let (l, m) = (partition(&a.lambda)?, partition(&a.mu)?);
            let e = if a.direct {
                skew_f_expand_direct(&l, &m)?
            } else {
                skew_f_expand(&l, &m)?
            };
            print_expansion(&e, json);
            Ok(true)
        }
        Command::Basis(a) => {
            let l = partition(&a.lambda)?;
            let e = match a.direction {
                Direction::W2F => a_expand(&l, a.degree)?,
                Direction::F2W => b_expand(&l, a.degree)?,
            };
            print_expansion(&e, json);
            Ok(true)
        }
        Command::Verify(v) => verify(v, json),
        Command::Spec(s) => spec(s, json),
        Command::Measure(m) => measure(m, json),
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).unwrap());
}

fn print_expansion<K: Field + Display>(e: &Expansion<K>, json: bool) {
    if json {
        print_json(&e.to_json());
        return;
    }
    if e.is_empty() {
        println!("0");
    }
    for (k, c) in e.coeffs() {
        println!("{}[{k}]: {c}", e.basis);
    }
}

enum Mode {
    Formal,
    Exact(BigRat, BigRat),
    Float(f64, f64),
}

fn mode(f: &FamilyArgs, extra: &[Scalar]) -> Result<Mode> {
    let q = f.q.as_deref().map(Scalar::parse).transpose()?;
    let t = f.t.as_deref().map(Scalar::parse).transpose()?;
    let q = match q {
        None if t.is_some() => return Err(IqwError::InvalidArgument("--t needs --q".into())),
        None => return Ok(Mode::Formal),
        Some(q) => q,
    };
    let t = t.unwrap_or_else(|| q.clone());
    let floats = [&q, &t]
        .into_iter()
        .chain(extra)
        .any(|s| matches!(s, Scalar::Float(_)));
    Ok(match (floats, q.exact(), t.exact()) {
        (false, Some(q), Some(t)) => Mode::Exact(q, t),
        _ => Mode::Float(q.to_f64(), t.to_f64()),
    })
}

fn is_macdonald(f: FamilyId) -> bool {
    matches!(f, FamilyId::MacdonaldP | FamilyId::MacdonaldQ)
}

fn graded_order(e: &[u16]) -> (usize, Vec<std::cmp::Reverse<u16>>) {
    (
        e.iter().map(|&x| x as usize).sum(),
        e.iter().map(|&x| std::cmp::Reverse(x)).collect(),
    )
}

fn monomial(e: &[u16]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{k}", i + 1)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn expansion_output<K: Field + Display>(r: &RationalMulti<K>, head: Value, json: bool) {
    let mut terms: Vec<_> = r.num.terms().iter().collect();
    terms.sort_by_key(|(e, _)| graded_order(e));
    if json {
        let mut v = head;
        v["terms"] = terms
            .iter()
            .map(
                |(e, c)| json!({ "monomial": monomial(e), "exponents": e, "coeff": c.to_string() }),
            )
            .collect();
        v["denominator"] = json!(r.den);
        print_json(&v);
        return;
    }
    if terms.is_empty() {
        println!("0");
    }
    for (e, c) in &terms {
        println!("{}: {c}", monomial(e));
    }
    if !r.is_polynomial() {
        let den: Vec<String> = r
            .den
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, d)| format!("(1+x{})^{d}", i + 1))
            .collect();
        println!("denominator: {}", den.join("*"));
    }
}

fn poly_expand(a: &PolyExpandArgs, json: bool) -> Result<bool> {
    let f = &a.family;
    let family: FamilyId = f.family.parse()?;
    let (l, m) = (partition(&f.lambda)?, partition(&f.mu)?);
    let mut head = json!({ "family": family.to_string(), "lambda": l, "mu": m, "n": a.n });
    match mode(f, &[])? {
        Mode::Formal if is_macdonald(family) => {
            head["q"] = json!("formal");
            head["t"] = json!("formal");
            let r = expand_skew(&Standard(Params::<RatQT>::formal_qt()), family, &l, &m, a.n);
            expansion_output(&r, head, json);
        }
        Mode::Formal => {
            head["q"] = json!("formal");
            expansion_output(
                &expand_skew(&Standard(Params::formal()), family, &l, &m, a.n),
                head,
                json,
            );
        }
        Mode::Exact(q, t) => {
            head["q"] = json!(q.to_string());
            head["t"] = json!(t.to_string());
            expansion_output(
                &expand_skew(&Standard(Params::new(q, t)), family, &l, &m, a.n),
                head,
                json,
            );
        }
        Mode::Float(q, t) => {
            head["q"] = json!(q);
            head["t"] = json!(t);
            expansion_output(
                &expand_skew(&Standard(Params::new(q, t)), family, &l, &m, a.n),
                head,
                json,
            );
        }
    }
    Ok(true)
}

fn poly_eval(a: &PolyEvalArgs, json: bool) -> Result<bool> {
    let f = &a.family;
    let family: FamilyId = f.family.parse()?;
    let (l, m) = (partition(&f.lambda)?, partition(&f.mu)?);
    let xs = scalars(&a.at.split(',').map(str::to_string).collect::<Vec<_>>())?;
    let value = match mode(f, &xs)? {
        Mode::Formal => {
            if is_macdonald(family) {
                return Err(IqwError::InvalidArgument(
                    "Macdonald evaluation needs --q".into(),
                ));
            }
            let xs: Vec<RatQ> = xs
                .iter()
                .map(|x| x.exact().map(RatQ::from_rat))
                .collect::<Option<_>>()
                .ok_or_else(|| {
                    IqwError::InvalidArgument("decimal points need a numeric --q".into())
                })?;
            eval_skew(&Standard(Params::formal()), family, &l, &m, &xs)?.to_string()
        }
        Mode::Exact(q, t) => {
            let xs: Vec<BigRat> = xs.iter().filter_map(Scalar::exact).collect();
            eval_skew(&Standard(Params::new(q, t)), family, &l, &m, &xs)?.to_string()
        }
        Mode::Float(q, t) => {
            let xs: Vec<f64> = xs.iter().map(Scalar::to_f64).collect();
            eval_skew(&Standard(Params::new(q, t)), family, &l, &m, &xs)?.to_string()
        }
    };
    if json {
        print_json(
            &json!({ "family": family.to_string(), "lambda": l, "mu": m, "at": a.at, "value": value }),
        );
    } else {
        println!("{value}");
    }
    Ok(true)
}

fn product(a: &ProductArgs, json: bool) -> Result<bool> {
    let (mu, nu) = (partition(&a.mu)?, partition(&a.nu)?);
    let (e, agree) = match a.algo {
        AlgoArg::Dual => (product_f(&mu, &nu, ProductAlgo::Dual)?, None),
        AlgoArg::Direct => (product_f(&mu, &nu, ProductAlgo::Direct)?, None),
        AlgoArg::Both => {
            let d = product_f(&mu, &nu, ProductAlgo::Dual)?;
            let agree = d == product_f(&mu, &nu, ProductAlgo::Direct)?;
            (d, Some(agree))
        }
    };
    if json {
        let mut v = json!({ "mu": mu, "nu": nu, "expansion": e.to_json() });
        if let Some(a) = agree {
            v["algorithms_agree"] = json!(a);
        }
        print_json(&v);
    } else {
        print_expansion(&e, false);
        if let Some(a) = agree {
            println!("algorithms agree: {a}");
        }
    }
    Ok(agree.unwrap_or(true))
}

fn exact_q(q: &Option<String>) -> Result<Option<Standard<BigRat>>> {
    match q.as_deref().map(Scalar::parse).transpose()? {
        None => Ok(None),
        Some(Scalar::Exact(q)) => Ok(Some(Standard(Params::single(q)))),
        Some(Scalar::Float(_)) => Err(IqwError::InvalidArgument(
            "identity checks need an exact q such as 1/2".into(),
        )),
    }
}

fn verify(cmd: &VerifyCmd, json: bool) -> Result<bool> {
    let reports: Vec<VerifyReport> = match cmd {
        VerifyCmd::CauchyF { pair, deg } => {
            let (mu, nu) = (partition(&pair.mu)?, partition(&pair.nu)?);
            vec![match exact_q(&pair.q)? {
                None => verify_cauchy_f(&mu, &nu, pair.n, pair.m, *deg)?,
                Some(s) => verify_cauchy_f_with(&s, &mu, &nu, pair.n, pair.m, *deg)?,
            }]
        }
        VerifyCmd::CauchyHl {
            pair,
            deg,
            single_variable,
        } => {
            if *single_variable {
                vec![hl_single_variable(*deg)?]
            } else {
                let (mu, nu) = (partition(&pair.mu)?, partition(&pair.nu)?);
                vec![match exact_q(&pair.q)? {
                    None => verify_cauchy_hl(&mu, &nu, pair.n, pair.m, *deg)?,
                    Some(s) => verify_cauchy_hl_with(&s, &mu, &nu, pair.n, pair.m, *deg)?,
                }]
            }
        }
        VerifyCmd::DualCauchy {
            pair,
            deg,
            readings,
        } => {
            let (mu, nu) = (partition(&pair.mu)?, partition(&pair.nu)?);
            if *readings {
                let r = dual_reading_experiment(&mu, &nu, pair.n, pair.m, *deg)?;
                // the experiment succeeds when the shared-parameter reading holds
                report(&r, json)?;
                return Ok(r[0].passed());
            }
            vec![match exact_q(&pair.q)? {
                None => verify_dual_cauchy(&mu, &nu, pair.n, pair.m, *deg)?,
                Some(s) => verify_dual_cauchy_with(&s, &s, &mu, &nu, pair.n, pair.m, *deg)?,
            }]
        }
        VerifyCmd::OmegaF {
            lambda,
            mu,
            deg,
            lowest,
        } => {
            let (l, m) = (partition(lambda)?, partition(mu)?);
            if *lowest {
                vec![verify_omega_lowest(&l, &m)?]
            } else {
                vec![verify_omega_f(&l, &m, *deg)?]
            }
        }
        VerifyCmd::Macd { deg } => verify_macd_cauchy(*deg)?,
        VerifyCmd::Golden => golden_suite(),
    };
    report(&reports, json)
}

fn report(reports: &[VerifyReport], json: bool) -> Result<bool> {
    if json {
        let v: Vec<Value> = reports.iter().map(VerifyReport::to_json).collect();
        print_json(&if v.len() == 1 {
            v[0].clone()
        } else {
            Value::Array(v)
        });
    } else {
        for r in reports {
            println!("{r}");
        }
    }
    Ok(reports.iter().all(VerifyReport::passed))
}

fn spec_desc(a: &SpecArgs) -> Result<(SpecDesc<f64>, Option<SpecDesc<BigRat>>)> {
    let alphas = scalars(&a.alphas)?;
    let betas = scalars(&a.betas)?;
    let gamma = Scalar::parse(&a.gamma)?;
    let q = Scalar::parse(&a.q)?;
    let f = |v: &[Scalar]| v.iter().map(Scalar::to_f64).collect::<Vec<_>>();
    let numeric = SpecDesc::new(f(&alphas), f(&betas), gamma.to_f64(), q.to_f64());
    for w in numeric.validate()? {
        eprintln!("warning: {w}");
    }
    let e = |v: &[Scalar]| v.iter().map(Scalar::exact).collect::<Option<Vec<_>>>();
    let exact = match (e(&alphas), e(&betas), gamma.exact(), q.exact()) {
        (Some(a), Some(b), Some(g), Some(q)) if num_traits::Zero::is_zero(&g) => {
            Some(SpecDesc::new(a, b, g, q))
        }
        _ => None,
    };
    Ok((numeric, exact))
}

fn spec_value_json<K: Display>(v: &SpecValue<K>, numeric: f64) -> Value {
    json!({ "value": v.value.to_string(), "numeric": numeric, "tail": v.tail })
}

fn spec(cmd: &SpecCmd, json: bool) -> Result<bool> {
    match cmd {
        SpecCmd::Eval {
            spec,
            lambda,
            mu,
            bar,
            cutoff,
        } => {
            let (l, m) = (partition(lambda)?, partition(mu)?);
            let (numeric, exact) = spec_desc(spec)?;
            let v = match &exact {
                Some(s) => {
                    let v = eval_spec(s, &l, &m, *bar, *cutoff)?;
                    let x = v.value.to_f64().unwrap_or(f64::NAN);
                    spec_value_json(&v, x)
                }
                None => {
                    let v = eval_spec(&numeric, &l, &m, *bar, *cutoff)?;
                    spec_value_json(&v, v.value)
                }
            };
            if json {
                print_json(&json!({ "lambda": l, "mu": m, "bar": bar, "result": v }));
            } else {
                println!(
                    "{} (tail {:.3e})",
                    v["value"].as_str().unwrap(),
                    v["tail"].as_f64().unwrap()
                );
            }
        }
        SpecCmd::Phi { spec, n } => {
            let (numeric, _) = spec_desc(spec)?;
            let phis = phi_sequence(&numeric, *n)?;
            if json {
                let v: Vec<Value> = phis
                    .iter()
                    .map(|p| json!({ "value": p.value, "tail": p.tail }))
                    .collect();
                print_json(&Value::Array(v));
            } else {
                for (i, p) in phis.iter().enumerate() {
                    println!("phi_{} = {}", i + 1, p.value);
                }
            }
        }
    }
    Ok(true)
}

fn eval_spec<K: Field>(
    s: &SpecDesc<K>,
    l: &Partition,
    m: &Partition,
    bar: bool,
    cutoff: usize,
) -> Result<SpecValue<K>> {
    if bar {
        fbar_spec_union(s, l, m, cutoff)
    } else {
        f_spec_generators(&s.generators(), &s.q, l, m, cutoff)
    }
}

fn measure(cmd: &MeasureCmd, json: bool) -> Result<bool> {
    match cmd {
        MeasureCmd::Table { spec, mu, cap, eps } => {
            let (numeric, _) = spec_desc(spec)?;
            let t = measure_table(&numeric, &partition(mu)?, *cap, *eps)?;
            if json {
                print_json(&serde_json::to_value(&t).map_err(|e| IqwError::Parse(e.to_string()))?);
            } else {
                for (l, p) in &t.entries {
                    println!("{}\t{p:.6e}", display_partition(l));
                }
                println!("Z = {}\ntail mass = {:.3e}", t.z, t.tail_mass);
            }
        }
        MeasureCmd::Sample {
            spec,
            mu,
            n,
            seed,
            eps,
        } => {
            let (numeric, _) = spec_desc(spec)?;
            let s = Sampler::new(&numeric, &partition(mu)?, *eps)?;
            let samples = s.sample_many(*n, *seed)?;
            if json {
                print_json(&json!(samples));
            } else {
                use std::io::Write;
                let mut out = std::io::BufWriter::new(std::io::stdout().lock());
                for l in &samples {
                    writeln!(out, "{}", display_partition(l))
                        .map_err(|e| IqwError::Parse(e.to_string()))?;
                }
            }
        }
    }
    Ok(true)
}

fn display_partition(l: &Partition) -> String {
    if l.is_empty() {
        "∅".into()
    } else {
        l.to_string()
    }
}
