use std::fmt::Display;

use num_traits::{One, Zero};

use super::{compare, compare_maps, placed, timed, xy_names, Status, VerifyReport};
use crate::error::IqwError;
use crate::families::{b_hl_in, lift, FamilyId, Params, Standard, WeightSource};
use crate::partitions::{partitions_up_to, Partition};
use crate::polyspace::{omega, MultiPoly, OmegaMode};
use crate::scalar::{qfact, qpoch, Field, RatQ, RatQT};

/// `lambda ⊇ lo` with `|lambda| <= max_size`, `l(lambda) <= rows` and `lambda_1 <= cols`.
fn candidates(lo: &Partition, max_size: usize, rows: usize, cols: usize) -> Vec<Partition> {
    partitions_up_to(max_size)
        .into_iter()
        .filter(|l| l.contains(lo) && l.len() <= rows && l.first() <= cols)
        .collect()
}

fn below(mu: &Partition, nu: &Partition) -> Vec<Partition> {
    let m = mu.intersection(nu);
    partitions_up_to(m.size())
        .into_iter()
        .filter(|l| m.contains(l))
        .collect()
}

/// Product over `i < n`, `j < m` of the series `sum_k c_k (x_i y_j)^k`, truncated at x-degree `max`;
/// `c_k` may itself depend on `y_j` through `factor`.
fn kernel<K: Field>(
    n: usize,
    m: usize,
    max: usize,
    factor: &dyn Fn(usize, usize) -> MultiPoly<K>,
) -> MultiPoly<K> {
    let total = n + m;
    let mut acc = MultiPoly::one(total);
    for i in 0..n {
        for j in 0..m {
            let mut f = MultiPoly::zero(total);
            for k in 0..=max {
                let mut e = vec![0u16; total];
                e[i] = k as u16;
                f = f.add(&MultiPoly::monomial(e, K::one()).mul(&factor(k, n + j)));
            }
            acc = acc.mul_trunc(&f, 0..n, max);
        }
    }
    acc
}

fn params_list(
    mu: &Partition,
    nu: &Partition,
    n: usize,
    m: usize,
    deg: (&'static str, usize),
) -> Vec<(&'static str, String)> {
    vec![
        ("mu", format!("({mu})")),
        ("nu", format!("({nu})")),
        ("n", n.to_string()),
        ("m", m.to_string()),
        (deg.0, deg.1.to_string()),
    ]
}

fn check_deg(d: usize, mu: &Partition, nu: &Partition) -> Result<(), IqwError> {
    if d < mu.size().max(nu.size()) {
        return Err(IqwError::InvalidArgument(format!(
            "truncation degree {d} below |mu|, |nu| = {}, {}",
            mu.size(),
            nu.size()
        )));
    }
    Ok(())
}

/// Skew Cauchy identity for `F` and `Ftilde`, truncated at x-degree `dx`.
pub fn verify_cauchy_f_with<K: Field + Display>(
    src: &dyn WeightSource<K>,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    m: usize,
    dx: usize,
) -> Result<VerifyReport, IqwError> {
    check_deg(dx, mu, nu)?;
    timed("cauchy-F", &params_list(mu, nu, n, m, ("Dx", dx)), || {
        let total = n + m;
        let q = src.params().q.clone();
        let xt = || Some((0..n, dx));
        let mut lhs = MultiPoly::zero(total);
        for l in candidates(
            &mu.union(nu),
            mu.size() + dx,
            (mu.len() + n).min(nu.len() + m),
            usize::MAX,
        ) {
            let f = placed(src, FamilyId::F, &l, mu, n, total, 0, xt());
            if f.is_zero() {
                continue;
            }
            let g = placed(src, FamilyId::Ftilde, &l, nu, m, total, n, None);
            lhs = lhs.add(&f.mul_trunc(&g, 0..n, dx));
        }
        let factor = |k: usize, y: usize| {
            // (1/y; q)_k (x y)^k / (q;q)_k, written as x^k prod_{l<k} (y - q^l) / (q;q)_k
            let mut p = MultiPoly::constant(total, K::one() / qfact(&q, k));
            for l in 0..k {
                p = p.mul(&MultiPoly::var(total, y).sub(&MultiPoly::constant(total, q.pow(l))));
            }
            p
        };
        let ker = kernel(n, m, dx, &factor);
        let mut inner = MultiPoly::zero(total);
        for l in below(mu, nu) {
            let a = placed(src, FamilyId::Ftilde, mu, &l, m, total, n, None);
            let b = placed(src, FamilyId::F, nu, &l, n, total, 0, xt());
            inner = inner.add(&a.mul_trunc(&b, 0..n, dx));
        }
        let rhs = ker.mul_trunc(&inner, 0..n, dx);
        Ok(compare(&lhs, &rhs, &xy_names(n)))
    })
}

pub fn verify_cauchy_f(
    mu: &Partition,
    nu: &Partition,
    n: usize,
    m: usize,
    dx: usize,
) -> Result<VerifyReport, IqwError> {
    verify_cauchy_f_with(&Standard(Params::formal()), mu, nu, n, m, dx)
}

/// Cauchy identity for `j` and `J` with b-ratios, truncated at y-degree `dy`.
pub fn verify_cauchy_hl_with<K: Field + Display>(
    src: &dyn WeightSource<K>,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    m: usize,
    dy: usize,
) -> Result<VerifyReport, IqwError> {
    check_deg(dy, mu, nu)?;
    timed("cauchy-HL", &params_list(mu, nu, n, m, ("Dy", dy)), || {
        let total = n + m;
        let p = src.params();
        let t = p.t.clone();
        let yt = || Some((n..total, dy));
        let b = |l: &Partition| b_hl_in(l, p);
        let mut lhs = MultiPoly::zero(total);
        for l in candidates(
            &mu.union(nu),
            nu.size() + dy,
            (mu.len() + n).min(nu.len() + m),
            usize::MAX,
        ) {
            let g = placed(src, FamilyId::DualInhomHL, &l, nu, m, total, n, yt());
            if g.is_zero() {
                continue;
            }
            let f = placed(src, FamilyId::InhomHL, &l, mu, n, total, 0, None);
            lhs = lhs.add(&f.mul_trunc(&g, n..total, dy).scale(&(b(mu) / b(&l))));
        }
        let factor = |k: usize, y: usize| {
            let c = if k == 0 {
                K::one()
            } else {
                K::one() - t.clone()
            };
            let mut e = vec![0u16; total];
            e[y] = k as u16;
            MultiPoly::monomial(e, c)
        };
        // the kernel is symmetric in x and y, so truncating its x-degree at dy bounds the y-degree too
        let ker = kernel(n, m, dy, &factor);
        let mut inner = MultiPoly::zero(total);
        for l in below(mu, nu) {
            let f = placed(src, FamilyId::InhomHL, nu, &l, n, total, 0, None);
            let g = placed(src, FamilyId::DualInhomHL, mu, &l, m, total, n, yt());
            inner = inner.add(&f.mul_trunc(&g, n..total, dy).scale(&(b(&l) / b(nu))));
        }
        let rhs = ker.mul_trunc(&inner, n..total, dy);
        Ok(compare(&lhs, &rhs, &xy_names(n)))
    })
}

pub fn verify_cauchy_hl(
    mu: &Partition,
    nu: &Partition,
    n: usize,
    m: usize,
    dy: usize,
) -> Result<VerifyReport, IqwError> {
    verify_cauchy_hl_with(&Standard(Params::formal()), mu, nu, n, m, dy)
}

/// The one-variable computation: `j_k = (1-t) x (1+x)^{k-1}`, `J_k = (1-t) (y/(1+y))^k`
/// and `1 + sum_k j_k J_k / (1-t) = (1 - t x y)/(1 - x y)`.
pub fn hl_single_variable(dy: usize) -> Result<VerifyReport, IqwError> {
    timed(
        "cauchy-HL single variable",
        &[("Dy", dy.to_string())],
        || {
            let src = Standard(Params::formal());
            let t = RatQ::q();
            let one = RatQ::one();
            let omt = &one - &t;
            let x = MultiPoly::<RatQ>::var(2, 0);
            let y = MultiPoly::<RatQ>::var(2, 1);
            let c = |a: RatQ| MultiPoly::constant(2, a);
            let trunc = Some((1..2, dy));
            for k in 1..=dy {
                let row = Partition::row(k);
                let j = placed(
                    &src,
                    FamilyId::InhomHL,
                    &row,
                    &Partition::empty(),
                    1,
                    2,
                    0,
                    None,
                );
                let mut want = x.scale(&omt);
                for _ in 1..k {
                    want = want.mul(&x.add(&c(one.clone())));
                }
                if let s @ Status::Fail { .. } = compare(&j, &want, &xy_names(1)) {
                    return Ok(s);
                }
                let jj = placed(
                    &src,
                    FamilyId::DualInhomHL,
                    &row,
                    &Partition::empty(),
                    1,
                    2,
                    1,
                    trunc.clone(),
                );
                // y/(1+y) = sum_{i>=1} (-1)^{i-1} y^i
                let mut r = MultiPoly::zero(2);
                let mut yi = y.clone();
                for i in 1..=dy {
                    r = r.add(&yi.scale(&RatQ::from_int(if i % 2 == 1 { 1 } else { -1 })));
                    yi = yi.mul(&y);
                }
                let mut want = c(omt.clone());
                for _ in 0..k {
                    want = want.mul_trunc(&r, 1..2, dy);
                }
                if let s @ Status::Fail { .. } = compare(&jj, &want, &xy_names(1)) {
                    return Ok(s);
                }
            }
            let r = verify_cauchy_hl(&Partition::empty(), &Partition::empty(), 1, 1, dy)?;
            Ok(r.status)
        },
    )
}

/// Dual Cauchy identity between `j` in `m` variables `y` and `F` on conjugate shapes in `n`
/// variables `x`, truncated at x-degree `d`. `fsrc` supplies `F`, `jsrc` supplies `j`.
pub fn verify_dual_cauchy_with<K: Field + Display>(
    fsrc: &dyn WeightSource<K>,
    jsrc: &dyn WeightSource<K>,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    m: usize,
    d: usize,
) -> Result<VerifyReport, IqwError> {
    check_deg(d, mu, nu)?;
    timed("dual-cauchy", &params_list(mu, nu, n, m, ("D", d)), || {
        let total = n + m;
        let p = jsrc.params();
        let b = |l: &Partition| b_hl_in(l, p);
        let xt = || Some((0..n, d));
        let mut lhs = MultiPoly::zero(total);
        for l in candidates(&mu.union(nu), nu.size() + d, mu.len() + m, nu.first() + n) {
            let f = placed(
                fsrc,
                FamilyId::F,
                &l.conjugate(),
                &nu.conjugate(),
                n,
                total,
                0,
                xt(),
            );
            if f.is_zero() {
                continue;
            }
            let g = placed(jsrc, FamilyId::InhomHL, &l, mu, m, total, n, None);
            lhs = lhs.add(&f.mul_trunc(&g, 0..n, d).scale(&(b(mu) / b(&l))));
        }
        let factor = |k: usize, y: usize| match k {
            0 => MultiPoly::one(total),
            1 => MultiPoly::var(total, y),
            _ => MultiPoly::zero(total),
        };
        let ker = kernel(n, m, d, &factor);
        let mut inner = MultiPoly::zero(total);
        for l in below(mu, nu) {
            let g = placed(jsrc, FamilyId::InhomHL, nu, &l, m, total, n, None);
            let f = placed(
                fsrc,
                FamilyId::F,
                &mu.conjugate(),
                &l.conjugate(),
                n,
                total,
                0,
                xt(),
            );
            inner = inner.add(&f.mul_trunc(&g, 0..n, d).scale(&(b(&l) / b(nu))));
        }
        let rhs = ker.mul_trunc(&inner, 0..n, d);
        Ok(compare(&lhs, &rhs, &xy_names(n)))
    })
}

pub fn verify_dual_cauchy(
    mu: &Partition,
    nu: &Partition,
    n: usize,
    m: usize,
    d: usize,
) -> Result<VerifyReport, IqwError> {
    let src = Standard(Params::formal());
    verify_dual_cauchy_with(&src, &src, mu, nu, n, m, d)
}

/// Runs the dual Cauchy identity with `F` taking the parameter `t` of `j`, and with an
/// independent parameter `q`.
pub fn dual_reading_experiment(
    mu: &Partition,
    nu: &Partition,
    n: usize,
    m: usize,
    d: usize,
) -> Result<Vec<VerifyReport>, IqwError> {
    let jsrc = Standard(Params::formal_qt());
    let shared = Standard(Params::new(RatQT::t(), RatQT::t()));
    let mut a = verify_dual_cauchy_with(&shared, &jsrc, mu, nu, n, m, d)?;
    a.identity = "dual-cauchy [F in parameter t]".into();
    let mut b = verify_dual_cauchy_with(&jsrc, &jsrc, mu, nu, n, m, d)?;
    b.identity = "dual-cauchy [F in independent q]".into();
    Ok(vec![a, b])
}

/// `omega(F_{lambda/mu}) = J_{lambda'/mu'}` through degree `d`, with the given omega mode.
pub fn verify_omega_f_with(
    mode: OmegaMode,
    lambda: &Partition,
    mu: &Partition,
    d: usize,
) -> Result<VerifyReport, IqwError> {
    if d < lambda.size() {
        return Err(IqwError::InvalidArgument(format!(
            "degree {d} below |lambda| = {}",
            lambda.size()
        )));
    }
    let params = vec![
        ("lambda", format!("({lambda})")),
        ("mu", format!("({mu})")),
        ("D", d.to_string()),
    ];
    timed("omega-F", &params, || {
        let src = Standard(Params::formal());
        let q = RatQ::q();
        let f = lift(&src, FamilyId::F, lambda, mu, d)?;
        let lhs = omega(&f, mode, &q, &q);
        let rhs = lift(
            &src,
            FamilyId::DualInhomHL,
            &lambda.conjugate(),
            &mu.conjugate(),
            d,
        )?;
        Ok(compare_maps(lhs.coeffs(), rhs.coeffs()))
    })
}

pub fn verify_omega_f(
    lambda: &Partition,
    mu: &Partition,
    d: usize,
) -> Result<VerifyReport, IqwError> {
    verify_omega_f_with(OmegaMode::QZero, lambda, mu, d)
}

/// Homogeneous layer: `omega(W_{lambda/mu}) = Q_{lambda'/mu'}`.
pub fn verify_omega_lowest(lambda: &Partition, mu: &Partition) -> Result<VerifyReport, IqwError> {
    let params = vec![("lambda", format!("({lambda})")), ("mu", format!("({mu})"))];
    timed("omega-W", &params, || {
        if !lambda.contains(mu) {
            return Ok(Status::ExactPass);
        }
        let d = lambda.size() - mu.size();
        let src = Standard(Params::formal());
        let q = RatQ::q();
        let w = lift(&src, FamilyId::W, lambda, mu, d)?;
        let lhs = omega(&w, OmegaMode::QZero, &q, &q);
        let rhs = lift(
            &src,
            FamilyId::HallLittlewoodQ,
            &lambda.conjugate(),
            &mu.conjugate(),
            d,
        )?;
        Ok(compare_maps(lhs.coeffs(), rhs.coeffs()))
    })
}

/// `sum_lambda P_lambda(x) Q_lambda(y)` against `prod (t x y; q)_inf / (x y; q)_inf` in two plus two
/// variables through x-degree `d`; `schur` replaces the kernel by `prod 1/(1 - x y)`.
pub fn verify_macd_cauchy_at<K: Field + Display>(
    p: &Params<K>,
    d: usize,
    schur: bool,
    name: &str,
) -> Result<VerifyReport, IqwError> {
    timed(name, &[("D", d.to_string())], || {
        let (n, m) = (2, 2);
        let total = n + m;
        let src = Standard(p.clone());
        let mut lhs = MultiPoly::zero(total);
        for l in candidates(&Partition::empty(), d, n.min(m), usize::MAX) {
            let a = placed(
                &src,
                FamilyId::MacdonaldP,
                &l,
                &Partition::empty(),
                n,
                total,
                0,
                None,
            );
            let b = placed(
                &src,
                FamilyId::MacdonaldQ,
                &l,
                &Partition::empty(),
                m,
                total,
                n,
                None,
            );
            lhs = lhs.add(&a.mul_trunc(&b, 0..n, d));
        }
        let factor = |k: usize, y: usize| {
            let c = if schur {
                K::one()
            } else {
                qpoch(&p.t, &p.q, k) / qpoch(&p.q, &p.q, k)
            };
            let mut e = vec![0u16; total];
            e[y] = k as u16;
            MultiPoly::monomial(e, c)
        };
        let rhs = kernel(n, m, d, &factor);
        Ok(compare(&lhs, &rhs, &xy_names(n)))
    })
}

/// The two-parameter check with its `t = q` and `t = 0` collapses.
pub fn verify_macd_cauchy(d: usize) -> Result<Vec<VerifyReport>, IqwError> {
    Ok(vec![
        verify_macd_cauchy_at(&Params::formal_qt(), d, false, "macdonald-cauchy")?,
        verify_macd_cauchy_at(
            &Params::formal(),
            d,
            true,
            "macdonald-cauchy [t=q, Schur kernel]",
        )?,
        verify_macd_cauchy_at(
            &Params::new(RatQ::q(), RatQ::zero()),
            d,
            false,
            "macdonald-cauchy [t=0]",
        )?,
    ])
}
