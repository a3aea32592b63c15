//! Structure constants and change-of-basis coefficients, computed exactly by
//! triangular elimination against lifted family polynomials.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::IqwError;
use crate::families::{in_vars, FamilyId, Params, Standard};
use crate::partitions::{
    b_hl, d_whit, eta, interlaces, is_rook_strip, partitions_in_box, strip_successors, Partition,
};
use crate::polyspace::{ExpBasis, Expansion, SymPoly};
use crate::scalar::{Field, RatQ, Ring};

type Key = (FamilyId, Partition, usize, usize);

fn cache() -> &'static Mutex<HashMap<Key, Arc<SymPoly<RatQ>>>> {
    static C: OnceLock<Mutex<HashMap<Key, Arc<SymPoly<RatQ>>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `f_kappa` in `n` variables with formal parameter, up to total degree `max_deg`.
pub fn family_poly(
    family: FamilyId,
    kappa: &Partition,
    n: usize,
    max_deg: usize,
) -> Arc<SymPoly<RatQ>> {
    let key = (family, kappa.clone(), n, max_deg);
    if let Some(v) = cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let src = Standard(Params::formal());
    let v = Arc::new(in_vars(
        &src,
        family,
        kappa,
        &Partition::empty(),
        n,
        max_deg,
    ));
    cache().lock().unwrap().insert(key, v.clone());
    v
}

/// Full polynomial `f_kappa(x_1..x_n)`.
fn full_poly(family: FamilyId, kappa: &Partition, n: usize) -> Arc<SymPoly<RatQ>> {
    let deg = match family {
        FamilyId::F => n * kappa.first(),
        _ => kappa.size(),
    };
    family_poly(family, kappa, n, deg)
}

/// Expansion of a homogeneous symmetric polynomial in `n` variables in a
/// unitriangular-type homogeneous basis (`W` or HL `Q`), by lexicographic elimination.
fn expand_homogeneous(
    f: &SymPoly<RatQ>,
    basis: FamilyId,
    n: usize,
) -> Result<Vec<(Partition, RatQ)>, IqwError> {
    let mut r = f.clone();
    let mut out = Vec::new();
    while let Some((kappa, c)) = r
        .coeffs()
        .iter()
        .next()
        .map(|(k, c)| (k.clone(), c.clone()))
    {
        let b = full_poly(basis, &kappa, n);
        let lead = b.coeff(&kappa);
        if lead.is_zero() {
            return Err(IqwError::Mismatch(format!(
                "{basis}_{kappa} has no leading term in {n} variables"
            )));
        }
        let coef = &c / &lead;
        r.sub_scaled(&coef, &b);
        if r.coeff(&kappa) != RatQ::zero() {
            return Err(IqwError::Mismatch(format!(
                "elimination stalled at {kappa}"
            )));
        }
        out.push((kappa, coef));
    }
    Ok(out)
}

/// `W`-expansion of a homogeneous symmetric polynomial given in monomial coordinates.
pub fn w_expand_homogeneous(f: &SymPoly<RatQ>) -> Result<Expansion, IqwError> {
    let d = f.max_degree().unwrap_or(0);
    if f.min_degree().unwrap_or(0) != d {
        return Err(IqwError::InvalidArgument("input is not homogeneous".into()));
    }
    let n = f.n_vars();
    let mut e = Expansion::new(ExpBasis::W, None);
    for (k, c) in expand_homogeneous(f, FamilyId::W, n)? {
        e.add(k, c);
    }
    Ok(e)
}

/// HL `Q`-expansion of a homogeneous symmetric polynomial.
pub fn hl_expand_homogeneous(f: &SymPoly<RatQ>) -> Result<Expansion, IqwError> {
    let n = f.n_vars();
    let mut e = Expansion::new(ExpBasis::HallLittlewoodQ, None);
    for (k, c) in expand_homogeneous(f, FamilyId::HallLittlewoodQ, n)? {
        e.add(k, c);
    }
    Ok(e)
}

/// Repeatedly strips the lowest (or highest) degree component.
fn eliminate(
    mut r: SymPoly<RatQ>,
    n: usize,
    top_down: bool,
    truncation: Option<usize>,
    lead_basis: FamilyId,
    element: &dyn Fn(&Partition) -> Arc<SymPoly<RatQ>>,
    check: &dyn Fn(&Partition) -> Result<(), IqwError>,
) -> Result<BTreeMap<Partition, RatQ>, IqwError> {
    let mut out: BTreeMap<Partition, RatQ> = BTreeMap::new();
    loop {
        let d = if top_down {
            r.max_degree()
        } else {
            r.min_degree()
        };
        let Some(d) = d else { break };
        if truncation.is_some_and(|t| d > t) {
            break;
        }
        let comp = r.homogeneous_component(d);
        for (kappa, c) in expand_homogeneous(&comp, lead_basis, n)? {
            check(&kappa)?;
            let el = element(&kappa);
            let scale = &full_poly(lead_basis, &kappa, n).coeff(&kappa) / &el.coeff(&kappa);
            let c = &c * &scale;
            r.sub_scaled(&c, &el);
            let v = out.remove(&kappa).map_or(c.clone(), |a| &a + &c);
            if !v.is_zero() {
                out.insert(kappa, v);
            }
        }
        let left = r.homogeneous_component(d);
        if !left.is_zero() {
            return Err(IqwError::Mismatch(format!(
                "degree {d} component survived elimination"
            )));
        }
        if let Some(t) = truncation {
            r = r.truncate(t);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductAlgo {
    /// Dual Cauchy reading: top-down elimination of `Ftilde_{lambda/nu}` in `l(mu)` variables.
    Dual,
    /// Bottom-up elimination of `F_mu F_nu` in `l(mu)+l(nu)` variables.
    Direct,
}

/// Support bound for `F_mu F_nu`: `l(lambda) <= l(mu)+l(nu)` and `lambda_1 <= mu_1+nu_1`.
pub fn product_box(mu: &Partition, nu: &Partition) -> (usize, usize) {
    (mu.len() + nu.len(), mu.first() + nu.first())
}

/// `F_mu F_nu = sum_lambda c^lambda_{mu,nu} F_lambda`.
pub fn product_f(mu: &Partition, nu: &Partition, algo: ProductAlgo) -> Result<Expansion, IqwError> {
    match algo {
        ProductAlgo::Direct => product_f_direct(mu, nu),
        ProductAlgo::Dual => product_f_dual(mu, nu),
    }
}

fn product_f_direct(mu: &Partition, nu: &Partition) -> Result<Expansion, IqwError> {
    let (rows, cols) = product_box(mu, nu);
    let n = rows.max(1);
    let a = full_poly(FamilyId::F, mu, n);
    let b = full_poly(FamilyId::F, nu, n);
    let prod = a.mul(&b, None);
    let check = |k: &Partition| {
        if k.len() > rows || k.first() > cols {
            Err(IqwError::BoundViolation(format!(
                "F_{k} in F_{mu} F_{nu} lies outside the {rows}x{cols} box"
            )))
        } else {
            Ok(())
        }
    };
    let elem = |k: &Partition| full_poly(FamilyId::F, k, n);
    let m = eliminate(prod, n, false, None, FamilyId::W, &elem, &check)?;
    Ok(Expansion::from_map(ExpBasis::F, None, m))
}

/// `Ftilde_{lambda/nu}` in `Ftilde` coordinates, by top-down elimination.
pub fn ftilde_skew_expand(
    lambda: &Partition,
    nu: &Partition,
) -> Result<BTreeMap<Partition, RatQ>, IqwError> {
    ftilde_skew_expand_in(lambda, nu, lambda.size().saturating_sub(nu.size()).max(1))
}

/// As [`ftilde_skew_expand`], eliminating in `m` variables; only terms with `l(kappa) <= m` are seen.
pub fn ftilde_skew_expand_in(
    lambda: &Partition,
    nu: &Partition,
    m: usize,
) -> Result<BTreeMap<Partition, RatQ>, IqwError> {
    if !lambda.contains(nu) {
        return Ok(BTreeMap::new());
    }
    let src = Standard(Params::formal());
    let g = in_vars(
        &src,
        FamilyId::Ftilde,
        lambda,
        nu,
        m,
        lambda.size() - nu.size(),
    );
    let elem = |k: &Partition| full_poly(FamilyId::Ftilde, k, m);
    eliminate(g, m, true, None, FamilyId::W, &elem, &|_| Ok(()))
}

fn product_f_dual(mu: &Partition, nu: &Partition) -> Result<Expansion, IqwError> {
    let (rows, cols) = product_box(mu, nu);
    let target = mu.size() + nu.size();
    let cands: Vec<Partition> = partitions_in_box(rows, cols)
        .into_iter()
        .filter(|l| l.contains(nu) && l.size() >= target)
        .collect();
    let vals: Result<Vec<(Partition, RatQ)>, IqwError> = cands
        .par_iter()
        .map(|l| {
            let m = ftilde_skew_expand_in(l, nu, mu.len().max(1))?;
            Ok((l.clone(), m.get(mu).cloned().unwrap_or_else(RatQ::zero)))
        })
        .collect();
    let mut e = Expansion::new(ExpBasis::F, None);
    for (l, c) in vals? {
        e.add(l, c);
    }
    Ok(e)
}

/// `F_box F_nu` by the closed rook-strip formula.
pub fn pieri_f(nu: &Partition) -> Expansion {
    let q = RatQ::q();
    let omq = &RatQ::one() - &q;
    let mut e = Expansion::new(ExpBasis::F, None);
    for l in strip_successors(nu, nu.len() + 1) {
        let k = l.size() - nu.size();
        if k == 0 || !is_rook_strip(nu, &l) {
            continue;
        }
        let sign = if k % 2 == 1 {
            RatQ::one()
        } else {
            -RatQ::one()
        };
        let c = &(&sign * &eta(&l, nu, &q)) * &omq.pow(k);
        e.add(l, c);
    }
    e
}

/// `W_(i) W_nu / (q;q)_i = sum_{nu ≺ lambda, |lambda/nu| = i} d_{lambda/nu} W_lambda`.
pub fn pieri_w(i: usize, nu: &Partition) -> Expansion {
    let q = RatQ::q();
    let mut e = Expansion::new(ExpBasis::W, None);
    for l in strip_successors(nu, i) {
        if l.size() - nu.size() == i && interlaces(nu, &l) {
            e.add(l.clone(), d_whit(&l, nu, &q));
        }
    }
    e
}

/// `j_mu j_nu = sum_lambda d^lambda_{mu,nu} j_lambda`.
pub fn product_j(mu: &Partition, nu: &Partition) -> Result<Expansion, IqwError> {
    let n = (mu.size() + nu.size()).max(1);
    let a = full_poly(FamilyId::InhomHL, mu, n);
    let b = full_poly(FamilyId::InhomHL, nu, n);
    let prod = a.mul(&b, None);
    let elem = |k: &Partition| full_poly(FamilyId::InhomHL, k, n);
    let m = eliminate(
        prod,
        n,
        true,
        None,
        FamilyId::HallLittlewoodQ,
        &elem,
        &|_| Ok(()),
    )?;
    Ok(Expansion::from_map(ExpBasis::InhomHallLittlewood, None, m))
}

/// `F_{lambda/mu} = sum_nu c F_nu`, using the `j` structure constants on conjugates.
pub fn skew_f_expand(lambda: &Partition, mu: &Partition) -> Result<Expansion, IqwError> {
    let mut e = Expansion::new(ExpBasis::F, None);
    if !lambda.contains(mu) {
        return Ok(e);
    }
    let q = RatQ::q();
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let lo = lambda.size() - mu.size();
    let cands: Vec<Partition> = crate::partitions::interval(&Partition::empty(), lambda)
        .into_iter()
        .filter(|v| v.size() >= lo)
        .collect();
    let vals: Result<Vec<(Partition, RatQ)>, IqwError> = cands
        .par_iter()
        .map(|v| {
            let vc = v.conjugate();
            let d = product_j(&mc, &vc)?.get(&lc);
            let c = &(&b_hl(&lc, &q) / &(&b_hl(&mc, &q) * &b_hl(&vc, &q))) * &d;
            Ok((v.clone(), c))
        })
        .collect();
    for (v, c) in vals? {
        e.add(v, c);
    }
    Ok(e)
}

/// Same expansion by bottom-up elimination of `F_{lambda/mu}` in `l(lambda)` variables.
pub fn skew_f_expand_direct(lambda: &Partition, mu: &Partition) -> Result<Expansion, IqwError> {
    let n = lambda.len().max(1);
    let src = Standard(Params::formal());
    let f = in_vars(&src, FamilyId::F, lambda, mu, n, n * lambda.first());
    let elem = |k: &Partition| full_poly(FamilyId::F, k, n);
    let m = eliminate(f, n, false, None, FamilyId::W, &elem, &|_| Ok(()))?;
    Ok(Expansion::from_map(ExpBasis::F, None, m))
}

/// `W_lambda = sum_mu a_{lambda,mu} F_mu`, truncated at degree `max_deg`.
pub fn a_expand(lambda: &Partition, max_deg: usize) -> Result<Expansion, IqwError> {
    let n = max_deg.max(1);
    let w = family_poly(FamilyId::W, lambda, n, max_deg);
    let elem = |k: &Partition| family_poly(FamilyId::F, k, n, max_deg);
    let m = eliminate(
        (*w).clone(),
        n,
        false,
        Some(max_deg),
        FamilyId::W,
        &elem,
        &|_| Ok(()),
    )?;
    Ok(Expansion::from_map(ExpBasis::F, Some(max_deg), m))
}

/// `F_lambda = sum_mu b_{lambda,mu} W_mu`, truncated at degree `max_deg`.
pub fn b_expand(lambda: &Partition, max_deg: usize) -> Result<Expansion, IqwError> {
    let n = max_deg.max(1);
    let f = family_poly(FamilyId::F, lambda, n, max_deg);
    let mut e = Expansion::new(ExpBasis::W, Some(max_deg));
    for d in 0..=max_deg {
        let comp = f.homogeneous_component(d);
        for (k, c) in expand_homogeneous(&comp, FamilyId::W, n)? {
            e.add(k, c);
        }
    }
    Ok(e)
}

/// Binomial coefficient as a scalar.
pub fn binomial<K: Field>(n: usize, k: usize) -> K {
    let mut acc = K::one();
    for i in 0..k {
        acc = acc * K::from_i64((n - i) as i64) / K::from_i64((i + 1) as i64);
    }
    acc
}

#[cfg(test)]
mod tests;
