//! Scalar statistics of partitions and skew shapes.

use std::collections::BTreeSet;

use super::{interlaces, Partition};
use crate::scalar::{qfact, Field, Ring};

/// `b_lambda(t) = prod_i (t;t)_{m_i(lambda)}`
pub fn b_hl<K: Ring>(lambda: &Partition, t: &K) -> K {
    let mut acc = K::one();
    let mut i = 0;
    let p = lambda.parts();
    while i < p.len() {
        let mut j = i;
        while j < p.len() && p[j] == p[i] {
            j += 1;
        }
        acc = acc * qfact(t, j - i);
        i = j;
    }
    acc
}

/// `prod (1 - t^{m_i(lambda)})` over `i` with `m_i(lambda) = m_i(mu) + 1`.
pub fn kappa<K: Ring>(lambda: &Partition, mu: &Partition, t: &K) -> K {
    let mut acc = K::one();
    let vals: BTreeSet<usize> = lambda.parts().iter().copied().collect();
    for i in vals {
        let m = lambda.multiplicity(i);
        if m == mu.multiplicity(i) + 1 {
            acc = acc * (K::one() - t.pow(m));
        }
    }
    acc
}

/// Row and column statistics of a skew shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewStats {
    /// Nonempty rows of `lambda/mu`.
    pub rows: usize,
    /// Maximal runs of consecutive nonempty columns of `lambda/mu`.
    pub runs: usize,
    /// Columns `i` with columns `i` and `i+1` of `lambda/mu` nonempty.
    pub f_set: Vec<usize>,
    /// Columns `i` with columns `i` and `i+1` empty and `m_i(lambda) != 0`.
    pub e_set: Vec<usize>,
    /// Nonempty rows of `mu/(lambda_2, lambda_3, ...)`.
    pub r_tilde: usize,
}

pub fn skew_stats(lambda: &Partition, mu: &Partition) -> SkewStats {
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let col_nonempty = |i: usize| i >= 1 && lc.get(i - 1) > mc.get(i - 1);
    let rows = (0..lambda.len())
        .filter(|&i| lambda.get(i) > mu.get(i))
        .count();
    let mut f_set = Vec::new();
    let mut e_set = Vec::new();
    for i in 1..=lambda.first() {
        if col_nonempty(i) && col_nonempty(i + 1) {
            f_set.push(i);
        }
        if !col_nonempty(i) && !col_nonempty(i + 1) && lambda.multiplicity(i) != 0 {
            e_set.push(i);
        }
    }
    let r_tilde = (0..mu.len())
        .filter(|&i| mu.get(i) > lambda.get(i + 1))
        .count();
    let runs = (1..=lambda.first())
        .filter(|&i| col_nonempty(i) && !col_nonempty(i - 1))
        .count();
    SkewStats {
        rows,
        runs,
        f_set,
        e_set,
        r_tilde,
    }
}

/// Pieri coefficient
/// `prod_j (q;q)_{nu_j - nu_{j+1}} / ((q;q)_{lambda_j - nu_j} (q;q)_{nu_j - lambda_{j+1}})`,
/// zero unless `nu ≺ lambda`.
pub fn eta<K: Field>(lambda: &Partition, nu: &Partition, q: &K) -> K {
    if !interlaces(nu, lambda) {
        return K::zero();
    }
    let mut num = K::one();
    let mut den = K::one();
    for j in 0..lambda.len() {
        num = num * qfact(q, nu.get(j) - nu.get(j + 1));
        den = den * qfact(q, lambda.get(j) - nu.get(j)) * qfact(q, nu.get(j) - lambda.get(j + 1));
    }
    num / den
}

/// Coefficient in the one-row Pieri rule for `W`; same product as [`eta`].
pub fn d_whit<K: Field>(lambda: &Partition, nu: &Partition, q: &K) -> K {
    eta(lambda, nu, q)
}

/// `b_lambda(i,j)` for a zero based cell; one outside the diagram.
fn b_cell<K: Field>(lambda: &Partition, i: usize, j: usize, q: &K, t: &K) -> K {
    if j >= lambda.get(i) {
        return K::one();
    }
    let (a, l) = lambda.arm_leg(i, j);
    let num = K::one() - q.pow(a) * t.pow(l + 1);
    let den = K::one() - q.pow(a + 1) * t.pow(l);
    num / den
}

/// Macdonald `b_lambda(q,t)`.
pub fn b_macdonald<K: Field>(lambda: &Partition, q: &K, t: &K) -> K {
    let mut acc = K::one();
    for (i, j) in lambda.cells() {
        acc = acc * b_cell(lambda, i, j, q, t);
    }
    acc
}

fn strip_rows_cols(lambda: &Partition, mu: &Partition) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let mut rows = BTreeSet::new();
    let mut cols = BTreeSet::new();
    for i in 0..lambda.len() {
        for j in mu.get(i)..lambda.get(i) {
            rows.insert(i);
            cols.insert(j);
        }
    }
    (rows, cols)
}

/// One-variable coefficient of the Macdonald `P` branching; zero unless `mu ≺ lambda`.
pub fn psi_macdonald<K: Field>(lambda: &Partition, mu: &Partition, q: &K, t: &K) -> K {
    if !interlaces(mu, lambda) {
        return K::zero();
    }
    let (rows, cols) = strip_rows_cols(lambda, mu);
    let mut acc = K::one();
    for &i in &rows {
        for j in 0..lambda.get(i) {
            if !cols.contains(&j) {
                acc = acc * b_cell(mu, i, j, q, t) / b_cell(lambda, i, j, q, t);
            }
        }
    }
    acc
}

/// One-variable coefficient of the Macdonald `Q` branching; zero unless `mu ≺ lambda`.
pub fn psibar_macdonald<K: Field>(lambda: &Partition, mu: &Partition, q: &K, t: &K) -> K {
    if !interlaces(mu, lambda) {
        return K::zero();
    }
    let (_, cols) = strip_rows_cols(lambda, mu);
    let mut acc = K::one();
    for &j in &cols {
        for i in 0..lambda.len() {
            if lambda.get(i) > j {
                acc = acc * b_cell(lambda, i, j, q, t) / b_cell(mu, i, j, q, t);
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, BigRat, RatQ, RatQT};
    use num_traits::{One, Zero};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q() -> RatQ {
        RatQ::q()
    }

    // Direct product oracle for (q;q)_n.
    fn qf(n: usize) -> RatQ {
        let mut a = RatQ::one();
        for i in 1..=n {
            a = &a * &(&RatQ::one() - &q().pow(i));
        }
        a
    }

    #[test]
    fn hall_littlewood_norms() {
        let one = RatQ::one();
        assert_eq!(
            b_hl(&p("1,1"), &q()),
            &(&one - &q()) * &(&one - &(&q() * &q()))
        );
        assert_eq!(b_hl(&p(""), &q()), one.clone());
        assert_eq!(b_hl(&p("2,1,1"), &q()), &qf(1) * &qf(2));
        assert_eq!(kappa(&p("1"), &p(""), &q()), &one - &q());
        assert_eq!(kappa(&p("1,1"), &p("1"), &q()), &one - &(&q() * &q()));
    }

    #[test]
    fn eta_values() {
        let one = RatQ::one();
        assert_eq!(eta(&p("2,1"), &p("2,1"), &q()), one.clone());
        assert_eq!(eta(&p("2"), &p("1"), &q()), &one / &(&one - &q()));
        assert_eq!(d_whit(&p("2,1"), &p("1,1"), &q()), &one / &(&one - &q()));
        assert!(eta(&p("2,2"), &p("1,1"), &q()).is_zero());
    }

    #[test]
    fn stats() {
        let s = skew_stats(&p("3"), &p(""));
        assert_eq!(s.rows, 1);
        assert_eq!(s.f_set, vec![1, 2]);
        let s = skew_stats(&p("2,1"), &p("1"));
        assert_eq!((s.rows, s.runs, s.f_set), (2, 1, vec![1]));
        let s = skew_stats(&p("1"), &p("1"));
        assert_eq!(s.e_set, vec![1]);
        assert_eq!(s.r_tilde, 1);
    }

    #[test]
    fn macdonald_coefficients() {
        let qq = RatQT::q();
        let t = RatQT::t();
        let one = RatQT::one();
        let l = p("2,1");
        assert_eq!(psi_macdonald(&l, &l, &qq, &t), one.clone());
        // P_{(1)/∅} = x, Q_{(1)/∅} = (1-t)/(1-q) x.
        assert_eq!(psi_macdonald(&p("1"), &p(""), &qq, &t), one.clone());
        let want = &(&one - &t) / &(&one - &qq);
        assert_eq!(psibar_macdonald(&p("1"), &p(""), &qq, &t), want);
        // Q = (b_lambda/b_mu) P.
        for (lam, mu) in [("2,1", "1"), ("2,1", "2"), ("3,1", "2"), ("2,2", "2,1")] {
            let (l, m) = (p(lam), p(mu));
            let lhs = psibar_macdonald(&l, &m, &qq, &t);
            let rhs = &(&b_macdonald(&l, &qq, &t) / &b_macdonald(&m, &qq, &t))
                * &psi_macdonald(&l, &m, &qq, &t);
            assert_eq!(lhs, rhs, "{lam}/{mu}");
        }
        // q = t gives one.
        let x = rat(1, 3);
        assert_eq!(
            psi_macdonald::<BigRat>(&p("3,1"), &p("2"), &x, &x),
            BigRat::one()
        );
    }
}
