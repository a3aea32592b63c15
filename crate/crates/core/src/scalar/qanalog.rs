use num_traits::One;

use super::field::{BigRat, Ring};
use super::poly::Poly;
use super::ratfunc::RatQ;
use crate::error::IqwError;

/// `(x; q)_k = (1 - x)(1 - xq)...(1 - xq^{k-1})`
pub fn qpoch<R: Ring>(x: &R, q: &R, k: usize) -> R {
    let mut acc = R::one();
    let mut xq = x.clone();
    for i in 0..k {
        acc = acc * (R::one() - xq.clone());
        if i + 1 < k {
            xq = xq * q.clone();
        }
    }
    acc
}

/// `(q; q)_k`
pub fn qfact<R: Ring>(q: &R, k: usize) -> R {
    qpoch(q, q, k)
}

/// Gaussian binomial as a polynomial in `q`; zero outside `0 <= k <= n`.
pub fn qbinom(n: i64, k: i64) -> Poly<BigRat> {
    if k < 0 || n < 0 || k > n {
        return Poly::from_coeffs(vec![]);
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    // Pascal recursion keeps everything integral.
    let mut row: Vec<Poly<BigRat>> = vec![Poly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let a = if j < row.len() && j < m {
                row[j].clone()
            } else {
                Poly::from_coeffs(vec![])
            };
            let b = if j >= 1 && j - 1 < row.len() {
                row[j - 1].shift(m - j)
            } else {
                Poly::from_coeffs(vec![])
            };
            next.push(&a + &b);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Gaussian binomial as an element of `RatQ`.
pub fn qbinom_ratq(n: i64, k: i64) -> RatQ {
    RatQ::from_poly(qbinom(n, k))
}

/// Numeric `(x; q)_infinity`, truncated once `|x q^i| < tol (1 - |q|)`.
pub fn qpoch_infinite(x: f64, q: f64, tol: f64) -> Result<f64, IqwError> {
    if q.is_nan() || q.abs() >= 1.0 {
        return Err(IqwError::Domain(format!(
            "(x;q)_inf needs |q| < 1, got q = {q}"
        )));
    }
    let mut acc = 1.0;
    let mut xq = x;
    let cut = tol * (1.0 - q.abs());
    loop {
        if xq.abs() < cut {
            break;
        }
        acc *= 1.0 - xq;
        xq *= q;
    }
    Ok(acc)
}

/// `1/(x;q)_infinity = sum_k x^k/(q;q)_k`, coefficient list up to `x^max`.
pub fn inv_qpoch_inf_series(q: &RatQ, max: usize) -> Vec<RatQ> {
    let mut out = Vec::with_capacity(max + 1);
    for k in 0..=max {
        out.push(&RatQ::one() / &qfact(q, k));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::field::rat;
    use num_traits::Zero;

    #[test]
    fn small_values() {
        let q = RatQ::q();
        assert_eq!(qpoch(&q, &q, 0), RatQ::one());
        let x = Poly::<RatQ>::x();
        let qc = Poly::constant(q.clone());
        let got = qpoch(&x, &qc, 2);
        let want = Poly::from_coeffs(vec![RatQ::one(), -(&RatQ::one() + &q), q.clone()]);
        assert_eq!(got, want);
        assert_eq!(
            qbinom(4, 2),
            Poly::from_coeffs([1, 1, 2, 1, 1].iter().map(|&a| rat(a, 1)).collect())
        );
        assert!(qbinom(2, 3).is_zero());
    }

    #[test]
    fn infinite_product() {
        assert_eq!(qpoch_infinite(0.5, 0.0, 1e-15).unwrap(), 0.5);
        assert!(qpoch_infinite(0.5, 1.0, 1e-15).is_err());
        let v = qpoch_infinite(0.3, 0.5, 1e-16).unwrap();
        let mut w = 1.0;
        for i in 0..200 {
            w *= 1.0 - 0.3 * 0.5f64.powi(i);
        }
        assert!((v - w).abs() < 1e-14);
    }
}
