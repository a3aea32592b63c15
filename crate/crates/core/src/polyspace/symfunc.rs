use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::IqwError;
use crate::partitions::{partitions_of, Partition};
use crate::scalar::{rat, BigRat, Field, Ring};

use super::sympoly::SymPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    Elementary,
    Power,
}

/// Symmetric function truncated at a total degree, in one of the classical bases.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFunc<K> {
    pub basis: Basis,
    pub max_degree: usize,
    coeffs: BTreeMap<Partition, K>,
}

impl<K: Field> SymFunc<K> {
    pub fn new(basis: Basis, max_degree: usize, coeffs: BTreeMap<Partition, K>) -> Self {
        SymFunc {
            basis,
            max_degree,
            coeffs: coeffs
                .into_iter()
                .filter(|(k, v)| k.size() <= max_degree && !v.is_zero())
                .collect(),
        }
    }

    pub fn zero(basis: Basis, max_degree: usize) -> Self {
        Self::new(basis, max_degree, BTreeMap::new())
    }

    /// Single basis element.
    pub fn basis_element(basis: Basis, kappa: &Partition, max_degree: usize) -> Self {
        let mut m = BTreeMap::new();
        m.insert(kappa.clone(), K::one());
        Self::new(basis, max_degree, m)
    }

    /// From monomial coordinates of a symmetric polynomial in enough variables.
    pub fn from_sympoly(p: &SymPoly<K>, max_degree: usize) -> Self {
        Self::new(Basis::Monomial, max_degree, p.coeffs().clone())
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, K> {
        &self.coeffs
    }

    pub fn coeff(&self, k: &Partition) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Result<Self, IqwError> {
        self.compatible(o)?;
        let mut m = self.coeffs.clone();
        for (k, c) in &o.coeffs {
            let v = m.remove(k).map_or(c.clone(), |a| a + c.clone());
            m.insert(k.clone(), v);
        }
        Ok(Self::new(self.basis, self.max_degree, m))
    }

    pub fn sub(&self, o: &Self) -> Result<Self, IqwError> {
        self.add(&o.scale(&-K::one()))
    }

    pub fn scale(&self, a: &K) -> Self {
        Self::new(
            self.basis,
            self.max_degree,
            self.coeffs
                .iter()
                .map(|(k, c)| (k.clone(), c.clone() * a.clone()))
                .collect(),
        )
    }

    fn compatible(&self, o: &Self) -> Result<(), IqwError> {
        if self.basis != o.basis || self.max_degree != o.max_degree {
            return Err(IqwError::InvalidArgument(format!(
                "incompatible symmetric functions: {:?}/{} vs {:?}/{}",
                self.basis, self.max_degree, o.basis, o.max_degree
            )));
        }
        Ok(())
    }

    /// Change of basis through monomial coordinates.
    pub fn to_basis(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let mut mono: BTreeMap<Partition, K> = BTreeMap::new();
        if self.basis == Basis::Monomial {
            mono = self.coeffs.clone();
        } else {
            for (k, c) in &self.coeffs {
                let t = to_monomial(self.basis, k.size());
                for (l, a) in &t[k] {
                    let v =
                        mono.remove(l).unwrap_or_else(K::zero) + c.clone() * K::from_rational(a);
                    mono.insert(l.clone(), v);
                }
            }
        }
        if target == Basis::Monomial {
            return Self::new(target, self.max_degree, mono);
        }
        let mut out: BTreeMap<Partition, K> = BTreeMap::new();
        for (l, c) in &mono {
            let t = from_monomial(target, l.size());
            for (k, a) in &t[l] {
                let v = out.remove(k).unwrap_or_else(K::zero) + c.clone() * K::from_rational(a);
                out.insert(k.clone(), v);
            }
        }
        Self::new(target, self.max_degree, out)
    }

    /// Product in the power basis, truncated at the common degree.
    pub fn mul(&self, o: &Self) -> Result<Self, IqwError> {
        if self.max_degree != o.max_degree {
            return Err(IqwError::InvalidArgument(
                "truncation degrees differ".into(),
            ));
        }
        let a = self.to_basis(Basis::Power);
        let b = o.to_basis(Basis::Power);
        let mut m: BTreeMap<Partition, K> = BTreeMap::new();
        for (k1, c1) in &a.coeffs {
            for (k2, c2) in &b.coeffs {
                if k1.size() + k2.size() > self.max_degree {
                    continue;
                }
                let mut parts = k1.parts().to_vec();
                parts.extend_from_slice(k2.parts());
                let k = Partition::from_exponents(&parts);
                let v = m.remove(&k).unwrap_or_else(K::zero) + c1.clone() * c2.clone();
                m.insert(k, v);
            }
        }
        Ok(Self::new(Basis::Power, self.max_degree, m).to_basis(self.basis))
    }

    /// Applies a ring map given on power sums: `p_n -> factor(n) p_n`.
    pub fn scale_power_sums(&self, factor: impl Fn(usize) -> K) -> Self {
        let p = self.to_basis(Basis::Power);
        let mut cache: HashMap<usize, K> = HashMap::new();
        let mut m = BTreeMap::new();
        for (k, c) in &p.coeffs {
            let mut v = c.clone();
            for &part in k.parts() {
                let f = cache.entry(part).or_insert_with(|| factor(part)).clone();
                v = v * f;
            }
            m.insert(k.clone(), v);
        }
        Self::new(Basis::Power, self.max_degree, m).to_basis(self.basis)
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> Self {
        Self::new(
            self.basis,
            self.max_degree,
            self.coeffs
                .iter()
                .filter(|(k, _)| k.size() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        )
    }
}

type Matrix = BTreeMap<Partition, BTreeMap<Partition, BigRat>>;

type MatrixCache = Mutex<HashMap<(Basis, bool, usize), Arc<Matrix>>>;

fn cache() -> &'static MatrixCache {
    static C: OnceLock<MatrixCache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Row `kappa` lists the monomial coordinates of the basis element `kappa`.
pub fn to_monomial(basis: Basis, d: usize) -> Arc<Matrix> {
    if let Some(m) = cache().lock().unwrap().get(&(basis, true, d)) {
        return m.clone();
    }
    let parts = partitions_of(d);
    let mut mat = Matrix::new();
    for k in &parts {
        let mut row = BTreeMap::new();
        for l in &parts {
            let c = match basis {
                Basis::Monomial => i128::from(k == l),
                Basis::Power => count_power(k.parts(), &mut l.parts().to_vec()),
                Basis::Elementary => count_elementary(k.parts(), &mut l.parts().to_vec()),
            };
            if c != 0 {
                row.insert(l.clone(), rat(c as i64, 1));
            }
        }
        mat.insert(k.clone(), row);
    }
    let mat = Arc::new(mat);
    cache()
        .lock()
        .unwrap()
        .insert((basis, true, d), mat.clone());
    mat
}

/// Row `lambda` expresses `m_lambda` in the target basis.
pub fn from_monomial(basis: Basis, d: usize) -> Arc<Matrix> {
    if let Some(m) = cache().lock().unwrap().get(&(basis, false, d)) {
        return m.clone();
    }
    let fwd = to_monomial(basis, d);
    let parts = partitions_of(d);
    let n = parts.len();
    // rows: basis elements; solve M^T x = e_l for each monomial l.
    let mut a: Vec<Vec<BigRat>> = parts
        .iter()
        .map(|k| {
            parts
                .iter()
                .map(|l| fwd[k].get(l).cloned().unwrap_or_else(BigRat::zero))
                .collect()
        })
        .collect();
    let mut inv: Vec<Vec<BigRat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRat::one()
                    } else {
                        BigRat::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular transition matrix");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let x = &f * &a[col][j];
                    a[r][j] = &a[r][j] - &x;
                    let y = &f * &inv[col][j];
                    inv[r][j] = &inv[r][j] - &y;
                }
            }
        }
    }
    // inv = A^{-1} with A[k][l] = coefficient of m_l in b_k, so m_l = sum_k inv[l][k] b_k.
    let mut mat = Matrix::new();
    for (li, l) in parts.iter().enumerate() {
        let mut row = BTreeMap::new();
        for (ki, k) in parts.iter().enumerate() {
            if !inv[li][ki].is_zero() {
                row.insert(k.clone(), inv[li][ki].clone());
            }
        }
        mat.insert(l.clone(), row);
    }
    let mat = Arc::new(mat);
    cache()
        .lock()
        .unwrap()
        .insert((basis, false, d), mat.clone());
    mat
}

// Ways to distribute the parts of kappa over variables with exponents rem.
fn count_power(kappa: &[usize], rem: &mut Vec<usize>) -> i128 {
    let Some((&k, rest)) = kappa.split_first() else {
        return i128::from(rem.iter().all(|&r| r == 0));
    };
    let mut total = 0;
    for j in 0..rem.len() {
        if rem[j] >= k {
            rem[j] -= k;
            total += count_power(rest, rem);
            rem[j] += k;
        }
    }
    total
}

// 0-1 matrices with row sums kappa and column sums rem.
fn count_elementary(kappa: &[usize], rem: &mut Vec<usize>) -> i128 {
    let Some((&k, rest)) = kappa.split_first() else {
        return i128::from(rem.iter().all(|&r| r == 0));
    };
    fn choose(start: usize, k: usize, rest: &[usize], rem: &mut Vec<usize>) -> i128 {
        if k == 0 {
            return count_elementary(rest, rem);
        }
        let mut total = 0;
        for j in start..rem.len() {
            if rem[j] > 0 {
                rem[j] -= 1;
                total += choose(j + 1, k - 1, rest, rem);
                rem[j] += 1;
            }
        }
        total
    }
    choose(0, k, rest, rem)
}

/// Complete homogeneous `h_n` in monomial coordinates.
pub fn complete_homogeneous<K: Field>(n: usize, max_degree: usize) -> SymFunc<K> {
    SymFunc::new(
        Basis::Monomial,
        max_degree,
        partitions_of(n)
            .into_iter()
            .map(|l| (l, K::one()))
            .collect(),
    )
}

/// The scalar `(-1)^{n-1}`.
pub fn alt_sign<K: Ring>(n: usize) -> K {
    if n % 2 == 1 {
        K::one()
    } else {
        -K::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RatQ;

    #[test]
    fn transition_round_trip() {
        for b in [Basis::Elementary, Basis::Power] {
            for d in 0..=6 {
                for k in partitions_of(d) {
                    let f = SymFunc::<BigRat>::basis_element(b, &k, 6);
                    let back = f.to_basis(Basis::Monomial).to_basis(b);
                    assert_eq!(back, f);
                }
            }
        }
        let e2 = SymFunc::<BigRat>::basis_element(Basis::Elementary, &"2".parse().unwrap(), 3)
            .to_basis(Basis::Monomial);
        assert_eq!(e2.coeff(&"1,1".parse().unwrap()), rat(1, 1));
        assert_eq!(e2.coeffs().len(), 1);
    }

    #[test]
    fn power_product() {
        let p1 = SymFunc::<RatQ>::basis_element(Basis::Power, &"1".parse().unwrap(), 4)
            .to_basis(Basis::Monomial);
        let sq = p1.mul(&p1).unwrap();
        assert_eq!(sq.coeff(&"1,1".parse().unwrap()), RatQ::from_int(2));
        assert_eq!(sq.coeff(&"2".parse().unwrap()), RatQ::one());
    }
}
