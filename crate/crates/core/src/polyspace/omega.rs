use super::symfunc::{alt_sign, SymFunc};
use crate::scalar::Field;

/// Involution-type ring maps, given on power sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaMode {
    /// `p_n -> (-1)^{n-1} p_n`
    Classical,
    /// `p_n -> (-1)^{n-1} (1 - q^n) p_n`
    QZero,
    /// `p_n -> (-1)^{n-1} p_n / (1 - q^n)`
    ZeroQ,
    /// `p_n -> (-1)^{n-1} (1 - q^n)/(1 - t^n) p_n`
    QT,
}

impl OmegaMode {
    pub fn factor<K: Field>(self, n: usize, q: &K, t: &K) -> K {
        let s: K = alt_sign(n);
        match self {
            OmegaMode::Classical => s,
            OmegaMode::QZero => s * (K::one() - q.pow(n)),
            OmegaMode::ZeroQ => s / (K::one() - q.pow(n)),
            OmegaMode::QT => s * (K::one() - q.pow(n)) / (K::one() - t.pow(n)),
        }
    }

    pub fn inverse(self) -> OmegaMode {
        match self {
            OmegaMode::QZero => OmegaMode::ZeroQ,
            OmegaMode::ZeroQ => OmegaMode::QZero,
            m => m,
        }
    }
}

/// Applies `omega`; the result is in the basis of `f`.
pub fn omega<K: Field>(f: &SymFunc<K>, mode: OmegaMode, q: &K, t: &K) -> SymFunc<K> {
    f.scale_power_sums(|n| mode.factor(n, q, t))
}
