use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};

use crate::error::IqwError;
use crate::partitions::Partition;
use crate::scalar::{Field, RatQ};

/// Target basis of an [`Expansion`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpBasis {
    F,
    W,
    HallLittlewoodQ,
    InhomHallLittlewood,
    Monomial,
}

impl fmt::Display for ExpBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExpBasis::F => "F",
            ExpBasis::W => "W",
            ExpBasis::HallLittlewoodQ => "Q",
            ExpBasis::InhomHallLittlewood => "j",
            ExpBasis::Monomial => "m",
        };
        f.write_str(s)
    }
}

/// Finitely supported map from partitions to scalars, tagged by basis and truncation degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Expansion<K = RatQ> {
    pub basis: ExpBasis,
    pub truncation: Option<usize>,
    coeffs: BTreeMap<Partition, K>,
}

impl<K: Field> Expansion<K> {
    pub fn new(basis: ExpBasis, truncation: Option<usize>) -> Self {
        Expansion {
            basis,
            truncation,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_map(basis: ExpBasis, truncation: Option<usize>, m: BTreeMap<Partition, K>) -> Self {
        let mut e = Self::new(basis, truncation);
        for (k, v) in m {
            e.add(k, v);
        }
        e
    }

    pub fn add(&mut self, k: Partition, c: K) {
        if c.is_zero() {
            return;
        }
        let v = match self.coeffs.remove(&k) {
            Some(a) => a + c,
            None => c,
        };
        if !v.is_zero() {
            self.coeffs.insert(k, v);
        }
    }

    pub fn get(&self, k: &Partition) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, K> {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Equality that refuses to compare different bases or truncations.
    pub fn try_eq(&self, o: &Self) -> Result<bool, IqwError> {
        if self.basis != o.basis || self.truncation != o.truncation {
            return Err(IqwError::InvalidArgument(format!(
                "cannot compare expansions in {}/{:?} and {}/{:?}",
                self.basis, self.truncation, o.basis, o.truncation
            )));
        }
        Ok(self.coeffs == o.coeffs)
    }

    /// First partition where the two expansions differ.
    pub fn first_difference(&self, o: &Self) -> Option<(Partition, K, K)> {
        let keys: std::collections::BTreeSet<&Partition> =
            self.coeffs.keys().chain(o.coeffs.keys()).collect();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.get(k), o.get(k));
            (a != b).then(|| (k.clone(), a, b))
        })
    }
}

impl<K: Field + fmt::Display> Expansion<K> {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (k, v) in &self.coeffs {
            m.insert(k.to_string(), Value::String(v.to_string()));
        }
        json!({
            "basis": self.basis.to_string(),
            "truncation": self.truncation,
            "coefficients": Value::Object(m),
        })
    }
}

impl Expansion<RatQ> {
    pub fn from_json(v: &Value) -> Result<Self, IqwError> {
        let bad = |s: &str| IqwError::Parse(format!("expansion json: {s}"));
        let basis = match v["basis"].as_str().ok_or_else(|| bad("basis"))? {
            "F" => ExpBasis::F,
            "W" => ExpBasis::W,
            "Q" => ExpBasis::HallLittlewoodQ,
            "j" => ExpBasis::InhomHallLittlewood,
            "m" => ExpBasis::Monomial,
            other => return Err(bad(other)),
        };
        let truncation = v["truncation"].as_u64().map(|x| x as usize);
        let mut e = Expansion::new(basis, truncation);
        for (k, c) in v["coefficients"]
            .as_object()
            .ok_or_else(|| bad("coefficients"))?
        {
            let c: RatQ = c.as_str().ok_or_else(|| bad("coefficient"))?.parse()?;
            e.add(k.parse()?, c);
        }
        Ok(e)
    }
}

impl<K: Field + fmt::Display> fmt::Display for Expansion<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, v)| format!("({v})*{}[{k}]", self.basis))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
