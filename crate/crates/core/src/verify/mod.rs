//! Executable checks of the Cauchy-type identities, omega duality and the
//! worked examples, with machine-readable reports.

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::ops::Range;
use std::time::Instant;

use serde_json::{json, Value};

use crate::error::IqwError;
use crate::families::{expand_skew, FamilyId, WeightSource};
use crate::partitions::Partition;
use crate::polyspace::MultiPoly;
use crate::scalar::Field;

mod golden;
mod identities;

pub use golden::{golden_suite, GoldenCase, GOLDEN};
pub use identities::{
    dual_reading_experiment, hl_single_variable, verify_cauchy_f, verify_cauchy_f_with,
    verify_cauchy_hl, verify_cauchy_hl_with, verify_dual_cauchy, verify_dual_cauchy_with,
    verify_macd_cauchy, verify_macd_cauchy_at, verify_omega_f, verify_omega_f_with,
    verify_omega_lowest,
};

#[derive(Clone, Debug, PartialEq)]
pub enum Status {
    ExactPass,
    NumericPass { residual: f64 },
    Fail { witness: String },
}

impl Status {
    pub fn passed(&self) -> bool {
        !matches!(self, Status::Fail { .. })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub millis: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status.passed()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "identity": self.identity,
            "params": self.params,
            "millis": self.millis,
        });
        let o = v.as_object_mut().unwrap();
        match &self.status {
            Status::ExactPass => {
                o.insert("status".into(), json!("exact-pass"));
            }
            Status::NumericPass { residual } => {
                o.insert("status".into(), json!("numeric-pass"));
                o.insert("residual".into(), json!(residual));
            }
            Status::Fail { witness } => {
                o.insert("status".into(), json!("fail"));
                o.insert("witness".into(), json!(witness));
            }
        }
        v
    }

    /// Same report with the timing zeroed, for comparisons across runs.
    pub fn untimed(&self) -> Self {
        VerifyReport {
            millis: 0,
            ..self.clone()
        }
    }
}

impl Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let status = match &self.status {
            Status::ExactPass => "exact-pass".to_string(),
            Status::NumericPass { residual } => format!("numeric-pass (residual {residual:.2e})"),
            Status::Fail { witness } => format!("FAIL at {witness}"),
        };
        write!(
            f,
            "{} [{}] {} ({} ms)",
            self.identity,
            params.join(", "),
            status,
            self.millis
        )
    }
}

/// Builds a report from a timed closure returning the status.
pub(crate) fn timed(
    identity: &str,
    params: &[(&str, String)],
    f: impl FnOnce() -> Result<Status, IqwError>,
) -> Result<VerifyReport, IqwError> {
    let start = Instant::now();
    let status = f()?;
    Ok(VerifyReport {
        identity: identity.to_string(),
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        status,
        millis: start.elapsed().as_millis(),
    })
}

fn graded_revlex_key(e: &[u16]) -> (usize, Vec<std::cmp::Reverse<u16>>) {
    (
        e.iter().map(|&x| x as usize).sum(),
        e.iter().map(|&x| std::cmp::Reverse(x)).collect(),
    )
}

/// Monomial label with variables named by `names(i)`.
pub(crate) fn monomial_label(e: &[u16], names: &dyn Fn(usize) -> String) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                names(i)
            } else {
                format!("{}^{k}", names(i))
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Compares two polynomials; the witness is the first differing monomial in graded reverse-lex order.
pub(crate) fn compare<K: Field + Display>(
    lhs: &MultiPoly<K>,
    rhs: &MultiPoly<K>,
    names: &dyn Fn(usize) -> String,
) -> Status {
    let diff = lhs.sub(rhs);
    match diff.terms().keys().min_by_key(|e| graded_revlex_key(e)) {
        None => Status::ExactPass,
        Some(e) => Status::Fail {
            witness: format!(
                "{}: lhs {} vs rhs {}",
                monomial_label(e, names),
                lhs.coeff(e),
                rhs.coeff(e)
            ),
        },
    }
}

/// Compares coefficient maps keyed by partitions; the witness is the smallest differing key.
pub(crate) fn compare_maps<K: Field + Display>(
    lhs: &BTreeMap<Partition, K>,
    rhs: &BTreeMap<Partition, K>,
) -> Status {
    let keys: std::collections::BTreeSet<&Partition> = lhs.keys().chain(rhs.keys()).collect();
    for k in keys {
        let a = lhs.get(k).cloned().unwrap_or_else(K::zero);
        let b = rhs.get(k).cloned().unwrap_or_else(K::zero);
        if a != b {
            return Status::Fail {
                witness: format!("m[{k}]: lhs {a} vs rhs {b}"),
            };
        }
    }
    Status::ExactPass
}

/// Variable names `x1..xn, y1..ym`.
pub(crate) fn xy_names(n: usize) -> impl Fn(usize) -> String {
    move |i| {
        if i < n {
            format!("x{}", i + 1)
        } else {
            format!("y{}", i - n + 1)
        }
    }
}

/// `f_{lambda/mu}` in `k` variables placed at `offset` among `total`, as a series truncated in `vars`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn placed<K: Field>(
    src: &dyn WeightSource<K>,
    family: FamilyId,
    lambda: &Partition,
    mu: &Partition,
    k: usize,
    total: usize,
    offset: usize,
    trunc: Option<(Range<usize>, usize)>,
) -> MultiPoly<K> {
    let r = expand_skew(src, family, lambda, mu, k);
    let p = if r.is_polynomial() {
        r.num
    } else {
        let max = trunc.as_ref().map_or(usize::MAX, |t| t.1);
        r.series(max)
    };
    let p = p.embed(total, offset);
    match trunc {
        Some((vars, max)) => p.truncate_in(vars, max),
        None => p,
    }
}

#[cfg(test)]
mod tests;
