use super::*;
use crate::families::{one_var, Params, Standard, UniWeight};
use crate::partitions::partitions_up_to;
use crate::polyspace::OmegaMode;
use crate::scalar::{rat, BigRat, RatQ};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Standard weights except that one `Ftilde` step is doubled.
struct Corrupted(Params<RatQ>);

impl WeightSource<RatQ> for Corrupted {
    fn weight(&self, family: FamilyId, lambda: &Partition, mu: &Partition) -> UniWeight<RatQ> {
        let w = one_var(family, lambda, mu, &self.0);
        if family == FamilyId::Ftilde && *lambda == p("2") && *mu == p("1") {
            return UniWeight {
                num: w.num.scale(&RatQ::from_int(2)),
                den_power: w.den_power,
            };
        }
        w
    }
    fn params(&self) -> &Params<RatQ> {
        &self.0
    }
}

#[test]
fn skew_cauchy() {
    assert_eq!(
        verify_cauchy_f(&p(""), &p(""), 1, 1, 4).unwrap().status,
        Status::ExactPass
    );
    assert_eq!(
        verify_cauchy_f(&p("1"), &p("2"), 2, 2, 6).unwrap().status,
        Status::ExactPass
    );
    assert_eq!(
        verify_cauchy_f(&p("1,1"), &p("1"), 2, 1, 4).unwrap().status,
        Status::ExactPass
    );
    let zero = Standard(Params::single(rat(0, 1)));
    assert!(
        verify_cauchy_f_with::<BigRat>(&zero, &p("1"), &p("1"), 2, 2, 5)
            .unwrap()
            .passed()
    );
    assert!(verify_cauchy_f(&p("2"), &p(""), 1, 1, 1).is_err());
}

#[test]
fn corrupted_weight_is_caught() {
    let r = verify_cauchy_f_with(&Corrupted(Params::formal()), &p(""), &p(""), 2, 2, 4).unwrap();
    match r.status {
        Status::Fail { witness } => assert!(witness.starts_with("x1^2:"), "{witness}"),
        s => panic!("mutation survived: {s:?}"),
    }
}

#[test]
fn hall_littlewood_cauchy() {
    assert_eq!(hl_single_variable(6).unwrap().status, Status::ExactPass);
    assert_eq!(
        verify_cauchy_hl(&p(""), &p("1"), 1, 1, 5).unwrap().status,
        Status::ExactPass
    );
    assert_eq!(
        verify_cauchy_hl(&p("1"), &p("2"), 2, 2, 5).unwrap().status,
        Status::ExactPass
    );
    let zero = Standard(Params::single(rat(0, 1)));
    assert!(
        verify_cauchy_hl_with::<BigRat>(&zero, &p("1"), &p("1,1"), 2, 2, 5)
            .unwrap()
            .passed()
    );
}

#[test]
fn dual_cauchy_and_readings() {
    assert_eq!(
        verify_dual_cauchy(&p(""), &p(""), 1, 1, 4).unwrap().status,
        Status::ExactPass
    );
    assert_eq!(
        verify_dual_cauchy(&p("1"), &p("1,1"), 2, 2, 5)
            .unwrap()
            .status,
        Status::ExactPass
    );
    assert_eq!(
        verify_dual_cauchy(&p("1"), &p("2"), 3, 2, 4)
            .unwrap()
            .status,
        Status::ExactPass
    );
    let r = dual_reading_experiment(&p("1"), &p("1"), 2, 2, 4).unwrap();
    assert!(r[0].passed(), "{}", r[0]);
    assert!(!r[1].passed(), "{}", r[1]);
}

#[test]
fn omega_duality() {
    assert_eq!(
        verify_omega_f(&p("1"), &p("1"), 4).unwrap().status,
        Status::ExactPass
    );
    assert_eq!(
        verify_omega_f(&p("2,1"), &p(""), 5).unwrap().status,
        Status::ExactPass
    );
    assert!(!verify_omega_f_with(OmegaMode::ZeroQ, &p("2,1"), &p(""), 5)
        .unwrap()
        .passed());
    for l in partitions_up_to(4) {
        for m in partitions_up_to(l.size()) {
            assert!(verify_omega_lowest(&l, &m).unwrap().passed(), "{l}/{m}");
        }
    }
}

#[test]
fn macdonald_cauchy() {
    for r in verify_macd_cauchy(3).unwrap() {
        assert_eq!(r.status, Status::ExactPass, "{r}");
    }
}

#[test]
fn truncation_refines() {
    for d in 3..=5 {
        assert!(verify_cauchy_f(&p("1"), &p("1"), 2, 2, d).unwrap().passed());
        assert!(verify_cauchy_hl(&p("1"), &p("1"), 2, 2, d)
            .unwrap()
            .passed());
    }
}

#[test]
fn report_json() {
    let r = verify_cauchy_f(&p(""), &p(""), 1, 1, 3).unwrap();
    let v = r.to_json();
    assert_eq!(v["identity"], "cauchy-F");
    assert_eq!(v["status"], "exact-pass");
    assert_eq!(v["params"]["Dx"], "3");
    assert!(v.get("witness").is_none());
}

#[test]
fn golden_suite_passes_and_is_deterministic() {
    let a = golden_suite();
    for r in &a {
        assert!(r.passed(), "{r}");
    }
    let b = golden_suite();
    let strip = |v: &[VerifyReport]| v.iter().map(VerifyReport::untimed).collect::<Vec<_>>();
    assert_eq!(strip(&a), strip(&b));
}
