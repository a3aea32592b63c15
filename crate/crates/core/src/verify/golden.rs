use num_traits::One;
use rayon::prelude::*;

use super::{compare, timed, xy_names, Status, VerifyReport};
use crate::error::IqwError;
use crate::families::{expand_skew, FamilyId, Params, Standard};
use crate::partitions::Partition;
use crate::polyspace::{ExpBasis, Expansion, MultiPoly};
use crate::scalar::{qfact, RatQ, RatQT, Ring};
use crate::specialization::{f_spec, fbar_spec_union, Generator, SpecDesc};
use crate::structure::{
    a_expand, b_expand, binomial, family_poly, hl_expand_homogeneous, pieri_f, product_f,
    ProductAlgo,
};

use super::identities::{
    hl_single_variable, verify_cauchy_f, verify_dual_cauchy, verify_macd_cauchy, verify_omega_f,
    verify_omega_lowest,
};

/// A named regression check.
pub struct GoldenCase {
    pub name: &'static str,
    pub run: fn() -> Result<Status, IqwError>,
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn q() -> RatQ {
    RatQ::q()
}

fn omq(k: usize) -> RatQ {
    &RatQ::one() - &q().pow(k)
}

fn poly2(family: FamilyId, l: &str) -> MultiPoly<RatQ> {
    expand_skew(&Standard(Params::formal()), family, &p(l), &p(""), 2).num
}

fn expansion(items: &[(&str, RatQ)]) -> Expansion {
    let mut e = Expansion::new(ExpBasis::F, None);
    for (k, c) in items {
        e.add(p(k), c.clone());
    }
    e
}

fn expansion_status(got: &Expansion, want: &Expansion) -> Status {
    match got.first_difference(want) {
        None => Status::ExactPass,
        Some((k, a, b)) => Status::Fail {
            witness: format!("[{k}]: got {a}, expected {b}"),
        },
    }
}

fn all(reports: Vec<VerifyReport>) -> Status {
    reports
        .into_iter()
        .map(|r| r.status)
        .find(|s| !s.passed())
        .unwrap_or(Status::ExactPass)
}

fn box_over_box() -> Result<Status, IqwError> {
    let n = 3;
    let f = expand_skew(
        &Standard(Params::formal()),
        FamilyId::F,
        &p("1"),
        &p("1"),
        n,
    )
    .num;
    let mut want = MultiPoly::one(n);
    for i in 0..n {
        want = want.mul(&MultiPoly::one(n).sub(&MultiPoly::var(n, i)));
    }
    Ok(compare(&f, &want, &xy_names(n)))
}

fn x_pow(a: u16, b: u16, c: RatQ) -> MultiPoly<RatQ> {
    MultiPoly::monomial(vec![a, b], c)
}

fn f_two_row() -> Result<Status, IqwError> {
    let one = RatQ::one();
    let opq = &one + &q();
    let want = [
        x_pow(2, 0, one.clone()),
        x_pow(1, 1, opq.clone()),
        x_pow(0, 2, one.clone()),
        x_pow(2, 1, -opq.clone()),
        x_pow(1, 2, -opq),
        x_pow(2, 2, q()),
    ]
    .iter()
    .fold(MultiPoly::zero(2), |a, b| a.add(b));
    Ok(compare(&poly2(FamilyId::F, "2"), &want, &xy_names(2)))
}

fn ftilde_two_row() -> Result<Status, IqwError> {
    let one = RatQ::one();
    let x1 = MultiPoly::<RatQ>::var(2, 0);
    let x2 = MultiPoly::<RatQ>::var(2, 1);
    let c = |a: RatQ| MultiPoly::constant(2, a);
    let want = x1
        .sub(&c(one.clone()))
        .mul(&x1.sub(&c(q())))
        .add(
            &x1.sub(&c(one.clone()))
                .mul(&x2.sub(&c(one.clone())))
                .scale(&(&one + &q())),
        )
        .add(&x2.sub(&c(one.clone())).mul(&x2.sub(&c(q()))));
    let got = poly2(FamilyId::Ftilde, "2").scale(&qfact(&q(), 2));
    Ok(compare(&got, &want, &xy_names(2)))
}

fn j_two_row() -> Result<Status, IqwError> {
    let one = RatQ::one();
    let x1 = MultiPoly::<RatQ>::var(2, 0);
    let x2 = MultiPoly::<RatQ>::var(2, 1);
    let c = |a: RatQ| MultiPoly::constant(2, a);
    let want = x1
        .mul(&x1.add(&c(one.clone())))
        .add(&x1.mul(&x2).scale(&omq(1)))
        .add(&x2.mul(&x2.add(&c(one))))
        .scale(&omq(1));
    let s = compare(&poly2(FamilyId::InhomHL, "2"), &want, &xy_names(2));
    if !s.passed() {
        return Ok(s);
    }
    let j = family_poly(FamilyId::InhomHL, &p("2"), 2, 2);
    let mut got = hl_expand_homogeneous(&j.homogeneous_component(2))?;
    for (k, v) in hl_expand_homogeneous(&j.homogeneous_component(1))?.coeffs() {
        got.add(k.clone(), v.clone());
    }
    let mut want = Expansion::new(ExpBasis::HallLittlewoodQ, None);
    want.add(p("2"), RatQ::one());
    want.add(p("1"), RatQ::one());
    Ok(expansion_status(&got, &want))
}

fn box_squared() -> Result<Status, IqwError> {
    let want = expansion(&[("2", RatQ::one()), ("1,1", omq(1)), ("2,1", -omq(1))]);
    for algo in [ProductAlgo::Direct, ProductAlgo::Dual] {
        let s = expansion_status(&product_f(&p("1"), &p("1"), algo)?, &want);
        if !s.passed() {
            return Ok(s);
        }
    }
    Ok(expansion_status(&pieri_f(&p("1")), &want))
}

fn box_times_three_one() -> Result<Status, IqwError> {
    let want = expansion(&[
        ("4,1", RatQ::one()),
        ("3,2", omq(2)),
        ("3,1,1", omq(1)),
        ("4,2", -omq(2)),
        ("3,2,1", -(&omq(1) * &omq(2))),
        ("4,1,1", -omq(1)),
        ("4,2,1", &omq(1) * &omq(2)),
    ]);
    for algo in [ProductAlgo::Direct, ProductAlgo::Dual] {
        let s = expansion_status(&product_f(&p("1"), &p("3,1"), algo)?, &want);
        if !s.passed() {
            return Ok(s);
        }
    }
    Ok(expansion_status(&pieri_f(&p("3,1")), &want))
}

fn column_formulas() -> Result<Status, IqwError> {
    let d = 6;
    for n in 1..=5 {
        let a = a_expand(&Partition::column(n), d)?;
        let b = b_expand(&Partition::column(n), d)?;
        let mut wa = Expansion::new(ExpBasis::F, Some(d));
        let mut wb = Expansion::new(ExpBasis::W, Some(d));
        for k in 0..=(d - n) {
            let c: RatQ = binomial(n + k - 1, k);
            wa.add(Partition::column(n + k), c.clone());
            wb.add(Partition::column(n + k), if k % 2 == 0 { c } else { -c });
        }
        for (got, want) in [(&a, &wa), (&b, &wb)] {
            let s = expansion_status(got, want);
            if !s.passed() {
                return Ok(s);
            }
        }
    }
    Ok(Status::ExactPass)
}

fn dual_columns() -> Result<Status, IqwError> {
    let q = RatQT::q();
    let beta = RatQT::t();
    let one = RatQT::one();
    let ratio = &beta / &(&one + &beta);
    for n in 1..=6 {
        let got = f_spec(
            &Generator::Beta(beta.clone()),
            &q,
            &Partition::column(n),
            &p(""),
            0,
        )?
        .value;
        let want = &(&one - &q) * &ratio.pow(n);
        if got != want {
            return Ok(Status::Fail {
                witness: format!("F_1^{n}: {got} vs {want}"),
            });
        }
    }
    Ok(Status::ExactPass)
}

fn plancherel_box() -> Result<Status, IqwError> {
    let g = 0.7f64;
    let v = fbar_spec_union(&SpecDesc::plancherel(g, 0.5), &p("1"), &p(""), 40)?;
    let residual = (v.value - (g.exp() - 1.0)).abs();
    Ok(if residual < 1e-8 {
        Status::NumericPass { residual }
    } else {
        Status::Fail {
            witness: format!("value {} residual {residual:.3e}", v.value),
        }
    })
}

fn hl_one_variable() -> Result<Status, IqwError> {
    Ok(hl_single_variable(5)?.status)
}

fn cauchy_f_example() -> Result<Status, IqwError> {
    Ok(verify_cauchy_f(&p("1"), &p("2"), 2, 2, 6)?.status)
}

fn dual_cauchy_example() -> Result<Status, IqwError> {
    Ok(verify_dual_cauchy(&p("1"), &p("1,1"), 2, 2, 5)?.status)
}

fn omega_example() -> Result<Status, IqwError> {
    Ok(all(vec![
        verify_omega_f(&p("2,1"), &p(""), 5)?,
        verify_omega_lowest(&p("3,1"), &p("1"))?,
    ]))
}

fn macdonald_example() -> Result<Status, IqwError> {
    Ok(all(verify_macd_cauchy(3)?))
}

pub const GOLDEN: &[GoldenCase] = &[
    GoldenCase {
        name: "F_{1/1} = prod (1 - x_i)",
        run: box_over_box,
    },
    GoldenCase {
        name: "F_(2)(x1, x2)",
        run: f_two_row,
    },
    GoldenCase {
        name: "(q;q)_2 Ftilde_(2)(x1, x2)",
        run: ftilde_two_row,
    },
    GoldenCase {
        name: "j_(2)(x1, x2) = Q_2 + Q_1",
        run: j_two_row,
    },
    GoldenCase {
        name: "F_1 F_1",
        run: box_squared,
    },
    GoldenCase {
        name: "F_1 F_(3,1)",
        run: box_times_three_one,
    },
    GoldenCase {
        name: "column formulas for W_1^n and F_1^n",
        run: column_formulas,
    },
    GoldenCase {
        name: "dual substitution on F_1^n",
        run: dual_columns,
    },
    GoldenCase {
        name: "Plancherel on sign-flipped F_1",
        run: plancherel_box,
    },
    GoldenCase {
        name: "HL Cauchy in one variable",
        run: hl_one_variable,
    },
    GoldenCase {
        name: "skew Cauchy mu=(1) nu=(2)",
        run: cauchy_f_example,
    },
    GoldenCase {
        name: "dual Cauchy mu=(1) nu=(1,1)",
        run: dual_cauchy_example,
    },
    GoldenCase {
        name: "omega duality",
        run: omega_example,
    },
    GoldenCase {
        name: "Macdonald Cauchy with collapses",
        run: macdonald_example,
    },
];

/// Runs every golden case in parallel; the order of the result follows [`GOLDEN`].
pub fn golden_suite() -> Vec<VerifyReport> {
    GOLDEN
        .par_iter()
        .map(|c| {
            timed(c.name, &[], c.run).unwrap_or_else(|e| VerifyReport {
                identity: c.name.to_string(),
                params: Default::default(),
                status: Status::Fail {
                    witness: format!("error: {e}"),
                },
                millis: 0,
            })
        })
        .collect()
}
