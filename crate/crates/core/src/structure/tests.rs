use super::*;
use crate::families::expand_skew;
use crate::partitions::{partitions_of, partitions_up_to};
use crate::scalar::qfact;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn q() -> RatQ {
    RatQ::q()
}

fn omq(k: usize) -> RatQ {
    &RatQ::one() - &q().pow(k)
}

fn expansion(basis: ExpBasis, items: &[(&str, RatQ)]) -> Expansion {
    let mut e = Expansion::new(basis, None);
    for (k, c) in items {
        e.add(p(k), c.clone());
    }
    e
}

#[test]
fn box_squared() {
    let want = expansion(
        ExpBasis::F,
        &[("2", RatQ::one()), ("1,1", omq(1)), ("2,1", -omq(1))],
    );
    for algo in [ProductAlgo::Direct, ProductAlgo::Dual] {
        assert_eq!(product_f(&p("1"), &p("1"), algo).unwrap(), want, "{algo:?}");
    }
    assert_eq!(pieri_f(&p("1")), want);
}

#[test]
fn box_times_three_one() {
    let want = expansion(
        ExpBasis::F,
        &[
            ("4,1", RatQ::one()),
            ("3,2", omq(2)),
            ("3,1,1", omq(1)),
            ("4,2", -omq(2)),
            ("3,2,1", -(&omq(1) * &omq(2))),
            ("4,1,1", -omq(1)),
            ("4,2,1", &omq(1) * &omq(2)),
        ],
    );
    assert_eq!(pieri_f(&p("3,1")), want);
    assert_eq!(
        product_f(&p("1"), &p("3,1"), ProductAlgo::Direct).unwrap(),
        want
    );
    assert_eq!(
        product_f(&p("1"), &p("3,1"), ProductAlgo::Dual).unwrap(),
        want
    );
}

#[test]
fn dual_matches_direct_small() {
    for mu in partitions_up_to(2) {
        for nu in partitions_up_to(2) {
            let a = product_f(&mu, &nu, ProductAlgo::Direct).unwrap();
            let b = product_f(&mu, &nu, ProductAlgo::Dual).unwrap();
            assert_eq!(a, b, "{mu} x {nu}");
            let (r, c) = product_box(&mu, &nu);
            for k in a.coeffs().keys() {
                assert!(k.len() <= r && k.first() <= c);
            }
        }
    }
}

#[test]
fn pieri_matches_product() {
    for n in 0..=3 {
        for nu in partitions_of(n) {
            assert_eq!(
                pieri_f(&nu),
                product_f(&p("1"), &nu, ProductAlgo::Direct).unwrap(),
                "{nu}"
            );
        }
    }
}

#[test]
fn whittaker_pieri_matches_lifted_product() {
    for i in 1..=2 {
        for nu in partitions_up_to(2) {
            let d = i + nu.size();
            let a = family_poly(FamilyId::W, &Partition::row(i), d, d);
            let b = family_poly(FamilyId::W, &nu, d, d);
            let prod = a.mul(&b, Some(d)).scale(&(&RatQ::one() / &qfact(&q(), i)));
            assert_eq!(
                w_expand_homogeneous(&prod).unwrap(),
                pieri_w(i, &nu),
                "{i} {nu}"
            );
        }
    }
}

#[test]
fn j_two_row_is_q2_plus_q1() {
    let j = family_poly(FamilyId::InhomHL, &p("2"), 2, 2);
    let top = hl_expand_homogeneous(&j.homogeneous_component(2)).unwrap();
    let low = hl_expand_homogeneous(&j.homogeneous_component(1)).unwrap();
    assert_eq!(
        top,
        expansion(ExpBasis::HallLittlewoodQ, &[("2", RatQ::one())])
    );
    assert_eq!(
        low,
        expansion(ExpBasis::HallLittlewoodQ, &[("1", RatQ::one())])
    );
}

#[test]
fn j_products_agree_with_evaluation() {
    let pts = [
        [
            RatQ::from_int(2),
            RatQ::from_int(-1),
            RatQ::from_rat(crate::scalar::rat(1, 3)),
        ],
        [RatQ::from_int(5), RatQ::from_int(3), RatQ::from_int(-2)],
        [
            RatQ::from_rat(crate::scalar::rat(1, 2)),
            RatQ::from_int(7),
            RatQ::from_int(1),
        ],
    ];
    let src = Standard(Params::formal());
    for (mu, nu) in [("1", "1"), ("2", "1"), ("1,1", "1"), ("2", "2")] {
        let (mu, nu) = (p(mu), p(nu));
        let e = product_j(&mu, &nu).unwrap();
        for x in &pts {
            let lhs =
                &crate::families::eval_skew(&src, FamilyId::InhomHL, &mu, &Partition::empty(), x)
                    .unwrap()
                    * &crate::families::eval_skew(
                        &src,
                        FamilyId::InhomHL,
                        &nu,
                        &Partition::empty(),
                        x,
                    )
                    .unwrap();
            let mut rhs = RatQ::zero();
            for (k, c) in e.coeffs() {
                rhs = &rhs
                    + &(c * &crate::families::eval_skew(
                        &src,
                        FamilyId::InhomHL,
                        k,
                        &Partition::empty(),
                        x,
                    )
                    .unwrap());
            }
            assert_eq!(lhs, rhs, "{mu} {nu}");
        }
    }
    let e = product_j(&p("1"), &p("1")).unwrap();
    assert_eq!(e.get(&p("1")), -omq(1));
}

#[test]
fn skew_expansions() {
    let e = skew_f_expand(&p("1"), &p("1")).unwrap();
    assert_eq!(
        e,
        expansion(ExpBasis::F, &[("", RatQ::one()), ("1", -RatQ::one())])
    );
    for (l, m) in [
        ("2,1", "1"),
        ("2", "1"),
        ("2,2", "1"),
        ("3,1", "2"),
        ("2,1", "2,1"),
    ] {
        let (l, m) = (p(l), p(m));
        assert_eq!(
            skew_f_expand(&l, &m).unwrap(),
            skew_f_expand_direct(&l, &m).unwrap(),
            "{l}/{m}"
        );
    }
}

#[test]
fn skew_f_of_box_over_box_is_product() {
    // F_{1/1}(x) = prod (1 - x_i) = sum_k (-1)^k e_k = sum_k (-1)^k W_{1^k}
    let f = expand_skew(
        &Standard(Params::formal()),
        FamilyId::F,
        &p("1"),
        &p("1"),
        2,
    )
    .num;
    let e = skew_f_expand_direct(&p("1"), &p("1")).unwrap();
    assert_eq!(e.len(), 2);
    assert!(!f.is_zero());
}

#[test]
fn a_and_b_column_formulas() {
    let d = 5;
    for n in 1..=3 {
        let a = a_expand(&Partition::column(n), d).unwrap();
        let b = b_expand(&Partition::column(n), d).unwrap();
        for k in 0..=(d - n) {
            let c: RatQ = binomial(n + k - 1, k);
            assert_eq!(a.get(&Partition::column(n + k)), c);
            let s = if k % 2 == 0 { c.clone() } else { -c.clone() };
            assert_eq!(b.get(&Partition::column(n + k)), s);
        }
        assert_eq!(a.len(), d - n + 1);
    }
}
