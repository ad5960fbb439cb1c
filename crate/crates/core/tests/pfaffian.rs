mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use pencil5::exactalg::FieldMode;
use pencil5::fibration::{build_example1, build_example2, build_example3, SurfaceModel};
use pencil5::multipoly::{parse_polynomial, BiDegree, Grading, Polynomial};
use pencil5::pfaffian::{
    infer_twists, matrix_from_json, matrix_to_json, pfaffian_ideal, pfaffian_syzygy, relation_residual,
    relation_search, sub_pfaffian, MatrixJson, SkewMatrix,
};
use pencil5::Error;

fn placeholder_grading() -> Grading {
    let d = BiDegree::new(0, 2);
    Grading::product().with_extra(&[("q1", d), ("q2", d), ("q3", d)]).unwrap()
}

fn entries(pairs: &[(&str, &str)]) -> MatrixJson {
    MatrixJson { entries: pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect::<BTreeMap<_, _>>() }
}

/// The Example 1 matrix with symbolic `q1 = m34`, `q2 = m35`, `q3 = m45`.
fn symbolic_example1() -> (SkewMatrix, Grading) {
    let g = placeholder_grading();
    let json = entries(&[
        ("1,2", "t1"),
        ("1,3", "x0"),
        ("1,4", "x2"),
        ("1,5", "x3"),
        ("2,3", "t0*x1"),
        ("2,4", "t0*x3"),
        ("2,5", "t0*x4"),
        ("3,4", "q1"),
        ("3,5", "q2"),
        ("4,5", "q3"),
    ]);
    (matrix_from_json(&json, &g, FieldMode::Rational).unwrap(), g)
}

fn parse(text: &str, g: &Grading) -> Polynomial {
    parse_polynomial(text, g.names(), FieldMode::Rational).unwrap()
}

/// Entry of a model's matrix as a polynomial.
fn entry(m: &SurfaceModel, i: usize, j: usize) -> Polynomial {
    m.matrix.entry(i, j).unwrap()
}

fn var(m: &SurfaceModel, name: &str) -> Polynomial {
    Polynomial::var(7, m.grading.index_of(name).unwrap(), m.mode)
}

#[test]
fn symbolic_example1_reproduces_the_five_generators() {
    let (m, g) = symbolic_example1();
    let expected = [
        "t0*x1*q3 - t0*x3*q2 + t0*x4*q1",
        "x0*q3 - x2*q2 + x3*q1",
        "t1*q3 - t0*x2*x4 + t0*x3^2",
        "t1*q2 - t0*x0*x4 + t0*x1*x3",
        "t1*q1 - t0*x0*x3 + t0*x1*x2",
    ];
    let got = pfaffian_ideal(&m);
    for (k, e) in expected.iter().enumerate() {
        assert_eq!(got[k], parse(e, &g), "Pf{}", k + 1);
    }
    assert_eq!(sub_pfaffian(&m, 3).unwrap(), parse(expected[2], &g));
    assert_eq!(sub_pfaffian(&m, 1).unwrap(), parse(expected[0], &g));
}

#[test]
fn index_out_of_range() {
    let (m, _) = symbolic_example1();
    assert!(matches!(sub_pfaffian(&m, 0), Err(Error::IndexOutOfRange { .. })));
    assert!(matches!(sub_pfaffian(&m, 6), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn zero_matrix_has_zero_pfaffians() {
    let m = SkewMatrix::zero(7);
    for k in 1..=5 {
        assert!(sub_pfaffian(&m, k).unwrap().is_zero());
    }
}

#[test]
fn skew_symmetry_is_structural() {
    let (m, _) = symbolic_example1();
    for i in 1..=5 {
        assert!(m.entry(i, i).unwrap().is_zero());
        for j in 1..=5 {
            assert_eq!(m.entry(i, j).unwrap(), m.entry(j, i).unwrap().neg());
        }
    }
}

#[test]
fn example2_cubic_generator() {
    let m = build_example2(1, 7).unwrap();
    let (q1, q2, q3) = (entry(&m, 3, 4), entry(&m, 3, 5), entry(&m, 4, 5));
    let (t0, x1, x3, x4) = (var(&m, "t0"), var(&m, "x1"), var(&m, "x3"), var(&m, "x4"));
    let c1 = t0.mul(&t0.mul(&x1).mul(&q3).sub(&x3.mul(&q2)).add(&x4.mul(&q1)));
    assert_eq!(m.generators[0], c1);
}

#[test]
fn example3_cubic_generator() {
    let m = build_example3(1, 7).unwrap();
    let (q1, q2, q3) = (entry(&m, 3, 4), entry(&m, 3, 5), entry(&m, 4, 5));
    let (t0, x0, x2, x3) = (var(&m, "t0"), var(&m, "x0"), var(&m, "x2"), var(&m, "x3"));
    let c2 = t0.pow(2).mul(&x0).mul(&q3).sub(&x2.mul(&q2)).add(&x3.mul(&q1));
    assert_eq!(m.generators[1], c2);
}

#[test]
fn example1_twists() {
    let m = build_example1(7);
    let t = infer_twists(&m.matrix, &m.grading).unwrap();
    assert_eq!(t.total, BiDegree::new(0, 2));
    let rows = [(0, 1), (-1, 1), (0, 0), (0, 0), (0, 0)].map(|(b, f)| BiDegree::new(b, f));
    assert_eq!(t.rows, rows);
    let degrees = [(1, 3), (0, 3), (1, 2), (1, 2), (1, 2)].map(|(b, f)| BiDegree::new(b, f));
    assert_eq!(t.pfaffian_degrees(), degrees);
    for (g, d) in m.generators.iter().zip(degrees) {
        assert_eq!(g.bidegree(&m.grading).unwrap(), d);
    }
}

#[test]
fn single_entry_is_twist_homogeneous() {
    let g = Grading::product();
    let mut m = SkewMatrix::zero(7);
    m.set(2, 4, parse("t0^2*x1*x3^2", &g)).unwrap();
    assert!(infer_twists(&m, &g).is_ok());
}

#[test]
fn inconsistent_twists_are_reported() {
    let model = build_example1(7);
    let mut m = model.matrix.clone();
    m.set(1, 2, parse("x0", &model.grading)).unwrap();
    assert!(matches!(infer_twists(&m, &model.grading), Err(Error::NotTwistHomogeneous { .. })));
}

#[test]
fn non_homogeneous_entry_is_rejected() {
    let g = Grading::product();
    let mut m = SkewMatrix::zero(7);
    m.set(1, 2, parse("t0 + x0", &g)).unwrap();
    assert!(matches!(infer_twists(&m, &g), Err(Error::NotHomogeneous { .. })));
}

#[test]
fn every_family_is_twist_homogeneous() {
    for a in 0..=3 {
        let m = build_example2(a, 7).unwrap();
        let t = infer_twists(&m.matrix, &m.grading).unwrap();
        for (g, d) in m.generators.iter().zip(t.pfaffian_degrees()) {
            assert_eq!(g.bidegree(&m.grading).unwrap(), d, "a = {a}");
        }
    }
    for d in 1..=2 {
        let m = build_example3(d, 7).unwrap();
        let t = infer_twists(&m.matrix, &m.grading).unwrap();
        for (g, deg) in m.generators.iter().zip(t.pfaffian_degrees()) {
            assert_eq!(g.bidegree(&m.grading).unwrap(), deg, "d = {d}");
        }
    }
}

#[test]
fn syzygies_vanish_on_examples() {
    let models = [build_example1(7), build_example2(1, 7).unwrap(), build_example3(1, 7).unwrap()];
    for m in &models {
        for j in 1..=5 {
            assert!(pfaffian_syzygy(&m.matrix, j).unwrap().is_zero(), "{} row {j}", m.family);
        }
    }
    let (m, _) = symbolic_example1();
    for j in 1..=5 {
        assert!(pfaffian_syzygy(&m, j).unwrap().is_zero());
    }
}

#[test]
fn pfaffians_match_perfect_matchings() {
    let mut rng = common::rng(2024);
    for _ in 0..100 {
        let (a, m) = common::random_numeric_skew(&mut rng);
        for k in 1..=5 {
            let idx: Vec<usize> = (0..5).filter(|&i| i != k - 1).collect();
            let oracle = common::pfaffian_by_matchings(&a, &idx);
            let got = sub_pfaffian(&m, k).unwrap();
            let value = got.terms().first().map(|(_, c)| c.as_rational().unwrap().clone()).unwrap_or_default();
            assert_eq!(value, oracle);
            assert_eq!(&oracle * &oracle, common::determinant(&a, &idx));
        }
        for j in 1..=5 {
            assert!(pfaffian_syzygy(&m, j).unwrap().is_zero());
        }
    }
}

#[test]
fn relation_search_recovers_syzygies() {
    let m = build_example1(7);
    let g = &m.generators;
    let t1 = var(&m, "t1");
    let rel = relation_search(&t1.mul(&g[1]), &g[2..5], &m.grading, BiDegree::new(0, 1)).unwrap().unwrap();
    let expected: Vec<Polynomial> = ["x0", "-x2", "x3"].iter().map(|s| parse(s, &m.grading)).collect();
    assert_eq!(rel.multipliers, expected);

    let rel = relation_search(&t1.mul(&g[0]), &g[2..5], &m.grading, BiDegree::new(1, 1)).unwrap().unwrap();
    let expected: Vec<Polynomial> = ["t0*x1", "-t0*x3", "t0*x4"].iter().map(|s| parse(s, &m.grading)).collect();
    assert_eq!(rel.multipliers, expected);
    assert!(relation_residual(&t1.mul(&g[0]), &g[2..5], &expected).is_zero());
}

#[test]
fn misprinted_relation_leaves_a_residual() {
    let m = build_example1(7);
    let g = &m.generators;
    let t1 = var(&m, "t1");
    let printed: Vec<Polynomial> = ["t0*x1", "-t0*x2", "t0*x4"].iter().map(|s| parse(s, &m.grading)).collect();
    assert!(!relation_residual(&t1.mul(&g[0]), &g[2..5], &printed).is_zero());
}

#[test]
fn generic_cubic_has_no_relation() {
    let m = build_example1(7);
    let cubic = parse("t0*x0^3 + 2*t1*x1^2*x4 - t0*x2*x3*x4", &m.grading);
    assert!(relation_search(&cubic, &m.generators[2..5], &m.grading, BiDegree::new(1, 1)).unwrap().is_none());
}

#[test]
fn matrix_json_round_trip() {
    let m = build_example1(7);
    let json = matrix_to_json(&m.matrix, &m.grading);
    assert_eq!(json.entries["1,2"], "t1");
    let back = matrix_from_json(&json, &m.grading, FieldMode::Rational).unwrap();
    assert_eq!(back, m.matrix);
    let text = serde_json::to_string(&json).unwrap();
    let parsed: MatrixJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed, json);
}

#[test]
fn matrix_json_rejects_bad_keys() {
    let g = Grading::product();
    assert!(matches!(
        matrix_from_json(&entries(&[("2,1", "t0")]), &g, FieldMode::Rational),
        Err(Error::InvalidModel(_))
    ));
    assert!(matches!(
        matrix_from_json(&entries(&[("1,2", "x5")]), &g, FieldMode::Rational),
        Err(Error::UnknownVariable(_))
    ));
}

proptest! {
    #[test]
    fn scaling_a_row_and_column(seed in any::<u64>(), i in 1usize..=5, lambda in -7i64..=7) {
        prop_assume!(lambda != 0);
        let mut rng = common::rng(seed);
        let (_, m) = common::random_numeric_skew(&mut rng);
        let l = common::q(lambda);
        let scaled = m.scale_row_col(i, &l).unwrap();
        for k in 1..=5 {
            let before = sub_pfaffian(&m, k).unwrap();
            let after = sub_pfaffian(&scaled, k).unwrap();
            if k == i {
                prop_assert_eq!(after, before);
            } else {
                prop_assert_eq!(after, before.scale(&l));
            }
        }
    }
}
