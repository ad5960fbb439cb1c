mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use pencil5::exactalg::{rank_kernel, smith_form, squarefree_part, FieldMode, Scalar, ScalarMatrix, UniPoly, UniPolyMatrix};
use pencil5::Error;

fn qpoly(cs: &[i64]) -> UniPoly {
    UniPoly::from_i64s(FieldMode::Rational, cs)
}

fn factors(m: &UniPolyMatrix) -> Vec<String> {
    smith_form(m).invariant_factors.iter().map(|f| f.to_string_in("s")).collect()
}

#[test]
fn zero_matrix_has_full_kernel() {
    let m = ScalarMatrix::zeros(FieldMode::Rational, 15, 35);
    let (rank, kernel) = rank_kernel(&m);
    assert_eq!(rank, 0);
    assert_eq!(kernel.len(), 35);
}

#[test]
fn identity_has_empty_kernel() {
    let m = ScalarMatrix::identity(FieldMode::Rational, 5);
    let (rank, kernel) = rank_kernel(&m);
    assert_eq!(rank, 5);
    assert!(kernel.is_empty());
}

#[test]
fn kernel_vectors_annihilate() {
    let m = ScalarMatrix::from_i64(FieldMode::Rational, &[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]]);
    let (rank, kernel) = rank_kernel(&m);
    assert_eq!(rank + kernel.len(), 4);
    for v in &kernel {
        assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
    }
}

#[test]
fn smith_of_diagonal() {
    let m = UniPolyMatrix::from_rows(
        FieldMode::Rational,
        vec![
            vec![qpoly(&[1]), qpoly(&[]), qpoly(&[])],
            vec![qpoly(&[]), qpoly(&[0, 1]), qpoly(&[])],
            vec![qpoly(&[]), qpoly(&[]), qpoly(&[0, 0, 1])],
        ],
    );
    assert_eq!(factors(&m), ["1", "s", "s^2"]);
    assert_eq!(smith_form(&m).torsion_length, 3);
}

#[test]
fn smith_of_jordan_block() {
    let m = UniPolyMatrix::from_rows(
        FieldMode::Rational,
        vec![vec![qpoly(&[0, 1]), qpoly(&[1])], vec![qpoly(&[]), qpoly(&[0, 1])]],
    );
    let sf = smith_form(&m);
    assert_eq!(factors(&m), ["1", "s^2"]);
    assert_eq!(sf.torsion_length, 2);
    assert_eq!(sf.rank, 2);
}

#[test]
fn squarefree_examples() {
    assert_eq!(squarefree_part(&qpoly(&[0, 0, 1])).unwrap(), qpoly(&[0, 1]));
    assert_eq!(squarefree_part(&qpoly(&[2, -3, 1])).unwrap(), qpoly(&[2, -3, 1]));
    let sf = squarefree_part(&qpoly(&[0, 0, -1, 1])).unwrap();
    assert_eq!(sf, qpoly(&[0, -1, 1]));
    for r in [0, 1] {
        assert!(qpoly(&[0, 0, -1, 1]).eval(&common::q(r)).is_zero());
        assert!(sf.eval(&common::q(r)).is_zero());
    }
}

#[test]
fn squarefree_rejects_zero_and_inseparable() {
    assert!(matches!(squarefree_part(&UniPoly::zero()), Err(Error::ZeroPolynomial)));
    let f = UniPoly::from_i64s(FieldMode::prime(5).unwrap(), &[1, 0, 0, 0, 0, 1]);
    assert!(matches!(squarefree_part(&f), Err(Error::Inseparable { .. })));
}

#[test]
fn field_mode_parsing() {
    assert_eq!("rational".parse::<FieldMode>().unwrap(), FieldMode::Rational);
    assert_eq!("prime:32003".parse::<FieldMode>().unwrap(), FieldMode::prime(32003).unwrap());
    assert!("prime:32004".parse::<FieldMode>().is_err());
    assert!("real".parse::<FieldMode>().is_err());
}

#[test]
fn smith_rank_matches_fraction_free_rank() {
    let mut rng = common::rng(11);
    for _ in 0..50 {
        let (m, coeffs) = common::random_unipoly_matrix(&mut rng);
        let sf = smith_form(&m);
        assert!(sf.satisfies_divisibility_chain());
        for _ in 0..3 {
            let s = common::small(&mut rng, -3, 3);
            let expected = common::bareiss_rank(common::evaluate_integer(&coeffs, s));
            let predicted = sf.invariant_factors.iter().filter(|d| !d.eval(&common::q(s)).is_zero()).count();
            assert_eq!(predicted, expected, "rank at s = {s}");
            assert!(expected <= sf.rank);
        }
    }
}

fn small_poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 1..4)
}

fn monic_linear_product(roots: &[i64]) -> UniPoly {
    roots.iter().fold(qpoly(&[1]), |acc, &r| acc.mul(&qpoly(&[-r, 1])))
}

proptest! {
    #[test]
    fn rational_sum_round_trips(a in any::<i64>(), b in 1i64..1_000_000, c in any::<i64>(), d in 1i64..1_000_000) {
        let q = FieldMode::Rational;
        let x = q.from_rational(&BigRational::new(BigInt::from(a), BigInt::from(b))).unwrap();
        let y = q.from_rational(&BigRational::new(BigInt::from(c), BigInt::from(d))).unwrap();
        prop_assert_eq!(&(&x + &y) - &y, x);
    }

    #[test]
    fn prime_field_inverse(v in 1i64..32003) {
        let p = FieldMode::prime(32003).unwrap();
        let x = p.from_i64(v);
        prop_assert!((&x * &x.inv()).is_one());
    }

    #[test]
    fn squarefree_of_f_g_squared(f_roots in prop::collection::btree_set(-5i64..=5, 1..4),
                                 g_roots in prop::collection::btree_set(6i64..=10, 1..3)) {
        let f = monic_linear_product(&f_roots.iter().copied().collect::<Vec<_>>());
        let g = monic_linear_product(&g_roots.iter().copied().collect::<Vec<_>>());
        let sf = squarefree_part(&f.mul(&g).mul(&g)).unwrap();
        prop_assert_eq!(sf, f.mul(&g).monic());
    }

    #[test]
    fn division_identity(a in small_poly(), b in small_poly()) {
        let (a, b) = (qpoly(&a), qpoly(&b));
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.div_rem(&b);
        prop_assert_eq!(quo.mul(&b).add(&rem), a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn smith_chain_on_random_products(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let (m, _) = common::random_unipoly_matrix(&mut rng);
        let sf = smith_form(&m);
        prop_assert!(sf.satisfies_divisibility_chain());
        let total: usize = sf.invariant_factors.iter().map(|d| d.degree().unwrap()).sum();
        prop_assert_eq!(total, sf.torsion_length);
    }
}
