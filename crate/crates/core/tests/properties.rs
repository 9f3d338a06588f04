use dwbc_core::asm::{enumerate, validate};
use dwbc_core::closedform::{h_refined_1, two_point_from_one, RefinedVector};
use dwbc_core::exactmath::{determinant, rat};
use dwbc_core::inhomog::{zhat_det, InhomSpec};
use dwbc_core::oracle::{self, XPoint};
use dwbc_core::{ExactRational, Field, Poly, QSqrt3, Ring};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = ExactRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn qsqrt3() -> impl Strategy<Value = QSqrt3> {
    (small_rat(), small_rat()).prop_map(|(a, b)| QSqrt3::new(a, b))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly<ExactRational>> {
    prop::collection::vec(small_rat(), 0..max_len).prop_map(Poly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qsqrt3_division_inverts_multiplication(x in qsqrt3(), y in qsqrt3()) {
        prop_assume!(!y.is_zero());
        prop_assert_eq!(&(&x * &y) / &y, x);
    }

    #[test]
    fn poly_division_reconstructs(a in poly(7), b in poly(4)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
    }

    #[test]
    fn determinant_is_multiplicative(m in prop::collection::vec(small_rat(), 9), k in prop::collection::vec(small_rat(), 9)) {
        let a: Vec<Vec<_>> = m.chunks(3).map(|r| r.to_vec()).collect();
        let b: Vec<Vec<_>> = k.chunks(3).map(|r| r.to_vec()).collect();
        let ab: Vec<Vec<ExactRational>> = (0..3)
            .map(|i| (0..3).map(|j| (0..3).fold(ExactRational::zero(), |s, t| s + &a[i][t] * &b[t][j])).collect())
            .collect();
        prop_assert_eq!(determinant(&ab).unwrap(), determinant(&a).unwrap() * determinant(&b).unwrap());
    }

    #[test]
    fn one_point_closed_form_is_a_symmetric_distribution(n in 1usize..40) {
        let h = h_refined_1(n).unwrap();
        prop_assert_eq!(h.sum(), ExactRational::one());
        prop_assert!(h.is_palindromic());
        prop_assert!(h.values.iter().all(|v| *v > ExactRational::zero()));
    }

    #[test]
    fn composed_two_point_has_one_point_marginals(n in 2usize..6, x in small_rat()) {
        prop_assume!(!x.is_zero());
        let xp = XPoint::new(x);
        prop_assume!(!oracle::count_x(n, &xp).unwrap().is_zero() && !oracle::count_x(n - 1, &xp).unwrap().is_zero());
        let hn = RefinedVector::new(oracle::correlators(n, &xp).unwrap().one_point);
        let hm = RefinedVector::new(oracle::correlators(n - 1, &xp).unwrap().one_point);
        let t = two_point_from_one(&hn, &hm).unwrap();
        for r in 0..n {
            let row = t[r].iter().fold(ExactRational::zero(), |s, v| s + v);
            prop_assert_eq!(&row, &hn.values[r]);
        }
    }

    #[test]
    fn inhomogeneous_determinant_is_symmetric(u in prop::collection::btree_set((-12i64..=12, 1i64..=5), 3), x in 1i64..=3) {
        let pts: Vec<ExactRational> = u.into_iter().map(|(p, q)| rat(p, q)).collect();
        let mut distinct = pts.clone();
        distinct.sort();
        distinct.dedup();
        prop_assume!(distinct.len() == 3);
        let a = InhomSpec::from_oracle(4, pts.clone(), &XPoint::from_int(x)).unwrap();
        let rotated = vec![pts[1].clone(), pts[2].clone(), pts[0].clone()];
        let b = InhomSpec::from_oracle(4, rotated, &XPoint::from_int(x)).unwrap();
        prop_assert_eq!(zhat_det(&a).unwrap(), zhat_det(&b).unwrap());
    }

    #[test]
    fn asm_symmetries_preserve_validity(n in 1usize..6, pick in any::<prop::sample::Index>()) {
        let all: Vec<_> = enumerate(n).collect();
        let a = pick.get(&all);
        for b in [a.transpose(), a.reflect_rows(), a.reflect_columns(), a.rotate180()] {
            prop_assert!(validate(&b.to_rows()).is_ok());
            prop_assert_eq!(b.minus_ones(), a.minus_ones());
        }
    }
}

#[test]
fn field_inverse_of_zero_fails() {
    assert!(QSqrt3::zero().inv().is_none());
}
