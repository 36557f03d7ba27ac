use num::BigRational;
use proptest::prelude::*;
use strlink::algebra::series::taylor_expand;
use strlink::algebra::text::{default_var_names, format_poly, format_ratfunc, parse_poly, parse_ratfunc};
use strlink::json::{matrix_from_json, matrix_to_json};
use strlink::{LaurentPoly, Monomial, RatFunc, RatMatrix};

const NV: usize = 2;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-2i32..=2, -2i32..=2, -3i64..=3), 0..4).prop_map(|terms| {
        LaurentPoly::from_terms(
            NV,
            terms.into_iter().map(|(a, b, c)| (Monomial::from_exps(&[a, b]), BigRational::from_integer(c.into()))),
        )
    })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

/// Denominators not vanishing at `t = 1`, so Taylor expansions exist.
fn expandable() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero_poly().prop_filter("unit at 1", |d| !num::Zero::is_zero(&d.augment())))
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(poly(), n * n).prop_map(move |ps| {
        let rows: Vec<Vec<LaurentPoly>> = ps.chunks(n).map(|c| c.to_vec()).collect();
        RatMatrix::from_polys(NV, &rows)
    })
}

fn names() -> Vec<String> {
    default_var_names(NV)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(NV), a.clone());
    }

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if let Some(inv) = b.inv() {
            prop_assert_eq!(&(&a * &b) * &inv, a.clone());
        }
        prop_assert_eq!(a.reduce(), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn det_is_multiplicative(a in matrix(3), b in matrix(3)) {
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
    }

    #[test]
    fn det_of_transpose(a in matrix(3)) {
        prop_assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
    }

    #[test]
    fn solve_satisfies_system(a in matrix(3), b in matrix(3)) {
        prop_assume!(!a.det().unwrap().is_zero());
        let x = a.solve(&b).unwrap();
        prop_assert_eq!(a.try_mul(&x).unwrap(), b);
    }

    #[test]
    fn taylor_is_a_ring_morphism(a in expandable(), b in expandable()) {
        let bound = 3;
        let ta = taylor_expand(&a, bound).unwrap();
        let tb = taylor_expand(&b, bound).unwrap();
        prop_assert_eq!(taylor_expand(&(&a * &b), bound).unwrap(), ta.mul(&tb));
        prop_assert_eq!(taylor_expand(&(&a + &b), bound).unwrap(), ta.add(&tb));
    }

    #[test]
    fn normalize_unit_is_idempotent_and_absorbs_units(
        p in nonzero_poly(), e1 in -3i32..=3, e2 in -3i32..=3, neg in any::<bool>()
    ) {
        let n = p.normalize_unit().unwrap();
        prop_assert_eq!(n.normalize_unit().unwrap(), n.clone());
        let mut q = p.mul_monomial(&Monomial::from_exps(&[e1, e2]));
        if neg {
            q = -q;
        }
        prop_assert_eq!(q.normalize_unit().unwrap(), n.clone());
        prop_assert!(q.associate(&p));
    }

    #[test]
    fn text_round_trip(p in poly(), r in ratfunc()) {
        let v = names();
        prop_assert_eq!(parse_poly(&format_poly(&p, &v), &v).unwrap(), p);
        prop_assert_eq!(parse_ratfunc(&format_ratfunc(&r, &v), &v).unwrap(), r);
    }

    #[test]
    fn json_round_trip(m in matrix(2), r in ratfunc()) {
        let m = m.scale(&r);
        let text = matrix_to_json(&m, &names()).to_string();
        let (back, vars) = matrix_from_json(&text).unwrap();
        prop_assert_eq!(back, m);
        prop_assert_eq!(vars, names());
    }

    #[test]
    fn bar_is_an_involutive_morphism(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
    }
}
