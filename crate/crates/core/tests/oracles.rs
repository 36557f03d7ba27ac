//! Frozen small-case values, one test per module.

use num::{BigRational, One, Zero};
use num_complex::Complex64;
use strlink::alexander::{
    alexander_function, alexander_one_var_closure, alexander_poly_closure, closure_matrix, full_report, knot_closure_relation,
    torsion,
};
use strlink::algebra::series::{taylor_expand, z_names};
use strlink::algebra::text::{default_var_names, parse_poly, parse_ratfunc};
use strlink::diagram::{parse_input, MorseEvent::*};
use strlink::gassner::{burau, full_twist, gassner, reduce, solve_fox, unitary_spectrum_check};
use strlink::walks::{solve_labeling, twist_formula, twist_formula_first};
use strlink::wirtinger::{check_augmentation, presentation, FoxMatrix};
use strlink::{LaurentPoly, MorseWord, RatFunc, RatMatrix, TruncatedSeries};

fn v2() -> Vec<String> {
    default_var_names(2)
}

fn t1() -> Vec<String> {
    vec!["t".into()]
}

fn p2(s: &str) -> LaurentPoly {
    parse_poly(s, &v2()).unwrap()
}

fn p1(s: &str) -> LaurentPoly {
    parse_poly(s, &t1()).unwrap()
}

fn mat(nvars: usize, names: &[String], rows: &[&[&str]]) -> RatMatrix {
    let rows = rows.iter().map(|r| r.iter().map(|s| parse_ratfunc(s, names).unwrap()).collect()).collect();
    RatMatrix::from_rows(nvars, rows).unwrap()
}

fn golden() -> RatMatrix {
    mat(2, &v2(), &[&["t2", "1 - t1"], &["(1 - t2)*t2", "1 - t2 + t1*t2"]])
}

fn braid(n: usize, g: &[(usize, bool)]) -> MorseWord {
    MorseWord::from_braid(n, g).unwrap()
}

fn hopf() -> MorseWord {
    braid(2, &[(1, true), (1, true)])
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

#[test]
fn algebra_values() {
    assert!(p2("1 - t1").augment().is_zero());
    assert!(p2("t1*t2").augment().is_one());
    assert!(p2("1 - t2 + t1*t2").augment().is_one());

    assert!(p2("t1*t2").normalize_unit().unwrap().is_one());
    assert_eq!(p2("-t1^-1*(1 - t1)").normalize_unit().unwrap(), p2("1 - t1").normalize_unit().unwrap());
    assert_eq!(p1("t^2 - t^3 + t^4").normalize_unit().unwrap(), p1("1 - t + t^2"));

    assert!(RatMatrix::identity(3, 2).det().unwrap().is_one());
    let one_by_one = mat(2, &v2(), &[&["1 - t2 + t1*t2"]]);
    assert_eq!(one_by_one.det().unwrap(), RatFunc::from_poly(p2("1 - t2 + t1*t2")));
    let ig = golden().one_minus().unwrap();
    assert!(ig.det().unwrap().is_zero());
    assert_eq!(ig.rank(), 1);
    assert_eq!(RatMatrix::zeros(2, 2, 2).rank(), 0);

    let m = mat(1, &t1(), &[&["1 - t", "t"], &["0", "1"]]);
    let b = mat(1, &t1(), &[&["1"], &["0"]]);
    assert_eq!(m.solve(&b).unwrap(), mat(1, &t1(), &[&["1/(1 - t)"], &["0"]]));

    let z = z_names(2);
    let series = |s: &str, n| TruncatedSeries::from_poly(parse_poly(s, &z).unwrap(), n);
    assert_eq!(taylor_expand(&RatFunc::from_poly(p2("t2")), 2).unwrap(), series("1 - z2", 2));
    assert_eq!(taylor_expand(&parse_ratfunc("1/t1", &v2()).unwrap(), 2).unwrap(), series("1 + z1 + z1^2", 2));
    assert_eq!(taylor_expand(&RatFunc::from_poly(p2("1 - t2 + t1*t2")), 2).unwrap(), series("1 - z1 + z1*z2", 2));
}

#[test]
fn diagram_values() {
    let w = parse_input("sl 2\ncolors 1 2\nx 1 +\nx 1 +\nend").unwrap();
    assert_eq!(w.events(), &[CrossPos(1), CrossPos(1)]);
    assert_eq!(parse_input("sl 1\ncolors 1\nend").unwrap(), MorseWord::trivial(1));
    assert!(parse_input("sl 2\ncolors 1 2\nx 5 +\nend").is_err());

    let d = w.trace().unwrap();
    assert_eq!((d.crossing_count(), d.arc_count()), (2, 4));
    assert!(d.crossings.iter().all(|x| x.sign == 1));
    assert_eq!(MorseWord::trivial(2).trace().unwrap().crossing_count(), 2);
    assert_eq!(braid(2, &[(1, true)]).trace().unwrap().crossing_count(), 2);

    let s1 = braid(2, &[(1, true)]);
    assert_eq!(s1.stack(&s1).unwrap().events(), hopf().events());
    assert_eq!(gassner(&MorseWord::trivial(2).stack(&hopf()).unwrap()).unwrap().matrix, golden());
    assert_eq!(braid(3, &[]), MorseWord::trivial(3));
    assert!(!braid(3, &[(1, true), (2, true), (1, true)]).is_pure().unwrap());

    let flipped = hopf().flip_crossing(1).unwrap();
    assert_eq!(flipped.events(), &[CrossNeg(1), CrossPos(1)]);
    assert!(gassner(&flipped).unwrap().is_identity());
    assert_eq!(flipped.flip_crossing(1).unwrap(), hopf());
}

#[test]
fn kinks_leave_gassner_unchanged() {
    let k1 = MorseWord::trivial(1).add_kink(1).unwrap();
    assert_eq!(k1.trace().unwrap().crossing_count(), 1);
    assert!(gassner(&k1).unwrap().is_identity());
    let k2 = k1.add_kink(1).unwrap();
    assert_eq!(k2.trace().unwrap().crossing_count(), 2);
    assert!(gassner(&k2).unwrap().is_identity());
    assert_eq!(gassner(&hopf().add_kink(1).unwrap()).unwrap().matrix, golden());
}

#[test]
fn wirtinger_values() {
    let p = presentation(&hopf().trace().unwrap());
    assert_eq!((p.relators.len(), p.generator_count()), (2, 4));
    let p = presentation(&MorseWord::trivial(1).trace().unwrap());
    assert_eq!((p.relators.len(), p.generator_count()), (1, 2));

    // a b a^-1 c^-1 with b and c on one component
    let row = strlink::wirtinger::fox_row(&[(0, 1), (1, 1), (0, -1), (2, -1)], &[0, 1, 1], 3);
    let v = default_var_names(3);
    assert_eq!(row[0], parse_poly("1 - t2", &v).unwrap());
    assert_eq!(row[1], parse_poly("t1", &v).unwrap());
    assert_eq!(row[2], parse_poly("-1", &v).unwrap());

    let mut f = FoxMatrix::from_diagram(&hopf().trace().unwrap());
    check_augmentation(&f).unwrap();
    f.rows[0] = f.rows[1].clone();
    assert!(check_augmentation(&f).is_err());
}

#[test]
fn gassner_values() {
    assert!(gassner(&MorseWord::trivial(3)).unwrap().is_identity());
    assert_eq!(gassner(&hopf()).unwrap().matrix, golden());
    let hh = hopf().stack(&hopf()).unwrap();
    assert_eq!(gassner(&hh).unwrap().matrix, golden().try_mul(&golden()).unwrap());

    assert_eq!(burau(&braid(2, &[(1, true)])).unwrap().matrix, mat(1, &t1(), &[&["0", "1"], &["t", "1 - t"]]));
    let specialized = golden().try_map_vars(1, RatFunc::specialize_single).unwrap();
    assert_eq!(burau(&hopf()).unwrap().matrix, specialized);

    assert_eq!(reduce(&gassner(&hopf()).unwrap()).unwrap(), mat(2, &v2(), &[&["t1*t2"]]));
    assert!(reduce(&gassner(&MorseWord::trivial(3)).unwrap()).unwrap().is_identity());
    assert_eq!(reduce(&burau(&braid(2, &[(1, true)])).unwrap()).unwrap(), mat(1, &t1(), &[&["-t"]]));

    assert!(full_twist(1).is_identity());
    assert_eq!(full_twist(1).matrix, gassner(&MorseWord::trivial(1)).unwrap().matrix);
    assert_eq!(full_twist(2).matrix, golden());

    let angles = [0.05, 0.12];
    let r = reduce(&gassner(&hopf()).unwrap()).unwrap();
    let s = unitary_spectrum_check(&r, &angles, 1e-8).unwrap();
    let expect = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * 0.17);
    assert_eq!(s.eigenvalues.len(), 1);
    assert!((s.eigenvalues[0] - expect).norm() < 1e-8);
    assert!(s.max_deviation < 1e-12);
}

#[test]
fn closure_values() {
    for w in [hopf(), braid(3, &[(1, true), (2, false), (1, true)]), braid(2, &[(1, false); 3])] {
        let sol = solve_fox(&w.trace().unwrap()).unwrap();
        let v = closure_matrix(&sol);
        let nv = v.matrix.nvars();
        let wv = RatMatrix::from_fn(v.colors.len(), 1, nv, |i, _| {
            RatFunc::from_poly(&LaurentPoly::one(nv) - &LaurentPoly::var(nv, v.colors[i]))
        });
        assert!(v.matrix.try_mul(&wv).unwrap().is_zero());
        assert!(torsion(&sol).unwrap().is_one());
    }

    let sol = solve_fox(&MorseWord::trivial(2).trace().unwrap()).unwrap();
    assert!(alexander_poly_closure(&closure_matrix(&sol)).unwrap().is_zero());
    assert!(alexander_function(&gassner(&MorseWord::trivial(2)).unwrap()).unwrap().is_zero());
    let sol = solve_fox(&MorseWord::trivial(1).add_kink(1).unwrap().trace().unwrap()).unwrap();
    assert!(torsion(&sol).unwrap().is_one());

    assert_eq!(alexander_function(&gassner(&hopf()).unwrap()).unwrap(), RatFunc::from_poly(p2("t1*t2")));

    let r = full_report(&hopf()).unwrap();
    assert!(r.all_passed(), "{:?}", r.checks);
    assert_eq!(r.closure_poly, Some(LaurentPoly::one(2)));
    assert!(r.torsion.is_one());
    assert_eq!(r.closure_one_var, p1("1 - t"));

    let s13 = braid(2, &[(1, true); 3]);
    assert_eq!(alexander_one_var_closure(&s13).unwrap(), p1("1 - t + t^2"));
    let rb = reduce(&burau(&s13).unwrap()).unwrap();
    assert_eq!(rb.one_minus().unwrap().det().unwrap(), RatFunc::from_poly(p1("1 + t^3")));
    assert!(alexander_one_var_closure(&MorseWord::trivial(2)).unwrap().is_zero());

    let b = braid(2, &[(1, true)]);
    for k in 1..=3 {
        assert!(knot_closure_relation(&braid(2, &vec![(1, true); 2 * k]), Some(&b)).unwrap().holds, "k = {k}");
        assert!(knot_closure_relation(&braid(2, &vec![(1, false); 2 * k]), Some(&b)).unwrap().holds, "k = -{k}");
    }
}

#[test]
fn walk_values() {
    let d = hopf().trace().unwrap();
    let labels = solve_labeling(&d, &[RatFunc::one(2), RatFunc::zero(2)]).unwrap();
    assert_eq!(labels[d.bottom_edges[0]], RatFunc::from_poly(p2("t2")));
    assert_eq!(labels[d.bottom_edges[1]], RatFunc::from_poly(p2("(1 - t2)*t2")));

    let d = MorseWord::trivial(2).trace().unwrap();
    let top = [RatFunc::from_int(2, 3), RatFunc::from_int(2, -5)];
    let labels = solve_labeling(&d, &top).unwrap();
    for (s, edges) in d.strand_edges.iter().enumerate() {
        for &e in edges {
            assert_eq!(labels[e], top[s]);
        }
    }

    let trivial = gassner(&MorseWord::trivial(2)).unwrap();
    assert!(twist_formula(&trivial, 1).unwrap().is_identity());
    assert!(gassner(&MorseWord::trivial(2).add_twist(1).unwrap()).unwrap().is_identity());

    let g = gassner(&hopf()).unwrap();
    let once = twist_formula_first(&g).unwrap();
    assert_eq!(gassner(&hopf().add_twist(1).unwrap()).unwrap().matrix, once.matrix);
    let twice = twist_formula_first(&once).unwrap();
    assert_eq!(gassner(&hopf().add_twist(1).unwrap().add_twist(1).unwrap()).unwrap().matrix, twice.matrix);
}

#[test]
fn finite_type_values() {
    let s = strlink::finitetype::taylor_gassner(&hopf(), 2).unwrap();
    assert_eq!(s.coefficient(&[1, 0])[0][1], int(1));
    assert_eq!(s.coefficient(&[0, 0])[0][0], int(1));
    assert!(strlink::finitetype::taylor_gassner(&MorseWord::trivial(2), 3).unwrap() == strlink::finitetype::SeriesMatrix::identity(2, 2, 3));
    let sum = strlink::finitetype::alternating_sum(&hopf(), &[1, 2], None).unwrap();
    assert!(sum.vanishes_below(2));
}
