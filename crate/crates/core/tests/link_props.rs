use proptest::prelude::*;
use strlink::finitetype::{alternating_sum, taylor_gassner};
use strlink::gassner::{burau, gassner, reduce};
use strlink::walks::{solve_labeling, walk_matrix};
use strlink::{MorseWord, RatFunc};

fn letters(n: usize, len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((1..n, any::<bool>()), len)
}

/// `u s u^-1` with `s` a product of squared generators, so always pure.
fn pure_word(n: usize) -> impl Strategy<Value = MorseWord> {
    (letters(n, 0..3), letters(n, 1..3)).prop_map(move |(u, sq)| {
        let mut g = u.clone();
        for (i, p) in sq {
            g.push((i, p));
            g.push((i, p));
        }
        g.extend(u.iter().rev().map(|&(i, p)| (i, !p)));
        MorseWord::from_braid(n, &g).unwrap()
    })
}

fn pure_pair() -> impl Strategy<Value = (MorseWord, MorseWord)> {
    (2usize..=3).prop_flat_map(|n| (pure_word(n), pure_word(n)))
}

fn any_braid() -> impl Strategy<Value = MorseWord> {
    (2usize..=3).prop_flat_map(|n| letters(n, 1..6).prop_map(move |g| MorseWord::from_braid(n, &g).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn gassner_is_multiplicative((a, b) in pure_pair()) {
        let ab = gassner(&a.stack(&b).unwrap()).unwrap();
        prop_assert_eq!(ab.matrix, gassner(&a).unwrap().compose(&gassner(&b).unwrap()).unwrap().matrix);
    }

    #[test]
    fn burau_specializes_gassner(w in any_braid()) {
        let g = gassner(&w).unwrap();
        let specialized = g.matrix.try_map_vars(1, RatFunc::specialize_single).unwrap();
        prop_assert_eq!(specialized, burau(&w).unwrap().matrix);
    }

    #[test]
    fn reduction_is_functorial((a, b) in pure_pair()) {
        let (ga, gb) = (gassner(&a).unwrap(), gassner(&b).unwrap());
        let gab = gassner(&a.stack(&b).unwrap()).unwrap();
        let prod = reduce(&ga).unwrap().try_mul(&reduce(&gb).unwrap()).unwrap();
        prop_assert_eq!(reduce(&gab).unwrap(), prod);
    }

    #[test]
    fn reduction_drops_the_trivial_eigenvalue(w in (2usize..=3).prop_flat_map(pure_word)) {
        let g = gassner(&w).unwrap();
        let diff = &g.matrix.trace() - &reduce(&g).unwrap().trace();
        prop_assert!(diff.is_one());
    }

    #[test]
    fn eigenvectors_are_fixed(w in (2usize..=3).prop_flat_map(pure_word)) {
        let (r, l) = gassner(&w).unwrap().eigenvector_residuals();
        prop_assert!(r.iter().chain(&l).all(RatFunc::is_zero));
    }

    #[test]
    fn inverse_cancels(w in any_braid()) {
        let s = w.stack(&w.invert().unwrap()).unwrap();
        prop_assert!(gassner(&s).unwrap().is_identity());
    }

    #[test]
    fn trace_detects_identity(w in (2usize..=3).prop_flat_map(pure_word)) {
        let g = gassner(&w).unwrap();
        let traced_n = g.matrix.trace() == RatFunc::from_int(g.nvars, g.n as i64);
        prop_assert_eq!(traced_n, g.is_identity());
    }

    #[test]
    fn labels_are_linear_and_constant_along_over_passes(
        w in any_braid(), x in -3i64..=3, y in -3i64..=3
    ) {
        let d = w.trace().unwrap();
        let nv = d.ncolors;
        let e = |j: usize, c: i64| (0..d.n).map(|i| RatFunc::from_int(nv, if i == j { c } else { 0 })).collect::<Vec<_>>();
        let last = d.n - 1;
        let mut top = e(0, x);
        top[last] = &top[last] + &RatFunc::from_int(nv, y);
        let sum = solve_labeling(&d, &top).unwrap();
        let a = solve_labeling(&d, &e(0, x)).unwrap();
        let b = solve_labeling(&d, &e(last, y)).unwrap();
        for i in 0..sum.len() {
            prop_assert_eq!(&sum[i], &(&a[i] + &b[i]));
        }
        for c in &d.crossings {
            prop_assert_eq!(&sum[c.over_in], &sum[c.over_out]);
        }
        prop_assert_eq!(walk_matrix(&d).unwrap(), gassner(&w).unwrap().matrix);
    }

    #[test]
    fn taylor_expansion_is_multiplicative((a, b) in pure_pair()) {
        let ab = taylor_gassner(&a.stack(&b).unwrap(), 2).unwrap();
        prop_assert_eq!(ab, taylor_gassner(&a, 2).unwrap().mul(&taylor_gassner(&b, 2).unwrap()));
    }

    #[test]
    fn single_flips_vanish_at_order_zero(w in (2usize..=3).prop_flat_map(pure_word), pick in any::<prop::sample::Index>()) {
        let xs = w.crossing_events();
        let i = xs[pick.index(xs.len())];
        prop_assert!(alternating_sum(&w, &[i], None).unwrap().vanishes_below(1));
        let j = xs[(pick.index(xs.len()) + 1) % xs.len()];
        if i != j {
            prop_assert!(alternating_sum(&w, &[i, j], None).unwrap().vanishes_below(2));
        }
    }
}
