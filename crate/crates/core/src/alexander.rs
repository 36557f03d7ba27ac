//! Alexander polynomials of closures, the Alexander rational function of a
//! string link, and torsion.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{LaurentPoly, Monomial, RatFunc, RatMatrix};
use crate::diagram::{Diagram, MorseWord};
use crate::error::{Error, Result};
use crate::gassner::{self, solve_fox, FoxSolution, GassnerMatrix};

/// The closure matrix `V = (A + C  B)`; column `j` is colored by
/// `colors[j]`.
#[derive(Clone, Debug)]
pub struct ClosureMatrix {
    pub matrix: RatMatrix,
    pub colors: Vec<usize>,
}

pub fn closure_matrix(sol: &FoxSolution) -> ClosureMatrix {
    let f = &sol.fox;
    let (n, c) = (f.n, f.c);
    let matrix = RatMatrix::from_fn(c, c, f.nvars, |i, j| {
        if j < n {
            RatFunc::from_poly(&f.rows[i][j] + &f.rows[i][c + j])
        } else {
            RatFunc::from_poly(f.rows[i][j].clone())
        }
    });
    ClosureMatrix { matrix, colors: f.colors[..c].to_vec() }
}

/// `V - (A B) [[I - gamma, 0], [-Z, I]]`, zero when the factorization holds.
pub fn factorization_residual(sol: &FoxSolution) -> Result<RatMatrix> {
    let v = closure_matrix(sol).matrix;
    let (n, c, nv) = (sol.fox.n, sol.fox.c, sol.fox.nvars);
    let one_minus = sol.gamma.one_minus()?;
    let right = RatMatrix::from_fn(c, c, nv, |i, j| match (i < n, j < n) {
        (true, true) => one_minus[(i, j)].clone(),
        (true, false) => RatFunc::zero(nv),
        (false, true) => -&sol.z[(i - n, j)],
        (false, false) => {
            if i == j {
                RatFunc::one(nv)
            } else {
                RatFunc::zero(nv)
            }
        }
    });
    Ok(v.try_sub(&sol.fox.ab().try_mul(&right)?)?.reduce_entries())
}

fn one_minus_var(nvars: usize, v: usize) -> LaurentPoly {
    &LaurentPoly::one(nvars) - &LaurentPoly::var(nvars, v)
}

/// `det V(i, j) / (1 - t_{color(j)})`, exact, before unit normalization.
pub fn closure_minor_quotient(v: &ClosureMatrix, i: usize, j: usize) -> Result<LaurentPoly> {
    let m = v.matrix.minor(i, j).det()?;
    let p = m.to_poly().ok_or(Error::NotExact)?;
    p.div_exact(&one_minus_var(v.matrix.nvars(), v.colors[j])).ok_or(Error::NotExact)
}

/// Multi-variable Alexander polynomial of the closure, normalized up to
/// units; needs at least two colors.
pub fn alexander_poly_closure(v: &ClosureMatrix) -> Result<LaurentPoly> {
    if v.matrix.nvars() < 2 {
        return Err(Error::Shape("multi-variable polynomial needs at least two colors".into()));
    }
    normalize_or_zero(&closure_minor_quotient(v, 0, 0)?)
}

fn normalize_or_zero(p: &LaurentPoly) -> Result<LaurentPoly> {
    if p.is_zero() {
        Ok(p.clone())
    } else {
        p.normalize_unit()
    }
}

/// `k` distinct `(row, column)` pairs drawn with a fixed seed.
pub fn sample_pairs(size: usize, k: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = size * size;
    sample(&mut rng, total, k.min(total)).into_iter().map(|x| (x / size, x % size)).collect()
}

/// Checks that every listed minor quotient agrees up to units.
pub fn minor_independence(v: &ClosureMatrix, pairs: &[(usize, usize)]) -> Result<bool> {
    let reference = normalize_or_zero(&closure_minor_quotient(v, 0, 0)?)?;
    for &(i, j) in pairs {
        if normalize_or_zero(&closure_minor_quotient(v, i, j)?)? != reference {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One-variable polynomial of the closure, `det alpha(V)(1, 1)`.
pub fn alexander_one_var_closure(w: &MorseWord) -> Result<LaurentPoly> {
    let sol = solve_fox(&w.monochrome().trace()?)?;
    let v = closure_matrix(&sol);
    let d = v.matrix.minor(0, 0).det()?.to_poly().ok_or(Error::NotExact)?;
    normalize_or_zero(&d)
}

/// `(-1)^{i+j} (t_1...t_{i+1}) det(I - gamma)(i, j) / (1 - t_{color(j)})`
/// for 0-based `i, j`.
pub fn alexander_function_at(g: &GassnerMatrix, i: usize, j: usize) -> Result<RatFunc> {
    let m = g.matrix.one_minus()?.minor(i, j).det()?;
    let w = RatFunc::from_poly(one_minus_var(g.nvars, g.colors[j]));
    let mut r = m.mul_poly(&g.prefix_product(i)).checked_div(&w).ok_or(Error::Singular)?.reduce();
    if (i + j) % 2 == 1 {
        r = -r;
    }
    Ok(r)
}

/// The Alexander rational function at `(i, j) = (1, 1)`.
pub fn alexander_function(g: &GassnerMatrix) -> Result<RatFunc> {
    alexander_function_at(g, 0, 0)
}

/// One-variable version `t det(I - beta)(1, 1)`.
pub fn alexander_function_one_var(b: &GassnerMatrix) -> Result<RatFunc> {
    let m = b.matrix.one_minus()?.minor(0, 0).det()?;
    Ok(m.mul_poly(&LaurentPoly::var(b.nvars, 0)).reduce())
}

/// `det(A B)`, normalized, after checking integrality and augmentation.
pub fn torsion(sol: &FoxSolution) -> Result<LaurentPoly> {
    let d = sol.fox.ab().det()?.to_poly().ok_or(Error::NotExact)?;
    if !d.has_integer_coefficients() {
        return Err(Error::Invariant("torsion has non-integer coefficients".into()));
    }
    let a = d.augment();
    if a != num::BigRational::from_integer(1.into()) && a != num::BigRational::from_integer((-1).into()) {
        return Err(Error::Invariant(format!("torsion augments to {a}")));
    }
    d.normalize_unit()
}

/// Representative of `r` up to signed monomials: numerator and
/// denominator each unit-normalized after reduction.
pub fn normalize_rat_unit(r: &RatFunc) -> RatFunc {
    let r = r.reduce();
    if r.is_zero() {
        return r;
    }
    let num = r.num().normalize_unit().expect("nonzero");
    let den = r.den().normalize_unit().expect("nonzero");
    let out = RatFunc::new(num, den).expect("nonzero denominator");
    if out.num().normalize_unit().expect("nonzero") == -out.num() {
        -out
    } else {
        out
    }
}

/// `a` and `b` agree up to a signed monomial, or are both zero.
pub fn associate_rat(a: &RatFunc, b: &RatFunc) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    (a.num() * b.den()).associate(&(b.num() * a.den()))
}

#[derive(Clone, Debug)]
pub struct AlexReport {
    pub n: usize,
    pub crossings: usize,
    pub gassner: GassnerMatrix,
    pub reduced: Option<RatMatrix>,
    pub torsion: LaurentPoly,
    pub torsion_one_var: LaurentPoly,
    /// `None` for a single color.
    pub closure_poly: Option<LaurentPoly>,
    pub closure_one_var: LaurentPoly,
    pub alexander_function: RatFunc,
    pub alexander_function_one_var: RatFunc,
    pub checks: Vec<(String, bool)>,
}

impl AlexReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

fn burau_of(w: &MorseWord) -> Result<(FoxSolution, GassnerMatrix)> {
    let d = w.monochrome().trace()?;
    let sol = solve_fox(&d)?;
    let g = gassner::gassner_from_diagram(&d)?;
    Ok((sol, g))
}

/// Every invariant of a colored string link with its consistency checks.
pub fn full_report(w: &MorseWord) -> Result<AlexReport> {
    full_report_seeded(w, 0)
}

pub fn full_report_seeded(w: &MorseWord, seed: u64) -> Result<AlexReport> {
    let d: Diagram = w.trace()?;
    let sol = solve_fox(&d)?;
    let g = gassner::gassner_from_diagram(&d)?;
    let (bsol, b) = burau_of(w)?;
    let mut checks = Vec::new();

    checks.push(("factorization".to_string(), factorization_residual(&sol)?.is_zero()));
    let tau = torsion(&sol)?;
    let tau1 = torsion(&bsol)?;
    let v = closure_matrix(&sol);
    let c = sol.fox.c;
    let closure_poly = if d.ncolors >= 2 {
        checks.push(("minor independence".into(), minor_independence(&v, &sample_pairs(c, 3, seed))?));
        Some(alexander_poly_closure(&v)?)
    } else {
        None
    };
    let bv = closure_matrix(&bsol);
    let closure_one_var = normalize_or_zero(&bv.matrix.minor(0, 0).det()?.to_poly().ok_or(Error::NotExact)?)?;

    let af = alexander_function(&g)?;
    let af1 = alexander_function_one_var(&b)?;
    if g.n >= 2 {
        let (i, j) = sample_pairs(g.n, 1, seed ^ 0x5eed)[0];
        checks.push(("function index independence".into(), alexander_function_at(&g, i, j)? == af));
    }
    if let Some(cp) = &closure_poly {
        let prod = af.mul_poly(&tau);
        checks.push(("closure = torsion * function".into(), associate_rat(&RatFunc::from_poly(cp.clone()), &prod)));
    }
    checks.push((
        "one-variable closure = torsion * function".into(),
        associate_rat(&RatFunc::from_poly(closure_one_var.clone()), &af1.mul_poly(&tau1)),
    ));
    let reduced = if g.n >= 2 { Some(gassner::reduce(&g)?) } else { None };
    if g.n >= 2 && w.is_pure()? {
        checks.push(("reduced multi-variable identity".into(), reduced_identity(&g)?));
        checks.push(("reduced one-variable identity".into(), reduced_identity_one_var(&b)?));
    }
    Ok(AlexReport {
        n: d.n,
        crossings: c,
        gassner: g,
        reduced,
        torsion: tau,
        torsion_one_var: tau1,
        closure_poly,
        closure_one_var,
        alexander_function: af,
        alexander_function_one_var: af1,
        checks,
    })
}

/// `Delta_L = ± det(I - reduced) / ((t_1...t_n)^{-1} - 1)` for pure links.
pub fn reduced_identity(g: &GassnerMatrix) -> Result<bool> {
    let r = gassner::reduce(g)?;
    let lhs = alexander_function(g)?;
    let all = Monomial::from_exps(&vec![1; g.nvars]);
    let den = &LaurentPoly::monomial(all.inv()) - &LaurentPoly::one(g.nvars);
    let rhs = r.one_minus()?.det()?.checked_div(&RatFunc::from_poly(den)).ok_or(Error::Singular)?;
    Ok(lhs == rhs || lhs == -rhs)
}

/// `Delta_L = det(I - reduced) / (t^{-1} + ... + t^{-n})` for Burau.
pub fn reduced_identity_one_var(b: &GassnerMatrix) -> Result<bool> {
    let r = gassner::reduce(b)?;
    let lhs = alexander_function_one_var(b)?;
    let mut den = LaurentPoly::zero(1);
    for k in 1..=b.n as i32 {
        den += &LaurentPoly::monomial(Monomial::var(1, 0, -k));
    }
    let rhs = r.one_minus()?.det()?.checked_div(&RatFunc::from_poly(den)).ok_or(Error::Singular)?;
    Ok(lhs == rhs)
}

#[derive(Clone, Debug)]
pub struct KnotClosureCheck {
    pub link_poly: LaurentPoly,
    pub knot_poly: LaurentPoly,
    pub det_l: RatFunc,
    pub det_lb: RatFunc,
    pub holds: bool,
}

/// Relates the closure of `L` to the closure of `L B`:
/// `Delta(L^) det(I - r(L) r(B)) = Delta((LB)^) det(I - r(L))` up to units,
/// with `r` the reduced Burau matrix. `b` defaults to `s1 ... s_{n-1}`.
pub fn knot_closure_relation(l: &MorseWord, b: Option<&MorseWord>) -> Result<KnotClosureCheck> {
    let n = l.n();
    if n < 2 {
        return Err(Error::Shape("needs at least two strands".into()));
    }
    let default;
    let b = match b {
        Some(b) => b,
        None => {
            default = MorseWord::from_braid(n, &(1..n).map(|i| (i, true)).collect::<Vec<_>>())?;
            &default
        }
    };
    let lm = l.monochrome();
    let bm = b.monochrome();
    let rl = gassner::reduce(&gassner::gassner(&lm)?)?;
    let rb = gassner::reduce(&gassner::gassner(&bm)?)?;
    let det_lb = rl.try_mul(&rb)?.one_minus()?.det()?.reduce();
    if det_lb.is_zero() {
        return Err(Error::Degenerate("det(I - r(L) r(B)) vanishes".into()));
    }
    let det_l = rl.one_minus()?.det()?.reduce();
    let link_poly = alexander_one_var_closure(&lm)?;
    let knot_poly = alexander_one_var_closure(&lm.stack(&bm)?)?;
    let lhs = det_lb.mul_poly(&link_poly);
    let rhs = det_l.mul_poly(&knot_poly);
    let holds = associate_rat(&lhs, &rhs);
    Ok(KnotClosureCheck { link_poly, knot_poly, det_l, det_lb, holds })
}

#[derive(Clone, Debug)]
pub struct IdealRankCheck {
    pub closure_rank: usize,
    pub kernel_dimension: usize,
    /// `(j, E_j vanishes, kernel_dimension >= j + 1)` for `j = 0..=k`.
    pub rows: Vec<(usize, bool, bool)>,
}

impl IdealRankCheck {
    pub fn agrees(&self) -> bool {
        self.rows.iter().all(|(_, a, b)| a == b)
    }
}

/// Compares vanishing of the elementary ideals `E_0..E_k` of the closure
/// with the kernel dimension of `I - gamma`. `E_j` is generated by the
/// `(c - j)`-minors of `V`.
pub fn ideal_rank_check(sol: &FoxSolution, k: usize) -> Result<IdealRankCheck> {
    let v = closure_matrix(sol);
    let c = sol.fox.c;
    let rank_v = v.matrix.rank();
    let kernel_dimension = sol.gamma.rows() - sol.gamma.one_minus()?.rank();
    let rows = (0..=k)
        .map(|j| {
            let vanishes = c < j || rank_v < c - j;
            (j, vanishes, kernel_dimension > j)
        })
        .collect();
    Ok(IdealRankCheck { closure_rank: rank_v, kernel_dimension, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::{default_var_names, parse_poly, parse_ratfunc};
    use crate::diagram::MorseEvent::*;

    fn hopf() -> MorseWord {
        MorseWord::new(2, vec![1, 2], vec![CrossPos(1), CrossPos(1)]).unwrap()
    }

    #[test]
    fn hopf_invariants() {
        let r = full_report(&hopf()).unwrap();
        assert!(r.all_passed(), "{:?}", r.checks);
        assert!(r.closure_poly.as_ref().unwrap().is_one());
        let names = default_var_names(2);
        assert_eq!(r.alexander_function, parse_ratfunc("t1*t2", &names).unwrap());
        assert_eq!(r.closure_one_var, parse_poly("1 - t1", &default_var_names(1)).unwrap().normalize_unit().unwrap());
    }

    #[test]
    fn trivial_closure_vanishes() {
        let r = full_report(&MorseWord::trivial(2)).unwrap();
        assert!(r.closure_poly.as_ref().unwrap().is_zero());
        assert!(r.alexander_function.is_zero());
        assert!(r.all_passed(), "{:?}", r.checks);
    }

    #[test]
    fn trefoil_from_hopf() {
        let k = knot_closure_relation(&hopf(), None).unwrap();
        assert!(k.holds);
        let t = default_var_names(1);
        assert_eq!(k.knot_poly, parse_poly("1 - t1 + t1^2", &t).unwrap());
    }

    #[test]
    fn unit_normal_form() {
        let v = default_var_names(2);
        let r = parse_ratfunc("-t1^2*t2*(1 - t1)/(t2^-1 - t1)", &v).unwrap();
        let n = normalize_rat_unit(&r);
        assert!(associate_rat(&r, &n));
        assert_eq!(normalize_rat_unit(&n), n);
        assert!(normalize_rat_unit(&parse_ratfunc("t1*t2", &v).unwrap()).is_one());
    }

    #[test]
    fn ideals() {
        for (w, dim) in [(MorseWord::trivial(2), 2), (hopf(), 1)] {
            let sol = solve_fox(&w.trace().unwrap()).unwrap();
            let c = ideal_rank_check(&sol, 2).unwrap();
            assert_eq!(c.kernel_dimension, dim);
            assert!(c.agrees(), "{c:?}");
        }
    }
}
