//! Gassner and Burau matrices of string links.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};
use num_complex::Complex64;

use crate::algebra::matrix::SparseRref;
use crate::algebra::text::default_var_names;
use crate::algebra::{gcd, LaurentPoly, Monomial, RatFunc, RatMatrix};
use crate::diagram::{Diagram, MorseWord};
use crate::error::{Error, Result};
use crate::wirtinger::FoxMatrix;

/// A Gassner matrix with its coloring. Rows index bottom positions and
/// columns index top positions.
#[derive(Clone, Debug, PartialEq)]
pub struct GassnerMatrix {
    pub n: usize,
    pub nvars: usize,
    pub matrix: RatMatrix,
    /// 0-based color of each position, equal at bottom and top.
    pub colors: Vec<usize>,
    pub var_names: Vec<String>,
}

impl GassnerMatrix {
    pub fn entry(&self, i: usize, j: usize) -> &RatFunc {
        &self.matrix[(i, j)]
    }

    /// `w_i = 1 - t_{color(i)}`, the fixed vector of `gamma`.
    pub fn fixed_vector(&self) -> Vec<RatFunc> {
        self.colors.iter().map(|&c| &RatFunc::one(self.nvars) - &RatFunc::var(self.nvars, c)).collect()
    }

    /// Product of the variables of positions `0..=i`.
    pub fn prefix_product(&self, i: usize) -> LaurentPoly {
        let mut m = Monomial::one(self.nvars);
        for &c in &self.colors[..=i] {
            m = m.mul(&Monomial::var(self.nvars, c, 1));
        }
        LaurentPoly::monomial(m)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// `u_j = (t_1...t_j)^{-1}`, the fixed row vector of `gamma` for pure
    /// links.
    pub fn fixed_row_vector(&self) -> Vec<RatFunc> {
        (0..self.n)
            .map(|j| RatFunc::from_poly(self.prefix_product(j).inv_monomial().expect("monomial")))
            .collect()
    }

    /// `(I - gamma) w` and `u (I - gamma)`; both vanish on pure links.
    pub fn eigenvector_residuals(&self) -> (Vec<RatFunc>, Vec<RatFunc>) {
        let w = self.fixed_vector();
        let u = self.fixed_row_vector();
        let m = &self.matrix;
        let right = (0..self.n)
            .map(|i| {
                let gw = (0..self.n).fold(RatFunc::zero(self.nvars), |acc, j| &acc + &(&m[(i, j)] * &w[j]));
                (&w[i] - &gw).reduce()
            })
            .collect();
        let left = (0..self.n)
            .map(|j| {
                let ug = (0..self.n).fold(RatFunc::zero(self.nvars), |acc, i| &acc + &(&u[i] * &m[(i, j)]));
                (&u[j] - &ug).reduce()
            })
            .collect();
        (right, left)
    }

    /// Whether every entry's reduced denominator augments to `±1`.
    pub fn denominators_augment_to_unit(&self) -> bool {
        let one = BigRational::one();
        self.matrix.entries().all(|x| {
            let a = x.reduce().den().augment();
            a == one || a == -one.clone()
        })
    }

    /// `gamma(L1 L2) = gamma(L1) gamma(L2)`.
    pub fn compose(&self, other: &GassnerMatrix) -> Result<GassnerMatrix> {
        if self.colors != other.colors || self.nvars != other.nvars {
            return Err(Error::ColorMismatch("colorings differ".into()));
        }
        Ok(GassnerMatrix { matrix: self.matrix.try_mul(&other.matrix)?.reduce_entries(), ..self.clone() })
    }
}

/// The Fox matrix of a diagram together with the solution of
/// `(A B) X = -C`, split as `X = (gamma; Z)`.
#[derive(Clone, Debug)]
pub struct FoxSolution {
    pub diagram: Diagram,
    pub fox: FoxMatrix,
    pub gamma: RatMatrix,
    pub z: RatMatrix,
}

pub fn solve_fox(d: &Diagram) -> Result<FoxSolution> {
    let fox = FoxMatrix::from_diagram(d);
    let (n, c) = (d.n, d.crossing_count());
    let ab = fox.ab();
    let rhs = fox.c_block().map(|x| -x);
    let x = match ab.solve(&rhs) {
        Ok(x) => x.reduce_entries(),
        Err(Error::Singular) => return Err(Error::Invariant("det(A B) vanishes".into())),
        Err(e) => return Err(e),
    };
    let gamma = x.submatrix(&(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
    let z = x.submatrix(&(n..c).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
    Ok(FoxSolution { diagram: d.clone(), fox, gamma, z })
}

fn check_colors(d: &Diagram) -> Result<()> {
    if d.bottom_colors != d.top_colors {
        return Err(Error::ColorMismatch(format!(
            "bottom colors {:?} differ from top colors {:?}",
            plus_one(&d.bottom_colors),
            plus_one(&d.top_colors)
        )));
    }
    Ok(())
}

fn plus_one(v: &[usize]) -> Vec<usize> {
    v.iter().map(|c| c + 1).collect()
}

pub fn gassner_from_diagram(d: &Diagram) -> Result<GassnerMatrix> {
    check_colors(d)?;
    let sol = solve_fox(d)?;
    let var_names = if d.ncolors == 1 && !d.word.colors().is_empty() && is_monochrome(&d.word) {
        vec!["t".to_string()]
    } else {
        default_var_names(d.ncolors)
    };
    Ok(GassnerMatrix { n: d.n, nvars: d.ncolors, matrix: sol.gamma, colors: d.bottom_colors.clone(), var_names })
}

fn is_monochrome(w: &MorseWord) -> bool {
    w.colors().iter().all(|&c| c == 1)
}

/// Gassner matrix of a colored string link whose top and bottom colors
/// agree.
pub fn gassner(w: &MorseWord) -> Result<GassnerMatrix> {
    gassner_from_diagram(&w.trace()?)
}

/// One-variable specialization, computed on the monochrome word.
pub fn burau(w: &MorseWord) -> Result<GassnerMatrix> {
    gassner(&w.monochrome())
}

/// Matrix of `gamma` on the quotient by its fixed vector, in the basis
/// `e_2..e_n`.
pub fn reduce(g: &GassnerMatrix) -> Result<RatMatrix> {
    if g.n < 2 {
        return Err(Error::Shape("reduction needs at least two strands".into()));
    }
    let w = g.fixed_vector();
    let m = &g.matrix;
    let r = RatMatrix::from_fn(g.n - 1, g.n - 1, g.nvars, |i, j| {
        let (i, j) = (i + 1, j + 1);
        let ratio = w[i].checked_div(&w[0]).expect("nonzero fixed vector").reduce();
        (&m[(i, j)] - &(&m[(0, j)] * &ratio)).reduce()
    });
    Ok(r)
}

/// Closed form of the full twist `(s1 ... s_{n-1})^n`:
/// `t_1...t_n (I + w u)` with `u_j = (t_1...t_j)^{-1}`.
pub fn full_twist(n: usize) -> GassnerMatrix {
    let colors: Vec<usize> = (0..n).collect();
    let all = Monomial::from_exps(&vec![1; n]);
    let mut prefix = Monomial::one(n);
    let mut u = Vec::with_capacity(n);
    for j in 0..n {
        prefix = prefix.mul(&Monomial::var(n, j, 1));
        u.push(LaurentPoly::monomial(prefix.inv()));
    }
    let one = LaurentPoly::one(n);
    let matrix = RatMatrix::from_fn(n, n, n, |i, j| {
        let w = &one - &LaurentPoly::var(n, i);
        let mut e = &w * &u[j];
        if i == j {
            e += &one;
        }
        RatFunc::from_poly(e.mul_monomial(&all))
    });
    GassnerMatrix { n, nvars: n, matrix, colors, var_names: default_var_names(n) }
}

/// Angles `a_j = j / (2 n (n + 1))` for `j = 1..nvars`.
pub fn default_angles(n: usize, nvars: usize) -> Vec<f64> {
    let denom = 2.0 * n as f64 * (n as f64 + 1.0);
    (1..=nvars).map(|j| j as f64 / denom).collect()
}

/// The point `t_j = exp(2 pi i a_j)`.
pub fn unit_point(angles: &[f64]) -> Vec<Complex64> {
    angles.iter().map(|a| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * a)).collect()
}

/// Entrywise value at `t_j = exp(2 pi i a_j)`. At a pole the angles are
/// nudged by a relative `1e-3` a few times before giving up.
pub fn numeric_eval(m: &RatMatrix, angles: &[f64]) -> Result<Vec<Vec<Complex64>>> {
    if angles.len() != m.nvars() {
        return Err(Error::Shape(format!("{} angles for {} variables", angles.len(), m.nvars())));
    }
    let mut a = angles.to_vec();
    for _ in 0..4 {
        match m.eval_complex(&unit_point(&a)) {
            Err(Error::Pole) => a.iter_mut().enumerate().for_each(|(j, x)| *x *= 1.0 + 1e-3 * (j + 1) as f64),
            other => return other,
        }
    }
    m.eval_complex(&unit_point(&a))
}

// Polynomials in x over the fraction field, coefficients low to high.
type UPoly = Vec<RatFunc>;

fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn make_monic(p: &UPoly) -> UPoly {
    let lead = p.last().expect("nonzero polynomial").clone();
    p.iter().map(|c| c.checked_div(&lead).expect("nonzero lead").reduce()).collect()
}

fn urem(a: &UPoly, b: &UPoly) -> UPoly {
    let b = make_monic(b);
    let mut r = a.clone();
    trim(&mut r);
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let f = r.last().unwrap().clone();
        for (i, c) in b.iter().enumerate() {
            r[k + i] = (&r[k + i] - &(&f * c)).reduce();
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn udiv(a: &UPoly, b: &UPoly) -> UPoly {
    let b = make_monic(b);
    let mut r = a.clone();
    trim(&mut r);
    if r.len() < b.len() {
        return vec![];
    }
    let mut q = vec![RatFunc::zero(b[0].nvars()); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let f = r.last().unwrap().clone();
        for (i, c) in b.iter().enumerate() {
            r[k + i] = (&r[k + i] - &(&f * c)).reduce();
        }
        q[k] = f;
        r.pop();
        trim(&mut r);
    }
    q
}

fn ugcd(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = urem(&a, &b);
        a = b;
        b = r;
    }
    make_monic(&a)
}

/// Characteristic polynomial of a square matrix with repeated factors
/// removed, so that its complex roots are simple.
pub fn square_free_char_poly(m: &RatMatrix) -> Result<Vec<RatFunc>> {
    let p = m.char_poly()?;
    let dp: UPoly = (1..p.len()).map(|k| p[k].scale(&BigRational::from_integer((k as i64).into()))).collect();
    let g = ugcd(&p, &dp);
    Ok(if g.len() <= 1 { p } else { udiv(&p, &g) })
}

/// Roots of a complex polynomial (coefficients low to high) by
/// Durand-Kerner iteration followed by Newton polishing.
pub fn complex_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|x| x.norm() == 0.0) {
        c.pop();
    }
    let deg = c.len().saturating_sub(1);
    if deg == 0 {
        return vec![];
    }
    let lead = c[deg];
    let c: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a);
    let deriv = |z: Complex64| {
        (1..=deg).rev().fold(Complex64::new(0.0, 0.0), |acc, k| acc * z + c[k] * k as f64)
    };
    let radius = 1.0 + c[..deg].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / deg as f64))
        .collect();
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for i in 0..deg {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    for r in &mut z {
        for _ in 0..4 {
            let d = deriv(*r);
            if d.norm() == 0.0 {
                break;
            }
            *r -= eval(*r) / d;
        }
    }
    z
}

#[derive(Clone, Debug)]
pub struct SpectrumCheck {
    pub eigenvalues: Vec<Complex64>,
    /// `max |abs(lambda) - 1|` over the distinct eigenvalues.
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl SpectrumCheck {
    pub fn passed(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

/// Distinct eigenvalues of `m` at the given angles and their distance
/// from the unit circle.
pub fn unitary_spectrum_check(m: &RatMatrix, angles: &[f64], tolerance: f64) -> Result<SpectrumCheck> {
    if angles.len() != m.nvars() {
        return Err(Error::Shape(format!("{} angles for {} variables", angles.len(), m.nvars())));
    }
    let p = square_free_char_poly(m)?;
    let pt = unit_point(angles);
    let coeffs: Vec<Complex64> = p.iter().map(|c| c.eval_complex(&pt).ok_or(Error::Pole)).collect::<Result<_>>()?;
    let eigenvalues = complex_roots(&coeffs);
    let max_deviation = eigenvalues.iter().map(|z| (z.norm() - 1.0).abs()).fold(0.0, f64::max);
    Ok(SpectrumCheck { eigenvalues, max_deviation, tolerance })
}

/// A skew-hermitian form preserved by a family of reduced matrices.
#[derive(Clone, Debug)]
pub struct InvariantForm {
    pub form: RatMatrix,
    pub degree: i32,
    /// Dimension of the solution space at that degree bound.
    pub solution_dimension: usize,
    pub verified_on_holdout: bool,
}

/// Residual `M* J M - J`.
pub fn form_residual(m: &RatMatrix, j: &RatMatrix) -> Result<RatMatrix> {
    Ok(m.star().try_mul(j)?.try_mul(m)?.try_sub(j)?.reduce_entries())
}

// A basis element: list of (row, col, poly) entries.
type FormBasis = Vec<(usize, usize, LaurentPoly)>;

fn exponent_box(nvars: usize, d: i32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(nvars)];
    for v in 0..nvars {
        let mut next = Vec::with_capacity(out.len() * (2 * d as usize + 1));
        for m in &out {
            for e in -d..=d {
                next.push(m.mul(&Monomial::var(nvars, v, e)));
            }
        }
        out = next;
    }
    out
}

fn skew_basis(size: usize, nvars: usize, d: i32) -> Vec<FormBasis> {
    let monos = exponent_box(nvars, d);
    let mut out = Vec::new();
    for i in 0..size {
        for m in &monos {
            if m.inv() < *m {
                let p = &LaurentPoly::monomial(m.clone()) - &LaurentPoly::monomial(m.inv());
                out.push(vec![(i, i, p)]);
            }
        }
        for j in i + 1..size {
            for m in &monos {
                out.push(vec![(i, j, LaurentPoly::monomial(m.clone())), (j, i, -LaurentPoly::monomial(m.inv()))]);
            }
        }
    }
    out
}

/// `D M` with `D` a common denominator of all entries.
fn clear_matrix(m: &RatMatrix) -> (Vec<Vec<LaurentPoly>>, LaurentPoly) {
    let den = m.entries().fold(LaurentPoly::one(m.nvars()), |acc, x| gcd::lcm(&acc, x.den()));
    let rows = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    let x = &m[(i, j)];
                    let q = den.div_exact(x.den()).expect("lcm is a multiple");
                    &x.num().clone() * &q
                })
                .collect()
        })
        .collect();
    (rows, den)
}

fn form_equations(samples: &[RatMatrix], basis: &[FormBasis], size: usize, nvars: usize, rref: &mut SparseRref) {
    for m in samples {
        let (nm, den) = clear_matrix(m);
        let nstar: Vec<Vec<LaurentPoly>> = (0..size).map(|i| (0..size).map(|j| nm[j][i].bar()).collect()).collect();
        let dd = &den.bar() * &den;
        let mut eqs: BTreeMap<(usize, usize, Monomial), BTreeMap<usize, BigRational>> = BTreeMap::new();
        for (k, b) in basis.iter().enumerate() {
            // E = N* B N - dd B, with B sparse
            let mut e: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
            for (r, c, p) in b {
                for a in 0..size {
                    if nstar[a][*r].is_zero() {
                        continue;
                    }
                    let left = &nstar[a][*r] * p;
                    for bcol in 0..size {
                        if nm[*c][bcol].is_zero() {
                            continue;
                        }
                        let t = &left * &nm[*c][bcol];
                        *e.entry((a, bcol)).or_insert_with(|| LaurentPoly::zero(nvars)) += &t;
                    }
                }
                *e.entry((*r, *c)).or_insert_with(|| LaurentPoly::zero(nvars)) -= &(&dd * p);
            }
            for ((a, bcol), poly) in e {
                for (mono, coef) in poly.terms() {
                    eqs.entry((a, bcol, mono.clone())).or_default().insert(k, coef.clone());
                }
            }
        }
        for (_, row) in eqs {
            rref.push(row);
        }
    }
}

/// Searches for a nonzero skew-hermitian `J` with `M* J M = J` for every
/// sample, with entries supported on exponents in `[-d, d]`; `d` starts at
/// `degree` and doubles up to `max_degree`.
pub fn invariant_form(
    samples: &[RatMatrix],
    holdout: &[RatMatrix],
    degree: i32,
    max_degree: i32,
) -> Result<InvariantForm> {
    let first = samples.first().ok_or_else(|| Error::Shape("no sample matrices".into()))?;
    let (size, nvars) = (first.rows(), first.nvars());
    let mut d = degree.max(1);
    loop {
        let basis = skew_basis(size, nvars, d);
        let mut rref = SparseRref::new(basis.len());
        form_equations(samples, &basis, size, nvars, &mut rref);
        let null = rref.nullspace();
        if let Some(v) = null.first() {
            let mut form = RatMatrix::zeros(size, size, nvars);
            for (k, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (r, c, p) in &basis[k] {
                    form[(*r, *c)] = &form[(*r, *c)] + &RatFunc::from_poly(p.scale(x));
                }
            }
            let form = normalize_form(&form);
            let mut ok = true;
            for h in holdout {
                ok &= form_residual(h, &form)?.is_zero();
            }
            return Ok(InvariantForm { form, degree: d, solution_dimension: null.len(), verified_on_holdout: ok });
        }
        if d >= max_degree {
            return Err(Error::Degenerate(format!("no invariant form with exponents up to {d}")));
        }
        d = (2 * d).min(max_degree);
    }
}

/// [`invariant_form`] on reduced Gassner matrices of pure words.
pub fn invariant_form_for_words(samples: &[MorseWord], holdout: &[MorseWord]) -> Result<InvariantForm> {
    let red = |w: &MorseWord| -> Result<RatMatrix> {
        if !w.is_pure()? {
            return Err(Error::Diagram("invariant forms need pure samples".into()));
        }
        reduce(&gassner(w)?)
    };
    let s = samples.iter().map(red).collect::<Result<Vec<_>>>()?;
    let h = holdout.iter().map(red).collect::<Result<Vec<_>>>()?;
    invariant_form(&s, &h, 2, 8)
}

// Scales to integer coefficients with positive leading first entry.
fn normalize_form(j: &RatMatrix) -> RatMatrix {
    let mut lcm_den = num::BigInt::one();
    for x in j.entries() {
        for (_, c) in x.num().terms() {
            lcm_den = num::integer::lcm(lcm_den, c.denom().clone());
        }
    }
    let mut s = BigRational::from_integer(lcm_den);
    if let Some(first) = j.entries().find(|x| !x.is_zero()) {
        if first.num().leading().is_some_and(|(_, c)| c < &BigRational::zero()) {
            s = -s;
        }
    }
    j.map(|x| x.scale(&s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse_ratfunc;
    use crate::diagram::MorseEvent::*;

    fn mat(rows: &[&[&str]], nv: usize) -> RatMatrix {
        let names = default_var_names(nv);
        RatMatrix::from_rows(nv, rows.iter().map(|r| r.iter().map(|s| parse_ratfunc(s, &names).unwrap()).collect()).collect())
            .unwrap()
    }

    fn hopf() -> MorseWord {
        MorseWord::new(2, vec![1, 2], vec![CrossPos(1), CrossPos(1)]).unwrap()
    }

    #[test]
    fn hopf_gassner() {
        let g = gassner(&hopf()).unwrap();
        assert_eq!(g.matrix, mat(&[&["t2", "1 - t1"], &["(1 - t2)*t2", "1 - t2 + t1*t2"]], 2));
        assert_eq!(reduce(&g).unwrap(), mat(&[&["t1*t2"]], 2));
    }

    #[test]
    fn single_generator_burau() {
        let w = MorseWord::from_braid(2, &[(1, true)]).unwrap();
        let b = burau(&w).unwrap();
        assert_eq!(b.var_names, vec!["t".to_string()]);
        assert_eq!(b.matrix, mat(&[&["0", "1"], &["t1", "1 - t1"]], 1));
        assert_eq!(reduce(&b).unwrap(), mat(&[&["-t1"]], 1));
    }

    #[test]
    fn full_twist_matches_word() {
        for n in 2..=3 {
            let g = gassner(&crate::diagram::full_twist_word(n)).unwrap();
            assert_eq!(g.matrix, full_twist(n).matrix, "n = {n}");
        }
    }

    #[test]
    fn color_mismatch() {
        let w = MorseWord::from_braid(2, &[(1, true)]).unwrap().with_colors(vec![1, 2]).unwrap();
        assert!(matches!(gassner(&w), Err(Error::ColorMismatch(_))));
    }

    #[test]
    fn eigenvectors() {
        let g = gassner(&MorseWord::from_braid(3, &[(1, true), (2, false), (2, false), (1, true)]).unwrap()).unwrap();
        let (r, l) = g.eigenvector_residuals();
        assert!(r.iter().chain(&l).all(|x| x.is_zero()));
        assert!(g.denominators_augment_to_unit());
    }

    #[test]
    fn scalar_form() {
        let h = gassner(&hopf()).unwrap();
        let f = invariant_form_for_words(&[hopf()], &[hopf().stack(&hopf()).unwrap()]).unwrap();
        assert!(f.verified_on_holdout);
        assert_eq!(f.form.star(), f.form.map(|x| -x));
        assert!(form_residual(&reduce(&h).unwrap(), &f.form).unwrap().is_zero());
    }

    #[test]
    fn three_strand_form() {
        let gens = [
            MorseWord::from_braid(3, &[(1, true), (1, true)]).unwrap(),
            MorseWord::from_braid(3, &[(2, true), (2, true)]).unwrap(),
            MorseWord::from_braid(3, &[(2, true), (1, true), (1, true), (2, false)]).unwrap(),
        ];
        let held = gens[0].stack(&gens[2]).unwrap().stack(&gens[1].invert().unwrap()).unwrap();
        let f = invariant_form_for_words(&gens, &[held]).unwrap();
        assert!(!f.form.is_zero());
        assert!(f.verified_on_holdout, "{:?}", f);
    }

    #[test]
    fn roots() {
        let c = [Complex64::new(6.0, 0.0), Complex64::new(-5.0, 0.0), Complex64::new(1.0, 0.0)];
        let mut r: Vec<f64> = complex_roots(&c).iter().map(|z| z.re).collect();
        r.sort_by(f64::total_cmp);
        assert!((r[0] - 2.0).abs() < 1e-12 && (r[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn square_free() {
        let m = mat(&[&["t1", "0"], &["0", "t1"]], 1);
        assert_eq!(square_free_char_poly(&m).unwrap().len(), 2);
    }
}
