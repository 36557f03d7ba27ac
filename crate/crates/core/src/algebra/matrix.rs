use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use num::{BigRational, Zero};

use super::gcd;
use super::poly::LaurentPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Dense matrix over the fraction field.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    data: Vec<RatFunc>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        RatMatrix { rows, cols, nvars, data: vec![RatFunc::zero(nvars); rows * cols] }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m[(i, i)] = RatFunc::one(nvars);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, nvars: usize, mut f: impl FnMut(usize, usize) -> RatFunc) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, nvars, data }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<RatFunc>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        if rows.iter().flatten().any(|x| x.nvars() != nvars) {
            return Err(Error::Shape("variable count mismatch".into()));
        }
        Ok(RatMatrix { rows: r, cols: c, nvars, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_polys(nvars: usize, rows: &[Vec<LaurentPoly>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(r, c, nvars, |i, j| RatFunc::from_poly(rows[i][j].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &RatFunc> {
        self.data.iter()
    }

    pub fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, nvars: self.nvars, data: self.data.iter().map(f).collect() }
    }

    /// Applies `f` to every entry, changing the ambient variable count.
    pub fn try_map_vars(&self, nvars: usize, f: impl Fn(&RatFunc) -> Option<RatFunc>) -> Option<RatMatrix> {
        let data = self.data.iter().map(f).collect::<Option<Vec<_>>>()?;
        Some(RatMatrix { rows: self.rows, cols: self.cols, nvars, data })
    }

    pub fn reduce_entries(&self) -> RatMatrix {
        self.map(|x| x.reduce())
    }

    pub fn transpose(&self) -> RatMatrix {
        Self::from_fn(self.cols, self.rows, self.nvars, |i, j| self[(j, i)].clone())
    }

    /// Conjugate transpose under the bar involution.
    pub fn star(&self) -> RatMatrix {
        Self::from_fn(self.cols, self.rows, self.nvars, |i, j| self[(j, i)].bar())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> RatMatrix {
        Self::from_fn(rows.len(), cols.len(), self.nvars, |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Deletes row `i` and column `j` (0-based).
    pub fn minor(&self, i: usize, j: usize) -> RatMatrix {
        let rs: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cs: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.submatrix(&rs, &cs)
    }

    pub fn hstack(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.rows != other.rows {
            return Err(Error::Shape(format!("hstack {}x{} with {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, self.nvars, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        }))
    }

    pub fn vstack(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.cols {
            return Err(Error::Shape(format!("vstack {}x{} with {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(Self::from_fn(self.rows + other.rows, self.cols, self.nvars, |i, j| {
            if i < self.rows {
                self[(i, j)].clone()
            } else {
                other[(i - self.rows, j)].clone()
            }
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }))
    }

    pub fn trace(&self) -> RatFunc {
        (0..self.rows.min(self.cols)).fold(RatFunc::zero(self.nvars), |acc, i| &acc + &self[(i, i)])
    }

    pub fn scale(&self, c: &RatFunc) -> RatMatrix {
        self.map(|x| x * c)
    }

    pub fn try_add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.check_same(other)?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.check_same(other)?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!("multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(Self::from_fn(self.rows, other.cols, self.nvars, |i, j| {
            let mut acc = RatFunc::zero(self.nvars);
            for k in 0..self.cols {
                let a = &self[(i, k)];
                let b = &other[(k, j)];
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    fn check_same(&self, other: &RatMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(())
    }

    /// `I - self`.
    pub fn one_minus(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::Shape("one_minus of a non-square matrix".into()));
        }
        Self::identity(self.rows, self.nvars).try_sub(self)
    }

    /// Exact determinant by fraction-free elimination after clearing row
    /// denominators.
    pub fn det(&self) -> Result<RatFunc> {
        if !self.is_square() {
            return Err(Error::Shape(format!("determinant of {}x{} matrix", self.rows, self.cols)));
        }
        if self.rows == 0 {
            return Ok(RatFunc::one(self.nvars));
        }
        let (p, row_dens) = clear_denominators(self, None);
        let el = Elimination::run(p, self.cols);
        let detp = el.det();
        let den = row_dens.iter().fold(LaurentPoly::one(self.nvars), |acc, d| &acc * d);
        Ok(RatFunc::new(detp, den).expect("nonzero row denominators"))
    }

    pub fn rank(&self) -> usize {
        let (p, _) = clear_denominators(self, None);
        Elimination::run(p, self.cols).pivots.len()
    }

    /// Solves `self * X = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::Shape(format!("solve with {}x{} coefficient matrix", self.rows, self.cols)));
        }
        if rhs.rows != self.rows {
            return Err(Error::Shape(format!("solve: {} rows vs right-hand side with {}", self.rows, rhs.rows)));
        }
        let n = self.cols;
        let (p, _) = clear_denominators(self, Some(rhs));
        let el = Elimination::run(p, n);
        if el.pivots.len() < n {
            return Err(Error::Singular);
        }
        let d = el.last_fraction_free_pivot();
        let mut out = RatMatrix::zeros(n, rhs.cols, self.nvars);
        for k in 0..rhs.cols {
            let nums = el.back_substitute(&d, |row| el.rows[row][n + k].clone(), &[]);
            for (j, v) in nums.into_iter().enumerate() {
                out[(j, k)] = RatFunc::new(v.expect("pivot column"), d.clone()).expect("nonzero pivot");
            }
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        self.solve(&Self::identity(self.rows, self.nvars))
    }

    /// Basis of the right kernel, one column per vector.
    pub fn nullspace(&self) -> Vec<Vec<RatFunc>> {
        let n = self.cols;
        let (p, _) = clear_denominators(self, None);
        let el = Elimination::run(p, n);
        let pivot_cols: Vec<usize> = el.pivots.iter().map(|pv| pv.col).collect();
        let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
        let d = el.last_fraction_free_pivot();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let fixed = [(f, d.clone())];
            let nums = el.back_substitute(&d, |row| -&el.rows[row][f], &fixed);
            let mut v = Vec::with_capacity(n);
            for (j, x) in nums.into_iter().enumerate() {
                let x = if j == f {
                    d.clone()
                } else {
                    x.unwrap_or_else(|| LaurentPoly::zero(self.nvars))
                };
                v.push(RatFunc::new(x, d.clone()).expect("nonzero pivot").reduce());
            }
            out.push(v);
        }
        out
    }

    pub fn eval_complex(&self, point: &[num_complex::Complex64]) -> Result<Vec<Vec<num_complex::Complex64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].eval_complex(point).ok_or(Error::Pole)).collect())
            .collect()
    }

    /// Characteristic polynomial coefficients `c_0..c_n` of
    /// `det(x I - self) = sum c_k x^k`, by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> Result<Vec<RatFunc>> {
        if !self.is_square() {
            return Err(Error::Shape("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let nv = self.nvars;
        let mut coeffs = vec![RatFunc::zero(nv); n + 1];
        coeffs[n] = RatFunc::one(nv);
        let id = Self::identity(n, nv);
        let mut m = Self::zeros(n, n, nv);
        for k in 1..=n {
            let prev = coeffs[n - k + 1].clone();
            m = self.try_mul(&m)?.try_add(&id.scale(&prev))?.reduce_entries();
            let am = self.try_mul(&m)?;
            let kk = BigRational::from_integer((-(k as i64)).into());
            coeffs[n - k] = am.trace().scale(&kk.recip()).reduce();
        }
        Ok(coeffs)
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = RatFunc;
    fn index(&self, (i, j): (usize, usize)) -> &RatFunc {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RatFunc {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Multiplies each row of `[m | rhs]` by a common denominator. Returns the
/// polynomial rows and the multipliers.
fn clear_denominators(m: &RatMatrix, rhs: Option<&RatMatrix>) -> (Vec<Vec<LaurentPoly>>, Vec<LaurentPoly>) {
    let nv = m.nvars;
    let mut out = Vec::with_capacity(m.rows);
    let mut dens = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let mut row: Vec<&RatFunc> = m.row(i).iter().collect();
        if let Some(r) = rhs {
            row.extend(r.row(i).iter());
        }
        let mut l = LaurentPoly::one(nv);
        for x in &row {
            if !x.den().is_one() {
                l = gcd::lcm(&l, x.den());
            }
        }
        let prow = row
            .iter()
            .map(|x| {
                if x.den().is_one() {
                    &l * x.num()
                } else {
                    &l.div_exact(x.den()).expect("lcm divisible") * x.num()
                }
            })
            .collect();
        out.push(prow);
        dens.push(l);
    }
    (out, dens)
}

#[derive(Debug, Clone)]
struct Pivot {
    row: usize,
    col: usize,
    /// Gaussian step with an invertible (single-term) pivot; otherwise a
    /// fraction-free step.
    unit: bool,
}

/// Elimination over the Laurent ring. Invertible pivots are used with plain
/// Gaussian steps first; the remaining Schur complement, which is again a
/// polynomial matrix, is handled by fraction-free Bareiss steps with
/// complete pivoting. Rows and columns are never physically permuted.
pub(crate) struct Elimination {
    rows: Vec<Vec<LaurentPoly>>,
    ncols: usize,
    nvars: usize,
    pivots: Vec<Pivot>,
}

impl Elimination {
    pub(crate) fn run(rows: Vec<Vec<LaurentPoly>>, ncols: usize) -> Self {
        let nvars = rows.first().and_then(|r| r.first()).map_or(0, |p| p.nvars());
        let mut el = Elimination { rows, ncols, nvars, pivots: Vec::new() };
        let nrows = el.rows.len();
        let mut row_done = vec![false; nrows];
        let mut col_done = vec![false; ncols];

        // Gaussian phase.
        loop {
            let mut best: Option<(usize, usize, usize)> = None;
            for (r, done) in row_done.iter().enumerate() {
                if *done {
                    continue;
                }
                let weight = el.rows[r][..ncols].iter().filter(|x| !x.is_zero()).count();
                for c in 0..ncols {
                    if !col_done[c] && el.rows[r][c].is_monomial() && best.is_none_or(|b| weight < b.2) {
                        best = Some((r, c, weight));
                    }
                }
            }
            let Some((r, c, _)) = best else { break };
            let inv = el.rows[r][c].inv_monomial().expect("unit pivot");
            for i in 0..nrows {
                if row_done[i] || i == r || el.rows[i][c].is_zero() {
                    continue;
                }
                let f = &el.rows[i][c] * &inv;
                let pivot_row = el.rows[r].clone();
                let target = &mut el.rows[i];
                for (x, y) in target.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
            row_done[r] = true;
            col_done[c] = true;
            el.pivots.push(Pivot { row: r, col: c, unit: true });
        }

        // Fraction-free phase.
        let mut prev = LaurentPoly::one(nvars);
        loop {
            let mut best: Option<(usize, usize, usize)> = None;
            for (r, done) in row_done.iter().enumerate() {
                if *done {
                    continue;
                }
                for c in 0..ncols {
                    let x = &el.rows[r][c];
                    if !col_done[c] && !x.is_zero() && best.is_none_or(|b| x.len() < b.2) {
                        best = Some((r, c, x.len()));
                    }
                }
            }
            let Some((r, c, _)) = best else { break };
            let p = el.rows[r][c].clone();
            let pivot_row = el.rows[r].clone();
            for i in 0..nrows {
                if row_done[i] || i == r {
                    continue;
                }
                let a = el.rows[i][c].clone();
                let target = &mut el.rows[i];
                for (j, x) in target.iter_mut().enumerate() {
                    let mut v = &p * x;
                    if !a.is_zero() && !pivot_row[j].is_zero() {
                        v -= &(&a * &pivot_row[j]);
                    }
                    *x = if prev.is_one() { v } else { v.div_exact(&prev).expect("fraction-free step is exact") };
                }
            }
            row_done[r] = true;
            col_done[c] = true;
            el.pivots.push(Pivot { row: r, col: c, unit: false });
            prev = p;
        }
        el
    }

    fn last_fraction_free_pivot(&self) -> LaurentPoly {
        self.pivots
            .iter()
            .rev()
            .find(|p| !p.unit)
            .map(|p| self.rows[p.row][p.col].clone())
            .unwrap_or_else(|| LaurentPoly::one(self.nvars))
    }

    /// Determinant of a square input; zero when rank deficient.
    fn det(&self) -> LaurentPoly {
        if self.pivots.len() < self.ncols || self.rows.len() != self.ncols {
            return LaurentPoly::zero(self.nvars);
        }
        let mut acc = LaurentPoly::one(self.nvars);
        for p in self.pivots.iter().filter(|p| p.unit) {
            acc = &acc * &self.rows[p.row][p.col];
        }
        acc = &acc * &self.last_fraction_free_pivot();
        let mut perm = vec![0usize; self.ncols];
        for p in &self.pivots {
            perm[p.row] = p.col;
        }
        if permutation_is_odd(&perm) {
            -acc
        } else {
            acc
        }
    }

    /// Numerators `N_j = D x_j` of the solution of the pivot equations with
    /// right-hand side `rhs(row)` and some columns fixed in advance. Returns
    /// `None` for columns that are neither pivots nor fixed.
    fn back_substitute(
        &self,
        d: &LaurentPoly,
        rhs: impl Fn(usize) -> LaurentPoly,
        fixed: &[(usize, LaurentPoly)],
    ) -> Vec<Option<LaurentPoly>> {
        let mut vals: Vec<Option<LaurentPoly>> = vec![None; self.ncols];
        for (c, v) in fixed {
            vals[*c] = Some(v.clone());
        }
        let fixed_cols: Vec<usize> = fixed.iter().map(|f| f.0).collect();
        for p in self.pivots.iter().rev() {
            let row = &self.rows[p.row];
            let mut acc = d * &rhs(p.row);
            for (j, a) in row[..self.ncols].iter().enumerate() {
                if j == p.col || a.is_zero() || fixed_cols.contains(&j) {
                    continue;
                }
                if let Some(v) = &vals[j] {
                    acc -= &(a * v);
                }
            }
            let pv = &row[p.col];
            let x = if p.unit {
                &acc * &pv.inv_monomial().expect("unit pivot")
            } else {
                acc.div_exact(pv).expect("back substitution is exact")
            };
            vals[p.col] = Some(x);
        }
        vals
    }
}

fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

/// Cofactor expansion, kept as an oracle for small matrices.
pub fn det_cofactor(m: &RatMatrix) -> Result<RatFunc> {
    if !m.is_square() {
        return Err(Error::Shape("determinant of a non-square matrix".into()));
    }
    if m.rows > 6 {
        return Err(Error::Shape("cofactor expansion limited to dimension 6".into()));
    }
    Ok(cofactor(m))
}

fn cofactor(m: &RatMatrix) -> RatFunc {
    match m.rows {
        0 => RatFunc::one(m.nvars),
        1 => m[(0, 0)].clone(),
        _ => {
            let mut acc = RatFunc::zero(m.nvars);
            for j in 0..m.cols {
                if m[(0, j)].is_zero() {
                    continue;
                }
                let t = &m[(0, j)] * &cofactor(&m.minor(0, j));
                acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

/// Right kernel of a matrix over the rationals by sparse Gauss-Jordan
/// elimination; rows may be given in any number.
pub fn rational_nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut rref = SparseRref::new(ncols);
    for r in rows {
        rref.push(r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect());
    }
    rref.nullspace()
}

/// Incrementally maintained reduced row echelon form over the rationals.
#[derive(Clone, Debug, Default)]
pub struct SparseRref {
    ncols: usize,
    // pivot column -> row with a 1 there and zeros in the other pivot columns
    rows: BTreeMap<usize, BTreeMap<usize, BigRational>>,
}

impl SparseRref {
    pub fn new(ncols: usize) -> Self {
        SparseRref { ncols, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a row; returns whether it raised the rank.
    pub fn push(&mut self, row: BTreeMap<usize, BigRational>) -> bool {
        let mut row = row;
        row.retain(|_, x| !x.is_zero());
        let hits: Vec<usize> = row.keys().filter(|k| self.rows.contains_key(k)).copied().collect();
        for p in hits {
            let Some(f) = row.get(&p).cloned() else { continue };
            for (j, x) in &self.rows[&p] {
                let e = row.entry(*j).or_insert_with(BigRational::zero);
                *e -= &f * x;
            }
            row.retain(|_, x| !x.is_zero());
        }
        let Some((&piv, lead)) = row.iter().next() else { return false };
        let inv = lead.recip();
        for x in row.values_mut() {
            *x *= &inv;
        }
        for other in self.rows.values_mut() {
            if let Some(f) = other.get(&piv).cloned() {
                for (j, x) in &row {
                    let e = other.entry(*j).or_insert_with(BigRational::zero);
                    *e -= &f * x;
                }
                other.retain(|_, x| !x.is_zero());
            }
        }
        self.rows.insert(piv, row);
        true
    }

    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|c| !self.rows.contains_key(c)) {
            let mut v = vec![BigRational::zero(); self.ncols];
            v[f] = BigRational::from_integer(1.into());
            for (p, r) in &self.rows {
                if let Some(x) = r.get(&f) {
                    v[*p] = -x.clone();
                }
            }
            out.push(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::{default_var_names, parse_ratfunc};

    fn m(rows: &[&[&str]], nv: usize) -> RatMatrix {
        let names = default_var_names(nv);
        RatMatrix::from_rows(
            nv,
            rows.iter().map(|r| r.iter().map(|s| parse_ratfunc(s, &names).unwrap()).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn det_small() {
        assert!(RatMatrix::identity(3, 2).det().unwrap().is_one());
        let a = m(&[&["1 - t2 + t1*t2"]], 2);
        assert_eq!(a.det().unwrap(), a[(0, 0)]);
        let g = m(&[&["t2", "1 - t1"], &["(1 - t2)*t2", "1 - t2 + t1*t2"]], 2);
        assert!(g.one_minus().unwrap().det().unwrap().is_zero());
        assert_eq!(g.det().unwrap(), parse_ratfunc("t1*t2", &default_var_names(2)).unwrap());
    }

    #[test]
    fn det_agrees_with_cofactor() {
        let a = m(
            &[
                &["1 + t1", "t2", "3", "0"],
                &["t1*t2 - 1", "2 + t2^2", "t1", "1/(1 + t1)"],
                &["0", "1 - t1", "t1^-1 + t2", "t2"],
                &["5", "t1", "t2/(1 - t2 + t1)", "1 - t1*t2"],
            ],
            2,
        );
        assert_eq!(a.det().unwrap(), det_cofactor(&a).unwrap());
    }

    #[test]
    fn solve_back_substitution() {
        let a = m(&[&["1 - t1", "t1"], &["0", "1"]], 1);
        let b = m(&[&["1"], &["0"]], 1);
        let x = a.solve(&b).unwrap();
        assert_eq!(x, m(&[&["1/(1 - t1)"], &["0"]], 1));
        assert_eq!(a.try_mul(&x).unwrap(), b);
        let sing = m(&[&["1", "t1"], &["1", "t1"]], 1);
        assert_eq!(sing.solve(&b), Err(Error::Singular));
        assert!(matches!(sing.solve(&m(&[&["1"]], 1)), Err(Error::Shape(_))));
    }

    #[test]
    fn rank_and_kernel() {
        assert_eq!(RatMatrix::zeros(3, 3, 1).rank(), 0);
        let g = m(&[&["t2", "1 - t1"], &["(1 - t2)*t2", "1 - t2 + t1*t2"]], 2);
        let k = g.one_minus().unwrap();
        assert_eq!(k.rank(), 1);
        let ns = k.nullspace();
        assert_eq!(ns.len(), 1);
        let v = RatMatrix::from_rows(2, ns[0].iter().map(|x| vec![x.clone()]).collect()).unwrap();
        assert!(k.try_mul(&v).unwrap().is_zero());
        // kernel is spanned by (1 - t1, 1 - t2)
        let ratio = v[(0, 0)].checked_div(&v[(1, 0)]).unwrap();
        assert_eq!(ratio, m(&[&["(1 - t1)/(1 - t2)"]], 2)[(0, 0)]);
    }

    #[test]
    fn char_poly_of_companion() {
        let a = m(&[&["0", "-t1"], &["1", "1 + t1"]], 1);
        let cp = a.char_poly().unwrap();
        let names = default_var_names(1);
        assert_eq!(cp[0], parse_ratfunc("t1", &names).unwrap());
        assert_eq!(cp[1], parse_ratfunc("-1 - t1", &names).unwrap());
        assert!(cp[2].is_one());
    }
}
