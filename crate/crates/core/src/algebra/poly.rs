use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial.
///
/// The ordering is graded: lower total degree first, and within one degree
/// the lexicographically larger vector comes first, so `t1` sorts before
/// `t2` and `t1^2` before `t1*t2`. This is a monomial order on polynomial
/// exponents and doubles as the canonical printing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[i32; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exps(exps: &[i32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// `t_var^exp`, with `var` 0-based.
    pub fn var(nvars: usize, var: usize, exp: i32) -> Self {
        let mut m = Self::one(nvars);
        m.0[var] = exp;
        m
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|a| -a).collect())
    }

    /// Componentwise `self >= other`.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    fn componentwise_min(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    fn componentwise_max(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate Laurent polynomial with rational coefficients.
///
/// Terms are kept sorted in the [`Monomial`] order with no zero coefficients,
/// so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: Vec<(Monomial, BigRational)>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(c)))
    }

    /// The variable `t_{var+1}`.
    pub fn var(nvars: usize, var: usize) -> Self {
        Self::term(Monomial::var(nvars, var, 1), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        LaurentPoly { nvars, terms: vec![(m, c)] }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut v: Vec<(Monomial, BigRational)> = terms.into_iter().collect();
        debug_assert!(v.iter().all(|(m, _)| m.nvars() == nvars));
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        LaurentPoly { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// A single term `c * t^a`; these are the invertible elements over Q.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `±t^a`, the units of the integral Laurent ring.
    pub fn is_signed_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.abs().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.last()
    }

    /// Sum of all coefficients, i.e. the value at `t_1 = ... = t_n = 1`.
    pub fn augment(&self) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (_, c)| acc + c)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    /// Inverse of a single-term polynomial.
    pub fn inv_monomial(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(m, c)] => Some(Self::term(m.inv(), c.recip())),
            _ => None,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |acc, (m, _)| acc.componentwise_min(m)))
    }

    pub fn max_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |acc, (m, _)| acc.componentwise_max(m)))
    }

    /// Splits `self = t^a * p` with `p` an ordinary polynomial having
    /// minimal exponent zero in every variable.
    pub fn split_monomial(&self) -> (Monomial, LaurentPoly) {
        match self.min_exponents() {
            None => (Monomial::one(self.nvars), self.clone()),
            Some(m) => (m.clone(), self.mul_monomial(&m.inv())),
        }
    }

    /// Bar involution `t_i -> t_i^{-1}`.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.inv(), c.clone())))
    }

    /// Ring map sending `t_i` to `t_{map[i]}` in a ring with `nvars` variables.
    pub fn remap_vars(&self, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        Self::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0i32; nvars];
                for (i, &x) in m.exps().iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::from_exps(&e), c.clone())
            }),
        )
    }

    /// One-variable specialization `t_i -> t`.
    pub fn specialize_single(&self) -> Self {
        self.remap_vars(1, &vec![0; self.nvars])
    }

    /// Exponents of variable `var` that occur.
    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exps()[var] != 0)
    }

    pub fn degree_in(&self, var: usize) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exps()[var]).max()
    }

    /// Coefficients of an ordinary polynomial (nonnegative exponents) viewed
    /// as univariate in `var`; entry `k` multiplies `t_var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<LaurentPoly> {
        let deg = match self.degree_in(var) {
            Some(d) => d,
            None => return Vec::new(),
        };
        debug_assert!(self.terms.iter().all(|(m, _)| m.exps()[var] >= 0));
        let mut buckets: Vec<Vec<(Monomial, BigRational)>> = vec![Vec::new(); deg as usize + 1];
        for (m, c) in &self.terms {
            let k = m.exps()[var] as usize;
            let mut e = m.clone();
            e.0[var] = 0;
            buckets[k].push((e, c.clone()));
        }
        buckets.into_iter().map(|b| Self::from_terms(self.nvars, b)).collect()
    }

    /// Exact quotient `self / divisor` in the Laurent ring, or `None` when the
    /// divisor does not divide.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if let Some(inv) = divisor.inv_monomial() {
            return Some(self * &inv);
        }
        let (ms, a) = self.split_monomial();
        let (md, d) = divisor.split_monomial();
        let (dm, dc) = d.leading().cloned().expect("nonzero divisor");
        let dc_inv = dc.recip();
        let mut rem = a;
        let mut quot: Vec<(Monomial, BigRational)> = Vec::new();
        while let Some((rm, rc)) = rem.leading().cloned() {
            if !rm.divisible_by(&dm) {
                return None;
            }
            let qm = rm.div(&dm);
            let qc = &rc * &dc_inv;
            let step = d.mul_monomial(&qm).scale(&qc);
            rem -= &step;
            quot.push((qm, qc));
        }
        let q = Self::from_terms(self.nvars, quot);
        Some(q.mul_monomial(&ms.div(&md)))
    }

    /// Canonical representative modulo the units `±t^a`: the monomial factor
    /// is removed and the first term in canonical order is made positive.
    pub fn normalize_unit(&self) -> Result<LaurentPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (_, p) = self.split_monomial();
        if p.terms[0].1.is_negative() {
            Ok(-p)
        } else {
            Ok(p)
        }
    }

    /// Equality up to multiplication by `±t^a`. Zero is only associate to zero.
    pub fn associate(&self, other: &LaurentPoly) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (false, false) => self.normalize_unit().ok() == other.normalize_unit().ok(),
            _ => false,
        }
    }

    /// Scales to coprime integer coefficients whose leading coefficient is
    /// positive. Zero maps to zero.
    pub fn primitive_integer(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&v);
        }
        let mut factor = BigRational::new(den_lcm, num_gcd);
        if self.terms.last().unwrap().1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Integer content (as a positive rational) such that
    /// `self = content * primitive_integer()` up to sign.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    pub fn eval_complex(&self, point: &[num_complex::Complex64]) -> num_complex::Complex64 {
        use num::ToPrimitive;
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut v = num_complex::Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (z, &e) in point.iter().zip(m.exps()) {
                v *= z.powi(e);
            }
            acc += v;
        }
        acc
    }

    pub fn eval_rational(&self, point: &[BigRational]) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e < 0 && x.is_zero() {
                    return None;
                }
                let p = num::pow::Pow::pow(x, e);
                v *= p;
            }
            acc += v;
        }
        Some(acc)
    }

    fn merge(&self, other: &LaurentPoly, negate_other: bool) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_other { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        LaurentPoly { nvars: self.nvars, terms: out }
    }

    fn mul_impl(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return LaurentPoly {
                nvars: self.nvars,
                terms: large.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
            };
        }
        let mut v = Vec::with_capacity(small.len() * large.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                v.push((ma.mul(mb), ca * cb));
            }
        }
        Self::from_terms(self.nvars, v)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::algebra::text::format_poly(self, &crate::algebra::text::default_var_names(self.nvars)))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::algebra::text::format_poly(self, &crate::algebra::text::default_var_names(self.nvars)))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_impl(rhs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, true);
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in self.terms.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }

    fn one(n: usize) -> LaurentPoly {
        LaurentPoly::one(n)
    }

    #[test]
    fn augment_examples() {
        let p = &one(2) - &t(2, 0);
        assert!(p.augment().is_zero());
        assert!((&t(2, 0) * &t(2, 1)).augment().is_one());
        let q = &(&one(2) - &t(2, 1)) + &(&t(2, 0) * &t(2, 1));
        assert!(q.augment().is_one());
    }

    #[test]
    fn normalize_unit_examples() {
        let u = &t(2, 0) * &t(2, 1);
        assert_eq!(u.normalize_unit().unwrap(), one(2));

        let tinv = t(1, 0).inv_monomial().unwrap();
        let p = -(&tinv * &(&one(1) - &t(1, 0)));
        assert_eq!(p.normalize_unit().unwrap(), &one(1) - &t(1, 0));

        let x = t(1, 0);
        let p = &(&x.pow(2) - &x.pow(3)) + &x.pow(4);
        let expected = &(&one(1) - &x) + &x.pow(2);
        assert_eq!(p.normalize_unit().unwrap(), expected);

        assert!(LaurentPoly::zero(1).normalize_unit().is_err());
    }

    #[test]
    fn exact_division() {
        let x = t(2, 0);
        let y = t(2, 1);
        let a = &(&one(2) - &x) * &(&(&one(2) + &y) - &(&x * &y));
        assert_eq!(a.div_exact(&(&one(2) - &x)).unwrap(), &(&one(2) + &y) - &(&x * &y));
        assert!(a.div_exact(&(&one(2) - &y)).is_none());
        let xinv = x.inv_monomial().unwrap();
        let b = &a * &xinv;
        let q = b.div_exact(&(&xinv - &one(2))).unwrap();
        assert_eq!(&q * &(&xinv - &one(2)), b);
    }

    #[test]
    fn canonical_order() {
        let m = |e: &[i32]| Monomial::from_exps(e);
        assert!(m(&[0, 0]) < m(&[1, 0]));
        assert!(m(&[1, 0]) < m(&[0, 1]));
        assert!(m(&[2, 0]) < m(&[1, 1]));
        assert!(m(&[-1, -1]) < m(&[0, 0]));
    }
}
