use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, Zero};

use super::poly::{LaurentPoly, Monomial};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Power series in `z_1..z_n` truncated above total degree `bound`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    bound: u32,
    poly: LaurentPoly,
}

impl TruncatedSeries {
    pub fn zero(nvars: usize, bound: u32) -> Self {
        TruncatedSeries { bound, poly: LaurentPoly::zero(nvars) }
    }

    pub fn one(nvars: usize, bound: u32) -> Self {
        TruncatedSeries { bound, poly: LaurentPoly::one(nvars) }
    }

    /// `z_{var+1}` as a series.
    pub fn z(nvars: usize, var: usize, bound: u32) -> Self {
        Self::from_poly(LaurentPoly::var(nvars, var), bound)
    }

    /// Truncates an ordinary polynomial in the `z` variables.
    pub fn from_poly(p: LaurentPoly, bound: u32) -> Self {
        debug_assert!(p.terms().iter().all(|(m, _)| m.exps().iter().all(|&e| e >= 0)));
        let nv = p.nvars();
        let terms = p.terms().iter().filter(|(m, _)| m.degree() <= bound as i64).cloned();
        TruncatedSeries { bound, poly: LaurentPoly::from_terms(nv, terms) }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn as_poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&vec![0; self.nvars()])
    }

    pub fn coefficient(&self, exps: &[i32]) -> BigRational {
        let m = Monomial::from_exps(exps);
        self.poly.terms().iter().find(|(x, _)| *x == m).map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
    }

    /// Smallest total degree carrying a nonzero coefficient.
    pub fn order(&self) -> Option<u32> {
        self.poly.terms().first().map(|(m, _)| m.degree() as u32)
    }

    /// Coefficients grouped by total degree.
    pub fn by_degree(&self) -> BTreeMap<u32, Vec<(Vec<i32>, BigRational)>> {
        let mut out: BTreeMap<u32, Vec<(Vec<i32>, BigRational)>> = BTreeMap::new();
        for (m, c) in self.poly.terms() {
            out.entry(m.degree() as u32).or_default().push((m.exps().to_vec(), c.clone()));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        Self::from_poly(&self.poly + &other.poly, bound)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        Self::from_poly(&self.poly - &other.poly, bound)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries { bound: self.bound, poly: self.poly.scale(c) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        let nv = self.nvars();
        let mut terms = Vec::new();
        for (ma, ca) in self.poly.terms() {
            let da = ma.degree();
            for (mb, cb) in other.poly.terms() {
                if da + mb.degree() > bound as i64 {
                    break;
                }
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        TruncatedSeries { bound, poly: LaurentPoly::from_terms(nv, terms) }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars(), self.bound);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse, defined when the constant term is nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::NotExpandable);
        }
        let nv = self.nvars();
        let a0inv = a0.recip();
        // self = a0 (1 - q) with q of positive order
        let q = Self::one(nv, self.bound).sub(&self.scale(&a0inv));
        let mut acc = Self::one(nv, self.bound);
        let mut power = Self::one(nv, self.bound);
        for _ in 0..self.bound {
            power = power.mul(&q);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.scale(&a0inv))
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(z^{})", self.display_with(&z_names(self.nvars())), self.bound + 1)
    }
}

impl TruncatedSeries {
    pub fn display_with(&self, names: &[String]) -> String {
        super::text::format_poly(&self.poly, names)
    }
}

pub fn z_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("z{i}")).collect()
}

/// Expansion of `t^e` for `t = 1 - z` in one variable.
fn one_minus_z_power(nvars: usize, var: usize, e: i32, bound: u32) -> TruncatedSeries {
    let z = TruncatedSeries::z(nvars, var, bound);
    let one = TruncatedSeries::one(nvars, bound);
    if e >= 0 {
        one.sub(&z).pow(e as u32)
    } else {
        let mut geo = TruncatedSeries::zero(nvars, bound);
        let mut p = TruncatedSeries::one(nvars, bound);
        for _ in 0..=bound {
            geo = geo.add(&p);
            p = p.mul(&z);
        }
        geo.pow((-e) as u32)
    }
}

/// Substitutes `t_i = 1 - z_i` into a Laurent polynomial.
pub fn expand_poly(p: &LaurentPoly, bound: u32) -> TruncatedSeries {
    let nv = p.nvars();
    let mut cache: BTreeMap<(usize, i32), TruncatedSeries> = BTreeMap::new();
    let mut acc = TruncatedSeries::zero(nv, bound);
    for (m, c) in p.terms() {
        let mut t = TruncatedSeries::from_poly(LaurentPoly::constant(nv, c.clone()), bound);
        for (v, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let f = cache.entry((v, e)).or_insert_with(|| one_minus_z_power(nv, v, e, bound));
            t = t.mul(f);
        }
        acc = acc.add(&t);
    }
    acc
}

/// Taylor expansion of `r` about `t = (1,...,1)` in `z_i = 1 - t_i`, to total
/// degree `bound`.
pub fn taylor_expand(r: &RatFunc, bound: u32) -> Result<TruncatedSeries> {
    if r.den().augment().is_zero() {
        return Err(Error::NotExpandable);
    }
    let num = expand_poly(r.num(), bound);
    if r.den().is_one() {
        return Ok(num);
    }
    let den = expand_poly(r.den(), bound);
    Ok(num.mul(&den.inverse()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::{default_var_names, parse_poly, parse_ratfunc};

    fn zp(s: &str, nv: usize, bound: u32) -> TruncatedSeries {
        TruncatedSeries::from_poly(parse_poly(s, &z_names(nv)).unwrap(), bound)
    }

    #[test]
    fn expansions() {
        let t = default_var_names(2);
        let e = taylor_expand(&parse_ratfunc("t2", &t).unwrap(), 3).unwrap();
        assert_eq!(e, zp("1 - z2", 2, 3));
        let e = taylor_expand(&parse_ratfunc("1/t1", &t).unwrap(), 2).unwrap();
        assert_eq!(e, zp("1 + z1 + z1^2", 2, 2));
        let e = taylor_expand(&parse_ratfunc("1 - t2 + t1*t2", &t).unwrap(), 2).unwrap();
        assert_eq!(e, zp("1 - z1 + z1*z2", 2, 2));
        assert!(taylor_expand(&parse_ratfunc("1/(1 - t1)", &t).unwrap(), 2).is_err());
    }

    #[test]
    fn inverse_series() {
        let s = zp("2 - z1 + 3*z1*z2", 2, 4);
        let p = s.mul(&s.inverse().unwrap());
        assert_eq!(p, TruncatedSeries::one(2, 4));
    }
}
