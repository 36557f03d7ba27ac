use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, Zero};

use super::gcd;
use super::poly::LaurentPoly;

/// Element of the fraction field of the Laurent ring.
///
/// Stored reduction is partial: monomial factors are always moved out of the
/// denominator and the denominator is kept integer-primitive with positive
/// leading coefficient, but common factors may remain until [`RatFunc::reduce`]
/// is called. Equality is by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        assert_eq!(num.nvars(), den.nvars(), "variable count mismatch");
        Some(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        let nv = den.nvars();
        if num.is_zero() {
            return RatFunc { num, den: LaurentPoly::one(nv) };
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        if let Some(inv) = den.inv_monomial() {
            return RatFunc { num: &num * &inv, den: LaurentPoly::one(nv) };
        }
        let (m, d) = den.split_monomial();
        let prim = d.primitive_integer();
        let k: BigRational = &prim.leading().unwrap().1 / &d.leading().unwrap().1;
        let num = num.mul_monomial(&m.inv()).scale(&k);
        RatFunc { num, den: prim }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let nv = p.nvars();
        RatFunc { num: p, den: LaurentPoly::one(nv) }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::one(nvars))
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(nvars, c))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_poly(LaurentPoly::var(nvars, i))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// The value as a Laurent polynomial, if it is one.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            self.num.div_exact(&self.den)
        }
    }

    /// Cancels the polynomial GCD of numerator and denominator.
    pub fn reduce(&self) -> RatFunc {
        if self.den.is_one() {
            return self.clone();
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            return Self::from_poly(q);
        }
        let g = gcd::gcd(&self.num, &self.den);
        if g.is_constant() {
            return self.clone();
        }
        let n = self.num.div_exact(&g).expect("gcd divides numerator");
        let d = self.den.div_exact(&g).expect("gcd divides denominator");
        Self::normalized(n, d)
    }

    pub fn inv(&self) -> Option<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Option<RatFunc> {
        if rhs.is_zero() {
            return None;
        }
        Some(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn powi(&self, e: i32) -> Option<RatFunc> {
        if e >= 0 {
            let e = e as u32;
            Some(RatFunc { num: self.num.pow(e), den: self.den.pow(e) })
        } else {
            let inv = self.inv()?;
            inv.powi(-e)
        }
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return Self::zero(self.nvars());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> RatFunc {
        if p.is_zero() {
            return Self::zero(self.nvars());
        }
        RatFunc { num: &self.num * p, den: self.den.clone() }
    }

    pub fn bar(&self) -> RatFunc {
        Self::normalized(self.num.bar(), self.den.bar())
    }

    pub fn remap_vars(&self, nvars: usize, map: &[usize]) -> Option<RatFunc> {
        RatFunc::new(self.num.remap_vars(nvars, map), self.den.remap_vars(nvars, map))
    }

    pub fn specialize_single(&self) -> Option<RatFunc> {
        RatFunc::new(self.num.specialize_single(), self.den.specialize_single())
    }

    pub fn eval_complex(&self, point: &[num_complex::Complex64]) -> Option<num_complex::Complex64> {
        let d = self.den.eval_complex(point);
        if d.norm() < 1e-300 {
            return None;
        }
        Some(self.num.eval_complex(point) / d)
    }

    pub fn eval_rational(&self, point: &[BigRational]) -> Option<BigRational> {
        let d = self.den.eval_rational(point)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rational(point)? / d)
    }

    /// Value at `t_1 = ... = t_n = 1`, when the denominator does not vanish.
    pub fn augment(&self) -> Option<BigRational> {
        let d = self.den.augment();
        if d.is_zero() {
            None
        } else {
            Some(self.num.augment() / d)
        }
    }

    /// Total number of stored terms, a rough size measure.
    pub fn size(&self) -> usize {
        self.num.len() + self.den.len()
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = super::text::default_var_names(self.nvars());
        write!(f, "{}", super::text::format_ratfunc(self, &names))
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

fn add_impl(a: &RatFunc, b: &RatFunc, negate: bool) -> RatFunc {
    let bn = if negate { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return RatFunc { num: bn, den: b.den.clone() };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        let num = &a.num + &bn;
        let nv = num.nvars();
        if num.is_zero() {
            return RatFunc::zero(nv);
        }
        return RatFunc { num, den: a.den.clone() };
    }
    if b.den.is_one() {
        return RatFunc::normalized(&a.num + &(&bn * &a.den), a.den.clone());
    }
    if a.den.is_one() {
        return RatFunc::normalized(&(&a.num * &b.den) + &bn, b.den.clone());
    }
    if let Some(q) = a.den.div_exact(&b.den) {
        return RatFunc::normalized(&a.num + &(&bn * &q), a.den.clone());
    }
    if let Some(q) = b.den.div_exact(&a.den) {
        return RatFunc::normalized(&(&a.num * &q) + &bn, b.den.clone());
    }
    RatFunc::normalized(&(&a.num * &b.den) + &(&bn * &a.den), &a.den * &b.den)
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        add_impl(self, rhs, false)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        add_impl(self, rhs, true)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        let nv = self.nvars();
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(nv);
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: LaurentPoly::one(nv) };
        }
        if self.den == rhs.num {
            return RatFunc::normalized(self.num.clone(), rhs.den.clone());
        }
        if rhs.den == self.num {
            return RatFunc::normalized(rhs.num.clone(), self.den.clone());
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::{default_var_names, parse_ratfunc};

    fn r(s: &str) -> RatFunc {
        parse_ratfunc(s, &default_var_names(2)).unwrap()
    }

    #[test]
    fn cross_multiplication_equality() {
        let a = r("(1 - t1)/(1 + t2)");
        let b = RatFunc::new(
            &a.num().clone() * r("1 - t1*t2").num(),
            &a.den().clone() * r("1 - t1*t2").num(),
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(b.reduce().den(), a.den());
    }

    #[test]
    fn monomial_denominators_vanish() {
        let a = r("(1 - t1)/(2*t1*t2)");
        assert!(a.den().is_one());
        assert_eq!(a, r("1/2*t1^-1*t2^-1 - 1/2*t2^-1"));
    }

    #[test]
    fn field_ops() {
        let a = r("(1 - t1)/(1 + t2)");
        let b = r("t2/(1 - t1 + t2)");
        let s = &(&a + &b) - &b;
        assert_eq!(s, a);
        let q = (&a * &b).checked_div(&b).unwrap();
        assert_eq!(q, a);
        assert!((&a * &a.inv().unwrap()).is_one() || (&a * &a.inv().unwrap()) == RatFunc::one(2));
    }
}
