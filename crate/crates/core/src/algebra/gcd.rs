//! Multivariate polynomial GCD over Q by recursive primitive remainder sequences.

use super::poly::{LaurentPoly, Monomial};

fn main_var(a: &LaurentPoly, b: &LaurentPoly) -> Option<usize> {
    (0..a.nvars()).rev().find(|&v| a.involves(v) || b.involves(v))
}

/// GCD of the coefficients of `p` viewed as univariate in `var`.
fn content(p: &LaurentPoly, var: usize) -> LaurentPoly {
    let mut g: Option<LaurentPoly> = None;
    for c in p.coefficients_in(var) {
        if c.is_zero() {
            continue;
        }
        g = Some(match g {
            None => c.primitive_integer(),
            Some(g) => poly_gcd(&g, &c),
        });
        if g.as_ref().is_some_and(|g| g.is_constant()) {
            break;
        }
    }
    g.unwrap_or_else(|| LaurentPoly::one(p.nvars()))
}

fn primitive_part(p: &LaurentPoly, var: usize) -> LaurentPoly {
    let c = content(p, var);
    p.div_exact(&c).expect("content divides").primitive_integer()
}

fn lead_coeff(p: &LaurentPoly, var: usize) -> (i32, LaurentPoly) {
    let coeffs = p.coefficients_in(var);
    let d = coeffs.len() as i32 - 1;
    (d, coeffs.into_iter().last().expect("nonzero"))
}

fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly, var: usize) -> LaurentPoly {
    let nv = a.nvars();
    let (db, lb) = lead_coeff(b, var);
    let mut r = a.clone();
    while !r.is_zero() {
        let (dr, lr) = lead_coeff(&r, var);
        if dr < db {
            break;
        }
        let shift = LaurentPoly::monomial(Monomial::var(nv, var, dr - db));
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
        r = r.primitive_integer();
    }
    r
}

/// GCD of two ordinary polynomials (nonnegative exponents), normalized to
/// coprime integer coefficients with positive leading term.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let nv = a.nvars();
    if a.is_zero() {
        return b.primitive_integer();
    }
    if b.is_zero() {
        return a.primitive_integer();
    }
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one(nv);
    }
    let var = match main_var(a, b) {
        Some(v) => v,
        None => return LaurentPoly::one(nv),
    };
    if !a.involves(var) {
        return poly_gcd(a, &content(b, var));
    }
    if !b.involves(var) {
        return poly_gcd(&content(a, var), b);
    }
    let gc = poly_gcd(&content(a, var), &content(b, var));
    let mut p = primitive_part(a, var);
    let mut q = primitive_part(b, var);
    if p.degree_in(var) < q.degree_in(var) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_rem(&p, &q, var);
        if r.is_zero() {
            break;
        }
        if !r.involves(var) {
            q = LaurentPoly::one(nv);
            break;
        }
        p = q;
        q = primitive_part(&r, var);
    }
    (&gc * &q).primitive_integer()
}

/// GCD in the Laurent ring, as an ordinary polynomial with no monomial
/// factor. Defined up to units; the result is integer-primitive with a
/// positive leading coefficient.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (_, a) = a.split_monomial();
    let (_, b) = b.split_monomial();
    poly_gcd(&a, &b)
}

/// LCM in the Laurent ring up to units.
pub fn lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_monomial() {
        return b.split_monomial().1;
    }
    if b.is_monomial() {
        return a.split_monomial().1;
    }
    let (_, a) = a.split_monomial();
    let (_, b) = b.split_monomial();
    if b.div_exact(&a).is_some() {
        return b;
    }
    if a.div_exact(&b).is_some() {
        return a;
    }
    let g = poly_gcd(&a, &b);
    (&a * &b).div_exact(&g).expect("gcd divides")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::{default_var_names, parse_poly};

    fn p(s: &str, n: usize) -> LaurentPoly {
        parse_poly(s, &default_var_names(n)).unwrap()
    }

    #[test]
    fn univariate() {
        let g = gcd(&p("1 - t1^2", 1), &p("1 - 2*t1 + t1^2", 1));
        assert!(g.associate(&p("1 - t1", 1)));
        assert!(gcd(&p("1 + t1", 1), &p("1 - t1", 1)).is_one());
    }

    #[test]
    fn multivariate() {
        let f = p("1 - t1 + t1*t2", 3);
        let a = &f * &p("t3 - t1^2", 3);
        let b = &f * &p("(1 + t2)*(2 - t3)", 3);
        assert!(gcd(&a, &b).associate(&f));
        let a2 = &a * &p("t1^-3", 3);
        assert!(gcd(&a2, &b).associate(&f));
    }

    #[test]
    fn lcm_divisible() {
        let a = p("1 - t1^2", 2);
        let b = p("(1 - t1)*(1 + t2)", 2);
        let l = lcm(&a, &b);
        assert!(l.div_exact(&a).is_some());
        assert!(l.div_exact(&b).is_some());
        assert_eq!(l.len(), p("(1 - t1^2)*(1 + t2)", 2).len());
    }
}
