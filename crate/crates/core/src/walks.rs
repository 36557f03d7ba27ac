//! Edge labelings by weighted walks, and the twist operation on Gassner
//! matrices.

use crate::algebra::{LaurentPoly, Monomial, RatFunc, RatMatrix};
use crate::diagram::{Diagram, MorseWord};
use crate::error::{Error, Result};
use crate::gassner::{self, GassnerMatrix};

/// Linear system for edge labels given the labels of the top edges.
/// Unknowns are all edges; the top rows pin top edges and each crossing
/// contributes an over equation and an under equation.
fn labeling_system(d: &Diagram) -> RatMatrix {
    let ne = d.edges.len();
    let nv = d.ncolors;
    let mut m = RatMatrix::zeros(ne, ne, nv);
    let one = RatFunc::one(nv);
    for (p, &e) in d.top_edges.iter().enumerate() {
        m[(p, e)] = one.clone();
    }
    for (k, x) in d.crossings.iter().enumerate() {
        let r = d.n + 2 * k;
        m[(r, x.over_in)] = one.clone();
        m[(r, x.over_out)] = -&one;
        let to = LaurentPoly::var(nv, x.over_color);
        let tu = LaurentPoly::var(nv, x.under_color);
        let (w_out, w_over) = if x.sign > 0 {
            // under_in = t_o under_out + (1 - t_u) over
            (to, &LaurentPoly::one(nv) - &tu)
        } else {
            // under_in = t_o^-1 under_out + t_o^-1 t_u (1 - t_u^-1) over
            let inv = LaurentPoly::monomial(Monomial::var(nv, x.over_color, -1));
            let w = &(&inv * &tu) - &inv;
            (inv, w)
        };
        let r = r + 1;
        m[(r, x.under_in)] = one.clone();
        m[(r, x.under_out)] = &m[(r, x.under_out)] - &RatFunc::from_poly(w_out);
        m[(r, x.over_out)] = &m[(r, x.over_out)] - &RatFunc::from_poly(w_over);
    }
    m
}

/// Labels of every edge when the top edges carry `top`.
pub fn solve_labeling(d: &Diagram, top: &[RatFunc]) -> Result<Vec<RatFunc>> {
    if top.len() != d.n {
        return Err(Error::Shape(format!("{} top labels for {} strands", top.len(), d.n)));
    }
    let ne = d.edges.len();
    let rhs = RatMatrix::from_fn(ne, 1, d.ncolors, |i, _| {
        if i < d.n {
            top[i].clone()
        } else {
            RatFunc::zero(d.ncolors)
        }
    });
    let x = labeling_system(d).solve(&rhs)?;
    Ok((0..ne).map(|i| x[(i, 0)].reduce()).collect())
}

/// Matrix whose column `j` holds the bottom labels when top edge `j` is
/// labeled 1 and the others 0.
pub fn walk_matrix(d: &Diagram) -> Result<RatMatrix> {
    let ne = d.edges.len();
    let nv = d.ncolors;
    let rhs = RatMatrix::from_fn(ne, d.n, nv, |i, j| if i == j { RatFunc::one(nv) } else { RatFunc::zero(nv) });
    let x = labeling_system(d).solve(&rhs)?;
    Ok(RatMatrix::from_fn(d.n, d.n, nv, |i, j| x[(d.bottom_edges[i], j)].reduce()))
}

pub fn walk_matrix_of(w: &MorseWord) -> Result<RatMatrix> {
    walk_matrix(&w.trace()?)
}

/// Gassner matrix of the link with a negative horizontal twist on the
/// first strand, from `gamma` alone. With `a = gamma_11`, `b` the rest of
/// row 1, `c` the rest of column 1, `D` the remaining block and
/// `alpha = 1 / (1 - a (1 - t_1^-1))`:
/// `a -> (1 - t_1^-1) + t_1^-2 alpha a`, `b -> t_1^-1 alpha b`,
/// `c -> t_1^-1 alpha c`, `D -> D + (1 - t_1^-1) alpha c b`.
pub fn twist_formula_first(g: &GassnerMatrix) -> Result<GassnerMatrix> {
    let nv = g.nvars;
    let m = &g.matrix;
    let one = RatFunc::one(nv);
    let tinv = RatFunc::from_poly(LaurentPoly::monomial(Monomial::var(nv, g.colors[0], -1)));
    let s = &one - &tinv;
    let a = &m[(0, 0)];
    let alpha = (&one - &(a * &s)).inv().ok_or(Error::Singular)?;
    let ta = &tinv * &alpha;
    let matrix = RatMatrix::from_fn(g.n, g.n, nv, |i, j| {
        let r = match (i == 0, j == 0) {
            (true, true) => &s + &(&(&tinv * &ta) * a),
            (true, false) | (false, true) => &ta * &m[(i, j)],
            (false, false) => &m[(i, j)] + &(&(&s * &alpha) * &(&m[(i, 0)] * &m[(0, j)])),
        };
        r.reduce()
    });
    Ok(GassnerMatrix { matrix, ..g.clone() })
}

/// Gassner matrix of `add_twist(L, k)` (1-based `k`) from `gamma` alone.
///
/// The returning band runs over the strands left of `k`, which perturbs
/// their labels along `v = sum_{j<k} w_j e_j`. With `t = t_k`,
/// `u = v - t e_k`, `r` row `k` of `gamma` and
/// `phi = t^-1 (1 - t^-1) / (1 + t^-1 (1 - t^-1) r.u)`:
/// `rho = phi (e_k - r)` and
/// `gamma' = (I + (t^-1 - 1) E_kk)(gamma + gamma u rho) - v rho + (1 - t^-1) E_kk`.
/// For `k = 1` this is [`twist_formula_first`].
pub fn twist_formula(g: &GassnerMatrix, k: usize) -> Result<GassnerMatrix> {
    if k == 0 || k > g.n {
        return Err(Error::Shape(format!("strand {k} out of range 1..={}", g.n)));
    }
    let (n, nv) = (g.n, g.nvars);
    let k = k - 1;
    let m = &g.matrix;
    let one = RatFunc::one(nv);
    let t = RatFunc::var(nv, g.colors[k]);
    let tinv = RatFunc::from_poly(LaurentPoly::monomial(Monomial::var(nv, g.colors[k], -1)));
    let s = &one - &tinv;
    let w = g.fixed_vector();
    let v: Vec<RatFunc> = (0..n).map(|j| if j < k { w[j].clone() } else { RatFunc::zero(nv) }).collect();
    let mut u = v.clone();
    u[k] = -&t;
    let ru = (0..n).fold(RatFunc::zero(nv), |acc, j| &acc + &(&m[(k, j)] * &u[j]));
    let c = &tinv * &s;
    let phi = c.checked_div(&(&one + &(&c * &ru))).ok_or(Error::Singular)?.reduce();
    let rho: Vec<RatFunc> = (0..n)
        .map(|j| {
            let e = if j == k { &one - &m[(k, j)] } else { -&m[(k, j)] };
            (&phi * &e).reduce()
        })
        .collect();
    let gu: Vec<RatFunc> = (0..n)
        .map(|i| (0..n).fold(RatFunc::zero(nv), |acc, j| &acc + &(&m[(i, j)] * &u[j])).reduce())
        .collect();
    let matrix = RatMatrix::from_fn(n, n, nv, |i, j| {
        let mut x = &m[(i, j)] + &(&gu[i] * &rho[j]);
        if i == k {
            x = &x * &tinv;
            if j == k {
                x = &x + &s;
            }
        }
        (&x - &(&v[i] * &rho[j])).reduce()
    });
    Ok(GassnerMatrix { matrix, ..g.clone() })
}

/// Gassner matrices of `T_k^0(L), ..., T_k^{count-1}(L)` from the twist
/// formula, and whether they are pairwise distinct.
pub fn twist_iterates(w: &MorseWord, k: usize, count: usize) -> Result<(Vec<GassnerMatrix>, bool)> {
    let mut out = vec![gassner::gassner(w)?];
    while out.len() < count {
        let next = twist_formula(out.last().unwrap(), k)?;
        out.push(next);
    }
    let distinct = (0..out.len()).all(|i| (i + 1..out.len()).all(|j| out[i].matrix != out[j].matrix));
    Ok((out, distinct))
}
