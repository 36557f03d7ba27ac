//! Laurent polynomials, rational functions, exact linear algebra and
//! truncated power series.

pub mod gcd;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod series;
pub mod text;

pub use matrix::RatMatrix;
pub use poly::{LaurentPoly, Monomial};
pub use ratfunc::RatFunc;
pub use series::{taylor_expand, TruncatedSeries};

use num::BigRational;

/// Sum of coefficients of `p`, its value at `t_1 = ... = t_n = 1`.
pub fn augment(p: &LaurentPoly) -> BigRational {
    p.augment()
}

/// Canonical representative of `p` modulo units `±t^a`.
pub fn normalize_unit(p: &LaurentPoly) -> crate::Result<LaurentPoly> {
    p.normalize_unit()
}
