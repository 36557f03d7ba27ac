//! Exact Gassner and Burau matrices of string links, with Alexander
//! polynomials, torsion, walk labelings and finite-type expansions.

pub mod alexander;
pub mod corpus;
pub mod algebra;
pub mod diagram;
pub mod error;
pub mod finitetype;
pub mod gassner;
pub mod json;
pub mod walks;
pub mod wirtinger;

pub use algebra::{LaurentPoly, Monomial, RatFunc, RatMatrix, TruncatedSeries};
pub use diagram::{Diagram, MorseEvent, MorseWord};
pub use error::{Error, Result};
pub use gassner::{burau, gassner, reduce, GassnerMatrix};
