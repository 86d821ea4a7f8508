//! Exact polynomial arithmetic: `Z[t]` coefficients (with `t = 1/q`) and
//! sparse Laurent polynomials in two variables over them.

mod coeff;
mod laurent;

pub use coeff::CoeffPoly;
pub use laurent::{ExponentVector, LaurentPoly, TermRecord};
