//! Exact computations around a deformed Weyl character identity for `G2`.
//!
//! The crate sums corrected contributions over `G2` Littelmann patterns and
//! compares the result with `χ_θ · ∏(1 - t·x^α)` obtained independently from
//! the Weyl character formula. It also checks the combinatorial
//! Gindikin–Karpelevič expansion of `∏ (1 - t·x^α)/(1 - x^α)` over `B(∞)`,
//! and runs the rank-two type `A` analogue as a sanity harness.
//!
//! Coefficients are polynomials in `t = 1/q` with exact integer coefficients.

pub mod a2;
pub mod algebra;
pub mod characters;
pub mod error;
pub mod g2;
pub mod gk;
pub mod report;
pub mod roots;

pub use algebra::{CoeffPoly, ExponentVector, LaurentPoly};
pub use error::{Error, Result};
pub use g2::{Decoration, G2Pattern};
pub use report::{Census, VerificationReport};
pub use roots::{RootDatum, Weight};
