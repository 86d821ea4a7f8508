//! `G2` Littelmann patterns for the reduced word `s2 s1 s2 s1 s2 s1`:
//! enumeration, circling and boxing, the standard contribution `H`, the
//! corrected contribution `Ĥ`, and the deformed character identity built
//! from them.

mod conjecture;
mod contribution;
mod pattern;

pub use conjecture::{
    conjecture_rhs, conjecture_rhs_sequential, conjecture_rhs_with_census, pattern_records,
    verify_conjecture,
};
pub use contribution::{
    entry_factor, hat_case, hat_contribution, standard_contribution, top_row_contribution, HatCase,
};
pub use pattern::{
    crystal_prefixes, decorate, decorate_infinite, enumerate_crystal, enumerate_infinite,
    patterns_with_prefix, BoxingVector, Decoration, G2Pattern, ENTRY_NAMES,
};
