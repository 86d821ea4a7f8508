use rayon::prelude::*;

use super::contribution::{hat_contribution, standard_contribution};
use super::pattern::{
    crystal_prefixes, decorate, enumerate_crystal, patterns_with_prefix, G2Pattern,
};
use crate::algebra::LaurentPoly;
use crate::characters::tokuyama_numerator;
use crate::error::Result;
use crate::report::{diff_polys, Census, Parameters, PatternRecord, VerificationReport};
use crate::roots::{RootDatum, Weight};

fn accumulate(
    lambda: Weight,
    patterns: impl Iterator<Item = G2Pattern>,
) -> Result<(LaurentPoly, Census)> {
    let mut sum = LaurentPoly::zero();
    let mut census = Census::default();
    for pi in patterns {
        let dec = decorate(&pi, lambda)?;
        let hat = hat_contribution(&pi, &dec)?;
        census.patterns += 1;
        if dec.has_boxed_and_circled() {
            census.zero += 1;
        } else if pi.is_bad_middle() {
            census.bad_middle += 1;
        }
        if hat != standard_contribution(&dec) {
            census.altered += 1;
        }
        sum.add_term(pi.monomial(), &hat);
    }
    Ok((sum, census))
}

/// `Σ_{π ∈ B(θ+ρ)} Ĥ(π) x^π` together with its census.
///
/// Work is split by `(e, d, c)` prefix across the rayon pool; the sum is
/// independent of the split.
pub fn conjecture_rhs_with_census(theta: Weight) -> Result<(LaurentPoly, Census)> {
    let lambda = theta.plus_rho();
    crystal_prefixes(lambda)
        .into_par_iter()
        .map(|prefix| accumulate(lambda, patterns_with_prefix(lambda, prefix)))
        .try_reduce(
            || (LaurentPoly::zero(), Census::default()),
            |(p, c), (q, d)| Ok((p + q, c + d)),
        )
}

pub fn conjecture_rhs(theta: Weight) -> Result<LaurentPoly> {
    conjecture_rhs_with_census(theta).map(|(p, _)| p)
}

/// Single-threaded variant, used to check that parallel reduction is exact.
pub fn conjecture_rhs_sequential(theta: Weight) -> Result<(LaurentPoly, Census)> {
    let lambda = theta.plus_rho();
    accumulate(lambda, enumerate_crystal(lambda))
}

/// Compare the crystal sum with `χ_θ · D` computed from the character formula.
pub fn verify_conjecture(theta: Weight) -> Result<VerificationReport> {
    let (rhs, census) = conjecture_rhs_with_census(theta)?;
    let lhs = tokuyama_numerator(&RootDatum::g2(), theta)?;
    Ok(VerificationReport::new(
        "conjecture",
        Parameters::Weight {
            l1: theta.l1,
            l2: theta.l2,
        },
        census,
        diff_polys(&lhs, &rhs),
    ))
}

/// Decorated patterns of `B(lambda)` with their corrected contributions.
pub fn pattern_records(lambda: Weight) -> Result<Vec<PatternRecord>> {
    enumerate_crystal(lambda)
        .map(|pi| {
            let dec = decorate(&pi, lambda)?;
            let hat = hat_contribution(&pi, &dec)?;
            Ok(PatternRecord::new(
                &pi.entries(),
                &dec.circled,
                &dec.boxed,
                pi.monomial(),
                &hat,
            ))
        })
        .collect()
}
