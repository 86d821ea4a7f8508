//! Type `A2` patterns `[a,b][c]` and the classical Tokuyama sum, used as an
//! end-to-end check of the polynomial core and the character formula.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{CoeffPoly, ExponentVector, LaurentPoly};
use crate::characters::tokuyama_numerator;
use crate::error::{Error, Result};
use crate::g2::entry_factor;
use crate::report::{diff_polys, Census, Parameters, PatternRecord, VerificationReport};
use crate::roots::{RootDatum, Weight};

const NAMES: [char; 3] = ['a', 'b', 'c'];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct A2Pattern {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl A2Pattern {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    pub fn entries(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }

    /// `x^{b+c} y^a`
    pub fn monomial(&self) -> ExponentVector {
        ExponentVector::new(self.b + self.c, self.a)
    }

    fn upper_bounds(&self, lambda: Weight) -> [i64; 3] {
        let (l1, l2) = (lambda.l1(), lambda.l2());
        [l2 + self.b, l1, l1 + self.a - 2 * self.b]
    }
}

impl fmt::Display for A2Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}][{}]", self.a, self.b, self.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct A2Decoration {
    pub circled: [bool; 3],
    pub boxed: [bool; 3],
}

pub fn decorate_a2(pi: &A2Pattern, lambda: Weight) -> Result<A2Decoration> {
    let A2Pattern { a, b, c } = *pi;
    if !(a >= b && b >= 0 && c >= 0) {
        return Err(Error::CirclingViolation([a, b, c, 0, 0, 0]));
    }
    let bounds = pi.upper_bounds(lambda);
    let entries = pi.entries();
    let mut boxed = [false; 3];
    for i in [1, 0, 2] {
        if entries[i] > bounds[i] {
            return Err(Error::BoundViolation {
                entry: NAMES[i],
                value: entries[i],
                bound: bounds[i],
            });
        }
        boxed[i] = entries[i] == bounds[i];
    }
    Ok(A2Decoration {
        circled: [a == b, b == 0, c == 0],
        boxed,
    })
}

pub fn standard_contribution_a2(dec: &A2Decoration) -> CoeffPoly {
    (0..3).fold(CoeffPoly::one(), |acc, i| {
        &acc * &entry_factor(dec.circled[i], dec.boxed[i])
    })
}

/// Patterns of `B(lambda)`, looping over `b`, then `a`, then `c`.
pub fn enumerate_a2(lambda: Weight) -> impl Iterator<Item = A2Pattern> {
    let (l1, l2) = (lambda.l1(), lambda.l2());
    (0..=l1).flat_map(move |b| {
        (b..=l2 + b).flat_map(move |a| (0..=l1 + a - 2 * b).map(move |c| A2Pattern::new(a, b, c)))
    })
}

fn sum_with_census(theta: Weight) -> Result<(LaurentPoly, Census)> {
    let lambda = theta.plus_rho();
    let mut sum = LaurentPoly::zero();
    let mut census = Census::default();
    for pi in enumerate_a2(lambda) {
        let dec = decorate_a2(&pi, lambda)?;
        census.patterns += 1;
        if dec.circled.iter().zip(&dec.boxed).any(|(&c, &b)| c && b) {
            census.zero += 1;
        }
        sum.add_term(pi.monomial(), &standard_contribution_a2(&dec));
    }
    Ok((sum, census))
}

/// `Σ_{π ∈ B(θ+ρ)} H(π) x^π`.
pub fn tokuyama_sum_a2(theta: Weight) -> Result<LaurentPoly> {
    sum_with_census(theta).map(|(p, _)| p)
}

pub fn verify_tokuyama_a2(theta: Weight) -> Result<VerificationReport> {
    let (rhs, census) = sum_with_census(theta)?;
    let lhs = tokuyama_numerator(&RootDatum::a2(), theta)?;
    Ok(VerificationReport::new(
        "tokuyama-a2",
        Parameters::Weight {
            l1: theta.l1,
            l2: theta.l2,
        },
        census,
        diff_polys(&lhs, &rhs),
    ))
}

pub fn pattern_records_a2(lambda: Weight) -> Result<Vec<PatternRecord>> {
    enumerate_a2(lambda)
        .map(|pi| {
            let dec = decorate_a2(&pi, lambda)?;
            Ok(PatternRecord::new(
                &pi.entries(),
                &dec.circled,
                &dec.boxed,
                pi.monomial(),
                &standard_contribution_a2(&dec),
            ))
        })
        .collect()
}
