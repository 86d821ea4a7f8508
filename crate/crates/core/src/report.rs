//! Serializable verification reports and pattern records.

use serde::{Deserialize, Serialize};

use crate::algebra::{CoeffPoly, ExponentVector, LaurentPoly};

pub const SCHEMA_VERSION: u32 = 1;

/// Pattern counts gathered while summing over a crystal.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub patterns: u64,
    /// Patterns with an entry that is both boxed and circled.
    pub zero: u64,
    /// Bad-middle patterns among the remaining ones.
    pub bad_middle: u64,
    /// Patterns whose corrected contribution differs from the standard one.
    pub altered: u64,
}

impl std::ops::Add for Census {
    type Output = Census;
    fn add(self, o: Census) -> Census {
        Census {
            patterns: self.patterns + o.patterns,
            zero: self.zero + o.zero,
            bad_middle: self.bad_middle + o.bad_middle,
            altered: self.altered + o.altered,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub m: i64,
    pub n: i64,
}

impl From<ExponentVector> for Monomial {
    fn from(e: ExponentVector) -> Self {
        Self { m: e.m, n: e.n }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub monomial: Monomial,
    pub lhs: Vec<i64>,
    pub rhs: Vec<i64>,
}

/// Every monomial where `lhs` and `rhs` differ, in canonical order.
pub fn diff_polys(lhs: &LaurentPoly, rhs: &LaurentPoly) -> Vec<Mismatch> {
    let mut exps: Vec<ExponentVector> = lhs.support().chain(rhs.support()).collect();
    exps.sort();
    exps.dedup();
    exps.into_iter()
        .filter_map(|e| {
            let (l, r) = (lhs.coeff(e), rhs.coeff(e));
            (l != r).then(|| Mismatch {
                monomial: e.into(),
                lhs: l.coeffs().to_vec(),
                rhs: r.coeffs().to_vec(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Parameters {
    Weight { l1: u32, l2: u32 },
    Degree { max_degree: i64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub task: String,
    pub parameters: Parameters,
    pub equal: bool,
    pub counts: Census,
    pub mismatches: Vec<Mismatch>,
    /// Wall time in milliseconds; left out of reports by default so that
    /// output is reproducible.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<f64>,
}

impl VerificationReport {
    pub fn new(
        task: impl Into<String>,
        parameters: Parameters,
        counts: Census,
        mismatches: Vec<Mismatch>,
    ) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            task: task.into(),
            parameters,
            equal: mismatches.is_empty(),
            counts,
            mismatches,
            elapsed_ms: None,
        }
    }
}

/// One decorated pattern with its contribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternRecord {
    pub entries: Vec<i64>,
    pub circled: Vec<bool>,
    pub boxed: Vec<bool>,
    pub monomial: Monomial,
    pub contribution: Vec<i64>,
}

impl PatternRecord {
    pub fn new(
        entries: &[i64],
        circled: &[bool],
        boxed: &[bool],
        monomial: ExponentVector,
        contribution: &CoeffPoly,
    ) -> Self {
        Self {
            entries: entries.to_vec(),
            circled: circled.to_vec(),
            boxed: boxed.to_vec(),
            monomial: monomial.into(),
            contribution: contribution.coeffs().to_vec(),
        }
    }
}
