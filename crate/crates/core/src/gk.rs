//! Combinatorial Gindikin–Karpelevič expansion for `G2`.
//!
//! Three routes to the truncated series of `∏_{α>0} (1 - t·x^α)/(1 - x^α)`:
//! the product of geometric series, the sum over vector partitions weighted
//! by `(1-t)^ι`, and the sum of `Ĥ` over `B(∞)`. The circling cone is split
//! into two unimodular cones, which gives a degree-preserving bijection
//! between patterns and vector partitions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{CoeffPoly, ExponentVector, LaurentPoly};
use crate::error::Result;
use crate::g2::{
    decorate_infinite, enumerate_infinite, hat_contribution, standard_contribution, G2Pattern,
};
use crate::roots::RootVector;

/// Positive roots of `G2`. `A1` is the long simple root (variable `y`),
/// `A2` the short one (variable `x`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PositiveRoot {
    A1,
    A2,
    A3,
    A4,
    A3Prime,
    A5,
}

impl PositiveRoot {
    pub const ALL: [PositiveRoot; 6] = [
        PositiveRoot::A1,
        PositiveRoot::A2,
        PositiveRoot::A3,
        PositiveRoot::A4,
        PositiveRoot::A3Prime,
        PositiveRoot::A5,
    ];

    /// Root coordinates `(x-degree, y-degree)`.
    pub fn vector(self) -> RootVector {
        match self {
            PositiveRoot::A1 => RootVector::new(0, 1),
            PositiveRoot::A2 => RootVector::new(1, 0),
            PositiveRoot::A3 => RootVector::new(1, 1),
            PositiveRoot::A4 => RootVector::new(2, 1),
            PositiveRoot::A3Prime => RootVector::new(3, 1),
            PositiveRoot::A5 => RootVector::new(3, 2),
        }
    }

    pub fn degree(self) -> i64 {
        self.vector().height()
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PositiveRoot::A1 => "α1",
            PositiveRoot::A2 => "α2",
            PositiveRoot::A3 => "α3",
            PositiveRoot::A4 => "α4",
            PositiveRoot::A3Prime => "α3'",
            PositiveRoot::A5 => "α5",
        };
        f.write_str(s)
    }
}

/// A map `Φ⁺ → Z≥0`, stored in [`PositiveRoot::ALL`] order.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct VectorPartition {
    pub multiplicity: [i64; 6],
}

impl VectorPartition {
    pub fn new(multiplicity: [i64; 6]) -> Self {
        Self { multiplicity }
    }

    pub fn from_pairs(pairs: &[(PositiveRoot, i64)]) -> Self {
        let mut p = Self::default();
        for &(r, k) in pairs {
            p.multiplicity[r.index()] += k;
        }
        p
    }

    pub fn get(&self, root: PositiveRoot) -> i64 {
        self.multiplicity[root.index()]
    }

    /// Number of roots with nonzero multiplicity.
    pub fn index(&self) -> u32 {
        self.multiplicity.iter().filter(|&&k| k != 0).count() as u32
    }

    /// Exponent of `x^ξ = x^{Σ ξ(α) α}`.
    pub fn monomial(&self) -> ExponentVector {
        PositiveRoot::ALL
            .iter()
            .fold(ExponentVector::ZERO, |acc, &r| {
                let v = r.vector();
                let k = self.get(r);
                acc + ExponentVector::new(k * v.u, k * v.v)
            })
    }

    pub fn degree(&self) -> i64 {
        self.monomial().total_degree()
    }
}

impl fmt::Display for VectorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = PositiveRoot::ALL
            .iter()
            .filter(|r| self.get(**r) != 0)
            .map(|r| format!("{}·{}", self.get(*r), r))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub const V1: [i64; 6] = [0, 0, 0, 0, 0, 1];
pub const V2: [i64; 6] = [1, 0, 0, 0, 0, 0];
pub const V3: [i64; 6] = [1, 1, 0, 0, 0, 0];
pub const V3_PRIME: [i64; 6] = [1, 1, 2, 0, 0, 0];
pub const V4: [i64; 6] = [1, 1, 1, 0, 0, 0];
pub const V5: [i64; 6] = [1, 1, 2, 1, 0, 0];
pub const V6: [i64; 6] = [1, 1, 2, 1, 1, 0];

/// Generators of the circling cone and of its two unimodular pieces, in
/// `(a,b,c,d,e,f)` coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeDecomposition {
    pub v1: [i64; 6],
    pub v2: [i64; 6],
    pub v3: [i64; 6],
    pub v3_prime: [i64; 6],
    pub v4: [i64; 6],
    pub v5: [i64; 6],
    pub v6: [i64; 6],
}

impl Default for ConeDecomposition {
    fn default() -> Self {
        Self {
            v1: V1,
            v2: V2,
            v3: V3,
            v3_prime: V3_PRIME,
            v4: V4,
            v5: V5,
            v6: V6,
        }
    }
}

impl ConeDecomposition {
    /// `C1 = <v1, v2, v3, v4, v5, v6>`
    pub fn c1(&self) -> [[i64; 6]; 6] {
        [self.v1, self.v2, self.v3, self.v4, self.v5, self.v6]
    }

    /// `C2 = <v1, v2, v3', v4, v5, v6>`
    pub fn c2(&self) -> [[i64; 6]; 6] {
        [self.v1, self.v2, self.v3_prime, self.v4, self.v5, self.v6]
    }

    /// Primitive edge generators of the circling cone (no `v4`).
    pub fn edges(&self) -> [[i64; 6]; 6] {
        [self.v1, self.v2, self.v3, self.v3_prime, self.v5, self.v6]
    }
}

/// Integer determinant by fraction-free (Bareiss) elimination.
pub fn determinant<const N: usize>(rows: &[[i64; N]; N]) -> i64 {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..N {
        if m[k][k] == 0 {
            match (k + 1..N).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..N {
            for j in k + 1..N {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    i64::try_from(sign * m[N - 1][N - 1]).expect("determinant fits in i64")
}

/// Coefficients of a circling-valid pattern in the unimodular basis of the
/// cone containing it. Uses `C1` on the overlap `c = b + d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeCoordinates {
    /// `[a1, a2, a3, a4, a5, a6]` over `v1, v2, v3, v4, v5, v6`.
    C1([i64; 6]),
    /// `[a1, a2, a3', a4, a5, a6]` over `v1, v2, v3', v4, v5, v6`.
    C2([i64; 6]),
}

pub fn cone_coordinates(pi: &G2Pattern) -> Result<ConeCoordinates> {
    pi.check_circling()?;
    let G2Pattern { a, b, c, d, e, f } = *pi;
    Ok(if c <= b + d {
        ConeCoordinates::C1([f, a - b, b + d - c, c - 2 * d, d - e, e])
    } else {
        ConeCoordinates::C2([f, a - b, c - b - d, 2 * b - c, d - e, e])
    })
}

/// The bijection from circling-valid patterns to vector partitions.
pub fn pattern_to_partition(pi: &G2Pattern) -> Result<VectorPartition> {
    use PositiveRoot::*;
    let (coords, three, three_prime) = match cone_coordinates(pi)? {
        ConeCoordinates::C1(k) => (k, k[2] + k[5], k[5]),
        ConeCoordinates::C2(k) => (k, k[5], k[2] + k[5]),
    };
    Ok(VectorPartition::from_pairs(&[
        (A1, coords[0]),
        (A2, coords[1]),
        (A3, three),
        (A4, coords[3]),
        (A3Prime, three_prime),
        (A5, coords[4]),
    ]))
}

/// Inverse of [`pattern_to_partition`].
pub fn partition_to_pattern(xi: &VectorPartition) -> G2Pattern {
    use PositiveRoot::*;
    let (three, three_prime) = (xi.get(A3), xi.get(A3Prime));
    let a6 = three.min(three_prime);
    let mut v = [0i64; 6];
    let mut add = |k: i64, g: [i64; 6]| {
        for (vi, gi) in v.iter_mut().zip(g) {
            *vi += k * gi;
        }
    };
    add(xi.get(A1), V1);
    add(xi.get(A2), V2);
    add(three - a6, V3);
    add(three_prime - a6, V3_PRIME);
    add(xi.get(A4), V4);
    add(xi.get(A5), V5);
    add(a6, V6);
    G2Pattern::from(v)
}

/// `∏_α (1 - t·x^α) · Σ_k x^{kα}`, truncated at total degree `max_degree`.
pub fn gk_lhs_series(max_degree: i64) -> LaurentPoly {
    PositiveRoot::ALL
        .iter()
        .fold(LaurentPoly::one().truncate(max_degree), |acc, r| {
            let v = r.vector();
            let step = r.degree();
            let geometric = LaurentPoly::from_terms(
                (0..)
                    .take_while(|k| k * step <= max_degree)
                    .map(|k| (ExponentVector::new(k * v.u, k * v.v), CoeffPoly::one())),
            );
            let deform = LaurentPoly::one() - LaurentPoly::term(v.monomial(), CoeffPoly::t());
            let factor = geometric.mul_truncated(&deform, max_degree);
            acc.mul_truncated(&factor, max_degree)
        })
}

/// Every vector partition with `degree ≤ max_degree`.
pub fn enumerate_partitions(max_degree: i64) -> Vec<VectorPartition> {
    fn go(i: usize, budget: i64, current: &mut [i64; 6], out: &mut Vec<VectorPartition>) {
        if i == 6 {
            out.push(VectorPartition::new(*current));
            return;
        }
        let step = PositiveRoot::ALL[i].degree();
        let mut k = 0;
        while k * step <= budget {
            current[i] = k;
            go(i + 1, budget - k * step, current, out);
            k += 1;
        }
        current[i] = 0;
    }
    let mut out = Vec::new();
    if max_degree >= 0 {
        go(0, max_degree, &mut [0; 6], &mut out);
    }
    out
}

/// `Σ_ξ (1-t)^{ι(ξ)} x^ξ` over partitions of degree at most `max_degree`.
pub fn partition_sum_series(max_degree: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for xi in enumerate_partitions(max_degree) {
        out.add_term(xi.monomial(), &CoeffPoly::one_minus_t_pow(xi.index()));
    }
    out
}

/// `Σ_{π ∈ B(∞)} Ĥ(π) x^π` over patterns of degree at most `max_degree`.
pub fn gk_pattern_series(max_degree: i64) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for pi in enumerate_infinite(max_degree) {
        let dec = decorate_infinite(&pi)?;
        out.add_term(pi.monomial(), &hat_contribution(&pi, &dec)?);
    }
    Ok(out)
}

/// Relative interior of a face of `C' = C1 ∩ C2 = <v1, v2, v4, v5, v6>`,
/// named by the generators with positive coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubconeLabel {
    OutsideIntersection,
    Inside(Subcone),
}

/// A subset of `{1, 2, 4, 5, 6}`, stored as a bitmask over generator numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subcone(u8);

impl Subcone {
    pub const GENERATORS: [u8; 5] = [1, 2, 4, 5, 6];

    pub fn from_generators(gens: &[u8]) -> Self {
        Self(gens.iter().fold(0, |acc, &g| {
            assert!(Self::GENERATORS.contains(&g), "not a generator of C': {g}");
            acc | (1 << g)
        }))
    }

    pub fn contains(self, g: u8) -> bool {
        self.0 & (1 << g) != 0
    }

    pub fn generators(self) -> Vec<u8> {
        Self::GENERATORS
            .iter()
            .copied()
            .filter(|&g| self.contains(g))
            .collect()
    }

    pub fn without(self, g: u8) -> Self {
        Self(self.0 & !(1 << g))
    }

    /// Parse the compact form, e.g. `"245"`; `"∅"` is the apex.
    pub fn parse(s: &str) -> Option<Self> {
        if s == "∅" {
            return Some(Self(0));
        }
        let mut gens = Vec::new();
        for ch in s.chars() {
            let g = ch.to_digit(10)? as u8;
            if !Self::GENERATORS.contains(&g) {
                return None;
            }
            gens.push(g);
        }
        Some(Self::from_generators(&gens))
    }
}

impl fmt::Display for Subcone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators();
        if gens.is_empty() {
            return write!(f, "∅");
        }
        for g in gens {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl Serialize for Subcone {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Subcone {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Subcone::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("bad subcone label {s}")))
    }
}

pub fn subcone_classify(pi: &G2Pattern) -> SubconeLabel {
    let G2Pattern { a, b, c, d, e, f } = *pi;
    if c != b + d {
        return SubconeLabel::OutsideIntersection;
    }
    let coeffs = [(1, f), (2, a - b), (4, b - d), (5, d - e), (6, e)];
    let gens: Vec<u8> = coeffs
        .iter()
        .filter(|(_, k)| *k > 0)
        .map(|(g, _)| *g)
        .collect();
    SubconeLabel::Inside(Subcone::from_generators(&gens))
}

/// One column of the subcone audit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditCell {
    pub patterns: u64,
    /// `H(π) ≠ (1-t)^ι(ξ(π))` for some pattern.
    pub vp: bool,
    pub vp_witnesses: u64,
    /// `Ĥ(π) ≠ H(π)` for some pattern.
    pub corr: bool,
    pub corr_witnesses: u64,
    /// `Ĥ(π) ≠ (1-t)^ι(ξ(π))` for some pattern.
    pub hat_vs_partition: bool,
    pub hat_vs_partition_witnesses: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vp_example: Option<G2Pattern>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub corr_example: Option<G2Pattern>,
}

/// Audit of the intersection cone `C'`, one column per subcone of the top
/// row. The bottom-row generator `v1` is dropped from labels since it
/// multiplies `H`, `Ĥ` and `(1-t)^ι` alike.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubconeAudit {
    pub max_degree: i64,
    pub columns: BTreeMap<Subcone, AuditCell>,
    /// Patterns outside `C'` whose `Ĥ` differs from `(1-t)^ι`.
    pub outside_discrepancies: u64,
}

/// Columns marked in the reference table, row `vp`.
pub const REFERENCE_VP: [&str; 8] = ["4", "6", "24", "26", "45", "56", "245", "256"];
/// Columns marked in the reference table, row `corr`.
pub const REFERENCE_CORR: [&str; 8] = ["4", "24", "45", "46", "245", "246", "456", "2456"];

impl SubconeAudit {
    pub fn marked_vp(&self) -> Vec<Subcone> {
        self.columns
            .iter()
            .filter(|(_, c)| c.vp)
            .map(|(k, _)| *k)
            .collect()
    }

    pub fn marked_corr(&self) -> Vec<Subcone> {
        self.columns
            .iter()
            .filter(|(_, c)| c.corr)
            .map(|(k, _)| *k)
            .collect()
    }

    /// Whether the marks coincide exactly with the reference table.
    pub fn matches_reference(&self) -> bool {
        let parse = |v: &[&str]| -> Vec<Subcone> {
            let mut out: Vec<Subcone> = v.iter().map(|s| Subcone::parse(s).unwrap()).collect();
            out.sort();
            out
        };
        self.marked_vp() == parse(&REFERENCE_VP) && self.marked_corr() == parse(&REFERENCE_CORR)
    }
}

pub fn audit_subcones(max_degree: i64) -> Result<SubconeAudit> {
    let mut columns: BTreeMap<Subcone, AuditCell> = BTreeMap::new();
    let mut outside = 0;
    for pi in enumerate_infinite(max_degree) {
        let dec = decorate_infinite(&pi)?;
        let hat = hat_contribution(&pi, &dec)?;
        let std = standard_contribution(&dec);
        let expected = CoeffPoly::one_minus_t_pow(pattern_to_partition(&pi)?.index());
        match subcone_classify(&pi) {
            SubconeLabel::OutsideIntersection => {
                if hat != expected {
                    outside += 1;
                }
            }
            SubconeLabel::Inside(label) => {
                let cell = columns.entry(label.without(1)).or_default();
                cell.patterns += 1;
                if std != expected {
                    cell.vp = true;
                    cell.vp_witnesses += 1;
                    cell.vp_example.get_or_insert(pi);
                }
                if hat != std {
                    cell.corr = true;
                    cell.corr_witnesses += 1;
                    cell.corr_example.get_or_insert(pi);
                }
                if hat != expected {
                    cell.hat_vs_partition = true;
                    cell.hat_vs_partition_witnesses += 1;
                }
            }
        }
    }
    Ok(SubconeAudit {
        max_degree,
        columns,
        outside_discrepancies: outside,
    })
}
