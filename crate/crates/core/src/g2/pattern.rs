use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::ExponentVector;
use crate::error::{Error, Result};
use crate::roots::Weight;

pub const ENTRY_NAMES: [char; 6] = ['a', 'b', 'c', 'd', 'e', 'f'];

/// A `G2` Littelmann pattern `[a,b,c,d,e][f]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 6]", into = "[i64; 6]")]
pub struct G2Pattern {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
}

impl G2Pattern {
    pub const ZERO: Self = Self::new(0, 0, 0, 0, 0, 0);

    pub const fn new(a: i64, b: i64, c: i64, d: i64, e: i64, f: i64) -> Self {
        Self { a, b, c, d, e, f }
    }

    pub fn entries(&self) -> [i64; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    /// `2a ≥ 2b ≥ c ≥ 2d ≥ 2e ≥ 0`, `f ≥ 0`.
    pub fn satisfies_circling(&self) -> bool {
        let Self { a, b, c, d, e, f } = *self;
        a >= b && 2 * b >= c && c >= 2 * d && d >= e && e >= 0 && f >= 0
    }

    pub fn check_circling(&self) -> Result<()> {
        if self.satisfies_circling() {
            Ok(())
        } else {
            Err(Error::CirclingViolation(self.entries()))
        }
    }

    /// Which entries sit on their lower bound.
    pub fn circled(&self) -> [bool; 6] {
        let Self { a, b, c, d, e, f } = *self;
        [a == b, 2 * b == c, c == 2 * d, d == e, e == 0, f == 0]
    }

    /// Upper bounds for each entry given the already-fixed entries, for the
    /// crystal of highest weight `lambda`.
    pub fn upper_bounds(&self, lambda: Weight) -> [i64; 6] {
        let (l1, l2) = (lambda.l1(), lambda.l2());
        let Self { a, b, c, d, e, .. } = *self;
        [
            l1 + 3 * b - 2 * c + 3 * d - 2 * e,
            l2 + c - 2 * d + e,
            l1 + 3 * d - 2 * e,
            l2 + e,
            l1,
            l2 + a - 2 * b + c - 2 * d + e,
        ]
    }

    /// Exponent of `x^π = x^{a+c+e} y^{b+d+f}`.
    pub fn monomial(&self) -> ExponentVector {
        ExponentVector::new(self.a + self.c + self.e, self.b + self.d + self.f)
    }

    pub fn degree(&self) -> i64 {
        self.monomial().total_degree()
    }

    /// `c = b + d` and `b = d + 1`; depends only on the top row.
    pub fn is_bad_middle(&self) -> bool {
        self.c == self.b + self.d && self.b == self.d + 1
    }
}

impl From<[i64; 6]> for G2Pattern {
    fn from(v: [i64; 6]) -> Self {
        Self::new(v[0], v[1], v[2], v[3], v[4], v[5])
    }
}

impl From<G2Pattern> for [i64; 6] {
    fn from(p: G2Pattern) -> Self {
        p.entries()
    }
}

impl fmt::Display for G2Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{},{},{}][{}]",
            self.a, self.b, self.c, self.d, self.e, self.f
        )
    }
}

/// Top-row boxing, written `bx[·,·,·,·,·]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoxingVector(pub [bool; 5]);

impl BoxingVector {
    pub const fn from_bits(bits: [u8; 5]) -> Self {
        let mut out = [false; 5];
        let mut i = 0;
        while i < 5 {
            out[i] = bits[i] != 0;
            i += 1;
        }
        Self(out)
    }
}

impl fmt::Display for BoxingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: Vec<&str> = self.0.iter().map(|&b| if b { "1" } else { "0" }).collect();
        write!(f, "bx[{}]", bits.join(","))
    }
}

/// Circling and boxing of a pattern. `lambda` is `None` for `B(∞)`, where
/// nothing is ever boxed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decoration {
    pub circled: [bool; 6],
    pub boxed: [bool; 6],
    pub lambda: Option<Weight>,
}

impl Decoration {
    pub fn boxing_vector(&self) -> BoxingVector {
        let mut top = [false; 5];
        top.copy_from_slice(&self.boxed[..5]);
        BoxingVector(top)
    }

    pub fn has_boxed_and_circled(&self) -> bool {
        self.circled.iter().zip(&self.boxed).any(|(&c, &b)| c && b)
    }
}

/// Decorate `pi` relative to the crystal `B(lambda)`.
pub fn decorate(pi: &G2Pattern, lambda: Weight) -> Result<Decoration> {
    pi.check_circling()?;
    let bounds = pi.upper_bounds(lambda);
    let entries = pi.entries();
    let mut boxed = [false; 6];
    // Entries are checked in the order e, d, c, b, a, f, matching the way
    // each bound depends on previously fixed entries.
    for i in [4, 3, 2, 1, 0, 5] {
        if entries[i] > bounds[i] {
            return Err(Error::BoundViolation {
                entry: ENTRY_NAMES[i],
                value: entries[i],
                bound: bounds[i],
            });
        }
        boxed[i] = entries[i] == bounds[i];
    }
    Ok(Decoration {
        circled: pi.circled(),
        boxed,
        lambda: Some(lambda),
    })
}

/// Decoration in `B(∞)`: circling only.
pub fn decorate_infinite(pi: &G2Pattern) -> Result<Decoration> {
    pi.check_circling()?;
    Ok(Decoration {
        circled: pi.circled(),
        boxed: [false; 6],
        lambda: None,
    })
}

/// Prefixes `(e, d, c)` of the crystal enumeration, in enumeration order.
pub fn crystal_prefixes(lambda: Weight) -> Vec<(i64, i64, i64)> {
    let (l1, l2) = (lambda.l1(), lambda.l2());
    let mut out = Vec::new();
    for e in 0..=l1 {
        for d in e..=l2 + e {
            for c in 2 * d..=l1 + 3 * d - 2 * e {
                out.push((e, d, c));
            }
        }
    }
    out
}

/// All patterns of `B(lambda)` sharing the prefix `(e, d, c)`, ordered by
/// `b`, then `a`, then `f`.
pub fn patterns_with_prefix(
    lambda: Weight,
    (e, d, c): (i64, i64, i64),
) -> impl Iterator<Item = G2Pattern> {
    let (l1, l2) = (lambda.l1(), lambda.l2());
    let b_lo = (c + 1) / 2;
    let b_hi = l2 + c - 2 * d + e;
    (b_lo..=b_hi).flat_map(move |b| {
        let a_hi = l1 + 3 * b - 2 * c + 3 * d - 2 * e;
        (b..=a_hi).flat_map(move |a| {
            let f_hi = l2 + a - 2 * b + c - 2 * d + e;
            (0..=f_hi).map(move |f| G2Pattern::new(a, b, c, d, e, f))
        })
    })
}

/// Every pattern of `B(lambda)`, in nested-loop order `(e, d, c, b, a, f)`.
pub fn enumerate_crystal(lambda: Weight) -> impl Iterator<Item = G2Pattern> {
    crystal_prefixes(lambda)
        .into_iter()
        .flat_map(move |prefix| patterns_with_prefix(lambda, prefix))
}

/// Every circling-valid pattern (a vertex of `B(∞)`) with `degree ≤ max_degree`,
/// in the same nested-loop order.
pub fn enumerate_infinite(max_degree: i64) -> impl Iterator<Item = G2Pattern> {
    let n = max_degree;
    // Degree is a + b + c + d + e + f; each loop is capped by what is left.
    (0..=n).flat_map(move |e| {
        (e..=n - e).flat_map(move |d| {
            (2 * d..=n - e - d).flat_map(move |c| {
                ((c + 1) / 2..=n - e - d - c).flat_map(move |b| {
                    (b..=n - e - d - c - b).flat_map(move |a| {
                        let used = a + b + c + d + e;
                        (0..=n - used).map(move |f| G2Pattern::new(a, b, c, d, e, f))
                    })
                })
            })
        })
    })
}
