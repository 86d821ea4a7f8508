//! Standard and corrected pattern contributions.
//!
//! Every value lives in `Z[t]` with `t = 1/q`; rational expressions in `q`
//! are stored in their expanded `t` form, e.g. `(q-1)/q^3 = t^2 - t^3`.

use super::pattern::{BoxingVector, Decoration, G2Pattern};
use crate::algebra::CoeffPoly;
use crate::error::{Error, Result};

/// `h(u)` for one decorated entry.
pub fn entry_factor(circled: bool, boxed: bool) -> CoeffPoly {
    match (circled, boxed) {
        (true, true) => CoeffPoly::zero(),
        (true, false) => CoeffPoly::one(),
        (false, true) => CoeffPoly::monomial(-1, 1),
        (false, false) => CoeffPoly::one_minus_t(),
    }
}

fn product_over(dec: &Decoration, entries: std::ops::Range<usize>) -> CoeffPoly {
    entries.fold(CoeffPoly::one(), |acc, i| {
        &acc * &entry_factor(dec.circled[i], dec.boxed[i])
    })
}

/// `H(π)`: product of `h` over all six entries.
pub fn standard_contribution(dec: &Decoration) -> CoeffPoly {
    product_over(dec, 0..6)
}

/// `T(π')`: product of `h` over the top row.
pub fn top_row_contribution(dec: &Decoration) -> CoeffPoly {
    product_over(dec, 0..5)
}

const BX_C: BoxingVector = BoxingVector::from_bits([0, 0, 1, 0, 0]);
const BX_AC: BoxingVector = BoxingVector::from_bits([1, 0, 1, 0, 0]);
const BX_A: BoxingVector = BoxingVector::from_bits([1, 0, 0, 0, 0]);
const BX_BD: BoxingVector = BoxingVector::from_bits([0, 1, 0, 1, 0]);
const BX_NONE: BoxingVector = BoxingVector::from_bits([0, 0, 0, 0, 0]);

fn poly(c: &[i64]) -> CoeffPoly {
    CoeffPoly::from_coeffs(c.to_vec())
}

/// Which branch of the corrected contribution applies to a pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HatCase {
    /// `Ĥ = H`: boxed-and-circled entry, not bad middle, or unlisted boxing.
    Standard,
    /// `bx[0,0,1,0,0]`
    BoxedC,
    /// `bx[1,0,1,0,0]`
    BoxedAC,
    /// `bx[1,0,0,0,0]`
    BoxedA,
    /// `bx[0,1,0,1,0]`
    BoxedBD,
    /// `bx[0,0,0,0,0]`, `e = 0`
    UnboxedEZero,
    /// `bx[0,0,0,0,0]`, `e > 0`
    UnboxedEPositive,
}

pub fn hat_case(pi: &G2Pattern, dec: &Decoration) -> HatCase {
    if dec.has_boxed_and_circled() || !pi.is_bad_middle() {
        return HatCase::Standard;
    }
    match dec.boxing_vector() {
        bx if bx == BX_C => HatCase::BoxedC,
        bx if bx == BX_AC => HatCase::BoxedAC,
        bx if bx == BX_A => HatCase::BoxedA,
        bx if bx == BX_BD => HatCase::BoxedBD,
        bx if bx == BX_NONE && pi.e == 0 => HatCase::UnboxedEZero,
        bx if bx == BX_NONE => HatCase::UnboxedEPositive,
        _ => HatCase::Standard,
    }
}

/// Corrected top-row value `T̂(π')`. Sub-cases are tried in listed order;
/// the first match wins.
fn corrected_top_row(pi: &G2Pattern, dec: &Decoration, case: HatCase) -> Result<CoeffPoly> {
    let G2Pattern { a, b, c, d, e, .. } = *pi;
    let top = || top_row_contribution(dec);
    let value = match case {
        HatCase::Standard => unreachable!("standard case has no corrected top row"),
        HatCase::BoxedC => Some(CoeffPoly::zero()),
        HatCase::BoxedAC => {
            if d == 0 {
                Some(CoeffPoly::zero())
            } else {
                Some(top())
            }
        }
        HatCase::BoxedA => {
            if e == 0 && d == 0 {
                // (-q + 1)/q^2
                Some(poly(&[0, -1, 1]))
            } else if e == 0 && d > 0 {
                // (-q^3 + 2q^2 - 2q + 1)/q^4
                Some(poly(&[0, -1, 2, -2, 1]))
            } else if e > 0 {
                Some(top())
            } else {
                None
            }
        }
        HatCase::BoxedBD => {
            if a == b {
                Some(top())
            } else if b < a && a < c && e == 0 {
                Some(CoeffPoly::zero())
            } else if b < a && a < c - e && e > 0 {
                // (-q^2 + 2q - 1)/q^5
                Some(poly(&[0, 0, 0, -1, 2, -1]))
            } else if a == c && e == 0 {
                // (q - 1)/q^3
                Some(poly(&[0, 0, 1, -1]))
            } else if a == c - e && e > 0 {
                // (q^3 - 2q^2 + 2q - 1)/q^5
                Some(poly(&[0, 0, 1, -2, 2, -1]))
            } else if a > c && e == 0 {
                Some(CoeffPoly::zero())
            } else if a > c - e && e > 0 {
                Some(poly(&[0, 0, 0, -1, 2, -1]))
            } else {
                None
            }
        }
        HatCase::UnboxedEZero => {
            if a == b && d > 0 {
                // (q^2 - 2q + 1)/q^2
                Some(poly(&[1, -2, 1]))
            } else if b < a && a < c && d > 0 {
                // (q^3 - 3q^2 + 3q - 1)/q^3
                Some(poly(&[1, -3, 3, -1]))
            } else if a == c && d > 0 {
                // (q^3 - 3q^2 + 4q - 2)/q^3
                Some(poly(&[1, -3, 4, -2]))
            } else if a > c && d > 0 {
                Some(poly(&[1, -3, 3, -1]))
            } else if a == b && d == 0 {
                // (q - 1)/q
                Some(poly(&[1, -1]))
            } else if a > b && d == 0 {
                Some(poly(&[1, -2, 1]))
            } else {
                None
            }
        }
        HatCase::UnboxedEPositive => {
            if a == b && d > e {
                // (q^4 - 3q^3 + 4q^2 - 3q + 1)/q^4
                Some(poly(&[1, -3, 4, -3, 1]))
            } else if a > b && d > e {
                // (q^5 - 4q^4 + 7q^3 - 7q^2 + 4q - 1)/q^5
                Some(poly(&[1, -4, 7, -7, 4, -1]))
            } else if a == b && d == e {
                Some(poly(&[1, -2, 1]))
            } else if a > b && d == e {
                Some(poly(&[1, -3, 4, -3, 1]))
            } else {
                None
            }
        }
    };
    value.ok_or_else(|| Error::NoCaseMatch {
        pattern: *pi,
        boxing: dec.boxing_vector().to_string(),
    })
}

/// `Ĥ(π)`: the standard contribution, corrected on bad-middle patterns with
/// one of the listed top-row boxings.
pub fn hat_contribution(pi: &G2Pattern, dec: &Decoration) -> Result<CoeffPoly> {
    match hat_case(pi, dec) {
        HatCase::Standard => Ok(standard_contribution(dec)),
        case => {
            let top = corrected_top_row(pi, dec, case)?;
            Ok(&top * &entry_factor(dec.circled[5], dec.boxed[5]))
        }
    }
}
