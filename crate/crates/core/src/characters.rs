//! Shifted irreducible characters, the Weyl denominator, its `t`-deformation
//! and the Tokuyama numerator `χ_θ · D`.

use crate::algebra::{CoeffPoly, ExponentVector, LaurentPoly};
use crate::error::{Error, Result};
use crate::roots::{RootDatum, Weight};

/// Character of the irreducible representation with lowest weight `-θ`,
/// translated by `θ` so that the lowest-weight monomial is `x^0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedCharacter {
    pub weight: Weight,
    pub poly: LaurentPoly,
}

/// `∏_{α>0} (1 - c·x^α)` for a fixed coefficient `c`.
fn root_product(datum: &RootDatum, c: &CoeffPoly) -> LaurentPoly {
    datum
        .positive_roots
        .iter()
        .fold(LaurentPoly::one(), |acc, a| {
            let factor = LaurentPoly::one() - LaurentPoly::term(a.monomial(), c.clone());
            &acc * &factor
        })
}

/// `Δ(x) = ∏_{α>0} (1 - x^α)`.
pub fn weyl_denominator(datum: &RootDatum) -> LaurentPoly {
    root_product(datum, &CoeffPoly::one())
}

/// `D(x) = ∏_{α>0} (1 - t·x^α)`.
pub fn deformed_denominator(datum: &RootDatum) -> LaurentPoly {
    root_product(datum, &CoeffPoly::t())
}

/// `Σ_w sign(w) x^{(θ+ρ) - w(θ+ρ)}`, the alternating numerator of the
/// character formula in the shifted, codominant convention.
pub fn alternating_numerator(datum: &RootDatum, theta: Weight) -> LaurentPoly {
    let lambda = theta.plus_rho();
    let lam = [lambda.l1(), lambda.l2()];
    let mut out = LaurentPoly::zero();
    for w in datum.weyl_group() {
        let image = w.apply_weight(lam);
        let diff = [lam[0] - image[0], lam[1] - image[1]];
        let exp = datum
            .weight_to_root(diff)
            .expect("λ - wλ lies in the root lattice");
        out.add_term(exp.monomial(), &CoeffPoly::constant(w.sign));
    }
    out
}

/// Weyl character formula as an exact quotient `numerator / Δ`.
pub fn shifted_character(datum: &RootDatum, theta: Weight) -> Result<ShiftedCharacter> {
    let numerator = alternating_numerator(datum, theta);
    let poly = numerator.div_exact(&weyl_denominator(datum))?;
    // The lowest weight lands on x^0 by construction; anything else is a
    // convention error upstream.
    if poly.min_exponent() != Some(ExponentVector::ZERO) {
        return Err(Error::NotDivisible);
    }
    Ok(ShiftedCharacter {
        weight: theta,
        poly,
    })
}

/// `N_θ = χ_θ · D`.
pub fn tokuyama_numerator(datum: &RootDatum, theta: Weight) -> Result<LaurentPoly> {
    let chi = shifted_character(datum, theta)?;
    chi.poly.checked_mul(&deformed_denominator(datum))
}
