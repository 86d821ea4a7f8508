//! Cross-checks of the character side and the crystal enumeration against
//! independent computations.

mod common;

use std::collections::BTreeSet;

use g2_tokuyama::characters::{shifted_character, tokuyama_numerator};
use g2_tokuyama::g2::{decorate, enumerate_crystal, hat_contribution, standard_contribution};
use g2_tokuyama::{ExponentVector, RootDatum, Weight};

use common::freudenthal;

fn weights(max: u32) -> impl Iterator<Item = Weight> {
    (0..=max).flat_map(move |l1| (0..=max).map(move |l2| Weight::new(l1, l2)))
}

#[test]
fn freudenthal_reproduces_shifted_characters() {
    let g2 = RootDatum::g2();
    for theta in weights(3) {
        let chi = shifted_character(&g2, theta).unwrap();
        let oracle = freudenthal::shifted_character(theta.l1(), theta.l2());
        let ours: Vec<((i64, i64), i64)> = chi
            .poly
            .terms()
            .map(|(e, c)| {
                assert_eq!(
                    c.degree(),
                    Some(0),
                    "character coefficient must be constant"
                );
                ((e.m, e.n), c.coeff(0))
            })
            .collect();
        let theirs: Vec<((i64, i64), i64)> = oracle.into_iter().collect();
        assert_eq!(ours, theirs, "θ = {theta}");
    }
}

#[test]
fn freudenthal_dimensions() {
    let g2 = RootDatum::g2();
    for theta in weights(3) {
        let total: i64 = freudenthal::multiplicities(theta.l1(), theta.l2())
            .values()
            .sum();
        assert_eq!(total as u64, g2.weyl_dimension(theta));
    }
}

#[test]
fn shifted_character_support_invariants() {
    let g2 = RootDatum::g2();
    for theta in weights(6) {
        let chi = shifted_character(&g2, theta).unwrap().poly;
        assert!(chi.coeff(ExponentVector::ZERO).is_one());
        let mut dim = 0i64;
        for (e, c) in chi.terms() {
            assert!(e.m >= 0 && e.n >= 0);
            assert_eq!(c.degree(), Some(0));
            assert!(c.coeff(0) > 0);
            dim += c.coeff(0);
        }
        assert_eq!(dim as u64, g2.weyl_dimension(theta), "θ = {theta}");
    }
}

#[test]
fn pattern_counts_match_weyl_dimension() {
    let g2 = RootDatum::g2();
    for lambda in weights(6) {
        assert_eq!(
            enumerate_crystal(lambda).count() as u64,
            g2.weyl_dimension(lambda),
            "λ = {lambda}"
        );
    }
    assert_eq!(enumerate_crystal(Weight::new(7, 7)).count(), 262_144);
}

#[test]
fn numerator_support_lies_in_rho_shifted_character() {
    let g2 = RootDatum::g2();
    for theta in weights(3) {
        let n = tokuyama_numerator(&g2, theta).unwrap();
        let big: BTreeSet<ExponentVector> = shifted_character(&g2, theta.plus_rho())
            .unwrap()
            .poly
            .support()
            .collect();
        assert!(n.support().all(|e| big.contains(&e)), "θ = {theta}");
    }
}

#[test]
fn numerator_at_t_one_has_twelve_unit_terms() {
    let g2 = RootDatum::g2();
    for theta in weights(4) {
        let at_one = tokuyama_numerator(&g2, theta)
            .unwrap()
            .specialize_int(1)
            .unwrap();
        assert_eq!(at_one.len(), 12, "θ = {theta}");
        let signs: Vec<i64> = at_one.terms().map(|(_, c)| c.coeff(0)).collect();
        assert!(signs.iter().all(|&s| s == 1 || s == -1));
        assert_eq!(signs.iter().sum::<i64>(), 0);
    }
}

#[test]
fn decorations_are_consistent_over_crystals() {
    for lambda in weights(4) {
        for pi in enumerate_crystal(lambda) {
            let dec = decorate(&pi, lambda).expect("enumerated patterns are in range");
            let bounds = pi.upper_bounds(lambda);
            for (i, (&v, &b)) in pi.entries().iter().zip(&bounds).enumerate() {
                assert_eq!(dec.boxed[i], v == b);
            }
            let hat = hat_contribution(&pi, &dec).unwrap();
            if !pi.is_bad_middle() {
                assert_eq!(hat, standard_contribution(&dec));
            }
            let constant = hat.coeff(0);
            assert!(constant == 0 || constant == 1, "{pi}: {hat}");
        }
    }
}

#[test]
fn no_case_gaps_up_to_six() {
    // The case tables are applied to every pattern of B(θ + ρ), ℓᵢ ≤ 5.
    for lambda in weights(6).filter(|w| w.l1 >= 1 && w.l2 >= 1) {
        for pi in enumerate_crystal(lambda) {
            let dec = decorate(&pi, lambda).unwrap();
            hat_contribution(&pi, &dec).unwrap_or_else(|e| panic!("{e}"));
        }
    }
}
