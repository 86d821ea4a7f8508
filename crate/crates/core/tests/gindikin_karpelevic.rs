use std::collections::{BTreeMap, BTreeSet};

use g2_tokuyama::g2::{decorate_infinite, enumerate_infinite, hat_contribution, G2Pattern};
use g2_tokuyama::gk::{
    audit_subcones, enumerate_partitions, gk_lhs_series, gk_pattern_series, partition_sum_series,
    partition_to_pattern, pattern_to_partition, subcone_classify, Subcone, SubconeLabel,
};
use g2_tokuyama::CoeffPoly;

#[test]
fn triple_agreement_through_degree_sixteen() {
    let lhs = gk_lhs_series(16);
    assert_eq!(lhs, partition_sum_series(16));
    assert_eq!(lhs, gk_pattern_series(16).unwrap());
    for n in 0..=6 {
        assert_eq!(gk_lhs_series(n), lhs.truncate(n));
    }
}

#[test]
fn degree_zero_series_are_one() {
    assert!(gk_lhs_series(0).coeff_at(0, 0).is_one());
    assert_eq!(gk_lhs_series(0).len(), 1);
    assert_eq!(partition_sum_series(0), gk_pattern_series(0).unwrap());
}

#[test]
fn bijection_by_degree() {
    let mut pattern_counts: BTreeMap<i64, usize> = BTreeMap::new();
    let mut images = BTreeSet::new();
    for pi in enumerate_infinite(12) {
        let xi = pattern_to_partition(&pi).unwrap();
        assert_eq!(xi.monomial(), pi.monomial(), "{pi}");
        assert_eq!(partition_to_pattern(&xi), pi);
        assert!(images.insert(xi), "{pi} collides");
        *pattern_counts.entry(pi.degree()).or_default() += 1;
    }
    let mut partition_counts: BTreeMap<i64, usize> = BTreeMap::new();
    for xi in enumerate_partitions(12) {
        *partition_counts.entry(xi.degree()).or_default() += 1;
    }
    assert_eq!(pattern_counts, partition_counts);
}

#[test]
fn odd_multiple_of_v4_monomial() {
    // Patterns (2b+1)v4, v4 + b·v6 and b(v2+v5) + v4 share a monomial, and
    // the three contributions add up to 3 - 7t + 6t^2 - 2t^3.
    for b in 1..=3 {
        let group = [
            G2Pattern::new(2 * b + 1, 2 * b + 1, 2 * b + 1, 0, 0, 0),
            G2Pattern::new(b + 1, b + 1, 2 * b + 1, b, b, 0),
            G2Pattern::new(2 * b + 1, b + 1, 2 * b + 1, b, 0, 0),
        ];
        let mono = group[0].monomial();
        assert!(group.iter().all(|p| p.monomial() == mono));
        let hats: Vec<CoeffPoly> = group
            .iter()
            .map(|p| hat_contribution(p, &decorate_infinite(p).unwrap()).unwrap())
            .collect();
        assert_eq!(hats[0], CoeffPoly::one_minus_t_pow(2));
        assert_eq!(hats[1], CoeffPoly::one_minus_t_pow(2));
        assert_eq!(hats[2], CoeffPoly::from_coeffs(vec![1, -3, 4, -2]));
        let total = hats.iter().fold(CoeffPoly::zero(), |acc, h| &acc + h);
        assert_eq!(total, CoeffPoly::from_coeffs(vec![3, -7, 6, -2]));
        let expected: Vec<u32> = group
            .iter()
            .map(|p| pattern_to_partition(p).unwrap().index())
            .collect();
        assert_eq!(expected, vec![1, 3, 3]);
    }
}

#[test]
fn outside_intersection_matches_partition_weight() {
    for pi in enumerate_infinite(14) {
        if subcone_classify(&pi) == SubconeLabel::OutsideIntersection {
            let hat = hat_contribution(&pi, &decorate_infinite(&pi).unwrap()).unwrap();
            let xi = pattern_to_partition(&pi).unwrap();
            assert_eq!(hat, CoeffPoly::one_minus_t_pow(xi.index()), "{pi}");
        }
    }
}

#[test]
fn bottom_row_does_not_change_marks() {
    // Adding v1 multiplies H, Ĥ and the partition weight by the same factor.
    for pi in enumerate_infinite(12).filter(|p| p.f == 0) {
        let lifted = G2Pattern { f: 1, ..pi };
        let hat = |p: &G2Pattern| hat_contribution(p, &decorate_infinite(p).unwrap()).unwrap();
        let weight =
            |p: &G2Pattern| CoeffPoly::one_minus_t_pow(pattern_to_partition(p).unwrap().index());
        assert_eq!(hat(&lifted), &hat(&pi) * &CoeffPoly::one_minus_t());
        assert_eq!(weight(&lifted), &weight(&pi) * &CoeffPoly::one_minus_t());
    }
}

#[test]
fn audit_reference_columns() {
    let audit = audit_subcones(16).unwrap();
    assert!(audit.matches_reference());
    assert_eq!(audit.outside_discrepancies, 0);
    let cell = |s: &str| &audit.columns[&Subcone::parse(s).unwrap()];
    assert!(cell("4").vp && cell("4").corr);
    assert!(!cell("46").vp && cell("46").corr);
    assert!(!cell("246").vp && cell("246").corr);
    // Ĥ still differs from the partition weight on 46: the compensation
    // happens across patterns sharing a monomial, not pattern by pattern.
    assert!(cell("46").hat_vs_partition);
    assert!(!cell("25").vp && !cell("25").corr);
}

#[test]
fn every_reference_column_is_populated_at_sixteen() {
    let audit = audit_subcones(16).unwrap();
    for s in [
        "4", "6", "24", "26", "45", "46", "56", "245", "246", "256", "456", "2456",
    ] {
        let c = &audit.columns[&Subcone::parse(s).unwrap()];
        assert!(c.patterns > 0, "{s}");
        if c.vp {
            assert!(c.vp_witnesses > 0 && c.vp_example.is_some());
        }
        if c.corr {
            assert!(c.corr_witnesses > 0 && c.corr_example.is_some());
        }
    }
}
