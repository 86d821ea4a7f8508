use proptest::prelude::*;

use g2_tokuyama::g2::{conjecture_rhs_sequential, conjecture_rhs_with_census, G2Pattern};
use g2_tokuyama::gk::{partition_to_pattern, pattern_to_partition, VectorPartition};
use g2_tokuyama::{CoeffPoly, ExponentVector, LaurentPoly, Weight};

fn coeff_poly() -> impl Strategy<Value = CoeffPoly> {
    prop::collection::vec(-3i64..=3, 0..4).prop_map(CoeffPoly::from_coeffs)
}

fn laurent(lo: i64, hi: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((lo..=hi), (lo..=hi), coeff_poly()), 0..5).prop_map(|terms| {
        LaurentPoly::from_terms(
            terms
                .into_iter()
                .map(|(m, n, c)| (ExponentVector::new(m, n), c)),
        )
    })
}

fn canonical(p: &LaurentPoly) -> bool {
    p.terms().all(|(_, c)| !c.is_zero())
}

fn circling_pattern() -> impl Strategy<Value = G2Pattern> {
    // Slack variables above each lower bound.
    (0i64..4, 0i64..4, 0i64..4, 0i64..4, 0i64..4, 0i64..4).prop_map(|(e, sd, sc, sb, sa, f)| {
        let d = e + sd;
        let c = 2 * d + sc;
        let b = (c + 1) / 2 + sb;
        let a = b + sa;
        G2Pattern::new(a, b, c, d, e, f)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(p in laurent(-2, 2), q in laurent(-2, 2), r in laurent(-2, 2)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p + &(-&p)).is_zero());
        prop_assert_eq!(&p * &LaurentPoly::one(), p.clone());
        let s = &(&p * &q) - &r;
        prop_assert!(canonical(&s));
        prop_assert!(canonical(&(&p * &q)));
    }

    #[test]
    fn exact_division_round_trip(a in laurent(-2, 2), b in laurent(-2, 2)) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn scaling_distributes(p in laurent(-2, 2), c in coeff_poly(), d in coeff_poly()) {
        prop_assert_eq!(p.scale(&(&c + &d)), &p.scale(&c) + &p.scale(&d));
        prop_assert!(canonical(&p.scale(&c)));
    }

    #[test]
    fn truncation_is_graded(p in laurent(0, 4), q in laurent(0, 4), n in 0i64..8) {
        let t = p.truncate(n);
        prop_assert_eq!(t.truncate(n), t.clone());
        prop_assert!(t.terms().all(|(e, _)| e.total_degree() <= n));
        let full = (&p * &q).truncate(n);
        prop_assert_eq!(full.clone(), (&p.truncate(n) * &q.truncate(n)).truncate(n));
        prop_assert_eq!(full, p.mul_truncated(&q, n));
    }

    #[test]
    fn pattern_partition_bijection(pi in circling_pattern()) {
        let xi = pattern_to_partition(&pi).unwrap();
        prop_assert_eq!(partition_to_pattern(&xi), pi);
        prop_assert_eq!(xi.monomial(), pi.monomial());
    }

    #[test]
    fn partition_pattern_bijection(m in prop::array::uniform6(0i64..4)) {
        let xi = VectorPartition::new(m);
        let pi = partition_to_pattern(&xi);
        prop_assert!(pi.satisfies_circling());
        prop_assert_eq!(pattern_to_partition(&pi).unwrap(), xi);
    }
}

#[test]
fn parallel_sum_is_deterministic() {
    for (l1, l2) in [(0, 3), (3, 0), (2, 2)] {
        let theta = Weight::new(l1, l2);
        let seq = conjecture_rhs_sequential(theta).unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(3)
            .build()
            .unwrap();
        let par = pool.install(|| conjecture_rhs_with_census(theta).unwrap());
        assert_eq!(seq, par);
    }
}
