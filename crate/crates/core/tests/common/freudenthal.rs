//! Freudenthal's multiplicity recursion for `G2`, independent of the
//! character-formula division used by the library.

use std::collections::BTreeMap;

/// Invariant form in root coordinates, short simple root first.
const GRAM: [[i64; 2]; 2] = [[2, -3], [-3, 6]];
const POSITIVE_ROOTS: [(i64, i64); 6] = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)];
const RHO: (i64, i64) = (5, 3);

fn form(x: (i64, i64), y: (i64, i64)) -> i64 {
    x.0 * (GRAM[0][0] * y.0 + GRAM[0][1] * y.1) + x.1 * (GRAM[1][0] * y.0 + GRAM[1][1] * y.1)
}

fn add(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    (x.0 + y.0, x.1 + y.1)
}

/// Highest weight `l1·ϖ1 + l2·ϖ2` in root coordinates (`ϖ1 = (2,1)`, `ϖ2 = (3,2)`).
pub fn highest_weight(l1: i64, l2: i64) -> (i64, i64) {
    (2 * l1 + 3 * l2, l1 + 2 * l2)
}

/// Weight multiplicities of the irreducible `G2` module of highest weight
/// `(l1, l2)`, keyed by root coordinates.
pub fn multiplicities(l1: i64, l2: i64) -> BTreeMap<(i64, i64), i64> {
    let lambda = highest_weight(l1, l2);
    let lr = add(lambda, RHO);
    let top = form(lr, lr);
    let mut mult: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    mult.insert(lambda, 1);
    let (max_i, max_j) = (2 * lambda.0, 2 * lambda.1);
    for depth in 1..=max_i + max_j {
        for i in 0..=depth.min(max_i) {
            let j = depth - i;
            if j > max_j {
                continue;
            }
            let mu = (lambda.0 - i, lambda.1 - j);
            let mr = add(mu, RHO);
            let denom = top - form(mr, mr);
            let mut numer = 0;
            for &alpha in &POSITIVE_ROOTS {
                let mut k = 1;
                loop {
                    let nu = (mu.0 + k * alpha.0, mu.1 + k * alpha.1);
                    if nu.0 > lambda.0 || nu.1 > lambda.1 {
                        break;
                    }
                    if let Some(&m) = mult.get(&nu) {
                        numer += 2 * form(nu, alpha) * m;
                    }
                    k += 1;
                }
            }
            if numer == 0 {
                continue;
            }
            assert!(denom > 0, "Freudenthal denominator vanished at {mu:?}");
            assert_eq!(numer % denom, 0, "non-integral multiplicity at {mu:?}");
            mult.insert(mu, numer / denom);
        }
    }
    mult
}

/// Shifted character: multiplicity of `μ` placed at exponent `μ + λ`.
pub fn shifted_character(l1: i64, l2: i64) -> BTreeMap<(i64, i64), i64> {
    let lambda = highest_weight(l1, l2);
    multiplicities(l1, l2)
        .into_iter()
        .map(|(mu, m)| (add(mu, lambda), m))
        .collect()
}
