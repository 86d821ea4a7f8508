//! Rank-two root data for `A2` and `G2`.
//!
//! Root coordinates `(u, v)` are coefficients of the two simple roots; the
//! first simple root is tracked by the variable `x` and the second by `y`.
//! For `G2` the first simple root is the short one. Weights are written in
//! fundamental-weight coordinates `(l1, l2)`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::ExponentVector;

type Mat2 = [[i64; 2]; 2];

const IDENTITY: Mat2 = [[1, 0], [0, 1]];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn mat_vec(a: &Mat2, v: [i64; 2]) -> [i64; 2] {
    [
        a[0][0] * v[0] + a[0][1] * v[1],
        a[1][0] * v[0] + a[1][1] * v[1],
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A2,
    G2,
}

/// A vector in root coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootVector {
    pub u: i64,
    pub v: i64,
}

impl RootVector {
    pub const fn new(u: i64, v: i64) -> Self {
        Self { u, v }
    }

    pub fn height(self) -> i64 {
        self.u + self.v
    }

    pub fn monomial(self) -> ExponentVector {
        ExponentVector::new(self.u, self.v)
    }

    fn as_array(self) -> [i64; 2] {
        [self.u, self.v]
    }

    fn from_array(a: [i64; 2]) -> Self {
        Self::new(a[0], a[1])
    }
}

impl std::ops::Neg for RootVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.u, -self.v)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// A dominant weight `l1·ϖ1 + l2·ϖ2`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct Weight {
    pub l1: u32,
    pub l2: u32,
}

impl Weight {
    pub const ZERO: Self = Self { l1: 0, l2: 0 };
    pub const RHO: Self = Self { l1: 1, l2: 1 };

    pub const fn new(l1: u32, l2: u32) -> Self {
        Self { l1, l2 }
    }

    pub fn plus_rho(self) -> Self {
        Self::new(self.l1 + 1, self.l2 + 1)
    }

    pub fn l1(self) -> i64 {
        i64::from(self.l1)
    }

    pub fn l2(self) -> i64 {
        i64::from(self.l2)
    }

    fn as_array(self) -> [i64; 2] {
        [self.l1(), self.l2()]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.l1, self.l2)
    }
}

/// An element of the Weyl group with its action in both coordinate systems.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// Action on root coordinates.
    pub matrix: Mat2,
    /// Action on fundamental-weight coordinates.
    pub weight_matrix: Mat2,
    /// Length of a reduced word.
    pub length: u32,
    pub sign: i64,
}

impl WeylElement {
    pub fn apply_root(&self, r: RootVector) -> RootVector {
        RootVector::from_array(mat_vec(&self.matrix, r.as_array()))
    }

    /// Action on a weight given in fundamental-weight coordinates.
    pub fn apply_weight(&self, w: [i64; 2]) -> [i64; 2] {
        mat_vec(&self.weight_matrix, w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub cartan_type: CartanType,
    /// `cartan[i][j] = <α_j, α_i^∨>`.
    pub cartan: Mat2,
    /// Gram matrix of the invariant form in root coordinates.
    pub gram: Mat2,
    pub simple_roots: [RootVector; 2],
    /// Ordered by height, then by first coordinate.
    pub positive_roots: Vec<RootVector>,
    pub rho: RootVector,
}

impl RootDatum {
    /// `G2` with the short simple root first (variable `x`).
    pub fn g2() -> Self {
        Self::from_cartan(CartanType::G2, [[2, -3], [-1, 2]], [[2, -3], [-3, 6]])
    }

    pub fn a2() -> Self {
        Self::from_cartan(CartanType::A2, [[2, -1], [-1, 2]], [[2, -1], [-1, 2]])
    }

    fn from_cartan(cartan_type: CartanType, cartan: Mat2, gram: Mat2) -> Self {
        let simple_roots = [RootVector::new(1, 0), RootVector::new(0, 1)];
        let mut datum = Self {
            cartan_type,
            cartan,
            gram,
            simple_roots,
            positive_roots: Vec::new(),
            rho: RootVector::new(0, 0),
        };

        // Closure of the simple roots under simple reflections.
        let mut seen: BTreeSet<RootVector> = simple_roots.iter().copied().collect();
        let mut queue: VecDeque<RootVector> = simple_roots.iter().copied().collect();
        while let Some(r) = queue.pop_front() {
            for i in 0..2 {
                let s = datum.reflect_root(i, r);
                if seen.insert(s) {
                    queue.push_back(s);
                }
            }
        }
        let mut positive: Vec<RootVector> =
            seen.into_iter().filter(|r| r.u >= 0 && r.v >= 0).collect();
        positive.sort_by_key(|r| (r.height(), r.u));

        let (su, sv) = positive.iter().fold((0, 0), |(a, b), r| (a + r.u, b + r.v));
        assert!(
            su % 2 == 0 && sv % 2 == 0,
            "rho must be integral in root coordinates"
        );
        datum.rho = RootVector::new(su / 2, sv / 2);
        datum.positive_roots = positive;
        datum
    }

    pub fn rank(&self) -> usize {
        2
    }

    /// `<β, α_i^∨>` for `β` in root coordinates.
    pub fn coroot_pairing(&self, i: usize, beta: RootVector) -> i64 {
        self.cartan[i][0] * beta.u + self.cartan[i][1] * beta.v
    }

    pub fn reflect_root(&self, i: usize, beta: RootVector) -> RootVector {
        let k = self.coroot_pairing(i, beta);
        let alpha = self.simple_roots[i];
        RootVector::new(beta.u - k * alpha.u, beta.v - k * alpha.v)
    }

    fn simple_reflection_matrices(&self, i: usize) -> (Mat2, Mat2) {
        let mut root = IDENTITY;
        // s_i(β) = β - <β, α_i^∨> α_i acting on columns e_0, e_1.
        for (j, &alpha) in self.simple_roots.iter().enumerate() {
            let col = self.reflect_root(i, alpha);
            root[0][j] = col.u;
            root[1][j] = col.v;
        }
        // On weights: s_i(λ) = λ - λ_i α_i, with α_i = column i of the Cartan matrix.
        let mut weight = IDENTITY;
        for j in 0..2 {
            let lam_i = if i == j { 1 } else { 0 };
            weight[0][j] = IDENTITY[0][j] - lam_i * self.cartan[0][i];
            weight[1][j] = IDENTITY[1][j] - lam_i * self.cartan[1][i];
        }
        (root, weight)
    }

    /// All Weyl group elements, by breadth-first closure over simple
    /// reflections. Ordered by length, then by root matrix.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let gens = [
            self.simple_reflection_matrices(0),
            self.simple_reflection_matrices(1),
        ];
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let mut frontier = vec![(IDENTITY, IDENTITY)];
        seen.insert(IDENTITY);
        let mut length = 0u32;
        while !frontier.is_empty() {
            frontier.sort();
            let mut next = Vec::new();
            for (root, weight) in &frontier {
                out.push(WeylElement {
                    matrix: *root,
                    weight_matrix: *weight,
                    length,
                    sign: if length.is_multiple_of(2) { 1 } else { -1 },
                });
                for (gr, gw) in &gens {
                    let nr = mat_mul(gr, root);
                    if seen.insert(nr) {
                        next.push((nr, mat_mul(gw, weight)));
                    }
                }
            }
            frontier = next;
            length += 1;
        }
        out
    }

    /// Convert a vector in fundamental-weight coordinates to root coordinates,
    /// returning `None` if it is not in the root lattice.
    pub fn weight_to_root(&self, w: [i64; 2]) -> Option<RootVector> {
        let c = &self.cartan;
        let det = c[0][0] * c[1][1] - c[0][1] * c[1][0];
        let u = c[1][1] * w[0] - c[0][1] * w[1];
        let v = -c[1][0] * w[0] + c[0][0] * w[1];
        (u % det == 0 && v % det == 0).then(|| RootVector::new(u / det, v / det))
    }

    /// Fundamental-weight coordinates of a root-lattice vector.
    pub fn root_to_weight(&self, r: RootVector) -> [i64; 2] {
        [self.coroot_pairing(0, r), self.coroot_pairing(1, r)]
    }

    /// `(α, α)` under the invariant form.
    pub fn norm2(&self, r: RootVector) -> i64 {
        let g = &self.gram;
        r.u * (g[0][0] * r.u + g[0][1] * r.v) + r.v * (g[1][0] * r.u + g[1][1] * r.v)
    }

    /// `<λ, α^∨>` for a weight in fundamental coordinates and a positive root.
    fn weight_coroot_pairing_scaled(&self, lambda: [i64; 2], alpha: RootVector) -> i64 {
        // α^∨ = Σ u_i (α_i,α_i)/(α,α) α_i^∨; returns the value times (α,α).
        let s0 = self.norm2(self.simple_roots[0]);
        let s1 = self.norm2(self.simple_roots[1]);
        lambda[0] * alpha.u * s0 + lambda[1] * alpha.v * s1
    }

    /// Weyl dimension formula `∏ <λ+ρ, α^∨> / <ρ, α^∨>`.
    pub fn weyl_dimension(&self, lambda: Weight) -> u64 {
        let shifted = lambda.plus_rho().as_array();
        let rho = Weight::RHO.as_array();
        let (num, den) = self
            .positive_roots
            .iter()
            .fold((1u128, 1u128), |(n, d), &a| {
                let top = self.weight_coroot_pairing_scaled(shifted, a);
                let bottom = self.weight_coroot_pairing_scaled(rho, a);
                (n * top as u128, d * bottom as u128)
            });
        assert_eq!(num % den, 0, "Weyl dimension formula must give an integer");
        u64::try_from(num / den).expect("dimension fits in u64")
    }
}
