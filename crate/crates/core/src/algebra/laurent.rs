use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::coeff::CoeffPoly;
use crate::error::{Error, Result};

/// Exponent of a Laurent monomial `x^m y^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExponentVector {
    pub m: i64,
    pub n: i64,
}

impl ExponentVector {
    pub const ZERO: Self = Self { m: 0, n: 0 };

    pub const fn new(m: i64, n: i64) -> Self {
        Self { m, n }
    }

    pub fn total_degree(self) -> i64 {
        self.m + self.n
    }

    /// Graded-lexicographic comparison key.
    fn grlex(self) -> (i64, i64) {
        (self.m + self.n, self.m)
    }
}

impl Add for ExponentVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.m + rhs.m, self.n + rhs.n)
    }
}

impl Sub for ExponentVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.m - rhs.m, self.n - rhs.n)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}y^{}", self.m, self.n)
    }
}

/// One serialized term: `{m, n, coeffs}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub m: i64,
    pub n: i64,
    pub coeffs: Vec<i64>,
}

/// Sparse Laurent polynomial in `x, y` over `Z[t]`.
///
/// Terms are kept in a `BTreeMap` ordered by `(m, n)`; zero coefficients are
/// never stored, so derived equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<TermRecord>", try_from = "Vec<TermRecord>")]
pub struct LaurentPoly {
    terms: BTreeMap<ExponentVector, CoeffPoly>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(ExponentVector::ZERO, CoeffPoly::one())
    }

    pub fn term(exp: ExponentVector, coeff: CoeffPoly) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, &coeff);
        p
    }

    /// `c * x^m y^n` with an integer constant `c`.
    pub fn monomial(m: i64, n: i64, c: i64) -> Self {
        Self::term(ExponentVector::new(m, n), CoeffPoly::constant(c))
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, CoeffPoly)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical `(m, n)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: ExponentVector) -> CoeffPoly {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn coeff_at(&self, m: i64, n: i64) -> CoeffPoly {
        self.coeff(ExponentVector::new(m, n))
    }

    pub fn support(&self) -> impl Iterator<Item = ExponentVector> + '_ {
        self.terms.keys().copied()
    }

    /// Add `coeff * x^exp` in place, keeping canonical form.
    pub fn add_term(&mut self, exp: ExponentVector, coeff: &CoeffPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff.clone());
            }
        }
    }

    pub fn add_assign_poly(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(*e, c);
        }
    }

    pub fn scale(&self, c: &CoeffPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (*e, v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Self { terms }
    }

    /// Multiply every exponent by `x^shift`.
    pub fn shift(&self, shift: ExponentVector) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (*e + shift, c.clone()))
            .collect();
        Self { terms }
    }

    /// Componentwise minimum exponent, or `None` for zero.
    pub fn min_exponent(&self) -> Option<ExponentVector> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |acc, e| {
            ExponentVector::new(acc.m.min(e.m), acc.n.min(e.n))
        }))
    }

    fn leading(&self) -> Option<(ExponentVector, &CoeffPoly)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| e.grlex())
            .map(|(e, c)| (*e, c))
    }

    /// Keep the terms with `m + n <= max_total_degree`.
    pub fn truncate(&self, max_total_degree: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.total_degree() <= max_total_degree)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        Self { terms }
    }

    /// Product truncated at `max_total_degree`, skipping the discarded terms.
    pub fn mul_truncated(&self, other: &Self, max_total_degree: i64) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = *e1 + *e2;
                if e.total_degree() <= max_total_degree {
                    out.add_term(e, &(c1 * c2));
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let prod = c1.checked_mul(c2)?;
                let e = *e1 + *e2;
                let sum = match out.terms.get(&e) {
                    Some(c) => c.checked_add(&prod)?,
                    None => prod,
                };
                if sum.is_zero() {
                    out.terms.remove(&e);
                } else {
                    out.terms.insert(e, sum);
                }
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / denominator`.
    ///
    /// Both operands are shifted to componentwise-minimal exponent zero and
    /// divided by long division on graded-lex leading terms. A quotient term
    /// with a negative exponent, or a leading coefficient that does not divide
    /// in `Z[t]`, means there is no exact quotient.
    pub fn div_exact(&self, denominator: &Self) -> Result<Self> {
        let dmin = denominator.min_exponent().ok_or(Error::NotDivisible)?;
        let Some(nmin) = self.min_exponent() else {
            return Ok(Self::zero());
        };
        let den = denominator.shift(ExponentVector::ZERO - dmin);
        let mut rem = self.shift(ExponentVector::ZERO - nmin);
        let (dlead_exp, dlead) = den.leading().expect("nonzero denominator");
        let dlead = dlead.clone();

        let mut quot = Self::zero();
        while let Some((rexp, rcoeff)) = rem.leading() {
            let qexp = rexp - dlead_exp;
            if qexp.m < 0 || qexp.n < 0 {
                return Err(Error::NotDivisible);
            }
            let qcoeff = rcoeff.div_exact(&dlead)?;
            for (e, c) in &den.terms {
                rem.add_term(*e + qexp, &(-(c.checked_mul(&qcoeff)?)));
            }
            quot.add_term(qexp, &qcoeff);
        }
        Ok(quot.shift(nmin - dmin))
    }

    /// Evaluate every coefficient at `t = t_value`, dropping zeros.
    pub fn specialize(&self, t_value: &BigRational) -> BTreeMap<ExponentVector, BigRational> {
        self.terms
            .iter()
            .map(|(e, c)| (*e, c.eval(t_value)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// Specialize at an integer `t`, keeping the result in `LaurentPoly` form.
    pub fn specialize_int(&self, t_value: i64) -> Result<Self> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, &CoeffPoly::constant(c.eval_int(t_value)?));
        }
        Ok(out)
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(e, c)| TermRecord {
                m: e.m,
                n: e.n,
                coeffs: c.coeffs().to_vec(),
            })
            .collect()
    }
}

impl From<LaurentPoly> for Vec<TermRecord> {
    fn from(p: LaurentPoly) -> Self {
        p.to_records()
    }
}

impl TryFrom<Vec<TermRecord>> for LaurentPoly {
    type Error = String;

    fn try_from(records: Vec<TermRecord>) -> std::result::Result<Self, String> {
        let mut p = LaurentPoly::zero();
        for r in records {
            let e = ExponentVector::new(r.m, r.n);
            if p.terms.contains_key(&e) {
                return Err(format!("duplicate term {e}"));
            }
            p.add_term(e, &CoeffPoly::from_coeffs(r.coeffs));
        }
        Ok(p)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("({c})·{e}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_poly(rhs);
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_assign_poly(&rhs);
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        LaurentPoly { terms }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs)
            .expect("coefficient overflow in LaurentPoly multiplication")
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}
