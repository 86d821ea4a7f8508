use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial in `t = 1/q` with exact integer coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`. The vector never ends in a zero,
/// so the zero polynomial is the empty vector and equality is structural.
///
/// Arithmetic is checked: the `checked_*` methods report [`Error::Overflow`],
/// and the operator impls panic on overflow instead of wrapping.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoeffPoly {
    coeffs: Vec<i64>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `t`
    pub fn t() -> Self {
        Self::from_coeffs(vec![0, 1])
    }

    /// `c * t^k`
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `1 - t`
    pub fn one_minus_t() -> Self {
        Self::from_coeffs(vec![1, -1])
    }

    /// `(1 - t)^k`
    pub fn one_minus_t_pow(k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * &Self::one_minus_t())
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree in `t`, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<i64> {
        self.coeffs.last().copied()
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                self.coeff(i)
                    .checked_add(other.coeff(i))
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let prod = a.checked_mul(b).ok_or(Error::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(prod).ok_or(Error::Overflow)?;
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Exact quotient in `Z[t]`, or [`Error::NotDivisible`] if `divisor` does
    /// not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let dlead = divisor.leading().ok_or(Error::NotDivisible)?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(Error::NotDivisible)
            };
        }
        let mut quot = vec![0i64; rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let top = rem[k + ddeg];
            if top == 0 {
                continue;
            }
            if top % dlead != 0 {
                return Err(Error::NotDivisible);
            }
            let q = top / dlead;
            quot[k] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let prod = q.checked_mul(d).ok_or(Error::Overflow)?;
                rem[k + j] = rem[k + j].checked_sub(prod).ok_or(Error::Overflow)?;
            }
        }
        if rem.iter().any(|&r| r != 0) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Evaluate at an exact rational value of `t` (Horner).
    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, &c| {
                acc * t + BigRational::from_integer(BigInt::from(c))
            })
    }

    pub fn eval_int(&self, t: i64) -> Result<i64> {
        self.coeffs.iter().rev().try_fold(0i64, |acc, &c| {
            acc.checked_mul(t)
                .and_then(|v| v.checked_add(c))
                .ok_or(Error::Overflow)
        })
    }
}

impl fmt::Debug for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl From<i64> for CoeffPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        self.checked_add(rhs)
            .expect("coefficient overflow in CoeffPoly addition")
    }
}

impl Add for CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: CoeffPoly) -> CoeffPoly {
        &self + &rhs
    }
}

impl AddAssign<&CoeffPoly> for CoeffPoly {
    fn add_assign(&mut self, rhs: &CoeffPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), 0);
        }
        for (a, &b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = a
                .checked_add(b)
                .expect("coefficient overflow in CoeffPoly addition");
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

impl Sub for &CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        self.checked_sub(rhs)
            .expect("coefficient overflow in CoeffPoly subtraction")
    }
}

impl Sub for CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: CoeffPoly) -> CoeffPoly {
        &self - &rhs
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        self.checked_neg()
            .expect("coefficient overflow in CoeffPoly negation")
    }
}

impl Neg for CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        -&self
    }
}

impl Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        self.checked_mul(rhs)
            .expect("coefficient overflow in CoeffPoly multiplication")
    }
}

impl Mul for CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: CoeffPoly) -> CoeffPoly {
        &self * &rhs
    }
}
