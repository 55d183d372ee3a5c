//! Dense univariate polynomials in `t` with exact integer coefficients.
//!
//! The coefficient type is generic (`i64`, `i128`, `BigInt`, …); run
//! polynomials use [`crate::IntPolynomial`], the `BigInt` instantiation.
//! Besides addition the module only needs multiplication by `t^k` and by
//! `(1+t)`, synthetic division by `(1+t)`, and evaluation.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact integer coefficient ring.
pub trait Coefficient:
    Num + Signed + Clone + Ord + Debug + Display + FromStr + FromPrimitive + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Num
        + Signed
        + Clone
        + Ord
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial is divisible by every power of (1+t)")]
    ZeroPolynomial,
    #[error("invalid coefficient {0:?}")]
    BadCoefficient(String),
}

/// `Σ coeffs[i] t^i`, with no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs<T: Into<C>>(coeffs: Vec<T>) -> Self {
        let mut p = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    /// Builds a polynomial from machine-word tallies indexed by exponent.
    pub fn from_counts(counts: &[u64]) -> Self {
        let coeffs = counts
            .iter()
            .map(|&c| C::from_u64(c).expect("coefficient type too narrow for count"))
            .collect();
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: usize) -> C {
        self.coeffs.get(exponent).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add_term(&mut self, exponent: usize, count: C) {
        if self.coeffs.len() <= exponent {
            self.coeffs.resize(exponent + 1, C::zero());
        }
        self.coeffs[exponent] = self.coeffs[exponent].clone() + count;
        self.trim();
    }

    /// Adds machine-word tallies indexed by exponent.
    pub fn add_counts(&mut self, counts: &[u64]) {
        if self.coeffs.len() < counts.len() {
            self.coeffs.resize(counts.len(), C::zero());
        }
        for (slot, &c) in self.coeffs.iter_mut().zip(counts) {
            if c != 0 {
                *slot = slot.clone() + C::from_u64(c).expect("coefficient type too narrow");
            }
        }
        self.trim();
    }

    /// `(1+t)^m`, by binomial coefficients.
    pub fn one_plus_t_power(m: usize) -> Self {
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut c = C::one();
        coeffs.push(c.clone());
        for k in 1..=m {
            c = c * C::from_usize(m + 1 - k).unwrap() / C::from_usize(k).unwrap();
            coeffs.push(c.clone());
        }
        Self { coeffs }
    }

    /// Multiplication by `t^k`.
    pub fn shift(mut self, k: usize) -> Self {
        if !self.is_zero() {
            self.coeffs
                .splice(0..0, std::iter::repeat_with(C::zero).take(k));
        }
        self
    }

    /// Multiplication by `(1+t)^e`.
    pub fn mul_one_plus_t_power(&self, e: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..e {
            if coeffs.is_empty() {
                break;
            }
            coeffs.push(C::zero());
            for i in (1..coeffs.len()).rev() {
                coeffs[i] = coeffs[i].clone() + coeffs[i - 1].clone();
            }
        }
        Self { coeffs }
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Synthetic division by `t + 1`: returns `(q, r)` with
    /// `self = q·(1+t) + r`, where `r = self(−1)`.
    pub fn div_rem_one_plus_t(&self) -> (Self, C) {
        let Some(deg) = self.degree() else {
            return (Self::zero(), C::zero());
        };
        let mut quotient = vec![C::zero(); deg];
        let mut carry = C::zero();
        for i in (1..=deg).rev() {
            carry = self.coeffs[i].clone() - carry;
            quotient[i - 1] = carry.clone();
        }
        let remainder = self.coeffs[0].clone() - carry;
        let mut q = Self { coeffs: quotient };
        q.trim();
        (q, remainder)
    }

    /// Largest `e` with `(1+t)^e` dividing `self`, together with the
    /// cofactor `q`, so `self = q·(1+t)^e` and `q(−1) ≠ 0`.
    pub fn factor_one_plus_t(&self) -> Result<(usize, Self), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut order = 0;
        let mut current = self.clone();
        loop {
            let (q, r) = current.div_rem_one_plus_t();
            if !r.is_zero() {
                return Ok((order, current));
            }
            current = q;
            order += 1;
        }
    }

    pub fn one_plus_t_order(&self) -> Result<usize, PolyError> {
        self.factor_one_plus_t().map(|(order, _)| order)
    }

    /// Weighted sums `Σ_{i odd} i^k f_i` and `Σ_{i even, i ≥ 2} i^k f_i`.
    pub fn moment_sums(&self, k: u32) -> MomentSums<C> {
        let mut odd = C::zero();
        let mut even = C::zero();
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let weight = num_traits::pow(C::from_usize(i).unwrap(), k as usize);
            let term = weight * c.clone();
            if i % 2 == 1 {
                odd = odd + term;
            } else {
                even = even + term;
            }
        }
        MomentSums { k, odd, even }
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> C {
        self.evaluate(&C::one())
    }
}

/// Both sides of the alternating moment identity for one exponent `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "C: Display"))]
pub struct MomentSums<C> {
    pub k: u32,
    #[serde(serialize_with = "to_decimal")]
    pub odd: C,
    #[serde(serialize_with = "to_decimal")]
    pub even: C,
}

impl<C: Coefficient> MomentSums<C> {
    pub fn holds(&self) -> bool {
        self.odd == self.even
    }
}

fn to_decimal<C: Display, S: Serializer>(c: &C, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(c)
}

/// Returns whether `1^k f_1 + 3^k f_3 + … = 2^k f_2 + 4^k f_4 + …`
/// along with both sides.
pub fn moment_identity_holds<C: Coefficient>(f: &Polynomial<C>, k: u32) -> (bool, MomentSums<C>) {
    let sums = f.moment_sums(k);
    (sums.holds(), sums)
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> AddAssign<&Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &Polynomial<C>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), C::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = a.clone() + b.clone();
        }
        self.trim();
    }
}

impl<C: Coefficient> AddAssign for Polynomial<C> {
    fn add_assign(&mut self, rhs: Polynomial<C>) {
        *self += &rhs;
    }
}

impl<C: Coefficient> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<C: Coefficient> Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}")?,
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Wire form: `{"coeffs": ["c0", "c1", …]}` with decimal-string
/// coefficients indexed by exponent.
#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    coeffs: Vec<String>,
}

impl<C: Coefficient> Serialize for Polynomial<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolynomialJson {
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Polynomial<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(deserializer)?;
        raw.coeffs
            .iter()
            .map(|s| {
                C::from_str(s)
                    .map_err(|_| serde::de::Error::custom(PolyError::BadCoefficient(s.clone())))
            })
            .collect::<Result<Vec<C>, _>>()
            .map(Polynomial::from_coeffs)
    }
}
