//! Arbitrary-precision counts and the falling factorial.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonnegative integer count with no upper limit.
///
/// Serialized as a decimal string so that values past 2^53 survive JSON.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactCount(BigUint);

impl ExactCount {
    pub fn zero() -> Self {
        ExactCount(BigUint::zero())
    }

    pub fn one() -> Self {
        ExactCount(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Exact division; `None` if `divisor` is zero or does not divide `self`.
    pub fn checked_div_exact(&self, divisor: u64) -> Option<ExactCount> {
        if divisor == 0 {
            return None;
        }
        let d = BigUint::from(divisor);
        if (&self.0 % &d).is_zero() {
            Some(ExactCount(&self.0 / d))
        } else {
            None
        }
    }

    pub fn checked_sub(&self, other: &ExactCount) -> Option<ExactCount> {
        if self.0 >= other.0 {
            Some(ExactCount(&self.0 - &other.0))
        } else {
            None
        }
    }
}

impl From<u64> for ExactCount {
    fn from(v: u64) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl From<u128> for ExactCount {
    fn from(v: u128) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl From<usize> for ExactCount {
    fn from(v: usize) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl From<BigUint> for ExactCount {
    fn from(v: BigUint) -> Self {
        ExactCount(v)
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for ExactCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BigUint::from_str(s)
            .map(ExactCount)
            .map_err(|e| Error::InvalidParameters(format!("not a count: {s:?} ({e})")))
    }
}

impl Add for ExactCount {
    type Output = ExactCount;
    fn add(self, rhs: ExactCount) -> ExactCount {
        ExactCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a ExactCount> for &'a ExactCount {
    type Output = ExactCount;
    fn add(self, rhs: &ExactCount) -> ExactCount {
        ExactCount(&self.0 + &rhs.0)
    }
}

impl AddAssign<&ExactCount> for ExactCount {
    fn add_assign(&mut self, rhs: &ExactCount) {
        self.0 += &rhs.0;
    }
}

impl Mul for ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: ExactCount) -> ExactCount {
        ExactCount(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a ExactCount> for &'a ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: &ExactCount) -> ExactCount {
        ExactCount(&self.0 * &rhs.0)
    }
}

impl Mul<u64> for &ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: u64) -> ExactCount {
        ExactCount(&self.0 * rhs)
    }
}

impl Sum for ExactCount {
    fn sum<I: Iterator<Item = ExactCount>>(iter: I) -> Self {
        ExactCount(iter.map(|c| c.0).sum())
    }
}

impl Serialize for ExactCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactCount {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// n(n-1)...(n-k+1), which is zero once k exceeds n.
pub(crate) fn falling_factorial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    ((n - k + 1)..=n).fold(BigUint::one(), |acc, f| acc * f)
}

/// The permutation number P(n, k): n(n-1)...(n-k+1), with P(n, 0) = 1.
pub fn permutation_number(n: i64, k: i64) -> Result<ExactCount> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "permutation number needs 0 <= k <= n, got n={n}, k={k}"
        )));
    }
    Ok(ExactCount(falling_factorial(n as u64, k as u64)))
}

pub fn factorial(n: u64) -> ExactCount {
    ExactCount(falling_factorial(n, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_number_examples() {
        assert_eq!(permutation_number(5, 0).unwrap(), ExactCount::from(1u64));
        assert_eq!(permutation_number(5, 2).unwrap(), ExactCount::from(20u64));
        assert_eq!(permutation_number(4, 4).unwrap(), ExactCount::from(24u64));
        assert_eq!(permutation_number(0, 0).unwrap(), ExactCount::one());
    }

    #[test]
    fn permutation_number_rejects_bad_ranges() {
        assert!(permutation_number(3, 4).is_err());
        assert!(permutation_number(-1, 0).is_err());
        assert!(permutation_number(3, -1).is_err());
    }

    #[test]
    fn factorial_beyond_u64() {
        // 30! = 265252859812191058636308480000000
        assert_eq!(
            factorial(30).to_string(),
            "265252859812191058636308480000000"
        );
        assert!(factorial(21).to_u64().is_none());
        assert_eq!(factorial(20).to_u64(), Some(2_432_902_008_176_640_000));
    }

    #[test]
    fn exact_division() {
        let c = ExactCount::from(120u64);
        assert_eq!(c.checked_div_exact(2), Some(ExactCount::from(60u64)));
        assert_eq!(c.checked_div_exact(7), None);
        assert_eq!(c.checked_div_exact(0), None);
    }

    #[test]
    fn serde_as_decimal_string() {
        let c = factorial(25);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, "\"15511210043330985984000000\"");
        let back: ExactCount = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
