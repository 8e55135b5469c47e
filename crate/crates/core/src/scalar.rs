//! Coefficient scalars.
//!
//! Every polynomial in this crate is generic over a [`Scalar`]. The exact
//! types ([`BigInt`], [`BigRational`], `i64`, [`Rational64`]) are the ones the
//! construction and verification code is written for; `f64` is supported for
//! numeric evaluation only.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Ring of coefficients.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + 'static
{
    /// Whether equality on the type is exact.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn from_bigint(v: &BigInt) -> Self;

    /// `self / 2` if it exists in the ring.
    fn try_half(&self) -> Option<Self>;

    /// Whether the value is an integer.
    fn is_integral(&self) -> bool;

    /// The value as an exact integer, if integral.
    fn to_bigint(&self) -> Option<BigInt>;

    /// Parse the textual form used by the JSON and text formats
    /// (`"-3"`, `"7/2"`).
    fn parse_decimal(s: &str) -> Option<Self>;

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.clone() + rhs.clone();
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn is_negative_value(&self) -> bool;
}

impl Scalar for BigInt {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }

    fn try_half(&self) -> Option<Self> {
        if self.is_even() {
            Some(self / 2)
        } else {
            None
        }
    }

    fn is_integral(&self) -> bool {
        true
    }

    fn to_bigint(&self) -> Option<BigInt> {
        Some(self.clone())
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        BigInt::from_str(s.trim()).ok()
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn try_half(&self) -> Option<Self> {
        Some(self / BigInt::from(2))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        BigRational::from_str(s.trim()).ok()
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }
}

impl Scalar for i64 {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        v
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.to_i64().expect("integer coefficient overflows i64")
    }

    fn try_half(&self) -> Option<Self> {
        (self % 2 == 0).then_some(self / 2)
    }

    fn is_integral(&self) -> bool {
        true
    }

    fn to_bigint(&self) -> Option<BigInt> {
        Some(BigInt::from(*self))
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.checked_add(*rhs).expect("i64 coefficient overflow");
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.checked_mul(*rhs).expect("i64 coefficient overflow")
    }

    fn is_negative_value(&self) -> bool {
        *self < 0
    }
}

impl Scalar for Rational64 {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }

    fn from_bigint(v: &BigInt) -> Self {
        Rational64::from_integer(v.to_i64().expect("integer coefficient overflows i64"))
    }

    fn try_half(&self) -> Option<Self> {
        Some(self / 2)
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| BigInt::from(self.to_integer()))
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        Rational64::from_str(s.trim()).ok()
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = num_traits::CheckedAdd::checked_add(self, rhs).expect("Rational64 coefficient overflow");
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        num_traits::CheckedMul::checked_mul(self, rhs).expect("Rational64 coefficient overflow")
    }

    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }
}

// Inexact; used for evaluating polynomials at numeric points.
impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.to_f64().unwrap_or(f64::NAN)
    }

    fn try_half(&self) -> Option<Self> {
        Some(self / 2.0)
    }

    fn is_integral(&self) -> bool {
        self.fract() == 0.0
    }

    fn to_bigint(&self) -> Option<BigInt> {
        if self.is_integral() && self.is_finite() {
            num_traits::FromPrimitive::from_f64(*self)
        } else {
            None
        }
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        match s.trim().split_once('/') {
            Some((a, b)) => Some(a.trim().parse::<f64>().ok()? / b.trim().parse::<f64>().ok()?),
            None => s.trim().parse().ok(),
        }
    }

    fn is_negative_value(&self) -> bool {
        *self < 0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halving() {
        assert_eq!(BigInt::from(6).try_half(), Some(BigInt::from(3)));
        assert_eq!(BigInt::from(5).try_half(), None);
        assert_eq!(7i64.try_half(), None);
        let half = BigRational::from_i64(1).try_half().unwrap();
        assert!(!half.is_integral());
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn parse_round_trip() {
        let q = BigRational::parse_decimal("-7/4").unwrap();
        assert_eq!(BigRational::parse_decimal(&q.to_string()), Some(q));
        assert_eq!(BigInt::parse_decimal(" 12 "), Some(BigInt::from(12)));
        assert_eq!(BigInt::parse_decimal("1/2"), None);
        assert_eq!(f64::parse_decimal("3/4"), Some(0.75));
    }
}
