use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_expression, AlgebraError, Rational, RationalFunction};

/// Arithmetic shared by exact numbers and rational functions, so that every
/// birational operator can be written once and evaluated either numerically
/// or symbolically.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, other: &Self) -> Result<Self, AlgebraError>;

    /// Field equality (cross-multiplication for rational functions).
    fn equals(&self, other: &Self) -> bool;

    fn inv(&self) -> Result<Self, AlgebraError> {
        Self::one().div(self)
    }

    fn pow(&self, exp: i64) -> Result<Self, AlgebraError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn is_one(&self) -> bool {
        self.equals(&Self::one())
    }

    fn into_field_value(self) -> FieldValue;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from(v)
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_div(other)
    }
    fn equals(&self, other: &Self) -> bool {
        self == other
    }
    fn pow(&self, exp: i64) -> Result<Self, AlgebraError> {
        Rational::pow(self, exp as i32)
    }
    fn into_field_value(self) -> FieldValue {
        FieldValue::Rational(self)
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn from_i64(v: i64) -> Self {
        RationalFunction::constant(v.into())
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RationalFunction::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RationalFunction::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RationalFunction::mul(self, other)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_div(other)
    }
    fn equals(&self, other: &Self) -> bool {
        RationalFunction::equals(self, other)
    }
    fn pow(&self, exp: i64) -> Result<Self, AlgebraError> {
        RationalFunction::pow(self, exp as i32)
    }
    fn into_field_value(self) -> FieldValue {
        FieldValue::Function(self)
    }
}

/// Either an exact number or a rational function. Arithmetic between the two
/// tags is refused; use [`FieldValue::promote`] to lift a number explicitly.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldValue {
    Rational(Rational),
    Function(RationalFunction),
}

impl FieldValue {
    pub fn promote(&self) -> RationalFunction {
        match self {
            FieldValue::Rational(r) => RationalFunction::constant(r.clone()),
            FieldValue::Function(f) => f.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FieldValue::Rational(r) => Some(r),
            FieldValue::Function(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldValue::Rational(r) => r.is_zero(),
            FieldValue::Function(f) => f.is_zero(),
        }
    }

    fn binary(
        &self,
        other: &Self,
        on_rat: impl FnOnce(&Rational, &Rational) -> Result<Rational, AlgebraError>,
        on_fun: impl FnOnce(&RationalFunction, &RationalFunction) -> Result<RationalFunction, AlgebraError>,
    ) -> Result<Self, AlgebraError> {
        match (self, other) {
            (FieldValue::Rational(a), FieldValue::Rational(b)) => on_rat(a, b).map(FieldValue::Rational),
            (FieldValue::Function(a), FieldValue::Function(b)) => on_fun(a, b).map(FieldValue::Function),
            _ => Err(AlgebraError::TagMismatch),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.binary(other, |a, b| Ok(a + b), |a, b| Ok(a.add(b)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.binary(other, |a, b| Ok(a - b), |a, b| Ok(a.sub(b)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.binary(other, |a, b| Ok(a * b), |a, b| Ok(a.mul(b)))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.binary(other, |a, b| a.checked_div(b), |a, b| a.checked_div(b))
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldValue::Rational(r) => FieldValue::Rational(-r),
            FieldValue::Function(f) => FieldValue::Function(f.neg()),
        }
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Rational(r) => fmt::Display::fmt(r, f),
            FieldValue::Function(g) => fmt::Display::fmt(g, f),
        }
    }
}

impl FromStr for FieldValue {
    type Err = AlgebraError;

    /// Plain `p/q` text becomes a number; anything else is parsed as a
    /// symbolic expression.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(r) = s.parse::<Rational>() {
            return Ok(FieldValue::Rational(r));
        }
        parse_expression(s).map(FieldValue::Function)
    }
}

impl Serialize for FieldValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
