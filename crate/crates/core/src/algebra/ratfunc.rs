use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{AlgebraError, FieldValue, Monomial, Polynomial, Rational};

/// A quotient of polynomials over the rationals.
///
/// The pair is normalized by
/// - cancelling the common monomial factor of numerator and denominator,
/// - collapsing `c * den / den` to the constant `c`,
/// - dividing out the polynomial gcd when one is found,
/// - scaling to integer coefficients whose joint gcd is 1,
/// - making the leading (graded-lex) denominator coefficient positive.
///
/// The gcd step is heuristic and may give up, so equality is still decided
/// by cross-multiplication rather than by comparing representations.
#[derive(Clone)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self::normalized(p, Polynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn var(index: u32) -> Self {
        RationalFunction {
            num: Polynomial::var(index),
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value when this function is a constant in its current
    /// representation.
    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        n.checked_div(&d).ok()
    }

    pub fn variables(&self) -> BTreeSet<u32> {
        let mut v = self.num.variables();
        v.extend(self.den.variables());
        v
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = (num, den);

        let g = num.monomial_content().gcd(&den.monomial_content());
        if !g.is_one() {
            num = num.div_monomial(&g).expect("content divides");
            den = den.div_monomial(&g).expect("content divides");
        }

        if let Some(c) = num.ratio_to(&den) {
            return Self::constant(c);
        }

        if num.len() > 1 && den.len() > 1 {
            if let Some((n, d)) = super::gcd::cancel_common(&num, &den) {
                num = n;
                den = d;
            }
        }

        let (ln, gn) = num.coefficient_content();
        let (ld, gd) = den.coefficient_content();
        let lcm = num_integer::Integer::lcm(&ln, &ld);
        // gcd of the integer coefficients after scaling by lcm
        let g_scaled = num_integer::Integer::gcd(&(&gn * (&lcm / &ln)), &(&gd * (&lcm / &ld)));
        let mut factor = Rational::new(lcm, g_scaled).expect("nonzero content");
        if den.leading_is_negative() {
            factor = -factor;
        }
        if !factor.is_one() {
            num = num.scale(&factor);
            den = den.scale(&factor);
        }
        RationalFunction { num, den }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::product(&self.num, &self.den, &other.num, &other.den)
    }

    /// `(a/b) * (c/d)`, cancelling any factor that appears verbatim (up to a
    /// constant) across the fraction bar.
    fn product(a: &Polynomial, b: &Polynomial, c: &Polynomial, d: &Polynomial) -> Self {
        let mut num_f: Vec<Polynomial> = vec![a.clone(), c.clone()];
        let mut den_f: Vec<Polynomial> = vec![b.clone(), d.clone()];
        let mut scale = Rational::one();
        for nf in num_f.iter_mut() {
            for df in den_f.iter_mut() {
                if nf.is_one() || df.is_one() || nf.as_constant().is_some() {
                    continue;
                }
                if let Some(k) = nf.ratio_to(df) {
                    scale = &scale * &k;
                    *nf = Polynomial::one();
                    *df = Polynomial::one();
                    break;
                }
            }
        }
        let num = num_f[0].mul(&num_f[1]).scale(&scale);
        let den = den_f[0].mul(&den_f[1]);
        Self::normalized(num, den)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Self::product(&self.num, &self.den, &other.den, &other.num))
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, exp: i32) -> Result<Self, AlgebraError> {
        if exp < 0 {
            return self.inv()?.pow(-exp);
        }
        let e = exp as u32;
        Ok(Self::normalized(self.num.pow(e), self.den.pow(e)))
    }

    /// Equality as elements of the function field: `a*d == c*b`.
    pub fn equals(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        if self.is_zero() != other.is_zero() {
            return false;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Exact substitution of rational values.
    ///
    /// With `partial == false` every variable must be assigned and the result
    /// is `FieldValue::Rational`; otherwise the result is a function in the
    /// remaining variables. A denominator that vanishes (numerically, or as a
    /// polynomial) is a `SingularPoint`.
    pub fn substitute(&self, assignment: &BTreeMap<u32, Rational>, partial: bool) -> Result<FieldValue, AlgebraError> {
        if !partial {
            if let Some(v) = self.variables().into_iter().find(|v| !assignment.contains_key(v)) {
                return Err(AlgebraError::Unassigned(v));
            }
        }
        let den = self.den.substitute(assignment);
        if den.is_zero() {
            return Err(AlgebraError::SingularPoint);
        }
        let num = self.num.substitute(assignment);
        if partial {
            Ok(FieldValue::Function(Self::normalized(num, den)))
        } else {
            let n = num.as_constant().expect("fully assigned");
            let d = den.as_constant().expect("fully assigned");
            Ok(FieldValue::Rational(n.checked_div(&d)?))
        }
    }

    /// Convenience wrapper around [`substitute`](Self::substitute) that keeps
    /// the result symbolic.
    pub fn substitute_partial(&self, assignment: &BTreeMap<u32, Rational>) -> Result<Self, AlgebraError> {
        match self.substitute(assignment, true)? {
            FieldValue::Function(f) => Ok(f),
            FieldValue::Rational(r) => Ok(Self::constant(r)),
        }
    }

    /// Evaluate at a complete numeric assignment.
    pub fn evaluate(&self, assignment: &BTreeMap<u32, Rational>) -> Result<Rational, AlgebraError> {
        match self.substitute(assignment, false)? {
            FieldValue::Rational(r) => Ok(r),
            FieldValue::Function(_) => unreachable!("full substitution yields a rational"),
        }
    }

    /// Total degree of numerator plus denominator; a rough size measure.
    pub fn weight(&self) -> u32 {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    pub fn display_with(&self, symbol: char) -> String {
        let mut s = String::new();
        self.write_with(&mut s, symbol).expect("writing to a String");
        s
    }

    pub(crate) fn write_with(&self, f: &mut impl fmt::Write, symbol: char) -> fmt::Result {
        if self.den.is_one() {
            return self.num.write_with(f, symbol);
        }
        // a single numerator term reads correctly left to right
        let wrap = |p: &Polynomial| !p.is_single_term_unit();
        if self.num.len() > 1 {
            f.write_char('(')?;
            self.num.write_with(f, symbol)?;
            f.write_char(')')?;
        } else {
            self.num.write_with(f, symbol)?;
        }
        f.write_char('/')?;
        if wrap(&self.den) {
            f.write_char('(')?;
            self.den.write_with(f, symbol)?;
            f.write_char(')')
        } else {
            self.den.write_with(f, symbol)
        }
    }

    /// Structural identity of the stored representation.
    pub fn same_representation(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<Monomial> for RationalFunction {
    fn from(m: Monomial) -> Self {
        Self::from_polynomial(Polynomial::term(Rational::one(), m))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, 'z')
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
