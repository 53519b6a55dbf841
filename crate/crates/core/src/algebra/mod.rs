//! Exact arithmetic: unbounded rationals, sparse multivariate polynomials
//! and rational functions over the rationals.

mod expr;
mod field;
mod gcd;
mod json;
mod monomial;
mod polynomial;
mod ratfunc;
mod rational;

pub use expr::parse_expression;
pub use field::{FieldValue, Scalar};
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use ratfunc::RationalFunction;
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at this point")]
    SingularPoint,
    #[error("variable {0} is not assigned")]
    Unassigned(u32),
    #[error("cannot mix a number with a rational function")]
    TagMismatch,
    #[error("syntax error: {0}")]
    Syntax(String),
}
