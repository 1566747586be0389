//! Exact sparse multivariate polynomials over the rationals.

mod matrix;
mod monomial;
mod polynomial;
mod resultant;
mod text;

pub use matrix::{bareiss_determinant, Matrix};
pub use monomial::Monomial;
pub use polynomial::{Polynomial, WeightedDegree};
pub use resultant::sylvester_resultant;
pub use text::{format_rational, parse_polynomial, parse_rational};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

pub fn rational_int(value: i64) -> Rational {
    Rational::from_integer(value.into())
}
