//! Exact rational arithmetic: polynomials, rational functions, series.

mod poly;
mod ratfunc;
mod text;

pub use poly::Polynomial;
pub use ratfunc::{series_divide, RationalFunction};
pub use text::ParseError;

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("generating function has no power-series expansion at 0 (denominator vanishes at 0)")]
    NoSeriesExpansion,
}

/// Converts a small integer into an exact rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Least common multiple of all denominators (1 for an empty slice).
pub fn common_denominator(values: &[Rational]) -> BigInt {
    values.iter().fold(BigInt::one(), |acc, v| if v.denom().is_one() { acc } else { acc.lcm(v.denom()) })
}

/// Scales `values` by their common denominator, returning the integer
/// numerators and the scale.
pub fn to_integers(values: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let scale = common_denominator(values);
    let ints = values
        .iter()
        .map(|v| if v.denom().is_one() { v.numer() * &scale } else { v.numer() * (&scale / v.denom()) })
        .collect();
    (ints, scale)
}

/// Divides every integer by `scale`, producing reduced rationals.
pub fn from_integers(values: Vec<BigInt>, scale: &BigInt) -> Vec<Rational> {
    if scale.is_one() {
        values.into_iter().map(Rational::from_integer).collect()
    } else {
        values.into_iter().map(|v| Rational::new(v, scale.clone())).collect()
    }
}

pub(crate) fn all_integral(values: &[Rational]) -> bool {
    values.iter().all(|v| v.denom().is_one())
}

pub(crate) fn is_zero_slice(values: &[Rational]) -> bool {
    values.iter().all(Zero::is_zero)
}
