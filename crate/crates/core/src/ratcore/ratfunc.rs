use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{all_integral, from_integers, to_integers, AlgebraError, Polynomial, Rational};

/// Reduced quotient of polynomials in canonical form: `gcd(num, den) = 1`
/// and `den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Divides out the gcd and rescales so the denominator's constant term is 1.
    pub fn normalize(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        if den.constant_term().is_zero() {
            return Err(AlgebraError::NoSeriesExpansion);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_rem(&g)?.0, den.div_rem(&g)?.0) };
        Self::from_coprime(num, den)
    }

    /// Builds the canonical form of a pair already known to be coprime;
    /// only the `den(0) = 1` rescaling is applied.
    pub(crate) fn from_coprime(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        let c0 = den.constant_term();
        if c0.is_zero() {
            return Err(AlgebraError::NoSeriesExpansion);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if c0.is_one() {
            return Ok(RationalFunction { num, den });
        }
        let inv = c0.recip();
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    /// A polynomial viewed as a rational function with denominator 1.
    pub fn from_polynomial(num: Polynomial) -> Self {
        RationalFunction { num, den: Polynomial::one() }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num < deg den`, or the function is zero.
    pub fn is_proper(&self) -> bool {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => true,
            (Some(n), Some(d)) => n < d,
            (Some(_), None) => false,
        }
    }

    /// Degree of the denominator, which is the order of the recurrence the
    /// coefficients satisfy.
    pub fn den_degree(&self) -> usize {
        self.den.degree().unwrap_or(0)
    }

    /// First `n_terms` Taylor coefficients at 0.
    pub fn series(&self, n_terms: usize) -> Vec<Rational> {
        series_divide(&self.num, &self.den, n_terms).expect("canonical denominator has den(0) = 1")
    }
}

/// Power-series coefficients of `num / den` by exact long division, without
/// any reduction of the pair.
pub fn series_divide(num: &Polynomial, den: &Polynomial, n_terms: usize) -> Result<Vec<Rational>, AlgebraError> {
    let d0 = den.constant_term();
    if d0.is_zero() {
        return Err(AlgebraError::NoSeriesExpansion);
    }
    if num.is_zero() {
        return Ok(vec![Rational::zero(); n_terms]);
    }
    let dc = den.coeffs();
    if d0.is_one() && all_integral(dc) {
        // Integer-only path: scale the numerator to integers, divide afterwards.
        let (n_int, scale) = to_integers(num.coeffs());
        let d_int: Vec<BigInt> = dc.iter().map(|c| c.numer().clone()).collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(n_terms);
        for j in 0..n_terms {
            let mut acc = n_int.get(j).cloned().unwrap_or_else(BigInt::zero);
            for i in 1..d_int.len().min(j + 1) {
                if !d_int[i].is_zero() {
                    acc -= &d_int[i] * &out[j - i];
                }
            }
            out.push(acc);
        }
        return Ok(from_integers(out, &scale));
    }
    let inv = d0.recip();
    let mut out: Vec<Rational> = Vec::with_capacity(n_terms);
    for j in 0..n_terms {
        let mut acc = num.coeff(j);
        for i in 1..dc.len().min(j + 1) {
            if !dc[i].is_zero() {
                acc -= &dc[i] * &out[j - i];
            }
        }
        out.push(acc * &inv);
    }
    Ok(out)
}
