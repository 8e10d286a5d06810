//! Minimal-recurrence fitting: the "guess" step of the C-finite ansatz.
//!
//! Given exact terms and an order bound `B`, find the smallest recurrence
//! with constant coefficients that every supplied term satisfies. With at
//! least `2B + 1` terms the answer at minimal order is unique, so when `B`
//! is known a priori the fit is a proof rather than a heuristic.

pub mod hankel;
pub mod massey;

use alloc::vec::Vec;

use crate::cfseq::{CFiniteSequence, Recurrence};
use crate::ratcore::{is_zero_slice, to_integers, Polynomial, Rational, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GuessError {
    #[error("order bound {max_order} needs at least {needed} terms, got {got}")]
    InsufficientData { max_order: usize, needed: usize, got: usize },
    #[error("no recurrence of order <= {max_order} fits all {terms} terms")]
    NotFound { max_order: usize, terms: usize },
}

/// What the fit found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fitted {
    /// Every supplied term is zero; the generating function is `0/1`.
    Zero,
    Sequence(CFiniteSequence),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuessResult {
    fit: Fitted,
    gf: RationalFunction,
    terms_used: usize,
    certified: bool,
}

impl GuessResult {
    pub fn fit(&self) -> &Fitted {
        &self.fit
    }

    /// Order of the fitted recurrence; 0 for the zero sequence.
    pub fn order_found(&self) -> usize {
        match &self.fit {
            Fitted::Zero => 0,
            Fitted::Sequence(s) => s.order(),
        }
    }

    /// The fitted sequence; the zero sequence is reported at order 1.
    pub fn sequence(&self) -> CFiniteSequence {
        match &self.fit {
            Fitted::Zero => CFiniteSequence::zero(),
            Fitted::Sequence(s) => s.clone(),
        }
    }

    /// Reduced generating function of the fit.
    pub fn gf(&self) -> &RationalFunction {
        &self.gf
    }

    pub fn into_gf(self) -> RationalFunction {
        self.gf
    }

    pub fn terms_used(&self) -> usize {
        self.terms_used
    }

    /// True when the order bound was supplied as a proven a-priori bound and
    /// at least `2 * bound + 1` terms were fitted.
    pub fn certified(&self) -> bool {
        self.certified
    }
}

fn check_length(data: &[Rational], max_order: usize) -> Result<(), GuessError> {
    let needed = 2 * max_order + 1;
    if data.len() < needed {
        return Err(GuessError::InsufficientData { max_order, needed, got: data.len() });
    }
    Ok(())
}

fn not_found(data: &[Rational], max_order: usize) -> GuessError {
    GuessError::NotFound { max_order, terms: data.len() }
}

fn zero_result(data: &[Rational]) -> GuessResult {
    GuessResult { fit: Fitted::Zero, gf: RationalFunction::zero(), terms_used: data.len(), certified: false }
}

/// Assembles the result for recurrence coefficients known to be minimal.
/// Minimality makes the generating function reduced, so no gcd is needed.
fn minimal_result(data: &[Rational], coeffs: Vec<Rational>) -> GuessResult {
    let order = coeffs.len();
    let recurrence = Recurrence::new(coeffs).expect("fitted recurrence has nonzero last coefficient");
    let sequence = CFiniteSequence::new(recurrence, data[..order].to_vec()).expect("initial length equals order");
    let (num, den) = sequence.gf_parts();
    let gf = RationalFunction::from_coprime(num, den).expect("denominator has constant term 1");
    GuessResult { fit: Fitted::Sequence(sequence), gf, terms_used: data.len(), certified: false }
}

/// Minimal-order recurrence of order at most `max_order` satisfied by all of
/// `data`, found by Berlekamp-Massey in quadratic time.
///
/// Requires `data.len() >= 2 * max_order + 1`. The recurrence must hold from
/// index `order` onward, so data with a transient head is rejected.
pub fn guess_recurrence(data: &[Rational], max_order: usize) -> Result<GuessResult, GuessError> {
    check_length(data, max_order)?;
    if is_zero_slice(data) {
        return Ok(zero_result(data));
    }
    let (ints, _) = to_integers(data);
    let conn = massey::berlekamp_massey(&ints);
    let order = conn.complexity;
    if order > max_order || conn.connection.len() != order + 1 {
        return Err(not_found(data, max_order));
    }
    let lead = Rational::from_integer(conn.connection[0].clone());
    let coeffs = conn.connection[1..].iter().map(|c| -Rational::from_integer(c.clone()) / &lead).collect();
    Ok(minimal_result(data, coeffs))
}

/// As [`guess_recurrence`], with `bound` asserted to be a proven bound on the
/// true order of the sequence the data comes from; marks the result certified.
pub fn guess_with_proven_bound(data: &[Rational], bound: usize) -> Result<GuessResult, GuessError> {
    let mut result = guess_recurrence(data, bound)?;
    result.certified = true;
    Ok(result)
}

/// The reduced generating function whose expansion reproduces `data`, with
/// denominator degree at most `max_den_degree`.
pub fn guess_gf(data: &[Rational], max_den_degree: usize) -> Result<RationalFunction, GuessError> {
    guess_recurrence(data, max_den_degree).map(GuessResult::into_gf)
}

/// Like [`guess_gf`], but also admits generating functions with a polynomial
/// part (a transient head such as `1, 0, 0, ...`). The bound applies to the
/// linear complexity `max(deg den, deg num + 1)`, and `2 * bound + 1` terms
/// still determine the result uniquely.
pub fn guess_gf_with_polynomial_part(data: &[Rational], bound: usize) -> Result<RationalFunction, GuessError> {
    check_length(data, bound)?;
    if is_zero_slice(data) {
        return Ok(RationalFunction::zero());
    }
    let (ints, _) = to_integers(data);
    let conn = massey::berlekamp_massey(&ints);
    if conn.complexity > bound {
        return Err(not_found(data, bound));
    }
    let lead = Rational::from_integer(conn.connection[0].clone());
    let den = Polynomial::new(conn.connection.iter().map(|c| Rational::from_integer(c.clone()) / &lead).collect());
    let num = (&Polynomial::new(data[..conn.complexity].to_vec()) * &den).truncate(conn.complexity);
    // A shorter relation would exist if num and den shared a factor.
    Ok(RationalFunction::from_coprime(num, den).expect("connection polynomial has constant term 1"))
}

/// Reference fitter: tries each order `1..=max_order` with an exact Hankel
/// kernel computation. Cubic per order; meant for cross-validation.
pub fn guess_recurrence_hankel(data: &[Rational], max_order: usize) -> Result<GuessResult, GuessError> {
    check_length(data, max_order)?;
    if is_zero_slice(data) {
        return Ok(zero_result(data));
    }
    let (ints, _) = to_integers(data);
    (1..=max_order)
        .find_map(|d| hankel::fit_order(&ints, d))
        .map(|coeffs| minimal_result(data, coeffs))
        .ok_or_else(|| not_found(data, max_order))
}

/// True when the recurrence of `seq` reproduces every term of `data`.
pub fn reproduces(seq: &CFiniteSequence, data: &[Rational]) -> bool {
    seq.terms(data.len()) == data
}

/// Convenience for tests and callers holding integer data.
pub fn integer_terms(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| crate::ratcore::rat(v)).collect()
}

impl Fitted {
    pub fn is_zero(&self) -> bool {
        matches!(self, Fitted::Zero)
    }
}
