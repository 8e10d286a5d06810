//! C-finite sequences: recurrences with constant coefficients plus initial
//! terms, and the two-way bridge to rational generating functions.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ratcore::{
    all_integral, from_integers, is_zero_slice, rat, to_integers, AlgebraError, Polynomial, Rational, RationalFunction,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("a recurrence needs order at least 1")]
    EmptyRecurrence,
    #[error("last recurrence coefficient must be nonzero")]
    DegenerateRecurrence,
    #[error("expected {expected} initial terms for a recurrence of order {expected}, got {got}")]
    InitialLength { expected: usize, got: usize },
    #[error("not a sequence generating function in canonical form: numerator degree must be below denominator degree")]
    ImproperFraction,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `a(n) = c_1 a(n-1) + ... + c_d a(n-d)` for `n >= d`, with `c_d != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Recurrence {
    coeffs: Vec<Rational>,
}

impl Recurrence {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self, SequenceError> {
        match coeffs.last() {
            None => Err(SequenceError::EmptyRecurrence),
            Some(c) if c.is_zero() => Err(SequenceError::DegenerateRecurrence),
            Some(_) => Ok(Recurrence { coeffs }),
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self, SequenceError> {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `[c_1, ..., c_d]`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `1 - c_1 x - ... - c_d x^d`.
    pub fn characteristic_denominator(&self) -> Polynomial {
        let mut den = Vec::with_capacity(self.order() + 1);
        den.push(Rational::one());
        den.extend(self.coeffs.iter().map(|c| -c));
        Polynomial::new(den)
    }
}

/// A recurrence together with its `order` initial terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CFiniteSequence {
    recurrence: Recurrence,
    initial: Vec<Rational>,
}

impl CFiniteSequence {
    pub fn new(recurrence: Recurrence, initial: Vec<Rational>) -> Result<Self, SequenceError> {
        if initial.len() != recurrence.order() {
            return Err(SequenceError::InitialLength { expected: recurrence.order(), got: initial.len() });
        }
        Ok(CFiniteSequence { recurrence, initial })
    }

    pub fn from_ints(coeffs: &[i64], initial: &[i64]) -> Result<Self, SequenceError> {
        Self::new(Recurrence::from_ints(coeffs)?, initial.iter().map(|&v| rat(v)).collect())
    }

    /// The zero sequence, declared at order 1.
    pub fn zero() -> Self {
        CFiniteSequence {
            recurrence: Recurrence { coeffs: alloc::vec![Rational::one()] },
            initial: alloc::vec![Rational::zero()],
        }
    }

    pub fn recurrence(&self) -> &Recurrence {
        &self.recurrence
    }

    pub fn initial(&self) -> &[Rational] {
        &self.initial
    }

    pub fn order(&self) -> usize {
        self.recurrence.order()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_slice(&self.initial)
    }

    /// Same recurrence, initial terms multiplied by `lambda`.
    pub fn scaled(&self, lambda: &Rational) -> Self {
        CFiniteSequence {
            recurrence: self.recurrence.clone(),
            initial: self.initial.iter().map(|v| v * lambda).collect(),
        }
    }

    /// `[a(0), ..., a(n_terms - 1)]` by unrolling the recurrence.
    pub fn terms(&self, n_terms: usize) -> Vec<Rational> {
        let c = self.recurrence.coeffs();
        let d = c.len();
        if all_integral(c) {
            let (init, scale) = to_integers(&self.initial);
            let cs: Vec<BigInt> = c.iter().map(|v| v.numer().clone()).collect();
            let mut out: Vec<BigInt> = init.into_iter().take(n_terms).collect();
            for n in d..n_terms {
                let mut acc = BigInt::zero();
                for (i, ci) in cs.iter().enumerate() {
                    if !ci.is_zero() {
                        acc += ci * &out[n - 1 - i];
                    }
                }
                out.push(acc);
            }
            return from_integers(out, &scale);
        }
        let mut out: Vec<Rational> = self.initial.iter().take(n_terms).cloned().collect();
        for n in d..n_terms {
            let mut acc = Rational::zero();
            for (i, ci) in c.iter().enumerate() {
                if !ci.is_zero() {
                    acc += ci * &out[n - 1 - i];
                }
            }
            out.push(acc);
        }
        out
    }

    /// Numerator and denominator before reduction: `D = 1 - sum c_i x^i` and
    /// `N = (a(0) + ... + a(d-1) x^(d-1)) * D mod x^d`.
    pub fn gf_parts(&self) -> (Polynomial, Polynomial) {
        let den = self.recurrence.characteristic_denominator();
        let head = Polynomial::new(self.initial.clone());
        let num = (&head * &den).truncate(self.order());
        (num, den)
    }

    /// The reduced generating function `sum a(n) x^n`.
    pub fn to_gf(&self) -> RationalFunction {
        let (num, den) = self.gf_parts();
        RationalFunction::normalize(num, den).expect("denominator has constant term 1")
    }

    /// Reads a proper generating function back as a recurrence plus initials.
    /// The zero function yields [`CFiniteSequence::zero`].
    pub fn from_gf(f: &RationalFunction) -> Result<Self, SequenceError> {
        if f.is_zero() {
            return Ok(Self::zero());
        }
        if !f.is_proper() {
            return Err(SequenceError::ImproperFraction);
        }
        let den = f.den();
        let c0_inv = den.constant_term().recip();
        let coeffs: Vec<Rational> = den.coeffs()[1..].iter().map(|c| -(c * &c0_inv)).collect();
        let order = coeffs.len();
        let recurrence = Recurrence::new(coeffs)?;
        let initial = f.series(order);
        Ok(CFiniteSequence { recurrence, initial })
    }
}

impl RationalFunction {
    /// Convenience: the sequence of Taylor coefficients of `self`.
    pub fn to_sequence(&self) -> Result<CFiniteSequence, SequenceError> {
        CFiniteSequence::from_gf(self)
    }
}
