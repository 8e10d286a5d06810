//! Binomial convolutions of C-finite sequences and their certified
//! generating functions.
//!
//! For sequences `a` of order `d` and `b` of order `d'`, the binomial
//! convolution `C(n) = sum_k binom(n, k) a(k) b(n - k)` is C-finite of order
//! at most `d * d'`, and the self-convolution of `a` has order at most
//! `d (d + 1) / 2`. With that bound `N` in hand, `2N + 1` brute-force terms
//! determine the generating function uniquely, so fitting them is a proof.
//! A further `guard` terms are checked against the fit as a tripwire.
//!
//! The bound also holds with repeated characteristic roots: as exponential
//! generating functions, `a` and `b` are sums of `q_i(x) e^(alpha_i x)` of
//! total dimension `d` and `d'`, and the product has dimension at most
//! `d * d'` (at most `d (d + 1) / 2` for a square). Roots are never computed.
//!
//! When some `alpha_i + beta_j = 0` the corresponding part of the convolution
//! is supported on finitely many `n`, and the generating function picks up a
//! polynomial part: `2^n` convolved with `(-2)^n` is `1, 0, 0, ...`. The bound
//! then limits the linear complexity `max(deg den, deg num + 1)`, so such
//! identities are fitted and certified the same way but may be improper.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cfseq::{CFiniteSequence, SequenceError};
use crate::guess::{guess_gf_with_polynomial_part, guess_with_proven_bound, GuessError, GuessResult};
use crate::ratcore::{to_integers, Rational, RationalFunction};

pub const DEFAULT_GUARD_TERMS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConvolutionKind {
    /// `a` convolved with itself.
    SelfConvolution,
    /// `a` convolved with a second sequence `b`.
    Cross,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConvolutionError {
    #[error("invalid operand: {0}")]
    InvalidOperand(#[from] SequenceError),
    /// The fit at the proven bound failed. The bound is a theorem, so this
    /// is an implementation bug.
    #[error("internal consistency failure: no recurrence of order <= {bound} fits the {} convolution terms", terms.len())]
    BoundViolated { bound: usize, terms: Vec<Rational> },
    #[error("internal consistency failure: fitted generating function disagrees with term {index}")]
    GuardMismatch { index: usize, terms: Vec<Rational> },
}

impl ConvolutionError {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        !matches!(self, ConvolutionError::InvalidOperand(_))
    }

    /// Brute-force terms attached to an internal failure.
    pub fn terms(&self) -> &[Rational] {
        match self {
            ConvolutionError::InvalidOperand(_) => &[],
            ConvolutionError::BoundViolated { terms, .. } | ConvolutionError::GuardMismatch { terms, .. } => terms,
        }
    }
}

/// Which convolution to derive, and how many guard terms to verify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionSpec {
    pub kind: ConvolutionKind,
    pub a: CFiniteSequence,
    /// Ignored for [`ConvolutionKind::SelfConvolution`].
    pub b: CFiniteSequence,
    pub guard_terms: usize,
}

impl ConvolutionSpec {
    pub fn self_of(a: CFiniteSequence) -> Self {
        ConvolutionSpec { kind: ConvolutionKind::SelfConvolution, b: a.clone(), a, guard_terms: DEFAULT_GUARD_TERMS }
    }

    pub fn cross(a: CFiniteSequence, b: CFiniteSequence) -> Self {
        ConvolutionSpec { kind: ConvolutionKind::Cross, a, b, guard_terms: DEFAULT_GUARD_TERMS }
    }

    pub fn with_guard(mut self, guard_terms: usize) -> Self {
        self.guard_terms = guard_terms;
        self
    }
}

/// A derived convolution identity and how it was certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub gf: RationalFunction,
    /// The a-priori order bound `N`.
    pub order_bound: usize,
    /// Degree of the fitted denominator.
    pub order_found: usize,
    /// `2N + 1 + guard` brute-force terms.
    pub terms_generated: usize,
    pub guard_verified: usize,
    /// Generating functions of the (order-reduced) operands, `;`-separated.
    pub operands: String,
}

/// `d * d'` for a cross convolution, `d (d + 1) / 2` for a self-convolution.
pub fn conv_order_bound(d: usize, d_prime: usize, kind: ConvolutionKind) -> usize {
    match kind {
        ConvolutionKind::Cross => d * d_prime,
        ConvolutionKind::SelfConvolution => d * (d + 1) / 2,
    }
}

/// `C(n) = sum_{k=0..n} binom(n, k) a(k) b(n - k)` for `n < n_terms`, by
/// direct summation along Pascal rows.
pub fn binomial_conv_terms(a: &CFiniteSequence, b: &CFiniteSequence, n_terms: usize) -> Vec<Rational> {
    binomial_conv_of_terms(&a.terms(n_terms), &b.terms(n_terms))
}

/// Binomial convolution of two explicit prefixes (truncated to the shorter).
pub fn binomial_conv_of_terms(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n_terms = a.len().min(b.len());
    let (a_int, a_scale) = to_integers(&a[..n_terms]);
    let (b_int, b_scale) = to_integers(&b[..n_terms]);
    let out = binomial_conv_integers(&a_int, &b_int);
    let scale = a_scale * b_scale;
    out.into_iter().map(|v| Rational::new(v, scale.clone())).collect()
}

fn binomial_conv_integers(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n_terms = a.len().min(b.len());
    let symmetric = a[..n_terms] == b[..n_terms];
    let mut row: Vec<BigInt> = Vec::with_capacity(n_terms);
    let mut out = Vec::with_capacity(n_terms);
    for n in 0..n_terms {
        // Advance Pascal's triangle to row n.
        row.push(BigInt::one());
        for k in (1..n).rev() {
            let prev = row[k - 1].clone();
            row[k] += prev;
        }
        let mut acc = BigInt::zero();
        if symmetric {
            // binom(n,k) a(k) a(n-k) pairs up with k <-> n-k.
            for k in 0..n.div_ceil(2) {
                if !a[k].is_zero() && !a[n - k].is_zero() {
                    acc += &row[k] * &a[k] * &a[n - k];
                }
            }
            acc *= 2u32;
            if n % 2 == 0 {
                let h = n / 2;
                acc += &row[h] * &a[h] * &a[h];
            }
        } else {
            for k in 0..=n {
                if !a[k].is_zero() && !b[n - k].is_zero() {
                    acc += &row[k] * &a[k] * &b[n - k];
                }
            }
        }
        out.push(acc);
    }
    out
}

/// Reduces a sequence to its minimal order. Its declared order is a proven
/// bound, so `2d + 1` terms certify the fit.
fn minimal(seq: &CFiniteSequence) -> GuessResult {
    let d = seq.order();
    guess_with_proven_bound(&seq.terms(2 * d + 1), d).expect("declared order bounds the true order")
}

/// Derives the certified generating function of the convolution in `spec`.
pub fn derive_identity(spec: &ConvolutionSpec) -> Result<IdentityResult, ConvolutionError> {
    let a = minimal(&spec.a);
    let (b, operands) = match spec.kind {
        ConvolutionKind::SelfConvolution => (a.clone(), format!("{}", a.gf())),
        ConvolutionKind::Cross => {
            let b = minimal(&spec.b);
            let echo = format!("{}; {}", a.gf(), b.gf());
            (b, echo)
        }
    };
    let bound = conv_order_bound(a.order_found(), b.order_found(), spec.kind);
    let terms_generated = 2 * bound + 1 + spec.guard_terms;
    let terms = binomial_conv_terms(&a.sequence(), &b.sequence(), terms_generated);

    let gf = match guess_gf_with_polynomial_part(&terms, bound) {
        Ok(gf) => gf,
        Err(GuessError::NotFound { .. }) => return Err(ConvolutionError::BoundViolated { bound, terms }),
        Err(GuessError::InsufficientData { .. }) => unreachable!("2N + 1 + guard terms were generated"),
    };
    let expansion = gf.series(terms_generated);
    if let Some(index) = expansion.iter().zip(&terms).position(|(x, y)| x != y) {
        return Err(ConvolutionError::GuardMismatch { index, terms });
    }
    Ok(IdentityResult {
        order_found: gf.den_degree(),
        gf,
        order_bound: bound,
        terms_generated,
        guard_verified: spec.guard_terms,
        operands,
    })
}

/// Self binomial convolution of the sequence with generating function `r`.
pub fn self_convolution_identity(r: &RationalFunction, guard: usize) -> Result<IdentityResult, ConvolutionError> {
    let a = CFiniteSequence::from_gf(r)?;
    derive_identity(&ConvolutionSpec::self_of(a).with_guard(guard))
}

/// Binomial convolution of the sequences with generating functions `r1`, `r2`.
pub fn cross_convolution_identity(
    r1: &RationalFunction,
    r2: &RationalFunction,
    guard: usize,
) -> Result<IdentityResult, ConvolutionError> {
    let a = CFiniteSequence::from_gf(r1)?;
    let b = CFiniteSequence::from_gf(r2)?;
    derive_identity(&ConvolutionSpec::cross(a, b).with_guard(guard))
}
