//! Exact algebra for C-finite sequences and their binomial convolutions.
//!
//! Everything here works over the rationals backed by arbitrary-precision
//! integers. The pipeline is:
//!
//! * [`ratcore`]: polynomials and rational functions with a canonical
//!   `den(0) = 1` form, plus a text syntax for both.
//! * [`cfseq`]: recurrences with constant coefficients and the bridge to
//!   rational generating functions.
//! * [`guess`]: minimal-recurrence fitting from a finite prefix of terms.
//! * [`convolve`]: binomial convolutions and their certified generating
//!   functions, derived from an a-priori order bound and a guessed fit.
//! * [`families`]: k-bonacci numbers and a few named sequences.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cfseq;
pub mod convolve;
pub mod families;
pub mod guess;
pub mod ratcore;

pub use cfseq::{CFiniteSequence, Recurrence, SequenceError};
pub use convolve::{
    binomial_conv_terms, conv_order_bound, cross_convolution_identity, derive_identity, self_convolution_identity,
    ConvolutionError, ConvolutionKind, ConvolutionSpec, IdentityResult,
};
pub use families::{kbonacci, kbonacci_gf, named_sequence, FamilyError, NAMED_SEQUENCES};
pub use guess::{guess_gf, guess_recurrence, guess_with_proven_bound, Fitted, GuessError, GuessResult};
pub use ratcore::{AlgebraError, ParseError, Polynomial, Rational, RationalFunction};
