//! Named sequence families.

use alloc::vec;

use crate::cfseq::{CFiniteSequence, Recurrence};
use crate::ratcore::{rat, Polynomial, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("k-bonacci index must be at least 1, got {0}")]
    InvalidK(i64),
    /// `x/(1-x)` is not a proper fraction: `0, 1, 1, 1, ...` only follows
    /// its recurrence from `n = 2`, so it has no recurrence-plus-initials form.
    #[error("the 1-bonacci generating function x/(1 - x) is improper; use its generating function directly")]
    ImproperMember,
    #[error("unknown sequence '{name}'; available: {}", NAMED_SEQUENCES.join(", "))]
    UnknownName { name: alloc::string::String },
}

pub const NAMED_SEQUENCES: &[&str] = &["fibonacci", "lucas", "tribonacci", "pell", "jacobsthal"];

/// `x / (1 - x - x^2 - ... - x^k)` for `k >= 1`.
pub fn kbonacci_gf(k: i64) -> Result<RationalFunction, FamilyError> {
    if k < 1 {
        return Err(FamilyError::InvalidK(k));
    }
    let mut den = vec![rat(-1); k as usize + 1];
    den[0] = rat(1);
    Ok(RationalFunction::normalize(Polynomial::x(), Polynomial::new(den)).expect("constant term 1"))
}

/// The k-bonacci numbers as a recurrence of order `k` with all coefficients 1.
///
/// Initial terms are read off the generating function: `0, 1, 1, 2, 4, ...,
/// 2^(k-2)`. Defined for `k >= 2`; see [`FamilyError::ImproperMember`].
pub fn kbonacci(k: i64) -> Result<CFiniteSequence, FamilyError> {
    let gf = kbonacci_gf(k)?;
    if k == 1 {
        return Err(FamilyError::ImproperMember);
    }
    let k = k as usize;
    let recurrence = Recurrence::new(vec![rat(1); k]).expect("nonzero coefficients");
    Ok(CFiniteSequence::new(recurrence, gf.series(k)).expect("k initial terms"))
}

pub fn named_sequence(name: &str) -> Result<CFiniteSequence, FamilyError> {
    let (coeffs, initial): (&[i64], &[i64]) = match name.to_ascii_lowercase().as_str() {
        "fibonacci" => (&[1, 1], &[0, 1]),
        "lucas" => (&[1, 1], &[2, 1]),
        "tribonacci" => return kbonacci(3),
        "pell" => (&[2, 1], &[0, 1]),
        "jacobsthal" => (&[1, 2], &[0, 1]),
        _ => return Err(FamilyError::UnknownName { name: name.into() }),
    };
    Ok(CFiniteSequence::from_ints(coeffs, initial).expect("registry entries are well formed"))
}
