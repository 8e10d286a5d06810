//! Text syntax for polynomials and rational functions.
//!
//! Terms are `c`, `c*x^k`, `x^k` or `x`, joined by `+`/`-`; constants may be
//! rationals `p/q`. A rational function is `num/(den)`, where a numerator with
//! more than one term must be parenthesized. Whitespace is ignored.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Polynomial, Rational, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("at position {position}: expected {expected}, found {found}")]
    Unexpected { position: usize, expected: &'static str, found: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, expected: &'static str) -> ParseError {
        let found = match self.src.get(self.pos) {
            None => "end of input".to_string(),
            Some(&b) => format!("'{}'", b as char),
        };
        ParseError::Unexpected { position: self.pos, expected, found }
    }

    fn expect(&mut self, byte: u8, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("end of input")),
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("digit"));
        }
        Ok(core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    /// Lookahead past whitespace at `from` for a digit.
    fn digit_at(&self, mut from: usize) -> bool {
        while self.src.get(from).is_some_and(u8::is_ascii_whitespace) {
            from += 1;
        }
        self.src.get(from).is_some_and(u8::is_ascii_digit)
    }

    fn number(&mut self) -> Result<Rational, ParseError> {
        let numer: BigInt = self.digits()?.parse().expect("digits parse as integer");
        if self.peek() == Some(b'/') && self.digit_at(self.pos + 1) {
            self.pos += 1;
            let at = self.pos;
            let denom: BigInt = self.digits()?.parse().expect("digits parse as integer");
            if denom.is_zero() {
                self.pos = at;
                return Err(self.error("nonzero denominator"));
            }
            return Ok(Rational::new(numer, denom));
        }
        Ok(Rational::from_integer(numer))
    }

    /// `x` or `x^k`, after the `x` has been seen.
    fn power(&mut self) -> Result<usize, ParseError> {
        self.expect(b'x', "'x'")?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let k = self.digits()?;
            return k.parse().map_err(|_| {
                self.pos = at;
                self.error("exponent that fits in usize")
            });
        }
        Ok(1)
    }

    fn term(&mut self) -> Result<(Rational, usize), ParseError> {
        match self.peek() {
            Some(b'x') => Ok((Rational::one(), self.power()?)),
            Some(b) if b.is_ascii_digit() => {
                let c = self.number()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    Ok((c, self.power()?))
                } else {
                    Ok((c, 0))
                }
            }
            _ => Err(self.error("number or 'x'")),
        }
    }

    /// A signed sum of terms; returns the polynomial and the term count.
    fn polynomial(&mut self) -> Result<(Polynomial, usize), ParseError> {
        let mut acc: Vec<Rational> = Vec::new();
        let mut count = 0;
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (c, k) = self.term()?;
            if acc.len() <= k {
                acc.resize(k + 1, Rational::zero());
            }
            if negative {
                acc[k] -= c;
            } else {
                acc[k] += c;
            }
            count += 1;
            negative = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => break,
            };
            self.pos += 1;
        }
        Ok((Polynomial::new(acc), count))
    }

    fn parenthesized(&mut self) -> Result<Polynomial, ParseError> {
        self.expect(b'(', "'('")?;
        let (p, _) = self.polynomial()?;
        self.expect(b')', "')'")?;
        Ok(p)
    }

    fn rational_function(&mut self) -> Result<RationalFunction, ParseError> {
        let num = if self.peek() == Some(b'(') {
            self.parenthesized()?
        } else {
            let start = self.pos;
            let (p, terms) = self.polynomial()?;
            if terms > 1 && self.peek() == Some(b'/') {
                self.pos = start;
                return Err(self.error("parenthesized numerator before '/'"));
            }
            p
        };
        if self.peek() != Some(b'/') {
            self.expect_end()?;
            return Ok(RationalFunction::from_polynomial(num));
        }
        self.pos += 1;
        let den = if self.peek() == Some(b'(') {
            self.parenthesized()?
        } else {
            let (c, k) = self.term()?;
            Polynomial::monomial(c, k)
        };
        self.expect_end()?;
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero.into());
        }
        Ok(RationalFunction::normalize(num, den)?)
    }
}

impl FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut parser = Parser::new(s);
        let (p, _) = parser.polynomial()?;
        parser.expect_end()?;
        Ok(p)
    }
}

impl FromStr for RationalFunction {
    type Err = ParseError;

    /// Parses `num/(den)` and normalizes it.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        Parser::new(s).rational_function()
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &Rational, k: usize, first: bool) -> fmt::Result {
    let sign = if c.is_negative() { "-" } else { "+" };
    if first {
        if c.is_negative() {
            f.write_str("-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let mag = c.abs();
    match k {
        0 => write!(f, "{mag}"),
        _ => {
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if k == 1 {
                f.write_str("x")
            } else {
                write!(f, "x^{k}")
            }
        }
    }
}

impl fmt::Display for Polynomial {
    /// Ascending degree, e.g. `1 - 3*x - 2*x^2 + 4*x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, k, first)?;
            first = false;
        }
        Ok(())
    }
}

fn term_count(p: &Polynomial) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den().is_one() {
            return write!(f, "{}", self.num());
        }
        if term_count(self.num()) > 1 {
            write!(f, "({})/({})", self.num(), self.den())
        } else {
            write!(f, "{}/({})", self.num(), self.den())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::rat;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn prints_ascending_form() {
        assert_eq!(p(&[1, -3, -2, 4]).to_string(), "1 - 3*x - 2*x^2 + 4*x^3");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "-x + x^3");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let half = Polynomial::new(alloc::vec![rat(0), Rational::new((-1).into(), 2.into())]);
        assert_eq!(half.to_string(), "-1/2*x");
    }

    #[test]
    fn parses_terms() {
        assert_eq!("1-x-x^2-x^3".parse::<Polynomial>().unwrap(), p(&[1, -1, -1, -1]));
        assert_eq!(" 2*x^2 + x - x ".parse::<Polynomial>().unwrap(), p(&[0, 0, 2]));
        assert_eq!("-1/2*x + 1/2*x".parse::<Polynomial>().unwrap(), Polynomial::zero());
        assert_eq!("x^10".parse::<Polynomial>().unwrap().degree(), Some(10));
    }

    #[test]
    fn parses_rational_functions() {
        let f: RationalFunction = "x/(1-x-x^2-x^3)".parse().unwrap();
        assert_eq!(f.num(), &p(&[0, 1]));
        assert_eq!(f.den(), &p(&[1, -1, -1, -1]));
        let g: RationalFunction = "2*x^2/(1 - 3*x - 2*x^2 + 4*x^3)".parse().unwrap();
        assert_eq!(g.to_string(), "2*x^2/(1 - 3*x - 2*x^2 + 4*x^3)");
        let h: RationalFunction = "(x - x^2)/(1 - x)".parse().unwrap();
        assert_eq!(h.to_string(), "x");
        let k: RationalFunction = "1/2".parse().unwrap();
        assert_eq!(k.num(), &Polynomial::constant(Rational::new(1.into(), 2.into())));
        let m: RationalFunction = "x/(2-2*x)".parse().unwrap();
        assert_eq!(m.to_string(), "1/2*x/(1 - x)");
        assert_eq!("1/2*x/(1 - x)".parse::<RationalFunction>().unwrap(), m);
    }

    #[test]
    fn reports_position_and_expectation() {
        match "1 + * x".parse::<Polynomial>() {
            Err(ParseError::Unexpected { position, expected, .. }) => {
                assert_eq!(position, 4);
                assert_eq!(expected, "number or 'x'");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!("x^".parse::<Polynomial>(), Err(ParseError::Unexpected { expected: "digit", .. })));
        assert!(matches!(
            "1/0".parse::<Polynomial>(),
            Err(ParseError::Unexpected { expected: "nonzero denominator", .. })
        ));
        assert!(matches!("1 + x/(1-x)".parse::<RationalFunction>(), Err(ParseError::Unexpected { position: 0, .. })));
        assert_eq!("1/(x)".parse::<RationalFunction>(), Err(ParseError::Algebra(AlgebraError::NoSeriesExpansion)));
        assert!(matches!("x/(1-x".parse::<RationalFunction>(), Err(ParseError::Unexpected { expected: "')'", .. })));
    }
}
