//! Fraction-free Berlekamp-Massey over the integers.
//!
//! Rational data is scaled to integers first (scaling a sequence does not
//! change the recurrences it satisfies). The connection polynomial is kept
//! primitive: after each update its content is divided out, so coefficients
//! stay the size of the Hankel minors instead of growing with every step.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Shortest linear feedback relation of a sequence.
///
/// `connection[0] * s(n) + connection[1] * s(n-1) + ... = 0` holds for every
/// `n >= complexity` within the window. Trailing zeros are trimmed, so the
/// connection degree may be below `complexity`; that happens exactly when the
/// generating function is not a proper fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    pub connection: Vec<BigInt>,
    pub complexity: usize,
}

pub fn berlekamp_massey(seq: &[BigInt]) -> Connection {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    let mut b: Vec<BigInt> = vec![BigInt::one()];
    let mut b_disc = BigInt::one();
    let mut l = 0usize;
    let mut m = 1usize;

    for i in 0..seq.len() {
        let mut d = BigInt::zero();
        for (j, cj) in c.iter().enumerate().take(i + 1) {
            if !cj.is_zero() && !seq[i - j].is_zero() {
                d += cj * &seq[i - j];
            }
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        // next = b_disc * c - d * x^m * b, whose discrepancy at i vanishes.
        let mut next: Vec<BigInt> = c.iter().map(|v| v * &b_disc).collect();
        if next.len() < b.len() + m {
            next.resize(b.len() + m, BigInt::zero());
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                next[j + m] -= &d * bj;
            }
        }
        trim(&mut next);
        make_primitive(&mut next);
        if 2 * l <= i {
            b = core::mem::replace(&mut c, next);
            b_disc = d;
            l = i + 1 - l;
            m = 1;
        } else {
            c = next;
            m += 1;
        }
    }
    trim(&mut c);
    Connection { connection: c, complexity: l }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Divides out the content and makes the constant coefficient positive.
fn make_primitive(v: &mut [BigInt]) {
    if v.first().is_some_and(Signed::is_negative) {
        for x in v.iter_mut() {
            *x = -core::mem::take(x);
        }
    }
    let g = content(v);
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

/// Gcd of all entries. Starts from the smallest entry and reduces each
/// further entry modulo the running gcd before any gcd step, so most
/// entries cost a single division.
fn content(v: &[BigInt]) -> BigInt {
    let Some(start) = v.iter().filter(|x| !x.is_zero()).min_by_key(|x| x.bits()) else {
        return BigInt::zero();
    };
    let mut g = start.abs();
    for x in v {
        if g.is_one() {
            break;
        }
        if x.is_zero() {
            continue;
        }
        let r = x % &g;
        if !r.is_zero() {
            g = g.gcd(&r);
        }
    }
    g
}
