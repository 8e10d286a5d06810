//! Slow reference fitter: exact kernel of the Hankel-type system by
//! fraction-free (Bareiss) elimination, one candidate order at a time.
//!
//! Cubic per order and only used to cross-check the Berlekamp-Massey path.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ratcore::Rational;

/// Fraction-free row echelon form in place; returns the pivot columns.
pub fn bareiss_echelon(m: &mut [Vec<BigInt>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(p, r);
        for i in r + 1..rows {
            for j in col + 1..cols {
                let v = &m[r][col] * &m[i][j] - &m[i][col] * &m[r][j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                m[i][j] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Kernel of an integer matrix with `cols` columns, as rational basis vectors.
pub fn kernel(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<Rational>> {
    let pivots = bareiss_echelon(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (k, &p) in pivots.iter().enumerate().rev() {
                let mut acc = Rational::zero();
                for j in p + 1..cols {
                    if !m[k][j].is_zero() && !v[j].is_zero() {
                        acc += Rational::from_integer(m[k][j].clone()) * &v[j];
                    }
                }
                v[p] = -acc / Rational::from_integer(m[k][p].clone());
            }
            v
        })
        .collect()
}

/// Recurrence coefficients `[c_1..c_d]` of order exactly `order` that hold on
/// every index `n >= order` of `data`, if the solution is unique.
pub fn fit_order(data: &[BigInt], order: usize) -> Option<Vec<Rational>> {
    if data.len() <= order {
        return None;
    }
    let m: Vec<Vec<BigInt>> = (order..data.len()).map(|n| (0..=order).map(|j| data[n - j].clone()).collect()).collect();
    let basis = kernel(m, order + 1);
    let [v] = basis.as_slice() else { return None };
    if v[0].is_zero() || v[order].is_zero() {
        return None;
    }
    Some(v[1..].iter().map(|vi| -(vi / &v[0])).collect())
}
