//! Exact solution of integer linear systems by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::Rational;

/// Solves `a · x = b` for square, nonsingular `a` with integer entries.
///
/// Elimination is fraction-free: after step `k` every entry is a `(k+1)`-minor of the
/// augmented matrix, and each division by the previous pivot is exact. Only the final
/// back-substitution uses rationals.
pub fn solve_fraction_free(a: &[Vec<BigInt>], b: &[BigInt]) -> Result<Vec<Rational>> {
    let m = a.len();
    if b.len() != m || a.iter().any(|row| row.len() != m) {
        return Err(Error::OutOfRange(format!(
            "expected a square system of size {m}"
        )));
    }
    let mut rows: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..m {
        if rows[k][k].is_zero() {
            let swap = (k + 1..m)
                .find(|&i| !rows[i][k].is_zero())
                .ok_or_else(|| Error::Internal("singular matrix".into()))?;
            rows.swap(k, swap);
        }
        let (done, rest) = rows.split_at_mut(k + 1);
        let pivot_row = &done[k];
        let pivot = &pivot_row[k];
        rest.par_iter_mut().for_each(|row| {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..=m {
                let updated = &row[j] * pivot - &factor * &pivot_row[j];
                row[j] = updated / &prev;
            }
        });
        prev = rows[k][k].clone();
    }
    let mut x = vec![Rational::zero(); m];
    for i in (0..m).rev() {
        let mut acc = Rational::from_integer(rows[i][m].clone());
        for j in i + 1..m {
            if !rows[i][j].is_zero() {
                acc -= Rational::from_integer(rows[i][j].clone()) * &x[j];
            }
        }
        x[i] = acc / Rational::from_integer(rows[i][i].clone());
    }
    Ok(x)
}
