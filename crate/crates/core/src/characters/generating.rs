//! The generating functions `Φ_μ(z) = Σ_k a_{k,μ} z^k`.
//!
//! Each shape contributes `χ^λ(C_μ) / (H_λ ∏_{□∈λ} (1 − c(□) z))`. The series path expands
//! every contribution to a fixed order using `h_j(A_λ)` directly; the rational path adds
//! the contributions as reduced rational functions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{complete_values, CharacterTable};
use crate::arith::rational_from_uint;
use crate::counting::catalan;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{Polynomial, RationalFunction};
use crate::series::PowerSeries;
use crate::Rational;

fn column(mu: &Partition) -> Result<(std::sync::Arc<CharacterTable>, Vec<i64>)> {
    let table = CharacterTable::shared(mu.size());
    let col = table
        .column(mu)
        .ok_or_else(|| Error::Internal(format!("class {mu} missing from character table")))?;
    Ok((table, col))
}

/// `a_{0,μ}, …, a_{K,μ}` as a truncated power series of order `order`.
pub fn phi_series(mu: &Partition, order: usize) -> Result<PowerSeries> {
    let (table, col) = column(mu)?;
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (lambda, chi) in table.partitions().iter().zip(col) {
        if chi == 0 {
            continue;
        }
        let weight =
            Rational::from_integer(chi.into()) / rational_from_uint(&lambda.hook_product());
        for (slot, h) in coeffs
            .iter_mut()
            .zip(complete_values(&lambda.contents(), order))
        {
            *slot += &weight * Rational::from_integer(h);
        }
    }
    Ok(PowerSeries::from_coefficients(coeffs, order))
}

/// `Φ_μ(z)` as a reduced rational function.
pub fn phi_rational(mu: &Partition) -> Result<RationalFunction> {
    let (table, col) = column(mu)?;
    let mut total = RationalFunction::zero();
    for (lambda, chi) in table.partitions().iter().zip(col) {
        if chi == 0 {
            continue;
        }
        let den = lambda
            .contents()
            .into_iter()
            .fold(Polynomial::constant(Rational::one()), |acc, c| {
                &acc * &Polynomial::from_integers(&[1, -c])
            });
        let weight =
            Rational::from_integer(chi.into()) / rational_from_uint(&lambda.hook_product());
        let term = RationalFunction::new(Polynomial::constant(weight), den)?;
        total = &total + &term;
    }
    Ok(total)
}

/// `Φ_μ` evaluated at a rational point; fails at a pole.
pub fn phi_value(mu: &Partition, z: &Rational) -> Result<Rational> {
    phi_rational(mu)?
        .eval(z)
        .ok_or_else(|| Error::OutOfRange(format!("Φ_({mu}) has a pole at z = {z}")))
}

/// `Cat_{n−1} z^{n−1} / ∏_{i=1}^{n−1} (1 − i² z²)`.
pub fn phi_full_cycle_closed(n: usize) -> Result<RationalFunction> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let num = Polynomial::monomial(Rational::from_integer(BigInt::from(catalan(n - 1))), n - 1);
    let den = (1..n as i64).fold(Polynomial::constant(Rational::one()), |acc, i| {
        &acc * &Polynomial::from_integers(&[1, 0, -i * i])
    });
    RationalFunction::new(num, den)
}
