//! Closed-form counts: Catalan and refined Catalan numbers, Stirling and central factorial
//! numbers, minimal primitive factorizations, primitive factorizations of a full cycle,
//! and the Hurwitz counts of transitive factorizations.
//!
//! Everything here is exact. Formulas whose intermediate values are rational (negative
//! powers, sinh-series coefficients) check that the final value is a nonnegative integer
//! and report [`Error::Internal`] otherwise.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, pow_rational, pow_uint, rational_from_uint, to_natural};
use crate::error::{Error, Result};
use crate::partition::{refinement_sequences, Partition};
use crate::series::PowerSeries;
use crate::Rational;

/// A count together with the name of the method that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub value: BigUint,
    pub method: &'static str,
}

impl CountResult {
    pub fn new(value: BigUint, method: &'static str) -> Self {
        CountResult { value, method }
    }
}

/// `Cat_k = C(2k, k) / (k + 1)`.
pub fn catalan(k: usize) -> BigUint {
    binomial(2 * k, k) / (k + 1)
}

/// A weakly increasing sequence `i_1 ≤ … ≤ i_k` with `i_p ≥ p` for `p < k` and `i_k = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalanSequence {
    pub values: Vec<usize>,
    /// Multiplicities of the distinct values, as a partition of `k`.
    pub seq_type: Partition,
}

/// All sequences counted by `Cat_k`, in lexicographic order. For `k = 0` this is the
/// single empty sequence.
pub fn catalan_sequences(k: usize) -> Vec<CatalanSequence> {
    fn go(k: usize, current: &mut Vec<usize>, out: &mut Vec<CatalanSequence>) {
        let p = current.len() + 1;
        if p > k {
            let mut mult = Vec::new();
            for run in current.chunk_by(|a, b| a == b) {
                mult.push(run.len());
            }
            out.push(CatalanSequence {
                values: current.clone(),
                seq_type: Partition::new(mult).expect("run lengths are positive"),
            });
            return;
        }
        let low = current.last().copied().unwrap_or(1).max(p);
        let candidates = if p == k { k..=k } else { low..=k };
        for v in candidates {
            if v < low {
                continue;
            }
            current.push(v);
            go(k, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Refined Catalan number `RC(λ) = |λ|! / ((|λ| − ℓ(λ) + 1)! ∏ m_i(λ)!)`; `RC(∅) = 1`.
pub fn refined_catalan(lambda: &Partition) -> BigUint {
    let k = lambda.size();
    let l = lambda.len();
    let denom = lambda
        .multiplicities()
        .values()
        .fold(factorial(k + 1 - l), |acc, &m| acc * factorial(m));
    factorial(k) / denom
}

fn check_triangle(a: usize, b: usize) -> Result<()> {
    if b > a {
        return Err(Error::OutOfRange(format!(
            "need b ≤ a, got a = {a}, b = {b}"
        )));
    }
    Ok(())
}

/// Fills the triangle `T(i, j) = T(i−1, j−1) + w(j) T(i−1, j)` up to row `a`, column `b`.
fn weighted_triangle(a: usize, b: usize, weight: impl Fn(usize) -> u64) -> BigUint {
    let mut row = vec![BigUint::zero(); b + 1];
    row[0] = BigUint::one();
    for _ in 1..=a {
        for j in (1..=b).rev() {
            let stay = &row[j] * weight(j);
            row[j] = &row[j - 1] + stay;
        }
        row[0] = BigUint::zero();
    }
    row.swap_remove(b)
}

/// Stirling number of the second kind `S(a, b)`.
pub fn stirling(a: usize, b: usize) -> Result<BigUint> {
    check_triangle(a, b)?;
    Ok(weighted_triangle(a, b, |j| j as u64))
}

/// Central factorial number `T(a, b) = h_{a−b}(1², …, b²)`.
pub fn central_factorial(a: usize, b: usize) -> Result<BigUint> {
    check_triangle(a, b)?;
    Ok(weighted_triangle(a, b, |j| (j * j) as u64))
}

/// Minimal primitive factorizations of type `lambda` of a permutation with reduced cycle
/// type `reduced_mu`: the sum over refinement sequences of products of refined Catalans.
pub fn minimal_primitive_by_type(reduced_mu: &Partition, lambda: &Partition) -> Result<BigUint> {
    let seqs = refinement_sequences(lambda, reduced_mu)?;
    Ok(seqs
        .iter()
        .map(|s| {
            s.blocks
                .iter()
                .fold(BigUint::one(), |acc, b| acc * refined_catalan(b))
        })
        .sum())
}

/// Total number of minimal primitive factorizations of a permutation of (non-reduced)
/// cycle type `mu`: `∏ Cat_{μ_i − 1}`.
pub fn minimal_primitive_total(mu: &Partition) -> BigUint {
    mu.parts()
        .iter()
        .fold(BigUint::one(), |acc, &p| acc * catalan(p - 1))
}

/// Primitive factorizations of an `n`-cycle into `n − 1 + 2g` transpositions:
/// `Cat_{n−1} · T(n − 1 + g, n − 1)`.
pub fn primitive_full_cycle(n: usize, g: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    Ok(catalan(n - 1) * central_factorial(n - 1 + g, n - 1)?)
}

fn integral(q: Rational, what: &str) -> Result<BigUint> {
    to_natural(&q).ok_or_else(|| {
        Error::Internal(format!(
            "{what} evaluated to {q}, not a nonnegative integer"
        ))
    })
}

/// Minimal transitive factorizations of a permutation of cycle type `mu ⊢ n`:
/// `(n + ℓ − 2)! · n^{ℓ−3} · ∏ μ_i^{μ_i} / (μ_i − 1)!`.
pub fn hurwitz_minimal_transitive(mu: &Partition) -> Result<BigUint> {
    let n = mu.size();
    let l = mu.len();
    if n == 0 {
        return Err(Error::OutOfRange(
            "cycle type must be a partition of n ≥ 1".into(),
        ));
    }
    let mut value = rational_from_uint(&factorial(n + l - 2));
    value *= pow_rational(&Rational::from_integer(n.into()), l as i64 - 3);
    for &p in mu.parts() {
        value *= rational_from_uint(&pow_uint(p, p));
        value /= rational_from_uint(&factorial(p - 1));
    }
    integral(value, "the Hurwitz formula")
}

/// `(2g)! · [z^{2g}] (sinh(z/2) / (z/2))^m`.
pub fn sinh_power_coefficient(m: usize, g: usize) -> Rational {
    let order = 2 * g;
    let series = PowerSeries::sinh_half_ratio(order).pow(m);
    series.coefficient(order) * rational_from_uint(&factorial(order))
}

/// All (transitive) factorizations of an `n`-cycle into `n − 1 + 2g` transpositions:
/// `n^{n−2} · n^{2g} · C(n − 1 + 2g, n − 1) · (2g)! [z^{2g}] (sinh(z/2)/(z/2))^{n−1}`.
pub fn hurwitz_full_cycle_genus(n: usize, g: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let nq = Rational::from_integer(n.into());
    let value = pow_rational(&nq, n as i64 - 2 + 2 * g as i64)
        * rational_from_uint(&binomial(n - 1 + 2 * g, n - 1))
        * sinh_power_coefficient(n - 1, g);
    integral(value, "the full-cycle Hurwitz series")
}

/// The sinh-series form of the primitive full-cycle count:
/// `Cat_{n−1} · C(2n − 2 + 2g, 2n − 2) · (2g)! [z^{2g}] (sinh(z/2)/(z/2))^{2n−2}`.
pub fn primitive_full_cycle_sinh(n: usize, g: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let value = rational_from_uint(&(catalan(n - 1) * binomial(2 * n - 2 + 2 * g, 2 * n - 2)))
        * sinh_power_coefficient(2 * n - 2, g);
    integral(value, "the primitive sinh series")
}
