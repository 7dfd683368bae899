//! Irreducible characters of `S(n)` and the character-side route to primitive counts.
//!
//! Characters come from the Murnaghan-Nakayama rule, implemented on beta-sets: removing a
//! border strip of length `r` from `λ` is moving one bead of the beta-set down by `r` onto
//! an empty position, with sign `(−1)^{beads jumped}`.
//!
//! For a symmetric function `f`, the central element `f(J_1, …, J_n)` has character
//! expansion `Σ_λ f(A_λ)/H_λ · χ^λ`, where `A_λ` is the multiset of contents of `λ`.
//! Taking the coefficient of a permutation of type `μ` gives
//! `Σ_λ f(A_λ) χ^λ(μ) / H_λ`, see [`class_resolution_via_characters`].

mod generating;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::class_algebra::ClassResolution;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::Rational;

pub use generating::{phi_full_cycle_closed, phi_rational, phi_series, phi_value};

/// `χ^λ(C_μ)`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: mu.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(murnaghan_nakayama(lambda.parts(), mu.parts(), 0, &mut memo))
}

type Memo = HashMap<(Vec<usize>, usize), i64>;

fn murnaghan_nakayama(lambda: &[usize], mu: &[usize], pos: usize, memo: &mut Memo) -> i64 {
    if pos == mu.len() {
        return lambda.is_empty() as i64;
    }
    let key = (lambda.to_vec(), pos);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[pos];
    let rows = lambda.len();
    // Beta-set, strictly decreasing.
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + rows - 1 - i)
        .collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let smaller: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (rows - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&smaller, mu, pos + 1, memo);
    }
    memo.insert(key, total);
    total
}

/// `χ^{(n−r, 1^r)}(C_μ)`. On the class of an `n`-cycle this is `(−1)^r`.
pub fn hook_character(n: usize, r: usize, mu: &Partition) -> Result<i64> {
    let hook = Partition::hook(n, r)?;
    if mu.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: mu.size(),
        });
    }
    if mu.parts() == [n] {
        return Ok(if r.is_multiple_of(2) { 1 } else { -1 });
    }
    character(&hook, mu)
}

/// The full table `χ^λ(C_μ)` for `λ, μ ⊢ n`, rows and columns in [`partitions_of`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    degree: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = partitions_of(n);
        let values = partitions
            .iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|mu| character(lambda, mu).expect("sizes agree"))
                    .collect()
            })
            .collect();
        CharacterTable {
            degree: n,
            partitions,
            values,
        }
    }

    /// The shared table for `S(n)`, built on first use.
    pub fn shared(n: usize) -> Arc<CharacterTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(&n) {
            return Arc::clone(t);
        }
        let table = Arc::new(CharacterTable::new(n));
        Arc::clone(cache.lock().unwrap().entry(n).or_insert(table))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    fn index(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        Some(self.values[self.index(lambda)?][self.index(mu)?])
    }

    /// Column of class `mu`: `λ ↦ χ^λ(C_μ)`.
    pub fn column(&self, mu: &Partition) -> Option<Vec<i64>> {
        let j = self.index(mu)?;
        Some(self.values.iter().map(|row| row[j]).collect())
    }
}

/// A symmetric function that can be specialized at an alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SymmetricFunction {
    /// `h_k`, the sum of all monomials of degree `k`.
    Complete(usize),
    /// `m_λ`, the sum of all distinct monomials with exponent multiset `λ`.
    Monomial(Partition),
}

impl SymmetricFunction {
    pub fn degree(&self) -> usize {
        match self {
            SymmetricFunction::Complete(k) => *k,
            SymmetricFunction::Monomial(l) => l.size(),
        }
    }

    /// Value at a finite integer alphabet (remaining variables are zero).
    pub fn evaluate(&self, alphabet: &[i64]) -> BigInt {
        match self {
            SymmetricFunction::Complete(k) => complete_values(alphabet, *k).swap_remove(*k),
            SymmetricFunction::Monomial(lambda) => monomial_value(alphabet, lambda),
        }
    }
}

impl std::fmt::Display for SymmetricFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SymmetricFunction::Complete(k) => write!(f, "h_{k}"),
            SymmetricFunction::Monomial(l) => write!(f, "m_({l})"),
        }
    }
}

/// `[h_0, h_1, …, h_max]` evaluated at `alphabet`.
pub(crate) fn complete_values(alphabet: &[i64], max: usize) -> Vec<BigInt> {
    let mut h = vec![BigInt::zero(); max + 1];
    h[0] = BigInt::one();
    for &x in alphabet.iter().filter(|&&x| x != 0) {
        for j in 1..=max {
            let prev = &h[j - 1] * x;
            h[j] += prev;
        }
    }
    h
}

fn monomial_value(alphabet: &[i64], lambda: &Partition) -> BigInt {
    let vars: Vec<i64> = alphabet.iter().copied().filter(|&x| x != 0).collect();
    let mult: Vec<(usize, usize)> = lambda.multiplicities().into_iter().collect();
    let radices: Vec<usize> = mult.iter().map(|&(_, m)| m + 1).collect();
    let states: usize = radices.iter().product();
    let mut stride = Vec::with_capacity(radices.len());
    let mut acc = 1;
    for r in &radices {
        stride.push(acc);
        acc *= r;
    }
    // value[state] = sum over ways of placing the already-used parts on the variables seen.
    let mut value = vec![BigInt::zero(); states];
    value[states - 1] = BigInt::one();
    for &x in &vars {
        let mut next = value.clone();
        for (state, v) in value.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (i, &(part, _)) in mult.iter().enumerate() {
                if (state / stride[i]) % radices[i] > 0 {
                    next[state - stride[i]] += v * num_traits::pow(BigInt::from(x), part);
                }
            }
        }
        value = next;
    }
    value.swap_remove(0)
}

/// `f(A_λ)`: the symmetric function evaluated on the contents of `shape`.
pub fn evaluate_on_contents(f: &SymmetricFunction, shape: &Partition) -> Rational {
    Rational::from_integer(f.evaluate(&shape.contents()))
}

/// `μ ↦ Σ_λ f(A_λ) χ^λ(C_μ) / H_λ`, the class-sum coordinates of `f(J_1, …, J_n)`.
pub fn class_resolution_via_characters(f: &SymmetricFunction, n: usize) -> ClassResolution {
    let table = CharacterTable::shared(n);
    // Per-shape weights f(A_λ)/H_λ, computed in parallel and kept in table order.
    let weights: Vec<Rational> = table
        .partitions()
        .par_iter()
        .map(|lambda| {
            evaluate_on_contents(f, lambda)
                / Rational::from_integer(BigInt::from(lambda.hook_product()))
        })
        .collect();
    let entries = table
        .partitions()
        .iter()
        .map(|mu| {
            let column = table.column(mu).expect("mu is in the table");
            let value = weights
                .iter()
                .zip(column)
                .filter(|(_, chi)| *chi != 0)
                .map(|(w, chi)| w * Rational::from_integer(chi.into()))
                .sum();
            (mu.clone(), value)
        })
        .collect();
    ClassResolution { degree: n, entries }
}
