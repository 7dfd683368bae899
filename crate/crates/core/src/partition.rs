//! Integer partitions, Young-diagram statistics and refinement sequences.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::factorial;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` into weakly decreasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `(n)`; empty for `n = 0`.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(n − r, 1^r)`; requires `r < n`.
    pub fn hook(n: usize, r: usize) -> Result<Self> {
        if r >= n {
            return Err(Error::OutOfRange(format!("hook leg {r} must be below {n}")));
        }
        let mut parts = vec![n - r];
        parts.extend(std::iter::repeat_n(1, r));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i ↦ m_i(λ)`, the multiplicity of each distinct part.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Subtracts one from every part and drops the zeros.
    pub fn reduced(&self) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .filter(|&&p| p > 1)
                .map(|p| p - 1)
                .collect(),
        }
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..width)
                .map(|col| self.parts.iter().take_while(|&&p| p > col).count())
                .collect(),
        }
    }

    /// Hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (row, &len) in self.parts.iter().enumerate() {
            for col in 0..len {
                let arm = len - col - 1;
                let leg = conj.parts[col] - row - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// `H_λ`, the product of all hook lengths; 1 for the empty diagram.
    pub fn hook_product(&self) -> BigUint {
        self.hook_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, h| acc * h)
    }

    /// Contents `column − row` of the cells, row by row.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.size());
        for (row, &len) in self.parts.iter().enumerate() {
            for col in 0..len {
                out.push(col as i64 - row as i64);
            }
        }
        out
    }

    /// Number of standard Young tableaux, `|λ|! / H_λ`.
    pub fn dimension(&self) -> BigUint {
        factorial(self.size()) / self.hook_product()
    }

    /// `z_μ = ∏ i^{m_i} m_i!`, the order of the centralizer of a permutation of type `μ`.
    pub fn centralizer_order(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .fold(BigUint::one(), |acc, (i, m)| {
                acc * num_traits::pow(BigUint::from(i), m) * factorial(m)
            })
    }

    /// Number of permutations with this cycle type, `n! / z_μ`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size()) / self.centralizer_order()
    }

    /// Whether `other` is contained in `self` as a multiset of parts.
    pub fn contains_parts(&self, other: &Partition) -> bool {
        let mine = self.multiplicities();
        other
            .multiplicities()
            .iter()
            .all(|(p, m)| mine.get(p).is_some_and(|have| have >= m))
    }
}

/// All partitions of `k` in reverse lexicographic order, starting with `(k)`.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_rec(k, k, &mut current, &mut out);
    out
}

fn partitions_rec(
    remaining: usize,
    max: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop();
    }
}

/// An ordered tuple `(λ^(1), …, λ^(ℓ(μ)))` with `λ^(i) ⊢ μ_i` whose union is `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RefinementSequence {
    pub blocks: Vec<Partition>,
}

impl fmt::Display for RefinementSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({b})")?;
        }
        write!(f, ")")
    }
}

/// Every way of breaking the parts of `coarse` into partitions whose union is `fine`.
///
/// Slots follow the order of `coarse`'s parts, so equal parts of `coarse` give distinct
/// slots. The result is empty exactly when `fine` does not refine `coarse`.
pub fn refinement_sequences(
    fine: &Partition,
    coarse: &Partition,
) -> Result<Vec<RefinementSequence>> {
    if fine.size() != coarse.size() {
        return Err(Error::SizeMismatch {
            expected: coarse.size(),
            found: fine.size(),
        });
    }
    let mut out = Vec::new();
    let mut blocks = Vec::with_capacity(coarse.len());
    refine_rec(fine.multiplicities(), coarse.parts(), &mut blocks, &mut out);
    Ok(out)
}

fn refine_rec(
    remaining: BTreeMap<usize, usize>,
    coarse: &[usize],
    blocks: &mut Vec<Partition>,
    out: &mut Vec<RefinementSequence>,
) {
    let Some((&first, rest)) = coarse.split_first() else {
        if remaining.values().all(|&m| m == 0) {
            out.push(RefinementSequence {
                blocks: blocks.clone(),
            });
        }
        return;
    };
    for candidate in partitions_of(first) {
        let mut left = remaining.clone();
        let fits = candidate.parts.iter().all(|p| match left.get_mut(p) {
            Some(m) if *m > 0 => {
                *m -= 1;
                true
            }
            _ => false,
        });
        if fits {
            blocks.push(candidate);
            refine_rec(left, rest, blocks, out);
            blocks.pop();
        }
    }
}

/// Comma-separated parts, or `∅` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let text = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{text}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Accepts `"5,3"` in any order (the parts are sorted); `""` and `"∅"` give the empty
/// partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
