//! Permutations of `{1, …, n}` and transpositions.
//!
//! Products are function composition: `p.compose(&q)` maps `i ↦ p(q(i))`, so the right
//! factor acts first. Under this convention `(1 2 3) = (1 2)(2 3) = (2 3)(1 3) = (1 3)(1 2)`.
//!
//! Text forms accepted by [`Permutation::from_str`]:
//!
//! - cycle notation, `"(1 2 3)(7 8 9 10)"`; fixed points may be omitted and the degree is
//!   the largest point mentioned;
//! - an image list, `"2,3,1"`, giving `π(1), π(2), …`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A permutation of the one-based points `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // Zero-based images; `images[i] = π(i + 1) - 1`.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        Ok(Permutation {
            images: (0..n).collect(),
        })
    }

    /// Builds a permutation from its one-based image list `π(1), …, π(n)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty image list".into()));
        }
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {img} repeated")));
            }
            zero_based.push(img - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds a permutation of degree `n` from disjoint cycles of one-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut perm = Permutation::identity(n)?;
        let mut used = vec![false; n];
        for cycle in cycles {
            for (idx, &point) in cycle.iter().enumerate() {
                if point == 0 || point > n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {point} outside 1..={n}"
                    )));
                }
                if std::mem::replace(&mut used[point - 1], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {point} appears in more than one place"
                    )));
                }
                let next = cycle[(idx + 1) % cycle.len()];
                perm.images[point - 1] = next - 1;
            }
        }
        Ok(perm)
    }

    /// The canonical representative of the class `μ`: cycles on consecutive blocks
    /// `{1..μ_1}`, `{μ_1+1..μ_1+μ_2}`, ….
    pub fn class_representative(cycle_type: &Partition) -> Result<Self> {
        let n = cycle_type.size();
        let mut cycles = Vec::with_capacity(cycle_type.len());
        let mut start = 1;
        for &part in cycle_type.parts() {
            cycles.push((start..start + part).collect());
            start += part;
        }
        Permutation::from_cycles(n, &cycles)
    }

    /// Parses either text form, forcing the degree to `n`.
    pub fn parse_with_degree(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text.contains('(') {
            let cycles = parse_cycles(text)?;
            Permutation::from_cycles(n, &cycles)
        } else {
            let p: Permutation = text.parse()?;
            if p.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: p.degree(),
                    right: n,
                });
            }
            Ok(p)
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `π(point)` for a one-based point.
    ///
    /// # Panics
    /// If `point` is outside `1..=degree`.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    /// The one-based image list `π(1), …, π(n)`.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    #[cfg(test)]
    pub(crate) fn from_zero_based_unchecked(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: the right factor is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles, each starting at its least point, ordered by that point.
    /// Fixed points appear as one-element cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(Vec::len).collect())
            .expect("cycle lengths are positive")
    }

    /// The cycle type with one subtracted from every part (zero parts dropped).
    pub fn reduced_cycle_type(&self) -> Partition {
        self.cycle_type().reduced()
    }

    pub fn cycles_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
            }
        }
        count
    }

    /// Parity of the permutation: `n − (number of cycles)` mod 2.
    pub fn is_even(&self) -> bool {
        (self.degree() - self.cycles_count()).is_multiple_of(2)
    }

    /// All permutations of degree `n` in lexicographic order of their image lists.
    pub fn all(n: usize) -> Result<Vec<Permutation>> {
        let first = Permutation::identity(n)?;
        let mut out = Vec::new();
        let mut cur = first.images;
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            if !next_lexicographic(&mut cur) {
                break;
            }
        }
        Ok(out)
    }
}

/// Advances `v` to the next permutation in lexicographic order; false at the last one.
pub(crate) fn next_lexicographic(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(inner) = rest.strip_prefix('(') else {
            return Err(Error::InvalidPermutation(format!(
                "expected '(' at {rest:?}"
            )));
        };
        let close = inner
            .find(')')
            .ok_or_else(|| Error::InvalidPermutation("unclosed cycle".into()))?;
        let body = &inner[..close];
        let cycle = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad point {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = inner[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('(') {
            let cycles = parse_cycles(s)?;
            let n = cycles.iter().flatten().copied().max().ok_or_else(|| {
                Error::InvalidPermutation("no points given; cannot infer the degree".into())
            })?;
            Permutation::from_cycles(n, &cycles)
        } else {
            let images = s
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad image {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Permutation::from_images(&images)
        }
    }
}

/// Cycle notation without fixed points, except that the largest point is written as a
/// one-cycle when it is fixed, so the degree survives a round trip through the text form.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        for cycle in self.cycles() {
            if cycle.len() == 1 && cycle[0] != n {
                continue;
            }
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

/// A transposition `(small large)` with `small < large`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    small: usize,
    large: usize,
}

impl Transposition {
    /// The transposition swapping two distinct one-based points, in either order.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::InvalidPermutation(format!(
                "({a} {b}) is not a transposition"
            )));
        }
        Ok(Transposition {
            small: a.min(b),
            large: a.max(b),
        })
    }

    pub fn small(&self) -> usize {
        self.small
    }

    pub fn large(&self) -> usize {
        self.large
    }

    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        if self.large > n {
            return Err(Error::OutOfRange(format!(
                "transposition {self} does not live in S({n})"
            )));
        }
        let mut p = Permutation::identity(n)?;
        p.images.swap(self.small - 1, self.large - 1);
        Ok(p)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.small, self.large)
    }
}
