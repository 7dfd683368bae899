//! Exhaustive enumeration oracles.
//!
//! Nothing here is clever on purpose: every count is obtained by walking the full search
//! tree and testing each leaf. The search for primitive factorizations visits the larger
//! elements `t_1 ≤ t_2 ≤ …` in weakly increasing order and every `s < t` for each, keeping
//! the running product up to date with one swap per node.
//!
//! All searches run under a [`Budget`]; exceeding it is an error, never a truncated count.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::SymmetricGroup;
use crate::partition::Partition;
use crate::perm::{Permutation, Transposition};

/// Upper limit on the number of search-tree nodes (or table operations) a call may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub const DEFAULT_MAX_NODES: u64 = 100_000_000;

    pub fn new(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }

    /// Fails up front when a predicted cost already exceeds the budget.
    pub fn check(&self, what: impl FnOnce() -> String, cost: u128) -> Result<()> {
        if cost > self.max_nodes as u128 {
            return Err(Error::BudgetExceeded {
                what: what(),
                limit: self.max_nodes,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_MAX_NODES)
    }
}

/// A factorization `target = factors[0] ∘ factors[1] ∘ …` (rightmost factor acts first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationWitness {
    pub factors: Vec<Transposition>,
    pub target: Permutation,
}

impl FactorizationWitness {
    pub fn product(&self) -> Result<Permutation> {
        let n = self.target.degree();
        let mut acc = Permutation::identity(n)?;
        for t in &self.factors {
            acc = acc.compose(&t.to_permutation(n)?)?;
        }
        Ok(acc)
    }

    /// Whether composing the factors reproduces the target.
    pub fn is_valid(&self) -> bool {
        self.product().is_ok_and(|p| p == self.target)
    }

    pub fn is_primitive(&self) -> bool {
        self.factors
            .windows(2)
            .all(|w| w[0].large() <= w[1].large())
    }

    /// How many factors share each larger element, as a partition.
    pub fn factorization_type(&self) -> Partition {
        let mut larges: Vec<usize> = self.factors.iter().map(Transposition::large).collect();
        larges.sort_unstable();
        Partition::new(larges.chunk_by(|a, b| a == b).map(<[usize]>::len).collect())
            .expect("run lengths are positive")
    }
}

impl std::fmt::Display for FactorizationWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for t in &self.factors {
            write!(f, "({}{})", t.small(), t.large())?;
        }
        Ok(())
    }
}

struct NodeMeter<'a> {
    shared: &'a AtomicU64,
    local: u64,
    limit: u64,
    what: &'a str,
}

impl NodeMeter<'_> {
    const FLUSH_EVERY: u64 = 1 << 12;

    fn tick(&mut self) -> Result<()> {
        self.local += 1;
        if self.local == Self::FLUSH_EVERY {
            self.flush()?;
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<()> {
        let total = self.shared.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        if total > self.limit {
            return Err(Error::BudgetExceeded {
                what: self.what.to_string(),
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// Which factor sequences a search walks.
#[derive(Clone, Copy)]
enum Order {
    /// Larger elements weakly increase.
    Primitive,
    /// Any sequence of transpositions.
    Unrestricted,
}

struct Search<'a> {
    target: &'a [usize],
    n: usize,
    length: usize,
    order: Order,
}

impl Search<'_> {
    fn dfs<F>(
        &self,
        min_t: usize,
        product: &mut Vec<usize>,
        factors: &mut Vec<(usize, usize)>,
        meter: &mut NodeMeter<'_>,
        leaf: &F,
    ) -> Result<u64>
    where
        F: Fn(&[(usize, usize)]) -> bool,
    {
        meter.tick()?;
        if factors.len() == self.length {
            return Ok((product.as_slice() == self.target && leaf(factors)) as u64);
        }
        let mut total = 0;
        for t in min_t..=self.n {
            for s in 1..t {
                product.swap(s - 1, t - 1);
                factors.push((s, t));
                let next_min = match self.order {
                    Order::Primitive => t,
                    Order::Unrestricted => 2,
                };
                let r = self.dfs(next_min, product, factors, meter, leaf);
                factors.pop();
                product.swap(s - 1, t - 1);
                total += r?;
            }
        }
        Ok(total)
    }

    /// Counts accepted leaves, splitting the tree by its first factor across threads.
    fn count<F>(&self, budget: &Budget, what: &str, leaf: F) -> Result<u64>
    where
        F: Fn(&[(usize, usize)]) -> bool + Sync,
    {
        let shared = AtomicU64::new(0);
        let identity: Vec<usize> = (0..self.n).collect();
        let new_meter = || NodeMeter {
            shared: &shared,
            local: 0,
            limit: budget.max_nodes,
            what,
        };
        if self.length == 0 {
            let mut meter = new_meter();
            let r = self.dfs(2, &mut identity.clone(), &mut Vec::new(), &mut meter, &leaf)?;
            meter.flush()?;
            return Ok(r);
        }
        let firsts: Vec<(usize, usize)> = (2..=self.n)
            .flat_map(|t| (1..t).map(move |s| (s, t)))
            .collect();
        let partials: Vec<u64> = firsts
            .par_iter()
            .map(|&(s, t)| {
                let mut meter = new_meter();
                meter.tick()?;
                let mut product = identity.clone();
                product.swap(s - 1, t - 1);
                let mut factors = vec![(s, t)];
                let next_min = match self.order {
                    Order::Primitive => t,
                    Order::Unrestricted => 2,
                };
                let r = self.dfs(next_min, &mut product, &mut factors, &mut meter, &leaf)?;
                meter.flush()?;
                Ok(r)
            })
            .collect::<Result<_>>()?;
        Ok(partials.into_iter().sum())
    }
}

/// Number of primitive factorizations of `target` into exactly `length` transpositions.
pub fn count_primitive(target: &Permutation, length: usize, budget: &Budget) -> Result<BigUint> {
    let search = Search {
        target: target.zero_based(),
        n: target.degree(),
        length,
        order: Order::Primitive,
    };
    let what = format!("primitive search for {target} with {length} factors");
    Ok(search.count(budget, &what, |_| true)?.into())
}

/// Number of primitive factorizations of `target` of type `lambda` (so `|lambda|` factors).
pub fn count_primitive_by_type(
    target: &Permutation,
    lambda: &Partition,
    budget: &Budget,
) -> Result<BigUint> {
    let search = Search {
        target: target.zero_based(),
        n: target.degree(),
        length: lambda.size(),
        order: Order::Primitive,
    };
    let what = format!("primitive search for {target} of type {lambda}");
    let wanted = lambda.parts();
    let count = search.count(budget, &what, |factors| {
        // Factors arrive with weakly increasing t, so equal t values are adjacent.
        let mut runs: Vec<usize> = factors
            .chunk_by(|a, b| a.1 == b.1)
            .map(<[(usize, usize)]>::len)
            .collect();
        runs.sort_unstable_by(|a, b| b.cmp(a));
        runs == wanted
    })?;
    Ok(count.into())
}

/// Lists every primitive factorization of `target` into `length` transpositions, in
/// lexicographic order of `(t_1, s_1, t_2, s_2, …)`.
pub fn enumerate_primitive(
    target: &Permutation,
    length: usize,
    budget: &Budget,
) -> Result<Vec<FactorizationWitness>> {
    let search = Search {
        target: target.zero_based(),
        n: target.degree(),
        length,
        order: Order::Primitive,
    };
    let what = format!("primitive enumeration for {target} with {length} factors");
    let shared = AtomicU64::new(0);
    let mut meter = NodeMeter {
        shared: &shared,
        local: 0,
        limit: budget.max_nodes,
        what: &what,
    };
    let found = std::sync::Mutex::new(Vec::new());
    let mut product: Vec<usize> = (0..target.degree()).collect();
    search.dfs(
        2,
        &mut product,
        &mut Vec::new(),
        &mut meter,
        &|factors: &[(usize, usize)]| {
            found.lock().unwrap().push(factors.to_vec());
            true
        },
    )?;
    meter.flush()?;
    found
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|factors| {
            Ok(FactorizationWitness {
                factors: factors
                    .into_iter()
                    .map(|(s, t)| Transposition::new(s, t))
                    .collect::<Result<_>>()?,
                target: target.clone(),
            })
        })
        .collect()
}

/// Sequences of `length` transpositions (no ordering constraint) whose product is `target`
/// and whose factors generate a transitive subgroup.
pub fn count_transitive(target: &Permutation, length: usize, budget: &Budget) -> Result<BigUint> {
    let n = target.degree();
    let leaves = (n * (n - 1) / 2) as u128;
    budget.check(
        || format!("transitive search for {target} with {length} factors"),
        leaves.checked_pow(length as u32).unwrap_or(u128::MAX),
    )?;
    let search = Search {
        target: target.zero_based(),
        n,
        length,
        order: Order::Unrestricted,
    };
    let what = format!("transitive search for {target} with {length} factors");
    let count = search.count(budget, &what, |factors| {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = n;
        for &(s, t) in factors {
            let (a, b) = (find(&mut parent, s - 1), find(&mut parent, t - 1));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    })?;
    Ok(count.into())
}

/// Minimal transitive factorizations (length `n + ℓ(μ) − 2`) of the consecutive-block
/// representative of the class `mu`.
pub fn count_minimal_transitive(mu: &Partition, budget: &Budget) -> Result<BigUint> {
    if mu.is_empty() {
        return Err(Error::OutOfRange(
            "cycle type must be a partition of n ≥ 1".into(),
        ));
    }
    let target = Permutation::class_representative(mu)?;
    count_transitive(&target, mu.size() + mu.len() - 2, budget)
}

/// All factorizations of `target` into `length` transpositions, by iterating the transfer
/// matrix "right-multiply by the sum of all transpositions" on a dense vector over `S(n)`.
pub fn count_factorizations_transfer(
    target: &Permutation,
    length: usize,
    budget: &Budget,
) -> Result<BigUint> {
    let n = target.degree();
    let transpositions: Vec<Transposition> = (2..=n)
        .flat_map(|t| (1..t).map(move |s| Transposition::new(s, t).unwrap()))
        .collect();
    let order = (1..=n as u128).product::<u128>();
    budget.check(
        || format!("transfer-matrix count in S({n}) with {length} factors"),
        order * transpositions.len() as u128 * length as u128,
    )?;
    let group = SymmetricGroup::get(n)?;
    let mut current = vec![BigUint::zero(); group.order()];
    current[0] = BigUint::one();
    for _ in 0..length {
        let mut next = vec![BigUint::zero(); group.order()];
        for t in &transpositions {
            let map = group.right_multiplication(t);
            for (r, c) in current.iter().enumerate() {
                if !c.is_zero() {
                    next[map[r] as usize] += c;
                }
            }
        }
        current = next;
    }
    Ok(current.swap_remove(group.rank(target)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn three_cycle() {
        let b = Budget::default();
        assert_eq!(count_primitive(&p("(1 2 3)"), 2, &b).unwrap(), big(2));
        assert_eq!(count_primitive(&p("(1 2 3)"), 4, &b).unwrap(), big(10));
        let found = enumerate_primitive(&p("(1 2 3)"), 2, &b).unwrap();
        let shown: Vec<String> = found.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["(12)(23)", "(23)(13)"]);
    }

    #[test]
    fn identity_and_small_cases() {
        let b = Budget::default();
        for n in 1..=5 {
            let e = Permutation::identity(n).unwrap();
            assert_eq!(count_primitive(&e, 0, &b).unwrap(), big(1));
            assert_eq!(count_primitive(&e, 1, &b).unwrap(), big(0));
        }
        let t = enumerate_primitive(&p("(1 2)"), 1, &b).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].to_string(), "(12)");
        assert_eq!(
            enumerate_primitive(&p("(1 2 3 4)"), 3, &b).unwrap().len(),
            5
        );
    }

    #[test]
    fn by_type() {
        let b = Budget::default();
        assert_eq!(
            count_primitive_by_type(&p("(1 2 3 4)"), &part("2,1"), &b).unwrap(),
            big(3)
        );
        assert_eq!(
            count_primitive_by_type(&p("(1 2 3)"), &part("1,1"), &b).unwrap(),
            big(1)
        );
        assert_eq!(
            count_primitive_by_type(&p("(1 2 3)"), &part("2"), &b).unwrap(),
            big(1)
        );

        let mut shown: Vec<String> = enumerate_primitive(&p("(1 2 3 4)"), 3, &b)
            .unwrap()
            .into_iter()
            .filter(|w| w.factorization_type() == part("2,1"))
            .map(|w| w.to_string())
            .collect();
        shown.sort();
        assert_eq!(shown, ["(12)(34)(24)", "(23)(13)(34)", "(23)(34)(14)"]);
    }

    #[test]
    fn witnesses_revalidate() {
        let b = Budget::default();
        for target in Permutation::all(4).unwrap() {
            for k in 0..=5 {
                for w in enumerate_primitive(&target, k, &b).unwrap() {
                    assert!(w.is_valid());
                    assert!(w.is_primitive());
                    assert_eq!(w.factors.len(), k);
                }
            }
        }
    }

    #[test]
    fn centrality_parity_and_type_sums() {
        let b = Budget::default();
        for n in 1..=5 {
            let all = Permutation::all(n).unwrap();
            for k in 0..=6 {
                let mut per_class = std::collections::HashMap::new();
                for target in &all {
                    let c = count_primitive(target, k, &b).unwrap();
                    let mu = target.cycle_type();
                    if (k + mu.len() + n) % 2 == 1 {
                        assert!(c.is_zero(), "{target} k={k}");
                    }
                    if let Some(prev) = per_class.insert(mu.clone(), c.clone()) {
                        assert_eq!(prev, c, "class {mu} k={k}");
                    }
                }
            }
        }
        for n in 2..=4 {
            for target in Permutation::all(n).unwrap() {
                for k in 0..=5 {
                    let by_type: BigUint = partitions_of(k)
                        .iter()
                        .map(|l| count_primitive_by_type(&target, l, &b).unwrap())
                        .sum();
                    assert_eq!(by_type, count_primitive(&target, k, &b).unwrap());
                }
            }
        }
    }

    #[test]
    fn minimal_transitive_small() {
        let b = Budget::default();
        assert_eq!(count_minimal_transitive(&part("3"), &b).unwrap(), big(3));
        assert_eq!(count_minimal_transitive(&part("1"), &b).unwrap(), big(1));
        assert_eq!(count_minimal_transitive(&part("4"), &b).unwrap(), big(16));
    }

    #[test]
    fn transitive_count_ignores_representative() {
        let b = Budget::default();
        for n in 1..=4 {
            for mu in partitions_of(n) {
                let len = n + mu.len() - 2;
                let reference = count_minimal_transitive(&mu, &b).unwrap();
                for target in Permutation::all(n).unwrap() {
                    if target.cycle_type() == mu {
                        assert_eq!(count_transitive(&target, len, &b).unwrap(), reference);
                    }
                }
            }
        }
    }

    #[test]
    fn transfer_matrix() {
        let b = Budget::default();
        assert_eq!(
            count_factorizations_transfer(&p("(1 2 3)"), 4, &b).unwrap(),
            big(27)
        );
        assert_eq!(count_transitive(&p("(1 2 3)"), 4, &b).unwrap(), big(27));
        // 3^4 sequences spread over the three even permutations of S(3).
        let e = Permutation::identity(3).unwrap();
        assert_eq!(
            count_factorizations_transfer(&e, 4, &b).unwrap(),
            big(81 - 2 * 27)
        );
    }

    #[test]
    fn budget_is_enforced() {
        let tiny = Budget::new(50);
        let err = count_primitive(&p("(1 2 3 4 5)"), 6, &tiny).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        let err = count_minimal_transitive(&Partition::ones(6), &Budget::new(1000)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        assert!(enumerate_primitive(&p("(1 2 3 4 5)"), 8, &tiny).is_err());
    }
}
