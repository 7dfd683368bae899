//! The group algebra `Q[S(n)]`, Jucys-Murphy elements, and symmetric functions evaluated
//! on them.
//!
//! `J_k = (1 k) + (2 k) + … + (k−1 k)`, with `J_1 = 0`. The complete symmetric function
//! `h_k(J_2, …, J_n)` expands as the sum over `2 ≤ t_1 ≤ … ≤ t_k ≤ n` of
//! `J_{t_1} ⋯ J_{t_k}`, so its coefficient on `π` is the number of primitive
//! factorizations of `π` into `k` transpositions. Likewise the coefficient of `π` in
//! `m_λ(J_2, …, J_n)` counts primitive factorizations of type `λ`. Both elements are
//! central; [`resolve_to_classes`] reads off their class-sum coordinates.
//!
//! Evaluation is a dynamic programme over `t = 2..n` in which each step right-multiplies a
//! dense coefficient array by `J_t`, i.e. `t − 1` index gathers over `n!` slots.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::to_natural;
use crate::brute_force::Budget;
use crate::error::{Error, Result};
use crate::group::SymmetricGroup;
use crate::partition::Partition;
use crate::perm::{Permutation, Transposition};
use crate::Rational;

/// An element of `Q[S(n)]`, stored densely by permutation rank.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraVector {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl std::fmt::Debug for GroupAlgebraVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let group = SymmetricGroup::get(self.degree).map_err(|_| std::fmt::Error)?;
        let mut m = f.debug_map();
        for (r, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                m.entry(&group.element(r).to_string(), &c.to_string());
            }
        }
        m.finish()
    }
}

impl GroupAlgebraVector {
    pub fn zero(n: usize) -> Result<Self> {
        let group = SymmetricGroup::get(n)?;
        Ok(GroupAlgebraVector {
            degree: n,
            coeffs: vec![Rational::zero(); group.order()],
        })
    }

    /// The identity element of the algebra.
    pub fn unit(n: usize) -> Result<Self> {
        let mut v = GroupAlgebraVector::zero(n)?;
        v.coeffs[0] = Rational::one();
        Ok(v)
    }

    /// `Σ c_i π_i`.
    pub fn from_terms(n: usize, terms: &[(Permutation, Rational)]) -> Result<Self> {
        let group = SymmetricGroup::get(n)?;
        let mut v = GroupAlgebraVector::zero(n)?;
        for (p, c) in terms {
            if p.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: p.degree(),
                    right: n,
                });
            }
            v.coeffs[group.rank(p)] += c;
        }
        Ok(v)
    }

    fn from_naturals(n: usize, values: Vec<BigUint>) -> Self {
        GroupAlgebraVector {
            degree: n,
            coeffs: values
                .into_iter()
                .map(|c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients indexed by the lexicographic rank of the permutation.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, p: &Permutation) -> Result<&Rational> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: p.degree(),
                right: self.degree,
            });
        }
        let group = SymmetricGroup::get(self.degree)?;
        Ok(&self.coeffs[group.rank(p)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &GroupAlgebraVector) -> Result<Self> {
        self.same_degree(other)?;
        Ok(GroupAlgebraVector {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// The algebra product `self · other`.
    pub fn mul(&self, other: &GroupAlgebraVector) -> Result<Self> {
        self.same_degree(other)?;
        let group = SymmetricGroup::get(self.degree)?;
        let mut out = GroupAlgebraVector::zero(self.degree)?;
        for (ra, a) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let pa = group.element(ra);
            for (rb, b) in other
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
            {
                let prod = pa.compose(group.element(rb))?;
                out.coeffs[group.rank(&prod)] += a * b;
            }
        }
        Ok(out)
    }

    fn same_degree(&self, other: &GroupAlgebraVector) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }
}

/// Coordinates of a central element in the class-sum basis `{C_μ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassResolution {
    pub degree: usize,
    /// One entry per `μ ⊢ n`, in the order of [`crate::partition::partitions_of`].
    pub entries: Vec<(Partition, Rational)>,
}

impl ClassResolution {
    pub fn get(&self, mu: &Partition) -> Option<&Rational> {
        self.entries.iter().find(|(p, _)| p == mu).map(|(_, v)| v)
    }

    /// The coefficient on `C_μ` as a nonnegative integer.
    pub fn natural(&self, mu: &Partition) -> Result<BigUint> {
        if mu.size() != self.degree {
            return Err(Error::SizeMismatch {
                expected: self.degree,
                found: mu.size(),
            });
        }
        let value = self
            .get(mu)
            .ok_or_else(|| Error::Internal(format!("class {mu} missing from resolution")))?;
        to_natural(value).ok_or_else(|| {
            Error::Internal(format!(
                "class coefficient {value} is not a nonnegative integer"
            ))
        })
    }
}

/// `J_k` in `Q[S(n)]`; the zero vector for `k = 1`.
pub fn jm_element(k: usize, n: usize) -> Result<GroupAlgebraVector> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!(
            "Jucys-Murphy index {k} outside 1..={n}"
        )));
    }
    let terms = (1..k)
        .map(|s| {
            Ok((
                Transposition::new(s, k)?.to_permutation(n)?,
                Rational::one(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    GroupAlgebraVector::from_terms(n, &terms)
}

/// `v · J_t` on natural-number coefficient arrays.
fn right_mul_jm(group: &SymmetricGroup, v: &[BigUint], t: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); v.len()];
    for s in 1..t {
        let map = group.right_multiplication(&Transposition::new(s, t).unwrap());
        for (r, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out[map[r] as usize] += c;
            }
        }
    }
    out
}

fn check_dp_budget(
    n: usize,
    steps: u128,
    budget: &Budget,
    what: impl FnOnce() -> String,
) -> Result<()> {
    let order: u128 = (1..=n as u128).product();
    let pairs = (n * n.saturating_sub(1) / 2) as u128;
    budget.check(what, steps.saturating_mul(pairs).saturating_mul(order))
}

/// `h_k(Ξ_n) = h_k(J_1, …, J_n)`: the coefficient of `π` is the number of primitive
/// factorizations of `π` into `k` transpositions.
pub fn complete_h_on_jm(k: usize, n: usize, budget: &Budget) -> Result<GroupAlgebraVector> {
    check_dp_budget(n, k as u128 + 1, budget, || {
        format!("h_{k} on the Jucys-Murphy elements of S({n})")
    })?;
    let group = SymmetricGroup::get(n)?;
    let size = group.order();
    let mut unit = vec![BigUint::zero(); size];
    unit[0] = BigUint::one();
    // layer[j] = h_j(J_2, …, J_t) after processing t.
    let mut layer: Vec<Vec<BigUint>> = (0..=k)
        .map(|j| {
            if j == 0 {
                unit.clone()
            } else {
                vec![BigUint::zero(); size]
            }
        })
        .collect();
    for t in 2..=n {
        for j in 1..=k {
            let extended = right_mul_jm(&group, &layer[j - 1], t);
            for (slot, add) in layer[j].iter_mut().zip(extended) {
                *slot += add;
            }
        }
    }
    Ok(GroupAlgebraVector::from_naturals(n, layer.swap_remove(k)))
}

/// `m_λ(Ξ_n)`: the sum over assignments of the parts of `λ` to distinct elements among
/// `J_2, …, J_n` of the ordered product `∏ J_t^{a_t}`. Monomials that would need a zero
/// variable vanish, so the result is zero when `ℓ(λ) > n − 1`.
pub fn monomial_m_on_jm(
    lambda: &Partition,
    n: usize,
    budget: &Budget,
) -> Result<GroupAlgebraVector> {
    if lambda.len() > n.saturating_sub(1) {
        return GroupAlgebraVector::zero(n);
    }
    let mult: Vec<(usize, usize)> = lambda.multiplicities().into_iter().collect();
    let radices: Vec<usize> = mult.iter().map(|&(_, m)| m + 1).collect();
    let states: usize = radices.iter().product();
    check_dp_budget(
        n,
        (states as u128) * (lambda.size() as u128 + 1),
        budget,
        || format!("m_({lambda}) on the Jucys-Murphy elements of S({n})"),
    )?;
    let group = SymmetricGroup::get(n)?;
    let size = group.order();

    // A state is the number of still-unassigned copies of each distinct part, in mixed
    // radix; the full multiset is the largest index.
    let stride: Vec<usize> = radices
        .iter()
        .scan(1, |acc, &r| {
            let s = *acc;
            *acc *= r;
            Some(s)
        })
        .collect();
    let digit = |state: usize, i: usize| (state / stride[i]) % radices[i];

    let mut table: Vec<Option<Vec<BigUint>>> = vec![None; states];
    let mut unit = vec![BigUint::zero(); size];
    unit[0] = BigUint::one();
    table[states - 1] = Some(unit);

    for t in 2..=n {
        let mut next: Vec<Option<Vec<BigUint>>> = vec![None; states];
        let accumulate = |slot: &mut Option<Vec<BigUint>>, v: Vec<BigUint>| match slot {
            Some(acc) => acc.iter_mut().zip(v).for_each(|(a, b)| *a += b),
            None => *slot = Some(v),
        };
        for (state, entry) in table.iter().enumerate() {
            let Some(v) = entry else { continue };
            accumulate(&mut next[state], v.clone());
            for (i, &(part, _)) in mult.iter().enumerate() {
                if digit(state, i) == 0 {
                    continue;
                }
                let mut w = v.clone();
                for _ in 0..part {
                    w = right_mul_jm(&group, &w, t);
                }
                accumulate(&mut next[state - stride[i]], w);
            }
        }
        table = next;
    }
    let result = table[0]
        .take()
        .unwrap_or_else(|| vec![BigUint::zero(); size]);
    Ok(GroupAlgebraVector::from_naturals(n, result))
}

/// Reads the class-sum coordinates of a central element; fails on a non-central input,
/// naming two conjugate permutations with different coefficients.
pub fn resolve_to_classes(v: &GroupAlgebraVector) -> Result<ClassResolution> {
    let group = SymmetricGroup::get(v.degree)?;
    let mut seen: Vec<Option<usize>> = vec![None; group.classes().len()];
    for (r, c) in v.coeffs.iter().enumerate() {
        let class = group.class_index_of(r);
        match seen[class] {
            None => seen[class] = Some(r),
            Some(first) if &v.coeffs[first] != c => {
                return Err(Error::NotCentral {
                    first: group.element(first).clone(),
                    first_value: v.coeffs[first].to_string(),
                    second: group.element(r).clone(),
                    second_value: c.to_string(),
                });
            }
            Some(_) => {}
        }
    }
    let entries = group
        .classes()
        .iter()
        .zip(seen)
        .map(|(mu, r)| {
            let r = r.expect("every class is nonempty");
            (mu.clone(), v.coeffs[r].clone())
        })
        .collect();
    Ok(ClassResolution {
        degree: v.degree,
        entries,
    })
}

/// `a_{k,μ}`: primitive factorizations into `k` transpositions of any `π` of type `mu`.
pub fn a_coefficient(k: usize, mu: &Partition, budget: &Budget) -> Result<BigUint> {
    let n = mu.size();
    resolve_to_classes(&complete_h_on_jm(k, n, budget)?)?.natural(mu)
}

/// `b_{λμ}`: primitive factorizations of type `lambda` of any `π` of type `mu`.
pub fn b_coefficient(lambda: &Partition, mu: &Partition, budget: &Budget) -> Result<BigUint> {
    let n = mu.size();
    resolve_to_classes(&monomial_m_on_jm(lambda, n, budget)?)?.natural(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute_force::{count_primitive, count_primitive_by_type};
    use crate::partition::partitions_of;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn jm_elements() {
        assert!(jm_element(1, 4).unwrap().is_zero());
        let j3 = jm_element(3, 3).unwrap();
        let want = GroupAlgebraVector::from_terms(3, &[(p("(1 3)"), int(1)), (p("(2 3)"), int(1))])
            .unwrap();
        assert_eq!(j3, want);
        let j2 = jm_element(2, 4).unwrap();
        assert_eq!(j2.coefficient(&p("(1 2)(4)")).unwrap(), &int(1));
        assert_eq!(j2.coefficients().iter().filter(|c| !c.is_zero()).count(), 1);
        assert!(jm_element(0, 3).is_err());
        assert!(jm_element(4, 3).is_err());
    }

    #[test]
    fn complete_h_small() {
        let b = Budget::default();
        let h0 = complete_h_on_jm(0, 4, &b).unwrap();
        assert_eq!(h0, GroupAlgebraVector::unit(4).unwrap());
        let h2 = complete_h_on_jm(2, 3, &b).unwrap();
        assert_eq!(h2.coefficient(&p("(1 2 3)")).unwrap(), &int(2));
        assert_eq!(
            h2.coefficient(&Permutation::identity(3).unwrap()).unwrap(),
            &int(3)
        );
        let res = resolve_to_classes(&h2).unwrap();
        assert_eq!(res.get(&part("3")), Some(&int(2)));
        assert_eq!(res.get(&part("1,1,1")), Some(&int(3)));
        assert_eq!(res.get(&part("2,1")), Some(&int(0)));
    }

    #[test]
    fn monomial_small() {
        let b = Budget::default();
        let m1 = monomial_m_on_jm(&part("1"), 2, &b).unwrap();
        assert_eq!(m1, jm_element(2, 2).unwrap());
        let m21 = monomial_m_on_jm(&part("2,1"), 4, &b).unwrap();
        assert_eq!(m21.coefficient(&p("(1 2 3 4)")).unwrap(), &int(3));
        let m11 = monomial_m_on_jm(&part("1,1"), 3, &b).unwrap();
        assert_eq!(m11.coefficient(&p("(1 2 3)")).unwrap(), &int(1));
        assert!(monomial_m_on_jm(&part("1,1,1"), 3, &b).unwrap().is_zero());
        assert_eq!(
            monomial_m_on_jm(&Partition::empty(), 3, &b).unwrap(),
            GroupAlgebraVector::unit(3).unwrap()
        );
    }

    #[test]
    fn resolution_edge_cases() {
        let zero = GroupAlgebraVector::zero(3).unwrap();
        let res = resolve_to_classes(&zero).unwrap();
        assert!(res.entries.iter().all(|(_, v)| v.is_zero()));
        let err = resolve_to_classes(&jm_element(3, 3).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotCentral { .. }), "{err}");
    }

    #[test]
    fn coefficient_shortcuts() {
        let b = Budget::default();
        assert_eq!(
            a_coefficient(2, &part("3"), &b).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(a_coefficient(3, &part("3"), &b).unwrap(), BigUint::zero());
        assert_eq!(
            b_coefficient(&part("2,1"), &part("4"), &b).unwrap(),
            BigUint::from(3u32)
        );
        assert!(a_coefficient(2, &part("3"), &Budget::new(10)).is_err());
    }

    #[test]
    fn complete_is_sum_of_monomials() {
        let b = Budget::default();
        for n in 1..=5 {
            for k in 0..=5 {
                let h = complete_h_on_jm(k, n, &b).unwrap();
                let mut sum = GroupAlgebraVector::zero(n).unwrap();
                for lambda in partitions_of(k) {
                    sum = sum.add(&monomial_m_on_jm(&lambda, n, &b).unwrap()).unwrap();
                }
                assert_eq!(h, sum, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn jm_elements_commute() {
        for n in 1..=5 {
            for i in 1..=n {
                for j in i + 1..=n {
                    let ji = jm_element(i, n).unwrap();
                    let jj = jm_element(j, n).unwrap();
                    assert_eq!(ji.mul(&jj).unwrap(), jj.mul(&ji).unwrap());
                }
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_everywhere() {
        let b = Budget::default();
        for n in 1..=5 {
            let group = SymmetricGroup::get(n).unwrap();
            for k in 0..=6 {
                let h = complete_h_on_jm(k, n, &b).unwrap();
                for (r, perm) in group.elements().iter().enumerate() {
                    let want = count_primitive(perm, k, &b).unwrap();
                    assert_eq!(h.coefficients()[r], Rational::from_integer(want.into()));
                }
            }
            for k in 0..=4 {
                for lambda in partitions_of(k) {
                    let m = monomial_m_on_jm(&lambda, n, &b).unwrap();
                    for (r, perm) in group.elements().iter().enumerate() {
                        let want = count_primitive_by_type(perm, &lambda, &b).unwrap();
                        assert_eq!(m.coefficients()[r], Rational::from_integer(want.into()));
                    }
                }
            }
        }
    }
}
