//! Unitary Weingarten values at integer dimension and the permutation correlators
//! `⟨u_11 ū_1π(1) ⋯ u_nn ū_nπ(n)⟩` they give.
//!
//! Two independent constructions are provided: inverting the Gram matrix
//! `G(σ, τ) = N^{#cycles(σ⁻¹τ)}` exactly, and the character sum
//! `Wg(μ) = (1/n!²) Σ_λ f_λ² χ^λ(μ) / s_λ(1^N)`.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorial, format_rational, pow_rational, rational_from_uint};
use crate::characters::{phi_value, CharacterTable};
use crate::error::{Error, Result};
use crate::group::SymmetricGroup;
use crate::linalg::solve_fraction_free;
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::Rational;

/// How to build a [`WeingartenTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeingartenMethod {
    /// Exact solve of the Gram system.
    Gram,
    /// Character sum over irreducible representations.
    Character,
}

impl WeingartenMethod {
    pub fn label(self) -> &'static str {
        match self {
            WeingartenMethod::Gram => "gram",
            WeingartenMethod::Character => "character",
        }
    }
}

/// Weingarten values of `U(N)` on `S(n)`, one per conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeingartenTable {
    pub degree: usize,
    pub dim: u64,
    pub values: Vec<(Partition, Rational)>,
}

impl WeingartenTable {
    pub fn get(&self, mu: &Partition) -> Option<&Rational> {
        self.values.iter().find(|(p, _)| p == mu).map(|(_, v)| v)
    }
}

fn check_dims(n: usize, dim: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("degree must be at least 1".into()));
    }
    if dim < n as u64 {
        return Err(Error::DimensionTooSmall { degree: n, dim });
    }
    Ok(())
}

/// Largest degree accepted by the Gram construction (a `720 × 720` system).
pub const MAX_GRAM_DEGREE: usize = 6;

fn gram_impl(n: usize, dim: u64) -> Result<WeingartenTable> {
    check_dims(n, dim)?;
    if n > MAX_GRAM_DEGREE {
        return Err(Error::BudgetExceeded {
            what: format!("Gram system of size {n}! for the Weingarten table"),
            limit: MAX_GRAM_DEGREE as u64,
        });
    }
    let group = SymmetricGroup::get(n)?;
    let powers: Vec<BigInt> = (0..=n)
        .map(|c| num_traits::pow(BigInt::from(dim), c))
        .collect();
    let inverses: Vec<Permutation> = group.elements().iter().map(|s| s.inverse()).collect();
    let matrix: Vec<Vec<BigInt>> = inverses
        .iter()
        .map(|s_inv| {
            group
                .elements()
                .iter()
                .map(|t| {
                    let c = s_inv.compose(t).map(|p| p.cycles_count()).unwrap_or(0);
                    powers[c].clone()
                })
                .collect()
        })
        .collect();
    let identity_rank = group.rank(&Permutation::identity(n)?);
    let mut rhs = vec![BigInt::zero(); group.order()];
    rhs[identity_rank] = BigInt::one();
    let x = solve_fraction_free(&matrix, &rhs)?;

    let mut per_class: Vec<Option<Rational>> = vec![None; group.classes().len()];
    for (rank, value) in x.into_iter().enumerate() {
        let slot = &mut per_class[group.class_index_of(rank)];
        match slot {
            None => *slot = Some(value),
            Some(prev) if *prev == value => {}
            Some(prev) => {
                return Err(Error::Internal(format!(
                    "Gram solution is not a class function: {} vs {}",
                    format_rational(prev),
                    format_rational(&value)
                )))
            }
        }
    }
    let values = group
        .classes()
        .iter()
        .cloned()
        .zip(per_class)
        .map(|(mu, v)| {
            v.map(|v| (mu.clone(), v))
                .ok_or_else(|| Error::Internal(format!("class {mu} has no elements")))
        })
        .collect::<Result<_>>()?;
    Ok(WeingartenTable {
        degree: n,
        dim,
        values,
    })
}

/// `s_λ(1^N) = ∏_{□∈λ} (N + c(□)) / H_λ`.
fn schur_at_ones(lambda: &Partition, dim: u64) -> Rational {
    let num: BigInt = lambda
        .contents()
        .into_iter()
        .map(|c| BigInt::from(dim as i64 + c))
        .product();
    Rational::from_integer(num) / rational_from_uint(&lambda.hook_product())
}

fn character_impl(n: usize, dim: u64) -> Result<WeingartenTable> {
    check_dims(n, dim)?;
    let table = CharacterTable::shared(n);
    let order_sq = rational_from_uint(&factorial(n)).pow(2);
    let weights: Vec<Rational> = table
        .partitions()
        .iter()
        .map(|lambda| {
            let f = rational_from_uint(&lambda.dimension());
            &f * &f / schur_at_ones(lambda, dim)
        })
        .collect();
    let values = table
        .partitions()
        .iter()
        .map(|mu| {
            let col = table.column(mu).unwrap_or_default();
            let sum: Rational = weights
                .iter()
                .zip(col)
                .map(|(w, chi)| w * Rational::from_integer(chi.into()))
                .sum();
            (mu.clone(), sum / &order_sq)
        })
        .collect();
    Ok(WeingartenTable {
        degree: n,
        dim,
        values,
    })
}

/// Checks the two `n = 2` values `1/(N²−1)` and `−1/(N(N²−1))` for both methods.
fn self_check() -> Result<()> {
    let identity = Partition::ones(2);
    let swap = Partition::single(2);
    for dim in 2..=4u64 {
        let d = BigInt::from(dim);
        let denom: BigInt = &d * &d - 1;
        let expect_id = Rational::new(BigInt::one(), denom.clone());
        let expect_swap = Rational::new(-BigInt::one(), &d * denom);
        for table in [gram_impl(2, dim)?, character_impl(2, dim)?] {
            if table.get(&identity) != Some(&expect_id) || table.get(&swap) != Some(&expect_swap) {
                return Err(Error::Internal(format!(
                    "Weingarten self-check failed at N = {dim}"
                )));
            }
        }
    }
    Ok(())
}

fn ensure_self_check() -> Result<()> {
    static CHECK: OnceLock<Result<()>> = OnceLock::new();
    CHECK.get_or_init(self_check).clone()
}

/// Weingarten table from the Gram system `G · x = e_id`.
pub fn weingarten_gram(n: usize, dim: u64) -> Result<WeingartenTable> {
    ensure_self_check()?;
    gram_impl(n, dim)
}

/// Weingarten table from the character sum.
pub fn weingarten_character(n: usize, dim: u64) -> Result<WeingartenTable> {
    ensure_self_check()?;
    character_impl(n, dim)
}

pub fn weingarten(n: usize, dim: u64, method: WeingartenMethod) -> Result<WeingartenTable> {
    match method {
        WeingartenMethod::Gram => weingarten_gram(n, dim),
        WeingartenMethod::Character => weingarten_character(n, dim),
    }
}

/// `⟨u_11 ū_1π(1) ⋯ u_nn ū_nπ(n)⟩` over Haar-random `U(N)`, via the character sum.
pub fn permutation_correlator(pi: &Permutation, dim: u64) -> Result<Rational> {
    permutation_correlator_with(pi, dim, WeingartenMethod::Character)
}

pub fn permutation_correlator_with(
    pi: &Permutation,
    dim: u64,
    method: WeingartenMethod,
) -> Result<Rational> {
    let table = weingarten(pi.degree(), dim, method)?;
    let mu = pi.cycle_type();
    table
        .get(&mu)
        .cloned()
        .ok_or_else(|| Error::Internal(format!("class {mu} missing from Weingarten table")))
}

/// Both sides of the matrix-integral identity for one class and dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixIdentityReport {
    pub mu: Partition,
    pub dim: u64,
    /// `(−1)^{n−ℓ} N^{2n−ℓ} Wg(μ)`.
    pub left: Rational,
    /// `N^{n−ℓ} Φ_μ(1/N)`.
    pub right: Rational,
    pub equal: bool,
}

impl fmt::Display for MatrixIdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mu=({}) N={} left={} right={} {}",
            self.mu,
            self.dim,
            format_rational(&self.left),
            format_rational(&self.right),
            if self.equal { "equal" } else { "DIFFERENT" }
        )
    }
}

/// Checks `(−1)^{n−ℓ(μ)} N^{2n−ℓ(μ)} Wg(μ) = N^{n−ℓ(μ)} Φ_μ(1/N)` exactly, with the
/// Weingarten value taken from the Gram system.
pub fn verify_matrix_identity(mu: &Partition, dim: u64) -> Result<MatrixIdentityReport> {
    let table = weingarten_gram(mu.size(), dim)?;
    verify_matrix_identity_with_table(&table, mu)
}

/// As [`verify_matrix_identity`], reusing a table already built for `|μ|` and `N`.
pub fn verify_matrix_identity_with_table(
    table: &WeingartenTable,
    mu: &Partition,
) -> Result<MatrixIdentityReport> {
    let n = mu.size();
    if table.degree != n {
        return Err(Error::DegreeMismatch {
            left: table.degree,
            right: n,
        });
    }
    check_dims(n, table.dim)?;
    let l = mu.len();
    let wg = table
        .get(mu)
        .ok_or_else(|| Error::Internal(format!("class {mu} missing from Weingarten table")))?;
    let big_n = Rational::from_integer(BigInt::from(table.dim));
    let sign = if (n - l).is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    let left = sign * pow_rational(&big_n, (2 * n - l) as i64) * wg;
    let z = Rational::new(BigInt::one(), BigInt::from(table.dim));
    let right = pow_rational(&big_n, (n - l) as i64) * phi_value(mu, &z)?;
    let equal = left == right;
    Ok(MatrixIdentityReport {
        mu: mu.clone(),
        dim: table.dim,
        left,
        right,
        equal,
    })
}

/// `|a − b| ≤ tol` in exact arithmetic.
pub fn within(a: &Rational, b: &Rational, tol: &Rational) -> bool {
    (a - b).abs() <= *tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::minimal_primitive_total;
    use crate::partition::partitions_of;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn degree_one() {
        for dim in 1..=5u64 {
            for method in [WeingartenMethod::Gram, WeingartenMethod::Character] {
                let t = weingarten(1, dim, method).unwrap();
                assert_eq!(t.get(&Partition::ones(1)), Some(&q(1, dim as i64)));
            }
        }
    }

    #[test]
    fn degree_two_closed_forms() {
        for dim in 2..=8i64 {
            let expect_id = q(1, dim * dim - 1);
            let expect_swap = q(-1, dim * (dim * dim - 1));
            let t = weingarten_gram(2, dim as u64).unwrap();
            assert_eq!(t.get(&Partition::ones(2)), Some(&expect_id));
            assert_eq!(t.get(&Partition::single(2)), Some(&expect_swap));
        }
    }

    #[test]
    fn correlator_examples() {
        let swap: Permutation = "(1 2)".parse().unwrap();
        assert_eq!(permutation_correlator(&swap, 2).unwrap(), q(-1, 6));
        let id2 = Permutation::identity(2).unwrap();
        assert_eq!(permutation_correlator(&id2, 3).unwrap(), q(1, 8));
        assert_eq!(
            permutation_correlator_with(&id2, 3, WeingartenMethod::Gram).unwrap(),
            q(1, 8)
        );
    }

    #[test]
    fn dimension_below_degree_is_rejected() {
        let err = weingarten_gram(3, 2).unwrap_err();
        assert_eq!(err, Error::DimensionTooSmall { degree: 3, dim: 2 });
        assert!(weingarten_character(3, 2).is_err());
        assert!(verify_matrix_identity(&Partition::single(3), 2).is_err());
    }

    #[test]
    fn methods_agree() {
        for n in 1..=4 {
            for dim in n as u64..=n as u64 + 2 {
                assert_eq!(
                    weingarten_gram(n, dim).unwrap(),
                    weingarten_character(n, dim).unwrap(),
                    "n={n} N={dim}"
                );
            }
        }
    }

    #[test]
    fn row_orthonormality() {
        // Σ_j E[|u_11|² |u_2j|²] = E[|u_11|²]: the j = 1 term pairs both ways, the other
        // N − 1 terms only trivially.
        for dim in 2..=6u64 {
            let t = weingarten_gram(2, dim).unwrap();
            let id = t.get(&Partition::ones(2)).unwrap();
            let swap = t.get(&Partition::single(2)).unwrap();
            let n = Rational::from_integer(dim.into());
            assert_eq!(&n * id + swap, q(1, dim as i64));
        }
    }

    #[test]
    fn small_matrix_identity_cases() {
        for dim in 2..=6u64 {
            let expect = q((dim * dim) as i64, (dim * dim - 1) as i64);
            for mu in partitions_of(2) {
                let r = verify_matrix_identity(&mu, dim).unwrap();
                assert!(r.equal, "{r}");
                assert_eq!(r.left, expect);
            }
        }
        for n in 1..=4 {
            for mu in partitions_of(n) {
                let r = verify_matrix_identity(&mu, n as u64).unwrap();
                assert!(r.equal, "{r}");
            }
        }
    }

    #[test]
    fn leading_order() {
        let dim = 1_000_000u64;
        let tol = q(1, 1_000_000);
        for n in 1..=4 {
            let t = weingarten_character(n, dim).unwrap();
            for mu in partitions_of(n) {
                let l = mu.len();
                let sign = if (n - l) % 2 == 0 { 1 } else { -1 };
                let scaled = pow_rational(&Rational::from_integer(dim.into()), (2 * n - l) as i64)
                    * t.get(&mu).unwrap()
                    * Rational::from_integer(sign.into());
                let lead = rational_from_uint(&minimal_primitive_total(&mu));
                assert!(within(&scaled, &lead, &tol), "{mu}");
            }
        }
    }
}
