//! Property tests for the algebraic invariants that tie the modules together.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use proptest::prelude::*;

use primfact_core::arith::factorial;
use primfact_core::brute_force::{count_primitive, count_primitive_by_type};
use primfact_core::characters::{character, phi_rational, phi_series};
use primfact_core::class_algebra::{a_coefficient, complete_h_on_jm, monomial_m_on_jm};
use primfact_core::counting::{
    catalan, minimal_primitive_by_type, minimal_primitive_total, refined_catalan,
};
use primfact_core::matrix_model::{verify_matrix_identity, weingarten_character, weingarten_gram};
use primfact_core::partition::partitions_of;
use primfact_core::{Budget, Partition, Permutation, Polynomial, PowerSeries, Rational};

fn partition_strategy(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn permutation_strategy(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 0..6).prop_map(|c| Polynomial::from_integers(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partition_identities(lambda in partition_strategy(12)) {
        let n = lambda.size();
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.dimension() * lambda.hook_product(), factorial(n));
        prop_assert_eq!(lambda.class_size() * lambda.centralizer_order(), factorial(n));
        let text = lambda.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), lambda.clone());
        let content_sum: i64 = lambda.contents().iter().sum();
        let conj_sum: i64 = lambda.conjugate().contents().iter().sum();
        prop_assert_eq!(content_sum, -conj_sum);
    }

    #[test]
    fn polynomial_division(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        let g = a.gcd(&b);
        prop_assert!(a.div_rem(&g).1.is_zero());
        prop_assert!(b.div_rem(&g).1.is_zero());
    }

    #[test]
    fn series_inverse(c in prop::collection::vec(-5i64..=5, 1..6), order in 0usize..8) {
        prop_assume!(c[0] != 0);
        let s = Polynomial::from_integers(&c).to_series(order);
        let inv = s.inverse().unwrap();
        prop_assert_eq!(&s * &inv, PowerSeries::one(order));
    }

    #[test]
    fn refined_catalan_sums(k in 0usize..=14) {
        let total: BigUint = partitions_of(k).iter().map(refined_catalan).sum();
        prop_assert_eq!(total, catalan(k));
    }

    #[test]
    fn minimal_types_sum_to_total(mu in partition_strategy(9)) {
        let length = mu.size() - mu.len();
        let by_type: BigUint = partitions_of(length)
            .iter()
            .map(|l| minimal_primitive_by_type(&mu.reduced(), l).unwrap())
            .sum();
        prop_assert_eq!(by_type, minimal_primitive_total(&mu));
    }

    #[test]
    fn counts_are_class_functions(pi in permutation_strategy(5), sigma in permutation_strategy(5), k in 0usize..6) {
        prop_assume!(pi.degree() == sigma.degree());
        let budget = Budget::default();
        let conj = sigma.compose(&pi).unwrap().compose(&sigma.inverse()).unwrap();
        let a = count_primitive(&pi, k, &budget).unwrap();
        prop_assert_eq!(&a, &count_primitive(&conj, k, &budget).unwrap());
        prop_assert_eq!(&a, &a_coefficient(k, &pi.cycle_type(), &budget).unwrap());
        let by_type: BigUint = partitions_of(k)
            .iter()
            .map(|l| count_primitive_by_type(&pi, l, &budget).unwrap())
            .sum();
        prop_assert_eq!(by_type, a);
    }

    #[test]
    fn complete_is_sum_of_monomials(n in 1usize..=5, k in 0usize..=5) {
        let budget = Budget::default();
        let h = complete_h_on_jm(k, n, &budget).unwrap();
        let mut sum = primfact_core::GroupAlgebraVector::zero(n).unwrap();
        for l in partitions_of(k) {
            sum = sum.add(&monomial_m_on_jm(&l, n, &budget).unwrap()).unwrap();
        }
        prop_assert_eq!(h, sum);
    }

    #[test]
    fn character_symmetries(lambda in partition_strategy(8), mu_index in 0usize..1000) {
        let n = lambda.size();
        let classes = partitions_of(n);
        let mu = &classes[mu_index % classes.len()];
        let chi = character(&lambda, mu).unwrap();
        let sign = if (n - mu.len()).is_multiple_of(2) { 1 } else { -1 };
        prop_assert_eq!(character(&lambda.conjugate(), mu).unwrap(), sign * chi);
        let dim = character(&lambda, &Partition::ones(n)).unwrap();
        prop_assert_eq!(BigUint::from(dim as u64), lambda.dimension());
    }

    #[test]
    fn phi_paths_agree(mu in partition_strategy(6)) {
        let order = 12;
        let closed = phi_rational(&mu).unwrap().to_series(order).unwrap();
        prop_assert_eq!(closed, phi_series(&mu, order).unwrap());
    }

    #[test]
    fn weingarten_methods_agree(n in 1usize..=3, extra in 0u64..5) {
        let dim = n as u64 + extra;
        prop_assert_eq!(weingarten_gram(n, dim).unwrap(), weingarten_character(n, dim).unwrap());
    }

    #[test]
    fn matrix_identity_holds(mu in partition_strategy(4), extra in 0u64..8) {
        let report = verify_matrix_identity(&mu, mu.size() as u64 + extra).unwrap();
        prop_assert!(report.equal, "{}", report);
    }
}

#[test]
fn weingarten_sums_to_inverse_dimension_power() {
    // Σ_σ Wg(σ) N^{#cycles(σ)} = 1 is the identity row of G·Wg = e.
    for n in 1..=4usize {
        for dim in n as u64..n as u64 + 3 {
            let table = weingarten_gram(n, dim).unwrap();
            let total: Rational = table
                .values
                .iter()
                .map(|(mu, wg)| {
                    let size = Rational::from_integer(BigInt::from(mu.class_size()));
                    let power = num_traits::pow(Rational::from_integer(dim.into()), mu.len());
                    size * power * wg
                })
                .sum();
            assert_eq!(total, Rational::one(), "n={n} N={dim}");
        }
    }
}
