//! Method selection for primitive factorization counts of a single permutation.

use std::str::FromStr;

use num_bigint::BigUint;

use crate::arith::to_natural;
use crate::brute_force::{count_primitive, count_primitive_by_type, Budget};
use crate::characters::{class_resolution_via_characters, phi_series, SymmetricFunction};
use crate::class_algebra::{a_coefficient, b_coefficient};
use crate::counting::{stirling, CountResult};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;

/// Brute force is chosen automatically while `h_k(1, …, n−1)` stays at or below this.
pub const AUTO_BRUTE_LIMIT: u64 = 1_000_000;

/// Above this degree the class-algebra vectors get too long and `auto` uses characters.
pub const AUTO_CLASS_ALGEBRA_MAX_DEGREE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Auto,
    Brute,
    Jm,
    Character,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Brute => "brute",
            Method::Jm => "jm",
            Method::Character => "character",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "brute" => Ok(Method::Brute),
            "jm" => Ok(Method::Jm),
            "character" => Ok(Method::Character),
            other => Err(Error::OutOfRange(format!("unknown method {other:?}"))),
        }
    }
}

/// `h_k(1, …, n−1) = S(n−1+k, n−1)`, the number of primitive words of length `k`.
pub fn predicted_nodes(n: usize, k: usize) -> BigUint {
    if n <= 1 {
        return BigUint::from(u8::from(k == 0));
    }
    stirling(n - 1 + k, n - 1).unwrap_or_default()
}

fn brute_is_cheap(n: usize, k: usize) -> bool {
    predicted_nodes(n, k) <= BigUint::from(AUTO_BRUTE_LIMIT)
}

/// Primitive factorizations of `pi` into `k` transpositions.
pub fn count_by_length(
    pi: &Permutation,
    k: usize,
    method: Method,
    budget: &Budget,
) -> Result<CountResult> {
    let n = pi.degree();
    let method = match method {
        Method::Auto if brute_is_cheap(n, k) => Method::Brute,
        Method::Auto => Method::Character,
        m => m,
    };
    let value = match method {
        Method::Brute => count_primitive(pi, k, budget)?,
        Method::Jm => a_coefficient(k, &pi.cycle_type(), budget)?,
        Method::Character => {
            let series = phi_series(&pi.cycle_type(), k)?;
            to_natural(series.coefficient(k)).ok_or_else(|| {
                Error::Internal("character series gave a non-natural count".into())
            })?
        }
        Method::Auto => unreachable!("resolved above"),
    };
    Ok(CountResult::new(value, method.label()))
}

/// Primitive factorizations of `pi` of type `lambda`.
pub fn count_by_type(
    pi: &Permutation,
    lambda: &Partition,
    method: Method,
    budget: &Budget,
) -> Result<CountResult> {
    let n = pi.degree();
    let method = match method {
        Method::Auto if brute_is_cheap(n, lambda.size()) => Method::Brute,
        Method::Auto if n <= AUTO_CLASS_ALGEBRA_MAX_DEGREE => Method::Jm,
        Method::Auto => Method::Character,
        m => m,
    };
    let value = match method {
        Method::Brute => count_primitive_by_type(pi, lambda, budget)?,
        Method::Jm => b_coefficient(lambda, &pi.cycle_type(), budget)?,
        Method::Character => {
            class_resolution_via_characters(&SymmetricFunction::Monomial(lambda.clone()), n)
                .natural(&pi.cycle_type())?
        }
        Method::Auto => unreachable!("resolved above"),
    };
    Ok(CountResult::new(value, method.label()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn all_methods_agree() {
        let budget = Budget::default();
        let methods = [Method::Auto, Method::Brute, Method::Jm, Method::Character];
        for (perm, k) in [
            ("(1 2 3)", 2),
            ("(1 2 3)", 4),
            ("(1 2)(3 4)", 4),
            ("(1 2)", 2),
        ] {
            let values: Vec<_> = methods
                .iter()
                .map(|&m| count_by_length(&p(perm), k, m, &budget).unwrap().value)
                .collect();
            assert!(
                values.windows(2).all(|w| w[0] == w[1]),
                "{perm} {k}: {values:?}"
            );
        }
        let lambda: Partition = "2,1".parse().unwrap();
        for &m in &methods {
            let r = count_by_type(&p("(1 2 3 4)"), &lambda, m, &budget).unwrap();
            assert_eq!(r.value, BigUint::from(3u8), "{}", m.label());
        }
    }

    #[test]
    fn auto_switches_away_from_brute() {
        assert_eq!(predicted_nodes(4, 2), BigUint::from(25u8));
        let budget = Budget::default();
        let big = count_by_length(&p("(1 2 3 4 5 6 7 8)"), 11, Method::Auto, &budget).unwrap();
        assert_eq!(big.method, "character");
        let small = count_by_length(&p("(1 2 3)"), 2, Method::Auto, &budget).unwrap();
        assert_eq!(small.method, "brute");
    }

    #[test]
    fn method_names_round_trip() {
        for m in [Method::Auto, Method::Brute, Method::Jm, Method::Character] {
            assert_eq!(m.label().parse::<Method>().unwrap(), m);
        }
        assert!("fast".parse::<Method>().is_err());
    }
}
