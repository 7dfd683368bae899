//! Exact counting of primitive factorizations of permutations into transpositions.
//!
//! A factorization `π = (s_1 t_1)(s_2 t_2)…(s_k t_k)` with `s_i < t_i` is *primitive*
//! when the larger elements weakly increase, `t_1 ≤ t_2 ≤ … ≤ t_k`. This crate counts
//! such factorizations three independent ways:
//!
//! - [`brute_force`]: depth-first enumeration, the reference oracle;
//! - [`class_algebra`]: complete and monomial symmetric functions evaluated on the
//!   Jucys-Murphy elements inside the group algebra of `S(n)`, resolved into class sums;
//! - [`characters`]: Murnaghan-Nakayama characters and content evaluations, giving the
//!   generating functions `Φ_μ(z)` as exact power series and rational functions.
//!
//! [`counting`] holds the closed forms (refined Catalan numbers, central factorial
//! numbers, the Hurwitz formula, the sinh-series formulas) and [`matrix_model`] computes
//! unitary Weingarten values to check the matrix-integral identity for primitive counts.
//!
//! All arithmetic is exact: big integers and big rationals, never floating point.

pub mod arith;
pub mod brute_force;
pub mod characters;
pub mod class_algebra;
pub mod counting;
pub mod dispatch;
pub mod error;
pub mod group;
pub mod linalg;
pub mod matrix_model;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod series;

pub use brute_force::{Budget, FactorizationWitness};
pub use characters::{CharacterTable, SymmetricFunction};
pub use class_algebra::{ClassResolution, GroupAlgebraVector};
pub use counting::CountResult;
pub use error::{Error, Result};
pub use matrix_model::{MatrixIdentityReport, WeingartenMethod, WeingartenTable};
pub use partition::{Partition, RefinementSequence};
pub use perm::{Permutation, Transposition};
pub use poly::{Polynomial, RationalFunction};
pub use series::PowerSeries;

/// The scalar type used throughout: an arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;
