//! Exact enumeration of commuting permutation tuples by orbit count.
//!
//! `A(p, n, k)` is the number of ordered `p`-tuples of pairwise commuting
//! permutations of `n` points whose generated group has exactly `k` orbits.
//! This crate computes full tables of those numbers with arbitrary-precision
//! integers, the extremal quantities `E(n, k)` and `F(n, k)` governing their
//! large-`p` growth, and brute-force oracles that check the fast paths
//! against the definitions.
//!
//! Data-parallel loops go through [`Runner`]; with the `parallel` feature
//! disabled every runner executes sequentially and results are unchanged.

pub mod arith;
pub mod bruteforce;
pub mod counts;
mod error;
pub mod extremal;
mod par;
pub mod scan;

pub use error::{Error, Result};
pub use par::Runner;

/// Arbitrary-precision signed integer used for every count.
pub type ExactInt = num_bigint::BigInt;

/// Exact rational, always in lowest terms with a positive denominator.
pub type ExactRatio = num_rational::BigRational;
