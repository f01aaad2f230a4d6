//! Constant dimension subspace codes built from Riemann-Roch spaces.
//!
//! Four families of codes are supported, each obtained by scaling a set of
//! degree-`s` divisors supported on the `n` rational places of a curve by a
//! factor `k` and taking the Riemann-Roch space of every divisor as a
//! codeword:
//!
//! - **H**: divisors with multiplicities in `{0, 1}` (s-subsets of places),
//! - **A**: divisors with multiplicities in `{0, ..., s}` (s-multisets),
//! - **B**: multiplicities in `{0, ..., w}` for a weight bound `w`,
//! - **C**: multiplicities in `{s - w(n-1), ..., w}`, allowing negatives.
//!
//! The crate computes exact code parameters (ambient dimension, codeword
//! dimension, exact size, minimum distance, normalized weight/rate/distance)
//! for any genus, counts every family with exact big-integer combinatorics,
//! and explicitly realizes the codes over the genus-0 rational function
//! field, where every dimension, intersection, and distance claim can be
//! checked by finite-field linear algebra.

pub mod counting;
pub mod divisors;
pub mod gf;
pub mod params;
pub mod realize;
