//! Finite-field arithmetic and exact linear algebra.
//!
//! Fields GF(p^m) with p^m <= 2^16 are represented by precomputed log/antilog
//! tables over a deterministic modulus (the lexicographically smallest monic
//! irreducible polynomial of degree m), so element indices, polynomial
//! coefficients, and reduced matrices are reproducible bit-for-bit across
//! runs and platforms.
//!
//! - [`Field`]: shared, read-only field tables; all arithmetic goes through it
//! - [`FieldElement`]: an element index, only meaningful relative to a field
//! - [`Poly`]: dense univariate polynomials over a field
//! - [`MatrixGF`]: dense matrices with canonical reduced row-echelon forms

mod field;
mod matrix;
mod poly;

pub use field::{Field, FieldElement, GfError};
pub use matrix::MatrixGF;
pub use poly::Poly;
