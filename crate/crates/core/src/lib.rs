//! Exact computations on positive affine semigroups `H = ℕ𝒜 ⊂ ℤ^d`.
//!
//! The crate covers the whole chain from a generator matrix to the Newton
//! graded ring of the semigroup ring `𝕂[H]` (with `𝕂 = ℚ`):
//!
//! * [`lattice`]: Hermite normal forms, saturated kernels, maximal minors and
//!   positive gradings over `ℤ`.
//! * [`geometry`]: the `(𝒜, L)`-umbrella, Newton degrees, facet cones and
//!   normalized volumes, all in exact rational arithmetic.
//! * [`gbasis`]: sparse polynomials over `ℚ`, weight orders refined by
//!   (graded) reverse lexicographic tiebreaks, Buchberger's algorithm.
//! * [`toric`]: toric ideals, face ideals and the radical of initial ideals.
//! * [`newton`]: the enlargement procedure producing `𝒜' ⊇ 𝒜` and the
//!   weight vector `L` for which the Newton filtration is induced by `L`.
//! * [`semigroup`]: membership in `H`, the bounded search for `H̄ ∖ H` and the
//!   resulting necessary Cohen–Macaulay check.
//!
//! No floating point is used anywhere. The crate is `no_std` and only needs
//! `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
mod linalg;

pub mod gbasis;
pub mod geometry;
pub mod lattice;
pub mod newton;
pub mod semigroup;
pub mod toric;

pub use error::{Error, Result};
pub use gbasis::{GroebnerBasis, Monomial, MonomialOrder, Polynomial, Tiebreak};
pub use geometry::{Cone, Facet, Umbrella, WeightVector};
pub use lattice::{IntMatrix, SemigroupPresentation};
pub use newton::{NewtonOptions, NewtonResult, QueueEntry};
pub use semigroup::{HbarStatus, HbarVerdict};

/// Arbitrary precision integer used for every lattice entry.
pub type Int = num_bigint::BigInt;
/// Exact rational number.
pub type Rat = num_rational::BigRational;
