//! Exact-arithmetic toolkit for rank bounds on matrices whose off-diagonal
//! entries lie in a finitely generated multiplicative group.
//!
//! Linear algebra and polynomials are generic over a [`Field`] (the
//! rationals or a prime field); the aliases below fix the common cases.

pub mod arith;
pub mod constructions;
pub mod elim;
pub mod error;
pub mod field;
pub mod group;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod replay;
pub mod report;
pub mod verify;

pub use elim::{dependency_coefficients, row_basis, DependencyForm};
pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals, RingSpec};
pub use matrix::ExactMatrix;
pub use poly::{MultiPoly, UniPoly};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;

pub type QMatrix = ExactMatrix<Rationals>;
pub type FpMatrix = ExactMatrix<PrimeField>;
pub type QPoly = UniPoly<Rationals>;
pub type FpPoly = UniPoly<PrimeField>;
pub type QMultiPoly = MultiPoly<Rationals>;

/// Exact rank of `m` over its field.
pub fn mat_rank<F: Field>(m: &ExactMatrix<F>) -> usize {
    m.rank()
}
