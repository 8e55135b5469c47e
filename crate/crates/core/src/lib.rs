//! Double eta polynomials for even orthogonal Grassmannians.
//!
//! The crate covers the combinatorics of the type D Weyl group
//! ([`weyl`]), exact arithmetic in `Z[b, t]` with the Weyl group action and
//! divided differences ([`polyring`]), the quotient by the relation ideal
//! `J^(k)` ([`quotient`]), the raising-operator construction of `H_λ(c|t)`
//! and `Ĥ_λ(c|t)` ([`eta`]), type A Schubert polynomials and the splitting
//! formula ([`schubert`]), and verification suites ([`verify`]).

pub mod error;
pub mod eta;
pub mod io;
pub mod polyring;
pub mod quotient;
pub mod scalar;
pub mod schubert;
pub mod verify;
pub mod weyl;

pub use error::{EtaError, Result};
pub use polyring::{FVariant, Monomial, Polynomial, Var};
pub use scalar::Scalar;
pub use weyl::{CoverCase, CoverDatum, KStrictPartition, PartitionType, SignedPermutation, TypedPartition};

/// Polynomials with exact integer coefficients.
pub type IntPoly = Polynomial<num_bigint::BigInt>;
/// Polynomials with exact rational coefficients.
pub type RatPoly = Polynomial<num_rational::BigRational>;
