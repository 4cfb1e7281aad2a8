//! Exact arithmetic: base fields, dense polynomials, finite-field
//! factorization, irreducibility tests and linear algebra.

pub mod factor;
pub mod field;
pub mod irreducible;
pub mod linalg;
pub mod poly;

pub use factor::factor_finite;
pub use field::{rat, rat_string, Field, PrimeField, Rationals};
pub use irreducible::{
    irreducible_finite, irreducible_rational, rational_reconstruct, Irreducibility,
};
pub use linalg::{Mat, Subspace};
pub use poly::{Poly, PolyRing};
