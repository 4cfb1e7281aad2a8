//! Exact field towers, their automorphism groups, matrix subalgebras of the
//! endomorphism algebra, and a checker for the Galois correspondences on
//! concrete towers.

pub mod autgroup;
pub mod config;
pub mod csalg;
pub mod error;
pub mod exactcore;
pub mod galoislab;
pub mod numeric;
pub mod tower;

pub use config::RunConfig;
pub use error::{Error, Result};
pub use exactcore::{Field, Mat, Poly, PolyRing, PrimeField, Rationals, Subspace};

pub use tower::{GroundField, Tower, TowerField};

pub type Rational = num_rational::BigRational;

/// A tower over the rationals.
pub type QTower = Tower<Rationals>;
/// A tower over a prime field.
pub type FpTower = Tower<PrimeField>;
/// A number field presented as a tower over Q.
pub type NumberField = TowerField<Rationals>;
/// A finite field presented as a tower over its prime field.
pub type FiniteField = TowerField<PrimeField>;
