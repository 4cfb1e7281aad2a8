//! Fixed-point complex arithmetic, polynomial rooting and lattice reduction.
//! Used to propose candidates that are then certified with exact arithmetic.

pub mod fixed;
pub mod lll;
pub mod roots;

pub use fixed::{Cx, Fixed};
pub use lll::{integer_relation, lll_reduce};
pub use roots::complex_roots;
