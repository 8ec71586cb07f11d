//! Exact scalar domains and exact dense linear algebra.

pub mod field;
pub mod linalg;
pub mod modular;
pub mod poly;

pub use field::{Field, PrimeField, Rat, Rationals, DEFAULT_PRIMES};
pub use linalg::{det_top_minor, integerize, Matrix};
pub use poly::{common_roots, CommonRoots, UniPoly};
