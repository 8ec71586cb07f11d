//! Exact-arithmetic machinery for tensor border rank lower bounds via
//! highest-weight vectors.
//!
//! The crate is organized in layers:
//!
//! * [`exact`] — scalar domains (arbitrary-precision rationals, 62-bit prime
//!   fields), exact dense linear algebra, univariate polynomials, and
//!   Chinese-remainder / rational-reconstruction utilities.
//! * [`combinatorics`] — partitions, permutations, symmetric-group characters
//!   and Kronecker coefficients.
//! * [`tensors`] — rank-decomposed and sparse order-3 tensors, the matrix
//!   multiplication family, and the one-parameter diagonal normal form.
//! * [`hwv`] — highest-weight vectors encoded as permutation pairs and their
//!   evaluation at rank-decomposed tensors by pruned backtracking.
//! * [`certify`] — vanishing combinations on secant varieties, randomized
//!   ideal-membership checks, evaluation on the matrix multiplication family,
//!   and border-support-rank certificates.

pub mod certify;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod hwv;
pub mod rng;
pub mod tensors;

pub use error::{Error, Result};
