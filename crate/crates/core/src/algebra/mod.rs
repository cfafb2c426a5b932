//! Exact arithmetic: prime fields, dense matrices, RREF subspaces and the
//! Laurent-polynomial coefficient ring `Z[v, v^-1]`.

mod field;
mod laurent;
mod matrix;
mod subspace;

pub use field::{is_prime, PrimeField, DEFAULT_PRIME_BOUND};
pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use subspace::{enumerate_all_subspaces, enumerate_subspaces, gaussian_binomial, Subspace};

pub(crate) use subspace::increment_digits;
