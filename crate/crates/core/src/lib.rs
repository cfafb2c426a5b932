//! Ringel–Hall algebras of quivers over small prime fields.
//!
//! The crate is layered bottom-up:
//!
//! - [`algebra`]: prime fields, matrices, RREF subspaces, Laurent polynomials.
//! - [`quiver`]: quivers, the `.quiver` DSL and the L/Δ/V/Λ shape classifier.
//! - [`rep`]: representations, Hom and Ext, decomposition, Loewy data and
//!   enumeration of isomorphism classes.
//! - [`hall`]: Hall numbers, Hall products (plain and twisted) and the Euler form.
//! - [`audit`]: membership in `D_r`, bounded subring/ideal audits with
//!   replayable certificates, the explicit counterexamples, and surveys.

pub mod algebra;
pub mod audit;
pub mod error;
pub mod hall;
pub mod limits;
pub mod quiver;
pub mod rep;

pub use algebra::{LaurentPoly, Matrix, PrimeField, Subspace};
pub use error::{HallError, Result};
pub use limits::Limits;
pub use quiver::{parse_quiver, Quiver};
pub use rep::Representation;
