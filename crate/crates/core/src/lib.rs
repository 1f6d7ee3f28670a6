//! Exact graph invariants and certificate checkers for low tree-depth
//! colourings, star colourings, shallow topological minors, holes and
//! digraph homomorphism dualities.
//!
//! Every solver returns a certificate that can be re-checked without the
//! solver's search code, and every exact solver has an explicit size cap:
//! exceeding it is an error, never a silently approximate answer.

pub mod error;
pub mod graph;
pub mod holes;
pub mod hom;
pub mod invariants;
pub mod minors;

pub(crate) mod bits;

pub use error::{Error, Result};
pub use graph::{Digraph, Graph};
