//! Exact-arithmetic toolkit for nerves of convex polytope families.
//!
//! The crate answers questions of the form "which subfamilies of these
//! convex sets have a common point, and what does the resulting simplicial
//! complex look like": nerve skeletons of rational V-polytope families,
//! Helly-style reconstruction of full nerves from low skeletons, certificate
//! verification for claimed realizations, suspension lifts between ambient
//! dimensions, a polynomial-time decision procedure for interval realizability
//! on the line, and a complexity classifier for the general recognition
//! problem. All geometry runs over arbitrary-precision rationals, so every
//! answer is exact and most answers carry checkable witnesses.

pub mod complex;
pub mod error;
pub mod geometry;
pub mod io;
pub mod lifting;
pub mod nerve;
pub mod oracle;
pub mod recognize;

#[cfg(test)]
pub(crate) mod testutil;

pub use complex::{face, Face, SimplicialComplex, VertexId};
pub use error::{Error, Result};
