//! Exact combinatorics of matroids, base polytopes, and the matroid
//! subdivisions of hypersimplices that are dual to biconvex polytopes
//! (polytropes) in tropical projective space.
//!
//! Everything is computed over explicit base collections and exact
//! rationals; no floating point, no LP solver.

pub mod biconvex;
pub mod bipartite;
pub mod io;
pub mod matroid;
pub mod polytope;
pub mod sample;
pub mod subdivision;
pub mod subset;
pub mod tropical;

/// Exact scalar used throughout the geometric layer.
pub type Rat = num_rational::Rational64;
