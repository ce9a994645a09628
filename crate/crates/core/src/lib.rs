//! Reliability polynomials of simplicial complexes and matroids, and where
//! their roots sit relative to the closed unit disk.
//!
//! The crate is organized by concern:
//!
//! * [`complex`] stores complexes by facets and provides deletion, link,
//!   sums, skeleta and the loop/coloop predicates.
//! * [`poly`] holds the exact polynomial type, the F/H transforms and the
//!   reliability polynomial.
//! * [`matroid`] recognizes matroids and builds the standard families.
//! * [`graphs`] covers cographic matroids, broken-circuit complexes and
//!   chromatic polynomials.
//! * [`constructions`] implements thickening, k-replacement and the
//!   k-vector search.
//! * [`roots`] finds roots numerically and implements the exact unit-disk
//!   criteria.
//! * [`random_model`] samples random pure complexes and runs the disk
//!   experiment.
//! * [`reference`] records published values for the demos and checks.
//!
//! Exact work happens over [`BigInt`]/[`BigRational`]; the criteria and the
//! root finder are generic over the [`Scalar`] and `num_traits::Float`
//! abstractions, with the common instantiations aliased below.

pub mod complex;
pub mod constructions;
pub mod error;
pub mod graphs;
pub mod matroid;
pub mod poly;
pub mod random_model;
pub mod reference;
pub mod roots;
pub mod scalar;
mod union_find;

pub use complex::{Face, SimplicialComplex};
pub use constructions::{gen_substitute, k_search, replace, thicken, KVector, SearchRecord};
pub use error::{Error, Result};
pub use graphs::{broken_circuit_complex, chromatic_polynomial, cographic_matroid, Multigraph};
pub use matroid::{is_matroid, is_shellable};
pub use num_bigint::BigInt;
pub use num_complex::Complex;
pub use num_rational::BigRational;
pub use poly::{FVector, HVector, IntegerPolynomial, Polynomial, RationalPolynomial, Reliability};
pub use roots::{find_roots, find_roots_with, DecidedBy, RootReport, Verdict};
pub use scalar::Scalar;
pub use union_find::DisjointSets;

/// Root report in double precision.
pub type RootReport64 = RootReport<f64>;
/// Root report in single precision.
pub type RootReport32 = RootReport<f32>;
/// Brown–Colbourn check with exact rational arithmetic.
pub type ExactBrownColbourn = poly::BrownColbournReport<BigRational>;
/// Brown–Colbourn check in double precision.
pub type BrownColbourn64 = poly::BrownColbournReport<f64>;
