//! Exact computer algebra for holomorphic foliations on weighted
//! projective spaces `P(w0, ..., wn)`.
//!
//! Everything is computed over the rationals with sparse exact
//! polynomials: extactic polynomials and the invariant curves and rational
//! first integrals they detect, Darboux integrability from cofactors,
//! Chern-class counts of singularities, and the associated degree bounds.

pub mod cli;
pub mod counts;
pub mod error;
pub mod extactic;
pub mod foliation;
pub mod integrability;
mod linalg;
pub mod poly;
pub mod weights;
pub mod wps;

pub use error::{Error, Result};
pub use extactic::{ExtacticReport, InvariantCertificate};
pub use foliation::{OneForm, VectorField};
pub use poly::{Monomial, Polynomial, Rational, WeightedDegree};
pub use weights::Weights;
pub use wps::{ChernPolynomial, LinearSystem, QLineClass};
