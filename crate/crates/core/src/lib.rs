//! Exact max-plus (tropical) linear algebra.
//!
//! Everything runs over the semiring (ℝ ∪ {-inf}, max, +) with
//! arbitrary-precision rational scalars, so results are exact: no floating
//! point, no tolerances. The crate covers
//!
//! - tropical scalars, vectors and matrices ([`semiring`], [`matrix`]),
//! - formal max-polynomials and Newton-polygon root extraction ([`poly`]),
//! - the characteristic maxpolynomial and algebraic eigenvalues
//!   ([`charpoly`]), cross-checked by an independent factorial oracle,
//! - maximum cycle means, geometric eigenvectors, the numerical range and
//!   Rayleigh quotients ([`spectral`]),
//! - explicit generalized eigenvectors for every algebraic eigenvalue
//!   ([`geneig`]).
//!
//! The default `parallel` feature runs the heavy enumeration in
//! [`charpoly`] and the sampling sweep in [`spectral`] on rayon; disabling
//! it gives a sequential build with identical results.

pub mod charpoly;
mod error;
pub mod geneig;
pub mod matrix;
pub mod poly;
pub mod sampling;
pub mod semiring;
pub mod spectral;

pub use charpoly::Spectrum;
pub use error::{Error, Result};
pub use geneig::{ConstructionCase, ConstructionTrace, GenEigenpair};
pub use matrix::{TropMatrix, TropVector};
pub use poly::{MaxPolynomial, RootMultiset};
pub use semiring::Scalar;
pub use spectral::{RangeInterval, RayleighReport, SpanSample};
