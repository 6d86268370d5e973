//! Zernike circular polynomials, exactly.
//!
//! The crate converts between the Noll single index, the ANSI single index
//! and the `(n, m)` double index, computes the integer coefficients of the
//! radial polynomials together with the normalization radicand and angular
//! factor, prints the polynomials through pluggable syntax profiles,
//! evaluates them on the unit disk, verifies orthonormality by quadrature,
//! and generates multi-page LaTeX tables of arbitrary index ranges.
//!
//! All index and coefficient arithmetic is integer-exact; floating point
//! appears only in evaluation and quadrature. Modules:
//!
//! - [`indexing`]: index schemes and conversions
//! - [`coefficients`]: exact radial coefficients, normalization, angular kind
//! - [`symbolic`]: expression emitters over syntax profiles
//! - [`evaluation`]: point evaluation and disk quadrature
//! - [`tablegen`]: LaTeX longtable output

pub mod coefficients;
pub mod error;
pub mod evaluation;
pub mod indexing;
pub mod symbolic;
pub mod tablegen;

pub use coefficients::{
    AngularFactor, AngularKind, CoefficientRecord, Normalization, RadialPoly, ZernikeSpec,
};
pub use error::{Error, Result};
pub use evaluation::{EvalPoint, QuadratureConfig};
pub use indexing::{AnsiIndex, BwIndex, NollIndex, SeqPosition};
pub use symbolic::SyntaxProfile;
pub use tablegen::TableSpec;
