//! Constructive homological algebra for finite dimensional algebras over
//! exact fields: bound quiver algebras, module categories, minimal
//! resolutions, Gorenstein projective approximation, stable categories,
//! Serre duality and low-degree Hochschild cohomology.
//!
//! All arithmetic is exact (GF(p) or arbitrary-precision rationals) and
//! every operation is deterministic given its inputs and, where sampling
//! is involved, an explicit seed.

pub mod algebra;
pub mod cache;
pub mod corpus;
pub mod error;
pub mod field;
pub mod formats;
pub mod hochschild;
pub mod homology;
pub mod matrix;
pub mod module;
pub mod report;
pub mod stable;

pub use error::Error;
pub use field::{Field, FieldSpec, Fp, Rat};
pub use matrix::Matrix;
