//! Broken-circuit combinatorics and flag-form cohomology bases for ordered
//! affine hyperplane arrangements over the rationals.
//!
//! The crate is layered bottom-up:
//!
//! - [`arrangement`]: hyperplanes, the intersection lattice, deletion and
//!   restriction, the projective closure.
//! - [`matroid`]: circuits, broken circuits, nbc and βnbc bases, the
//!   characteristic polynomial and the order predicates.
//! - [`complexes`]: the broken circuit complex, the order complex of the
//!   lattice, shelling, and simplicial cohomology.
//! - [`osalgebra`]: the Orlik-Solomon algebra in nbc normal form, the Aomoto
//!   complex and flag forms.
//! - [`resonance`]: dense flats and the nonresonance predicates.
//! - [`bases`]: flag-form and monomial bases of the top Aomoto cohomology
//!   and transition matrices between linear orders.
//!
//! All arithmetic is exact. Batch loops run through [`Exec`], which uses
//! rayon when the `parallel` feature is enabled.

pub mod arrangement;
pub mod bases;
pub mod complexes;
pub mod error;
mod exec;
pub mod fixtures;
pub mod linalg;
pub mod matroid;
pub mod osalgebra;
pub mod random;
pub mod rational;
pub mod resonance;
pub mod verify;

pub use arrangement::{parse_arrangement, Arrangement};
pub use error::{Error, Result};
pub use exec::Exec;
pub use matroid::Matroid;
