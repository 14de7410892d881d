//! Exact computation with differential graded vertex Lie algebras.
//!
//! A dg vertex Lie algebra `U` is given by a finite [`vla::VlaPresentation`].
//! From it the engine builds the mode dg Lie algebra `L(U)`
//! ([`loop_algebra`]), checks its axioms on a window of mode indices, and
//! constructs the enveloping dg vertex algebra `V(U)` on weight-truncated PBW
//! bases ([`envelope`]). [`catalog`] provides the Virasoro, Neveu-Schwarz and
//! affine examples together with the Sugawara construction.
//!
//! All arithmetic is exact over the rationals.

pub mod catalog;
pub mod combination;
pub mod envelope;
pub mod error;
mod format;
pub mod graded;
pub mod loop_algebra;
pub mod report;
pub mod scalar;
pub mod vla;

pub use combination::Combination;
pub use error::{Error, FormCondition};
pub use graded::{binomial, koszul_sign, Degree, Parity};
pub use scalar::Scalar;
