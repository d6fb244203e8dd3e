//! Exact generating functions for Euler characteristics of punctual Hilbert
//! schemes and flag Hilbert schemes of torus-invariant curve singularities.
//!
//! Every identity is computed along independent routes and compared as a
//! truncated formal series with exact integer coefficients:
//!
//! * [`formulas`] holds the closed-form product and sum formulas,
//! * [`partitions`] enumerates the constrained partitions indexing the
//!   torus-fixed points,
//! * [`semigroup`] counts monomial ideals (staircases) and nested pairs of
//!   them directly in the value semigroup of the curve,
//! * [`verify`] runs the comparisons and produces reports,
//! * [`cli`] is the command-line front end behind the `hilbcurve` binary.

pub mod cli;
pub mod error;
pub mod formulas;
pub mod partitions;
pub mod qseries;
pub mod semigroup;
pub mod verify;

pub use error::{Budget, Error, Result};
pub use formulas::LciParams;
pub use partitions::{Partition, RsnParams};
pub use qseries::{BivariatePoly, LaurentPoly};
pub use semigroup::{NumericalSemigroup, Staircase};
pub use verify::{CheckSpec, Status, VerificationReport};
