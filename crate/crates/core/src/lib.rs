//! Graded modules over polynomial rings: Gröbner bases, minimal free
//! resolutions, depth, dimension, Cohen-Macaulay defect, Ext, and decision
//! procedures for Serre-type conditions.

pub mod error;
pub mod extint;
pub mod field;
pub mod groebner;
pub mod invariants;
pub mod par;
pub mod poly;
pub mod resolution;
pub mod serre;
pub mod corpus;

pub use error::{Error, Result};
pub use extint::ExtendedInt;
pub use field::{CoefficientField, FieldKind, Scalar};
