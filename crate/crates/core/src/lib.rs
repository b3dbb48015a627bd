//! Planar disks as unit space-like vectors in Minkowski space.

// `!(x <= tol)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod apollonian;
pub mod cli;
pub mod descartes;
pub mod error;
mod format;
pub mod linalg;
pub mod minkowski;
pub mod nsphere;

pub use error::{Error, Result};
