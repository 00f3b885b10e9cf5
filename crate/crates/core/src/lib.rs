//! Numerical laboratory for Anderson localization and eigenvalue statistics
//! of critical Erdős–Rényi graphs.
//!
//! The crate generates G(N, d/N) graphs at the critical sparseness
//! d = b·log N, computes extremal and bulk eigenpairs of the rescaled
//! adjacency matrix H = A/√d, and measures the quantities that organize its
//! phase diagram: localization profiles around high-degree vertices, the
//! localization length across the mobility edge at |λ| = 2, eigenvalue
//! spacing statistics, and the anticoncentration machinery (cavity
//! recursion, Lévy concentration, robust vertices) that controls them.

// domain guards are written `!(x >= lo)` so NaN inputs fail them too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod localization;
pub mod phase;
pub mod rng;
pub mod spacing;
pub mod theory;

pub mod cli;

pub use error::{Error, Result};
