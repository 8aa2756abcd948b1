//! Exact computations on the hypermetric cone `HYP_n`, the cut cone `CUT_n`
//! and the metric cone `MET_n`.
//!
//! All vectors live in `R^N` with `N = n(n-1)/2`, indexed by unordered pairs
//! `(i, j)` with `i < j` in lexicographic order `12, 13, ..., 1n, 23, ...`.
//! Every computation is carried out in exact integer or rational arithmetic.

pub mod cones;
pub mod error;
pub mod hypermetric;
pub mod io;
pub mod linalg;
pub mod pairs;
pub mod pipeline;
pub mod symmetry;

pub use cones::{HCone, Inequality, RayVector, Side, VCone};
pub use error::{Error, Result};
pub use hypermetric::{BVector, CutSet, SimpleGraph};
pub use symmetry::{OrbitTable, PointPermutation};
