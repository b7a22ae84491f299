//! Slope analysis for linear automorphisms of Q_p^n.
//!
//! The expansiveness decision is made from the Newton polygon alone, so it
//! is exact and precision-free. Slope subspaces are obtained by grouping
//! characteristic-polynomial factors by polygon slope via Hensel lifting and
//! extracting kernels at working precision; lattices carry the tidying side.

mod decompose;
mod error;
mod json;
mod lattice;
mod matrix;
mod newton;
mod report;

pub use decompose::{
    expansiveness_with_decomposition, is_expansive_linear, slope_decompose,
    slope_decompose_cancellable, SlopeBlock, SlopeDecomposition,
};
pub use error::SlopeError;
pub use json::{slope_multiset_json, MatrixInput};
pub use lattice::{tidy_lattice, v0_shrinkage, Lattice};
pub use matrix::Matrix;
pub use newton::NewtonPolygon;
pub use report::{module_report, ModuleReport};
