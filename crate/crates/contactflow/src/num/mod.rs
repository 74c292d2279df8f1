//! Shared numerical primitives: tridiagonal solves with one wide boundary
//! row, finite-difference stencils, local polynomial interpolation and
//! observed-order estimation.

pub mod interp;
pub mod order;
pub mod stencils;
pub mod tridiag;

pub use interp::{cubic_fit_slope_curvature, interp_cubic, interp_cubic_into, interp_linear};
pub use order::{lsq_order, stepwise_orders};
pub use stencils::*;
pub use tridiag::{backsub_from_first, backsub_from_last, hybrid_weights, TriDiag};
