//! Numerical simulator and invariant-certification suite for mean curvature
//! motion of graph hypersurfaces that meet the horizontal plane at a constant
//! contact angle along a moving free boundary (the junction).
//!
//! The surface is the graph of `w` over a moving domain `D(t)`, evolving by
//! `w_t = g^{ij}(Dw) w_ij` with `w = 0` and `|Dw| = beta0/beta` on the
//! junction, so the unit normal makes the fixed angle `arccos(beta)` with the
//! vertical there. The junction itself moves with normal velocity `-H/beta0`.
//!
//! Three discretizations of the same motion live side by side and validate
//! one another:
//!
//! * [`radial`] — the rotationally symmetric reduction (n = 2), in a
//!   moving-domain graph mode with explicit front tracking and in a fixed-grid
//!   split-gauge mode `(phi, u)` with linear boundary rows; lens (disk) and
//!   exterior (catenoid-type) cases.
//! * [`gauge2d`] — the full two-dimensional split-gauge flow
//!   `F_t = g^{ij}(DF) F_ij`, `F = [phi, u]`, on a fixed polar disk mesh with
//!   the nonlinear angle and orthogonality boundary conditions solved per ring
//!   node by damped Newton iteration.
//! * [`geometry`] — the shared pointwise formulas: metric, shape operator,
//!   vector-product normal, and the closed-form right-hand sides of the
//!   evolution identities used as runtime residual oracles.
//!
//! [`monitors`] certifies maximum-principle invariants (height, gradient,
//! concavity, mean-curvature barrier) and evolution/boundary identities
//! against recorded snapshot series, with measured convergence orders.
//! [`scenario`] provides config-driven batch runs, snapshot persistence and
//! reproducible reports; the companion CLI crate exposes them as subcommands.

pub mod error;
pub mod gauge2d;
pub mod geometry;
pub mod monitors;
pub mod num;
pub mod radial;
pub mod scenario;

pub use error::{Gauge2dError, GeometryError, MonitorError, RadialError, ScenarioError};
