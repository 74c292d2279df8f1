//! Rotationally symmetric solvers: the moving-front lens graph mode, the
//! fixed-grid split-gauge mode (lens and exterior), closed-form profiles and
//! cross-validation between the two realizations of the motion.

pub mod cross;
pub mod gauge;
pub mod graph;
pub mod profile;

pub use cross::{gauge_height_at, graph_gauge_discrepancy, Discrepancy};
pub use gauge::{
    propose_dt_gauge, step_gauge_radial, GaugeGrid, OuterBc, RadialCase, RadialGaugeState,
};
pub use graph::{
    propose_dt_graph, step_graph_radial, ExtinctionEvent, GraphStep, RadialGraphState,
};
pub use profile::{cap_height, catenoid, paraboloid_height, radial_h, CatenoidProfile};
