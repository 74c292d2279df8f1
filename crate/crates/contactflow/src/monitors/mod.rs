//! Certification instruments: everything here measures a run instead of
//! advancing it. Bounds that a maximum principle pins (gradient, height,
//! concavity), the blow-up envelope for concave data, the junction speed
//! law, the on-shell interior and boundary identity residuals, and the
//! refinement bookkeeping used by convergence gates.

pub mod barrier;
pub mod boundary;
pub mod bounds;
pub mod convergence;
pub mod identities;
pub mod kinematics;
pub mod report;
pub mod snapshot;

pub use barrier::{barrier_check, BarrierOutcome, BarrierParams};
pub use boundary::{
    boundary_residuals_onshell, boundary_window_sup, standard_window_times,
    BoundaryIdentityResiduals, BoundaryWindowSup,
};
pub use bounds::{concavity_check, gradient_bound_check, height_bound_check};
pub use convergence::{
    catenoid_drift, catenoid_truncation_tau, CatenoidDriftReport, ConvergenceStudy,
};
pub use identities::{interior_residuals, standard_probes, InteriorIdentityResiduals};
pub use kinematics::{
    junction_law_gauge2d, junction_law_graph, junction_law_radial_gauge, JunctionLawSeries,
};
pub use report::MonitorCheck;
pub use snapshot::{graph_run_at_times, graph_run_snapshots, GraphJets, GraphRun, GraphSnapshot};
