use thiserror::Error;

/// Errors from the pointwise geometric formulas.
#[derive(Debug, Error)]
pub enum GeometryError {
    /// The gauge jet does not have full rank; the map is not an immersion.
    #[error("degenerate immersion: gram determinant {det:.3e} at or below zero")]
    DegenerateImmersion { det: f64 },
    /// The planar jacobian J_phi is not positive; the gauge map lost
    /// orientation and is no longer a diffeomorphism onto its image.
    #[error("orientation loss: J_phi = {jphi:.3e} <= 0")]
    OrientationLoss { jphi: f64 },
    /// v^2 exceeded the blow-up guard; inverting the metric would amplify
    /// roundoff past any useful tolerance.
    #[error("gradient blow-up: v^2 = {v2:.3e} exceeds guard {guard:.1e}")]
    GradientBlowup { v2: f64, guard: f64 },
    #[error("invalid contact angle beta = {beta}: need 0 < beta < 1")]
    InvalidAngle { beta: f64 },
}

/// Errors from the rotationally symmetric solvers.
#[derive(Debug, Error)]
pub enum RadialError {
    #[error("invalid grid size M = {m}: need M >= {min}")]
    GridTooCoarse { m: usize, min: usize },
    /// phi = 0 away from the axis: the rotationally symmetric
    /// parametrization is singular there.
    #[error("singular parametrization: phi = {phi:.3e} at node {node} away from the axis")]
    SingularParametrization { phi: f64, node: usize },
    /// phi is no longer strictly increasing; the 1D gauge map stopped being a
    /// diffeomorphism.
    #[error("diffeomorphism breakdown: phi not strictly increasing at node {node} (t = {t:.6})")]
    DiffeoBreakdown { node: usize, t: f64 },
    /// Initial data that cannot satisfy the contact + angle conditions.
    #[error("incompatible initial data: {reason}")]
    IncompatibleData { reason: String },
    #[error("catenoid profile undefined at r = {r}: need r > {rmin}")]
    CatenoidDomain { r: f64, rmin: f64 },
    /// The implicit front solve failed to converge.
    #[error("front solve stalled: |G| = {residual:.3e} after {iters} secant iterations")]
    FrontSolveStalled { residual: f64, iters: usize },
    #[error("gradient blow-up signal: v = {v:.3e} at node {node} (t = {t:.6})")]
    GradientBlowup { v: f64, node: usize, t: f64 },
}

/// Errors from the 2D split-gauge solver.
#[derive(Debug, Error)]
pub enum Gauge2dError {
    #[error("mesh too coarse: P = {p}, Q = {q}; need P >= 4 and Q >= 8")]
    MeshTooCoarse { p: usize, q: usize },
    /// The per-node boundary Newton solve did not reach tolerance.
    #[error("boundary solve failed at ring node {node}: residual {residual:.3e} after {iters} iterations (t = {t:.6})")]
    BoundaryNewton {
        node: usize,
        residual: f64,
        iters: usize,
        t: f64,
    },
    #[error("diffeomorphism breakdown: det Dphi = {det:.3e} <= 0 at node ({i},{j}) (t = {t:.6})")]
    DiffeoBreakdown { det: f64, i: usize, j: usize, t: f64 },
    /// The compatible-initial-map builder could not produce an injective map.
    #[error("initial map construction failed: {reason}")]
    DiffeoConstruction { reason: String },
    /// Reflection export requires u > 0 strictly inside the disk.
    #[error("reflection invalid: u = {u:.3e} at interior node ({i},{j})")]
    ReflectionInvalid { u: f64, i: usize, j: usize },
    #[error("graph extraction failed: {reason}")]
    ExtractionFailed { reason: String },
    #[error("invalid field data: {reason}")]
    InvalidField { reason: String },
}

/// Errors from the invariant monitors.
#[derive(Debug, Error)]
pub enum MonitorError {
    #[error("too few snapshots: got {got}, need at least {need}")]
    TooFewSnapshots { got: usize, need: usize },
    /// The precondition of the monitored lemma does not hold on the initial
    /// snapshot, so the monitor does not apply (reported, not failed).
    #[error("monitor not applicable: {reason}")]
    NotApplicable { reason: String },
    #[error("convergence study needs at least {need} resolutions, got {got}")]
    TooFewResolutions { got: usize, need: usize },
}

/// Errors from scenario configuration and run orchestration.
#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("config error: {0}")]
    Config(String),
    #[error("io error at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("solver breakdown: {0}")]
    Solver(String),
    #[error("monitor failure: {failed} of {total} checks failed")]
    MonitorFailure { failed: usize, total: usize },
}

impl From<RadialError> for ScenarioError {
    fn from(e: RadialError) -> Self {
        ScenarioError::Solver(e.to_string())
    }
}

impl From<Gauge2dError> for ScenarioError {
    fn from(e: Gauge2dError) -> Self {
        ScenarioError::Solver(e.to_string())
    }
}
