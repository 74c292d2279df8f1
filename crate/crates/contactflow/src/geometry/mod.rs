//! Pointwise differential geometry of graph and split-gauge immersions in
//! R^{n+1}: induced metric, second fundamental form, vector-product normal,
//! and the closed-form right-hand sides of the evolution identities satisfied
//! along the flow. Everything here is a pure function of the supplied jets.

pub mod angle;
pub mod evolution;
pub mod metric;
pub mod normal;
pub mod shape;

pub use angle::AngleParams;
pub use evolution::{
    covariant_to_euclidean_dh, dginv, euclidean_to_covariant_dh, evolution_rhs, grad_h_norm2_g,
    grad_term, l_mean_curv_assembled, second_derivative_correction, variants, EvolutionRhs,
    Tensor3,
};
pub use metric::{
    compute_metric, compute_metric_guarded, covector_norm2_g, tensor_norm2_g, vector_norm2_g,
    MetricData, V2_GUARD,
};
pub use normal::{cross_normal, gauge_metric, gauge_rhs, GaugeJet, GaugeJet2, NormalData};
pub use shape::{compute_shape, compute_shape_with_metric, graph_rhs, ShapeData};
