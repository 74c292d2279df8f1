use crate::error::GeometryError;
use nalgebra::{SMatrix, SVector};

/// Gradient magnitude guard: v^2 above this is treated as a blow-up signal by
/// `compute_metric_guarded` (the closed-form inverse itself never fails).
pub const V2_GUARD: f64 = 1e8;

/// Induced metric data of a graph slice x -> (x, w(x)).
#[derive(Debug, Clone, PartialEq)]
pub struct MetricData<const N: usize> {
    /// g_ij = delta_ij + w_i w_j
    pub g: SMatrix<f64, N, N>,
    /// g^ij = delta_ij - w_i w_j / v^2
    pub ginv: SMatrix<f64, N, N>,
    /// Area element v = sqrt(1 + |Dw|^2) >= 1.
    pub v: f64,
}

/// Metric of a graph from its gradient. Total: the rank-one update formula
/// inverts g in closed form for any finite Dw.
pub fn compute_metric<const N: usize>(dw: &SVector<f64, N>) -> MetricData<N> {
    let v2 = 1.0 + dw.norm_squared();
    let outer = dw * dw.transpose();
    MetricData {
        g: SMatrix::identity() + outer,
        ginv: SMatrix::identity() - outer / v2,
        v: v2.sqrt(),
    }
}

/// As `compute_metric`, but refuses gradients with v^2 > V2_GUARD so callers
/// can surface an approach to gradient blow-up instead of silently continuing.
pub fn compute_metric_guarded<const N: usize>(
    dw: &SVector<f64, N>,
) -> Result<MetricData<N>, GeometryError> {
    let v2 = 1.0 + dw.norm_squared();
    if !(v2 <= V2_GUARD) {
        return Err(GeometryError::GradientBlowup {
            v2,
            guard: V2_GUARD,
        });
    }
    Ok(compute_metric(dw))
}

/// Squared g-norm of a tangent vector (upper index): |X|_g^2 = g_ij X^i X^j.
/// Sandwiched between |X|_e^2 and v^2 |X|_e^2.
pub fn vector_norm2_g<const N: usize>(m: &MetricData<N>, x: &SVector<f64, N>) -> f64 {
    (m.g * x).dot(x)
}

/// Squared g-norm of a covector (lower index): |X|_g^2 = g^ij X_i X_j.
pub fn covector_norm2_g<const N: usize>(m: &MetricData<N>, x: &SVector<f64, N>) -> f64 {
    (m.ginv * x).dot(x)
}

/// Squared g-norm of a symmetric 2-tensor with lower indices:
/// |T|_g^2 = g^ik g^jl T_ij T_kl = tr(ginv T ginv T).
pub fn tensor_norm2_g<const N: usize>(m: &MetricData<N>, t: &SMatrix<f64, N, N>) -> f64 {
    let a = m.ginv * t;
    (a * a).trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::{Matrix2, Vector2};

    #[test]
    fn junction_slope_example() {
        // |Dw| = sqrt(3): v = 2, ginv = diag(1/4, 1) in the aligned frame.
        let dw = Vector2::new(3.0f64.sqrt(), 0.0);
        let m = compute_metric(&dw);
        assert!((m.v - 2.0).abs() < 1e-15);
        assert!((m.ginv - Matrix2::new(0.25, 0.0, 0.0, 1.0)).norm() < 1e-15);
        assert!((m.g - Matrix2::new(4.0, 0.0, 0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn inverse_is_exact() {
        let dw = Vector2::new(0.7, -1.3);
        let m = compute_metric(&dw);
        assert!((m.g * m.ginv - Matrix2::identity()).norm() < 1e-14);
    }

    #[test]
    fn guard_trips_on_steep_gradient() {
        let dw = Vector2::new(1e5, 0.0);
        assert!(matches!(
            compute_metric_guarded(&dw),
            Err(GeometryError::GradientBlowup { .. })
        ));
        assert!(compute_metric_guarded(&Vector2::new(3.0, 4.0)).is_ok());
    }

    #[test]
    fn norm_sandwich() {
        let dw = Vector2::new(1.0, 2.0);
        let m = compute_metric(&dw);
        let x = Vector2::new(-0.4, 0.9);
        // vectors: |X|_e^2 <= |X|_g^2 <= v^2 |X|_e^2
        let ng = vector_norm2_g(&m, &x);
        let ne = x.norm_squared();
        assert!(ne - 1e-15 <= ng && ng <= m.v * m.v * ne + 1e-15);
        // covectors contract with ginv: the sandwich flips
        let nc = covector_norm2_g(&m, &x);
        assert!(ne / (m.v * m.v) - 1e-15 <= nc && nc <= ne + 1e-15);
    }
}
