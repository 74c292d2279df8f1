use super::metric::{compute_metric, tensor_norm2_g, MetricData};
use nalgebra::{SMatrix, SVector};

/// Second-fundamental-form package of a graph slice, all lower-index tensors
/// taken with respect to the upward normal (concave caps have H < 0).
#[derive(Debug, Clone, PartialEq)]
pub struct ShapeData<const N: usize> {
    /// h_ij = w_ij / v
    pub h: SMatrix<f64, N, N>,
    /// Mean curvature H = g^ij h_ij.
    pub h_mean: f64,
    /// |h|_g^2 = g^ik g^jl h_ij h_kl
    pub h_norm2: f64,
    /// omega^i = w_i / v, the tangential part of e_{n+1}; |omega| < 1.
    pub omega: SVector<f64, N>,
    /// (h^2)_ij = h_ik g^kl h_lj
    pub h2: SMatrix<f64, N, N>,
    /// (h^3)_ij = (h^2)_ik g^kl h_lj
    pub h3: SMatrix<f64, N, N>,
    /// Weingarten operator S^i_j = g^ik h_kj (not symmetric as a matrix).
    pub weingarten: SMatrix<f64, N, N>,
}

/// Shape data from the first two derivatives of the height function.
pub fn compute_shape<const N: usize>(
    dw: &SVector<f64, N>,
    d2w: &SMatrix<f64, N, N>,
) -> ShapeData<N> {
    let m = compute_metric(dw);
    compute_shape_with_metric(&m, dw, d2w)
}

/// As `compute_shape` when the metric is already available.
pub fn compute_shape_with_metric<const N: usize>(
    m: &MetricData<N>,
    dw: &SVector<f64, N>,
    d2w: &SMatrix<f64, N, N>,
) -> ShapeData<N> {
    let h = d2w / m.v;
    let weingarten = m.ginv * h;
    let h2 = h * m.ginv * h;
    let h3 = h2 * m.ginv * h;
    ShapeData {
        h,
        h_mean: weingarten.trace(),
        h_norm2: tensor_norm2_g(m, &h),
        omega: dw / m.v,
        h2,
        h3,
        weingarten,
    }
}

/// Graph-flow right-hand side g^ij w_ij = v H. Scalar convenience used by the
/// solvers; agrees with tr(ginv * d2w) by construction.
pub fn graph_rhs<const N: usize>(dw: &SVector<f64, N>, d2w: &SMatrix<f64, N, N>) -> f64 {
    let m = compute_metric(dw);
    (m.ginv * d2w).trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::{Matrix2, Vector2};

    #[test]
    fn hemisphere_mean_curvature() {
        // w = sqrt(1 - r^2) at r = 0.6 along x: H = -2 for the unit upper
        // hemisphere in R^3 with upward normal.
        let (x, y) = (0.6, 0.0);
        let w = (1.0 - x * x - y * y as f64).sqrt();
        let dw = Vector2::new(-x / w, -y / w);
        // w_ij = -(delta_ij + w_i w_j)/w for the sphere graph
        let d2w = -(Matrix2::identity() + dw * dw.transpose()) / w;
        let s = compute_shape(&dw, &d2w);
        assert!((s.h_mean - (-2.0)).abs() < 1e-12);
        assert!((s.h_norm2 - 2.0).abs() < 1e-12);
        // umbilic: h^2 has g-trace H^2/2 pointwise on a sphere slice
        let m = compute_metric(&dw);
        assert!(((m.ginv * s.h2).trace() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn graph_rhs_is_v_times_h() {
        let dw = Vector2::new(0.4, -0.2);
        let d2w = Matrix2::new(1.3, 0.2, 0.2, -0.8);
        let m = compute_metric(&dw);
        let s = compute_shape(&dw, &d2w);
        assert!((graph_rhs(&dw, &d2w) - m.v * s.h_mean).abs() < 1e-13);
    }

    #[test]
    fn omega_stays_subunit() {
        let dw = Vector2::new(40.0, -9.0);
        let s = compute_shape(&dw, &Matrix2::zeros());
        assert!(s.omega.norm() < 1.0);
    }

    #[test]
    fn h_norm2_equals_weingarten_frobenius_pairing() {
        // |h|_g^2 = tr(S S) with S the Weingarten operator.
        let dw = Vector2::new(-0.9, 0.35);
        let d2w = Matrix2::new(0.7, -0.4, -0.4, 1.1);
        let s = compute_shape(&dw, &d2w);
        assert!((s.h_norm2 - (s.weingarten * s.weingarten).trace()).abs() < 1e-13);
    }
}
