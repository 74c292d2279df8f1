use super::metric::MetricData;
use crate::error::GeometryError;
use nalgebra::{Matrix2, Matrix3x2, Vector2, Vector3};

/// First derivatives of a split-gauge map F = (phi^1, phi^2, u): D -> R^3,
/// stored as the two jet columns F_1 = dF/dy^1, F_2 = dF/dy^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaugeJet {
    pub f1: Vector3<f64>,
    pub f2: Vector3<f64>,
}

/// Second derivatives of a split-gauge map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaugeJet2 {
    pub f11: Vector3<f64>,
    pub f12: Vector3<f64>,
    pub f22: Vector3<f64>,
}

impl GaugeJet {
    /// Jacobian as a 3x2 matrix with columns F_1, F_2.
    pub fn jacobian(&self) -> Matrix3x2<f64> {
        Matrix3x2::from_columns(&[self.f1, self.f2])
    }

    /// Horizontal block D(phi) as a 2x2 matrix (rows: phi^1, phi^2).
    pub fn dphi(&self) -> Matrix2<f64> {
        Matrix2::new(self.f1[0], self.f2[0], self.f1[1], self.f2[1])
    }

    /// Vertical row Du = (u_1, u_2).
    pub fn du(&self) -> Vector2<f64> {
        Vector2::new(self.f1[2], self.f2[2])
    }
}

/// Vector-product normal data of a two-dimensional gauge immersion.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalData {
    /// Unnormalised normal N~ = F_1 x F_2.
    pub ntilde: Vector3<f64>,
    /// Unit normal N~ / |N~|.
    pub n: Vector3<f64>,
    /// Horizontal part J = (N~^1, N~^2); for F = (id, Du) this is -Du.
    pub jvec: Vector2<f64>,
    /// Vertical part J_phi = N~^3 = det D(phi) > 0 on valid immersions.
    pub jphi: f64,
}

/// Cross-product normal of a gauge jet. Errors when the horizontal map loses
/// orientation (det Dphi <= 0) or the immersion is rank-deficient.
pub fn cross_normal(jet: &GaugeJet) -> Result<NormalData, GeometryError> {
    let ntilde = jet.f1.cross(&jet.f2);
    let jphi = ntilde[2];
    if !(jphi > 0.0) {
        return Err(GeometryError::OrientationLoss { jphi });
    }
    let norm = ntilde.norm();
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(GeometryError::DegenerateImmersion { det: norm * norm });
    }
    Ok(NormalData {
        ntilde,
        n: ntilde / norm,
        jvec: Vector2::new(ntilde[0], ntilde[1]),
        jphi,
    })
}

/// Full induced metric of a gauge immersion: g_ij = <F_i, F_j>, with the
/// vertical stretch v = |N~| / det Dphi (= sqrt(1 + |Dw|^2) when phi = id).
pub fn gauge_metric(jet: &GaugeJet) -> Result<MetricData<2>, GeometryError> {
    let g = Matrix2::new(
        jet.f1.dot(&jet.f1),
        jet.f1.dot(&jet.f2),
        jet.f2.dot(&jet.f1),
        jet.f2.dot(&jet.f2),
    );
    let det = g[(0, 0)] * g[(1, 1)] - g[(0, 1)] * g[(1, 0)];
    if !(det > f64::EPSILON) || !det.is_finite() {
        return Err(GeometryError::DegenerateImmersion { det });
    }
    let ginv = Matrix2::new(g[(1, 1)], -g[(0, 1)], -g[(1, 0)], g[(0, 0)]) / det;
    // Lagrange identity: |F_1 x F_2|^2 = det g, so v = sqrt(det g)/J_phi.
    let normal = cross_normal(jet)?;
    Ok(MetricData {
        g,
        ginv,
        v: det.sqrt() / normal.jphi,
    })
}

/// Gauge-flow right-hand side g^ij F_ij, a full R^3 vector: horizontal
/// components reparametrise, the normal part carries v H.
pub fn gauge_rhs(jet: &GaugeJet, jet2: &GaugeJet2) -> Result<Vector3<f64>, GeometryError> {
    let m = gauge_metric(jet)?;
    Ok(m.ginv[(0, 0)] * jet2.f11
        + 2.0 * m.ginv[(0, 1)] * jet2.f12
        + m.ginv[(1, 1)] * jet2.f22)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{compute_metric, compute_shape, graph_rhs};
    use nalgebra::Matrix2;

    fn graph_jet(dw: Vector2<f64>) -> GaugeJet {
        GaugeJet {
            f1: Vector3::new(1.0, 0.0, dw[0]),
            f2: Vector3::new(0.0, 1.0, dw[1]),
        }
    }

    #[test]
    fn identity_gauge_normal_is_minus_du() {
        let dw = Vector2::new(0.3, -1.2);
        let nd = cross_normal(&graph_jet(dw)).unwrap();
        assert!((nd.jvec - (-dw)).norm() < 1e-15);
        assert!((nd.jphi - 1.0).abs() < 1e-15);
        assert!((nd.ntilde.norm() - (1.0 + dw.norm_squared()).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn gauge_metric_matches_graph_metric_at_identity() {
        let dw = Vector2::new(3.0f64.sqrt(), 0.0);
        let mg = gauge_metric(&graph_jet(dw)).unwrap();
        let m = compute_metric(&dw);
        assert!((mg.g - m.g).norm() < 1e-14);
        assert!((mg.ginv - m.ginv).norm() < 1e-14);
        assert!((mg.v - 2.0).abs() < 1e-14);
    }

    #[test]
    fn orientation_loss_detected() {
        // swap the horizontal axes: det Dphi = -1
        let jet = GaugeJet {
            f1: Vector3::new(0.0, 1.0, 0.0),
            f2: Vector3::new(1.0, 0.0, 0.0),
        };
        assert!(matches!(
            cross_normal(&jet),
            Err(GeometryError::OrientationLoss { .. })
        ));
    }

    #[test]
    fn gauge_rhs_normal_part_matches_graph_rhs() {
        // phi = id: <g^ij F_ij, N> = tr(ginv <D2F, N>) reduces to
        // (g^ij w_ij) * <e3, N> + 0, and the vertical component is g^ij w_ij.
        let dw = Vector2::new(0.5, -0.1);
        let d2w = Matrix2::new(0.9, 0.3, 0.3, -0.4);
        let jet = graph_jet(dw);
        let jet2 = GaugeJet2 {
            f11: Vector3::new(0.0, 0.0, d2w[(0, 0)]),
            f12: Vector3::new(0.0, 0.0, d2w[(0, 1)]),
            f22: Vector3::new(0.0, 0.0, d2w[(1, 1)]),
        };
        let rhs = gauge_rhs(&jet, &jet2).unwrap();
        assert!(rhs[0].abs() < 1e-15 && rhs[1].abs() < 1e-15);
        assert!((rhs[2] - graph_rhs(&dw, &d2w)).abs() < 1e-14);
        // normal projection is the mean curvature: <g^ij F_ij, N> = H
        let nd = cross_normal(&jet).unwrap();
        let s = compute_shape(&dw, &d2w);
        assert!((rhs.dot(&nd.n) - s.h_mean).abs() < 1e-13);
    }

    #[test]
    fn scaled_identity_gauge() {
        // phi = 2 id, u = 0: g = 4 I, v = 1, rhs = 0 on linear data.
        let jet = GaugeJet {
            f1: Vector3::new(2.0, 0.0, 0.0),
            f2: Vector3::new(0.0, 2.0, 0.0),
        };
        let m = gauge_metric(&jet).unwrap();
        assert!((m.g - Matrix2::identity() * 4.0).norm() < 1e-15);
        assert!((m.v - 1.0).abs() < 1e-15);
    }
}
