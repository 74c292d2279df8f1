use super::field::GaugeField2D;
use crate::error::Gauge2dError;

/// Triangle over the image plane with node heights, used for scattered
/// interpolation of u at gauge preimages.
struct Tri {
    x: [f64; 3],
    y: [f64; 3],
    u: [f64; 3],
    bbox: [f64; 4],
}

impl Tri {
    fn new(x: [f64; 3], y: [f64; 3], u: [f64; 3]) -> Self {
        let bbox = [
            x[0].min(x[1]).min(x[2]),
            x[0].max(x[1]).max(x[2]),
            y[0].min(y[1]).min(y[2]),
            y[0].max(y[1]).max(y[2]),
        ];
        Self { x, y, u, bbox }
    }

    /// Barycentric evaluation; None if the point is outside (or the triangle
    /// is degenerate).
    fn eval(&self, px: f64, py: f64) -> Option<f64> {
        if px < self.bbox[0] - 1e-12
            || px > self.bbox[1] + 1e-12
            || py < self.bbox[2] - 1e-12
            || py > self.bbox[3] + 1e-12
        {
            return None;
        }
        let (x, y) = (&self.x, &self.y);
        let d = (y[1] - y[2]) * (x[0] - x[2]) + (x[2] - x[1]) * (y[0] - y[2]);
        if d.abs() < 1e-300 {
            return None;
        }
        let l0 = ((y[1] - y[2]) * (px - x[2]) + (x[2] - x[1]) * (py - y[2])) / d;
        let l1 = ((y[2] - y[0]) * (px - x[2]) + (x[0] - x[2]) * (py - y[2])) / d;
        let l2 = 1.0 - l0 - l1;
        // Barycentric coordinates are affine-invariant; a fixed slack keeps
        // shared edges owned by at least one neighbor.
        let tol = 1e-9;
        if l0 < -tol || l1 < -tol || l2 < -tol {
            return None;
        }
        Some(l0 * self.u[0] + l1 * self.u[1] + l2 * self.u[2])
    }
}

fn image_triangles(field: &GaugeField2D) -> Vec<Tri> {
    let m = field.mesh;
    let at = |i: usize, j: usize| {
        let n = m.idx(i, j % m.q);
        (field.f[0][n], field.f[1][n], field.f[2][n])
    };
    let mut tris = Vec::with_capacity(m.q * (2 * m.p - 1));
    for j in 0..m.q {
        let p0 = at(0, 0);
        let p1 = at(1, j);
        let p2 = at(1, j + 1);
        tris.push(Tri::new([p0.0, p1.0, p2.0], [p0.1, p1.1, p2.1], [p0.2, p1.2, p2.2]));
    }
    for i in 1..m.p {
        for j in 0..m.q {
            let a = at(i, j);
            let b = at(i + 1, j);
            let c = at(i + 1, j + 1);
            let d = at(i, j + 1);
            tris.push(Tri::new([a.0, b.0, c.0], [a.1, b.1, c.1], [a.2, b.2, c.2]));
            tris.push(Tri::new([a.0, c.0, d.0], [a.1, c.1, d.1], [a.2, c.2, d.2]));
        }
    }
    tris
}

/// Heights of the extracted graph w at the given image-plane points: the
/// gauge image is triangulated and u interpolated barycentrically at each
/// target's preimage cell. Points outside the image (beyond the moving
/// junction) come back as None. With the identity gauge this reduces to
/// sampling u itself; the ring is the zero level set of the extracted graph.
pub fn extract_graph(
    field: &GaugeField2D,
    targets: &[[f64; 2]],
) -> Result<Vec<Option<f64>>, Gauge2dError> {
    if field.f[2].iter().any(|u| !u.is_finite()) {
        return Err(Gauge2dError::ExtractionFailed {
            reason: "height field contains a non-finite value".into(),
        });
    }
    let tris = image_triangles(field);
    Ok(targets
        .iter()
        .map(|&[px, py]| tris.iter().find_map(|t| t.eval(px, py)))
        .collect())
}

/// Extraction along the positive x-axis, the natural probe line for
/// rotationally symmetric states.
pub fn extract_graph_radial(
    field: &GaugeField2D,
    radii: &[f64],
) -> Result<Vec<Option<f64>>, Gauge2dError> {
    let targets: Vec<[f64; 2]> = radii.iter().map(|&r| [r, 0.0]).collect();
    extract_graph(field, &targets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::diffeo::{lens_initial_state, DiffeoBuildParams};
    use super::super::mesh::DiskMesh;
    use crate::geometry::AngleParams;
    use crate::radial::paraboloid_height;

    #[test]
    fn identity_gauge_reproduces_height_at_nodes() {
        let mesh = DiskMesh::new(12, 16).unwrap();
        let angle = AngleParams::half();
        let mut f = [
            vec![0.0; mesh.n_nodes()],
            vec![0.0; mesh.n_nodes()],
            vec![0.0; mesh.n_nodes()],
        ];
        for i in 0..=mesh.p {
            for j in 0..mesh.q {
                let (s, c) = mesh.sigma(j).sin_cos();
                let rho = mesh.rho(i);
                f[0][mesh.idx(i, j)] = rho * c;
                f[1][mesh.idx(i, j)] = rho * s;
                f[2][mesh.idx(i, j)] = 1.0 - rho * rho;
            }
        }
        let fld = GaugeField2D::new(mesh, f, 0.0, angle).unwrap();
        // Node-coincident targets: barycentric weights collapse to a vertex.
        let vals = extract_graph(
            &fld,
            &[[mesh.rho(5), 0.0], [0.0, 0.0], [-mesh.rho(9), 0.0]],
        )
        .unwrap();
        let w5 = 1.0 - mesh.rho(5) * mesh.rho(5);
        let w9 = 1.0 - mesh.rho(9) * mesh.rho(9);
        assert!((vals[0].unwrap() - w5).abs() < 1e-12);
        assert!((vals[1].unwrap() - 1.0).abs() < 1e-12);
        assert!((vals[2].unwrap() - w9).abs() < 1e-12);
    }

    #[test]
    fn collar_gauge_extracts_paraboloid() {
        let mesh = DiskMesh::new(24, 48).unwrap();
        let angle = AngleParams::half();
        let fld = lens_initial_state(mesh, angle, DiffeoBuildParams::default()).unwrap();
        let radii = [0.1, 0.45, 0.7, 0.93];
        let vals = extract_graph_radial(&fld, &radii).unwrap();
        for (r, v) in radii.iter().zip(vals) {
            let w = paraboloid_height(*r, 1.0, angle);
            let got = v.expect("interior point");
            // Piecewise-linear interpolation error at this resolution.
            assert!((got - w).abs() < 6e-3, "r={r}: {got} vs {w}");
        }
    }

    #[test]
    fn exterior_points_are_marked() {
        let mesh = DiskMesh::new(12, 16).unwrap();
        let fld = lens_initial_state(mesh, AngleParams::half(), DiffeoBuildParams::default())
            .unwrap();
        let vals = extract_graph(&fld, &[[1.05, 0.0], [0.0, -2.0], [0.2, 0.1]]).unwrap();
        assert!(vals[0].is_none());
        assert!(vals[1].is_none());
        assert!(vals[2].is_some());
    }
}
