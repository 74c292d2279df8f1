use super::field::GaugeField2D;
use super::mesh::DiskMesh;
use crate::error::Gauge2dError;
use crate::geometry::AngleParams;
use crate::radial::paraboloid_height;

/// Controls for the compatible-initial-map builder.
#[derive(Debug, Clone, Copy)]
pub struct DiffeoBuildParams {
    /// Width of the boundary collar carrying the normal-jet bump.
    pub rho0: f64,
    /// Collar halvings to attempt when the sampled map folds.
    pub max_retries: usize,
}

impl Default for DiffeoBuildParams {
    fn default() -> Self {
        Self {
            rho0: 0.3,
            max_retries: 4,
        }
    }
}

/// C^2 cutoff in the collar coordinate rd = 1 - rho: identically 1 below
/// rho0/3, identically 0 above rho0, quintic blend between.
pub fn collar_cutoff(rd: f64, rho0: f64) -> f64 {
    let lo = rho0 / 3.0;
    if rd <= lo {
        1.0
    } else if rd >= rho0 {
        0.0
    } else {
        let s = (rd - lo) / (rho0 - lo);
        1.0 - s * s * s * (6.0 * s * s - 15.0 * s + 10.0)
    }
}

/// Smallest sampled planar Jacobian determinant of phi over the interior
/// levels.
fn sampled_min_det(field: &GaugeField2D) -> f64 {
    let m = field.mesh;
    let mut min_det = f64::INFINITY;
    for i in 1..m.p {
        for j in 0..m.q {
            let c0 = field.cart_jet(0, i, j);
            let c1 = field.cart_jet(1, i, j);
            min_det = min_det.min(c0.fx * c1.fy - c0.fy * c1.fx);
        }
    }
    min_det
}

fn build_once(
    mesh: DiskMesh,
    angle: AngleParams,
    hvals: &[f64],
    rho0: f64,
) -> Result<GaugeField2D, Gauge2dError> {
    let n = mesh.n_nodes();
    let mut f = [vec![0.0; n], vec![0.0; n], vec![0.0; n]];
    for i in 0..=mesh.p {
        let rho = mesh.rho(i);
        let rd = 1.0 - rho;
        let cut = collar_cutoff(rd, rho0);
        for j in 0..mesh.q {
            let (s, c) = mesh.sigma(j).sin_cos();
            // Inward-normal displacement whose second normal jet at the ring
            // is exactly hvals[j].
            let amp = cut * rd * rd * hvals[j] / 2.0;
            f[0][mesh.idx(i, j)] = (rho - amp) * c;
            f[1][mesh.idx(i, j)] = (rho - amp) * s;
        }
    }
    GaugeField2D::new(mesh, f, 0.0, angle)
}

/// Build a gauge map of the unit disk that is the identity away from the
/// boundary and carries the prescribed second normal jet at the ring, so that
/// the initial height can satisfy both the contact and angle conditions at
/// once. boundary_h0 is the desired surface mean curvature per ring node; the
/// normal jet is h = -H0 / (beta^2 beta0). The sampled Jacobian must stay
/// positive; a folding collar is halved and rebuilt before giving up.
pub fn build_initial_diffeo(
    mesh: DiskMesh,
    angle: AngleParams,
    boundary_h0: &[f64],
    params: DiffeoBuildParams,
) -> Result<GaugeField2D, Gauge2dError> {
    if boundary_h0.len() != mesh.q {
        return Err(Gauge2dError::DiffeoConstruction {
            reason: format!(
                "boundary curvature has {} entries, ring has {}",
                boundary_h0.len(),
                mesh.q
            ),
        });
    }
    if boundary_h0.iter().any(|x| !x.is_finite()) {
        return Err(Gauge2dError::DiffeoConstruction {
            reason: "boundary curvature contains a non-finite value".into(),
        });
    }
    let b = angle.beta();
    let b0 = angle.beta0();
    let hvals: Vec<f64> = boundary_h0.iter().map(|h0| -h0 / (b * b * b0)).collect();
    let mut rho0 = params.rho0;
    let mut last_det = f64::NAN;
    for _ in 0..=params.max_retries {
        let field = build_once(mesh, angle, &hvals, rho0)?;
        last_det = sampled_min_det(&field);
        if last_det > 0.0 {
            return Ok(field);
        }
        rho0 *= 0.5;
    }
    Err(Gauge2dError::DiffeoConstruction {
        reason: format!(
            "sampled det Dphi = {last_det:.3e} <= 0 after {} collar halvings (final collar {rho0:.3e})",
            params.max_retries
        ),
    })
}

/// Shrinking lens initial state: paraboloid height over the unit-disk image
/// with the boundary collar absorbing the junction jet, so the ring satisfies
/// contact, angle, and orthogonality conditions at t = 0.
pub fn lens_initial_state(
    mesh: DiskMesh,
    angle: AngleParams,
    params: DiffeoBuildParams,
) -> Result<GaugeField2D, Gauge2dError> {
    let b = angle.beta();
    let b0 = angle.beta0();
    // Boundary mean curvature of the unit paraboloid lens.
    let h0 = -b0 * (1.0 + b * b);
    let mut field = build_initial_diffeo(mesh, angle, &vec![h0; mesh.q], params)?;
    for i in 0..=mesh.p {
        for j in 0..mesh.q {
            let at = mesh.idx(i, j);
            let rr = field.f[0][at].hypot(field.f[1][at]);
            field.f[2][at] = if i == mesh.p {
                0.0
            } else {
                paraboloid_height(rr, 1.0, angle)
            };
        }
    }
    Ok(field)
}
