use nalgebra::{Matrix3, Vector3};

use super::field::GaugeField2D;
use crate::error::Gauge2dError;
use crate::geometry::{AngleParams, GaugeJet};

/// Contact-angle defect of a first-order jet: B = beta^2 (N1^2 + N2^2)
/// - beta0^2 N3^2 with N = f1 x f2. Vanishes iff the surface meets the plane
/// at angle beta; homogeneous of degree 4 under jet scaling, so its zero set
/// is chart-independent.
pub fn angle_residual(jet: &GaugeJet, angle: &AngleParams) -> f64 {
    let n = jet.f1.cross(&jet.f2);
    let (b, b0) = (angle.beta(), angle.beta0());
    b * b * (n.x * n.x + n.y * n.y) - b0 * b0 * n.z * n.z
}

/// Orthogonality defect of the gauge at the ring: the horizontal parts of the
/// two jet directions must be perpendicular, <phi_1, phi_2> = 0.
pub fn orthogonality_residual(jet: &GaugeJet) -> f64 {
    jet.f1.x * jet.f2.x + jet.f1.y * jet.f2.y
}

const NODE_TOL: f64 = 1e-11;
const MAX_NEWTON: usize = 25;
const MAX_BACKTRACK: usize = 20;
const MAX_SWEEPS: usize = 8;

/// Ring residual at one node: (u, B, O) with the radial derivative one-sided
/// through the updated interior and the angular derivative taken from the
/// frozen neighbor ring (Jacobi within a sweep).
fn node_residual(
    field: &GaugeField2D,
    ring: &[[f64; 3]],
    j: usize,
    z: &Vector3<f64>,
) -> Vector3<f64> {
    let m = field.mesh;
    let (dr, ds) = (m.drho(), m.dsigma());
    let jl = m.jwrap(j as isize - 1);
    let jr = m.jwrap(j as isize + 1);
    let mut prho = Vector3::zeros();
    let mut psig = Vector3::zeros();
    for k in 0..3 {
        let fm1 = field.f[k][m.idx(m.p - 1, j)];
        let fm2 = field.f[k][m.idx(m.p - 2, j)];
        prho[k] = (3.0 * z[k] - 4.0 * fm1 + fm2) / (2.0 * dr);
        psig[k] = (ring[jr][k] - ring[jl][k]) / (2.0 * ds);
    }
    let jet = GaugeJet {
        f1: prho,
        f2: psig,
    };
    Vector3::new(
        z[2],
        angle_residual(&jet, &field.angle),
        orthogonality_residual(&jet),
    )
}

fn newton_node(field: &GaugeField2D, ring: &[[f64; 3]], j: usize, seed: Vector3<f64>) -> Vector3<f64> {
    let mut z = seed;
    let mut res = node_residual(field, ring, j, &z);
    let mut rn = res.amax();
    for _ in 0..MAX_NEWTON {
        if rn <= NODE_TOL {
            break;
        }
        let mut jac = Matrix3::zeros();
        for c in 0..3 {
            let h = 1e-7 * z[c].abs().max(1.0);
            let mut zp = z;
            zp[c] += h;
            let rp = node_residual(field, ring, j, &zp);
            jac.set_column(c, &((rp - res) / h));
        }
        let Some(dz) = jac.lu().solve(&(-res)) else {
            break;
        };
        let mut lam = 1.0;
        let mut accepted = false;
        for _ in 0..MAX_BACKTRACK {
            let zt = z + lam * dz;
            let rt = node_residual(field, ring, j, &zt);
            if rt.amax() < rn {
                z = zt;
                res = rt;
                rn = res.amax();
                accepted = true;
                break;
            }
            lam *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    z
}

fn current_ring(field: &GaugeField2D) -> Vec<[f64; 3]> {
    let m = field.mesh;
    (0..m.q)
        .map(|j| {
            [
                field.f[0][m.idx(m.p, j)],
                field.f[1][m.idx(m.p, j)],
                field.f[2][m.idx(m.p, j)],
            ]
        })
        .collect()
}

/// Worst all-updated ring residual (inf norm over nodes and the three
/// conditions) of the field as stored.
pub fn ring_residual_worst(field: &GaugeField2D) -> f64 {
    let ring = current_ring(field);
    let mut worst = 0.0f64;
    for j in 0..field.mesh.q {
        let z = Vector3::from(ring[j]);
        worst = worst.max(node_residual(field, &ring, j, &z).amax());
    }
    worst
}

/// Gauss-Seidel-by-sweeps ring solve: per-node damped Newton with frozen
/// angular neighbors, repeated until the fully updated residual is below
/// 10x the node tolerance.
pub fn solve_boundary(field: &mut GaugeField2D) -> Result<(f64, usize), Gauge2dError> {
    let m = field.mesh;
    for sweep in 1..=MAX_SWEEPS {
        let ring = current_ring(field);
        let mut next = ring.clone();
        for (j, slot) in next.iter_mut().enumerate() {
            let z = newton_node(field, &ring, j, Vector3::from(ring[j]));
            *slot = [z[0], z[1], z[2]];
        }
        for (j, zj) in next.iter().enumerate() {
            for k in 0..3 {
                field.f[k][m.idx(m.p, j)] = zj[k];
            }
        }
        // Honest convergence measure: all nodes updated, angular
        // derivatives included.
        let mut worst = 0.0f64;
        let mut argmax = 0;
        for (j, zj) in next.iter().enumerate() {
            let r = node_residual(field, &next, j, &Vector3::from(*zj)).amax();
            if r > worst {
                worst = r;
                argmax = j;
            }
        }
        if worst < 10.0 * NODE_TOL {
            return Ok((worst, sweep));
        }
        if sweep == MAX_SWEEPS {
            return Err(Gauge2dError::BoundaryNewton {
                node: argmax,
                residual: worst,
                iters: MAX_SWEEPS * MAX_NEWTON,
                t: field.t,
            });
        }
    }
    unreachable!("sweep loop returns or errors")
}

/// Geometric data of the free boundary ring: the image curve, its frame and
/// planar curvature, and the second fundamental form of the surface in the
/// conormal/tangent frame.
#[derive(Debug, Clone)]
pub struct BoundaryRing {
    pub phi: Vec<[f64; 2]>,
    /// Unit tangent of the image curve (orientation of increasing sigma).
    pub tau: Vec<[f64; 2]>,
    /// Inner unit normal of the image curve (left of tau for a CCW ring).
    pub n_inner: Vec<[f64; 2]>,
    /// Signed planar curvature with respect to n_inner; +1/R for a CCW circle.
    pub kappa: Vec<f64>,
    /// Surface mean curvature at the ring from one-sided jets.
    pub h_mean: Vec<f64>,
    /// h(n,n) on the unit in-surface conormal.
    pub h_nn: Vec<f64>,
    /// h(tau,tau) on the unit ring tangent.
    pub h_tautau: Vec<f64>,
}

/// Ring jets by one-sided second-order radial stencils and centered angular
/// stencils; needs P >= 3.
pub fn boundary_ring(field: &GaugeField2D) -> Result<BoundaryRing, Gauge2dError> {
    let m = field.mesh;
    let (dr, ds) = (m.drho(), m.dsigma());
    let q = m.q;
    let p = m.p;
    let get = |k: usize, i: usize, j: usize| field.f[k][m.idx(i, j)];

    // One-sided radial first derivative at the ring, needed per node before
    // the mixed stencil can difference it angularly.
    let frho = |k: usize, j: usize| -> f64 {
        (3.0 * get(k, p, j) - 4.0 * get(k, p - 1, j) + get(k, p - 2, j)) / (2.0 * dr)
    };

    let mut out = BoundaryRing {
        phi: Vec::with_capacity(q),
        tau: Vec::with_capacity(q),
        n_inner: Vec::with_capacity(q),
        kappa: Vec::with_capacity(q),
        h_mean: Vec::with_capacity(q),
        h_nn: Vec::with_capacity(q),
        h_tautau: Vec::with_capacity(q),
    };

    for j in 0..q {
        let jl = m.jwrap(j as isize - 1);
        let jr = m.jwrap(j as isize + 1);
        let mut f_r = Vector3::zeros();
        let mut f_s = Vector3::zeros();
        let mut f_rr = Vector3::zeros();
        let mut f_ss = Vector3::zeros();
        let mut f_rs = Vector3::zeros();
        for k in 0..3 {
            f_r[k] = frho(k, j);
            f_s[k] = (get(k, p, jr) - get(k, p, jl)) / (2.0 * ds);
            f_rr[k] = (2.0 * get(k, p, j) - 5.0 * get(k, p - 1, j) + 4.0 * get(k, p - 2, j)
                - get(k, p - 3, j))
                / (dr * dr);
            f_ss[k] = (get(k, p, jr) - 2.0 * get(k, p, j) + get(k, p, jl)) / (ds * ds);
            f_rs[k] = (frho(k, jr) - frho(k, jl)) / (2.0 * ds);
        }

        // Planar frame of the image curve.
        let ts = (f_s.x, f_s.y);
        let tn = (ts.0 * ts.0 + ts.1 * ts.1).sqrt();
        if tn <= 0.0 || !tn.is_finite() {
            return Err(Gauge2dError::InvalidField {
                reason: format!("ring tangent degenerate at node {j}"),
            });
        }
        let tau = [ts.0 / tn, ts.1 / tn];
        let n_inner = [-tau[1], tau[0]];
        let kappa = (f_s.x * f_ss.y - f_s.y * f_ss.x) / (tn * tn * tn);

        // Surface second fundamental form from the 3D jets.
        let g_rr = f_r.dot(&f_r);
        let g_rs = f_r.dot(&f_s);
        let g_ss = f_s.dot(&f_s);
        let det = g_rr * g_ss - g_rs * g_rs;
        let ntilde = f_r.cross(&f_s);
        let nn = ntilde.norm();
        if det <= 0.0 || nn <= 0.0 || ntilde.z <= 0.0 {
            return Err(Gauge2dError::InvalidField {
                reason: format!("ring jets degenerate or downward at node {j}"),
            });
        }
        let nhat = ntilde / nn;
        let h_rr = f_rr.dot(&nhat);
        let h_rs = f_rs.dot(&nhat);
        let h_ss = f_ss.dot(&nhat);
        let h_mean = (g_ss * h_rr - 2.0 * g_rs * h_rs + g_rr * h_ss) / det;
        let h_tautau = h_ss / g_ss;
        // In-surface conormal: rho-direction Gram-Schmidt against sigma.
        let c = g_rs / g_ss;
        let nsq = g_rr - g_rs * g_rs / g_ss;
        let h_nn = (h_rr - 2.0 * c * h_rs + c * c * h_ss) / nsq;

        out.phi.push([get(0, p, j), get(1, p, j)]);
        out.tau.push(tau);
        out.n_inner.push(n_inner);
        out.kappa.push(kappa);
        out.h_mean.push(h_mean);
        out.h_nn.push(h_nn);
        out.h_tautau.push(h_tautau);
    }
    Ok(out)
}

/// Pointwise check of the junction motion law on the free boundary:
/// the normal speed <d_t phi, n_inner> against -H/beta0, differenced across
/// the middle snapshot of the history.
#[derive(Debug, Clone)]
pub struct JunctionKinematics {
    /// Time at which both sides are evaluated.
    pub t: f64,
    pub normal_speed: Vec<f64>,
    pub law_speed: Vec<f64>,
    pub max_mismatch: f64,
}

pub fn junction_kinematics(history: &[GaugeField2D]) -> Result<JunctionKinematics, Gauge2dError> {
    if history.len() < 3 {
        return Err(Gauge2dError::InvalidField {
            reason: format!("junction kinematics needs >= 3 snapshots, got {}", history.len()),
        });
    }
    let mesh = history[0].mesh;
    for w in history.windows(2) {
        if w[1].mesh != mesh {
            return Err(Gauge2dError::InvalidField {
                reason: "snapshots on different meshes".into(),
            });
        }
        if w[1].t <= w[0].t {
            return Err(Gauge2dError::InvalidField {
                reason: "snapshot times not strictly increasing".into(),
            });
        }
    }
    let mid = history.len() / 2;
    let (prev, here, next) = (&history[mid - 1], &history[mid], &history[mid + 1]);
    let ring = boundary_ring(here)?;
    let dt2 = next.t - prev.t;
    let b0 = here.angle.beta0();
    let q = mesh.q;
    let mut normal_speed = Vec::with_capacity(q);
    let mut law_speed = Vec::with_capacity(q);
    let mut max_mismatch = 0.0f64;
    for j in 0..q {
        let dx = (next.f[0][mesh.idx(mesh.p, j)] - prev.f[0][mesh.idx(mesh.p, j)]) / dt2;
        let dy = (next.f[1][mesh.idx(mesh.p, j)] - prev.f[1][mesh.idx(mesh.p, j)]) / dt2;
        let speed = dx * ring.n_inner[j][0] + dy * ring.n_inner[j][1];
        let law = -ring.h_mean[j] / b0;
        max_mismatch = max_mismatch.max((speed - law).abs());
        normal_speed.push(speed);
        law_speed.push(law);
    }
    Ok(JunctionKinematics {
        t: here.t,
        normal_speed,
        law_speed,
        max_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_residual_examples() {
        let half = AngleParams::half();
        // Identity horizontal jet, height slope of magnitude beta0/beta:
        // exactly the contact angle, so B = 0.
        let s = half.slope_junction();
        let jet = GaugeJet {
            f1: Vector3::new(1.0, 0.0, s),
            f2: Vector3::new(0.0, 1.0, 0.0),
        };
        assert!(angle_residual(&jet, &half).abs() < 1e-15);
        // Flat height at beta = 1/2: B = -beta0^2 = -3/4.
        let flat = GaugeJet {
            f1: Vector3::new(1.0, 0.0, 0.0),
            f2: Vector3::new(0.0, 1.0, 0.0),
        };
        assert!((angle_residual(&flat, &half) + 0.75).abs() < 1e-15);
    }

    #[test]
    fn angle_residual_quartic_homogeneity() {
        let half = AngleParams::half();
        let jet = GaugeJet {
            f1: Vector3::new(1.1, -0.3, 0.7),
            f2: Vector3::new(0.2, 0.9, -0.4),
        };
        let lam = 1.7;
        let scaled = GaugeJet {
            f1: lam * jet.f1,
            f2: lam * jet.f2,
        };
        let b = angle_residual(&jet, &half);
        let bs = angle_residual(&scaled, &half);
        assert!((bs - lam.powi(4) * b).abs() < 1e-12 * b.abs().max(1.0));
    }

    #[test]
    fn orthogonality_ignores_height() {
        let jet = GaugeJet {
            f1: Vector3::new(2.0, 1.0, 5.0),
            f2: Vector3::new(-0.5, 1.0, -3.0),
        };
        assert!((orthogonality_residual(&jet) - (-1.0 + 1.0)).abs() < 1e-15);
    }
}
