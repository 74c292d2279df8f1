use nalgebra::Vector3;

use super::mesh::DiskMesh;
use crate::error::Gauge2dError;
use crate::geometry::{cross_normal, gauge_rhs, AngleParams, GaugeJet, GaugeJet2};

/// Discrete state of the 2D split-gauge flow: three scalar components over the
/// polar disk mesh, stored row-major by level.
///
/// Components 0 and 1 are the horizontal gauge map phi; component 2 is the
/// height u over the image plane. The full evolving surface is
/// F = (phi1, phi2, u).
#[derive(Debug, Clone)]
pub struct GaugeField2D {
    pub mesh: DiskMesh,
    pub f: [Vec<f64>; 3],
    pub t: f64,
    pub angle: AngleParams,
}

/// Polar derivative jet of one component at one interior node.
#[derive(Debug, Clone, Copy)]
pub struct PolarJet {
    pub f: f64,
    pub fr: f64,
    pub fs: f64,
    pub frr: f64,
    pub fss: f64,
    pub frs: f64,
}

/// Cartesian derivative jet of one component at one node.
#[derive(Debug, Clone, Copy)]
pub struct CartJet {
    pub f: f64,
    pub fx: f64,
    pub fy: f64,
    pub fxx: f64,
    pub fxy: f64,
    pub fyy: f64,
}

impl GaugeField2D {
    pub fn new(
        mesh: DiskMesh,
        f: [Vec<f64>; 3],
        t: f64,
        angle: AngleParams,
    ) -> Result<Self, Gauge2dError> {
        let n = mesh.n_nodes();
        for (k, comp) in f.iter().enumerate() {
            if comp.len() != n {
                return Err(Gauge2dError::InvalidField {
                    reason: format!("component {k} has {} nodes, mesh needs {n}", comp.len()),
                });
            }
            if comp.iter().any(|x| !x.is_finite()) {
                return Err(Gauge2dError::InvalidField {
                    reason: format!("component {k} contains a non-finite value"),
                });
            }
            // Pole row is stored Q times and must be single-valued.
            let pole = comp[0];
            for j in 1..mesh.q {
                if (comp[j] - pole).abs() > 1e-12 * (1.0 + pole.abs()) {
                    return Err(Gauge2dError::InvalidField {
                        reason: format!("component {k} is multi-valued at the pole (slot {j})"),
                    });
                }
            }
        }
        Ok(Self { mesh, f, t, angle })
    }

    #[inline]
    pub fn value(&self, k: usize, i: usize, j: usize) -> f64 {
        self.f[k][self.mesh.idx(i, j)]
    }

    /// Polar jet by centered differences; valid only on interior levels
    /// 1 <= i <= P-1.
    pub fn polar_jet(&self, k: usize, i: usize, j: usize) -> PolarJet {
        debug_assert!(i >= 1 && i < self.mesh.p);
        let m = &self.mesh;
        let c = &self.f[k];
        let (dr, ds) = (m.drho(), m.dsigma());
        let jl = m.jwrap(j as isize - 1);
        let jr = m.jwrap(j as isize + 1);
        let f00 = c[m.idx(i, j)];
        let fm = c[m.idx(i - 1, j)];
        let fp = c[m.idx(i + 1, j)];
        let fl = c[m.idx(i, jl)];
        let fr_ = c[m.idx(i, jr)];
        let fr = (fp - fm) / (2.0 * dr);
        let fs = (fr_ - fl) / (2.0 * ds);
        let frr = (fp - 2.0 * f00 + fm) / (dr * dr);
        let fss = (fr_ - 2.0 * f00 + fl) / (ds * ds);
        let frs = (c[m.idx(i + 1, jr)] - c[m.idx(i + 1, jl)] - c[m.idx(i - 1, jr)]
            + c[m.idx(i - 1, jl)])
            / (4.0 * dr * ds);
        PolarJet {
            f: f00,
            fr,
            fs,
            frr,
            fss,
            frs,
        }
    }

    /// Cartesian jet at an interior node via the polar chain rule.
    pub fn cart_jet(&self, k: usize, i: usize, j: usize) -> CartJet {
        let pj = self.polar_jet(k, i, j);
        cart_from_polar(self.mesh.rho(i), self.mesh.sigma(j), &pj)
    }

    /// First-derivative gauge jet of the full map F = (phi1, phi2, u) at an
    /// interior node, in Cartesian chart coordinates.
    pub fn gauge_jet(&self, i: usize, j: usize) -> (GaugeJet, GaugeJet2) {
        let jets = [
            self.cart_jet(0, i, j),
            self.cart_jet(1, i, j),
            self.cart_jet(2, i, j),
        ];
        let j1 = GaugeJet {
            f1: Vector3::new(jets[0].fx, jets[1].fx, jets[2].fx),
            f2: Vector3::new(jets[0].fy, jets[1].fy, jets[2].fy),
        };
        let j2 = GaugeJet2 {
            f11: Vector3::new(jets[0].fxx, jets[1].fxx, jets[2].fxx),
            f12: Vector3::new(jets[0].fxy, jets[1].fxy, jets[2].fxy),
            f22: Vector3::new(jets[0].fyy, jets[1].fyy, jets[2].fyy),
        };
        (j1, j2)
    }

    /// Scalar mean curvature of the discrete surface at an interior node,
    /// H = <g^{ab} F_ab, N> with N the upward unit normal.
    pub fn interior_mean_curvature(&self, i: usize, j: usize) -> Result<f64, Gauge2dError> {
        let (j1, j2) = self.gauge_jet(i, j);
        let nd = cross_normal(&j1).map_err(|e| Gauge2dError::InvalidField {
            reason: format!("normal undefined at ({i},{j}): {e}"),
        })?;
        let rhs = gauge_rhs(&j1, &j2).map_err(|e| Gauge2dError::InvalidField {
            reason: format!("metric degenerate at ({i},{j}): {e}"),
        })?;
        Ok(rhs.dot(&nd.n))
    }

    /// Junction radius of a rotationally symmetric state: mean distance of the
    /// ring image from the origin.
    pub fn ring_mean_radius(&self) -> f64 {
        let m = &self.mesh;
        let mut acc = 0.0;
        for j in 0..m.q {
            let x = self.f[0][m.idx(m.p, j)];
            let y = self.f[1][m.idx(m.p, j)];
            acc += x.hypot(y);
        }
        acc / m.q as f64
    }

    /// Largest deviation of the ring image from a perfect circle.
    pub fn ring_radius_spread(&self) -> f64 {
        let m = &self.mesh;
        let rbar = self.ring_mean_radius();
        let mut sp = 0.0f64;
        for j in 0..m.q {
            let x = self.f[0][m.idx(m.p, j)];
            let y = self.f[1][m.idx(m.p, j)];
            sp = sp.max((x.hypot(y) - rbar).abs());
        }
        sp
    }

    /// Height at the pole.
    pub fn pole_height(&self) -> f64 {
        self.f[2][0]
    }
}

/// Chain rule from polar (rho, sigma) derivatives to Cartesian chart
/// derivatives at radius rho > 0.
pub fn cart_from_polar(rho: f64, sigma: f64, p: &PolarJet) -> CartJet {
    let (s, c) = sigma.sin_cos();
    let fx = c * p.fr - s * p.fs / rho;
    let fy = s * p.fr + c * p.fs / rho;
    let fxx = c * c * p.frr - 2.0 * s * c * p.frs / rho
        + s * s * p.fss / (rho * rho)
        + s * s * p.fr / rho
        + 2.0 * s * c * p.fs / (rho * rho);
    let fyy = s * s * p.frr + 2.0 * s * c * p.frs / rho + c * c * p.fss / (rho * rho)
        + c * c * p.fr / rho
        - 2.0 * s * c * p.fs / (rho * rho);
    let fxy = s * c * p.frr + (c * c - s * s) * p.frs / rho - s * c * p.fss / (rho * rho)
        - s * c * p.fr / rho
        - (c * c - s * s) * p.fs / (rho * rho);
    CartJet {
        f: p.f,
        fx,
        fy,
        fxx,
        fxy,
        fyy,
    }
}
