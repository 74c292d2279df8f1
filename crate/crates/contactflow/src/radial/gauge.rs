//! Split-gauge radial solvers. Both fields phi (radial position) and u
//! (height) evolve on a FIXED gauge interval; the junction radius is read off
//! as a boundary value of phi instead of moving the grid:
//!
//!   u_t   = u_rr   / (phi_r^2 + u_r^2) + (r/phi^2) u_r
//!   phi_t = phi_rr / (phi_r^2 + u_r^2) + (r/phi^2) phi_r - phi/phi^2
//!
//! Lens: gauge r in [0, 1], pole at the left (phi(0) = 0, u_r(0) = 0),
//! junction at the right (u(1) = 0, beta u_r + beta0 phi_r = 0), R = phi(1).
//! Exterior: graded gauge grid over [1, R_out], junction at the left
//! (u = 0, beta u_r = beta0 phi_r), outer end pinned (or height-Neumann),
//! R = phi at the first node. The catenoid (phi = r, u = u_cat) is exactly
//! stationary for the continuous exterior pair.

use super::profile::{paraboloid_height, CatenoidProfile};
use crate::error::RadialError;
use crate::geometry::AngleParams;
use crate::num::stencils::{one_sided_first_left_o3, one_sided_first_right_o3};
use crate::num::tridiag::{backsub_from_first, backsub_from_last, hybrid_weights, TriDiag};

/// Minimum cells for the gauge solvers.
pub const MIN_CELLS: usize = 8;

/// Outer boundary treatment for the exterior case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OuterBc {
    /// Dirichlet: u and phi pinned to their initial outer values.
    Pinned,
    /// One-sided u_r(R_out) = 0 with phi still pinned.
    Neumann,
}

/// Which radial configuration the gauge state describes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialCase {
    Lens,
    Exterior { outer: OuterBc },
}

/// Fixed gauge grid: uniform xi in [0, 1] mapped to gauge radii
/// r = r_left + l * s(xi) with the exponential grading
/// s(xi) = (e^{kappa xi} - 1)/(e^kappa - 1) (kappa = 0 reduces to uniform).
#[derive(Debug, Clone)]
pub struct GaugeGrid {
    pub r: Vec<f64>,
    pub sp: Vec<f64>,
    pub spp: Vec<f64>,
    pub l: f64,
    pub kappa: f64,
}

impl GaugeGrid {
    /// Uniform grid on [0, 1] (lens gauge interval).
    pub fn uniform_unit(m: usize) -> Self {
        Self::graded(m, 0.0, 1.0, 0.0)
    }

    /// Graded grid from r_left over a span of length l.
    pub fn graded(m: usize, r_left: f64, l: f64, kappa: f64) -> Self {
        let mut r = Vec::with_capacity(m + 1);
        let mut sp = Vec::with_capacity(m + 1);
        let mut spp = Vec::with_capacity(m + 1);
        for i in 0..=m {
            let xi = i as f64 / m as f64;
            if kappa == 0.0 {
                r.push(r_left + l * xi);
                sp.push(1.0);
                spp.push(0.0);
            } else {
                let em = kappa.exp_m1();
                r.push(r_left + l * (kappa * xi).exp_m1() / em);
                sp.push(kappa * (kappa * xi).exp() / em);
                spp.push(kappa * kappa * (kappa * xi).exp() / em);
            }
        }
        Self {
            r,
            sp,
            spp,
            l,
            kappa,
        }
    }

    pub fn m(&self) -> usize {
        self.r.len() - 1
    }

    pub fn dxi(&self) -> f64 {
        1.0 / self.m() as f64
    }
}

/// Split-gauge state for either radial case.
#[derive(Debug, Clone)]
pub struct RadialGaugeState {
    pub case: RadialCase,
    pub grid: GaugeGrid,
    pub phi: Vec<f64>,
    pub u: Vec<f64>,
    pub t: f64,
    pub angle: AngleParams,
}

impl RadialGaugeState {
    pub fn new(
        case: RadialCase,
        grid: GaugeGrid,
        phi: Vec<f64>,
        u: Vec<f64>,
        t: f64,
        angle: AngleParams,
    ) -> Result<Self, RadialError> {
        let m = grid.m();
        if m < MIN_CELLS {
            return Err(RadialError::GridTooCoarse { m, min: MIN_CELLS });
        }
        if phi.len() != m + 1 || u.len() != m + 1 {
            return Err(RadialError::IncompatibleData {
                reason: format!(
                    "field lengths {}/{} do not match grid {}",
                    phi.len(),
                    u.len(),
                    m + 1
                ),
            });
        }
        if phi.iter().chain(u.iter()).any(|x| !x.is_finite()) {
            return Err(RadialError::IncompatibleData {
                reason: "non-finite field value".into(),
            });
        }
        for i in 0..m {
            if phi[i + 1] <= phi[i] {
                return Err(RadialError::SingularParametrization {
                    phi: phi[i + 1],
                    node: i + 1,
                });
            }
        }
        match case {
            RadialCase::Lens => {
                if phi[0].abs() > 1e-12 || u[m].abs() > 1e-12 {
                    return Err(RadialError::IncompatibleData {
                        reason: "lens gauge needs phi(0) = 0 and u(1) = 0".into(),
                    });
                }
                // flat data cannot satisfy the angle condition
                if u.iter().all(|&x| x.abs() < 1e-14) {
                    return Err(RadialError::IncompatibleData {
                        reason: "u = 0 is incompatible with the contact angle".into(),
                    });
                }
            }
            RadialCase::Exterior { .. } => {
                if u[0].abs() > 1e-12 {
                    return Err(RadialError::IncompatibleData {
                        reason: "exterior gauge needs u = 0 at the junction node".into(),
                    });
                }
                if u.iter().all(|&x| x.abs() < 1e-14) {
                    return Err(RadialError::IncompatibleData {
                        reason: "u = 0 is incompatible with the contact angle".into(),
                    });
                }
            }
        }
        Ok(Self {
            case,
            grid,
            phi,
            u,
            t,
            angle,
        })
    }

    /// Paraboloid lens in gauge form: phi = r0 xi, u the lens profile.
    pub fn lens_paraboloid(m: usize, r0: f64, angle: AngleParams) -> Result<Self, RadialError> {
        let grid = GaugeGrid::uniform_unit(m);
        let phi: Vec<f64> = grid.r.iter().map(|&x| r0 * x).collect();
        let mut u: Vec<f64> = phi
            .iter()
            .map(|&p| paraboloid_height(p, r0, angle))
            .collect();
        u[m] = 0.0;
        Self::new(RadialCase::Lens, grid, phi, u, 0.0, angle)
    }

    /// Catenoid exterior on the graded grid (kappa = 1.5 reference grading).
    pub fn exterior_catenoid(
        m: usize,
        r_out: f64,
        kappa: f64,
        outer: OuterBc,
        angle: AngleParams,
    ) -> Result<Self, RadialError> {
        let grid = GaugeGrid::graded(m, 1.0, r_out - 1.0, kappa);
        let cat = CatenoidProfile::new(1.0, angle);
        let phi = grid.r.clone();
        let mut u = Vec::with_capacity(m + 1);
        for &r in &grid.r {
            u.push(cat.height(r)?);
        }
        u[0] = 0.0;
        Self::new(RadialCase::Exterior { outer }, grid, phi, u, 0.0, angle)
    }

    /// As `exterior_catenoid` with a smooth perturbation added to u. The
    /// envelope sin^2(pi xi) keeps both the junction height and the outer
    /// pin exactly compatible.
    pub fn exterior_catenoid_perturbed(
        m: usize,
        r_out: f64,
        kappa: f64,
        outer: OuterBc,
        angle: AngleParams,
        amplitude: f64,
        modes: &[f64],
    ) -> Result<Self, RadialError> {
        let mut st = Self::exterior_catenoid(m, r_out, kappa, outer, angle)?;
        let mm = st.grid.m();
        for i in 0..=mm {
            let xi = i as f64 / mm as f64;
            let env = (std::f64::consts::PI * xi).sin().powi(2);
            let mut bump = 0.0;
            for (k, &ck) in modes.iter().enumerate() {
                bump += ck * ((k + 1) as f64 * std::f64::consts::PI * xi).sin()
                    / (k + 1) as f64;
            }
            st.u[i] += amplitude * env * if modes.is_empty() { 1.0 } else { bump };
        }
        Ok(st)
    }

    pub fn m(&self) -> usize {
        self.grid.m()
    }

    /// Junction radius: phi at the junction node (right end for the lens,
    /// left end for the exterior).
    pub fn junction_radius(&self) -> f64 {
        match self.case {
            RadialCase::Lens => self.phi[self.m()],
            RadialCase::Exterior { .. } => self.phi[0],
        }
    }

    /// Discrete contact-angle residual at the junction (third-order one-sided
    /// derivatives): beta u_r + beta0 phi_r (lens) or beta u_r - beta0 phi_r
    /// (exterior). The stepper drives this to roundoff each step.
    pub fn angle_residual(&self) -> f64 {
        let d = self.grid.dxi();
        match self.case {
            RadialCase::Lens => {
                let ur = one_sided_first_right_o3(&self.u, d);
                let pr = one_sided_first_right_o3(&self.phi, d);
                self.angle.beta() * ur + self.angle.beta0() * pr
            }
            RadialCase::Exterior { .. } => {
                // chart factor L s' cancels in the ratio but keep residual in
                // physical slope units
                let f = self.grid.l * self.grid.sp[0];
                let ur = one_sided_first_left_o3(&self.u, d) / f;
                let pr = one_sided_first_left_o3(&self.phi, d) / f;
                self.angle.beta() * ur - self.angle.beta0() * pr
            }
        }
    }

    /// Max area element v = |(phi_r, u_r)| / phi_r ... for the gauge pair the
    /// graph slope is u_r/phi_r, so v = sqrt(1 + (u_r/phi_r)^2).
    pub fn max_v(&self) -> f64 {
        let m = self.m();
        let d = self.grid.dxi();
        let mut vmax: f64 = 1.0;
        for i in 1..m {
            let ur = (self.u[i + 1] - self.u[i - 1]) / (2.0 * d);
            let pr = (self.phi[i + 1] - self.phi[i - 1]) / (2.0 * d);
            if pr.abs() > 1e-300 {
                let slope = ur / pr;
                vmax = vmax.max((1.0 + slope * slope).sqrt());
            }
        }
        vmax
    }
}

/// Default advective step: cfl * dxi * min(1, R) (lens), cfl * dxi (exterior).
pub fn propose_dt_gauge(state: &RadialGaugeState, cfl: f64) -> f64 {
    let d = state.grid.dxi();
    match state.case {
        RadialCase::Lens => cfl * d * 1.0f64.min(state.junction_radius()),
        RadialCase::Exterior { .. } => cfl * d,
    }
}

/// Advance the split-gauge state one semi-implicit step (u first, then phi
/// with the angle row on the fresh u).
pub fn step_gauge_radial(state: &mut RadialGaugeState, dt: f64) -> Result<(), RadialError> {
    match state.case {
        RadialCase::Lens => step_lens(state, dt),
        RadialCase::Exterior { outer } => step_exterior(state, dt, outer),
    }?;
    // diffeomorphism check: phi must stay strictly monotone
    for i in 0..state.m() {
        if !(state.phi[i + 1] > state.phi[i]) {
            return Err(RadialError::DiffeoBreakdown {
                node: i + 1,
                t: state.t,
            });
        }
    }
    Ok(())
}

fn step_lens(state: &mut RadialGaugeState, dt: f64) -> Result<(), RadialError> {
    let m = state.m();
    let d = state.grid.dxi();
    let (phi, u) = (&state.phi, &state.u);

    let mut ur = vec![0.0; m + 1];
    let mut pr = vec![0.0; m + 1];
    for i in 1..m {
        ur[i] = (u[i + 1] - u[i - 1]) / (2.0 * d);
        pr[i] = (phi[i + 1] - phi[i - 1]) / (2.0 * d);
    }
    pr[0] = (-3.0 * phi[0] + 4.0 * phi[1] - phi[2]) / (2.0 * d);
    let met: Vec<f64> = (0..=m).map(|i| pr[i] * pr[i] + ur[i] * ur[i]).collect();

    // u system: pole row + interior + Dirichlet u(1) = 0
    let mut sys = TriDiag::identity(m + 1);
    sys.rhs.copy_from_slice(u);
    for i in 1..m {
        let a = dt / (d * d * met[i]);
        let c = state.grid.r[i] / (phi[i] * phi[i]);
        let (cp, cm) = hybrid_weights(c, a, dt, d);
        sys.lo[i] = -a + cm;
        sys.di[i] = 1.0 + 2.0 * a + cp - cm;
        sys.up[i] = -a - cp;
    }
    let a0 = 4.0 * dt / (d * d * pr[0] * pr[0]);
    sys.di[0] = 1.0 + a0;
    sys.up[0] = -a0;
    sys.rhs[m] = 0.0;
    let u_new = sys.solve();

    // phi system: Dirichlet phi(0) = 0, implicit -phi/phi^2, wide angle row
    let mut sys = TriDiag::identity(m + 1);
    sys.rhs.copy_from_slice(phi);
    for i in 1..m {
        let a = dt / (d * d * met[i]);
        let c = state.grid.r[i] / (phi[i] * phi[i]);
        let (cp, cm) = hybrid_weights(c, a, dt, d);
        sys.lo[i] = -a + cm;
        sys.di[i] = 1.0 + 2.0 * a + cp - cm + dt / (phi[i] * phi[i]);
        sys.up[i] = -a - cp;
    }
    sys.rhs[0] = 0.0;
    // forward sweep over rows 0..M-1, wide angle row handled by substitution:
    // 11 phi_M - 18 phi_{M-1} + 9 phi_{M-2} - 2 phi_{M-3} = -(beta/beta0) 6d u_r(1)
    let head = TriDiag {
        lo: sys.lo[..m].to_vec(),
        di: sys.di[..m].to_vec(),
        up: sys.up[..m].to_vec(),
        rhs: sys.rhs[..m].to_vec(),
    };
    let (cp, dp) = head.forward_sweep();
    let ur_m = one_sided_first_right_o3(&u_new, d);
    let target = -(state.angle.beta() / state.angle.beta0()) * ur_m * 6.0 * d;
    // eliminate phi_{M-3}, phi_{M-2}, phi_{M-1} through the sweep relations
    // phi_i = dp[i] - cp[i] phi_{i+1}
    let (a3, mut a2, mut a1, mut a0c) = (-2.0, 9.0, -18.0, 11.0);
    let mut t = target;
    t -= a3 * dp[m - 3];
    a2 -= a3 * cp[m - 3];
    t -= a2 * dp[m - 2];
    a1 -= a2 * cp[m - 2];
    t -= a1 * dp[m - 1];
    a0c -= a1 * cp[m - 1];
    let phi_m = t / a0c;
    let phi_new = backsub_from_last(&cp, &dp, phi_m);

    state.u = u_new;
    state.phi = phi_new;
    state.t += dt;
    Ok(())
}

fn step_exterior(state: &mut RadialGaugeState, dt: f64, outer: OuterBc) -> Result<(), RadialError> {
    let m = state.m();
    let d = state.grid.dxi();
    let l = state.grid.l;
    let (sp, spp) = (&state.grid.sp, &state.grid.spp);
    let (phi, u) = (&state.phi, &state.u);

    let d_xi = |f: &[f64]| -> Vec<f64> {
        let mut g = vec![0.0; m + 1];
        for i in 1..m {
            g[i] = (f[i + 1] - f[i - 1]) / (2.0 * d);
        }
        g[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * d);
        g[m] = (3.0 * f[m] - 4.0 * f[m - 1] + f[m - 2]) / (2.0 * d);
        g
    };
    let phx = d_xi(phi);
    let ux = d_xi(u);
    // chart factors: f_r = f_xi/(L s'), f_rr = f_xixi/(L s')^2 - f_xi s''/(L^2 s'^3)
    let mut adiff = vec![0.0; m + 1];
    let mut c_xi = vec![0.0; m + 1];
    for i in 0..=m {
        let phr = phx[i] / (l * sp[i]);
        let ur = ux[i] / (l * sp[i]);
        let a = 1.0 / (phr * phr + ur * ur);
        adiff[i] = dt * a / (l * sp[i]).powi(2) / (d * d);
        c_xi[i] = -a * spp[i] / (l * l * sp[i].powi(3))
            + (state.grid.r[i] / (phi[i] * phi[i])) / (l * sp[i]);
    }

    let build = |rhs_src: &[f64]| -> TriDiag {
        let mut sys = TriDiag::identity(m + 1);
        sys.rhs.copy_from_slice(rhs_src);
        for i in 1..m {
            let (cp, cm) = hybrid_weights(c_xi[i], adiff[i], dt, d);
            sys.lo[i] = -adiff[i] + cm;
            sys.di[i] = 1.0 + 2.0 * adiff[i] + cp - cm;
            sys.up[i] = -adiff[i] - cp;
        }
        sys
    };

    // u system: junction Dirichlet u = 0; outer pinned or height-Neumann
    let mut sys = build(u);
    sys.rhs[0] = 0.0;
    let u_new = match outer {
        OuterBc::Pinned => {
            sys.rhs[m] = u[m];
            sys.solve()
        }
        OuterBc::Neumann => {
            // one-sided 3 u_M - 4 u_{M-1} + u_{M-2} = 0, eliminated through
            // the forward sweep
            let head = TriDiag {
                lo: sys.lo[..m].to_vec(),
                di: sys.di[..m].to_vec(),
                up: sys.up[..m].to_vec(),
                rhs: sys.rhs[..m].to_vec(),
            };
            let (cp, dp) = head.forward_sweep();
            // u_{M-1} = a1 + b1 u_M, u_{M-2} = a2 + b2 u_M
            let (a1, b1) = (dp[m - 1], -cp[m - 1]);
            let (a2, b2) = (dp[m - 2] - cp[m - 2] * a1, -cp[m - 2] * b1);
            let u_m = (4.0 * a1 - a2) / (3.0 - 4.0 * b1 + b2);
            backsub_from_last(&cp, &dp, u_m)
        }
    };

    // phi system: implicit -phi/phi^2 on the diagonal, outer pinned,
    // wide angle first row solved through a reverse sweep
    let mut sys = build(phi);
    for i in 1..m {
        sys.di[i] += dt / (phi[i] * phi[i]);
    }
    sys.rhs[m] = phi[m];
    // -11 phi_0 + 18 phi_1 - 9 phi_2 + 2 phi_3 = (beta/beta0)(18 u_1 - 9 u_2 + 2 u_3)
    let tgt = (state.angle.beta() / state.angle.beta0())
        * (18.0 * u_new[1] - 9.0 * u_new[2] + 2.0 * u_new[3]);
    let (cp, dp) = sys.reverse_sweep();
    let (a1, b1) = (dp[1], -cp[1]);
    let (a2, b2) = (dp[2] - cp[2] * a1, -cp[2] * b1);
    let (a3, b3) = (dp[3] - cp[3] * a2, -cp[3] * b2);
    let lhs0 = -11.0 + 18.0 * b1 - 9.0 * b2 + 2.0 * b3;
    let rhs0 = tgt - (18.0 * a1 - 9.0 * a2 + 2.0 * a3);
    let phi0 = rhs0 / lhs0;
    let phi_new = backsub_from_first(&cp, &dp, phi0);

    state.u = u_new;
    state.phi = phi_new;
    state.t += dt;
    Ok(())
}
