//! Moving-front radial graph solver for the lens case. The height profile
//! lives on a fixed scaled grid xi in [0, 1] with physical radius r = xi R(t);
//! the junction radius R moves with the flow. One implicit step couples a
//! semi-implicit tridiagonal solve for the profile with a secant iteration on
//! the scalar front equation R_new - R - dt H_j(R_new)/beta0 = 0.

use super::profile::{cap_height, paraboloid_height};
use crate::error::RadialError;
use crate::geometry::AngleParams;
use crate::num::tridiag::{hybrid_weights, TriDiag};

/// Minimum number of cells accepted by the radial graph constructors.
pub const MIN_CELLS: usize = 8;

/// Lens graph state: heights w on the uniform scaled grid xi_i = i/M, with
/// w[M] = 0 at the junction and w > 0 inside. r = xi * R(t).
#[derive(Debug, Clone)]
pub struct RadialGraphState {
    /// Junction radius R(t) > 0.
    pub r: f64,
    /// Heights at xi_i = i/M, length M+1, trailing entry pinned to 0.
    pub w: Vec<f64>,
    pub t: f64,
    pub angle: AngleParams,
}

/// Outcome of one attempted front step.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphStep {
    Advanced,
    /// The front would cross (or crossed) the extinction threshold inside
    /// this step; the extinction time lies in [t_lo, t_hi].
    Extinction(ExtinctionEvent),
}

/// Bracketed extinction record.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ExtinctionEvent {
    pub t_lo: f64,
    pub t_hi: f64,
    pub r_last: f64,
}

impl RadialGraphState {
    pub fn new(r: f64, w: Vec<f64>, t: f64, angle: AngleParams) -> Result<Self, RadialError> {
        if w.len() < MIN_CELLS + 1 {
            return Err(RadialError::GridTooCoarse {
                m: w.len().saturating_sub(1),
                min: MIN_CELLS,
            });
        }
        if !(r > 0.0) || !r.is_finite() {
            return Err(RadialError::IncompatibleData {
                reason: format!("junction radius must be positive, got {r}"),
            });
        }
        if w.iter().any(|x| !x.is_finite()) {
            return Err(RadialError::IncompatibleData {
                reason: "non-finite height".into(),
            });
        }
        let m = w.len() - 1;
        if w[m].abs() > 1e-12 * r.max(1.0) {
            return Err(RadialError::IncompatibleData {
                reason: format!("junction height must vanish, got {}", w[m]),
            });
        }
        if w[..m].iter().any(|&x| x <= 0.0) {
            return Err(RadialError::IncompatibleData {
                reason: "interior heights must be positive".into(),
            });
        }
        let mut w = w;
        w[m] = 0.0;
        Ok(Self { r, w, t, angle })
    }

    /// Paraboloid initial lens at radius r0.
    pub fn lens_paraboloid(m: usize, r0: f64, angle: AngleParams) -> Result<Self, RadialError> {
        let w = (0..=m)
            .map(|i| paraboloid_height(i as f64 / m as f64 * r0, r0, angle))
            .collect();
        Self::new(r0, w, 0.0, angle)
    }

    /// Spherical-cap initial lens at radius r0 (exact contact angle).
    pub fn lens_cap(m: usize, r0: f64, angle: AngleParams) -> Result<Self, RadialError> {
        let w = (0..=m)
            .map(|i| cap_height(i as f64 / m as f64 * r0, r0, angle))
            .collect();
        Self::new(r0, w, 0.0, angle)
    }

    /// Number of cells M.
    pub fn m(&self) -> usize {
        self.w.len() - 1
    }

    /// Scaled-grid spacing 1/M.
    pub fn dxi(&self) -> f64 {
        1.0 / self.m() as f64
    }

    pub fn xi_grid(&self) -> Vec<f64> {
        let m = self.m();
        (0..=m).map(|i| i as f64 / m as f64).collect()
    }

    /// Junction mean curvature H_j = beta^3 w_rr(R) - beta0 / R, with w_rr
    /// from the third-order closure through the pinned height and slope.
    pub fn junction_curvature(&self) -> f64 {
        junction_curvature_of(&self.w, self.r, self.angle)
    }

    /// Front speed law Rdot = H_j / beta0 (negative while the lens shrinks).
    pub fn junction_rate(&self) -> f64 {
        self.junction_curvature() / self.angle.beta0()
    }

    /// Max area element over the grid (centered slopes, exact BC at ends).
    pub fn max_v(&self) -> f64 {
        let m = self.m();
        let d = self.dxi();
        let mut vmax: f64 = 1.0; // pole slope is 0
        for i in 1..m {
            let wr = (self.w[i + 1] - self.w[i - 1]) / (2.0 * d) / self.r;
            vmax = vmax.max((1.0 + wr * wr).sqrt());
        }
        vmax.max(self.angle.v_junction())
    }
}

fn junction_curvature_of(w: &[f64], r: f64, angle: AngleParams) -> f64 {
    let m = w.len() - 1;
    let d = 1.0 / m as f64;
    let h = d * r;
    let s = -angle.slope_junction();
    // (8 w_{M-1} - w_{M-2} + 6 s h) / (2 h^2) = w_rr(R) + O(h^2), using
    // the exact height w_M = 0 and slope s; no third derivative enters.
    let wrr = (8.0 * w[m - 1] - w[m - 2] + 6.0 * s * h) / (2.0 * h * h);
    angle.beta().powi(3) * wrr - angle.beta0() / r
}

/// Default advective time step: cfl * dxi * min(1, R/|Rdot|).
pub fn propose_dt_graph(state: &RadialGraphState, cfl: f64) -> f64 {
    let rdot = state.junction_rate();
    cfl * state.dxi() * 1.0f64.min(state.r / rdot.abs().max(1e-14))
}

/// One semi-implicit profile solve at candidate front radius `rn`, advecting
/// with front speed `rdot`. Returns the full new height vector.
fn solve_profile(
    state: &RadialGraphState,
    rn: f64,
    rdot: f64,
    dt: f64,
) -> Vec<f64> {
    let m = state.m();
    let d = state.dxi();
    let w = &state.w;
    let r_old = state.r;

    // lagged slopes on the old state
    let mut wr = vec![0.0; m + 1];
    for i in 1..m {
        wr[i] = (w[i + 1] - w[i - 1]) / (2.0 * d) / r_old;
    }

    let mut sys = TriDiag::identity(m + 1);
    sys.rhs.copy_from_slice(w);
    for i in 1..m - 1 {
        let a = dt / (d * d * rn * rn * (1.0 + wr[i] * wr[i]));
        let xi = i as f64 * d;
        let c = xi * rdot / rn + 1.0 / (rn * rn * xi);
        let (cp, cm) = hybrid_weights(c, a, dt, d);
        sys.lo[i] = -a + cm;
        sys.di[i] = 1.0 + 2.0 * a + cp - cm;
        sys.up[i] = -a - cp;
    }
    // pole row: w_t = 2 w_rr(0), w_rr(0) ~ 2(W1 - W0)/(d Rn)^2
    let a0 = 4.0 * dt / (d * d * rn * rn);
    sys.di[0] = 1.0 + a0;
    sys.up[0] = -a0;
    // junction: W_M = 0 and the third-order angle row
    // (11 W_M - 18 W_{M-1} + 9 W_{M-2} - 2 W_{M-3})/(6d) = Rn s
    // => W_{M-1} = alpha + W_{M-2}/2 - W_{M-3}/9, alpha = -d Rn s / 3,
    // pre-eliminated into PDE row M-2.
    let s = -state.angle.slope_junction();
    let alpha = -d * rn * s / 3.0;
    sys.rhs[m - 2] -= sys.up[m - 2] * alpha;
    sys.di[m - 2] += sys.up[m - 2] * 0.5;
    sys.lo[m - 2] += sys.up[m - 2] * (-1.0 / 9.0);
    sys.up[m - 2] = 0.0;

    let reduced = TriDiag {
        lo: sys.lo[..m - 1].to_vec(),
        di: sys.di[..m - 1].to_vec(),
        up: sys.up[..m - 1].to_vec(),
        rhs: sys.rhs[..m - 1].to_vec(),
    };
    let x = reduced.solve();
    let mut out = vec![0.0; m + 1];
    out[..m - 1].copy_from_slice(&x);
    out[m - 1] = alpha + 0.5 * out[m - 2] - out[m - 3] / 9.0;
    out[m] = 0.0;
    out
}

/// Advance the lens by one implicit front step of size `dt`. `thresh` is the
/// extinction radius (10 cells of the initial grid by default upstream).
pub fn step_graph_radial(
    state: &mut RadialGraphState,
    dt: f64,
    thresh: f64,
) -> Result<GraphStep, RadialError> {
    let rdot0 = state.junction_rate();
    if state.r + dt * rdot0 < thresh {
        return Ok(GraphStep::Extinction(ExtinctionEvent {
            t_lo: state.t,
            t_hi: state.t + dt,
            r_last: state.r,
        }));
    }

    // secant on G(Rn) = Rn - R - dt H_j(W_new(Rn))/beta0
    let g_of = |rn: f64| -> (f64, Vec<f64>) {
        let wk = solve_profile(state, rn, (rn - state.r) / dt, dt);
        let hk = junction_curvature_of(&wk, rn, state.angle);
        (rn - state.r - dt * hk / state.angle.beta0(), wk)
    };
    let mut ra = state.r + dt * rdot0;
    let (mut ga, _) = g_of(ra);
    let mut rb = ra - ga;
    let (mut gb, mut wb) = g_of(rb);
    let mut nit = 2;
    while gb.abs() > 1e-14 && nit < 25 && gb != ga {
        let rc = rb - gb * (rb - ra) / (gb - ga);
        ra = rb;
        ga = gb;
        rb = rc;
        if !(rb > 0.0) || !rb.is_finite() {
            return Err(RadialError::FrontSolveStalled {
                residual: gb.abs(),
                iters: nit,
            });
        }
        let (g, w) = g_of(rb);
        gb = g;
        wb = w;
        nit += 1;
    }
    if !gb.is_finite() || gb.abs() > 1e-8 * state.r.max(1.0) {
        return Err(RadialError::FrontSolveStalled {
            residual: gb.abs(),
            iters: nit,
        });
    }

    let t_lo = state.t;
    state.w = wb;
    state.r = rb;
    state.t += dt;

    let vmax = state.max_v();
    if vmax > 1e6 {
        return Err(RadialError::GradientBlowup {
            v: vmax,
            node: 0,
            t: state.t,
        });
    }
    if state.r < thresh {
        return Ok(GraphStep::Extinction(ExtinctionEvent {
            t_lo,
            t_hi: state.t,
            r_last: state.r,
        }));
    }
    Ok(GraphStep::Advanced)
}
