use crate::error::RadialError;
use crate::geometry::AngleParams;
use crate::num::{gradient_uniform, one_sided_second_right_o3, second_centered_interior};
use crate::radial::{step_graph_radial, ExtinctionEvent, GraphStep, RadialGraphState};

/// Immutable record of a lens graph state at one time, on the rescaled
/// uniform grid xi_i = i/M over [0, R(t)].
#[derive(Debug, Clone)]
pub struct GraphSnapshot {
    pub t: f64,
    pub r_junction: f64,
    pub w: Vec<f64>,
    pub angle: AngleParams,
}

/// Physical-space derivative arrays of a snapshot.
#[derive(Debug, Clone)]
pub struct GraphJets {
    pub r: Vec<f64>,
    pub wr: Vec<f64>,
    pub wrr: Vec<f64>,
    pub v: Vec<f64>,
}

impl From<&RadialGraphState> for GraphSnapshot {
    fn from(s: &RadialGraphState) -> Self {
        Self {
            t: s.t,
            r_junction: s.r,
            w: s.w.clone(),
            angle: s.angle,
        }
    }
}

impl GraphSnapshot {
    pub fn m(&self) -> usize {
        self.w.len() - 1
    }

    /// Nodal first/second derivatives: centered interior, symmetric pole
    /// closure w_xx(0) = 2(w_1 - w_0)/d^2, third-order one-sided closure at
    /// the junction.
    pub fn jets(&self) -> GraphJets {
        let m = self.m();
        let d = 1.0 / m as f64;
        let rj = self.r_junction;
        let wx = gradient_uniform(&self.w, d);
        let mut wxx = second_centered_interior(&self.w, d);
        wxx[0] = 2.0 * (self.w[1] - self.w[0]) / (d * d);
        wxx[m] = one_sided_second_right_o3(&self.w, d);
        let r: Vec<f64> = (0..=m).map(|i| i as f64 * d * rj).collect();
        let wr: Vec<f64> = wx.iter().map(|x| x / rj).collect();
        let wrr: Vec<f64> = wxx.iter().map(|x| x / (rj * rj)).collect();
        let v: Vec<f64> = wr.iter().map(|x| (1.0 + x * x).sqrt()).collect();
        GraphJets { r, wr, wrr, v }
    }

    /// Mean curvature H = w_rr/v^3 + w_r/(r v), with the axis limit
    /// H(0) = 2 w_rr/v^3.
    pub fn mean_curvature(&self) -> Vec<f64> {
        let j = self.jets();
        let m = self.m();
        (0..=m)
            .map(|i| {
                let azim = if i == 0 {
                    j.wrr[0] / j.v[0]
                } else {
                    j.wr[i] / (j.r[i] * j.v[i])
                };
                j.wrr[i] / j.v[i].powi(3) + azim
            })
            .collect()
    }

    /// Principal curvatures (radial, azimuthal) at every node.
    pub fn principal_curvatures(&self) -> (Vec<f64>, Vec<f64>) {
        let j = self.jets();
        let m = self.m();
        let lam1: Vec<f64> = (0..=m).map(|i| j.wrr[i] / j.v[i].powi(3)).collect();
        let lam2: Vec<f64> = (0..=m)
            .map(|i| {
                if i == 0 {
                    j.wrr[0] / j.v[0]
                } else {
                    j.wr[i] / (j.r[i] * j.v[i])
                }
            })
            .collect();
        (lam1, lam2)
    }

    pub fn max_v(&self) -> f64 {
        self.jets().v.iter().fold(1.0f64, |a, &b| a.max(b))
    }

    pub fn max_height(&self) -> f64 {
        self.w.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b))
    }
}

/// Outcome of a snapshot-recording lens run.
#[derive(Debug, Clone)]
pub struct GraphRun {
    pub snapshots: Vec<GraphSnapshot>,
    pub extinction: Option<ExtinctionEvent>,
}

/// Advance a lens graph state, recording a snapshot exactly at each of the
/// strictly increasing `times` (steps shrink to land on them). Stops early
/// and reports the event if the front extinguishes; the extinction threshold
/// is 10 R0 / M.
pub fn graph_run_at_times(
    mut state: RadialGraphState,
    times: &[f64],
    cfl: f64,
) -> Result<GraphRun, RadialError> {
    assert!(
        times.windows(2).all(|w| w[1] > w[0]),
        "snapshot times must be strictly increasing"
    );
    let m = state.m();
    let d = state.dxi();
    let thresh = 10.0 * state.r / m as f64;
    let mut snapshots = Vec::with_capacity(times.len());
    let mut targets: std::collections::VecDeque<f64> = times.iter().copied().collect();
    while let Some(&next) = targets.front() {
        if next <= state.t + 1e-13 {
            snapshots.push(GraphSnapshot::from(&state));
            targets.pop_front();
            continue;
        }
        let dt = (cfl * d * d).min(next - state.t);
        match step_graph_radial(&mut state, dt, thresh)? {
            GraphStep::Advanced => {}
            GraphStep::Extinction(ev) => {
                return Ok(GraphRun {
                    snapshots,
                    extinction: Some(ev),
                });
            }
        }
    }
    Ok(GraphRun {
        snapshots,
        extinction: None,
    })
}

/// Advance a lens graph state to `t_end`, recording `nsnap + 1` snapshots at
/// equally spaced times starting at t = 0.
pub fn graph_run_snapshots(
    state: RadialGraphState,
    t_end: f64,
    nsnap: usize,
    cfl: f64,
) -> Result<GraphRun, RadialError> {
    let times: Vec<f64> = (0..=nsnap)
        .map(|k| t_end * k as f64 / nsnap as f64)
        .collect();
    graph_run_at_times(state, &times, cfl)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paraboloid_snapshot_jets_match_closed_form() {
        let st = RadialGraphState::lens_paraboloid(128, 1.0, AngleParams::half()).unwrap();
        let snap = GraphSnapshot::from(&st);
        let j = snap.jets();
        let a = 3.0f64.sqrt() / 2.0;
        // w = a (1 - r^2): w_r = -2 a r, w_rr = -2 a everywhere.
        for &i in &[0usize, 40, 90, 128] {
            assert!((j.wr[i] + 2.0 * a * j.r[i]).abs() < 1e-9, "wr node {i}");
            assert!((j.wrr[i] + 2.0 * a).abs() < 1e-7, "wrr node {i}");
        }
        let h = snap.mean_curvature();
        // Axis: H = 2 w_rr = -2 sqrt(3); junction: -5 sqrt(3)/8.
        assert!((h[0] + 2.0 * 3.0f64.sqrt()).abs() < 1e-7);
        assert!((h[128] + 5.0 * 3.0f64.sqrt() / 8.0).abs() < 1e-7);
        assert!((snap.max_v() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn run_records_requested_times() {
        let st = RadialGraphState::lens_paraboloid(48, 1.0, AngleParams::half()).unwrap();
        let run = graph_run_snapshots(st, 0.02, 4, 0.4).unwrap();
        assert!(run.extinction.is_none());
        assert_eq!(run.snapshots.len(), 5);
        for (k, s) in run.snapshots.iter().enumerate() {
            assert!((s.t - 0.005 * k as f64).abs() < 1e-12);
        }
        // Shrinking front.
        assert!(run.snapshots[4].r_junction < 1.0);
    }

    #[test]
    fn run_to_extinction_reports_event() {
        let st = RadialGraphState::lens_paraboloid(48, 1.0, AngleParams::half()).unwrap();
        let run = graph_run_snapshots(st, 10.0, 40, 0.4).unwrap();
        let ev = run.extinction.expect("lens must extinguish");
        // Coarse-grid extinction time near the converged ~0.255.
        assert!(ev.t_hi > 0.2 && ev.t_hi < 0.3, "t_ext {}", ev.t_hi);
    }
}
