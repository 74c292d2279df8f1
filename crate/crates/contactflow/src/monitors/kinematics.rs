use super::snapshot::GraphSnapshot;
use crate::error::MonitorError;
use crate::gauge2d::{boundary_ring, GaugeField2D};
use crate::num::cubic_fit_slope_curvature;
use crate::radial::{RadialCase, RadialGaugeState};

/// Time series comparing the measured normal speed of the junction circle
/// with the speed dictated by the contact-angle law. Entries live at the
/// interior snapshot times where a centered difference of R(t) exists.
#[derive(Debug, Clone)]
pub struct JunctionLawSeries {
    pub t: Vec<f64>,
    pub rdot: Vec<f64>,
    pub law: Vec<f64>,
}

impl JunctionLawSeries {
    pub fn mismatch(&self) -> Vec<f64> {
        self.rdot
            .iter()
            .zip(&self.law)
            .map(|(a, b)| (a - b).abs())
            .collect()
    }

    pub fn sup_mismatch(&self) -> f64 {
        self.mismatch().into_iter().fold(0.0, f64::max)
    }

    /// True when every sample has the boundary moving inward and the law
    /// predicting inward motion (the concave-lens sign pattern).
    pub fn all_inward(&self) -> bool {
        self.rdot.iter().all(|&x| x < 0.0) && self.law.iter().all(|&x| x < 0.0)
    }
}

/// Mean curvature at s = 0 of the cubic through four profile samples
/// (s_i, y_i), for a rotationally symmetric graph whose junction circle has
/// radius `r_junction`. s is the signed radial offset from the junction.
fn junction_h_from_profile(s: &[f64; 4], y: &[f64; 4], r_junction: f64) -> f64 {
    let (c1, c2) = cubic_fit_slope_curvature(s, y);
    let v = (1.0 + c1 * c1).sqrt();
    c2 / v.powi(3) + c1 / (r_junction * v)
}

fn need(n: usize) -> Result<(), MonitorError> {
    if n < 3 {
        return Err(MonitorError::TooFewSnapshots { got: n, need: 3 });
    }
    Ok(())
}

/// Junction-law series for a lens graph run.
pub fn junction_law_graph(snaps: &[GraphSnapshot]) -> Result<JunctionLawSeries, MonitorError> {
    need(snaps.len())?;
    let mut t = Vec::new();
    let mut rdot = Vec::new();
    let mut law = Vec::new();
    for k in 1..snaps.len() - 1 {
        let snap = &snaps[k];
        let m = snap.m();
        let d = snap.r_junction / m as f64;
        let mut s = [0.0; 4];
        let mut y = [0.0; 4];
        for (a, i) in (m - 3..=m).enumerate() {
            s[a] = (i as f64 - m as f64) * d;
            y[a] = snap.w[i];
        }
        let h = junction_h_from_profile(&s, &y, snap.r_junction);
        law.push(h / snap.angle.beta0());
        rdot.push(
            (snaps[k + 1].r_junction - snaps[k - 1].r_junction)
                / (snaps[k + 1].t - snaps[k - 1].t),
        );
        t.push(snap.t);
    }
    Ok(JunctionLawSeries { t, rdot, law })
}

/// Junction-law series for a split-gauge radial run. The lens junction sits
/// at the outer grid end and moves with +H/beta0; the exterior junction sits
/// at the inner end and moves with -H/beta0.
pub fn junction_law_radial_gauge(
    states: &[RadialGaugeState],
) -> Result<JunctionLawSeries, MonitorError> {
    need(states.len())?;
    let mut t = Vec::new();
    let mut rdot = Vec::new();
    let mut law = Vec::new();
    for k in 1..states.len() - 1 {
        let st = &states[k];
        let n = st.phi.len() - 1;
        let rj = st.junction_radius();
        let idx: [usize; 4] = match st.case {
            RadialCase::Lens => [n - 3, n - 2, n - 1, n],
            RadialCase::Exterior { .. } => [0, 1, 2, 3],
        };
        let mut s = [0.0; 4];
        let mut y = [0.0; 4];
        for (a, &i) in idx.iter().enumerate() {
            s[a] = st.phi[i] - rj;
            y[a] = st.u[i];
        }
        let h = junction_h_from_profile(&s, &y, rj);
        let sign = match st.case {
            RadialCase::Lens => 1.0,
            RadialCase::Exterior { .. } => -1.0,
        };
        law.push(sign * h / st.angle.beta0());
        rdot.push(
            (states[k + 1].junction_radius() - states[k - 1].junction_radius())
                / (states[k + 1].t - states[k - 1].t),
        );
        t.push(st.t);
    }
    Ok(JunctionLawSeries { t, rdot, law })
}

/// Junction-law series for a full 2D gauge run on the disk: per-ray cubic
/// fits of the graph profile near the ring, averaged over rays, against the
/// centered rate of the mean ring radius.
pub fn junction_law_gauge2d(
    history: &[GaugeField2D],
) -> Result<JunctionLawSeries, MonitorError> {
    need(history.len())?;
    let mut t = Vec::new();
    let mut rdot = Vec::new();
    let mut law = Vec::new();
    for k in 1..history.len() - 1 {
        let f = &history[k];
        let p = f.mesh.p;
        let q = f.mesh.q;
        let ring = boundary_ring(f).map_err(|e| MonitorError::NotApplicable {
            reason: format!("boundary jets unavailable: {e}"),
        })?;
        let mut h_sum = 0.0;
        for j in 0..q {
            let rj = (ring.phi[j][0].powi(2) + ring.phi[j][1].powi(2)).sqrt();
            let mut s = [0.0; 4];
            let mut y = [0.0; 4];
            for (a, i) in (p - 3..=p).enumerate() {
                let x = f.f[0][f.mesh.idx(i, j)];
                let yy = f.f[1][f.mesh.idx(i, j)];
                s[a] = (x * x + yy * yy).sqrt() - rj;
                y[a] = f.f[2][f.mesh.idx(i, j)];
            }
            h_sum += junction_h_from_profile(&s, &y, rj);
        }
        let h_mean = h_sum / q as f64;
        law.push(h_mean / f.angle.beta0());
        rdot.push(
            (history[k + 1].ring_mean_radius() - history[k - 1].ring_mean_radius())
                / (history[k + 1].t - history[k - 1].t),
        );
        t.push(f.t);
    }
    Ok(JunctionLawSeries { t, rdot, law })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::AngleParams;
    use crate::monitors::snapshot::graph_run_snapshots;
    use crate::radial::RadialGraphState;

    #[test]
    fn cubic_fit_junction_h_matches_paraboloid() {
        // w = a (1 - r^2) at R = 1: H_j = -5 sqrt(3)/8 at beta = 1/2.
        let a = 3.0f64.sqrt() / 2.0;
        let d = 0.01;
        let mut s = [0.0; 4];
        let mut y = [0.0; 4];
        for k in 0..4 {
            s[k] = (k as f64 - 3.0) * d;
            let r = 1.0 + s[k];
            y[k] = a * (1.0 - r * r);
        }
        let h = junction_h_from_profile(&s, &y, 1.0);
        assert!((h + 5.0 * 3.0f64.sqrt() / 8.0).abs() < 1e-10, "H_j = {h}");
    }

    #[test]
    fn lens_graph_law_is_inward_and_small_mismatch() {
        let st = RadialGraphState::lens_paraboloid(96, 1.0, AngleParams::half()).unwrap();
        let run = graph_run_snapshots(st, 0.06, 12, 0.4).unwrap();
        let series = junction_law_graph(&run.snapshots).unwrap();
        assert!(series.all_inward());
        assert!(series.sup_mismatch() < 5e-2, "sup {}", series.sup_mismatch());
    }
}
