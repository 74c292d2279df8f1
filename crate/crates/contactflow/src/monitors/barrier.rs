use super::report::MonitorCheck;
use super::snapshot::GraphSnapshot;
use crate::error::MonitorError;

/// Parameters of the blow-up envelope phi(t) = h0 (1 - 2 c h0^2 t)^{-1/2}
/// for an initially concave profile: h0 < 0 is the initial curvature level,
/// c > 0 the cubic ODE constant in (sup H)' <= c (sup H)^3.
#[derive(Debug, Clone, Copy)]
pub struct BarrierParams {
    h0: f64,
    c: f64,
}

impl BarrierParams {
    pub fn new(h0: f64, c: f64) -> Result<Self, MonitorError> {
        if !(h0 < 0.0) || !h0.is_finite() {
            return Err(MonitorError::NotApplicable {
                reason: format!("envelope needs a negative curvature level, got h0 = {h0}"),
            });
        }
        if !(c > 0.0) || !c.is_finite() {
            return Err(MonitorError::NotApplicable {
                reason: format!("envelope needs a positive ODE constant, got c = {c}"),
            });
        }
        Ok(Self { h0, c })
    }

    /// Sharp constants for a surface in R^3: h0 = sup H(., 0) and c = 1/2
    /// from |h|^2 >= H^2 / 2.
    pub fn sharp(initial: &GraphSnapshot) -> Result<Self, MonitorError> {
        let h0 = initial
            .mean_curvature()
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max);
        if h0 >= 0.0 {
            return Err(MonitorError::NotApplicable {
                reason: format!("initial profile is not mean-concave: sup H(., 0) = {h0}"),
            });
        }
        Self::new(h0, 0.5)
    }

    /// Inflated ODE constant c = 1/2 + max over the run of (v^2 - 1),
    /// padding the curvature inequality with the gradient excess.
    pub fn with_gradient_margin(
        h0: f64,
        snaps: &[GraphSnapshot],
    ) -> Result<Self, MonitorError> {
        if snaps.is_empty() {
            return Err(MonitorError::TooFewSnapshots { got: 0, need: 1 });
        }
        let vmax = snaps
            .iter()
            .map(|s| s.max_v())
            .fold(f64::NEG_INFINITY, f64::max);
        Self::new(h0, 0.5 + (vmax * vmax - 1.0))
    }

    pub fn h0(&self) -> f64 {
        self.h0
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Blow-up time of the envelope.
    pub fn t_star(&self) -> f64 {
        1.0 / (2.0 * self.c * self.h0 * self.h0)
    }

    /// Envelope value at time t < t_star.
    pub fn envelope(&self, t: f64) -> f64 {
        self.h0 / (1.0 - 2.0 * self.c * self.h0 * self.h0 * t).sqrt()
    }
}

/// Result of comparing a run against a blow-up envelope.
#[derive(Debug, Clone)]
pub struct BarrierOutcome {
    /// sup over snapshots with t < t_star of (sup_r H - envelope(t)).
    /// Nonpositive means the envelope dominates the run.
    pub excess: f64,
    pub t_star: f64,
    /// sup_r H(., 0) - h0. Nonpositive means the envelope hypothesis holds
    /// on the initial data.
    pub precondition_excess: f64,
    /// Whether the recorded extinction happened no later than t_star.
    pub extinguished_by_t_star: Option<bool>,
    pub snapshots_compared: usize,
}

impl BarrierOutcome {
    pub fn checks(&self, tol: f64, location: &str) -> Vec<MonitorCheck> {
        let mut out = vec![
            MonitorCheck::upper("barrier_precondition", self.precondition_excess, 0.0, tol, location),
            MonitorCheck::upper("barrier_envelope", self.excess, 0.0, tol, location),
        ];
        if let Some(ok) = self.extinguished_by_t_star {
            out.push(MonitorCheck::upper(
                "extinction_before_t_star",
                if ok { 0.0 } else { 1.0 },
                0.0,
                0.5,
                location,
            ));
        }
        out
    }
}

/// Compare the curvature history of a run against the envelope. Snapshots at
/// or past t_star are skipped: the envelope has blown up there and imposes
/// no constraint.
pub fn barrier_check(
    snaps: &[GraphSnapshot],
    extinction_t: Option<f64>,
    params: BarrierParams,
) -> Result<BarrierOutcome, MonitorError> {
    if snaps.is_empty() {
        return Err(MonitorError::TooFewSnapshots { got: 0, need: 1 });
    }
    let t_star = params.t_star();
    let sup_h = |s: &GraphSnapshot| {
        s.mean_curvature()
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let precondition_excess = sup_h(&snaps[0]) - params.h0();
    let mut excess = f64::NEG_INFINITY;
    let mut compared = 0;
    for s in snaps {
        if s.t >= t_star {
            break;
        }
        excess = excess.max(sup_h(s) - params.envelope(s.t));
        compared += 1;
    }
    Ok(BarrierOutcome {
        excess,
        t_star,
        precondition_excess,
        extinguished_by_t_star: extinction_t.map(|te| te <= t_star),
        snapshots_compared: compared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::AngleParams;
    use crate::monitors::snapshot::graph_run_snapshots;
    use crate::radial::RadialGraphState;

    #[test]
    fn envelope_reference_point() {
        // h0 = -1, c = 1: phi(0.375) = -(1 - 0.75)^{-1/2} = -2.
        let p = BarrierParams::new(-1.0, 1.0).unwrap();
        assert!((p.envelope(0.375) + 2.0).abs() < 1e-15);
        assert!((p.t_star() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rejects_nonconcave_level() {
        assert!(matches!(
            BarrierParams::new(0.1, 1.0),
            Err(MonitorError::NotApplicable { .. })
        ));
        assert!(matches!(
            BarrierParams::new(-1.0, 0.0),
            Err(MonitorError::NotApplicable { .. })
        ));
    }

    #[test]
    fn sharp_envelope_dominates_paraboloid_lens() {
        let st = RadialGraphState::lens_paraboloid(128, 1.0, AngleParams::half()).unwrap();
        let run = graph_run_snapshots(st, 10.0, 40, 0.4).unwrap();
        let ev = run.extinction.expect("lens extinguishes");
        let params = BarrierParams::sharp(&run.snapshots[0]).unwrap();
        // Sharp level is the junction value -5 sqrt(3)/8; t* = 64/75.
        assert!((params.h0() + 5.0 * 3.0f64.sqrt() / 8.0).abs() < 1e-6);
        assert!((params.t_star() - 64.0 / 75.0).abs() < 1e-5);
        let out = barrier_check(&run.snapshots, Some(ev.t_hi), params).unwrap();
        assert!(out.precondition_excess.abs() < 1e-12);
        assert!(out.excess <= 1e-8, "excess {}", out.excess);
        assert_eq!(out.extinguished_by_t_star, Some(true));
        assert!(out.snapshots_compared >= 2);
    }
}
