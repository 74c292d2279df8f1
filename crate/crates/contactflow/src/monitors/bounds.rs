use super::report::MonitorCheck;
use super::snapshot::GraphSnapshot;
use crate::error::MonitorError;

fn need_snapshots(snaps: &[GraphSnapshot], need: usize) -> Result<(), MonitorError> {
    if snaps.len() < need {
        return Err(MonitorError::TooFewSnapshots {
            got: snaps.len(),
            need,
        });
    }
    Ok(())
}

/// Gradient function bound: sup_t max v(., t) must not exceed
/// max(max v(., 0), 1/beta). The junction value is pinned at 1/beta, so the
/// bound is the larger of the initial interior maximum and the pinned value.
pub fn gradient_bound_check(
    snaps: &[GraphSnapshot],
    tol: f64,
) -> Result<MonitorCheck, MonitorError> {
    need_snapshots(snaps, 2)?;
    let bound = snaps[0].max_v().max(1.0 / snaps[0].angle.beta());
    let measured = snaps
        .iter()
        .map(|s| s.max_v())
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(MonitorCheck::upper(
        "gradient_bound",
        measured,
        bound,
        tol,
        "monitors::bounds::gradient_bound_check",
    ))
}

/// Height bound: sup_t max w(., t) must not exceed max w(., 0).
pub fn height_bound_check(
    snaps: &[GraphSnapshot],
    tol: f64,
) -> Result<MonitorCheck, MonitorError> {
    need_snapshots(snaps, 2)?;
    let bound = snaps[0].max_height();
    let measured = snaps
        .iter()
        .map(|s| s.max_height())
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(MonitorCheck::upper(
        "height_bound",
        measured,
        bound,
        tol,
        "monitors::bounds::height_bound_check",
    ))
}

/// Concavity persistence: the largest principal curvature over the run must
/// not exceed its initial maximum. An initially concave profile (all
/// curvatures negative) stays concave.
pub fn concavity_check(snaps: &[GraphSnapshot], tol: f64) -> Result<MonitorCheck, MonitorError> {
    need_snapshots(snaps, 2)?;
    let max_eig = |s: &GraphSnapshot| {
        let (l1, l2) = s.principal_curvatures();
        l1.iter()
            .chain(l2.iter())
            .fold(f64::NEG_INFINITY, |a, &b| a.max(b))
    };
    let bound = max_eig(&snaps[0]);
    let measured = snaps.iter().map(max_eig).fold(f64::NEG_INFINITY, f64::max);
    Ok(MonitorCheck::upper(
        "concavity_persistence",
        measured,
        bound,
        tol,
        "monitors::bounds::concavity_check",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::AngleParams;
    use crate::monitors::snapshot::graph_run_snapshots;
    use crate::radial::RadialGraphState;

    fn paraboloid_run() -> Vec<GraphSnapshot> {
        let st = RadialGraphState::lens_paraboloid(96, 1.0, AngleParams::half()).unwrap();
        graph_run_snapshots(st, 0.05, 10, 0.4).unwrap().snapshots
    }

    #[test]
    fn paraboloid_lens_passes_all_bounds() {
        let snaps = paraboloid_run();
        let g = gradient_bound_check(&snaps, 1e-8).unwrap();
        assert!(g.pass, "gradient: {} vs {}", g.measured, g.bound);
        // v is pinned at 1/beta = 2 at the junction and that is the maximum.
        assert!((g.bound - 2.0).abs() < 1e-9);
        let h = height_bound_check(&snaps, 1e-8).unwrap();
        assert!(h.pass, "height: {} vs {}", h.measured, h.bound);
        assert!((h.bound - 3.0f64.sqrt() / 2.0).abs() < 1e-12);
        let c = concavity_check(&snaps, 1e-6).unwrap();
        assert!(c.pass, "concavity: {} vs {}", c.measured, c.bound);
        // Initial maximal eigenvalue is the radial one at the junction,
        // w_rr/v^3 = -sqrt(3)/8; everything stays below it.
        assert!((c.bound + 3.0f64.sqrt() / 8.0).abs() < 1e-6, "bound {}", c.bound);
    }

    #[test]
    fn single_snapshot_is_rejected() {
        let snaps = paraboloid_run();
        let one = &snaps[..1];
        assert!(matches!(
            gradient_bound_check(one, 0.0),
            Err(MonitorError::TooFewSnapshots { got: 1, need: 2 })
        ));
    }
}
