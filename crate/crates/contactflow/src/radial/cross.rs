//! Cross-validation between the two realizations of the same radial motion:
//! the gauge pair (phi, u) reconstructs the graph w = u o phi^{-1}, which can
//! be compared against the moving-front graph solver node by node.

use super::gauge::{RadialCase, RadialGaugeState};
use super::graph::RadialGraphState;
use crate::error::RadialError;
use crate::num::interp::interp_linear;

/// Heights of the gauge surface read as a graph at the given physical radii
/// (linear interpolation in the image coordinate phi).
pub fn gauge_height_at(state: &RadialGaugeState, radii: &[f64]) -> Vec<f64> {
    radii
        .iter()
        .map(|&r| interp_linear(&state.phi, &state.u, r))
        .collect()
}

/// Pointwise discrepancy between a gauge state and a graph state assumed to
/// describe the same surface at the same time: junction radius gap and the
/// sup over the graph grid of |u o phi^{-1} - w|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discrepancy {
    pub d_radius: f64,
    pub sup_height: f64,
}

pub fn graph_gauge_discrepancy(
    gauge: &RadialGaugeState,
    graph: &RadialGraphState,
) -> Result<Discrepancy, RadialError> {
    if !matches!(gauge.case, RadialCase::Lens) {
        return Err(RadialError::IncompatibleData {
            reason: "graph states are lens-only; compare lens gauge runs".into(),
        });
    }
    if (gauge.t - graph.t).abs() > 1e-9 * (1.0 + graph.t.abs()) {
        return Err(RadialError::IncompatibleData {
            reason: format!("time mismatch: gauge t = {}, graph t = {}", gauge.t, graph.t),
        });
    }
    let radii: Vec<f64> = graph
        .xi_grid()
        .iter()
        .map(|&xi| xi * graph.r)
        .collect();
    let mirrored = gauge_height_at(gauge, &radii);
    let sup_height = mirrored
        .iter()
        .zip(&graph.w)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    Ok(Discrepancy {
        d_radius: (gauge.junction_radius() - graph.r).abs(),
        sup_height,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::AngleParams;

    #[test]
    fn zero_time_discrepancy_is_interpolation_only() {
        let a = AngleParams::half();
        let gauge = RadialGaugeState::lens_paraboloid(128, 1.0, a).unwrap();
        let graph = RadialGraphState::lens_paraboloid(128, 1.0, a).unwrap();
        let d = graph_gauge_discrepancy(&gauge, &graph).unwrap();
        assert!(d.d_radius < 1e-14);
        // same analytic profile, different node placement: linear
        // interpolation error O(d^2) only
        assert!(d.sup_height < 1e-4, "{}", d.sup_height);
    }

    #[test]
    fn exterior_gauge_rejected() {
        let a = AngleParams::half();
        let gauge = RadialGaugeState::exterior_catenoid(
            32,
            4.0,
            1.5,
            crate::radial::OuterBc::Pinned,
            a,
        )
        .unwrap();
        let graph = RadialGraphState::lens_paraboloid(32, 1.0, a).unwrap();
        assert!(graph_gauge_discrepancy(&gauge, &graph).is_err());
    }
}
