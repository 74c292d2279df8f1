//! Fully 2D split-gauge solver for the contact-angle flow on a shrinking
//! lens: a gauge map of the unit disk plus a height field evolve together,
//! with the contact, angle, and orthogonality conditions enforced on the
//! boundary ring by a coupled per-node solve.

pub mod boundary;
pub mod diffeo;
pub mod extract;
pub mod field;
pub mod mesh;
pub mod reflect;
pub mod step;

pub use boundary::{
    angle_residual, boundary_ring, junction_kinematics, orthogonality_residual,
    ring_residual_worst, BoundaryRing, JunctionKinematics,
};
pub use diffeo::{build_initial_diffeo, collar_cutoff, lens_initial_state, DiffeoBuildParams};
pub use extract::{extract_graph, extract_graph_radial};
pub use field::{cart_from_polar, CartJet, GaugeField2D, PolarJet};
pub use mesh::DiskMesh;
pub use reflect::{reflection_mesh, write_obj, ReflectionMesh};
pub use step::{interior_eval, propose_dt_gauge2d, step_gauge2d, InteriorEval, StepStats};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::AngleParams;
    use crate::radial::{step_gauge_radial, RadialGaugeState};

    /// Run the 2D lens to a target time with the carried-stiffness CFL.
    fn run_lens_2d(p: usize, q: usize, t_end: f64) -> (GaugeField2D, Vec<GaugeField2D>) {
        let mesh = DiskMesh::new(p, q).unwrap();
        let mut fld =
            lens_initial_state(mesh, AngleParams::half(), DiffeoBuildParams::default()).unwrap();
        let mut lambda = interior_eval(&fld).unwrap().lambda_max;
        let mut snaps = Vec::new();
        let snap_times = [0.6 * t_end, 0.8 * t_end, t_end];
        let mut next_snap = 0;
        while fld.t < t_end - 1e-14 {
            let mut dt = propose_dt_gauge2d(&mesh, lambda, 0.4);
            let mut hit = false;
            if next_snap < snap_times.len() && fld.t + dt >= snap_times[next_snap] - 1e-14 {
                dt = snap_times[next_snap] - fld.t;
                hit = true;
            }
            let stats = step_gauge2d(&mut fld, dt).unwrap();
            assert!(stats.ring_residual < 1e-10, "ring {}", stats.ring_residual);
            assert!(stats.min_det_dphi > 0.0);
            lambda = stats.lambda_max;
            if hit {
                snaps.push(fld.clone());
                next_snap += 1;
            }
        }
        (fld, snaps)
    }

    #[test]
    fn symmetric_lens_shrinks_and_stays_symmetric() {
        let (fld, snaps) = run_lens_2d(16, 24, 0.05);
        // Rotationally symmetric data must stay symmetric under the
        // symmetric discretization.
        assert!(fld.ring_radius_spread() < 1e-9, "spread {}", fld.ring_radius_spread());
        let r2d = fld.ring_mean_radius();
        assert!(r2d < 1.0 && r2d > 0.9, "R {r2d}");
        assert!(fld.pole_height() < 3.0f64.sqrt() / 2.0);

        // Cross-check the junction radius against the rotationally symmetric
        // gauge solver at matched time.
        let mut rad = RadialGaugeState::lens_paraboloid(64, 1.0, AngleParams::half()).unwrap();
        let d = rad.grid.dxi();
        while rad.t < 0.05 - 1e-14 {
            let dt = (0.4 * d * d).min(0.05 - rad.t);
            step_gauge_radial(&mut rad, dt).unwrap();
        }
        assert!(
            (r2d - rad.junction_radius()).abs() < 1e-2,
            "2d {} vs radial {}",
            r2d,
            rad.junction_radius()
        );

        // Junction motion law holds pointwise on the ring to truncation
        // accuracy at this resolution.
        let kin = junction_kinematics(&snaps).unwrap();
        assert!(kin.max_mismatch < 0.5, "mismatch {}", kin.max_mismatch);
        // Shrinking lens: boundary moves inward, H < 0 on the ring.
        for (s, l) in kin.normal_speed.iter().zip(&kin.law_speed) {
            assert!(*s > 0.0, "inward speed {s}");
            assert!(*l > 0.0, "law speed {l}");
        }
    }
}
