use super::snapshot::GraphSnapshot;
use crate::error::MonitorError;
use crate::num::{gradient_uniform, interp_cubic};

/// Nodal geometric fields of one lens snapshot on its physical radii.
/// Rotational symmetry reduces every tensor entry to a profile: p is the
/// radial-radial curvature component h_11 in the flat chart, m the
/// azimuthal principal curvature (axis limit w_rr/v), om the radial
/// component of the downward normal's horizontal part, gi11 the inverse
/// metric's radial entry.
struct RadialFields {
    r: Vec<f64>,
    spacing: f64,
    p: Vec<f64>,
    m: Vec<f64>,
    v: Vec<f64>,
    om: Vec<f64>,
    h: Vec<f64>,
    hg2: Vec<f64>,
    gi11: Vec<f64>,
}

fn radial_fields(snap: &GraphSnapshot) -> RadialFields {
    let j = snap.jets();
    let n = j.r.len();
    let mut p = Vec::with_capacity(n);
    let mut m = Vec::with_capacity(n);
    let mut om = Vec::with_capacity(n);
    let mut h = Vec::with_capacity(n);
    let mut hg2 = Vec::with_capacity(n);
    let mut gi11 = Vec::with_capacity(n);
    for i in 0..n {
        let v = j.v[i];
        let pi = j.wrr[i] / v;
        let mi = if i == 0 {
            j.wrr[i] / v
        } else {
            j.wr[i] / (j.r[i] * v)
        };
        let lam1 = pi / (v * v);
        p.push(pi);
        m.push(mi);
        om.push(j.wr[i] / v);
        h.push(lam1 + mi);
        hg2.push(lam1 * lam1 + mi * mi);
        gi11.push(1.0 / (v * v));
    }
    let spacing = j.r[1] - j.r[0];
    RadialFields {
        r: j.r,
        spacing,
        p,
        m,
        v: j.v,
        om,
        h,
        hg2,
        gi11,
    }
}

/// Sup norms over the probe radii of the interior evolution-identity
/// residuals, one per identity family. Each compares the centered time
/// derivative of a field against its curvature-flow evolution law, with the
/// degenerate Laplacian assembled from the same snapshot.
#[derive(Debug, Clone, Copy)]
pub struct InteriorIdentityResiduals {
    /// d/dt H = tr_g d^2 H + |h|^2 H.
    pub h_mean: f64,
    /// d/dt v = tr_g d^2 v - v |h|^2 - (2/v) g(dv, dv).
    pub v: f64,
    /// d/dt om^1 = tr_g d^2 om^1 + |h|^2 om^1 (vector harmonics shift the
    /// radial trace by -om/r^2).
    pub omega: f64,
    /// d/dt g^11 = tr_g d^2 g^11 - 2 |h|^2 om^1 om^1 + 2 (h^2)^{11}.
    pub ginv11: f64,
    /// d/dt h_11 = tr_g d^2 h_11 - 2 (nabla_om h^2)_11 + C_11.
    pub h11: f64,
    /// d/dt |h|^2 = tr_g d^2 |h|^2 - 2 |nabla h|^2 + 2 |h|^4.
    pub h_norm2: f64,
}

impl InteriorIdentityResiduals {
    pub fn as_array(&self) -> [(&'static str, f64); 6] {
        [
            ("H", self.h_mean),
            ("v", self.v),
            ("om", self.omega),
            ("gi", self.ginv11),
            ("h11", self.h11),
            ("h2", self.h_norm2),
        ]
    }

    pub fn max(&self) -> f64 {
        self.as_array().iter().fold(0.0, |a, &(_, b)| a.max(b))
    }
}

/// Default probe radii: nine points well inside the lens, away from both
/// the axis closure and the moving junction.
pub fn standard_probes() -> Vec<f64> {
    (0..9).map(|k| 0.15 + 0.05 * k as f64).collect()
}

/// Evaluate all six interior identity families at snapshot `k` of a lens
/// run, using snapshots k-1 and k+1 for the time derivative. Fields are
/// interpolated cubically from each snapshot's own grid onto the fixed
/// probe radii, so the moving domain never enters the differences.
pub fn interior_residuals(
    snaps: &[GraphSnapshot],
    k: usize,
    probes: &[f64],
) -> Result<InteriorIdentityResiduals, MonitorError> {
    if snaps.len() < 3 {
        return Err(MonitorError::TooFewSnapshots {
            got: snaps.len(),
            need: 3,
        });
    }
    if k == 0 || k + 1 >= snaps.len() {
        return Err(MonitorError::NotApplicable {
            reason: format!("snapshot index {k} has no neighbors in 0..{}", snaps.len()),
        });
    }
    let f0 = radial_fields(&snaps[k - 1]);
    let f1 = radial_fields(&snaps[k]);
    let f2 = radial_fields(&snaps[k + 1]);
    let dts = snaps[k + 1].t - snaps[k - 1].t;

    let np = probes.len();
    let atp = |arr: &[f64]| -> Vec<f64> {
        probes.iter().map(|&x| interp_cubic(&f1.r, arr, x)).collect()
    };
    let time_d = |a0: &[f64], a2: &[f64]| -> Vec<f64> {
        probes
            .iter()
            .map(|&x| (interp_cubic(&f2.r, a2, x) - interp_cubic(&f0.r, a0, x)) / dts)
            .collect()
    };
    let dr = |arr: &[f64]| gradient_uniform(arr, f1.spacing);

    let v = atp(&f1.v);
    let om = atp(&f1.om);
    let h = atp(&f1.h);
    let hg2 = atp(&f1.hg2);
    let p = atp(&f1.p);
    let mm = atp(&f1.m);

    // tr_g d^2 f for an l=0 profile: f''/v^2 + f'/r, derivatives taken as
    // repeated first differences like the time-derivative pairing.
    let trace_parts = |arr: &[f64]| -> (Vec<f64>, Vec<f64>) {
        let g1 = dr(arr);
        let g2 = dr(&g1);
        (atp(&g1), atp(&g2))
    };
    let trace_l0 = |arr: &[f64]| -> Vec<f64> {
        let (g1, g2) = trace_parts(arr);
        (0..np)
            .map(|a| g2[a] / (v[a] * v[a]) + g1[a] / probes[a])
            .collect()
    };

    let sup = |vals: Vec<f64>| vals.into_iter().fold(0.0f64, |a, b| a.max(b.abs()));

    // L[H] = |h|^2 H.
    let th = time_d(&f0.h, &f2.h);
    let lh = trace_l0(&f1.h);
    let h_mean = sup((0..np).map(|a| th[a] - lh[a] - hg2[a] * h[a]).collect());

    // L[v] = -v |h|^2 - (2/v) g(dv, dv); radially g(dv, dv) = v_r^2 / v^2.
    let tv = time_d(&f0.v, &f2.v);
    let lv = trace_l0(&f1.v);
    let vr = atp(&dr(&f1.v));
    let v_res = sup(
        (0..np)
            .map(|a| tv[a] - lv[a] + v[a] * hg2[a] + (2.0 / v[a]) * vr[a] * vr[a] / (v[a] * v[a]))
            .collect(),
    );

    // L[om^1] = |h|^2 om^1, with the l=1 radial trace.
    let tom = time_d(&f0.om, &f2.om);
    let lom = trace_l0(&f1.om);
    let omega = sup(
        (0..np)
            .map(|a| tom[a] - (lom[a] - om[a] / (probes[a] * probes[a])) - hg2[a] * om[a])
            .collect(),
    );

    // L[g^11] = -2 |h|^2 om om + 2 (h^2)^11; conjugate profile is the
    // constant azimuthal entry 1.
    let tgi = time_d(&f0.gi11, &f2.gi11);
    let lgi = trace_l0(&f1.gi11);
    let gi11 = atp(&f1.gi11);
    let ginv11 = sup(
        (0..np)
            .map(|a| {
                let mix = lgi[a] - 2.0 * (gi11[a] - 1.0) / (probes[a] * probes[a]);
                let rhs = -2.0 * hg2[a] * om[a] * om[a] + 2.0 * p[a] * p[a] / v[a].powi(6);
                tgi[a] - mix - rhs
            })
            .collect(),
    );

    // L[h_11] = -2 (nabla_om h^2)_11 + C_11; conjugate profile is the
    // azimuthal curvature m.
    let tp = time_d(&f0.p, &f2.p);
    let lp = trace_l0(&f1.p);
    let p2_nod: Vec<f64> = (0..f1.p.len())
        .map(|i| f1.p[i] * f1.p[i] / (f1.v[i] * f1.v[i]))
        .collect();
    let p2 = atp(&p2_nod);
    let dp2 = atp(&dr(&p2_nod));
    let h11 = sup(
        (0..np)
            .map(|a| {
                let mix = lp[a] - 2.0 * (p[a] - mm[a]) / (probes[a] * probes[a]);
                let nabo = om[a] * (dp2[a] - 2.0 * p[a] * om[a] * p2[a]);
                let ct = hg2[a] * p[a]
                    - 6.0 * p[a] * p2[a] * om[a] * om[a]
                    - 2.0 * p[a].powi(3) / v[a].powi(4);
                tp[a] - mix - (-2.0 * nabo + ct)
            })
            .collect(),
    );

    // L[|h|^2] = -2 |nabla h|^2 + 2 |h|^4.
    let th2 = time_d(&f0.hg2, &f2.hg2);
    let lh2 = trace_l0(&f1.hg2);
    let dp_nod = dr(&f1.p);
    let dm_nod = dr(&f1.m);
    let ndh2_nod: Vec<f64> = (0..f1.p.len())
        .map(|i| {
            let a1 = dp_nod[i] - 2.0 * f1.p[i] * f1.p[i] * f1.om[i];
            let a2 = dm_nod[i];
            a1 * a1 / f1.v[i].powi(6) + 3.0 * a2 * a2 / (f1.v[i] * f1.v[i])
        })
        .collect();
    let ndh2 = atp(&ndh2_nod);
    let h_norm2 = sup(
        (0..np)
            .map(|a| th2[a] - lh2[a] + 2.0 * ndh2[a] - 2.0 * hg2[a] * hg2[a])
            .collect(),
    );

    Ok(InteriorIdentityResiduals {
        h_mean,
        v: v_res,
        omega,
        ginv11,
        h11,
        h_norm2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::AngleParams;
    use crate::monitors::snapshot::graph_run_snapshots;
    use crate::radial::RadialGraphState;

    fn level(m: usize, nsnap: usize) -> InteriorIdentityResiduals {
        let st = RadialGraphState::lens_paraboloid(m, 1.0, AngleParams::half()).unwrap();
        let run = graph_run_snapshots(st, 0.05, nsnap, 0.4).unwrap();
        assert!(run.extinction.is_none());
        interior_residuals(&run.snapshots, nsnap / 2, &standard_probes()).unwrap()
    }

    #[test]
    fn residual_magnitudes_and_second_order_decay() {
        let coarse = level(64, 10);
        let fine = level(128, 20);
        // Two families pinned against independently computed references.
        assert!(
            (coarse.h_mean - 3.536e-2).abs() < 3e-4,
            "H residual {} at M=64",
            coarse.h_mean
        );
        assert!(
            (coarse.h_norm2 - 1.406e-1).abs() < 2e-3,
            "|h|^2 residual {} at M=64",
            coarse.h_norm2
        );
        for ((name, c), (_, f)) in coarse.as_array().into_iter().zip(fine.as_array()) {
            let ratio = c / f;
            assert!(
                ratio > 3.0 && ratio < 5.2,
                "family {name}: {c:.3e} -> {f:.3e} (ratio {ratio:.2})"
            );
        }
    }

    #[test]
    fn needs_interior_snapshot() {
        let st = RadialGraphState::lens_paraboloid(32, 1.0, AngleParams::half()).unwrap();
        let run = graph_run_snapshots(st, 0.01, 2, 0.4).unwrap();
        assert!(matches!(
            interior_residuals(&run.snapshots, 0, &standard_probes()),
            Err(MonitorError::NotApplicable { .. })
        ));
    }
}
