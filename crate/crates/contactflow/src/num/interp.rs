//! Local cubic interpolation off a strictly increasing node set, used to read
//! fields at fixed physical probe radii from snapshots on moving grids.

/// Cubic Lagrange interpolation through the 4 nodes nearest `x`.
/// `xs` must be strictly increasing with at least 4 entries.
pub fn interp_cubic(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    let n = xs.len();
    assert!(n >= 4, "cubic interpolation needs at least 4 nodes");
    // first node index with xs[i] >= x
    let i = xs.partition_point(|&v| v < x);
    let i0 = i.saturating_sub(2).min(n - 4);
    let xw = &xs[i0..i0 + 4];
    let yw = &ys[i0..i0 + 4];
    let mut out = 0.0;
    for j in 0..4 {
        let mut lj = 1.0;
        for k in 0..4 {
            if k != j {
                lj *= (x - xw[k]) / (xw[j] - xw[k]);
            }
        }
        out += yw[j] * lj;
    }
    out
}

/// Vectorized form of [`interp_cubic`].
pub fn interp_cubic_into(xs: &[f64], ys: &[f64], probes: &[f64]) -> Vec<f64> {
    probes.iter().map(|&p| interp_cubic(xs, ys, p)).collect()
}

/// Piecewise-linear interpolation on a strictly increasing node set, clamped
/// to the end values outside the range.
pub fn interp_linear(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    let n = xs.len();
    if x <= xs[0] {
        return ys[0];
    }
    if x >= xs[n - 1] {
        return ys[n - 1];
    }
    let i = xs.partition_point(|&v| v < x).max(1);
    let w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    ys[i - 1] + w * (ys[i] - ys[i - 1])
}

/// Least-squares cubic fit `y = c0 + c1 s + c2 s^2 + c3 s^3` through exactly
/// four points `(s_i, y_i)` (an interpolating cubic); returns `(c1, 2 c2)`,
/// i.e. the first and second derivative of the fit at `s = 0`.
///
/// Used to extract junction slope and curvature from the last few nodes of a
/// non-uniform gauge grid with `s = r - R`.
pub fn cubic_fit_slope_curvature(s: &[f64; 4], y: &[f64; 4]) -> (f64, f64) {
    // Newton divided differences, then expand around 0
    let mut dd = *y;
    for lvl in 1..4 {
        for i in (lvl..4).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / (s[i] - s[i - lvl]);
        }
    }
    // p(x) = dd0 + dd1 (x-s0) + dd2 (x-s0)(x-s1) + dd3 (x-s0)(x-s1)(x-s2)
    let (s0, s1, s2) = (s[0], s[1], s[2]);
    let c1 = dd[1] + dd[2] * (-s0 - s1) + dd[3] * (s0 * s1 + s0 * s2 + s1 * s2);
    let c2_twice = 2.0 * (dd[2] + dd[3] * (-s0 - s1 - s2));
    (c1, c2_twice)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_exact_on_cubics() {
        let xs: Vec<f64> = (0..12).map(|i| 0.3 * i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| 1.0 - x + 2.0 * x * x - 0.5 * x * x * x).collect();
        for &p in &[0.05, 0.91, 1.77, 3.14] {
            let exact = 1.0 - p + 2.0 * p * p - 0.5 * p * p * p;
            assert!((interp_cubic(&xs, &ys, p) - exact).abs() < 1e-12);
        }
    }

    #[test]
    fn fit_recovers_derivatives_at_zero() {
        let f = |x: f64| 2.0 + 3.0 * x - 1.5 * x * x + 0.25 * x * x * x;
        let s = [-0.31, -0.22, -0.1, -0.04];
        let y = [f(s[0]), f(s[1]), f(s[2]), f(s[3])];
        let (c1, c2) = cubic_fit_slope_curvature(&s, &y);
        assert!((c1 - 3.0).abs() < 1e-12);
        assert!((c2 - (-3.0)).abs() < 1e-11);
    }
}
