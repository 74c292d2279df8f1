//! Finite-difference stencils on uniform grids. Interior stencils are
//! centered; boundary closures are one-sided with the order noted per
//! function.

/// First derivative of a nodal field on a uniform grid, centered in the
/// interior, second-order one-sided at both ends.
pub fn gradient_uniform(f: &[f64], d: f64) -> Vec<f64> {
    let n = f.len();
    assert!(n >= 3, "gradient needs at least 3 nodes");
    let mut g = vec![0.0; n];
    for i in 1..n - 1 {
        g[i] = (f[i + 1] - f[i - 1]) / (2.0 * d);
    }
    g[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * d);
    g[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * d);
    g
}

/// Centered second derivative at interior nodes; ends left at zero for the
/// caller to close.
pub fn second_centered_interior(f: &[f64], d: f64) -> Vec<f64> {
    let n = f.len();
    let mut g = vec![0.0; n];
    for i in 1..n - 1 {
        g[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (d * d);
    }
    g
}

/// Second-order one-sided first derivative at the left end: (-3f0+4f1-f2)/2d.
pub fn one_sided_first_left(f: &[f64], d: f64) -> f64 {
    (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * d)
}

/// Second-order one-sided first derivative at the right end.
pub fn one_sided_first_right(f: &[f64], d: f64) -> f64 {
    let n = f.len();
    (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * d)
}

/// Third-order one-sided first derivative at the right end:
/// (11f_M - 18f_{M-1} + 9f_{M-2} - 2f_{M-3}) / 6d.
pub fn one_sided_first_right_o3(f: &[f64], d: f64) -> f64 {
    let n = f.len();
    (11.0 * f[n - 1] - 18.0 * f[n - 2] + 9.0 * f[n - 3] - 2.0 * f[n - 4]) / (6.0 * d)
}

/// Third-order one-sided first derivative at the left end.
pub fn one_sided_first_left_o3(f: &[f64], d: f64) -> f64 {
    (-11.0 * f[0] + 18.0 * f[1] - 9.0 * f[2] + 2.0 * f[3]) / (6.0 * d)
}

/// Second-order one-sided second derivative at the right end:
/// (2f_M - 5f_{M-1} + 4f_{M-2} - f_{M-3}) / d^2.
pub fn one_sided_second_right(f: &[f64], d: f64) -> f64 {
    let n = f.len();
    (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / (d * d)
}

/// Second-order one-sided second derivative at the left end.
pub fn one_sided_second_left(f: &[f64], d: f64) -> f64 {
    (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / (d * d)
}

/// Third-order one-sided second derivative at the right end (five nodes):
/// (35f_M - 104f_{M-1} + 114f_{M-2} - 56f_{M-3} + 11f_{M-4}) / 12d^2.
pub fn one_sided_second_right_o3(f: &[f64], d: f64) -> f64 {
    let n = f.len();
    (35.0 * f[n - 1] - 104.0 * f[n - 2] + 114.0 * f[n - 3] - 56.0 * f[n - 4]
        + 11.0 * f[n - 5])
        / (12.0 * d * d)
}

/// Centered five-point third derivative at interior node `i` (needs
/// `2 <= i <= n-3`): (f_{i+2} - 2f_{i+1} + 2f_{i-1} - f_{i-2}) / 2d^3.
pub fn third_centered(f: &[f64], i: usize, d: f64) -> f64 {
    (f[i + 2] - 2.0 * f[i + 1] + 2.0 * f[i - 1] - f[i - 2]) / (2.0 * d * d * d)
}

/// First-order one-sided third derivative at the right end (five nodes):
/// (5f_M - 18f_{M-1} + 24f_{M-2} - 14f_{M-3} + 3f_{M-4}) / 2d^3.
pub fn one_sided_third_right(f: &[f64], d: f64) -> f64 {
    let n = f.len();
    (5.0 * f[n - 1] - 18.0 * f[n - 2] + 24.0 * f[n - 3] - 14.0 * f[n - 4] + 3.0 * f[n - 5])
        / (2.0 * d * d * d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(g: impl Fn(f64) -> f64, n: usize, d: f64) -> Vec<f64> {
        (0..n).map(|i| g(i as f64 * d)).collect()
    }

    #[test]
    fn exact_on_cubics() {
        // every stencil above is at least first-order; on x^3 the ones with
        // cubic exactness must be exact to roundoff
        let d = 0.1;
        let f = sample(|x| x * x * x, 8, d);
        let x_end = 0.7_f64;
        assert!((one_sided_first_right_o3(&f, d) - 3.0 * x_end * x_end).abs() < 1e-12);
        assert!((one_sided_first_left_o3(&f, d) - 0.0).abs() < 1e-12);
        assert!((one_sided_second_right_o3(&f, d) - 6.0 * x_end).abs() < 1e-11);
        assert!((third_centered(&f, 3, d) - 6.0).abs() < 1e-10);
        assert!((one_sided_third_right(&f, d) - 6.0).abs() < 1e-10);
    }

    #[test]
    fn gradient_second_order_at_ends() {
        let d = 0.05;
        let f = sample(|x| x * x, 9, d);
        let g = gradient_uniform(&f, d);
        assert!((g[0] - 0.0).abs() < 1e-12);
        assert!((g[8] - 2.0 * 0.4).abs() < 1e-12);
        assert!((g[4] - 2.0 * 0.2).abs() < 1e-12);
    }
}
