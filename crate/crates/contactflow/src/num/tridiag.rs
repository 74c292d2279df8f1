//! Thomas solver plus partial sweeps for systems that carry one wide
//! (four-entry) boundary row: the wide row is eliminated through the sweep
//! coefficients instead of widening the band.

/// A tridiagonal system `lo[i] x[i-1] + di[i] x[i] + up[i] x[i+1] = rhs[i]`.
///
/// Rows default to the identity so boundary rows can be overwritten
/// selectively.
#[derive(Debug, Clone)]
pub struct TriDiag {
    pub lo: Vec<f64>,
    pub di: Vec<f64>,
    pub up: Vec<f64>,
    pub rhs: Vec<f64>,
}

impl TriDiag {
    pub fn identity(n: usize) -> Self {
        TriDiag {
            lo: vec![0.0; n],
            di: vec![1.0; n],
            up: vec![0.0; n],
            rhs: vec![0.0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.di.len()
    }

    pub fn is_empty(&self) -> bool {
        self.di.is_empty()
    }

    /// Thomas elimination; requires the usual (diagonally dominant) pivots.
    pub fn solve(&self) -> Vec<f64> {
        let (cp, dp) = self.forward_sweep();
        let n = self.len();
        let mut x = vec![0.0; n];
        x[n - 1] = dp[n - 1];
        for i in (0..n - 1).rev() {
            x[i] = dp[i] - cp[i] * x[i + 1];
        }
        x
    }

    /// Forward elimination only. Returns `(cp, dp)` with
    /// `x[i] = dp[i] - cp[i] * x[i+1]` (and `x[n-1] = dp[n-1]` when
    /// `up[n-1] = 0`). Lets a caller substitute a wide final row before
    /// back-substituting.
    pub fn forward_sweep(&self) -> (Vec<f64>, Vec<f64>) {
        let n = self.len();
        let mut cp = vec![0.0; n];
        let mut dp = vec![0.0; n];
        cp[0] = self.up[0] / self.di[0];
        dp[0] = self.rhs[0] / self.di[0];
        for i in 1..n {
            let m = self.di[i] - self.lo[i] * cp[i - 1];
            cp[i] = self.up[i] / m;
            dp[i] = (self.rhs[i] - self.lo[i] * dp[i - 1]) / m;
        }
        (cp, dp)
    }

    /// Reverse elimination (from the last row down). Returns `(cp, dp)` with
    /// `x[i] = dp[i] - cp[i] * x[i-1]`; row 0 is not eliminated. Lets a
    /// caller substitute a wide FIRST row before forward-substituting.
    pub fn reverse_sweep(&self) -> (Vec<f64>, Vec<f64>) {
        let n = self.len();
        let mut cp = vec![0.0; n];
        let mut dp = vec![0.0; n];
        cp[n - 1] = self.lo[n - 1] / self.di[n - 1];
        dp[n - 1] = self.rhs[n - 1] / self.di[n - 1];
        for i in (1..n - 1).rev() {
            let m = self.di[i] - self.up[i] * cp[i + 1];
            cp[i] = self.lo[i] / m;
            dp[i] = (self.rhs[i] - self.up[i] * dp[i + 1]) / m;
        }
        (cp, dp)
    }
}

/// Back-substitute a forward sweep given the trailing value `x_last`;
/// `cp, dp` must cover rows `0..=k` and `x_last` is `x[k+1]`.
pub fn backsub_from_last(cp: &[f64], dp: &[f64], x_last: f64) -> Vec<f64> {
    let n = dp.len();
    let mut x = vec![0.0; n + 1];
    x[n] = x_last;
    for i in (0..n).rev() {
        x[i] = dp[i] - cp[i] * x[i + 1];
    }
    x
}

/// Forward-substitute a reverse sweep given the leading value `x_first`:
/// returns the full vector with `x[0] = x_first`,
/// `x[i] = dp[i] - cp[i] * x[i-1]` for `i = 1..n`.
pub fn backsub_from_first(cp: &[f64], dp: &[f64], x_first: f64) -> Vec<f64> {
    let n = dp.len();
    let mut x = vec![0.0; n];
    x[0] = x_first;
    for i in 1..n {
        x[i] = dp[i] - cp[i] * x[i - 1];
    }
    x
}

/// Advection weights for a semi-implicit row with diffusion number `a` and
/// transport coefficient `c`: centered where the M-matrix property survives
/// (`a >= |c| dt / (2 d)`), first-order upwind otherwise.
///
/// Returns `(cp, cm)` entering `lo = -a + cm`, `di = 1 + 2a + cp - cm`,
/// `up = -a - cp`.
pub fn hybrid_weights(c: f64, a: f64, dt: f64, d: f64) -> (f64, f64) {
    if a >= c.abs() * dt / (2.0 * d) {
        let half = c * dt / (2.0 * d);
        (half, half)
    } else {
        (c.max(0.0) * dt / d, c.min(0.0) * dt / d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thomas_matches_dense_solve() {
        let n = 9;
        let mut sys = TriDiag::identity(n);
        for i in 0..n {
            sys.di[i] = 4.0 + i as f64 * 0.1;
            if i > 0 {
                sys.lo[i] = -1.0 - 0.05 * i as f64;
            }
            if i + 1 < n {
                sys.up[i] = -1.3 + 0.02 * i as f64;
            }
            sys.rhs[i] = (i as f64).sin() + 0.5;
        }
        let x = sys.solve();
        // residual check row by row
        for i in 0..n {
            let mut r = sys.di[i] * x[i] - sys.rhs[i];
            if i > 0 {
                r += sys.lo[i] * x[i - 1];
            }
            if i + 1 < n {
                r += sys.up[i] * x[i + 1];
            }
            assert!(r.abs() < 1e-12, "row {i} residual {r}");
        }
    }

    #[test]
    fn reverse_sweep_reproduces_solution() {
        let n = 7;
        let mut sys = TriDiag::identity(n);
        for i in 0..n {
            sys.di[i] = 3.0;
            if i > 0 {
                sys.lo[i] = -0.7;
            }
            if i + 1 < n {
                sys.up[i] = -0.9;
            }
            sys.rhs[i] = i as f64;
        }
        let x_ref = sys.solve();
        let (cp, dp) = sys.reverse_sweep();
        // from the known x[0], forward substitution must reproduce the rest
        let x = backsub_from_first(&cp, &dp, x_ref[0]);
        for i in 0..n {
            assert!((x[i] - x_ref[i]).abs() < 1e-12);
        }
    }
}
