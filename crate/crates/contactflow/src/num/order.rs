//! Observed-order estimation for refinement ladders with mesh halving.

/// Least-squares slope of `-log2(err)` against the level index. Errors are
/// expected to come from successive mesh halvings; level `k` has spacing
/// `2^-k` relative to the first.
pub fn lsq_order(errs: &[f64]) -> f64 {
    let n = errs.len();
    assert!(n >= 2, "order estimate needs at least 2 levels");
    let xs: Vec<f64> = (0..n).map(|i| i as f64).collect();
    let ys: Vec<f64> = errs.iter().map(|e| e.max(1e-300).log2()).collect();
    let xm = xs.iter().sum::<f64>() / n as f64;
    let ym = ys.iter().sum::<f64>() / n as f64;
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..n {
        num += (xs[i] - xm) * (ys[i] - ym);
        den += (xs[i] - xm) * (xs[i] - xm);
    }
    -num / den
}

/// Pairwise Richardson orders `log2(err_k / err_{k+1})`.
pub fn stepwise_orders(errs: &[f64]) -> Vec<f64> {
    errs.windows(2)
        .map(|w| (w[0] / w[1]).max(1e-300).log2())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_second_order_ladder() {
        let errs = [4.0e-2, 1.0e-2, 2.5e-3];
        assert!((lsq_order(&errs) - 2.0).abs() < 1e-12);
        let st = stepwise_orders(&errs);
        assert!((st[0] - 2.0).abs() < 1e-12 && (st[1] - 2.0).abs() < 1e-12);
    }
}
