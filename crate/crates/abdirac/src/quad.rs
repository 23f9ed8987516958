//! Quadrature rules used by the spinor and wave-packet modules.
//!
//! All integrands here are smooth: trigonometric polynomials in the angle,
//! products of sin/cos in the longitudinal coordinate, and Gaussians in
//! momentum. A uniform trapezoid on the periodic angle is spectrally exact,
//! Gauss-Legendre handles the longitudinal factor, and composite Simpson
//! covers uniform momentum grids.

use crate::error::{Error, Result};

/// Nodes of the uniform periodic trapezoid rule on [0, period); the weight
/// is the constant `period / n`.
pub fn periodic_nodes(n: usize, period: f64) -> Vec<f64> {
    (0..n).map(|i| period * i as f64 / n as f64).collect()
}

/// Integrates a periodic function over one period with `n` uniform nodes.
pub fn trapezoid_periodic<F: Fn(f64) -> f64>(n: usize, period: f64, f: F) -> f64 {
    let w = period / n as f64;
    periodic_nodes(n, period).iter().map(|&x| f(x)).sum::<f64>() * w
}

/// Gauss-Legendre nodes and weights on [-1, 1].
///
/// Newton iteration on the Legendre recurrence; nodes converge to machine
/// precision in a handful of steps for the orders used here (<= 256).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss-Legendre order must be at least 1");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess for the i-th positive root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n and its derivative by the Bonnet recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let pk = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = pk;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Gauss-Legendre nodes and weights mapped to [a, b].
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let (xs, ws) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    (
        xs.iter().map(|x| mid + half * x).collect(),
        ws.iter().map(|w| half * w).collect(),
    )
}

/// Integrates f over [a, b] with an n-point Gauss-Legendre rule.
pub fn integrate_gl<F: Fn(f64) -> f64>(n: usize, a: f64, b: f64, f: F) -> f64 {
    let (xs, ws) = gauss_legendre_on(n, a, b);
    xs.iter().zip(ws.iter()).map(|(&x, &w)| w * f(x)).sum()
}

/// Composite Simpson weights for a uniform grid of `n` nodes spaced by `h`.
///
/// `n` must be odd and at least 3.
pub fn simpson_weights(n: usize, h: f64) -> Result<Vec<f64>> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::usage(format!(
            "composite Simpson needs an odd node count >= 3, got {n}"
        )));
    }
    let mut w = vec![0.0; n];
    w[0] = h / 3.0;
    w[n - 1] = h / 3.0;
    for (i, wi) in w.iter_mut().enumerate().take(n - 1).skip(1) {
        *wi = if i % 2 == 1 {
            4.0 * h / 3.0
        } else {
            2.0 * h / 3.0
        };
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_integrates_polynomials_exactly() {
        // 8-point rule is exact through degree 15.
        let val = integrate_gl(8, 0.0, 1.0, |x| x.powi(15));
        assert!((val - 1.0 / 16.0).abs() < 1e-14);
        let val = integrate_gl(64, -2.0, 3.0, |x| 4.0 * x * x * x - x);
        let exact = (3.0f64.powi(4) - (-2.0f64).powi(4)) - 0.5 * (9.0 - 4.0);
        assert!((val - exact).abs() < 1e-12 * exact.abs());
    }

    #[test]
    fn gl_handles_oscillatory_smooth_integrand() {
        // int_0^1 sin(3 pi z) sin(3 pi z) dz = 1/2
        let val = integrate_gl(64, 0.0, 1.0, |z| {
            (3.0 * std::f64::consts::PI * z).sin().powi(2)
        });
        assert!((val - 0.5).abs() < 1e-14);
    }

    #[test]
    fn trapezoid_is_spectrally_exact_on_trig() {
        let tau = 2.0 * std::f64::consts::PI;
        // int_0^{2pi} cos(7 x)^2 dx = pi with any n > 14
        let val = trapezoid_periodic(256, tau, |x| (7.0 * x).cos().powi(2));
        assert!((val - std::f64::consts::PI).abs() < 1e-13);
        // Nonzero mean survives exactly.
        let val = trapezoid_periodic(64, tau, |x| 1.5 + (3.0 * x).sin());
        assert!((val - 1.5 * tau).abs() < 1e-13);
    }

    #[test]
    fn simpson_matches_gaussian_integral() {
        let n = 1025;
        let (lo, hi) = (-6.0, 6.0);
        let h = (hi - lo) / (n - 1) as f64;
        let w = simpson_weights(n, h).unwrap();
        let total: f64 = (0..n)
            .map(|i| {
                let x = lo + i as f64 * h;
                w[i] * (-x * x).exp()
            })
            .sum();
        assert!((total - std::f64::consts::PI.sqrt()).abs() < 1e-12);
        assert!(simpson_weights(4, 0.1).is_err());
    }

    #[test]
    fn gl_nodes_symmetric_and_weights_positive() {
        for n in [1, 2, 5, 64, 101] {
            let (xs, ws) = gauss_legendre(n);
            assert_eq!(xs.len(), n);
            let wsum: f64 = ws.iter().sum();
            assert!((wsum - 2.0).abs() < 1e-13);
            for i in 0..n {
                assert!(ws[i] > 0.0);
                assert!((xs[i] + xs[n - 1 - i]).abs() < 1e-14);
            }
        }
    }
}
