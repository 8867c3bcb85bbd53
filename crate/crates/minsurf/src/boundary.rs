//! Arc-length quadrature on circles, mean-ratio growth, and certification
//! of the sharp bound `lambda(z) (1 - |z|^2) <= R` with `R = l_1 / (2 pi)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::surface::{MinimalSurface, PolarGrid};
use crate::{Error, Result};

/// Tolerance used to declare `sup == R` in a [`SchwarzReport`].
pub const DEFAULT_EQ_TOL: f64 = 1e-6;

/// Adaptive composite Gauss-Legendre settings. Panels double until two
/// successive estimates agree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_panels: usize,
    pub nodes_per_panel: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_panels: 1 << 16,
            nodes_per_panel: 16,
        }
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on
/// the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "need at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and its derivative.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { x } else { p1 };
            let pn_prev = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (pn_prev - x * pn) / (1.0 - x * x);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn composite(f: &dyn Fn(f64) -> f64, a: f64, b: f64, panels: usize, nodes: &[f64], weights: &[f64]) -> f64 {
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        let half = 0.5 * h;
        let mut acc = 0.0;
        for (x, w) in nodes.iter().zip(weights) {
            acc += w * f(mid + half * x);
        }
        total += half * acc;
    }
    total
}

/// Integrates `f` over `[0, 2 pi]`, doubling panels until convergence.
pub fn integrate_periodic(f: &dyn Fn(f64) -> f64, quad: &QuadratureSpec) -> Result<f64> {
    let (nodes, weights) = gauss_legendre(quad.nodes_per_panel);
    let mut panels = 1;
    let mut prev = composite(f, 0.0, TAU, panels, &nodes, &weights);
    loop {
        panels *= 2;
        if panels > quad.max_panels {
            let latest = composite(f, 0.0, TAU, quad.max_panels.max(1), &nodes, &weights);
            return Err(Error::QuadratureNonConvergence {
                max_panels: quad.max_panels,
                previous: prev,
                latest,
            });
        }
        let cur = composite(f, 0.0, TAU, panels, &nodes, &weights);
        let diff = (cur - prev).abs();
        if diff < quad.abs_tol || diff < quad.rel_tol * (1.0 + cur.abs()) {
            return Ok(cur);
        }
        prev = cur;
    }
}

/// Arc length of the image circle `F(r T)`:
/// `l_r = int_0^{2 pi} lambda(r e^{it}) r dt`.
pub fn circle_length<S: MinimalSurface>(s: &S, r: f64, quad: &QuadratureSpec) -> Result<f64> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::InvalidRadii);
    }
    integrate_periodic(&|t| s.lambda(Complex64::from_polar(r, t)) * r, quad)
}

/// Mean ratio `l_r / (2 pi r)` (the circle mean of `lambda`) at the given
/// strictly increasing radii in `(0, 1]`; nondecreasing for subharmonic
/// `lambda`.
pub fn mean_ratio_profile<S: MinimalSurface>(
    s: &S,
    radii: &[f64],
    quad: &QuadratureSpec,
) -> Result<Vec<(f64, f64)>> {
    if radii.is_empty()
        || radii.windows(2).any(|w| w[0] >= w[1])
        || radii.iter().any(|&r| !(r > 0.0 && r <= 1.0))
    {
        return Err(Error::InvalidRadii);
    }
    radii
        .iter()
        .map(|&r| Ok((r, circle_length(s, r, quad)? / (TAU * r))))
        .collect()
}

/// Verification record for the bound `lambda(z)(1 - |z|^2) <= R`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchwarzReport {
    /// `R = l_1 / (2 pi)`, always computed by quadrature on `|z| = 1`.
    #[serde(rename = "R")]
    pub r_boundary: f64,
    /// `max lambda(z)(1 - |z|^2)` over the grid plus local polish.
    pub sup_value: f64,
    #[serde(with = "crate::serde_util")]
    pub argmax: Complex64,
    /// `sup_value / R`, or 0 for degenerate data with `R = 0`.
    pub ratio: f64,
    pub holds: bool,
    pub equality_within_tol: bool,
}

fn golden_max(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > 1e-12 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Runs [`schwarz_report_with`] at the default equality tolerance.
pub fn schwarz_report<S: MinimalSurface>(
    s: &S,
    grid: &PolarGrid,
    quad: &QuadratureSpec,
) -> Result<SchwarzReport> {
    schwarz_report_with(s, grid, quad, DEFAULT_EQ_TOL)
}

/// Certifies the sharp bound: computes `R`, sweeps the grid for the
/// supremum of `lambda(z)(1 - |z|^2)`, polishes the best sample along its
/// ray and angle by golden section, and compares.
pub fn schwarz_report_with<S: MinimalSurface>(
    s: &S,
    grid: &PolarGrid,
    quad: &QuadratureSpec,
    eq_tol: f64,
) -> Result<SchwarzReport> {
    let r_boundary = circle_length(s, 1.0, quad)? / TAU;

    let objective = |z: Complex64| s.lambda(z) * (1.0 - z.norm_sqr());
    let obj_polar = |r: f64, theta: f64| objective(Complex64::from_polar(r, theta));

    // Grid sweep; ties go to the sample with smallest |z|.
    let mut best_val = f64::NEG_INFINITY;
    let mut best_r = 0.0;
    let mut best_theta = 0.0;
    for r in grid.radii() {
        for k in 0..grid.n_theta {
            let theta = TAU * k as f64 / grid.n_theta as f64;
            let v = obj_polar(r, theta);
            let tol = 1e-14 * (1.0 + v.abs());
            if v > best_val + tol || (v >= best_val - tol && r < best_r) {
                best_val = v;
                best_r = r;
                best_theta = theta;
            }
        }
    }

    // Local polish: radius, then angle, then radius again.
    let dr = if grid.n_r > 1 {
        grid.r_max / (grid.n_r - 1) as f64
    } else {
        grid.r_max
    };
    let dtheta = TAU / grid.n_theta as f64;
    let (r1, _) = golden_max(
        &|r| obj_polar(r, best_theta),
        (best_r - dr).max(0.0),
        (best_r + dr).min(grid.r_max),
    );
    let (theta1, _) = golden_max(&|t| obj_polar(r1, t), best_theta - dtheta, best_theta + dtheta);
    let (r2, v2) = golden_max(
        &|r| obj_polar(r, theta1),
        (r1 - dr).max(0.0),
        (r1 + dr).min(grid.r_max),
    );

    let (sup_value, argmax) = if v2 > best_val {
        (v2, Complex64::from_polar(r2, theta1))
    } else {
        (best_val, Complex64::from_polar(best_r, best_theta))
    };

    let ratio = if r_boundary > 0.0 {
        sup_value / r_boundary
    } else {
        0.0
    };
    Ok(SchwarzReport {
        r_boundary,
        sup_value,
        argmax,
        ratio,
        holds: sup_value <= r_boundary * (1.0 + quad.rel_tol),
        equality_within_tol: (sup_value - r_boundary).abs() <= r_boundary * eq_tol,
    })
}
