//! Weierstrass-Enneper surfaces over the unit disk.
//!
//! A surface is generated by polynomial data `(p, q)`: `h' = p`,
//! `g' = p q^2`, and
//! `phi1 = h' + g'`, `phi2 = -i (h' - g')`, `phi3 = 2 i p q`.
//! The embedding is `F(z) = (Re PHI1, Re PHI2, Re PHI3)(z)` with the
//! antiderivatives `PHI_k` vanishing at the origin, and the conformal
//! density is `lambda = |h'| + |g'| = |p| (1 + |q|^2)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::series::PowerSeries;
use crate::{check_disk, Error, Result};

/// Point of the embedded surface in `R^3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3 {
    pub u: f64,
    pub v: f64,
    pub t: f64,
}

impl Point3 {
    pub fn new(u: f64, v: f64, t: f64) -> Self {
        Self { u, v, t }
    }

    pub fn dot(&self, other: &Point3) -> f64 {
        self.u * other.u + self.v * other.v + self.t * other.t
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn sub(&self, other: &Point3) -> Point3 {
        Point3::new(self.u - other.u, self.v - other.v, self.t - other.t)
    }
}

/// Polar sampling grid for disk sweeps. Radii run from 0 to `r_max`
/// inclusive; `r_max < 1` strictly since the bound degenerates at `|z| = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarGrid {
    pub n_r: usize,
    pub n_theta: usize,
    pub r_max: f64,
}

impl PolarGrid {
    pub fn new(n_r: usize, n_theta: usize, r_max: f64) -> Result<Self> {
        if n_r == 0 || n_theta == 0 {
            return Err(Error::InvalidGrid("n_r and n_theta must be positive".into()));
        }
        if !(r_max > 0.0 && r_max < 1.0) {
            return Err(Error::InvalidGrid(format!(
                "r_max must lie in (0, 1), got {r_max}"
            )));
        }
        Ok(Self { n_r, n_theta, r_max })
    }

    pub fn radii(&self) -> impl Iterator<Item = f64> + '_ {
        let n = self.n_r;
        let r_max = self.r_max;
        (0..n).map(move |j| {
            if n == 1 {
                r_max
            } else {
                r_max * j as f64 / (n - 1) as f64
            }
        })
    }

    /// Grid points `r_j * exp(i theta_k)`.
    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        let n_theta = self.n_theta;
        self.radii().flat_map(move |r| {
            (0..n_theta).map(move |k| {
                let theta = std::f64::consts::TAU * k as f64 / n_theta as f64;
                Complex64::from_polar(r, theta)
            })
        })
    }
}

/// Worst-case isothermality residuals over a grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsothermalReport {
    /// max of | |F_x| - |F_y| |
    pub max_norm_gap: f64,
    /// max of | <F_x, F_y> |
    pub max_dot: f64,
    /// max of | |F_x| - lambda |
    pub max_lambda_gap: f64,
}

/// Common evaluation interface shared by [`Surface`] and Mobius-derived
/// surfaces. Callers guarantee `|z| <= 1`.
pub trait MinimalSurface {
    /// Conformal density `lambda(z) = |F_x(z)|`.
    fn lambda(&self, z: Complex64) -> f64;
    /// Embedding point `F(z)`.
    fn embed(&self, z: Complex64) -> Point3;
}

/// Weierstrass data plus every derived series, precomputed at construction.
#[derive(Debug, Clone)]
pub struct Surface {
    p: PowerSeries,
    q: PowerSeries,
    hprime: PowerSeries,
    gprime: PowerSeries,
    phi1: PowerSeries,
    phi2: PowerSeries,
    phi3: PowerSeries,
    big_phi1: PowerSeries,
    big_phi2: PowerSeries,
    big_phi3: PowerSeries,
}

impl Surface {
    pub fn from_pq(p: PowerSeries, q: PowerSeries) -> Self {
        let hprime = p.clone();
        let q_sq = q.multiply(&q);
        let gprime = p.multiply(&q_sq);
        let phi1 = hprime.add(&gprime);
        let phi2 = hprime.sub(&gprime).scale(Complex64::new(0.0, -1.0));
        let phi3 = p.multiply(&q).scale(Complex64::new(0.0, 2.0));
        let big_phi1 = phi1.antiderivative();
        let big_phi2 = phi2.antiderivative();
        let big_phi3 = phi3.antiderivative();
        Self {
            p,
            q,
            hprime,
            gprime,
            phi1,
            phi2,
            phi3,
            big_phi1,
            big_phi2,
            big_phi3,
        }
    }

    pub fn p(&self) -> &PowerSeries {
        &self.p
    }

    pub fn q(&self) -> &PowerSeries {
        &self.q
    }

    pub fn hprime(&self) -> &PowerSeries {
        &self.hprime
    }

    pub fn gprime(&self) -> &PowerSeries {
        &self.gprime
    }

    pub fn phi1(&self) -> &PowerSeries {
        &self.phi1
    }

    pub fn phi2(&self) -> &PowerSeries {
        &self.phi2
    }

    pub fn phi3(&self) -> &PowerSeries {
        &self.phi3
    }

    /// `F(z)` for `|z| <= 1`; the antiderivatives vanish at 0, so `F(0) = 0`.
    pub fn position(&self, z: Complex64) -> Result<Point3> {
        check_disk(z)?;
        Ok(self.embed(z))
    }

    /// `lambda(z) = |p(z)| (1 + |q(z)|^2)` for `|z| <= 1`.
    pub fn conformal_density(&self, z: Complex64) -> Result<f64> {
        check_disk(z)?;
        Ok(self.lambda(z))
    }

    /// Tangent vectors `F_x = (Re phi_k)` and `F_y = (-Im phi_k)`.
    pub fn tangents(&self, z: Complex64) -> Result<(Point3, Point3)> {
        check_disk(z)?;
        let w1 = self.phi1.eval(z);
        let w2 = self.phi2.eval(z);
        let w3 = self.phi3.eval(z);
        let fx = Point3::new(w1.re, w2.re, w3.re);
        let fy = Point3::new(-w1.im, -w2.im, -w3.im);
        Ok((fx, fy))
    }

    /// Maxima over the grid of the three isothermality residuals.
    pub fn isothermal_report(&self, grid: &PolarGrid) -> IsothermalReport {
        let mut max_norm_gap: f64 = 0.0;
        let mut max_dot: f64 = 0.0;
        let mut max_lambda_gap: f64 = 0.0;
        for z in grid.points() {
            let (fx, fy) = self.tangents(z).expect("grid point inside disk");
            let lam = self.lambda(z);
            max_norm_gap = max_norm_gap.max((fx.norm() - fy.norm()).abs());
            max_dot = max_dot.max(fx.dot(&fy).abs());
            max_lambda_gap = max_lambda_gap.max((fx.norm() - lam).abs());
        }
        IsothermalReport {
            max_norm_gap,
            max_dot,
            max_lambda_gap,
        }
    }

    /// The series `phi1^2 + phi2^2 + phi3^2`, identically zero for genuine
    /// Weierstrass data (equivalent to `phi3^2 = -4 h' g'`).
    pub fn sum_of_squares_residual(&self) -> PowerSeries {
        let s1 = self.phi1.multiply(&self.phi1);
        let s2 = self.phi2.multiply(&self.phi2);
        let s3 = self.phi3.multiply(&self.phi3);
        s1.add(&s2).add(&s3)
    }

    /// True when `p` and `q` have no coefficient of index >= 1 above `tol`.
    pub fn is_affine(&self, tol: f64) -> bool {
        self.p.max_coeff_from(1) <= tol && self.q.max_coeff_from(1) <= tol
    }

    pub fn to_data(&self, name: Option<String>) -> SurfaceData {
        SurfaceData {
            name,
            p: self.p.clone(),
            q: self.q.clone(),
        }
    }
}

impl MinimalSurface for Surface {
    fn lambda(&self, z: Complex64) -> f64 {
        self.p.eval(z).norm() * (1.0 + self.q.eval(z).norm_sqr())
    }

    fn embed(&self, z: Complex64) -> Point3 {
        Point3::new(
            self.big_phi1.eval(z).re,
            self.big_phi2.eval(z).re,
            self.big_phi3.eval(z).re,
        )
    }
}

/// Serializable surface description: `{"p": [[re,im],...], "q": ..., "name"?}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub p: PowerSeries,
    pub q: PowerSeries,
}

impl SurfaceData {
    pub fn build(&self) -> Surface {
        Surface::from_pq(self.p.clone(), self.q.clone())
    }
}
