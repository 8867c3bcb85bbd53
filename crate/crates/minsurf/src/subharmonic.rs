//! Numerical checks for the two analytic engines behind the bound:
//! the Riesz representation balance and the Laplacian identity for
//! `u = |h'| + |g'|`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::boundary::{integrate_periodic, QuadratureSpec};
use crate::surface::{PolarGrid, Surface};
use crate::{Error, Result};

/// Magnitude below which `h'` or `g'` counts as vanishing; `u` is not
/// differentiable across such zeros, so the 2-D quadrature excludes them.
pub const SINGULAR_TOL: f64 = 1e-8;

/// Default finite-difference step for the Laplacian stencil.
pub const DEFAULT_STEP: f64 = 1e-3;

/// Five-point stencil Laplacian `(f(z+h)+f(z-h)+f(z+ih)+f(z-ih)-4f(z))/h^2`.
/// The whole stencil must stay inside the open disk.
pub fn fd_laplacian(f: &dyn Fn(Complex64) -> f64, z: Complex64, step: f64) -> Result<f64> {
    if !(step > 0.0) {
        return Err(Error::InvalidStep(step));
    }
    if z.norm() + step >= 1.0 {
        return Err(Error::StencilOutsideDisk { z, step });
    }
    let h = Complex64::new(step, 0.0);
    let ih = Complex64::new(0.0, step);
    let sum = f(z + h) + f(z - h) + f(z + ih) + f(z - ih) - 4.0 * f(z);
    Ok(sum / (step * step))
}

/// The subharmonic field `u(z) = |h'(z)| + |g'(z)|` of a surface.
pub fn density_field(s: &Surface) -> impl Fn(Complex64) -> f64 + '_ {
    move |z| s.hprime().eval(z).norm() + s.gprime().eval(z).norm()
}

/// Residual of `Delta(|h'| + |g'|) = |h''|^2/|h'| + |g''|^2/|g'|`
/// (the gradient of `arg w'` has magnitude `|w''/w'|` for holomorphic `w`).
/// Identically-zero `h'` or `g'` contributes nothing; a nonzero series that
/// vanishes at `z` is a singular point of the identity.
pub fn laplacian_identity_residual(s: &Surface, z: Complex64, step: f64) -> Result<f64> {
    let closed = |w: &crate::series::PowerSeries| -> Result<f64> {
        if w.is_zero(0.0) {
            return Ok(0.0);
        }
        let wz = w.eval(z).norm();
        if wz < SINGULAR_TOL {
            return Err(Error::SingularPoint(z));
        }
        Ok(w.derivative().eval(z).norm_sqr() / wz)
    };
    let closed_form = closed(s.hprime())? + closed(s.gprime())?;
    let u = density_field(s);
    let fd = fd_laplacian(&u, z, step)?;
    Ok((fd - closed_form).abs())
}

/// Both sides of the Riesz representation identity at radius `r`, plus the
/// residual and how many quadrature cells were excluded as singular.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RieszReport {
    pub r: f64,
    /// `(1/2pi) int u(r e^{it}) dt - u(0)`
    pub circle_mean_minus_center: f64,
    /// `(1/2pi) int_{|z|<r} log(r/|z|) Delta u dm`
    pub weighted_mass: f64,
    pub residual: f64,
    pub excluded_points: usize,
}

/// Checks the Riesz balance
/// `(1/2pi) int_T u(rz)|dz| - u(0) = (1/2pi) int_{|z|<r} log(r/|z|) dmu`
/// with `dmu = Delta u dm` evaluated by the five-point stencil and a
/// midpoint rule in polar coordinates (`grid.n_r` rings, `grid.n_theta`
/// sectors over `|z| < r`; `grid.r_max` is unused here).
///
/// Cells where `h'` or `g'` vanish are excluded; their mass is approximated
/// by the Laplacian one ring outward at the same angle.
pub fn riesz_balance(s: &Surface, r: f64, grid: &PolarGrid, step: f64) -> Result<RieszReport> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::InvalidRadii);
    }
    if !(step > 0.0) || r + step >= 1.0 {
        return Err(Error::InvalidStep(step));
    }

    let u = density_field(s);

    let quad = QuadratureSpec::default();
    let circle_mean = integrate_periodic(&|t| u(Complex64::from_polar(r, t)), &quad)? / TAU;
    let lhs = circle_mean - u(Complex64::new(0.0, 0.0));

    let h_zero = s.hprime().is_zero(0.0);
    let g_zero = s.gprime().is_zero(0.0);
    let singular = |z: Complex64| -> bool {
        (!h_zero && s.hprime().eval(z).norm() < SINGULAR_TOL)
            || (!g_zero && s.gprime().eval(z).norm() < SINGULAR_TOL)
    };

    let d_rho = r / grid.n_r as f64;
    let d_theta = TAU / grid.n_theta as f64;
    let mut mass = 0.0;
    let mut excluded = 0usize;
    for i in 0..grid.n_r {
        let rho = (i as f64 + 0.5) * d_rho;
        let weight = (r / rho).ln() * rho * d_rho * d_theta;
        for j in 0..grid.n_theta {
            let theta = (j as f64 + 0.5) * d_theta;
            let zeta = Complex64::from_polar(rho, theta);
            let lap = if singular(zeta) {
                excluded += 1;
                let outward = Complex64::from_polar(rho + d_rho, theta);
                if outward.norm() + step < 1.0 && !singular(outward) {
                    fd_laplacian(&u, outward, step)?
                } else {
                    0.0
                }
            } else {
                fd_laplacian(&u, zeta, step)?
            };
            mass += weight * lap;
        }
    }
    let rhs = mass / TAU;

    Ok(RieszReport {
        r,
        circle_mean_minus_center: lhs,
        weighted_mass: rhs,
        residual: (lhs - rhs).abs(),
        excluded_points: excluded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::PowerSeries;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn enneper() -> Surface {
        Surface::from_pq(
            PowerSeries::from_real(&[1.0]),
            PowerSeries::from_real(&[0.0, 1.0]),
        )
    }

    fn planar() -> Surface {
        Surface::from_pq(
            PowerSeries::from_real(&[1.0]),
            PowerSeries::from_real(&[0.0]),
        )
    }

    #[test]
    fn fd_laplacian_examples() {
        let abs_sq = |z: Complex64| z.norm_sqr();
        let lap = fd_laplacian(&abs_sq, c(0.3, -0.2), 1e-3).unwrap();
        assert!((lap - 4.0).abs() < 1e-6);

        let re = |z: Complex64| z.re;
        let lap = fd_laplacian(&re, c(0.1, 0.4), 1e-3).unwrap();
        assert!(lap.abs() < 1e-8);

        let en = enneper();
        let u = density_field(&en);
        let lap = fd_laplacian(&u, c(0.5, 0.0), 1e-3).unwrap();
        assert!((lap - 4.0).abs() < 1e-6);
    }

    #[test]
    fn fd_laplacian_rejects_bad_stencils() {
        let f = |z: Complex64| z.norm_sqr();
        assert!(matches!(
            fd_laplacian(&f, c(0.999, 0.0), 1e-2),
            Err(Error::StencilOutsideDisk { .. })
        ));
        assert!(matches!(
            fd_laplacian(&f, c(0.0, 0.0), 0.0),
            Err(Error::InvalidStep(_))
        ));
    }

    #[test]
    fn laplacian_identity_enneper() {
        let res = laplacian_identity_residual(&enneper(), c(0.5, 0.0), 1e-3).unwrap();
        assert!(res < 1e-4, "residual {res}");
    }

    #[test]
    fn laplacian_identity_planar() {
        // g' is the zero series; both sides vanish.
        let res = laplacian_identity_residual(&planar(), c(0.3, 0.0), 1e-3).unwrap();
        assert!(res < 1e-8);
    }

    #[test]
    fn laplacian_identity_linear_hprime() {
        // h' = 1 + z, g' = 0: Delta|1+z| = 1/|1+z| = 1 at z = 0.
        let s = Surface::from_pq(
            PowerSeries::from_real(&[1.0, 1.0]),
            PowerSeries::from_real(&[0.0]),
        );
        let res = laplacian_identity_residual(&s, c(0.0, 0.0), 1e-3).unwrap();
        assert!(res < 1e-4, "residual {res}");
    }

    #[test]
    fn laplacian_identity_singular_point() {
        // h' = z vanishes at the origin.
        let s = Surface::from_pq(
            PowerSeries::from_real(&[0.0, 1.0]),
            PowerSeries::from_real(&[0.0]),
        );
        assert!(matches!(
            laplacian_identity_residual(&s, c(0.0, 0.0), 1e-3),
            Err(Error::SingularPoint(_))
        ));
    }

    #[test]
    fn riesz_balance_enneper() {
        let grid = PolarGrid::new(200, 256, 0.9).unwrap();
        let rep = riesz_balance(&enneper(), 0.5, &grid, 1e-3).unwrap();
        assert!((rep.circle_mean_minus_center - 0.25).abs() < 1e-6);
        assert!((rep.weighted_mass - 0.25).abs() < 1e-4);
        assert!(rep.residual < 1e-4);
        assert_eq!(rep.excluded_points, 0);

        let rep = riesz_balance(&enneper(), 0.9, &grid, 1e-3).unwrap();
        assert!((rep.circle_mean_minus_center - 0.81).abs() < 5e-4);
        assert!((rep.weighted_mass - 0.81).abs() < 5e-4);
    }

    #[test]
    fn riesz_balance_planar() {
        let grid = PolarGrid::new(100, 128, 0.9).unwrap();
        let rep = riesz_balance(&planar(), 0.6, &grid, 1e-3).unwrap();
        assert!(rep.circle_mean_minus_center.abs() < 1e-12);
        assert!(rep.weighted_mass.abs() < 1e-9);
    }

    #[test]
    fn riesz_balance_refinement_halves_residual() {
        let coarse = PolarGrid::new(200, 256, 0.9).unwrap();
        let fine = PolarGrid::new(400, 512, 0.9).unwrap();
        let rep_c = riesz_balance(&enneper(), 0.5, &coarse, 1e-3).unwrap();
        let rep_f = riesz_balance(&enneper(), 0.5, &fine, 5e-4).unwrap();
        assert!(
            rep_f.residual <= rep_c.residual / 2.0,
            "coarse {} fine {}",
            rep_c.residual,
            rep_f.residual
        );
    }

    #[test]
    fn riesz_balance_rejects_bad_inputs() {
        let grid = PolarGrid::new(10, 16, 0.9).unwrap();
        assert!(riesz_balance(&enneper(), 1.0, &grid, 1e-3).is_err());
        assert!(riesz_balance(&enneper(), 0.9999, &grid, 1e-3).is_err());
    }

    #[test]
    fn numerical_subharmonicity() {
        // FD Laplacian of u stays >= -1e-6 off the zero sets.
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let deg = rng.gen_range(0..=4usize);
            let coeffs = |rng: &mut ChaCha8Rng| {
                PowerSeries::new(
                    (0..=deg)
                        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                        .collect(),
                )
            };
            let s = Surface::from_pq(coeffs(&mut rng), coeffs(&mut rng));
            let u = density_field(&s);
            for _ in 0..30 {
                let z = Complex64::from_polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..TAU));
                if s.hprime().eval(z).norm() < 1e-3 || s.gprime().eval(z).norm() < 1e-3 {
                    continue;
                }
                let lap = fd_laplacian(&u, z, 1e-3).unwrap();
                assert!(lap >= -1e-6, "Delta u = {lap} at {z}");
            }
        }
    }

    #[test]
    fn affine_data_has_zero_laplacian() {
        let s = Surface::from_pq(
            PowerSeries::new(vec![c(1.2, -0.3)]),
            PowerSeries::new(vec![c(0.1, 0.5)]),
        );
        let u = density_field(&s);
        for &(re, im) in &[(0.0, 0.0), (0.4, 0.2), (-0.5, 0.3), (0.0, -0.7)] {
            let lap = fd_laplacian(&u, c(re, im), 1e-2).unwrap();
            assert!(lap.abs() < 1e-8, "Delta u = {lap}");
        }
    }
}
