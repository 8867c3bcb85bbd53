//! Disk automorphisms `m(z) = (z + a) / (1 + z conj(a))` and lazy
//! precomposition of surfaces, used to move the Schwarz bound from the
//! origin to an arbitrary point of the disk.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::series::PowerSeries;
use crate::surface::{MinimalSurface, Point3, Surface};
use crate::{check_disk, Error, Result};

/// Translation-type disk automorphism with parameter `|a| < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskMobius {
    a: Complex64,
}

impl DiskMobius {
    pub fn new(a: Complex64) -> Result<Self> {
        if a.norm() < 1.0 {
            Ok(Self { a })
        } else {
            Err(Error::MobiusParameter(a.norm()))
        }
    }

    pub fn parameter(&self) -> Complex64 {
        self.a
    }

    /// `(z + a) / (1 + z conj(a))`; the denominator cannot vanish on the
    /// closed disk when `|a| < 1`.
    pub fn apply(&self, z: Complex64) -> Complex64 {
        (z + self.a) / (1.0 + z * self.a.conj())
    }

    /// `m'(z) = (1 - |a|^2) / (1 + z conj(a))^2`.
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let den = 1.0 + z * self.a.conj();
        (1.0 - self.a.norm_sqr()) / (den * den)
    }

    pub fn inverse(&self) -> DiskMobius {
        DiskMobius { a: -self.a }
    }
}

/// `F` precomposed with a disk Mobius map, evaluated lazily: no
/// re-expansion into Taylor coefficients, every query composes through the
/// base surface. Satisfies `lambda_H(z) = lambda_F(m(z)) |m'(z)|`.
#[derive(Debug, Clone)]
pub struct DerivedSurface {
    base: Surface,
    map: DiskMobius,
}

impl DerivedSurface {
    pub fn new(base: Surface, map: DiskMobius) -> Self {
        Self { base, map }
    }

    pub fn base(&self) -> &Surface {
        &self.base
    }

    pub fn map(&self) -> &DiskMobius {
        &self.map
    }

    /// Re-expands the derived Weierstrass data
    /// `p_H = (p o m) m'`, `q_H = q o m`
    /// into polynomials by sampling on a circle of radius
    /// `rho = (1 + 1/|a|) / 2` and inverting the discrete Fourier sums.
    /// The truncation degree is chosen so the geometric tail
    /// `((1 + |a|) / 2)^N` drops below 1e-12. Intended for mesh export of
    /// derived surfaces; verification paths stay on the lazy evaluation.
    pub fn reexpand(&self) -> Surface {
        let a = self.map.a;
        if a.norm() == 0.0 {
            return self.base.clone();
        }
        let rho = 0.5 * (1.0 + 1.0 / a.norm());
        let ratio = 0.5 * (1.0 + a.norm());
        // The derived data has a pole of order up to deg(p) + 2 at
        // -1/conj(a), so the geometric tail carries a polynomial factor;
        // n^6 covers every catalog degree with slack.
        let mut n = 32usize;
        while ratio.powi(n as i32) * (n as f64).powi(6) >= 1e-13 {
            n += 8;
        }
        let p_h = taylor_from_circle(
            |z| self.base.p().eval(self.map.apply(z)) * self.map.derivative(z),
            rho,
            n,
        );
        let q_h = taylor_from_circle(|z| self.base.q().eval(self.map.apply(z)), rho, n);
        Surface::from_pq(p_h, q_h)
    }
}

impl MinimalSurface for DerivedSurface {
    fn lambda(&self, z: Complex64) -> f64 {
        self.base.lambda(self.map.apply(z)) * self.map.derivative(z).norm()
    }

    fn embed(&self, z: Complex64) -> Point3 {
        self.base.embed(self.map.apply(z))
    }
}

/// Recovers Taylor coefficients `c_0 .. c_{n-1}` of an analytic `f` from
/// `n` equispaced samples on the circle of radius `rho`.
pub fn taylor_from_circle(
    f: impl Fn(Complex64) -> Complex64,
    rho: f64,
    n: usize,
) -> PowerSeries {
    let samples: Vec<Complex64> = (0..n)
        .map(|j| f(Complex64::from_polar(rho, TAU * j as f64 / n as f64)))
        .collect();
    let coeffs = (0..n)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, s) in samples.iter().enumerate() {
                let phase = -TAU * (j * k % n) as f64 / n as f64;
                acc += s * Complex64::from_polar(1.0, phase);
            }
            acc / (n as f64 * rho.powi(k as i32))
        })
        .collect();
    PowerSeries::new(coeffs)
}

/// Builds the lazily evaluated surface `F o m`.
pub fn precompose(s: &Surface, m: DiskMobius) -> DerivedSurface {
    DerivedSurface::new(s.clone(), m)
}

/// `| lambda_H(0) - lambda_F(a) (1 - |a|^2) |` for `H = F o m_a`; the
/// identity `|H_x(0)| = |F_x(a)| (1 - |a|^2)` behind the proof's
/// recentering step.
pub fn pullback_identity_residual(s: &Surface, a: Complex64) -> Result<f64> {
    let m = DiskMobius::new(a)?;
    check_disk(a)?;
    let h = precompose(s, m);
    let lhs = h.lambda(Complex64::new(0.0, 0.0));
    let rhs = s.lambda(a) * (1.0 - a.norm_sqr());
    Ok((lhs - rhs).abs())
}
