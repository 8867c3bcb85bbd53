//! Numerical toolkit for Weierstrass-Enneper minimal surface patches over
//! the unit disk.
//!
//! A surface is built from polynomial Weierstrass data `(p, q)`; the crate
//! evaluates the embedding, its conformal density, and certifies the sharp
//! Schwarz-type bound `|F_x| <= R / (1 - |z|^2)` where `2*pi*R` is the
//! boundary length. The supporting machinery (circle quadrature, Mobius
//! precomposition, Riesz-measure balance, Laplacian identity, affine
//! equality case) is exposed so every step of the certification can be
//! checked independently.

pub mod boundary;
pub mod catalog;
pub mod equality;
pub mod mesh;
pub mod mobius;
pub mod series;
pub mod subharmonic;
pub mod surface;

pub(crate) mod serde_util;

use num_complex::Complex64;
use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("point {0} lies outside the closed unit disk")]
    OutsideDisk(Complex64),
    #[error("Mobius parameter must satisfy |a| < 1, got |a| = {0}")]
    MobiusParameter(f64),
    #[error(
        "quadrature did not converge within {max_panels} panels \
         (last estimates {previous:e}, {latest:e})"
    )]
    QuadratureNonConvergence {
        max_panels: usize,
        previous: f64,
        latest: f64,
    },
    #[error("finite-difference stencil leaves the unit disk at {z} with step {step}")]
    StencilOutsideDisk { z: Complex64, step: f64 },
    #[error("h' or g' vanishes at {0}; the Laplacian identity is singular there")]
    SingularPoint(Complex64),
    #[error("radii must be strictly increasing and contained in (0, 1]")]
    InvalidRadii,
    #[error("step must be positive and fit inside the disk, got {0}")]
    InvalidStep(f64),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("affine coefficients are not conformal (residuals {0:e}, {1:e})")]
    NonConformal(f64, f64),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Slack admitted when checking `|z| <= 1` so that boundary points produced
/// by rounded trigonometry are not rejected.
pub(crate) const DISK_SLACK: f64 = 1e-12;

pub(crate) fn check_disk(z: Complex64) -> Result<()> {
    if z.norm_sqr() <= 1.0 + DISK_SLACK {
        Ok(())
    } else {
        Err(Error::OutsideDisk(z))
    }
}
