//! Triangulated OBJ export of a surface patch over a polar grid.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use std::io::{self, Write};

use crate::surface::MinimalSurface;
use crate::{Error, Result};

/// Polar mesh resolution: `n_r` rings around a center vertex, `n_theta`
/// angular samples per ring, outer radius `r_max` (boundary allowed).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeshSpec {
    pub n_r: usize,
    pub n_theta: usize,
    pub r_max: f64,
}

impl MeshSpec {
    pub fn new(n_r: usize, n_theta: usize, r_max: f64) -> Result<Self> {
        if n_r < 2 || n_theta < 3 {
            return Err(Error::InvalidGrid(
                "mesh needs n_r >= 2 and n_theta >= 3".into(),
            ));
        }
        if !(r_max > 0.0 && r_max <= 1.0) {
            return Err(Error::InvalidGrid(format!(
                "mesh r_max must lie in (0, 1], got {r_max}"
            )));
        }
        Ok(Self { n_r, n_theta, r_max })
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.n_r * self.n_theta
    }

    pub fn triangle_count(&self) -> usize {
        self.n_theta + 2 * self.n_theta * (self.n_r - 1)
    }
}

/// Writes an ASCII OBJ mesh of `F` over the grid: one center vertex, then
/// ring-major vertices, center fan first, then two triangles per ring quad.
/// Faces are counterclockwise seen from +t; output is deterministic.
pub fn write_obj<S: MinimalSurface, W: Write>(
    surface: &S,
    spec: &MeshSpec,
    out: &mut W,
) -> io::Result<()> {
    let center = surface.embed(Complex64::new(0.0, 0.0));
    writeln!(out, "v {} {} {}", center.u, center.v, center.t)?;
    for j in 1..=spec.n_r {
        let r = spec.r_max * j as f64 / spec.n_r as f64;
        for k in 0..spec.n_theta {
            let theta = TAU * k as f64 / spec.n_theta as f64;
            let p = surface.embed(Complex64::from_polar(r, theta));
            writeln!(out, "v {} {} {}", p.u, p.v, p.t)?;
        }
    }

    let nt = spec.n_theta;
    // 1-based OBJ index of ring vertex (j, k), rings from 1.
    let idx = |j: usize, k: usize| 2 + (j - 1) * nt + (k % nt);

    for k in 0..nt {
        writeln!(out, "f 1 {} {}", idx(1, k), idx(1, k + 1))?;
    }
    for j in 1..spec.n_r {
        for k in 0..nt {
            let a = idx(j, k);
            let b = idx(j, k + 1);
            let c = idx(j + 1, k + 1);
            let d = idx(j + 1, k);
            writeln!(out, "f {a} {b} {c}")?;
            writeln!(out, "f {a} {c} {d}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::PowerSeries;
    use crate::surface::Surface;

    fn enneper() -> Surface {
        Surface::from_pq(
            PowerSeries::from_real(&[1.0]),
            PowerSeries::from_real(&[0.0, 1.0]),
        )
    }

    #[test]
    fn spec_validation() {
        assert!(MeshSpec::new(1, 8, 0.5).is_err());
        assert!(MeshSpec::new(4, 2, 0.5).is_err());
        assert!(MeshSpec::new(4, 8, 1.5).is_err());
        assert!(MeshSpec::new(2, 3, 1.0).is_ok());
    }

    #[test]
    fn counts_match_contract() {
        let spec = MeshSpec::new(2, 3, 1.0).unwrap();
        assert_eq!(spec.vertex_count(), 7);
        assert_eq!(spec.triangle_count(), 9);

        let mut buf = Vec::new();
        write_obj(&enneper(), &spec, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let vs = text.lines().filter(|l| l.starts_with("v ")).count();
        let fs = text.lines().filter(|l| l.starts_with("f ")).count();
        assert_eq!(vs, 7);
        assert_eq!(fs, 9);
    }

    #[test]
    fn output_is_deterministic() {
        let spec = MeshSpec::new(5, 9, 0.9).unwrap();
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_obj(&enneper(), &spec, &mut a).unwrap();
        write_obj(&enneper(), &spec, &mut b).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn face_indices_are_in_range() {
        let spec = MeshSpec::new(3, 4, 0.8).unwrap();
        let mut buf = Vec::new();
        write_obj(&enneper(), &spec, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let nv = spec.vertex_count();
        for line in text.lines().filter(|l| l.starts_with("f ")) {
            for tok in line.split_whitespace().skip(1) {
                let i: usize = tok.parse().unwrap();
                assert!(i >= 1 && i <= nv, "index {i} out of range in {line}");
            }
        }
    }
}
