//! Built-in surface catalog used by the CLI and as oracle fixtures.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::series::PowerSeries;
use crate::surface::{Surface, SurfaceData};

/// Closed-form reference values attached to a catalog entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedForms {
    /// Exact boundary-length constant `R = l_1 / (2 pi)`.
    #[serde(rename = "R")]
    pub r_boundary: f64,
    /// Human-readable density formula.
    pub lambda: String,
    /// Human-readable circle-length formula `l_r`.
    pub circle_length: String,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub surface: Surface,
    pub closed_forms: Option<ClosedForms>,
}

/// The built-in surfaces: Enneper, the planar identity, a tilted affine
/// disk, and a non-affine polynomial demo.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "enneper",
            surface: Surface::from_pq(
                PowerSeries::from_real(&[1.0]),
                PowerSeries::from_real(&[0.0, 1.0]),
            ),
            closed_forms: Some(ClosedForms {
                r_boundary: 2.0,
                lambda: "1 + |z|^2".into(),
                circle_length: "2*pi*r*(1 + r^2)".into(),
            }),
        },
        CatalogEntry {
            name: "planar",
            surface: Surface::from_pq(
                PowerSeries::from_real(&[1.0]),
                PowerSeries::from_real(&[0.0]),
            ),
            closed_forms: Some(ClosedForms {
                r_boundary: 1.0,
                lambda: "1".into(),
                circle_length: "2*pi*r".into(),
            }),
        },
        CatalogEntry {
            name: "affine-tilt",
            surface: Surface::from_pq(
                PowerSeries::from_real(&[1.0]),
                PowerSeries::new(vec![Complex64::new(0.0, 0.5)]),
            ),
            closed_forms: Some(ClosedForms {
                r_boundary: 1.25,
                lambda: "1.25".into(),
                circle_length: "2.5*pi*r".into(),
            }),
        },
        CatalogEntry {
            name: "poly-demo",
            surface: Surface::from_pq(
                PowerSeries::from_real(&[1.0, 0.3]),
                PowerSeries::from_real(&[0.0]),
            ),
            closed_forms: None,
        },
    ]
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

impl CatalogEntry {
    pub fn data(&self) -> SurfaceData {
        self.surface.to_data(Some(self.name.to_string()))
    }
}
