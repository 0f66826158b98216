//! Common panel side for covering a sphere with regular polygons.
//!
//! Two ways to size the panels:
//!
//! - **surface match**: the flat panels' total area equals the sphere's
//!   surface, `4 pi r^2 = x^2 sum c_n (n/4) cot(pi/n)`. Linear in `x^2`, so
//!   solved in closed form.
//! - **inscribed fit**: the solid's circumscribed sphere is the target sphere,
//!   `x = r / R_coeff`. The flat faces then fall short of the sphere's area.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::{FaceInventory, SolidRecord};
use crate::error::{GeometryError, Result};
use crate::polygon::{regular_polygon_area, PolygonSpec};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphereSpec {
    /// Radius in cm.
    pub radius: f64,
}

impl SphereSpec {
    pub fn new(radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(GeometryError::Domain(format!("sphere radius must be positive, got {radius}")));
        }
        Ok(Self { radius })
    }

    pub fn from_diameter(diameter: f64) -> Result<Self> {
        Self::new(diameter / 2.0)
    }

    pub fn diameter(&self) -> f64 {
        2.0 * self.radius
    }

    /// `4 pi r^2`.
    pub fn surface(&self) -> f64 {
        4.0 * PI * self.radius * self.radius
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveMethod {
    SurfaceMatch,
    InscribedFit,
}

impl fmt::Display for SolveMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveMethod::SurfaceMatch => "surface-match",
            SolveMethod::InscribedFit => "inscribed-fit",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeSolution {
    /// Common side in cm.
    pub side: f64,
    pub side_sq: f64,
    pub method: SolveMethod,
    /// Total flat area in cm² per polygon side count.
    pub coverage: BTreeMap<u32, f64>,
    pub flat_total: f64,
    pub sphere_surface: f64,
    pub flat_to_sphere_ratio: f64,
}

impl EdgeSolution {
    fn from_side(side: f64, method: SolveMethod, sphere: SphereSpec, inventory: &FaceInventory) -> Result<Self> {
        let coverage = inventory
            .iter()
            .map(|(n, c)| Ok((n, c as f64 * regular_polygon_area(PolygonSpec::new(n, side)?)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let flat_total = coverage.values().sum();
        let sphere_surface = sphere.surface();
        Ok(Self {
            side,
            side_sq: side * side,
            method,
            coverage,
            flat_total,
            sphere_surface,
            flat_to_sphere_ratio: flat_total / sphere_surface,
        })
    }

    /// Side rounded to one decimal, the precision a hand calculation reports.
    pub fn side_display(&self) -> f64 {
        (self.side * 10.0).round() / 10.0
    }

    pub fn side_sq_display(&self) -> f64 {
        self.side_sq.round()
    }
}

/// Side for which the flat panels exactly cover the sphere's surface area.
pub fn surface_match_edge(sphere: SphereSpec, inventory: &FaceInventory) -> Result<EdgeSolution> {
    let sphere = SphereSpec::new(sphere.radius)?;
    if inventory.is_empty() {
        return Err(GeometryError::Domain("cannot cover a sphere with an empty face inventory".into()));
    }
    let side = (sphere.surface() / inventory.area_coefficient()).sqrt();
    EdgeSolution::from_side(side, SolveMethod::SurfaceMatch, sphere, inventory)
}

/// Side for which the solid's circumscribed sphere is the target sphere.
pub fn inscribed_fit_edge(sphere: SphereSpec, solid: &SolidRecord) -> Result<EdgeSolution> {
    let sphere = SphereSpec::new(sphere.radius)?;
    let coeff = solid
        .circumradius_coeff
        .ok_or_else(|| solid.capability("inscribed fit (no circumradius coefficient)"))?;
    EdgeSolution::from_side(sphere.radius / coeff, SolveMethod::InscribedFit, sphere, &solid.inventory)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodComparison {
    pub sphere: SphereSpec,
    pub solid: String,
    pub surface_match: EdgeSolution,
    pub inscribed_fit: EdgeSolution,
    /// Surface-match side over inscribed-fit side.
    pub side_ratio: f64,
    /// Sphere surface minus the inscribed solid's flat area, cm².
    pub flat_deficit: f64,
}

pub fn compare_methods(sphere: SphereSpec, solid: &SolidRecord) -> Result<MethodComparison> {
    if !solid.has_metrics() {
        return Err(solid.capability("method comparison (incomplete metric coefficients)"));
    }
    let surface_match = surface_match_edge(sphere, &solid.inventory)?;
    let inscribed_fit = inscribed_fit_edge(sphere, solid)?;
    Ok(MethodComparison {
        sphere,
        solid: solid.name.clone(),
        side_ratio: surface_match.side / inscribed_fit.side,
        flat_deficit: inscribed_fit.sphere_surface - inscribed_fit.flat_total,
        surface_match,
        inscribed_fit,
    })
}
