//! Brute-force convex hull metrics.
//!
//! Every point triple spans a candidate plane; a plane with all points on one
//! side is a supporting plane and the points lying on it form a hull face.
//! This is O(n^4) and only meant for the small vertex sets in the catalog,
//! where it serves as an independent check on the closed-form coefficients.

use nalgebra::Vector3;
use serde::Serialize;

use crate::error::{GeometryError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HullMetrics {
    pub volume: f64,
    pub surface: f64,
    /// Largest distance from the vertex centroid.
    pub circumradius: f64,
    pub faces: usize,
}

struct Plane {
    normal: Vector3<f64>,
    offset: f64,
}

/// Volume, surface area and circumradius of the convex hull of `points`.
pub fn hull_metrics_oracle(points: &[Vector3<f64>]) -> Result<HullMetrics> {
    if points.len() < 4 {
        return Err(GeometryError::Degenerate(format!(
            "convex hull needs at least 4 points, got {}",
            points.len()
        )));
    }
    if points.iter().any(|p| !p.iter().all(|c| c.is_finite())) {
        return Err(GeometryError::Degenerate("non-finite coordinate".into()));
    }

    let centroid = points.iter().sum::<Vector3<f64>>() / points.len() as f64;
    let circumradius = points
        .iter()
        .map(|p| (p - centroid).norm())
        .fold(0.0, f64::max);
    if circumradius == 0.0 {
        return Err(GeometryError::Degenerate("all points coincide".into()));
    }
    let tol = 1e-9 * circumradius;

    let mut planes: Vec<Plane> = Vec::new();
    let n = points.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let cross = (points[j] - points[i]).cross(&(points[k] - points[i]));
                let len = cross.norm();
                if len <= tol * circumradius {
                    continue;
                }
                let mut normal = cross / len;
                let mut offset = normal.dot(&points[i]);
                let (mut above, mut below) = (false, false);
                for p in points {
                    let s = normal.dot(p) - offset;
                    above |= s > tol;
                    below |= s < -tol;
                    if above && below {
                        break;
                    }
                }
                if above && below {
                    continue;
                }
                if above {
                    normal = -normal;
                    offset = -offset;
                }
                let seen = planes
                    .iter()
                    .any(|q| q.normal.dot(&normal) > 1.0 - 1e-9 && (q.offset - offset).abs() <= tol);
                if !seen {
                    planes.push(Plane { normal, offset });
                }
            }
        }
    }

    if planes.len() < 4 {
        return Err(GeometryError::Degenerate("points are coplanar".into()));
    }

    let mut volume = 0.0;
    let mut surface = 0.0;
    for plane in &planes {
        let on_plane: Vec<Vector3<f64>> = points
            .iter()
            .filter(|p| (plane.normal.dot(p) - plane.offset).abs() <= tol)
            .copied()
            .collect();
        let area = planar_polygon_area(&on_plane, &plane.normal);
        let height = plane.offset - plane.normal.dot(&centroid);
        surface += area;
        volume += area * height / 3.0;
    }

    Ok(HullMetrics {
        volume,
        surface,
        circumradius,
        faces: planes.len(),
    })
}

// Area of the convex polygon through `pts`, all lying in a plane with unit
// normal `normal`. Points are sorted by angle about their centroid first.
fn planar_polygon_area(pts: &[Vector3<f64>], normal: &Vector3<f64>) -> f64 {
    if pts.len() < 3 {
        return 0.0;
    }
    let c = pts.iter().sum::<Vector3<f64>>() / pts.len() as f64;
    let u = (pts[0] - c).normalize();
    let v = normal.cross(&u);
    let mut ordered: Vec<(f64, Vector3<f64>)> = pts
        .iter()
        .map(|p| {
            let d = p - c;
            (d.dot(&v).atan2(d.dot(&u)), *p)
        })
        .collect();
    ordered.sort_by(|a, b| a.0.total_cmp(&b.0));
    let m = ordered.len();
    let twice: Vector3<f64> = (0..m)
        .map(|i| ordered[i].1.cross(&ordered[(i + 1) % m].1))
        .sum();
    twice.dot(normal).abs() / 2.0
}
