//! Regular polygon metrics.
//!
//! All angles are radians. A regular n-gon with side `s` has circumradius
//! `s / (2 sin(pi/n))` and area `(n/4) s^2 cot(pi/n)`.

use std::f64::consts::PI;

use nalgebra::Point2;
use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};

/// A regular polygon with `sides` sides of length `side` (cm).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolygonSpec {
    pub sides: u32,
    pub side: f64,
}

impl PolygonSpec {
    pub fn new(sides: u32, side: f64) -> Result<Self> {
        let spec = Self { sides, side };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.sides < 3 {
            return Err(GeometryError::Domain(format!(
                "a polygon needs at least 3 sides, got {}",
                self.sides
            )));
        }
        if !self.side.is_finite() || self.side < 0.0 {
            return Err(GeometryError::Domain(format!(
                "side length must be finite and non-negative, got {}",
                self.side
            )));
        }
        Ok(())
    }

    pub fn area(&self) -> Result<f64> {
        regular_polygon_area(*self)
    }

    pub fn perimeter(&self) -> f64 {
        self.sides as f64 * self.side
    }

    pub fn circumradius(&self) -> f64 {
        self.side / (2.0 * (PI / self.sides as f64).sin())
    }

    pub fn vertices(&self) -> Result<Vec<Point2<f64>>> {
        polygon_vertices(*self)
    }
}

/// Area per unit side squared of a regular n-gon, `(n/4) cot(pi/n)`.
pub fn area_coefficient(sides: u32) -> f64 {
    let n = sides as f64;
    n / (4.0 * (PI / n).tan())
}

/// Area of a regular polygon, `(n/4) side^2 cot(pi/n)`.
///
/// A zero side is a degenerate polygon with zero area.
pub fn regular_polygon_area(spec: PolygonSpec) -> Result<f64> {
    spec.validate()?;
    Ok(area_coefficient(spec.sides) * spec.side * spec.side)
}

/// Hexagon area coefficient written as `3 sqrt(3) / 2`.
pub fn hexagon_area_coefficient() -> f64 {
    1.5 * 3f64.sqrt()
}

/// Pentagon area coefficient written as `(5/4) tan 54deg`, with 54deg = 3pi/10.
pub fn pentagon_area_coefficient_tan() -> f64 {
    1.25 * (3.0 * PI / 10.0).tan()
}

/// Pentagon area coefficient written with surds only,
/// `(5/4) (1 + sqrt 5) / sqrt(10 - 2 sqrt 5)`.
pub fn pentagon_area_coefficient_surd() -> f64 {
    let s5 = 5f64.sqrt();
    1.25 * (1.0 + s5) / (10.0 - 2.0 * s5).sqrt()
}

/// Vertices of a regular polygon centred on the origin, counterclockwise.
///
/// The first two vertices form the bottom edge, which is horizontal; vertex 0
/// is its left end. Every consecutive pair is `side` apart.
pub fn polygon_vertices(spec: PolygonSpec) -> Result<Vec<Point2<f64>>> {
    spec.validate()?;
    let n = spec.sides as f64;
    let radius = spec.circumradius();
    let start = -PI / 2.0 - PI / n;
    Ok((0..spec.sides)
        .map(|k| {
            let theta = start + 2.0 * PI * k as f64 / n;
            Point2::new(radius * theta.cos(), radius * theta.sin())
        })
        .collect())
}

/// Signed area of a closed polygon by the shoelace formula.
pub fn shoelace_area(points: &[Point2<f64>]) -> f64 {
    let n = points.len();
    let twice: f64 = (0..n)
        .map(|i| {
            let a = points[i];
            let b = points[(i + 1) % n];
            a.x * b.y - b.x * a.y
        })
        .sum();
    twice / 2.0
}
