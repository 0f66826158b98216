//! Build artifacts for a physical ball: seam budgets and cut-template sheets.
//!
//! Lengths are cm. SVG output uses millimetre user units.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use nalgebra::{Point2, Vector2};
use serde::{Deserialize, Serialize};

use crate::catalog::{derive_counts, FaceInventory};
use crate::error::{GeometryError, Result};
use crate::polygon::{polygon_vertices, PolygonSpec};

/// Materials on hand. The defaults are two 25 cm spheres, 50 m of thread,
/// 2000 pins and 100 x 70 cm plastic sheets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaterialBudget {
    pub balls: u32,
    pub sphere_diameter: f64,
    /// cm
    pub thread_available: f64,
    pub pins_available: u32,
    pub sheet_width: f64,
    pub sheet_height: f64,
    /// Spacing between cut-outs and the sheet margin, cm.
    pub gap: f64,
    /// Thread passes per edge.
    pub stitch_multiplier: f64,
}

impl Default for MaterialBudget {
    fn default() -> Self {
        Self {
            balls: 2,
            sphere_diameter: 25.0,
            thread_available: 5000.0,
            pins_available: 2000,
            sheet_width: 100.0,
            sheet_height: 70.0,
            gap: 0.5,
            stitch_multiplier: 1.0,
        }
    }
}

impl MaterialBudget {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("sphere diameter", self.sphere_diameter),
            ("thread", self.thread_available),
            ("sheet width", self.sheet_width),
            ("sheet height", self.sheet_height),
            ("stitch multiplier", self.stitch_multiplier),
        ];
        for (what, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(GeometryError::Domain(format!("{what} must be positive, got {v}")));
            }
        }
        if self.balls == 0 {
            return Err(GeometryError::Domain("at least one ball is required".into()));
        }
        if self.pins_available == 0 {
            return Err(GeometryError::Domain("pin count must be positive".into()));
        }
        if !(self.gap.is_finite() && self.gap >= 0.0) {
            return Err(GeometryError::Domain(format!("gap must be non-negative, got {}", self.gap)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Black => "black",
            Color::White => "white",
        })
    }
}

pub type ColorMap = BTreeMap<u32, Color>;

/// Black pentagons, everything else white.
pub fn default_color_map(inventory: &FaceInventory) -> ColorMap {
    inventory
        .iter()
        .map(|(n, _)| (n, if n == 5 { Color::Black } else { Color::White }))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeamReport {
    pub balls: u32,
    pub edges_per_ball: u32,
    pub side: f64,
    pub stitch_multiplier: f64,
    /// Total thread needed, cm.
    pub seam_length: f64,
    pub thread_available: f64,
    pub thread_ok: bool,
    pub pins_available: u32,
    pub pins_per_edge: u32,
}

/// Thread and pin budget: one thread pass per edge (times the stitch
/// multiplier), pins spread evenly over every edge of every ball.
pub fn seam_budget(inventory: &FaceInventory, side: f64, budget: &MaterialBudget) -> Result<SeamReport> {
    budget.validate()?;
    if !(side.is_finite() && side >= 0.0) {
        return Err(GeometryError::Domain(format!("side must be non-negative, got {side}")));
    }
    let (_, edges, _) = derive_counts(inventory)?;
    let seam_length = budget.balls as f64 * edges as f64 * side * budget.stitch_multiplier;
    let total_edges = budget.balls as u64 * edges as u64;
    Ok(SeamReport {
        balls: budget.balls,
        edges_per_ball: edges,
        side,
        stitch_multiplier: budget.stitch_multiplier,
        seam_length,
        thread_available: budget.thread_available,
        thread_ok: seam_length <= budget.thread_available,
        pins_available: budget.pins_available,
        pins_per_edge: (budget.pins_available as u64 / total_edges) as u32,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Placement {
    pub sides: u32,
    pub label: String,
    /// Lower corner of the polygon's bounding box on the sheet, cm.
    pub position: [f64; 2],
    /// Radians, about the bounding-box centre.
    pub rotation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TemplateSheet {
    pub color: Color,
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    /// Common polygon side, cm.
    pub side: f64,
    pub placements: Vec<Placement>,
}

fn bounding_box(points: &[Point2<f64>]) -> (Point2<f64>, Point2<f64>) {
    let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        lo = lo.inf(p);
        hi = hi.sup(p);
    }
    (lo, hi)
}

impl TemplateSheet {
    /// Outline of a placed polygon in sheet coordinates (cm).
    pub fn outline(&self, placement: &Placement) -> Result<Vec<Point2<f64>>> {
        let canonical = polygon_vertices(PolygonSpec::new(placement.sides, self.side)?)?;
        let (lo, hi) = bounding_box(&canonical);
        let centre = Point2::from((lo.coords + hi.coords) / 2.0);
        let (sin, cos) = placement.rotation.sin_cos();
        let rotated: Vec<Point2<f64>> = canonical
            .iter()
            .map(|p| {
                let d = p - centre;
                centre + Vector2::new(cos * d.x - sin * d.y, sin * d.x + cos * d.y)
            })
            .collect();
        let (lo, _) = bounding_box(&rotated);
        let shift = Vector2::new(placement.position[0], placement.position[1]) - lo.coords;
        Ok(rotated.into_iter().map(|p| p + shift).collect())
    }

    pub fn count(&self, sides: u32) -> usize {
        self.placements.iter().filter(|p| p.sides == sides).count()
    }

    /// Checks every outline lies inside the margins and no two bounding boxes overlap.
    pub fn validate(&self) -> Result<()> {
        let eps = 1e-9 * self.width.max(self.height);
        let mut boxes = Vec::with_capacity(self.placements.len());
        for p in &self.placements {
            let (lo, hi) = bounding_box(&self.outline(p)?);
            if lo.x < self.margin - eps
                || lo.y < self.margin - eps
                || hi.x > self.width - self.margin + eps
                || hi.y > self.height - self.margin + eps
            {
                return Err(GeometryError::Layout(format!("{} leaves the sheet margins", p.label)));
            }
            boxes.push((lo, hi, &p.label));
        }
        for (i, a) in boxes.iter().enumerate() {
            for b in &boxes[i + 1..] {
                let overlap = a.0.x < b.1.x - eps && b.0.x < a.1.x - eps && a.0.y < b.1.y - eps && b.0.y < a.1.y - eps;
                if overlap {
                    return Err(GeometryError::Layout(format!("{} overlaps {}", a.2, b.2)));
                }
            }
        }
        Ok(())
    }
}

fn label_prefix(sides: u32) -> String {
    match sides {
        3 => "T".into(),
        4 => "S".into(),
        5 => "P".into(),
        6 => "H".into(),
        8 => "O".into(),
        10 => "D".into(),
        n => format!("N{n}-"),
    }
}

/// Places `balls * c_n` copies of every polygon on sheets of its colour.
///
/// Shelf packing: left to right along a row, a new row when the next
/// bounding box would cross the right margin, a new sheet when a row would
/// cross the bottom margin. Polygons go in ascending side count.
pub fn layout_templates(
    inventory: &FaceInventory,
    side: f64,
    budget: &MaterialBudget,
    colors: &ColorMap,
) -> Result<Vec<TemplateSheet>> {
    budget.validate()?;
    if !(side.is_finite() && side > 0.0) {
        return Err(GeometryError::Domain(format!("side must be positive, got {side}")));
    }
    for (n, _) in inventory.iter() {
        if !colors.contains_key(&n) {
            return Err(GeometryError::Layout(format!("no sheet colour assigned to {n}-gons")));
        }
    }

    let (w_sheet, h_sheet, gap) = (budget.sheet_width, budget.sheet_height, budget.gap);
    let margin = gap;
    let eps = 1e-9 * w_sheet.max(h_sheet);
    let mut sheets = Vec::new();

    for color in [Color::Black, Color::White] {
        let mut current: Option<TemplateSheet> = None;
        let (mut x, mut y, mut row_h) = (margin, margin, 0.0f64);

        for (n, c) in inventory.iter().filter(|(n, _)| colors[n] == color) {
            let (lo, hi) = bounding_box(&polygon_vertices(PolygonSpec::new(n, side)?)?);
            let (w, h) = (hi.x - lo.x, hi.y - lo.y);
            if w + 2.0 * margin > w_sheet + eps || h + 2.0 * margin > h_sheet + eps {
                return Err(GeometryError::Layout(format!(
                    "{n}-gon with side {side:.3} cm needs {w:.3} x {h:.3} cm plus {margin} cm margins; \
                     sheet is {w_sheet} x {h_sheet} cm"
                )));
            }
            for k in 1..=(budget.balls * c) {
                if x + w > w_sheet - margin + eps {
                    x = margin;
                    y += row_h + gap;
                    row_h = 0.0;
                }
                if current.is_none() || y + h > h_sheet - margin + eps {
                    if let Some(done) = current.take() {
                        sheets.push(done);
                    }
                    current = Some(TemplateSheet {
                        color,
                        width: w_sheet,
                        height: h_sheet,
                        margin,
                        side,
                        placements: Vec::new(),
                    });
                    x = margin;
                    y = margin;
                    row_h = 0.0;
                }
                let sheet = current.as_mut().expect("sheet opened above");
                sheet.placements.push(Placement {
                    sides: n,
                    label: format!("{}{k:02}", label_prefix(n)),
                    position: [x, y],
                    rotation: 0.0,
                });
                x += w + gap;
                row_h = row_h.max(h);
            }
        }
        sheets.extend(current);
    }
    Ok(sheets)
}

// Fixed 3-decimal millimetres; avoids printing "-0.000".
fn mm(cm: f64) -> String {
    let v = cm * 10.0;
    if v.abs() < 5e-4 {
        "0.000".to_string()
    } else {
        format!("{v:.3}")
    }
}

/// SVG 1.1 document for one sheet: each polygon a closed, unfilled path with
/// a 0.3 mm stroke, labelled at its centre.
pub fn render_svg(sheet: &TemplateSheet) -> Result<String> {
    let mut out = String::new();
    let (w, h) = (mm(sheet.width), mm(sheet.height));
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}mm" height="{h}mm" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(
        out,
        "  <title>{} sheet, {} cut-outs, side {} mm</title>",
        sheet.color,
        sheet.placements.len(),
        mm(sheet.side)
    )
    .unwrap();

    let mut labels = Vec::with_capacity(sheet.placements.len());
    writeln!(out, r##"  <g fill="none" stroke="#000000" stroke-width="0.300">"##).unwrap();
    for p in &sheet.placements {
        let pts = sheet.outline(p)?;
        let mut d = String::new();
        for (i, q) in pts.iter().enumerate() {
            let cmd = if i == 0 { "M" } else { "L" };
            write!(d, "{cmd} {} {} ", mm(q.x), mm(q.y)).unwrap();
        }
        d.push('Z');
        writeln!(out, r#"    <path id="{}" d="{d}"/>"#, p.label).unwrap();
        let centre = pts.iter().map(|q| q.coords).sum::<Vector2<f64>>() / pts.len() as f64;
        labels.push((centre, &p.label));
    }
    writeln!(out, "  </g>").unwrap();

    writeln!(
        out,
        r##"  <g font-family="sans-serif" font-size="{}" text-anchor="middle" dominant-baseline="middle" fill="#808080">"##,
        mm(sheet.side * 0.2)
    )
    .unwrap();
    for (c, label) in labels {
        writeln!(out, r#"    <text x="{}" y="{}">{label}</text>"#, mm(c.x), mm(c.y)).unwrap();
    }
    writeln!(out, "  </g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
