//! The Platonic and Archimedean solids.
//!
//! Each record carries its face inventory and F/E/V counts. The featured
//! solids (all five Platonic solids, the truncated icosahedron and the
//! rhombicosidodecahedron) also carry per-unit-edge metric coefficients,
//! evaluated from their closed forms when the catalog is first built.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::OnceLock;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::polygon::area_coefficient;

/// Face counts keyed by polygon side count.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<u32, u32>", into = "BTreeMap<u32, u32>")]
pub struct FaceInventory(BTreeMap<u32, u32>);

impl FaceInventory {
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(entries: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (n, c) in entries {
            if n < 3 {
                return Err(GeometryError::Inventory(format!("face with {n} sides")));
            }
            if c == 0 {
                return Err(GeometryError::Inventory(format!("zero count for {n}-gons")));
            }
            *map.entry(n).or_insert(0) += c;
        }
        Ok(Self(map))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(sides, count)` pairs in ascending side order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(&n, &c)| (n, c))
    }

    pub fn count(&self, sides: u32) -> u32 {
        self.0.get(&sides).copied().unwrap_or(0)
    }

    /// Sum of n * c_n, twice the edge count of a closed surface.
    pub fn edge_incidences(&self) -> u64 {
        self.iter().map(|(n, c)| n as u64 * c as u64).sum()
    }

    /// Flat area per unit edge squared, `sum c_n (n/4) cot(pi/n)`.
    pub fn area_coefficient(&self) -> f64 {
        self.iter().map(|(n, c)| c as f64 * area_coefficient(n)).sum()
    }
}

impl TryFrom<BTreeMap<u32, u32>> for FaceInventory {
    type Error = GeometryError;

    fn try_from(map: BTreeMap<u32, u32>) -> Result<Self> {
        Self::new(map)
    }
}

impl From<FaceInventory> for BTreeMap<u32, u32> {
    fn from(inv: FaceInventory) -> Self {
        inv.0
    }
}

impl fmt::Display for FaceInventory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(n, c)| format!("{n}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Platonic,
    Archimedean,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Platonic => f.write_str("Platonic"),
            Family::Archimedean => f.write_str("Archimedean"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolidRecord {
    pub name: String,
    pub family: Family,
    pub inventory: FaceInventory,
    pub faces: u32,
    pub edges: u32,
    pub vertices: u32,
    /// Circumradius per unit edge.
    pub circumradius_coeff: Option<f64>,
    /// Volume per unit edge cubed.
    pub volume_coeff: Option<f64>,
    /// Surface area per unit edge squared.
    pub surface_coeff: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SolidRecord {
    pub fn has_metrics(&self) -> bool {
        self.circumradius_coeff.is_some() && self.volume_coeff.is_some() && self.surface_coeff.is_some()
    }

    pub fn has_coordinates(&self) -> bool {
        unit_edge_construction(&self.name).is_some()
    }

    pub(crate) fn capability(&self, what: &str) -> GeometryError {
        GeometryError::Capability {
            solid: self.name.clone(),
            what: what.to_string(),
        }
    }
}

/// Face, edge and vertex counts from an inventory.
///
/// F and E follow from the faces alone; V comes from E = F + V - 2.
pub fn derive_counts(inventory: &FaceInventory) -> Result<(u32, u32, u32)> {
    if inventory.is_empty() {
        return Err(GeometryError::Inventory("empty inventory".into()));
    }
    let incidences = inventory.edge_incidences();
    if !incidences.is_multiple_of(2) {
        return Err(GeometryError::Inventory(format!(
            "{inventory} has an odd number ({incidences}) of edge incidences; not a closed surface"
        )));
    }
    let faces: u64 = inventory.iter().map(|(_, c)| c as u64).sum();
    let edges = incidences / 2;
    let vertices = (edges + 2)
        .checked_sub(faces)
        .filter(|&v| v > 0)
        .ok_or_else(|| GeometryError::Inventory(format!("{inventory} gives no vertices")))?;
    let narrow = |x: u64| u32::try_from(x).map_err(|_| GeometryError::Inventory("count overflow".into()));
    Ok((narrow(faces)?, narrow(edges)?, narrow(vertices)?))
}

/// True iff E = F + V - 2 and the counts agree with the face inventory.
pub fn euler_check(record: &SolidRecord) -> bool {
    let (f, e, v) = (record.faces as i64, record.edges as i64, record.vertices as i64);
    e == f + v - 2 && derive_counts(&record.inventory) == Ok((record.faces, record.edges, record.vertices))
}

/// Solid volume over the volume of its circumscribed sphere.
pub fn circumsphere_volume_ratio(record: &SolidRecord) -> Result<f64> {
    match (record.volume_coeff, record.circumradius_coeff) {
        (Some(vol), Some(r)) => Ok(vol / (4.0 * PI / 3.0 * r.powi(3))),
        _ => Err(record.capability("circumscribed-sphere volume ratio (no metric coefficients)")),
    }
}

/// One catalog entry as reported to users.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolidReport {
    #[serde(flatten)]
    pub record: SolidRecord,
    pub euler: bool,
    /// Volume over circumscribed-sphere volume, when coefficients exist.
    pub roundness_ratio: Option<f64>,
    pub has_coordinates: bool,
}

pub fn solid_report(record: &SolidRecord) -> SolidReport {
    SolidReport {
        record: record.clone(),
        euler: euler_check(record),
        roundness_ratio: circumsphere_volume_ratio(record).ok(),
        has_coordinates: record.has_coordinates(),
    }
}

/// Every solid in the catalog, Platonic first.
pub fn catalog() -> &'static [SolidRecord] {
    static CATALOG: OnceLock<Vec<SolidRecord>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

pub fn solid_names() -> Vec<String> {
    catalog().iter().map(|s| s.name.clone()).collect()
}

const ALIASES: &[(&str, &str)] = &[
    ("soccer-ball", "truncated-icosahedron"),
    ("soccerball", "truncated-icosahedron"),
    ("football", "truncated-icosahedron"),
    ("buckyball", "truncated-icosahedron"),
    ("soccerene", "truncated-icosahedron"),
    ("c60", "truncated-icosahedron"),
    ("hexahedron", "cube"),
    ("small-rhombicosidodecahedron", "rhombicosidodecahedron"),
    ("small-rhombicuboctahedron", "rhombicuboctahedron"),
    ("great-rhombicuboctahedron", "truncated-cuboctahedron"),
    ("great-rhombicosidodecahedron", "truncated-icosidodecahedron"),
];

fn canonical_name(name: &str) -> String {
    let key: String = name
        .trim()
        .to_lowercase()
        .chars()
        .map(|c| if c == ' ' || c == '_' { '-' } else { c })
        .collect();
    ALIASES
        .iter()
        .find(|(alias, _)| *alias == key)
        .map(|(_, target)| target.to_string())
        .unwrap_or(key)
}

/// Look up a solid by name; case-insensitive, spaces and underscores read as hyphens.
pub fn catalog_lookup(name: &str) -> Result<&'static SolidRecord> {
    let key = canonical_name(name);
    catalog()
        .iter()
        .find(|s| s.name == key)
        .ok_or_else(|| GeometryError::Lookup {
            name: name.to_string(),
            available: solid_names(),
        })
}

struct Metrics {
    circumradius: f64,
    volume: f64,
    surface: f64,
}

// name, family, inventory, (F, E, V), closed-form metrics
type SolidSpec = (&'static str, Family, Vec<(u32, u32)>, (u32, u32, u32), Option<Metrics>);

fn build_catalog() -> Vec<SolidRecord> {
    let s2 = 2f64.sqrt();
    let s3 = 3f64.sqrt();
    let s5 = 5f64.sqrt();
    let s6 = 6f64.sqrt();
    let pentagon_faces = (25.0 + 10.0 * s5).sqrt();

    let specs: Vec<SolidSpec> = vec![
        // R = sqrt6/4, V = sqrt2/12, S = sqrt3
        (
            "tetrahedron",
            Family::Platonic,
            vec![(3, 4)],
            (4, 6, 4),
            Some(Metrics { circumradius: s6 / 4.0, volume: s2 / 12.0, surface: s3 }),
        ),
        // R = sqrt3/2, V = 1, S = 6
        (
            "cube",
            Family::Platonic,
            vec![(4, 6)],
            (6, 12, 8),
            Some(Metrics { circumradius: s3 / 2.0, volume: 1.0, surface: 6.0 }),
        ),
        // R = sqrt2/2, V = sqrt2/3, S = 2 sqrt3
        (
            "octahedron",
            Family::Platonic,
            vec![(3, 8)],
            (8, 12, 6),
            Some(Metrics { circumradius: s2 / 2.0, volume: s2 / 3.0, surface: 2.0 * s3 }),
        ),
        // R = sqrt3 (1 + sqrt5)/4, V = (15 + 7 sqrt5)/4, S = 3 sqrt(25 + 10 sqrt5)
        (
            "dodecahedron",
            Family::Platonic,
            vec![(5, 12)],
            (12, 30, 20),
            Some(Metrics {
                circumradius: s3 * (1.0 + s5) / 4.0,
                volume: (15.0 + 7.0 * s5) / 4.0,
                surface: 3.0 * pentagon_faces,
            }),
        ),
        // R = sqrt(10 + 2 sqrt5)/4, V = 5 (3 + sqrt5)/12, S = 5 sqrt3
        (
            "icosahedron",
            Family::Platonic,
            vec![(3, 20)],
            (20, 30, 12),
            Some(Metrics {
                circumradius: (10.0 + 2.0 * s5).sqrt() / 4.0,
                volume: 5.0 * (3.0 + s5) / 12.0,
                surface: 5.0 * s3,
            }),
        ),
        ("truncated-tetrahedron", Family::Archimedean, vec![(3, 4), (6, 4)], (8, 18, 12), None),
        ("cuboctahedron", Family::Archimedean, vec![(3, 8), (4, 6)], (14, 24, 12), None),
        ("truncated-cube", Family::Archimedean, vec![(3, 8), (8, 6)], (14, 36, 24), None),
        ("truncated-octahedron", Family::Archimedean, vec![(4, 6), (6, 8)], (14, 36, 24), None),
        ("rhombicuboctahedron", Family::Archimedean, vec![(3, 8), (4, 18)], (26, 48, 24), None),
        (
            "truncated-cuboctahedron",
            Family::Archimedean,
            vec![(4, 12), (6, 8), (8, 6)],
            (26, 72, 48),
            None,
        ),
        // one record for both enantiomers
        ("snub-cube", Family::Archimedean, vec![(3, 32), (4, 6)], (38, 60, 24), None),
        ("icosidodecahedron", Family::Archimedean, vec![(3, 20), (5, 12)], (32, 60, 30), None),
        ("truncated-dodecahedron", Family::Archimedean, vec![(3, 20), (10, 12)], (32, 90, 60), None),
        // R = sqrt(58 + 18 sqrt5)/4, V = (125 + 43 sqrt5)/4, S = 30 sqrt3 + 3 sqrt(25 + 10 sqrt5)
        (
            "truncated-icosahedron",
            Family::Archimedean,
            vec![(5, 12), (6, 20)],
            (32, 90, 60),
            Some(Metrics {
                circumradius: (58.0 + 18.0 * s5).sqrt() / 4.0,
                volume: (125.0 + 43.0 * s5) / 4.0,
                surface: 30.0 * s3 + 3.0 * pentagon_faces,
            }),
        ),
        // R = sqrt(11 + 4 sqrt5)/2, V = (60 + 29 sqrt5)/3, S = 30 + 5 sqrt3 + 3 sqrt(25 + 10 sqrt5)
        (
            "rhombicosidodecahedron",
            Family::Archimedean,
            vec![(3, 20), (4, 30), (5, 12)],
            (62, 120, 60),
            Some(Metrics {
                circumradius: (11.0 + 4.0 * s5).sqrt() / 2.0,
                volume: (60.0 + 29.0 * s5) / 3.0,
                surface: 30.0 + 5.0 * s3 + 3.0 * pentagon_faces,
            }),
        ),
        (
            "truncated-icosidodecahedron",
            Family::Archimedean,
            vec![(4, 30), (6, 20), (10, 12)],
            (62, 180, 120),
            None,
        ),
        // one record for both enantiomers
        ("snub-dodecahedron", Family::Archimedean, vec![(3, 80), (5, 12)], (92, 150, 60), None),
    ];

    specs
        .into_iter()
        .map(|(name, family, faces, (f, e, v), metrics)| {
            let note = (name == "rhombicosidodecahedron").then(|| {
                "the often-quoted figure of 94% of the circumscribed sphere is not reproduced; \
                 the volume ratio from exact coefficients is 0.8923"
                    .to_string()
            });
            SolidRecord {
                name: name.to_string(),
                family,
                inventory: FaceInventory::new(faces).expect("static inventory"),
                faces: f,
                edges: e,
                vertices: v,
                circumradius_coeff: metrics.as_ref().map(|m| m.circumradius),
                volume_coeff: metrics.as_ref().map(|m| m.volume),
                surface_coeff: metrics.as_ref().map(|m| m.surface),
                note,
            }
        })
        .collect()
}

fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

// Cyclic permutations of `base` under every sign choice of its non-zero
// entries, without duplicates. For three coordinates the cyclic permutations
// are exactly the even ones.
fn cyclic_signed(base: [f64; 3], out: &mut Vec<Vector3<f64>>) {
    for shift in 0..3 {
        let c = [base[shift % 3], base[(shift + 1) % 3], base[(shift + 2) % 3]];
        for signs in 0..8u8 {
            let p = Vector3::new(
                if signs & 1 != 0 { -c[0] } else { c[0] },
                if signs & 2 != 0 { -c[1] } else { c[1] },
                if signs & 4 != 0 { -c[2] } else { c[2] },
            );
            if !out.iter().any(|q| (q - p).norm() < 1e-12) {
                out.push(p);
            }
        }
    }
}

fn min_pair_distance(points: &[Vector3<f64>]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            best = best.min((points[i] - points[j]).norm());
        }
    }
    best
}

fn icosahedron_raw() -> Vec<Vector3<f64>> {
    let mut pts = Vec::new();
    cyclic_signed([0.0, 1.0, golden_ratio()], &mut pts);
    pts
}

fn truncated_icosahedron_raw() -> Vec<Vector3<f64>> {
    let ico = icosahedron_raw();
    let edge = min_pair_distance(&ico);
    let mut pts = Vec::with_capacity(60);
    for i in 0..ico.len() {
        for j in (i + 1)..ico.len() {
            let d = ico[j] - ico[i];
            if (d.norm() - edge).abs() < 1e-9 * edge {
                pts.push(ico[i] + d / 3.0);
                pts.push(ico[i] + d * (2.0 / 3.0));
            }
        }
    }
    pts
}

fn unit_edge_construction(name: &str) -> Option<fn() -> Vec<Vector3<f64>>> {
    let f: fn() -> Vec<Vector3<f64>> = match name {
        "tetrahedron" => || {
            vec![
                Vector3::new(1.0, 1.0, 1.0),
                Vector3::new(1.0, -1.0, -1.0),
                Vector3::new(-1.0, 1.0, -1.0),
                Vector3::new(-1.0, -1.0, 1.0),
            ]
        },
        "cube" => || {
            let mut pts = Vec::new();
            cyclic_signed([1.0, 1.0, 1.0], &mut pts);
            pts
        },
        "icosahedron" => icosahedron_raw,
        "dodecahedron" => || {
            let phi = golden_ratio();
            let mut pts = Vec::new();
            cyclic_signed([1.0, 1.0, 1.0], &mut pts);
            cyclic_signed([0.0, 1.0 / phi, phi], &mut pts);
            pts
        },
        "truncated-icosahedron" => truncated_icosahedron_raw,
        "rhombicosidodecahedron" => || {
            let phi = golden_ratio();
            let mut pts = Vec::new();
            cyclic_signed([1.0, 1.0, phi.powi(3)], &mut pts);
            cyclic_signed([phi * phi, phi, 2.0 * phi], &mut pts);
            cyclic_signed([2.0 + phi, 0.0, phi * phi], &mut pts);
            pts
        },
        _ => return None,
    };
    Some(f)
}

/// Vertex coordinates of `record`, centred on the origin, scaled so every
/// edge has length `edge`.
pub fn solid_vertices(record: &SolidRecord, edge: f64) -> Result<Vec<Vector3<f64>>> {
    if !(edge.is_finite() && edge > 0.0) {
        return Err(GeometryError::Domain(format!("edge must be positive, got {edge}")));
    }
    let construct =
        unit_edge_construction(&record.name).ok_or_else(|| record.capability("vertex coordinates"))?;
    let raw = construct();
    let centroid = raw.iter().sum::<Vector3<f64>>() / raw.len() as f64;
    let scale = edge / min_pair_distance(&raw);
    Ok(raw.iter().map(|p| (p - centroid) * scale).collect())
}

/// The 60 vertices of the truncated icosahedron (the C60 atom positions).
///
/// Built by cutting each icosahedron edge at its two one-third points and then
/// scaling so the resulting edges have length `edge`.
pub fn truncated_icosahedron_vertices(edge: f64) -> Result<Vec<Vector3<f64>>> {
    solid_vertices(catalog_lookup("truncated-icosahedron")?, edge)
}
