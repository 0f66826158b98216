//! Polygonal meshes of catalog solids and Wavefront OBJ text.
//!
//! Faces are not tabulated. They are recovered from the vertex coordinates:
//! two edges meeting at a vertex span a candidate plane, and when every vertex
//! lies on one side of it, the vertices on the plane form a face.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::catalog::{solid_vertices, SolidRecord};
use crate::error::{GeometryError, Result};

/// Relative tolerance (times the edge) for grouping coplanar vertices.
const COPLANAR_TOL: f64 = 1e-7;
/// Relative tolerance (times the edge) for the planarity invariant.
const PLANARITY_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MeshScale {
    ByEdge(f64),
    ByCircumradius(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeshModel {
    pub solid: String,
    pub edge: f64,
    pub vertices: Vec<Vector3<f64>>,
    /// Vertex index cycles, counterclockwise seen from outside.
    pub faces: Vec<Vec<usize>>,
}

pub fn group_name(sides: usize) -> String {
    match sides {
        3 => "triangles".into(),
        4 => "squares".into(),
        5 => "pentagons".into(),
        6 => "hexagons".into(),
        8 => "octagons".into(),
        10 => "decagons".into(),
        n => format!("{n}-gons"),
    }
}

fn newell_normal(points: impl Iterator<Item = Vector3<f64>> + Clone) -> Vector3<f64> {
    let pts: Vec<Vector3<f64>> = points.collect();
    let n = pts.len();
    (0..n).map(|i| pts[i].cross(&pts[(i + 1) % n])).sum::<Vector3<f64>>()
}

impl MeshModel {
    /// Side count of each face, in face order.
    pub fn groups(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Undirected edges as sorted index pairs.
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut set = BTreeSet::new();
        for face in &self.faces {
            for i in 0..face.len() {
                let (a, b) = (face[i], face[(i + 1) % face.len()]);
                set.insert((a.min(b), a.max(b)));
            }
        }
        set
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges().len() as i64 + self.faces.len() as i64
    }

    pub fn centroid(&self) -> Vector3<f64> {
        self.vertices.iter().sum::<Vector3<f64>>() / self.vertices.len() as f64
    }

    pub fn circumradius(&self) -> f64 {
        let c = self.centroid();
        self.vertices.iter().map(|v| (v - c).norm()).fold(0.0, f64::max)
    }

    fn face_points<'a>(&'a self, face: &'a [usize]) -> impl Iterator<Item = Vector3<f64>> + Clone + 'a {
        face.iter().map(|&i| self.vertices[i])
    }

    /// Largest distance of a face vertex from the face's plane.
    pub fn planarity_error(&self, face: &[usize]) -> f64 {
        let normal = newell_normal(self.face_points(face)).normalize();
        let c = self.face_points(face).sum::<Vector3<f64>>() / face.len() as f64;
        self.face_points(face).map(|p| (p - c).dot(&normal).abs()).fold(0.0, f64::max)
    }

    /// True when every face normal points away from the centroid.
    pub fn outward_winding(&self) -> bool {
        let c = self.centroid();
        self.faces.iter().all(|f| {
            let fc = self.face_points(f).sum::<Vector3<f64>>() / f.len() as f64;
            newell_normal(self.face_points(f)).dot(&(fc - c)) > 0.0
        })
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(GeometryError::Degenerate(m));
        for (k, face) in self.faces.iter().enumerate() {
            let distinct: BTreeSet<_> = face.iter().collect();
            if face.len() < 3 || distinct.len() != face.len() {
                return bad(format!("face {k} is not a simple cycle"));
            }
            if face.iter().any(|&i| i >= self.vertices.len()) {
                return bad(format!("face {k} has an index out of range"));
            }
            if self.planarity_error(face) >= PLANARITY_TOL * self.edge {
                return bad(format!("face {k} is not planar"));
            }
        }
        if self.euler_characteristic() != 2 {
            return bad(format!("Euler characteristic {} != 2", self.euler_characteristic()));
        }
        Ok(())
    }
}

/// Mesh of `solid` at the requested scale, faces grouped by side count.
pub fn build_solid_mesh(solid: &SolidRecord, scale: MeshScale) -> Result<MeshModel> {
    let edge = match scale {
        MeshScale::ByEdge(x) => x,
        MeshScale::ByCircumradius(r) => {
            if !(r.is_finite() && r > 0.0) {
                return Err(GeometryError::Domain(format!("circumradius must be positive, got {r}")));
            }
            let unit = solid_vertices(solid, 1.0)?;
            r / unit.iter().map(|v| v.norm()).fold(0.0, f64::max)
        }
    };
    let vertices = solid_vertices(solid, edge)?;
    let n = vertices.len();

    let mut neighbours = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if ((vertices[i] - vertices[j]).norm() - edge).abs() <= 1e-9 * edge {
                neighbours[i].push(j);
                neighbours[j].push(i);
            }
        }
    }

    let tol = COPLANAR_TOL * edge;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut faces = Vec::new();
    for v in 0..n {
        for (ia, &a) in neighbours[v].iter().enumerate() {
            for &b in &neighbours[v][ia + 1..] {
                let cross = (vertices[a] - vertices[v]).cross(&(vertices[b] - vertices[v]));
                if cross.norm() <= tol * edge {
                    continue;
                }
                let mut normal = cross.normalize();
                let offset = normal.dot(&vertices[v]);
                let signed: Vec<f64> = vertices.iter().map(|p| normal.dot(p) - offset).collect();
                let above = signed.iter().any(|&s| s > tol);
                let below = signed.iter().any(|&s| s < -tol);
                if above && below {
                    continue;
                }
                if above {
                    normal = -normal;
                }
                let members: Vec<usize> = (0..n).filter(|&i| signed[i].abs() <= tol).collect();
                let key = members.clone();
                if seen.contains(&key) {
                    continue;
                }
                // each face vertex must have exactly two edge-neighbours in the face
                let is_cycle = members
                    .iter()
                    .all(|&m| neighbours[m].iter().filter(|x| members.contains(x)).count() == 2);
                if !is_cycle {
                    return Err(GeometryError::Degenerate(format!(
                        "{}: supporting plane vertices do not form an edge cycle",
                        solid.name
                    )));
                }
                seen.insert(key);
                faces.push(order_cycle(&vertices, &members, &normal));
            }
        }
    }
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let mesh = MeshModel {
        solid: solid.name.clone(),
        edge,
        vertices,
        faces,
    };
    mesh.validate()?;
    Ok(mesh)
}

// Counterclockwise about `normal`, starting from the smallest index.
fn order_cycle(vertices: &[Vector3<f64>], members: &[usize], normal: &Vector3<f64>) -> Vec<usize> {
    let c = members.iter().map(|&i| vertices[i]).sum::<Vector3<f64>>() / members.len() as f64;
    let u = (vertices[members[0]] - c).normalize();
    let w = normal.cross(&u);
    let mut ordered: Vec<(f64, usize)> = members
        .iter()
        .map(|&i| {
            let d = vertices[i] - c;
            (d.dot(&w).atan2(d.dot(&u)), i)
        })
        .collect();
    ordered.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut cycle: Vec<usize> = ordered.into_iter().map(|(_, i)| i).collect();
    let start = cycle.iter().enumerate().min_by_key(|(_, &i)| i).map(|(k, _)| k).unwrap_or(0);
    cycle.rotate_left(start);
    cycle
}

fn fixed6(v: f64) -> String {
    if v.abs() < 5e-7 {
        "0.000000".into()
    } else {
        format!("{v:.6}")
    }
}

/// Wavefront OBJ text: header comments, `v` lines, then one `g` group per
/// face type with 1-based n-gon `f` lines.
pub fn export_obj(mesh: &MeshModel) -> String {
    let mut out = String::new();
    writeln!(out, "# {}", mesh.solid).unwrap();
    writeln!(
        out,
        "# vertices {} faces {} edges {}",
        mesh.vertices.len(),
        mesh.faces.len(),
        mesh.edges().len()
    )
    .unwrap();
    writeln!(out, "# edge {} cm", fixed6(mesh.edge)).unwrap();
    writeln!(out, "# circumradius {} cm", fixed6(mesh.circumradius())).unwrap();
    for v in &mesh.vertices {
        writeln!(out, "v {} {} {}", fixed6(v.x), fixed6(v.y), fixed6(v.z)).unwrap();
    }
    let mut current = None;
    for face in &mesh.faces {
        if current != Some(face.len()) {
            current = Some(face.len());
            writeln!(out, "g {}", group_name(face.len())).unwrap();
        }
        let idx: Vec<String> = face.iter().map(|i| (i + 1).to_string()).collect();
        writeln!(out, "f {}", idx.join(" ")).unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ParsedObj {
    pub vertices: Vec<Vector3<f64>>,
    /// Zero-based index cycles.
    pub faces: Vec<Vec<usize>>,
    /// Group name of each face ("default" before any `g`).
    pub face_groups: Vec<String>,
}

/// Reads the subset of OBJ that [`export_obj`] writes: `v`, `g`, `f` and comments.
pub fn parse_obj(text: &str) -> Result<ParsedObj> {
    let mut parsed = ParsedObj::default();
    let mut group = "default".to_string();
    for (lineno, line) in text.lines().enumerate() {
        let err = |message: String| GeometryError::Parse { line: lineno + 1, message };
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None => {}
            Some(t) if t.starts_with('#') => {}
            Some("v") => {
                let coords = tokens
                    .map(|t| t.parse::<f64>().map_err(|e| err(format!("{t}: {e}"))))
                    .collect::<Result<Vec<_>>>()?;
                if coords.len() < 3 {
                    return Err(err("vertex needs three coordinates".into()));
                }
                parsed.vertices.push(Vector3::new(coords[0], coords[1], coords[2]));
            }
            Some("g") => group = tokens.collect::<Vec<_>>().join(" "),
            Some("f") => {
                let face = tokens
                    .map(|t| {
                        let head = t.split('/').next().unwrap_or(t);
                        match head.parse::<usize>() {
                            Ok(i) if i >= 1 => Ok(i - 1),
                            _ => Err(err(format!("bad face index {t}"))),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                if face.len() < 3 {
                    return Err(err("face needs at least three vertices".into()));
                }
                parsed.faces.push(face);
                parsed.face_groups.push(group.clone());
            }
            Some(other) => return Err(err(format!("unsupported statement '{other}'"))),
        }
    }
    Ok(parsed)
}
