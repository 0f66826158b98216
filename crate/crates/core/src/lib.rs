//! Geometry of sphere-approximating polyhedra.
//!
//! The crate answers one practical question: how long must the common side of
//! the pentagon and hexagon panels be so that a truncated icosahedron ("soccer
//! ball", C60) covers a sphere of given radius? Around that solver sit the
//! supporting pieces:
//!
//! - [`polygon`]: regular n-gon areas and canonical vertex coordinates.
//! - [`catalog`]: the 5 Platonic and 13 Archimedean solids, Euler checks,
//!   circumscribed-sphere roundness and a brute-force convex hull oracle.
//! - [`solver`]: surface-matching and inscribed-fit edge solutions.
//! - [`fabrication`]: seam/pin budgets and SVG cut-template sheets.
//! - [`mesh`]: polygonal meshes of the solids and Wavefront OBJ output.

pub mod catalog;
pub mod error;
pub mod fabrication;
pub mod hull;
pub mod mesh;
pub mod polygon;
pub mod solver;

pub use catalog::{FaceInventory, Family, SolidRecord, SolidReport};
pub use error::{GeometryError, Result};
pub use fabrication::{MaterialBudget, SeamReport, TemplateSheet};
pub use mesh::{MeshModel, MeshScale};
pub use polygon::PolygonSpec;
pub use solver::{EdgeSolution, MethodComparison, SolveMethod, SphereSpec};
