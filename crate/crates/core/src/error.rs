use thiserror::Error;

pub type Result<T> = std::result::Result<T, GeometryError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    /// An input is outside the domain where the formula has meaning.
    #[error("domain error: {0}")]
    Domain(String),

    /// The face inventory cannot describe a closed polyhedral surface.
    #[error("invalid face inventory: {0}")]
    Inventory(String),

    /// The solid lacks the metric data or coordinates an operation needs.
    #[error("solid '{solid}' does not support {what}")]
    Capability { solid: String, what: String },

    #[error("unknown solid '{name}'; available: {}", available.join(", "))]
    Lookup { name: String, available: Vec<String> },

    /// Point set is degenerate (too few points, coplanar, ...).
    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("layout error: {0}")]
    Layout(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
