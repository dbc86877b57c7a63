//! Text formats: rotation files (with embedding) and graph6 (without).

mod graph6;
mod rotation;

pub use graph6::{parse_graph6, write_graph6};
pub use rotation::{parse_rotation_file, write_rotation_file, ROTATION_HEADER};

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed input at line {line}, column {column}: {message}")]
    MalformedInput { line: usize, column: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl FormatError {
    pub(crate) fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        FormatError::MalformedInput { line, column, message: message.into() }
    }
}

/// Reads either format, choosing by content: rotation files start with the
/// `planar-rot` header (after comments), anything else is taken as graph6.
pub fn parse_graph(text: &str) -> Result<crate::graph::PlaneGraph, FormatError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("planar-rot") => parse_rotation_file(text),
        Some(_) => parse_graph6(text),
        None => Err(FormatError::at(1, 1, "empty input")),
    }
}
