use std::fmt::Write as _;

use super::FormatError;
use crate::graph::{PlaneGraph, Vertex};

pub const ROTATION_HEADER: &str = "planar-rot 1";

/// Parses a rotation file.
///
/// ```text
/// planar-rot 1
/// # triangle
/// 0: 1 2
/// 1: 2 0
/// 2: 0 1
/// ```
///
/// Neighbours are listed in clockwise order. Vertex lines may come in any
/// order but the ids must be exactly `0..n`.
pub fn parse_rotation_file(text: &str) -> Result<PlaneGraph, FormatError> {
    let mut header_seen = false;
    // (line, vertex, [(neighbour, column)])
    type Entry = (usize, Vertex, Vec<(Vertex, usize)>);
    let mut entries: Vec<Entry> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        if !header_seen {
            let words: Vec<&str> = line.split_whitespace().collect();
            if words != ["planar-rot", "1"] {
                return Err(FormatError::at(line_no, 1, format!("expected header `{ROTATION_HEADER}`")));
            }
            header_seen = true;
            continue;
        }
        let colon = line.find(':').ok_or_else(|| FormatError::at(line_no, 1, "expected `id: neighbours...`"))?;
        let id_text = line[..colon].trim();
        let id_col = column_of(line, id_text, 0);
        let id: Vertex =
            id_text.parse().map_err(|_| FormatError::at(line_no, id_col, format!("bad vertex id {id_text:?}")))?;
        let mut nbrs = Vec::new();
        let mut search_from = colon + 1;
        for tok in line[colon + 1..].split_whitespace() {
            let col = column_of(line, tok, search_from);
            search_from = col - 1 + tok.len();
            let u: Vertex = tok.parse().map_err(|_| FormatError::at(line_no, col, format!("bad neighbour {tok:?}")))?;
            nbrs.push((u, col));
        }
        entries.push((line_no, id, nbrs));
    }
    if !header_seen {
        return Err(FormatError::at(1, 1, format!("missing header `{ROTATION_HEADER}`")));
    }

    let n = entries.len();
    let mut rotations: Vec<Option<Vec<Vertex>>> = vec![None; n];
    for (line_no, id, nbrs) in entries {
        if id >= n {
            return Err(FormatError::at(line_no, 1, format!("vertex id {id} out of range: ids must be 0..{n}")));
        }
        if rotations[id].is_some() {
            return Err(FormatError::at(line_no, 1, format!("vertex {id} listed twice")));
        }
        let mut rot = Vec::with_capacity(nbrs.len());
        for (u, col) in nbrs {
            if u >= n {
                return Err(FormatError::at(line_no, col, format!("unknown vertex {u}")));
            }
            rot.push(u);
        }
        rotations[id] = Some(rot);
    }
    let rotations = rotations.into_iter().map(|r| r.expect("ids are dense")).collect();
    Ok(PlaneGraph::from_rotations(rotations)?)
}

fn column_of(line: &str, token: &str, from: usize) -> usize {
    line[from..].find(token).map(|p| from + p + 1).unwrap_or(from + 1)
}

/// Writes the rotation system, one vertex per line in id order.
pub fn write_rotation_file(g: &PlaneGraph) -> String {
    let mut out = String::new();
    out.push_str(ROTATION_HEADER);
    out.push('\n');
    for v in g.vertices() {
        let _ = write!(out, "{v}:");
        for &u in g.neighbors(v) {
            let _ = write!(out, " {u}");
        }
        out.push('\n');
    }
    out
}
