use super::FormatError;
use crate::graph::PlaneGraph;

/// Parses the first graph6 record in `text` (an optional `>>graph6<<` prefix
/// is accepted). The result carries no embedding.
pub fn parse_graph6(text: &str) -> Result<PlaneGraph, FormatError> {
    let (line_no, line) = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches(['\r', '\n'])))
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| FormatError::at(1, 1, "empty graph6 input"))?;
    let (skip, body) = match line.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::at(line_no, skip + i + 1, format!("byte {b} outside graph6 range")));
        }
    }
    let (n, header_len) =
        decode_order(bytes).ok_or_else(|| FormatError::at(line_no, skip + 1, "truncated vertex count"))?;
    let data = &bytes[header_len..];
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if data.len() != needed {
        return Err(FormatError::at(
            line_no,
            skip + header_len + 1,
            format!("expected {needed} adjacency bytes for {n} vertices, found {}", data.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Ok(PlaneGraph::abstract_graph(n, &edges)?)
}

fn decode_order(bytes: &[u8]) -> Option<(usize, usize)> {
    let six = |bs: &[u8]| bs.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    match bytes {
        [126, 126, rest @ ..] if rest.len() >= 6 => Some((six(&rest[..6]), 8)),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => Some((six(&rest[..3]), 4)),
        [b, ..] if *b != 126 => Some(((*b - 63) as usize, 1)),
        _ => None,
    }
}

/// Encodes the adjacency of `g` (embedding is dropped).
pub fn write_graph6(g: &PlaneGraph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_k14() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert!(!g.is_embedded());
    }

    #[test]
    fn known_encodings() {
        // petgraph's reference: edges a-c, a-e, b-d, d-e on 5 vertices
        let g = PlaneGraph::abstract_graph(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        let k4 = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn large_order_header() {
        let g = PlaneGraph::abstract_graph(70, &[(0, 69)]).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        let h = parse_graph6(&s).unwrap();
        assert_eq!(h.vertex_count(), 70);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 69)]);
    }

    #[test]
    fn malformed() {
        assert!(matches!(parse_graph6("D?"), Err(FormatError::MalformedInput { column: 2, .. })));
        assert!(matches!(parse_graph6("D? {"), Err(FormatError::MalformedInput { column: 3, .. })));
        assert!(parse_graph6("").is_err());
    }
}
