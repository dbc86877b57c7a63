use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{PlaneGraph, Vertex};

/// Per-class defect caps `(d1, ..., dk)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct ColorSpec {
    caps: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseSpecError {
    #[error("a colour spec needs at least one class")]
    Empty,
    #[error("cannot parse cap {0:?}")]
    BadCap(String),
}

impl ColorSpec {
    pub fn new(caps: Vec<usize>) -> Result<Self, ParseSpecError> {
        if caps.is_empty() {
            return Err(ParseSpecError::Empty);
        }
        Ok(ColorSpec { caps })
    }

    /// `(d, ..., d)` with `k` classes.
    pub fn balanced(k: usize, d: usize) -> Self {
        assert!(k >= 1);
        ColorSpec { caps: vec![d; k] }
    }

    /// `(0, ..., 0, d)` with `k` classes.
    pub fn unbalanced(k: usize, d: usize) -> Self {
        assert!(k >= 1);
        let mut caps = vec![0; k];
        caps[k - 1] = d;
        ColorSpec { caps }
    }

    pub fn classes(&self) -> usize {
        self.caps.len()
    }

    pub fn cap(&self, class: usize) -> usize {
        self.caps[class]
    }

    pub fn caps(&self) -> &[usize] {
        &self.caps
    }

    /// Componentwise `self <= other` with the same number of classes.
    pub fn is_dominated_by(&self, other: &ColorSpec) -> bool {
        self.caps.len() == other.caps.len() && self.caps.iter().zip(&other.caps).all(|(a, b)| a <= b)
    }
}

impl TryFrom<Vec<usize>> for ColorSpec {
    type Error = ParseSpecError;
    fn try_from(caps: Vec<usize>) -> Result<Self, Self::Error> {
        ColorSpec::new(caps)
    }
}

impl From<ColorSpec> for Vec<usize> {
    fn from(s: ColorSpec) -> Self {
        s.caps
    }
}

impl FromStr for ColorSpec {
    type Err = ParseSpecError;

    /// `d1,d2,...,dk`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let caps = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| ParseSpecError::BadCap(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        ColorSpec::new(caps)
    }
}

impl fmt::Display for ColorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.caps.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Total assignment of vertices to 0-based classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    pub fn class_of(&self, v: Vertex) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Builds a colouring from a 1-based `{vertex: class}` map, as used in
    /// JSON files.
    pub fn from_one_based(n: usize, map: &BTreeMap<Vertex, usize>) -> Result<Self, ColoringError> {
        let mut classes = vec![usize::MAX; n];
        for (&v, &c) in map {
            if v >= n {
                return Err(ColoringError::UnknownVertex(v));
            }
            if c == 0 {
                return Err(ColoringError::ClassOutOfRange { vertex: v, class: 0 });
            }
            classes[v] = c - 1;
        }
        if let Some(v) = classes.iter().position(|&c| c == usize::MAX) {
            return Err(ColoringError::PartialColoring { missing: v });
        }
        Ok(Coloring(classes))
    }

    pub fn to_one_based(&self) -> BTreeMap<Vertex, usize> {
        self.0.iter().enumerate().map(|(v, &c)| (v, c + 1)).collect()
    }

    /// Number of neighbours of `v` sharing its class.
    pub fn same_class_degree(&self, g: &PlaneGraph, v: Vertex) -> usize {
        g.neighbors(v).iter().filter(|&&u| self.0[u] == self.0[v]).count()
    }
}

/// A vertex with more same-class neighbours than its class allows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: Vertex,
    /// 0-based class.
    pub class: usize,
    pub same_class_neighbors: usize,
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("colouring leaves vertex {missing} uncoloured")]
    PartialColoring { missing: Vertex },
    #[error("vertex {vertex} has class {class}, outside the spec's range")]
    ClassOutOfRange { vertex: Vertex, class: usize },
    #[error("colouring mentions unknown vertex {0}")]
    UnknownVertex(Vertex),
}

/// Lists every vertex whose class cap is exceeded; empty means valid.
pub fn verify_coloring(g: &PlaneGraph, coloring: &Coloring, spec: &ColorSpec) -> Result<Vec<Violation>, ColoringError> {
    if coloring.len() < g.vertex_count() {
        return Err(ColoringError::PartialColoring { missing: coloring.len() });
    }
    if coloring.len() > g.vertex_count() {
        return Err(ColoringError::UnknownVertex(g.vertex_count()));
    }
    if let Some((v, &c)) = coloring.0.iter().enumerate().find(|(_, &c)| c >= spec.classes()) {
        return Err(ColoringError::ClassOutOfRange { vertex: v, class: c });
    }
    Ok(g.vertices()
        .filter_map(|v| {
            let class = coloring.class_of(v);
            let same = coloring.same_class_degree(g, v);
            (same > spec.cap(class)).then_some(Violation {
                vertex: v,
                class,
                same_class_neighbors: same,
                cap: spec.cap(class),
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> PlaneGraph {
        PlaneGraph::abstract_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let s: ColorSpec = "0,0,1".parse().unwrap();
        assert_eq!(s.caps(), &[0, 0, 1]);
        assert_eq!(s.to_string(), "(0,0,1)");
        assert_eq!("(5, 5)".parse::<ColorSpec>().unwrap(), ColorSpec::balanced(2, 5));
        assert_eq!("".parse::<ColorSpec>(), Err(ParseSpecError::Empty));
        assert!("1,x".parse::<ColorSpec>().is_err());
        assert_eq!(ColorSpec::unbalanced(3, 117).caps(), &[0, 0, 117]);
    }

    #[test]
    fn c5_single_class() {
        let all_one = Coloring(vec![0; 5]);
        assert!(verify_coloring(&c5(), &all_one, &ColorSpec::balanced(2, 5)).unwrap().is_empty());
        let v = verify_coloring(&c5(), &all_one, &ColorSpec::balanced(2, 0)).unwrap();
        assert_eq!(v.len(), 5);
        assert!(v.iter().all(|x| x.same_class_neighbors == 2 && x.cap == 0));
    }

    #[test]
    fn k4_defective_class() {
        let k4 = PlaneGraph::abstract_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let col = Coloring(vec![0, 1, 2, 2]);
        assert!(verify_coloring(&k4, &col, &"0,0,1".parse().unwrap()).unwrap().is_empty());
    }

    #[test]
    fn errors() {
        let spec = ColorSpec::balanced(2, 0);
        assert_eq!(
            verify_coloring(&c5(), &Coloring(vec![0; 4]), &spec),
            Err(ColoringError::PartialColoring { missing: 4 })
        );
        assert_eq!(
            verify_coloring(&c5(), &Coloring(vec![0, 0, 2, 0, 0]), &spec),
            Err(ColoringError::ClassOutOfRange { vertex: 2, class: 2 })
        );
        let map = BTreeMap::from([(0, 1), (1, 2)]);
        assert_eq!(Coloring::from_one_based(3, &map), Err(ColoringError::PartialColoring { missing: 2 }));
    }

    #[test]
    fn one_based_round_trip() {
        let c = Coloring(vec![1, 0, 2]);
        assert_eq!(Coloring::from_one_based(3, &c.to_one_based()).unwrap(), c);
    }
}
