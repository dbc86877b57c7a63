//! Simple graphs carrying a rotation system.
//!
//! A [`PlaneGraph`] stores, for every vertex, the cyclic order of its
//! neighbours. When the rotation system comes from an actual drawing in the
//! plane the graph is *embedded* and its faces can be traced; graphs read from
//! graph6 carry an arbitrary order and are flagged as not embedded.

mod cycles;
mod faces;
mod obstruction;

pub use cycles::{
    blocks, cycle_spectrum, cycle_spectrum_with_budget, has_cycle_of_length, is_bipartite, SpectrumError,
    DEFAULT_SPECTRUM_BUDGET,
};
pub use faces::{trace_all_faces, trace_faces, FaceWalk, Faces};
pub use obstruction::{respects_obstruction_set, ObstructionSet, ParseObstructionError};

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} lists itself as a neighbour")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} lists neighbour {neighbor} more than once")]
    DuplicateNeighbor { vertex: Vertex, neighbor: Vertex },
    #[error("vertex {from} lists {to}, but {to} does not list {from}")]
    AsymmetricAdjacency { from: Vertex, to: Vertex },
    #[error("vertex {vertex} lists unknown neighbour {neighbor}")]
    UnknownVertex { vertex: Vertex, neighbor: Vertex },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph carries no embedding")]
    NoEmbedding,
}

/// Simple undirected graph with a rotation system.
///
/// Darts (directed edges) are numbered so that the darts leaving `v` occupy
/// `offsets[v]..offsets[v + 1]`, in rotation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotations: Vec<Vec<Vertex>>,
    embedded: bool,
    offsets: Vec<usize>,
    tails: Vec<Vertex>,
    twins: Vec<usize>,
}

impl PlaneGraph {
    /// Validates a rotation system and builds an embedded graph.
    pub fn from_rotations(rotations: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        Self::build(rotations, true)
    }

    /// Builds a graph whose neighbour order carries no geometric meaning.
    pub fn abstract_graph(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut rotations = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::UnknownVertex { vertex: v, neighbor: u });
            }
            if v >= n {
                return Err(GraphError::UnknownVertex { vertex: u, neighbor: v });
            }
            rotations[u].push(v);
            rotations[v].push(u);
        }
        for r in &mut rotations {
            r.sort_unstable();
        }
        Self::build(rotations, false)
    }

    fn build(rotations: Vec<Vec<Vertex>>, embedded: bool) -> Result<Self, GraphError> {
        let n = rotations.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut tails = Vec::new();
        let mut position: HashMap<(Vertex, Vertex), usize> = HashMap::new();
        offsets.push(0);
        for (v, rot) in rotations.iter().enumerate() {
            for &u in rot {
                if u >= n {
                    return Err(GraphError::UnknownVertex { vertex: v, neighbor: u });
                }
                if u == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if position.insert((v, u), tails.len()).is_some() {
                    return Err(GraphError::DuplicateNeighbor { vertex: v, neighbor: u });
                }
                tails.push(v);
            }
            offsets.push(tails.len());
        }
        let mut twins = vec![0; tails.len()];
        for (d, &v) in tails.iter().enumerate() {
            let u = rotations[v][d - offsets[v]];
            match position.get(&(u, v)) {
                Some(&t) => twins[d] = t,
                None => return Err(GraphError::AsymmetricAdjacency { from: v, to: u }),
            }
        }
        Ok(PlaneGraph { rotations, embedded, offsets, tails, twins })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tails.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.tails.len()
    }

    pub fn is_embedded(&self) -> bool {
        self.embedded
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotations[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rotations.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Neighbours of `v` in rotation order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rotations
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.rotations.len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rotations[u].contains(&v)
    }

    /// Every edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.rotations.iter().enumerate().flat_map(|(u, rot)| rot.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn dart_tail(&self, d: usize) -> Vertex {
        self.tails[d]
    }

    pub fn dart_head(&self, d: usize) -> Vertex {
        self.tails[self.twins[d]]
    }

    pub fn dart_twin(&self, d: usize) -> usize {
        self.twins[d]
    }

    /// The dart `v -> rotation[v][i]`.
    pub fn dart(&self, v: Vertex, i: usize) -> usize {
        self.offsets[v] + i
    }

    /// Dart following `d` on its face: after arriving at `v` along `u -> v`,
    /// leave towards the successor of `u` in the rotation of `v`.
    pub fn next_dart_on_face(&self, d: usize) -> usize {
        let back = self.twins[d];
        let v = self.tails[back];
        let i = back - self.offsets[v];
        self.offsets[v] + (i + 1) % self.degree(v)
    }

    /// Connected components as vertex lists, each sorted.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.rotations[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// Embedded, connected, and `V - E + F = 2` for the traced faces.
    pub fn is_euler_certified(&self) -> bool {
        if self.vertex_count() == 0 {
            return false;
        }
        match trace_faces(self) {
            Ok(faces) => self.vertex_count() as i64 - self.edge_count() as i64 + faces.len() as i64 == 2,
            Err(_) => false,
        }
    }

    /// Subgraph induced on `keep` (in the given order), rotations restricted.
    pub fn induced(&self, keep: &[Vertex]) -> (PlaneGraph, Vec<Option<Vertex>>) {
        let mut map = vec![None; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = Some(i);
        }
        let rotations = keep.iter().map(|&v| self.rotations[v].iter().filter_map(|&u| map[u]).collect()).collect();
        let g = PlaneGraph::build(rotations, self.embedded).expect("restriction of a valid graph");
        (g, map)
    }

    /// Copy with the edge `uv` removed from both rotations.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> PlaneGraph {
        let mut rotations = self.rotations.clone();
        rotations[u].retain(|&w| w != v);
        rotations[v].retain(|&w| w != u);
        PlaneGraph::build(rotations, self.embedded).expect("edge deletion keeps validity")
    }

    /// Same adjacency with the embedding flag cleared.
    pub fn forget_embedding(&self) -> PlaneGraph {
        PlaneGraph { embedded: false, ..self.clone() }
    }
}
