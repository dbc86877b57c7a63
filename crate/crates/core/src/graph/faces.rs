use super::{GraphError, PlaneGraph, Vertex};

/// Boundary walk of one face, as a cyclic sequence of darts `(tail, head)`.
///
/// Bridges show up twice, once in each direction, so the walk length is the
/// face degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub id: usize,
    pub darts: Vec<(Vertex, Vertex)>,
}

impl FaceWalk {
    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    /// Vertices visited by the walk, with repetition, in walk order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.darts.iter().map(|&(t, _)| t)
    }

    /// Number of subwalks `e v e'` of the walk passing through `v`.
    pub fn k_incidence(&self, v: Vertex) -> usize {
        self.darts.iter().filter(|&&(t, _)| t == v).count()
    }

    pub fn is_incident(&self, v: Vertex) -> bool {
        self.darts.iter().any(|&(t, _)| t == v)
    }

    /// Triples `(x, v, y)` of consecutive walk vertices centred at each
    /// occurrence of `v`.
    pub fn triples_at(&self, v: Vertex) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.darts.len();
        (0..n).filter(move |&i| self.darts[i].0 == v).map(move |i| {
            let prev = self.darts[(i + n - 1) % n].0;
            (prev, self.darts[i].1)
        })
    }

    /// Distinct incident vertices, sorted.
    pub fn distinct_vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.vertices().collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// True when the walk visits every vertex at most once.
    pub fn is_cycle(&self) -> bool {
        self.distinct_vertices().len() == self.degree()
    }
}

/// All faces of an embedded graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    walks: Vec<FaceWalk>,
    dart_face: Vec<usize>,
}

impl Faces {
    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    pub fn walks(&self) -> &[FaceWalk] {
        &self.walks
    }

    pub fn get(&self, f: usize) -> &FaceWalk {
        &self.walks[f]
    }

    /// Face to the side of dart `d` that the tracing convention assigns it.
    pub fn face_of_dart(&self, d: usize) -> usize {
        self.dart_face[d]
    }

    /// Faces incident with `v`, each listed once.
    pub fn faces_at(&self, g: &PlaneGraph, v: Vertex) -> Vec<usize> {
        let mut fs: Vec<usize> = (0..g.degree(v)).map(|i| self.dart_face[g.dart(v, i)]).collect();
        fs.sort_unstable();
        fs.dedup();
        fs
    }

    /// The (one or two) faces on either side of the edge `v -> rotation[v][i]`.
    pub fn faces_of_edge(&self, g: &PlaneGraph, v: Vertex, i: usize) -> (usize, usize) {
        let d = g.dart(v, i);
        (self.dart_face[d], self.dart_face[g.dart_twin(d)])
    }

    /// Faces sharing at least one edge with `f` (excluding `f` itself).
    pub fn adjacent_faces(&self, g: &PlaneGraph, f: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for d in 0..g.dart_count() {
            if self.dart_face[d] == f {
                let other = self.dart_face[g.dart_twin(d)];
                if other != f {
                    out.push(other);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Traces the faces of a connected embedded graph.
///
/// The walk leaves `v` towards the successor (in `v`'s rotation) of the
/// vertex it arrived from. A single isolated vertex has one face of degree 0.
pub fn trace_faces(g: &PlaneGraph) -> Result<Faces, GraphError> {
    if !g.is_embedded() {
        return Err(GraphError::NoEmbedding);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let mut faces = trace_all_faces(g)?;
    if g.vertex_count() == 1 {
        faces.walks.push(FaceWalk { id: 0, darts: Vec::new() });
    }
    Ok(faces)
}

/// Traces faces component by component; no connectivity requirement.
pub fn trace_all_faces(g: &PlaneGraph) -> Result<Faces, GraphError> {
    if !g.is_embedded() {
        return Err(GraphError::NoEmbedding);
    }
    const UNSET: usize = usize::MAX;
    let mut dart_face = vec![UNSET; g.dart_count()];
    let mut walks = Vec::new();
    for start in 0..g.dart_count() {
        if dart_face[start] != UNSET {
            continue;
        }
        let id = walks.len();
        let mut darts = Vec::new();
        let mut d = start;
        while dart_face[d] == UNSET {
            dart_face[d] = id;
            darts.push((g.dart_tail(d), g.dart_head(d)));
            d = g.next_dart_on_face(d);
        }
        debug_assert_eq!(d, start);
        walks.push(FaceWalk { id, darts });
    }
    Ok(Faces { walks, dart_face })
}
