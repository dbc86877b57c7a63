use crate::graph::{PlaneGraph, Vertex};

/// Incremental construction of rotation systems through operations that keep
/// an embedding planar: gluing blocks at a vertex, adding bridges, and
/// thickening an edge into a bundle of parallel paths.
#[derive(Debug, Clone, Default)]
pub struct EmbeddingBuilder {
    rot: Vec<Vec<Vertex>>,
}

impl EmbeddingBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.rot.push(Vec::new());
        self.rot.len() - 1
    }

    /// Appends `u`/`v` at the end of each other's rotation. Planar when the
    /// two endpoints lie in different components (a bridge), or when one of
    /// them is new.
    pub fn add_bridge(&mut self, u: Vertex, v: Vertex) {
        self.rot[u].push(v);
        self.rot[v].push(u);
    }

    /// A cycle on fresh vertices, returned in cyclic order.
    pub fn add_cycle(&mut self, len: usize) -> Vec<Vertex> {
        assert!(len >= 3);
        let vs: Vec<Vertex> = (0..len).map(|_| self.add_vertex()).collect();
        for i in 0..len {
            let prev = vs[(i + len - 1) % len];
            let next = vs[(i + 1) % len];
            self.rot[vs[i]] = vec![prev, next];
        }
        vs
    }

    /// Copies `sub` in, identifying `sub_vertex` with `host`. The copy's
    /// rotation at the shared vertex is appended after `host`'s, which
    /// places the copy inside one angle at `host`.
    pub fn attach(&mut self, sub: &PlaneGraph, sub_vertex: Vertex, host: Vertex) -> Vec<Vertex> {
        let map: Vec<Vertex> = sub.vertices().map(|v| if v == sub_vertex { host } else { self.add_vertex() }).collect();
        for v in sub.vertices() {
            let mapped: Vec<Vertex> = sub.neighbors(v).iter().map(|&u| map[u]).collect();
            self.rot[map[v]].extend(mapped);
        }
        map
    }

    /// Copies `sub` in as a new component.
    pub fn add_disjoint(&mut self, sub: &PlaneGraph) -> Vec<Vertex> {
        let offset = self.rot.len();
        for v in sub.vertices() {
            self.rot.push(sub.neighbors(v).iter().map(|&u| u + offset).collect());
        }
        (offset..offset + sub.vertex_count()).collect()
    }

    /// Replaces the edge `xy` by `count` internally disjoint `x,y`-paths with
    /// `len` edges each. Returns the internal vertices of each path, from
    /// the `x` end.
    pub fn replace_edge_with_paths(&mut self, x: Vertex, y: Vertex, count: usize, len: usize) -> Vec<Vec<Vertex>> {
        let ix = self.position(x, y);
        let iy = self.position(y, x);
        let paths = self.new_paths(x, y, count, len);
        let (from_x, from_y) = Self::ends(&paths);
        self.rot[x].splice(ix..=ix, from_x);
        self.rot[y].splice(iy..=iy, from_y.into_iter().rev());
        paths
    }

    /// Adds `count` `x,y`-paths of `len` edges running alongside the existing
    /// edge `xy`, which is kept.
    pub fn add_paths_beside_edge(&mut self, x: Vertex, y: Vertex, count: usize, len: usize) -> Vec<Vec<Vertex>> {
        let ix = self.position(x, y);
        let iy = self.position(y, x);
        let paths = self.new_paths(x, y, count, len);
        let (from_x, from_y) = Self::ends(&paths);
        // bundle order at x: edge, then paths; at y the reverse
        self.rot[x].splice(ix + 1..ix + 1, from_x);
        self.rot[y].splice(iy..iy, from_y.into_iter().rev());
        paths
    }

    /// Adds `count` `x,y`-paths of `len >= 2` edges between two vertices that
    /// have no other edges yet.
    pub fn add_path_bundle(&mut self, x: Vertex, y: Vertex, count: usize, len: usize) -> Vec<Vec<Vertex>> {
        assert!(self.rot[x].is_empty() && self.rot[y].is_empty());
        let paths = self.new_paths(x, y, count, len);
        let (from_x, from_y) = Self::ends(&paths);
        self.rot[x].extend(from_x);
        self.rot[y].extend(from_y.into_iter().rev());
        paths
    }

    fn position(&self, x: Vertex, y: Vertex) -> usize {
        self.rot[x].iter().position(|&u| u == y).unwrap_or_else(|| panic!("no edge {x}-{y}"))
    }

    fn new_paths(&mut self, x: Vertex, y: Vertex, count: usize, len: usize) -> Vec<Vec<Vertex>> {
        assert!(len >= 2, "parallel paths need an internal vertex");
        (0..count)
            .map(|_| {
                let internal: Vec<Vertex> = (0..len - 1).map(|_| self.add_vertex()).collect();
                for (j, &m) in internal.iter().enumerate() {
                    let prev = if j == 0 { x } else { internal[j - 1] };
                    let next = if j + 1 == internal.len() { y } else { internal[j + 1] };
                    self.rot[m] = vec![prev, next];
                }
                internal
            })
            .collect()
    }

    fn ends(paths: &[Vec<Vertex>]) -> (Vec<Vertex>, Vec<Vertex>) {
        let from_x = paths.iter().map(|p| p[0]).collect();
        let from_y = paths.iter().map(|p| *p.last().unwrap()).collect();
        (from_x, from_y)
    }

    pub fn build(self) -> PlaneGraph {
        PlaneGraph::from_rotations(self.rot).expect("builder keeps rotations consistent")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundle_replacing_edge_stays_planar() {
        let mut b = EmbeddingBuilder::new();
        let c = b.add_cycle(5);
        b.replace_edge_with_paths(c[0], c[1], 3, 3);
        b.replace_edge_with_paths(c[2], c[3], 2, 2);
        let g = b.build();
        assert!(g.is_euler_certified());
        assert_eq!(g.vertex_count(), 5 + 6 + 2);
    }

    #[test]
    fn paths_beside_edge_stay_planar() {
        let mut b = EmbeddingBuilder::new();
        let x = b.add_vertex();
        let y = b.add_vertex();
        b.add_bridge(x, y);
        b.add_paths_beside_edge(x, y, 3, 2);
        let g = b.build();
        assert!(g.is_euler_certified());
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn attach_and_bridge() {
        let tri = PlaneGraph::from_rotations(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        let mut b = EmbeddingBuilder::new();
        let first = b.add_disjoint(&tri);
        b.attach(&tri, 0, first[0]);
        let other = b.add_disjoint(&tri);
        b.add_bridge(first[1], other[2]);
        let g = b.build();
        assert_eq!(g.vertex_count(), 8);
        assert!(g.is_euler_certified());
    }
}
