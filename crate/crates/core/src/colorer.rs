//! Constructive `(5,5)`-colouring of planar graphs without 4-cycles.
//!
//! The graph is reduced step by step until it has no edges, always taking
//! the first applicable step in this order:
//!
//! 1. split into components (when at least two of them have edges),
//! 2. delete a 1-vertex,
//! 3. delete an edge whose endpoints both have degree at most 6,
//! 4. replace a 3-vertex `v` with neighbours `v1 v2 v3` by the paths
//!    `v1 u1 v2`, `v2 u2 v3`, `v3 u3 v1` through new vertices,
//! 5. delete a 2-vertex `w` on a terrible 3-face `wvu` when `v` lies on too
//!    many terrible 3-faces.
//!
//! The colouring of the reduced graph is then extended back step by step.
//! Deleted vertices stay in the graph as isolated vertices, so vertex ids
//! never change; the auxiliary vertices of step 4 are appended and dropped
//! again on extension.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::color::{decide_colorable, verify_coloring, Budget, ColorSpec, Coloring, Decision};
use crate::graph::{has_cycle_of_length, trace_all_faces, PlaneGraph, Vertex};

/// Same-class neighbours allowed in either class.
pub const CAP: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    ComponentSplit,
    DropOneVertex,
    DropEdgeLowLow,
    ReplaceThreeVertex,
    DropTerribleTwoVertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorerError {
    #[error("graph carries no plane embedding")]
    NotEmbedded,
    #[error("rotation system is not planar")]
    NotPlanar,
    #[error("graph contains a 4-cycle")]
    ContainsC4,
    #[error("no reduction applies to a graph with {vertices} non-isolated vertices and {edges} edges")]
    IrreducibleGraph { vertices: usize, edges: usize },
    #[error("reduction {kind:?} did not decrease the measure")]
    MeasureNotDecreasing { kind: ReductionKind },
    #[error("reduction {kind:?} broke planarity or created a 4-cycle")]
    EmbeddingBroken { kind: ReductionKind },
    #[error("no recolouring witness for terrible 2-vertex {vertex}")]
    ExtensionWitnessMissing { vertex: Vertex },
    #[error("fallback solver could not colour the irreducible graph")]
    FallbackFailed,
    #[error("extended colouring violates the caps at vertex {vertex}")]
    InvalidResult { vertex: Vertex },
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ColorerOptions {
    /// Colour irreducible graphs with the exact solver instead of failing.
    pub fallback_solver: bool,
    pub solver_budget: Budget,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ColorerStats {
    pub steps: BTreeMap<ReductionKind, usize>,
    pub fallback_used: usize,
}

/// A reduction and the data needed to undo it.
#[derive(Debug, Clone)]
enum Step {
    DropOneVertex {
        x: Vertex,
    },
    DropEdge {
        x: Vertex,
        y: Vertex,
    },
    /// `v` with neighbours `vs` in rotation order; `us[i]` joins `vs[i]`
    /// and `vs[i + 1]`.
    ReplaceThree {
        v: Vertex,
        vs: [Vertex; 3],
        us: [Vertex; 3],
    },
    DropTerrible {
        w: Vertex,
        v: Vertex,
        u: Vertex,
    },
}

impl Step {
    fn kind(&self) -> ReductionKind {
        match self {
            Step::DropOneVertex { .. } => ReductionKind::DropOneVertex,
            Step::DropEdge { .. } => ReductionKind::DropEdgeLowLow,
            Step::ReplaceThree { .. } => ReductionKind::ReplaceThreeVertex,
            Step::DropTerrible { .. } => ReductionKind::DropTerribleTwoVertex,
        }
    }
}

/// `(number of 3+-vertices, number of edges)`, compared lexicographically.
pub fn measure(g: &PlaneGraph) -> (usize, usize) {
    (g.vertices().filter(|&v| g.degree(v) >= 3).count(), g.edge_count())
}

/// Colours `g` with two classes of maximum induced degree 5.
pub fn color55(g: &PlaneGraph, opts: &ColorerOptions) -> Result<(Coloring, ColorerStats), ColorerError> {
    check_input(g)?;
    let mut stats = ColorerStats::default();
    let classes = color_rec(g, opts, &mut stats)?;
    let coloring = Coloring(classes);
    let spec = ColorSpec::balanced(2, CAP);
    let violations = verify_coloring(g, &coloring, &spec).expect("total colouring with two classes");
    if let Some(v) = violations.first() {
        return Err(ColorerError::InvalidResult { vertex: v.vertex });
    }
    Ok((coloring, stats))
}

fn check_input(g: &PlaneGraph) -> Result<(), ColorerError> {
    if !g.is_embedded() {
        return Err(ColorerError::NotEmbedded);
    }
    if !is_planar_embedding(g) {
        return Err(ColorerError::NotPlanar);
    }
    if has_cycle_of_length(g, 4) {
        return Err(ColorerError::ContainsC4);
    }
    Ok(())
}

/// Euler's formula holds on every component that has an edge.
fn is_planar_embedding(g: &PlaneGraph) -> bool {
    let Ok(faces) = trace_all_faces(g) else { return false };
    let nontrivial = g.components().into_iter().filter(|c| c.len() > 1).collect::<Vec<_>>();
    let v: usize = nontrivial.iter().map(Vec::len).sum();
    v as i64 - g.edge_count() as i64 + faces.len() as i64 == 2 * nontrivial.len() as i64
}

fn color_rec(g: &PlaneGraph, opts: &ColorerOptions, stats: &mut ColorerStats) -> Result<Vec<usize>, ColorerError> {
    let n = g.vertex_count();
    let mut cur = g.clone();
    let mut undo: Vec<(Step, PlaneGraph)> = Vec::new();
    let base = loop {
        if cur.edge_count() == 0 {
            break vec![0; cur.vertex_count()];
        }
        let with_edges: Vec<Vec<Vertex>> = cur.components().into_iter().filter(|c| c.len() > 1).collect();
        if with_edges.len() >= 2 {
            *stats.steps.entry(ReductionKind::ComponentSplit).or_default() += 1;
            let mut col = vec![0; cur.vertex_count()];
            for comp in with_edges {
                let (sub, _) = cur.induced(&comp);
                let sub_col = color_rec(&sub, opts, stats)?;
                for (i, &v) in comp.iter().enumerate() {
                    col[v] = sub_col[i];
                }
            }
            break col;
        }
        let Some((step, next)) = find_step(&cur)? else {
            if opts.fallback_solver {
                stats.fallback_used += 1;
                match decide_colorable(&cur, &ColorSpec::balanced(2, CAP), opts.solver_budget).decision {
                    Decision::Colorable(c) => break c.0,
                    _ => return Err(ColorerError::FallbackFailed),
                }
            }
            let vertices = cur.vertices().filter(|&v| cur.degree(v) > 0).count();
            return Err(ColorerError::IrreducibleGraph { vertices, edges: cur.edge_count() });
        };
        if measure(&next) >= measure(&cur) {
            return Err(ColorerError::MeasureNotDecreasing { kind: step.kind() });
        }
        *stats.steps.entry(step.kind()).or_default() += 1;
        undo.push((step, std::mem::replace(&mut cur, next)));
    };
    let mut col = base;
    for (step, before) in undo.into_iter().rev() {
        extend(&step, &before, &mut col)?;
    }
    col.truncate(n);
    Ok(col)
}

fn find_step(g: &PlaneGraph) -> Result<Option<(Step, PlaneGraph)>, ColorerError> {
    let deg = |v| g.degree(v);
    if let Some(x) = g.vertices().find(|&v| deg(v) == 1) {
        let y = g.neighbors(x)[0];
        return Ok(Some((Step::DropOneVertex { x }, g.without_edge(x, y))));
    }
    if let Some((x, y)) = g.edges().find(|&(x, y)| deg(x) <= 6 && deg(y) <= 6) {
        return Ok(Some((Step::DropEdge { x, y }, g.without_edge(x, y))));
    }
    if let Some(v) = g.vertices().find(|&v| deg(v) == 3) {
        return replace_three(g, v).map(Some);
    }
    Ok(drop_terrible(g))
}

fn replace_three(g: &PlaneGraph, v: Vertex) -> Result<(Step, PlaneGraph), ColorerError> {
    let n = g.vertex_count();
    let nb = g.neighbors(v);
    let vs = [nb[0], nb[1], nb[2]];
    let us = [n, n + 1, n + 2];
    let mut rot: Vec<Vec<Vertex>> = g.rotations().to_vec();
    rot[v].clear();
    for i in 0..3 {
        let slot = rot[vs[i]].iter().position(|&x| x == v).expect("symmetric adjacency");
        rot[vs[i]].splice(slot..=slot, [us[i], us[(i + 2) % 3]]);
    }
    for i in 0..3 {
        rot.push(vec![vs[i], vs[(i + 1) % 3]]);
    }
    let kind = ReductionKind::ReplaceThreeVertex;
    let next = PlaneGraph::from_rotations(rot).map_err(|_| ColorerError::EmbeddingBroken { kind })?;
    if !is_planar_embedding(&next) || has_cycle_of_length(&next, 4) {
        return Err(ColorerError::EmbeddingBroken { kind });
    }
    Ok((Step::ReplaceThree { v, vs, us }, next))
}

fn drop_terrible(g: &PlaneGraph) -> Option<(Step, PlaneGraph)> {
    let faces = trace_all_faces(g).ok()?;
    let terrible: Vec<bool> =
        faces.walks().iter().map(|w| w.degree() == 3 && w.vertices().any(|x| g.degree(x) == 2)).collect();
    for v in g.vertices().filter(|&v| g.degree(v) >= 7) {
        let d = g.degree(v);
        let at_v: Vec<usize> = faces.faces_at(g, v).into_iter().filter(|&f| terrible[f]).collect();
        if at_v.len() <= (d / 2).min(d - 6) {
            continue;
        }
        let tri = faces.get(at_v[0]);
        let w = tri.vertices().find(|&x| x != v && g.degree(x) == 2)?;
        let u = tri.vertices().find(|&x| x != v && x != w)?;
        let next = g.without_edge(w, v).without_edge(w, u);
        return Some((Step::DropTerrible { w, v, u }, next));
    }
    None
}

fn same(g: &PlaneGraph, col: &[usize], v: Vertex) -> usize {
    g.neighbors(v).iter().filter(|&&x| col[x] == col[v]).count()
}

/// Undoes one step. `before` is the graph the step was applied to; `col`
/// colours the reduced graph on entry and `before` on exit.
fn extend(step: &Step, before: &PlaneGraph, col: &mut Vec<usize>) -> Result<(), ColorerError> {
    match *step {
        Step::DropOneVertex { x } => {
            let y = before.neighbors(x)[0];
            col[x] = 1 - col[y];
        }
        Step::DropEdge { x, y } => {
            if col[x] == col[y] {
                // saturation is judged without the edge xy
                let sx = same(before, col, x) - 1;
                let sy = same(before, col, y) - 1;
                if sx == CAP {
                    col[x] = 1 - col[x];
                }
                if sy == CAP {
                    col[y] = 1 - col[y];
                }
            }
        }
        Step::ReplaceThree { v, vs, us } => {
            let c = vs.map(|x| col[x]);
            col[v] = if c[0] == c[1] && c[1] == c[2] {
                1 - c[0]
            } else {
                let odd = (0..3).find(|&i| c[i] != c[(i + 1) % 3] && c[i] != c[(i + 2) % 3]).unwrap();
                let a = c[odd];
                if col[us[odd]] == a || col[us[(odd + 2) % 3]] == a {
                    a
                } else {
                    1 - a
                }
            };
            col.truncate(us[0]);
        }
        Step::DropTerrible { w, v, u } => {
            if col[u] == col[v] {
                col[w] = 1 - col[v];
            } else {
                let b = col[v];
                // w is not yet a same-class neighbour of v
                let saturated = before.neighbors(v).iter().filter(|&&x| x != w && col[x] == b).count() >= CAP;
                col[w] = b;
                if saturated {
                    let x = before
                        .neighbors(v)
                        .iter()
                        .copied()
                        .find(|&x| {
                            x != w
                                && before.degree(x) == 2
                                && col[x] == b
                                && before.neighbors(x).iter().any(|&y| y != v && col[y] == b && before.has_edge(y, v))
                        })
                        .ok_or(ColorerError::ExtensionWitnessMissing { vertex: w })?;
                    col[x] = 1 - b;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::{verify_coloring, ColorSpec};

    fn check(g: &PlaneGraph) -> ColorerStats {
        let (c, stats) = color55(g, &ColorerOptions::default()).unwrap();
        assert!(verify_coloring(g, &c, &ColorSpec::balanced(2, CAP)).unwrap().is_empty());
        stats
    }

    fn cycle(n: usize) -> PlaneGraph {
        PlaneGraph::from_rotations((0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect()).unwrap()
    }

    #[test]
    fn small_graphs() {
        check(&cycle(5));
        check(&PlaneGraph::from_rotations(vec![vec![]]).unwrap());
        check(&PlaneGraph::from_rotations(vec![]).unwrap());
    }

    #[test]
    fn rejects_c4() {
        assert_eq!(color55(&cycle(4), &ColorerOptions::default()).unwrap_err(), ColorerError::ContainsC4);
        assert_eq!(
            color55(&cycle(5).forget_embedding(), &ColorerOptions::default()).unwrap_err(),
            ColorerError::NotEmbedded
        );
    }

    /// Vertex 0 on `t` triangles `(0, 2i + 1, 2i + 2)` whose other two
    /// vertices have degree 2.
    fn terrible_fan(t: usize) -> PlaneGraph {
        let mut rot: Vec<Vec<Vertex>> = vec![vec![]];
        for _ in 0..t {
            let tip = rot.len();
            let hub = tip + 1;
            rot.push(vec![0, hub]);
            rot.push(vec![tip, 0]);
            rot[0].extend([tip, hub]);
        }
        PlaneGraph::from_rotations(rot).unwrap()
    }

    #[test]
    fn reductions_on_a_fan() {
        let s = check(&terrible_fan(5));
        assert!(s.steps.values().sum::<usize>() > 0);
    }

    #[test]
    fn drop_edge_flips_saturated_endpoints() {
        // x and y share class 0; each has five further class-0 neighbours
        let mut edges = vec![(0, 1)];
        for i in 0..5 {
            edges.push((0, 2 + i));
            edges.push((1, 7 + i));
        }
        let g = PlaneGraph::abstract_graph(12, &edges).unwrap();
        let mut col = vec![0; 12];
        extend(&Step::DropEdge { x: 0, y: 1 }, &g, &mut col).unwrap();
        assert_eq!((col[0], col[1]), (1, 1));
        assert!(verify_coloring(&g, &Coloring(col), &ColorSpec::balanced(2, CAP)).unwrap().is_empty());
    }

    #[test]
    fn drop_edge_flips_single_saturated_endpoint() {
        let mut edges = vec![(0, 1)];
        for i in 0..5 {
            edges.push((0, 2 + i));
        }
        edges.push((1, 7));
        let g = PlaneGraph::abstract_graph(8, &edges).unwrap();
        let mut col = vec![0; 8];
        extend(&Step::DropEdge { x: 0, y: 1 }, &g, &mut col).unwrap();
        assert_eq!((col[0], col[1]), (1, 0));
        assert!(verify_coloring(&g, &Coloring(col), &ColorSpec::balanced(2, CAP)).unwrap().is_empty());
    }

    #[test]
    fn drop_terrible_uses_flip_witness() {
        let g = terrible_fan(4);
        // w = 1, u = 2; v = 0 in class 0 with exactly five class-0 neighbours besides w
        let mut col = vec![0; g.vertex_count()];
        col[2] = 1;
        col[4] = 1;
        extend(&Step::DropTerrible { w: 1, v: 0, u: 2 }, &g, &mut col).unwrap();
        assert_eq!(col[1], 0);
        // the triangle (0, 5, 6) is the first with both other vertices in class 0
        assert_eq!(col[5], 1);
        assert!(verify_coloring(&g, &Coloring(col), &ColorSpec::balanced(2, CAP)).unwrap().is_empty());
    }

    #[test]
    fn drop_terrible_unsaturated_and_equal_cases() {
        let g = terrible_fan(3);
        let mut col = vec![1, 0, 0, 0, 0, 0, 0];
        extend(&Step::DropTerrible { w: 1, v: 0, u: 2 }, &g, &mut col).unwrap();
        assert_eq!(col[1], 1);
        let mut col = vec![0; 7];
        extend(&Step::DropTerrible { w: 1, v: 0, u: 2 }, &g, &mut col).unwrap();
        assert_eq!(col[1], 1);
    }

    #[test]
    fn replace_three_extension_cases() {
        // v = 0 adjacent to 1, 2, 3; auxiliary u's are 4, 5, 6
        let step = Step::ReplaceThree { v: 0, vs: [1, 2, 3], us: [4, 5, 6] };
        let g = PlaneGraph::abstract_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        for pattern in 0..(1 << 6) {
            let mut col: Vec<usize> = (0..7).map(|i| if i == 0 { 0 } else { (pattern >> (i - 1)) & 1 }).collect();
            extend(&step, &g, &mut col).unwrap();
            assert_eq!(col.len(), 4);
            assert!(same(&g, &col, 0) <= 2);
        }
    }
}
