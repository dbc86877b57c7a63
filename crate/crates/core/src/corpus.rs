//! Deterministic test corpora of plane graphs.
//!
//! Every generator returns a graph with a genuine planar rotation system:
//! either read off a straight-line drawing or built by insertions that keep
//! the embedding planar. Random families take an explicit seed.

use std::f64::consts::TAU;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gadgets::{self, Family};
use crate::graph::{has_cycle_of_length, PlaneGraph, Vertex};

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: PlaneGraph,
}

impl NamedGraph {
    fn new(name: impl Into<String>, graph: PlaneGraph) -> Self {
        NamedGraph { name: name.into(), graph }
    }
}

/// Rotation system of a straight-line drawing: neighbours sorted
/// counter-clockwise by angle.
pub fn from_drawing(points: &[(f64, f64)], edges: &[(Vertex, Vertex)]) -> PlaneGraph {
    let mut rot = vec![Vec::new(); points.len()];
    for &(u, v) in edges {
        rot[u].push(v);
        rot[v].push(u);
    }
    for (v, nbrs) in rot.iter_mut().enumerate() {
        let (x0, y0) = points[v];
        nbrs.sort_by(|&a, &b| {
            let ta = (points[a].1 - y0).atan2(points[a].0 - x0);
            let tb = (points[b].1 - y0).atan2(points[b].0 - x0);
            ta.total_cmp(&tb)
        });
    }
    PlaneGraph::from_rotations(rot).expect("drawing gives a valid rotation system")
}

fn on_circle(n: usize, radius: f64, phase: f64) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let t = phase + TAU * i as f64 / n as f64;
            (radius * t.cos(), radius * t.sin())
        })
        .collect()
}

fn ring(start: usize, n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (0..n).map(move |i| (start + i, start + (i + 1) % n))
}

pub fn cycle(n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let edges: Vec<_> = ring(0, n).collect();
    from_drawing(&on_circle(n, 1.0, 0.0), &edges)
}

pub fn path(n: usize) -> PlaneGraph {
    let points: Vec<_> = (0..n).map(|i| (i as f64, 0.0)).collect();
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    from_drawing(&points, &edges)
}

/// Centre 0 with `leaves` leaves.
pub fn star(leaves: usize) -> PlaneGraph {
    let mut points = vec![(0.0, 0.0)];
    points.extend(on_circle(leaves, 1.0, 0.0));
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    from_drawing(&points, &edges)
}

/// Hub 0 joined to every vertex of a rim cycle of length `n`.
pub fn wheel(n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let mut points = vec![(0.0, 0.0)];
    points.extend(on_circle(n, 1.0, 0.0));
    let mut edges: Vec<_> = ring(1, n).collect();
    edges.extend((1..=n).map(|i| (0, i)));
    from_drawing(&points, &edges)
}

/// Two concentric `n`-cycles joined by a perfect matching.
pub fn prism(n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let mut points = on_circle(n, 2.0, 0.0);
    points.extend(on_circle(n, 1.0, 0.0));
    let mut edges: Vec<_> = ring(0, n).chain(ring(n, n)).collect();
    edges.extend((0..n).map(|i| (i, n + i)));
    from_drawing(&points, &edges)
}

pub fn k4() -> PlaneGraph {
    gadgets::k4()
}

pub fn cube() -> PlaneGraph {
    prism(4)
}

pub fn octahedron() -> PlaneGraph {
    let mut points = on_circle(3, 4.0, 0.0);
    points.extend(on_circle(3, 1.0, TAU / 6.0));
    let mut edges: Vec<_> = ring(0, 3).chain(ring(3, 3)).collect();
    for i in 0..3 {
        edges.push((3 + i, i));
        edges.push((3 + i, (i + 1) % 3));
    }
    from_drawing(&points, &edges)
}

/// The dodecahedron: cubic, girth 5, twenty vertices.
pub fn dodecahedron() -> PlaneGraph {
    // rings: outer pentagon a, spokes b, zigzag partners c, inner pentagon d
    let phase = TAU / 4.0;
    let half = TAU / 10.0;
    let mut points = on_circle(5, 4.0, phase);
    points.extend(on_circle(5, 3.0, phase));
    points.extend(on_circle(5, 2.6, phase + half));
    points.extend(on_circle(5, 1.3, phase + half));
    let (a, b, c, d) = (0, 5, 10, 15);
    let mut edges: Vec<_> = ring(a, 5).chain(ring(d, 5)).collect();
    for i in 0..5 {
        edges.push((a + i, b + i));
        edges.push((b + i, c + i));
        edges.push((c + i, b + (i + 1) % 5));
        edges.push((c + i, d + i));
    }
    from_drawing(&points, &edges)
}

/// Uniform random recursive tree on `n` vertices.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> PlaneGraph {
    let mut rot = vec![Vec::new(); n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        rot[u].push(v);
        rot[v].push(u);
    }
    PlaneGraph::from_rotations(rot).expect("trees embed with any rotation")
}

/// Maximal outerplanar graph: a convex `n`-gon with a random triangulation.
pub fn random_outerplanar(n: usize, rng: &mut impl Rng) -> PlaneGraph {
    assert!(n >= 3);
    let mut edges: Vec<_> = ring(0, n).collect();
    let mut stack = vec![(0, n - 1)];
    while let Some((i, j)) = stack.pop() {
        if j - i < 2 {
            continue;
        }
        let k = rng.gen_range(i + 1..j);
        if k - i >= 2 {
            edges.push((i, k));
        }
        if j - k >= 2 {
            edges.push((k, j));
        }
        stack.push((i, k));
        stack.push((k, j));
    }
    from_drawing(&on_circle(n, 1.0, 0.0), &edges)
}

/// Random Apollonian triangulation: repeatedly stack a vertex into a
/// triangular face.
pub fn random_apollonian(n: usize, rng: &mut impl Rng) -> PlaneGraph {
    assert!(n >= 3);
    let mut rot: Vec<Vec<Vertex>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // faces (a, b, c) with c the successor of b in the rotation at a
    let mut faces = vec![(0, 1, 2), (0, 2, 1)];
    while rot.len() < n {
        let p = rot.len();
        let idx = rng.gen_range(0..faces.len());
        let (a, b, c) = faces.swap_remove(idx);
        for (x, before) in [(a, b), (b, c), (c, a)] {
            let pos = rot[x].iter().position(|&y| y == before).unwrap();
            rot[x].insert(pos + 1, p);
        }
        rot.push(vec![a, b, c]);
        faces.extend([(a, b, p), (b, c, p), (c, a, p)]);
    }
    PlaneGraph::from_rotations(rot).expect("stacking keeps the rotation system valid")
}

/// Some 4-cycle as `[a, b, c, d]` with edges `ab, bc, cd, da`.
pub fn find_c4(g: &PlaneGraph) -> Option<[Vertex; 4]> {
    for a in g.vertices() {
        let nbrs = g.neighbors(a);
        for (i, &b) in nbrs.iter().enumerate() {
            for &d in &nbrs[i + 1..] {
                let found = g.neighbors(b).iter().find(|&&c| c != a && g.has_edge(c, d));
                if let Some(&c) = found {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Deletes random edges of 4-cycles until none is left. Cycle edges are
/// never bridges, so connectivity is kept.
pub fn kill_c4(g: &PlaneGraph, rng: &mut impl Rng) -> PlaneGraph {
    let mut g = g.clone();
    while let Some(c) = find_c4(&g) {
        let i = rng.gen_range(0..4);
        g = g.without_edge(c[i], c[(i + 1) % 4]);
    }
    g
}

/// Replaces each edge `uv` by a path with `splits(u, v)` internal vertices,
/// keeping the rotation slots.
pub fn subdivide_with(g: &PlaneGraph, mut splits: impl FnMut(Vertex, Vertex) -> usize) -> PlaneGraph {
    let mut rot: Vec<Vec<Vertex>> = g.rotations().to_vec();
    for (u, v) in g.edges().collect::<Vec<_>>() {
        let k = splits(u, v);
        if k == 0 {
            continue;
        }
        let first = rot.len();
        for j in 0..k {
            let prev = if j == 0 { u } else { first + j - 1 };
            let next = if j + 1 == k { v } else { first + j + 1 };
            rot.push(vec![prev, next]);
        }
        let pu = rot[u].iter().position(|&w| w == v).unwrap();
        rot[u][pu] = first;
        let pv = rot[v].iter().position(|&w| w == u).unwrap();
        rot[v][pv] = first + k - 1;
    }
    let out = PlaneGraph::from_rotations(rot).expect("subdivision keeps validity");
    if g.is_embedded() {
        out
    } else {
        out.forget_embedding()
    }
}

/// Every edge subdivided `k` times.
pub fn subdivide(g: &PlaneGraph, k: usize) -> PlaneGraph {
    subdivide_with(g, |_, _| k)
}

pub fn is_c4_free(g: &PlaneGraph) -> bool {
    !has_cycle_of_length(g, 4)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Gadgets at parameters small enough for exhaustive checks.
pub fn small_gadgets(max_d: usize) -> Vec<NamedGraph> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for d in 0..=max_d {
            let lengths: &[Option<usize>] =
                if family.takes_length() { &[Some(1), Some(2), Some(3), Some(5)] } else { &[None] };
            for &l in lengths {
                if let Ok(gadget) = gadgets::generate(family, d, l) {
                    let name = match l {
                        Some(l) => format!("{family}({d},{l})"),
                        None => format!("{family}({d})"),
                    };
                    out.push(NamedGraph::new(name, gadget.graph));
                }
            }
        }
    }
    out
}

/// Connected plane graphs of assorted shapes, all gadgets with `D <= 1`
/// included.
pub fn structural(seed: u64) -> Vec<NamedGraph> {
    let mut r = rng(seed);
    let mut out = vec![
        NamedGraph::new("K4", k4()),
        NamedGraph::new("cube", cube()),
        NamedGraph::new("octahedron", octahedron()),
        NamedGraph::new("dodecahedron", dodecahedron()),
        NamedGraph::new("K2", path(2)),
    ];
    for n in [3, 4, 5, 8, 11] {
        out.push(NamedGraph::new(format!("C{n}"), cycle(n)));
    }
    for n in [3, 5, 7] {
        out.push(NamedGraph::new(format!("P{n}"), path(n)));
        out.push(NamedGraph::new(format!("star{n}"), star(n)));
    }
    for n in [3, 4, 6, 9] {
        out.push(NamedGraph::new(format!("wheel{n}"), wheel(n)));
        out.push(NamedGraph::new(format!("prism{n}"), prism(n)));
    }
    for i in 0..6 {
        let n = 6 + 7 * i;
        out.push(NamedGraph::new(format!("tree{n}"), random_tree(n, &mut r)));
        out.push(NamedGraph::new(format!("outerplanar{n}"), random_outerplanar(n, &mut r)));
        let tri = random_apollonian(n, &mut r);
        out.push(NamedGraph::new(format!("apollonian{n}-c4free"), kill_c4(&tri, &mut r)));
        out.push(NamedGraph::new(format!("apollonian{n}"), tri));
    }
    out.push(NamedGraph::new("dodecahedron/2", subdivide(&dodecahedron(), 1)));
    out.push(NamedGraph::new("wheel5/2", subdivide(&wheel(5), 1)));
    out.extend(small_gadgets(1));
    out
}

/// Planar graphs without 4-cycles, up to 200 vertices.
pub fn c4_free(seed: u64) -> Vec<NamedGraph> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for d in 0..=2 {
        for l in [3, 5, 7] {
            out.push(NamedGraph::new(format!("F({d},{l})"), gadgets::f(d, l).unwrap().graph));
            out.push(NamedGraph::new(format!("F'({d},{l})"), gadgets::f_prime(d, l).unwrap().graph));
        }
    }
    for d in 0..=4 {
        out.push(NamedGraph::new(format!("T({d})"), gadgets::t(d).graph));
        out.push(NamedGraph::new(format!("T0({d})"), gadgets::t0(d).graph));
    }
    out.push(NamedGraph::new("dodecahedron", dodecahedron()));
    for n in [3, 5, 6, 7, 9, 13] {
        out.push(NamedGraph::new(format!("C{n}"), cycle(n)));
    }
    let bases = [
        ("K4", k4()),
        ("cube", cube()),
        ("octahedron", octahedron()),
        ("dodecahedron", dodecahedron()),
        ("wheel6", wheel(6)),
        ("wheel12", wheel(12)),
        ("prism5", prism(5)),
        ("apollonian20", random_apollonian(20, &mut r)),
        ("apollonian40", random_apollonian(40, &mut r)),
    ];
    for (name, base) in &bases {
        for k in 1..=2 {
            out.push(NamedGraph::new(format!("{name}/{}", k + 1), subdivide(base, k)));
        }
        for i in 0..2 {
            let mixed = subdivide_with(base, |_, _| r.gen_range(0..=2));
            out.push(NamedGraph::new(format!("{name}/mixed{i}"), kill_c4(&mixed, &mut r)));
        }
    }
    for i in 0..30 {
        let n = 5 + (i * 13) % 190;
        let g = random_outerplanar(n, &mut r);
        out.push(NamedGraph::new(format!("outerplanar{n}-c4free"), kill_c4(&g, &mut r)));
    }
    for i in 0..30 {
        let n = 4 + (i * 17) % 190;
        let g = random_apollonian(n, &mut r);
        out.push(NamedGraph::new(format!("apollonian{n}-c4free"), kill_c4(&g, &mut r)));
    }
    for i in 0..10 {
        let n = 2 + i * 19;
        out.push(NamedGraph::new(format!("tree{n}"), random_tree(n, &mut r)));
    }
    // stars with triangles hanging off: high-degree centres
    for spokes in [6, 9, 14] {
        out.push(NamedGraph::new(format!("friendship{spokes}"), friendship(spokes)));
    }
    out.retain(|ng| ng.graph.vertex_count() <= 200);
    debug_assert!(out.iter().all(|ng| is_c4_free(&ng.graph)));
    out
}

/// `k` triangles sharing one vertex.
pub fn friendship(k: usize) -> PlaneGraph {
    let mut points = vec![(0.0, 0.0)];
    points.extend(on_circle(2 * k, 1.0, 0.0));
    let mut edges = Vec::new();
    for i in 0..k {
        let (a, b) = (1 + 2 * i, 2 + 2 * i);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    from_drawing(&points, &edges)
}

/// Plane graphs with at most 12 vertices, for exhaustive oracles.
pub fn small(seed: u64) -> Vec<NamedGraph> {
    let mut r = rng(seed);
    let mut out = vec![
        NamedGraph::new("K1", path(1)),
        NamedGraph::new("K4", k4()),
        NamedGraph::new("cube", cube()),
        NamedGraph::new("octahedron", octahedron()),
        NamedGraph::new("K4/2", subdivide(&k4(), 1)),
    ];
    for n in 3..=12 {
        out.push(NamedGraph::new(format!("C{n}"), cycle(n)));
    }
    for n in 2..=12 {
        out.push(NamedGraph::new(format!("P{n}"), path(n)));
    }
    for n in 2..=11 {
        out.push(NamedGraph::new(format!("star{n}"), star(n)));
    }
    for n in 3..=11 {
        out.push(NamedGraph::new(format!("wheel{n}"), wheel(n)));
    }
    for n in 3..=6 {
        out.push(NamedGraph::new(format!("prism{n}"), prism(n)));
    }
    for k in 1..=5 {
        out.push(NamedGraph::new(format!("friendship{k}"), friendship(k)));
    }
    for i in 0..150 {
        let n = 3 + i % 10;
        let name = |kind: &str| format!("{kind}{n}-{i}");
        match i % 5 {
            0 => out.push(NamedGraph::new(name("tree"), random_tree(n, &mut r))),
            1 => out.push(NamedGraph::new(name("outerplanar"), random_outerplanar(n, &mut r))),
            2 => out.push(NamedGraph::new(name("apollonian"), random_apollonian(n, &mut r))),
            3 => {
                let g = random_apollonian(n, &mut r);
                out.push(NamedGraph::new(name("apollonian-c4free"), kill_c4(&g, &mut r)));
            }
            _ => {
                let g = random_outerplanar(n, &mut r);
                let mut edges: Vec<_> = g.edges().collect();
                edges.shuffle(&mut r);
                let drop = r.gen_range(0..=edges.len() / 3);
                let mut h = g;
                for &(u, v) in &edges[..drop] {
                    h = h.without_edge(u, v);
                }
                out.push(NamedGraph::new(name("outerplanar-sparse"), h));
            }
        }
    }
    out.extend(small_gadgets(2).into_iter().filter(|ng| ng.graph.vertex_count() <= 12));
    out.retain(|ng| ng.graph.vertex_count() <= 12);
    out
}
