use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use super::{PlaneGraph, Vertex};

/// Default number of DFS extensions allowed for a full spectrum computation.
pub const DEFAULT_SPECTRUM_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("cycle enumeration budget exhausted; lengths found so far: {partial:?}")]
    BudgetExceeded { partial: BTreeSet<usize> },
}

/// Whether `g` contains a cycle of exactly `k` vertices as a subgraph.
///
/// Each cycle is searched from its smallest vertex (the anchor) and the path
/// only visits larger vertices. Paths are pruned when the BFS distance back to
/// the anchor exceeds the remaining length.
pub fn has_cycle_of_length(g: &PlaneGraph, k: usize) -> bool {
    if k < 3 || k > g.vertex_count() {
        return false;
    }
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    let mut dist = vec![usize::MAX; n];
    for anchor in 0..n {
        if g.degree(anchor) < 2 {
            continue;
        }
        anchor_distances(g, anchor, &mut dist);
        on_path[anchor] = true;
        let found = extend(g, anchor, anchor, 1, k, &dist, &mut on_path);
        on_path[anchor] = false;
        if found {
            return true;
        }
    }
    false
}

fn anchor_distances(g: &PlaneGraph, anchor: Vertex, dist: &mut [usize]) {
    dist.fill(usize::MAX);
    dist[anchor] = 0;
    let mut queue = VecDeque::from([anchor]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if u > anchor && dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
}

fn extend(
    g: &PlaneGraph,
    anchor: Vertex,
    cur: Vertex,
    len: usize,
    k: usize,
    dist: &[usize],
    on_path: &mut [bool],
) -> bool {
    if len == k {
        return g.has_edge(cur, anchor);
    }
    for &u in g.neighbors(cur) {
        if u <= anchor || on_path[u] || dist[u] == usize::MAX {
            continue;
        }
        // after stepping to u the path has len + 1 vertices; closing needs dist[u] more edges
        if len + 1 + dist[u] - 1 > k {
            continue;
        }
        on_path[u] = true;
        let found = extend(g, anchor, u, len + 1, k, dist, on_path);
        on_path[u] = false;
        if found {
            return true;
        }
    }
    false
}

/// Two-colourability by BFS.
pub fn is_bipartite(g: &PlaneGraph) -> bool {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if side[u] == u8::MAX {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if side[u] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Biconnected components with at least one cycle, as sorted vertex lists.
///
/// Bridges are dropped: they lie on no cycle.
pub fn blocks(g: &PlaneGraph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // frames: (vertex, parent, next neighbour index)
        let mut stack: Vec<(Vertex, Option<Vertex>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let u = g.neighbors(v)[*idx];
                *idx += 1;
                if Some(u) == parent {
                    continue;
                }
                if disc[u] == usize::MAX {
                    edge_stack.push((v, u));
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    stack.push((u, Some(v), 0));
                } else if disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(p) = parent {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut verts = Vec::new();
                        let mut edges = 0;
                        while let Some((a, b)) = edge_stack.pop() {
                            verts.push(a);
                            verts.push(b);
                            edges += 1;
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        if edges > 1 {
                            verts.sort_unstable();
                            verts.dedup();
                            out.push(verts);
                        }
                    }
                }
            }
        }
    }
    out
}

/// The set of cycle lengths occurring in `g`.
pub fn cycle_spectrum(g: &PlaneGraph) -> Result<BTreeSet<usize>, SpectrumError> {
    cycle_spectrum_with_budget(g, DEFAULT_SPECTRUM_BUDGET)
}

/// Enumerates every simple cycle block by block, counting DFS extensions
/// against `budget`.
pub fn cycle_spectrum_with_budget(g: &PlaneGraph, budget: u64) -> Result<BTreeSet<usize>, SpectrumError> {
    let mut lengths = BTreeSet::new();
    let mut steps = 0u64;
    for block in blocks(g) {
        let (h, _) = g.induced(&block);
        let n = h.vertex_count();
        let mut on_path = vec![false; n];
        let mut local = BTreeSet::new();
        for anchor in 0..n {
            on_path[anchor] = true;
            let ok = enumerate(&h, anchor, anchor, 1, &mut on_path, &mut local, &mut steps, budget);
            on_path[anchor] = false;
            if !ok {
                lengths.extend(local);
                return Err(SpectrumError::BudgetExceeded { partial: lengths });
            }
            if local.len() + 2 == n {
                // every length 3..=n already present in this block
                break;
            }
        }
        lengths.extend(local);
    }
    Ok(lengths)
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    g: &PlaneGraph,
    anchor: Vertex,
    cur: Vertex,
    len: usize,
    on_path: &mut [bool],
    lengths: &mut BTreeSet<usize>,
    steps: &mut u64,
    budget: u64,
) -> bool {
    for &u in g.neighbors(cur) {
        if u < anchor || on_path[u] {
            if u == anchor && len >= 3 {
                lengths.insert(len);
            }
            continue;
        }
        *steps += 1;
        if *steps > budget {
            return false;
        }
        on_path[u] = true;
        let ok = enumerate(g, anchor, u, len + 1, on_path, lengths, steps, budget);
        on_path[u] = false;
        if !ok {
            return false;
        }
    }
    true
}
