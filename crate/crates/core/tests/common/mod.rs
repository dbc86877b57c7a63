//! Independent oracles and small constructions shared by the integration
//! tests. Nothing here calls into the search or cycle code under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use planar_defect::graph::{PlaneGraph, Vertex};

/// Tries all `k^n` class assignments, optionally with pinned vertices.
pub fn brute_colorable(g: &PlaneGraph, caps: &[usize], pinned: &[(Vertex, usize)]) -> bool {
    let n = g.vertex_count();
    let k = caps.len();
    let free: Vec<Vertex> = (0..n).filter(|v| pinned.iter().all(|&(p, _)| p != *v)).collect();
    let mut col = vec![0; n];
    for &(v, c) in pinned {
        col[v] = c;
    }
    loop {
        let ok = (0..n).all(|v| {
            let same = g.neighbors(v).iter().filter(|&&u| col[u] == col[v]).count();
            same <= caps[col[v]]
        });
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == free.len() {
                return false;
            }
            col[free[i]] += 1;
            if col[free[i]] < k {
                break;
            }
            col[free[i]] = 0;
            i += 1;
        }
    }
}

/// Lengths of all cycles, by extending paths from their smallest vertex.
pub fn brute_spectrum(g: &PlaneGraph) -> BTreeSet<usize> {
    fn extend(g: &PlaneGraph, start: Vertex, path: &mut Vec<Vertex>, on: &mut [bool], out: &mut BTreeSet<usize>) {
        let last = *path.last().unwrap();
        for &u in g.neighbors(last) {
            if u == start && path.len() >= 3 {
                out.insert(path.len());
            } else if u > start && !on[u] {
                on[u] = true;
                path.push(u);
                extend(g, start, path, on, out);
                path.pop();
                on[u] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut on = vec![false; g.vertex_count()];
    for s in g.vertices() {
        on[s] = true;
        extend(g, s, &mut vec![s], &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// Rotation system of an `n`-cycle on vertices `0..n`.
pub fn cycle_rotations(n: usize) -> Vec<Vec<Vertex>> {
    (0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect()
}

/// Appends `count` pendant leaves to each listed vertex.
pub fn with_leaves(mut rot: Vec<Vec<Vertex>>, leaves: &[(Vertex, usize)]) -> PlaneGraph {
    for &(v, count) in leaves {
        for _ in 0..count {
            let leaf = rot.len();
            rot.push(vec![v]);
            rot[v].push(leaf);
        }
    }
    PlaneGraph::from_rotations(rot).unwrap()
}

/// Index of the face whose boundary is exactly the given cycle.
pub fn face_on(walks: &[planar_defect::graph::FaceWalk], cycle: &[Vertex]) -> usize {
    let mut want = cycle.to_vec();
    want.sort_unstable();
    walks
        .iter()
        .position(|w| w.degree() == cycle.len() && w.distinct_vertices() == want)
        .expect("no face with that boundary")
}

/// Where a worked identity is read off the ledger.
pub enum Target {
    Vertex(Vertex),
    /// The face bounded by exactly this cycle.
    Face(Vec<Vertex>),
}

/// A local configuration whose element ends with charge exactly zero.
pub struct Identity {
    pub label: &'static str,
    /// Leading term of the identity: the element's initial charge.
    pub initial: i64,
    pub section: planar_defect::discharging::Section,
    pub graph: PlaneGraph,
    pub target: Target,
}

/// Constructed instances of the zero-charge identities used in the
/// discharging argument. Pendant leaves raise degrees without adding cycles.
pub fn worked_identities() -> Vec<Identity> {
    use planar_defect::discharging::Section::{Bal2, Unbal2, Unbal3};
    let c = cycle_rotations;
    vec![
        Identity {
            label: "3-6+2*(3/2)=0",
            initial: -3,
            section: Bal2,
            graph: with_leaves(c(3), &[(0, 6), (1, 6)]),
            target: Target::Face(vec![0, 1, 2]),
        },
        Identity {
            label: "2*2-6+2*1=0",
            initial: -2,
            section: Bal2,
            graph: with_leaves(c(3), &[(0, 6), (1, 6)]),
            target: Target::Vertex(2),
        },
        Identity {
            label: "3-6+3*1=0",
            initial: -3,
            section: Bal2,
            graph: with_leaves(c(3), &[(0, 2), (1, 2), (2, 2)]),
            target: Target::Face(vec![0, 1, 2]),
        },
        Identity {
            label: "5-6+2*(1/2)=0",
            initial: -1,
            section: Bal2,
            graph: with_leaves(c(5), &[(0, 6), (1, 6)]),
            target: Target::Face(vec![0, 1, 2, 3, 4]),
        },
        Identity {
            label: "-2+2*1=0",
            initial: -2,
            section: Unbal2,
            graph: with_leaves(vec![vec![1], vec![0, 2], vec![1]], &[(0, 46), (2, 46)]),
            target: Target::Vertex(1),
        },
        Identity {
            label: "-2+2*(1/2)+1=0",
            initial: -2,
            section: Unbal2,
            graph: with_leaves(c(7), &[(0, 45)]),
            target: Target::Vertex(1),
        },
        Identity {
            label: "-2+2*(1/4)+1/2+1=0",
            initial: -2,
            section: Unbal2,
            graph: with_leaves(c(7), &[(0, 45), (2, 1)]),
            target: Target::Vertex(1),
        },
        Identity {
            label: "-1+2*1-2*(1/2)=0",
            initial: -1,
            section: Unbal2,
            graph: with_leaves(c(5), &[(0, 45), (3, 45)]),
            target: Target::Face(vec![0, 1, 2, 3, 4]),
        },
        Identity {
            label: "-1+1+2*(1/4)-2*(1/4)=0",
            initial: -1,
            section: Unbal2,
            graph: with_leaves(c(5), &[(1, 45), (3, 1), (4, 1)]),
            target: Target::Face(vec![0, 1, 2, 3, 4]),
        },
        Identity {
            label: "-1+2*(3/4)-2*(1/4)=0",
            initial: -1,
            section: Unbal2,
            graph: with_leaves(c(5), &[(1, 1), (3, 45), (4, 45)]),
            target: Target::Face(vec![0, 1, 2, 3, 4]),
        },
        Identity {
            label: "-1+3*(1/3)=0",
            initial: -1,
            section: Unbal3,
            graph: with_leaves(c(3), &[(0, 2), (1, 2), (2, 2)]),
            target: Target::Face(vec![0, 1, 2]),
        },
    ]
}
