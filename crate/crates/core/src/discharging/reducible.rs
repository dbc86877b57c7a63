use serde::{Deserialize, Serialize};

use super::classify::{tag_face, FaceTag, UNBAL2_BIG, UNBAL3_BIG};
use super::{Element, Section};
use crate::graph::{trace_faces, PlaneGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReducibleKind {
    /// A vertex of degree 1.
    OneVertex,
    /// An edge whose endpoints both have degree at most 6.
    LowLowEdge,
    /// A vertex of degree 3.
    ThreeVertex,
    /// A 7+-vertex on more than `min(floor(d/2), d - 6)` terrible 3-faces.
    OverloadedTerrible,
    /// A vertex below the big threshold with no big neighbour
    /// (46 / 47 for `Unbal2`, 119 / 120 for `Unbal3`).
    NoBigNeighbour,
    /// A 2-vertex on two bad faces.
    TwoVertexOnTwoBadFaces,
    /// A 47+-vertex on more than `floor(d/2)` bad faces.
    OverloadedBad,
    /// A vertex of degree at most 2.
    TwoMinusVertex,
    /// An annoying 5-face adjacent only to annoying 3- and 5-faces and to
    /// at least three annoying 3-faces.
    AnnoyingFiveFace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleConfig {
    pub section: Section,
    pub kind: ReducibleKind,
    pub witness: Vec<Element>,
}

/// Every reducible configuration of `section` present in `g`.
///
/// Face-based kinds need an embedding; on graphs without one (or
/// disconnected ones) only the vertex and edge kinds are reported.
pub fn find_reducible(g: &PlaneGraph, section: Section) -> Vec<ReducibleConfig> {
    let mut out = Vec::new();
    let mut push = |kind, witness: Vec<Element>| out.push(ReducibleConfig { section, kind, witness });
    let faces = if g.is_embedded() && g.is_connected() { trace_faces(g).ok() } else { None };
    let tags: Vec<FaceTag> =
        faces.as_ref().map(|fs| fs.walks().iter().map(|w| tag_face(g, w, section)).collect()).unwrap_or_default();
    let deg = |v| g.degree(v);
    use Element::{Face, Vertex as V};

    match section {
        Section::Bal2 => {
            for v in g.vertices().filter(|&v| deg(v) == 1) {
                push(ReducibleKind::OneVertex, vec![V(v)]);
            }
            for (u, v) in g.edges().filter(|&(u, v)| deg(u) <= 6 && deg(v) <= 6) {
                push(ReducibleKind::LowLowEdge, vec![V(u), V(v)]);
            }
            for v in g.vertices().filter(|&v| deg(v) == 3) {
                push(ReducibleKind::ThreeVertex, vec![V(v)]);
            }
            if let Some(fs) = &faces {
                for v in g.vertices().filter(|&v| deg(v) >= 7) {
                    let terrible: Vec<usize> =
                        fs.faces_at(g, v).into_iter().filter(|&f| tags[f] == FaceTag::Terrible3).collect();
                    let d = deg(v);
                    if terrible.len() > (d / 2).min(d - 6) {
                        let mut w = vec![V(v)];
                        w.extend(terrible.into_iter().map(Face));
                        push(ReducibleKind::OverloadedTerrible, w);
                    }
                }
            }
        }
        Section::Unbal2 => {
            for v in g.vertices().filter(|&v| deg(v) == 1) {
                push(ReducibleKind::OneVertex, vec![V(v)]);
            }
            for v in g.vertices().filter(|&v| deg(v) < UNBAL2_BIG) {
                if g.neighbors(v).iter().all(|&u| deg(u) < UNBAL2_BIG) {
                    push(ReducibleKind::NoBigNeighbour, vec![V(v)]);
                }
            }
            if let Some(fs) = &faces {
                for v in g.vertices() {
                    let bad: Vec<usize> = fs.faces_at(g, v).into_iter().filter(|&f| tags[f].is_bad()).collect();
                    let d = deg(v);
                    if d == 2 && bad.len() >= 2 {
                        let mut w = vec![V(v)];
                        w.extend(bad.into_iter().map(Face));
                        push(ReducibleKind::TwoVertexOnTwoBadFaces, w);
                    } else if d >= UNBAL2_BIG && bad.len() > d / 2 {
                        let mut w = vec![V(v)];
                        w.extend(bad.into_iter().map(Face));
                        push(ReducibleKind::OverloadedBad, w);
                    }
                }
            }
        }
        Section::Unbal3 => {
            for v in g.vertices().filter(|&v| deg(v) <= 2) {
                push(ReducibleKind::TwoMinusVertex, vec![V(v)]);
            }
            for v in g.vertices().filter(|&v| deg(v) < UNBAL3_BIG) {
                if g.neighbors(v).iter().all(|&u| deg(u) < UNBAL3_BIG) {
                    push(ReducibleKind::NoBigNeighbour, vec![V(v)]);
                }
            }
            if let Some(fs) = &faces {
                for (f, w) in fs.walks().iter().enumerate() {
                    if w.degree() != 5 || tags[f] != FaceTag::Annoying {
                        continue;
                    }
                    let adj = fs.adjacent_faces(g, f);
                    let all_annoying =
                        adj.iter().all(|&h| tags[h] == FaceTag::Annoying && matches!(fs.get(h).degree(), 3 | 5));
                    let triangles: Vec<usize> = adj.iter().copied().filter(|&h| fs.get(h).degree() == 3).collect();
                    if all_annoying && triangles.len() >= 3 {
                        let mut wit = vec![Face(f)];
                        wit.extend(triangles.into_iter().map(Face));
                        push(ReducibleKind::AnnoyingFiveFace, wit);
                    }
                }
            }
        }
    }
    out
}
