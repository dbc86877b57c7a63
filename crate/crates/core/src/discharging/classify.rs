use serde::{Deserialize, Serialize};

use super::Section;
use crate::graph::{FaceWalk, Faces, PlaneGraph};

/// Degree thresholds for "big" vertices.
pub(crate) const UNBAL2_BIG: usize = 47;
pub(crate) const UNBAL3_BIG: usize = 120;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceTag {
    /// A 3-face incident with a 2-vertex.
    Terrible3,
    /// 5-cycle face with degrees `(47+, 2, 2, 47+, 2)` around it.
    Bad5PatternA,
    /// 5-cycle face with degrees `(2, 47+, 2, m, m)`, `3 <= m <= 46`.
    Bad5PatternB,
    /// Exactly one incident 120+-vertex, every other incident vertex of degree 3.
    Annoying,
    Plain,
}

impl FaceTag {
    pub fn is_bad(self) -> bool {
        matches!(self, FaceTag::Bad5PatternA | FaceTag::Bad5PatternB)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceClass {
    pub face: usize,
    pub tag: FaceTag,
}

/// Tags every face with the classes that matter for `section`.
pub fn classify_faces(g: &PlaneGraph, faces: &Faces, section: Section) -> Vec<FaceClass> {
    faces.walks().iter().enumerate().map(|(face, w)| FaceClass { face, tag: tag_face(g, w, section) }).collect()
}

pub(crate) fn tag_face(g: &PlaneGraph, w: &FaceWalk, section: Section) -> FaceTag {
    match section {
        Section::Bal2 => {
            if w.degree() == 3 && w.vertices().any(|v| g.degree(v) == 2) {
                FaceTag::Terrible3
            } else {
                FaceTag::Plain
            }
        }
        Section::Unbal2 => bad_pattern(g, w),
        Section::Unbal3 => {
            let vs = w.distinct_vertices();
            let big = vs.iter().filter(|&&v| g.degree(v) >= UNBAL3_BIG).count();
            let threes = vs.iter().filter(|&&v| g.degree(v) == 3).count();
            if !vs.is_empty() && big == 1 && threes + 1 == vs.len() {
                FaceTag::Annoying
            } else {
                FaceTag::Plain
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Big,
    Two,
    Mid,
    Other,
}

fn kind(d: usize) -> Kind {
    match d {
        2 => Kind::Two,
        3..=46 => Kind::Mid,
        d if d >= UNBAL2_BIG => Kind::Big,
        _ => Kind::Other,
    }
}

fn bad_pattern(g: &PlaneGraph, w: &FaceWalk) -> FaceTag {
    use Kind::*;
    if w.degree() != 5 || !w.is_cycle() {
        return FaceTag::Plain;
    }
    let ks: Vec<Kind> = w.vertices().map(|v| kind(g.degree(v))).collect();
    let matches = |pat: [Kind; 5]| {
        (0..5).any(|s| (0..5).all(|i| ks[(s + i) % 5] == pat[i]) || (0..5).all(|i| ks[(s + 5 - i) % 5] == pat[i]))
    };
    if matches([Big, Two, Two, Big, Two]) {
        FaceTag::Bad5PatternA
    } else if matches([Two, Big, Two, Mid, Mid]) {
        FaceTag::Bad5PatternB
    } else {
        FaceTag::Plain
    }
}
