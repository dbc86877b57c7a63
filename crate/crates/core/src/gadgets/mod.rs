//! Non-colourable constructions witnessing which cycle lengths must be
//! forbidden, each with a planar rotation system and machine-checkable claims.
//!
//! Families and sizes (`p = 2D + 1` parallel paths per thickened edge):
//!
//! | family | vertices | edges |
//! |--------|----------|-------|
//! | `H2(D)` | `p + 2` | `2p` |
//! | `H1(D, l)` | `l + 1 + l p` | `2 l p + 1` |
//! | `H(D, l)` | `1 + (D + 1)(|H1| - 1)` | `(D + 1) ||H1||` |
//! | `F1(D)` | `2 + 2p` | `3p` |
//! | `Fo(D, l)`, `r = (l + 1) / 2` | `l + 2 r p` | `l - r + 3 r p` |
//! | `Fe(D, l)`, `r = (l - 1) / 2` | `l + 2 r p` | `l - r + 3 r p` |
//! | `F(D, l)` | `2 |Fo|` | `2 ||Fo|| + 1` |
//! | `F'(D, l)` | `(D + 2) |Fe|` | `(D + 2) ||Fe|| + D + 1` |
//! | `T0(D)` | `2D + 3` | `3(D + 1)` |
//! | `T(D)` | `2 |T0|` | `2 ||T0|| + 1` |
//! | `X0(D)` | `3D + 4` | `6(D + 1)` |
//! | `X(D)` | `3 |X0|` | `3 ||X0|| + 3` |

mod builder;
mod verify;

pub use builder::EmbeddingBuilder;
pub use verify::{excess_lengths, verify_descriptor, ClaimResult, ClaimStatus, VerificationReport, VerifyOptions};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::color::ColorSpec;
use crate::graph::{PlaneGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    H2,
    H1,
    H,
    F1,
    Fo,
    Fe,
    F,
    #[serde(rename = "Fprime")]
    FPrime,
    T0,
    T,
    X0,
    X,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::H2,
        Family::H1,
        Family::H,
        Family::F1,
        Family::Fo,
        Family::Fe,
        Family::F,
        Family::FPrime,
        Family::T0,
        Family::T,
        Family::X0,
        Family::X,
    ];

    pub fn takes_length(self) -> bool {
        matches!(self, Family::H1 | Family::H | Family::Fo | Family::Fe | Family::F | Family::FPrime)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::H2 => "H2",
            Family::H1 => "H1",
            Family::H => "H",
            Family::F1 => "F1",
            Family::Fo => "Fo",
            Family::Fe => "Fe",
            Family::F => "F",
            Family::FPrime => "Fprime",
            Family::T0 => "T0",
            Family::T => "T",
            Family::X0 => "X0",
            Family::X => "X",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = GadgetError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let f = match s {
            "H2" => Family::H2,
            "H1" => Family::H1,
            "H" => Family::H,
            "F1" => Family::F1,
            "Fo" => Family::Fo,
            "Fe" => Family::Fe,
            "F" => Family::F,
            "Fprime" | "F'" | "Fp" => Family::FPrime,
            "T0" => Family::T0,
            "T" => Family::T,
            "X0" => Family::X0,
            "X" => Family::X,
            other => return Err(GadgetError::UnknownFamily(other.to_string())),
        };
        Ok(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("unknown gadget family {0:?}")]
    UnknownFamily(String),
}

/// Claimed set of cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "relation", content = "lengths", rename_all = "snake_case")]
pub enum SpectrumClaim {
    SubsetOf(BTreeSet<usize>),
    Exactly(BTreeSet<usize>),
}

impl SpectrumClaim {
    pub fn holds_for(&self, spectrum: &BTreeSet<usize>) -> bool {
        match self {
            SpectrumClaim::SubsetOf(s) => spectrum.is_subset(s),
            SpectrumClaim::Exactly(s) => spectrum == s,
        }
    }
}

/// Claim that no `spec`-colouring exists once the `pinned` vertices get the
/// given (0-based) classes. An empty `pinned` list claims plain infeasibility.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringClaim {
    pub spec: ColorSpec,
    pub pinned: Vec<(Vertex, usize)>,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetDescriptor {
    pub family: Family,
    #[serde(rename = "D")]
    pub d: usize,
    pub l: Option<usize>,
    pub vertices: usize,
    pub edges: usize,
    pub distinguished: BTreeMap<String, Vertex>,
    pub spectrum: SpectrumClaim,
    pub coloring_claims: Vec<ColoringClaim>,
}

impl GadgetDescriptor {
    /// The plain infeasibility claim, if the family makes one.
    pub fn infeasible_spec(&self) -> Option<&ColorSpec> {
        self.coloring_claims.iter().find(|c| c.pinned.is_empty()).map(|c| &c.spec)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: PlaneGraph,
    pub descriptor: GadgetDescriptor,
}

/// Closed-form `(vertices, edges)` of a family member.
pub fn expected_size(family: Family, d: usize, l: usize) -> (usize, usize) {
    let p = 2 * d + 1;
    let h1 = (l + 1 + l * p, 2 * l * p + 1);
    let thick = |r: usize| (l + 2 * r * p, l - r + 3 * r * p);
    let fo = thick(l.div_ceil(2));
    let fe = thick(l.saturating_sub(1) / 2);
    let t0 = (2 * d + 3, 3 * (d + 1));
    let x0 = (3 * d + 4, 6 * (d + 1));
    match family {
        Family::H2 => (p + 2, 2 * p),
        Family::H1 => h1,
        Family::H => (1 + (d + 1) * (h1.0 - 1), (d + 1) * h1.1),
        Family::F1 => (2 + 2 * p, 3 * p),
        Family::Fo => fo,
        Family::Fe => fe,
        Family::F => (2 * fo.0, 2 * fo.1 + 1),
        Family::FPrime => ((d + 2) * fe.0, (d + 2) * fe.1 + d + 1),
        Family::T0 => t0,
        Family::T => (2 * t0.0, 2 * t0.1 + 1),
        Family::X0 => x0,
        Family::X => (3 * x0.0, 3 * x0.1 + 3),
    }
}

/// Builds a family member. `l` is required (and validated) for the families
/// that take a cycle length.
pub fn generate(family: Family, d: usize, l: Option<usize>) -> Result<Gadget, GadgetError> {
    let need_l = || l.ok_or_else(|| GadgetError::InvalidParam(format!("{family} needs l")));
    match family {
        Family::H2 => Ok(h2(d)),
        Family::H1 => h1(d, need_l()?),
        Family::H => h(d, need_l()?),
        Family::F1 => Ok(f1(d)),
        Family::Fo => fo(d, need_l()?),
        Family::Fe => fe(d, need_l()?),
        Family::F => f(d, need_l()?),
        Family::FPrime => f_prime(d, need_l()?),
        Family::T0 => Ok(t0(d)),
        Family::T => Ok(t(d)),
        Family::X0 => Ok(x0(d)),
        Family::X => Ok(x(d)),
    }
}

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

fn finish(
    b: EmbeddingBuilder,
    family: Family,
    d: usize,
    l: Option<usize>,
    distinguished: &[(&str, Vertex)],
    spectrum: SpectrumClaim,
    coloring_claims: Vec<ColoringClaim>,
) -> Gadget {
    let graph = b.build();
    let descriptor = GadgetDescriptor {
        family,
        d,
        l,
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        distinguished: distinguished.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        spectrum,
        coloring_claims,
    };
    Gadget { graph, descriptor }
}

fn infeasible(spec: ColorSpec) -> ColoringClaim {
    let statement = format!("not {spec}-colourable");
    ColoringClaim { spec, pinned: Vec::new(), statement }
}

fn pinned(spec: ColorSpec, pins: &[(Vertex, usize)], statement: String) -> ColoringClaim {
    ColoringClaim { spec, pinned: pins.to_vec(), statement }
}

fn check_odd_length(l: usize) -> Result<(), GadgetError> {
    if l < 3 || l.is_multiple_of(2) {
        return Err(GadgetError::InvalidParam(format!("l must be odd and at least 3, got {l}")));
    }
    Ok(())
}

/// `2D + 1` internally disjoint `x,y`-paths of length 2.
pub fn h2(d: usize) -> Gadget {
    let mut b = EmbeddingBuilder::new();
    let x = b.add_vertex();
    let y = b.add_vertex();
    b.add_path_bundle(x, y, 2 * d + 1, 2);
    let spec = ColorSpec::balanced(2, d);
    let claims = vec![
        pinned(spec.clone(), &[(x, 0), (y, 1)], "x and y share a class".into()),
        pinned(spec, &[(x, 1), (y, 0)], "x and y share a class".into()),
    ];
    finish(b, Family::H2, d, None, &[("x", x), ("y", y)], SpectrumClaim::SubsetOf(set(&[4])), claims)
}

fn build_h1(b: &mut EmbeddingBuilder, d: usize, l: usize) -> Vec<Vertex> {
    let p = 2 * d + 1;
    if l == 1 {
        // degenerate cycle v1 v2: the edge v1v2 is thickened, the closing edge kept
        let v1 = b.add_vertex();
        let v2 = b.add_vertex();
        b.add_bridge(v1, v2);
        b.add_paths_beside_edge(v1, v2, p, 2);
        return vec![v1, v2];
    }
    let cycle = b.add_cycle(l + 1);
    for i in 0..l {
        b.replace_edge_with_paths(cycle[i], cycle[i + 1], p, 2);
    }
    cycle
}

/// A cycle `v1 ... v(l+1)` with each edge `v_i v_(i+1)`, `i <= l`, thickened
/// into a copy of `H2`; the edge `v(l+1) v1` is kept.
pub fn h1(d: usize, l: usize) -> Result<Gadget, GadgetError> {
    if l == 0 {
        return Err(GadgetError::InvalidParam("l must be at least 1".into()));
    }
    let mut b = EmbeddingBuilder::new();
    let cycle = build_h1(&mut b, d, l);
    Ok(finish(
        b,
        Family::H1,
        d,
        Some(l),
        &[("v1", cycle[0])],
        SpectrumClaim::SubsetOf(set(&[4, 2 * l + 1])),
        Vec::new(),
    ))
}

/// `D + 1` copies of `H1(D, l)` glued at `v1`.
pub fn h(d: usize, l: usize) -> Result<Gadget, GadgetError> {
    let base = h1(d, l)?;
    let v1 = base.descriptor.distinguished["v1"];
    let mut b = EmbeddingBuilder::new();
    let map = b.add_disjoint(&base.graph);
    let cut = map[v1];
    for _ in 0..d {
        b.attach(&base.graph, v1, cut);
    }
    Ok(finish(
        b,
        Family::H,
        d,
        Some(l),
        &[("v1", cut)],
        SpectrumClaim::SubsetOf(set(&[4, 2 * l + 1])),
        vec![infeasible(ColorSpec::balanced(2, d))],
    ))
}

/// `2D + 1` internally disjoint `x,y`-paths of length 3.
pub fn f1(d: usize) -> Gadget {
    let mut b = EmbeddingBuilder::new();
    let x = b.add_vertex();
    let y = b.add_vertex();
    b.add_path_bundle(x, y, 2 * d + 1, 3);
    let claims = vec![pinned(
        ColorSpec::unbalanced(2, d),
        &[(x, 1), (y, 1)],
        "x and y are not both in the defective class".into(),
    )];
    finish(b, Family::F1, d, None, &[("x", x), ("y", y)], SpectrumClaim::SubsetOf(set(&[6])), claims)
}

/// Odd cycle `v1 ... vl` with edges `v_i v_(i+1)` thickened into `F1` for
/// every `i` of the given parity (`v(l+1) = v1`).
fn build_thick_cycle(b: &mut EmbeddingBuilder, d: usize, l: usize, odd: bool) -> Vec<Vertex> {
    let cycle = b.add_cycle(l);
    for i in 1..=l {
        if (i % 2 == 1) == odd {
            b.replace_edge_with_paths(cycle[i - 1], cycle[i % l], 2 * d + 1, 3);
        }
    }
    cycle
}

pub fn fo(d: usize, l: usize) -> Result<Gadget, GadgetError> {
    check_odd_length(l)?;
    let mut b = EmbeddingBuilder::new();
    let cycle = build_thick_cycle(&mut b, d, l, true);
    let claims = vec![pinned(ColorSpec::unbalanced(2, d), &[(cycle[0], 1)], "v1 is not in the defective class".into())];
    Ok(finish(b, Family::Fo, d, Some(l), &[("v1", cycle[0])], SpectrumClaim::SubsetOf(set(&[6, 2 * l + 1])), claims))
}

pub fn fe(d: usize, l: usize) -> Result<Gadget, GadgetError> {
    check_odd_length(l)?;
    let mut b = EmbeddingBuilder::new();
    let cycle = build_thick_cycle(&mut b, d, l, false);
    let claims = vec![pinned(ColorSpec::unbalanced(2, d), &[(cycle[0], 0)], "v1 is in the defective class".into())];
    Ok(finish(b, Family::Fe, d, Some(l), &[("v1", cycle[0])], SpectrumClaim::SubsetOf(set(&[6, 2 * l - 1])), claims))
}

/// Two copies of `Fo(D, l)` joined by an edge between their `v1`s.
pub fn f(d: usize, l: usize) -> Result<Gadget, GadgetError> {
    let base = fo(d, l)?;
    let v1 = base.descriptor.distinguished["v1"];
    let mut b = EmbeddingBuilder::new();
    let a = b.add_disjoint(&base.graph)[v1];
    let c = b.add_disjoint(&base.graph)[v1];
    b.add_bridge(a, c);
    Ok(finish(
        b,
        Family::F,
        d,
        Some(l),
        &[("v1_a", a), ("v1_b", c)],
        SpectrumClaim::SubsetOf(set(&[6, 2 * l + 1])),
        vec![infeasible(ColorSpec::unbalanced(2, d))],
    ))
}

/// A star on `D + 2` vertices with a copy of `Fe(D, l)` attached at every
/// star vertex, the centre included.
pub fn f_prime(d: usize, l: usize) -> Result<Gadget, GadgetError> {
    let base = fe(d, l)?;
    let v1 = base.descriptor.distinguished["v1"];
    let mut b = EmbeddingBuilder::new();
    let centre = b.add_vertex();
    let leaves: Vec<Vertex> = (0..=d).map(|_| b.add_vertex()).collect();
    for &leaf in &leaves {
        b.add_bridge(centre, leaf);
    }
    for &s in std::iter::once(&centre).chain(&leaves) {
        b.attach(&base.graph, v1, s);
    }
    Ok(finish(
        b,
        Family::FPrime,
        d,
        Some(l),
        &[("center", centre)],
        SpectrumClaim::SubsetOf(set(&[6, 2 * l - 1])),
        vec![infeasible(ColorSpec::unbalanced(2, d))],
    ))
}

fn build_t0(b: &mut EmbeddingBuilder, d: usize) -> Vertex {
    let x = b.add_vertex();
    for _ in 0..=d {
        let u = b.add_vertex();
        let w = b.add_vertex();
        b.add_bridge(x, u);
        b.add_bridge(u, w);
        // closing the triangle at the end of x's rotation keeps u, w together
        b.add_bridge(w, x);
    }
    x
}

/// `D + 1` triangles sharing the vertex `x`.
pub fn t0(d: usize) -> Gadget {
    let mut b = EmbeddingBuilder::new();
    let x = build_t0(&mut b, d);
    let claims = vec![pinned(ColorSpec::unbalanced(2, d), &[(x, 1)], "x is not in the defective class".into())];
    finish(b, Family::T0, d, None, &[("x", x)], SpectrumClaim::Exactly(set(&[3])), claims)
}

/// Two copies of `T0(D)` joined by an edge between their centres.
pub fn t(d: usize) -> Gadget {
    let mut b = EmbeddingBuilder::new();
    let a = build_t0(&mut b, d);
    let c = build_t0(&mut b, d);
    b.add_bridge(a, c);
    finish(
        b,
        Family::T,
        d,
        None,
        &[("x_a", a), ("x_b", c)],
        SpectrumClaim::Exactly(set(&[3])),
        vec![infeasible(ColorSpec::unbalanced(2, d))],
    )
}

/// Planar `K4` on vertices 0..4.
pub fn k4() -> PlaneGraph {
    PlaneGraph::from_rotations(vec![vec![1, 3, 2], vec![0, 2, 3], vec![0, 3, 1], vec![0, 1, 2]])
        .expect("valid K4 rotation")
}

fn build_x0(b: &mut EmbeddingBuilder, v: Vertex, d: usize) {
    let k = k4();
    for _ in 0..=d {
        b.attach(&k, 0, v);
    }
}

/// `D + 1` copies of `K4` sharing the vertex `v`.
pub fn x0(d: usize) -> Gadget {
    let mut b = EmbeddingBuilder::new();
    let v = b.add_vertex();
    build_x0(&mut b, v, d);
    let claims = vec![pinned(ColorSpec::unbalanced(3, d), &[(v, 2)], "v is not in the defective class".into())];
    finish(b, Family::X0, d, None, &[("v", v)], SpectrumClaim::SubsetOf(set(&[3, 4])), claims)
}

/// Three copies of `X0(D)` whose centres form a triangle.
pub fn x(d: usize) -> Gadget {
    let mut b = EmbeddingBuilder::new();
    let c = b.add_cycle(3);
    for &v in &c {
        build_x0(&mut b, v, d);
    }
    finish(
        b,
        Family::X,
        d,
        None,
        &[("v_a", c[0]), ("v_b", c[1]), ("v_c", c[2])],
        SpectrumClaim::SubsetOf(set(&[3, 4])),
        vec![infeasible(ColorSpec::unbalanced(3, d))],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_spectrum;

    fn all_small() -> Vec<Gadget> {
        let mut out = Vec::new();
        for fam in Family::ALL {
            for d in 0..=2 {
                if fam.takes_length() {
                    let ls: &[usize] = match fam {
                        Family::H1 | Family::H => &[1, 2, 3],
                        _ => &[3, 5],
                    };
                    for &l in ls {
                        out.push(generate(fam, d, Some(l)).unwrap());
                    }
                } else {
                    out.push(generate(fam, d, None).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn sizes_match_closed_forms() {
        for g in all_small() {
            let desc = &g.descriptor;
            let want = expected_size(desc.family, desc.d, desc.l.unwrap_or(0));
            assert_eq!(
                (g.graph.vertex_count(), g.graph.edge_count()),
                want,
                "{} D={} l={:?}",
                desc.family,
                desc.d,
                desc.l
            );
        }
    }

    #[test]
    fn every_gadget_is_simple_connected_planar() {
        for g in all_small() {
            assert!(g.graph.is_connected(), "{:?}", g.descriptor.family);
            assert!(g.graph.is_euler_certified(), "{:?}", g.descriptor.family);
        }
    }

    #[test]
    fn named_sizes() {
        assert_eq!(h2(0).graph.vertex_count(), 3);
        assert_eq!(h2(1).graph.vertex_count(), 5);
        assert_eq!((h2(2).graph.vertex_count(), h2(2).graph.edge_count()), (7, 10));
        assert_eq!(h(1, 2).unwrap().graph.vertex_count(), 17);
        assert_eq!(h(0, 1).unwrap().graph.vertex_count(), 3);
        assert_eq!(x(0).graph.vertex_count(), 12);
        assert_eq!(x(1).graph.vertex_count(), 21);
        assert_eq!(f(1, 3).unwrap().graph.vertex_count(), 30);
    }

    #[test]
    fn spectra_small() {
        assert_eq!(cycle_spectrum(&h2(1).graph).unwrap(), set(&[4]));
        assert_eq!(cycle_spectrum(&t(1).graph).unwrap(), set(&[3]));
        assert_eq!(cycle_spectrum(&x(0).graph).unwrap(), set(&[3, 4]));
        assert_eq!(cycle_spectrum(&h(0, 1).unwrap().graph).unwrap(), set(&[3]));
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(fo(1, 4), Err(GadgetError::InvalidParam(_))));
        assert!(matches!(f(1, 1), Err(GadgetError::InvalidParam(_))));
        assert!(matches!(h1(1, 0), Err(GadgetError::InvalidParam(_))));
        assert!(matches!(generate(Family::H, 1, None), Err(GadgetError::InvalidParam(_))));
        assert_eq!("Fprime".parse::<Family>().unwrap(), Family::FPrime);
        assert!("Q".parse::<Family>().is_err());
    }
}
