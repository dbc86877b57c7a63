//! Exact-arithmetic discharging engine for the three charge systems:
//! `Bal2` (no 4-cycles, `(5,5)`), `Unbal2` (no 3-, 4-, 6-cycles, `(0,45)`)
//! and `Unbal3` (no 4-cycles, `(0,0,117)`).
//!
//! Charges are [`Rational64`]; every rule application is recorded as a
//! [`Transfer`] in a [`ChargeLedger`], so totals and individual receipts can
//! be read back exactly.

mod audit;
mod classify;
mod reducible;
mod rules;

pub use audit::{audit, hypotheses_hold, AuditReport, ElementCharge, GroupCharge};
pub use classify::{classify_faces, FaceClass, FaceTag};
pub use reducible::{find_reducible, ReducibleConfig, ReducibleKind};
pub use rules::{apply_rules, grouped_final_charges_unbal3, Group};

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{trace_faces, Faces, GraphError, PlaneGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Section {
    Bal2,
    Unbal2,
    Unbal3,
}

impl Section {
    pub const ALL: [Section; 3] = [Section::Bal2, Section::Unbal2, Section::Unbal3];

    /// Cycle lengths the rule system assumes absent.
    pub fn forbidden_lengths(self) -> &'static [usize] {
        match self {
            Section::Bal2 | Section::Unbal3 => &[4],
            Section::Unbal2 => &[3, 4, 6],
        }
    }

    /// Sum of initial charges over a connected plane graph.
    pub fn expected_total(self) -> i64 {
        match self {
            Section::Bal2 | Section::Unbal2 => -12,
            Section::Unbal3 => -8,
        }
    }

    pub fn vertex_charge(self, degree: usize) -> Rational64 {
        let d = degree as i64;
        match self {
            Section::Bal2 | Section::Unbal2 => Rational64::from(2 * d - 6),
            Section::Unbal3 => Rational64::from(d - 4),
        }
    }

    pub fn face_charge(self, degree: usize) -> Rational64 {
        let d = degree as i64;
        match self {
            Section::Bal2 | Section::Unbal2 => Rational64::from(d - 6),
            Section::Unbal3 => Rational64::from(d - 4),
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Section::Bal2 => "bal2",
            Section::Unbal2 => "unbal2",
            Section::Unbal3 => "unbal3",
        })
    }
}

impl FromStr for Section {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bal2" => Ok(Section::Bal2),
            "unbal2" => Ok(Section::Unbal2),
            "unbal3" => Ok(Section::Unbal3),
            other => Err(format!("unknown section {other:?} (expected bal2, unbal2 or unbal3)")),
        }
    }
}

/// A vertex or a face (by index into the traced [`Faces`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Element {
    Vertex(Vertex),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(i) => write!(f, "f{i}"),
        }
    }
}

/// Rule identifiers; the same name may mean different rules in different
/// sections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R1A,
    R1B,
    R1C,
    R2,
    R2A,
    R2B,
    R2C,
    R3,
    R3A,
    R3B,
    R3C,
    R4,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub rule: Rule,
    pub source: Element,
    pub target: Element,
    pub amount: Rational64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph carries no plane embedding")]
    NotEmbedded,
    #[error("graph contains a {length}-cycle, which the {section} rules exclude")]
    CycleRestrictionViolated { section: Section, length: usize },
    #[error("3-vertex {vertex} lies on two 3-faces")]
    GroupingConflict { vertex: Vertex },
}

impl From<GraphError> for DischargeError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Disconnected => DischargeError::Disconnected,
            _ => DischargeError::NotEmbedded,
        }
    }
}

/// Initial charges plus every transfer made by the rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub section: Section,
    pub faces: Faces,
    pub vertex_initial: Vec<Rational64>,
    pub face_initial: Vec<Rational64>,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    pub fn elements(&self) -> impl Iterator<Item = Element> {
        let vs = (0..self.vertex_initial.len()).map(Element::Vertex);
        vs.chain((0..self.face_initial.len()).map(Element::Face))
    }

    pub fn initial(&self, e: Element) -> Rational64 {
        match e {
            Element::Vertex(v) => self.vertex_initial[v],
            Element::Face(f) => self.face_initial[f],
        }
    }

    pub fn initial_total(&self) -> Rational64 {
        self.vertex_initial.iter().chain(&self.face_initial).copied().sum()
    }

    /// Final charge of every element, vertices first then faces.
    pub fn final_charges(&self) -> Vec<(Element, Rational64)> {
        let nv = self.vertex_initial.len();
        let mut charges: Vec<Rational64> = self.vertex_initial.iter().chain(&self.face_initial).copied().collect();
        let index = |e: Element| match e {
            Element::Vertex(v) => v,
            Element::Face(f) => nv + f,
        };
        for t in &self.transfers {
            charges[index(t.source)] -= t.amount;
            charges[index(t.target)] += t.amount;
        }
        self.elements().zip(charges).collect()
    }

    pub fn final_charge(&self, e: Element) -> Rational64 {
        let mut c = self.initial(e);
        for t in &self.transfers {
            if t.source == e {
                c -= t.amount;
            }
            if t.target == e {
                c += t.amount;
            }
        }
        c
    }

    pub fn final_total(&self) -> Rational64 {
        self.final_charges().into_iter().map(|(_, c)| c).sum()
    }

    /// Total received by `target` from `source` (over all rules).
    pub fn sent(&self, source: Element, target: Element) -> Rational64 {
        self.transfers.iter().filter(|t| t.source == source && t.target == target).map(|t| t.amount).sum()
    }

    /// Transfers made under `rule`.
    pub fn by_rule(&self, rule: Rule) -> impl Iterator<Item = &Transfer> {
        self.transfers.iter().filter(move |t| t.rule == rule)
    }

    /// Transfers as CSV (`rule,source,target,amount`).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("rule,source,target,amount\n");
        for t in &self.transfers {
            out.push_str(&format!("{},{},{},{}\n", t.rule, t.source, t.target, t.amount));
        }
        out
    }
}

fn traced(g: &PlaneGraph) -> Result<Faces, DischargeError> {
    if !g.is_embedded() {
        return Err(DischargeError::NotEmbedded);
    }
    if !g.is_connected() {
        return Err(DischargeError::Disconnected);
    }
    let faces = trace_faces(g)?;
    let euler = g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(DischargeError::NotEmbedded);
    }
    Ok(faces)
}

/// Initial charges only (no rules). No cycle restrictions are required.
pub fn initial_charges(g: &PlaneGraph, section: Section) -> Result<ChargeLedger, DischargeError> {
    let faces = traced(g)?;
    Ok(ledger_with_initial(g, faces, section))
}

fn ledger_with_initial(g: &PlaneGraph, faces: Faces, section: Section) -> ChargeLedger {
    let vertex_initial = g.vertices().map(|v| section.vertex_charge(g.degree(v))).collect();
    let face_initial = faces.walks().iter().map(|w| section.face_charge(w.degree())).collect();
    ChargeLedger { section, faces, vertex_initial, face_initial, transfers: Vec::new() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PlaneGraph {
        PlaneGraph::from_rotations(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn triangle_totals() {
        let g = triangle();
        let l = initial_charges(&g, Section::Bal2).unwrap();
        assert_eq!(l.vertex_initial, vec![Rational64::from(-2); 3]);
        assert_eq!(l.face_initial, vec![Rational64::from(-3); 2]);
        assert_eq!(l.initial_total(), Rational64::from(-12));
        let l = initial_charges(&g, Section::Unbal3).unwrap();
        assert_eq!(l.face_initial, vec![Rational64::from(-1); 2]);
        assert_eq!(l.initial_total(), Rational64::from(-8));
    }

    #[test]
    fn errors() {
        let two = PlaneGraph::from_rotations(vec![vec![], vec![]]).unwrap();
        assert_eq!(initial_charges(&two, Section::Bal2), Err(DischargeError::Disconnected));
        let flat = triangle().forget_embedding();
        assert_eq!(initial_charges(&flat, Section::Bal2), Err(DischargeError::NotEmbedded));
    }

    #[test]
    fn section_parsing() {
        assert_eq!("UNBAL2".parse::<Section>(), Ok(Section::Unbal2));
        assert!("bal3".parse::<Section>().is_err());
        assert_eq!(Section::Unbal3.to_string(), "unbal3");
    }
}
