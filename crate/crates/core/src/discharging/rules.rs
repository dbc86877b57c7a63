use std::collections::BTreeMap;

use num_rational::Rational64;

use super::classify::{tag_face, FaceTag, UNBAL2_BIG, UNBAL3_BIG};
use super::{ledger_with_initial, traced, ChargeLedger, DischargeError, Element, Rule, Section, Transfer};
use crate::graph::{has_cycle_of_length, Faces, PlaneGraph, Vertex};

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// Runs the section's rules on `g` after checking its hypotheses.
pub fn apply_rules(g: &PlaneGraph, section: Section) -> Result<ChargeLedger, DischargeError> {
    let faces = traced(g)?;
    for &length in section.forbidden_lengths() {
        if has_cycle_of_length(g, length) {
            return Err(DischargeError::CycleRestrictionViolated { section, length });
        }
    }
    let tags: Vec<FaceTag> = faces.walks().iter().map(|w| tag_face(g, w, section)).collect();
    let mut ledger = ledger_with_initial(g, faces, section);
    let mut out = Vec::new();
    let ctx = Ctx { g, faces: &ledger.faces, tags: &tags, out: &mut out };
    match section {
        Section::Bal2 => bal2(ctx),
        Section::Unbal2 => unbal2(ctx),
        Section::Unbal3 => unbal3(ctx),
    }
    ledger.transfers = out;
    Ok(ledger)
}

struct Ctx<'a> {
    g: &'a PlaneGraph,
    faces: &'a Faces,
    tags: &'a [FaceTag],
    out: &'a mut Vec<Transfer>,
}

impl Ctx<'_> {
    fn send(&mut self, rule: Rule, source: Element, target: Element, amount: Rational64) {
        if amount != Rational64::from(0) {
            self.out.push(Transfer { rule, source, target, amount });
        }
    }

    fn deg(&self, v: Vertex) -> usize {
        self.g.degree(v)
    }

    fn face_deg(&self, f: usize) -> usize {
        self.faces.get(f).degree()
    }

    fn k(&self, f: usize, v: Vertex) -> i64 {
        self.faces.get(f).k_incidence(v) as i64
    }
}

fn bal2(mut c: Ctx) {
    use Element::{Face, Vertex as V};
    for v in c.g.vertices() {
        let d = c.deg(v);
        if d >= 7 {
            for &u in c.g.neighbors(v) {
                if c.deg(u) == 2 {
                    c.send(Rule::R1, V(v), V(u), r(1, 1));
                }
            }
        }
        for f in c.faces.faces_at(c.g, v) {
            let fd = c.face_deg(f);
            match d {
                4..=6 if fd == 3 => c.send(Rule::R2, V(v), Face(f), r(1, 1)),
                d if d >= 7 && fd == 3 => {
                    if c.tags[f] == FaceTag::Terrible3 {
                        c.send(Rule::R3A, V(v), Face(f), r(3, 2));
                    } else {
                        c.send(Rule::R3B, V(v), Face(f), r(1, 1));
                    }
                }
                d if d >= 7 && fd == 5 => {
                    let walk = c.faces.get(f);
                    let big_neighbour_on_face = c.g.neighbors(v).iter().any(|&u| c.deg(u) >= 7 && walk.is_incident(u));
                    if big_neighbour_on_face {
                        c.send(Rule::R3C, V(v), Face(f), r(1, 2));
                    }
                }
                _ => {}
            }
        }
    }
}

fn unbal2(mut c: Ctx) {
    use Element::{Face, Vertex as V};
    let big = |d: usize| d >= UNBAL2_BIG;
    let mid = |d: usize| (3..UNBAL2_BIG).contains(&d);
    for v in c.g.vertices() {
        let d = c.deg(v);
        if big(d) {
            for &u in c.g.neighbors(v) {
                c.send(Rule::R1A, V(v), V(u), r(1, 1));
            }
            for f in c.faces.faces_at(c.g, v) {
                if c.tags[f].is_bad() {
                    c.send(Rule::R1B, V(v), Face(f), r(1, 1));
                } else {
                    let k = c.k(f, v);
                    c.send(Rule::R1C, V(v), Face(f), r(3 * k, 4));
                }
            }
        } else if mid(d) {
            for &u in c.g.neighbors(v) {
                if c.deg(u) == 2 {
                    c.send(Rule::R2A, V(v), V(u), r(1, 2));
                }
            }
            for f in c.faces.faces_at(c.g, v) {
                let (mut same, mut two_mid) = (0, 0);
                for (x, y) in c.faces.get(f).triples_at(v) {
                    let (dx, dy) = (c.deg(x), c.deg(y));
                    if (big(dx) && big(dy)) || (mid(dx) && mid(dy)) {
                        same += 1;
                    }
                    if (dx == 2 && mid(dy)) || (dy == 2 && mid(dx)) {
                        two_mid += 1;
                    }
                }
                c.send(Rule::R2B, V(v), Face(f), r(same, 2));
                c.send(Rule::R2C, V(v), Face(f), r(two_mid, 4));
            }
        }
    }
    for f in 0..c.faces.len() {
        for v in c.faces.get(f).distinct_vertices() {
            if c.deg(v) != 2 {
                continue;
            }
            let k = c.k(f, v);
            let nbrs = c.g.neighbors(v);
            if nbrs.iter().any(|&u| c.deg(u) == 2) {
                c.send(Rule::R3A, Face(f), V(v), r(k, 2));
            }
            if nbrs.iter().any(|&u| mid(c.deg(u))) {
                c.send(Rule::R3B, Face(f), V(v), r(k, 4));
            }
        }
    }
}

fn unbal3(mut c: Ctx) {
    use Element::{Face, Vertex as V};
    for f in 0..c.faces.len() {
        let fd = c.face_deg(f);
        if fd < 5 {
            continue;
        }
        let threes: Vec<Vertex> = c.faces.get(f).distinct_vertices().into_iter().filter(|&v| c.deg(v) == 3).collect();
        let total: i64 = threes.iter().map(|&v| c.k(f, v)).sum();
        if total == 0 {
            continue;
        }
        for v in threes {
            let k = c.k(f, v);
            c.send(Rule::R1, Face(f), V(v), r(k * (fd as i64 - 4), total));
        }
    }
    let on_triangle: Vec<bool> =
        c.g.vertices().map(|v| c.faces.faces_at(c.g, v).into_iter().any(|f| c.face_deg(f) == 3)).collect();
    for v in c.g.vertices() {
        let d = c.deg(v);
        if d >= UNBAL3_BIG {
            for &u in c.g.neighbors(v) {
                c.send(Rule::R2A, V(v), V(u), r(2, 3));
            }
            for f in c.faces.faces_at(c.g, v) {
                if c.face_deg(f) == 3 {
                    c.send(Rule::R2B, V(v), Face(f), r(3, 5));
                }
            }
        } else if d >= 4 {
            for f in c.faces.faces_at(c.g, v) {
                if c.face_deg(f) == 3 {
                    c.send(Rule::R3, V(v), Face(f), r(1, 3));
                }
            }
        } else if d == 3 && !on_triangle[v] {
            for &u in c.g.neighbors(v) {
                if c.deg(u) == 3 {
                    c.send(Rule::R4, V(v), V(u), r(1, 15));
                }
            }
        }
    }
}

/// Elements whose charges are added up together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub members: Vec<Element>,
    pub total: Rational64,
}

/// Groups each 3-face with its incident 3-vertices; every other element is
/// a singleton. A 3-vertex on two 3-faces is a conflict (it cannot happen
/// without a 4-cycle).
pub fn grouped_final_charges_unbal3(ledger: &ChargeLedger, g: &PlaneGraph) -> Result<Vec<Group>, DischargeError> {
    let faces = &ledger.faces;
    let mut owner: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (f, w) in faces.walks().iter().enumerate() {
        if w.degree() != 3 {
            continue;
        }
        for v in w.distinct_vertices() {
            if g.degree(v) == 3 && owner.insert(v, f).is_some() {
                return Err(DischargeError::GroupingConflict { vertex: v });
            }
        }
    }
    let finals: BTreeMap<Element, Rational64> = ledger.final_charges().into_iter().collect();
    let mut groups = Vec::new();
    for v in g.vertices() {
        if !owner.contains_key(&v) {
            let e = Element::Vertex(v);
            groups.push(Group { members: vec![e], total: finals[&e] });
        }
    }
    for (f, w) in faces.walks().iter().enumerate() {
        let mut members = vec![Element::Face(f)];
        if w.degree() == 3 {
            members.extend(w.distinct_vertices().into_iter().filter(|v| owner.get(v) == Some(&f)).map(Element::Vertex));
        }
        let total = members.iter().map(|e| finals[e]).sum();
        groups.push(Group { members, total });
    }
    Ok(groups)
}
