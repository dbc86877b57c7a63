use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::{
    apply_rules, find_reducible, grouped_final_charges_unbal3, DischargeError, Element, ReducibleConfig, Section,
};
use crate::graph::{has_cycle_of_length, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementCharge {
    pub element: Element,
    /// Exact rational, e.g. `"-3/2"`.
    pub charge: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupCharge {
    pub members: Vec<Element>,
    pub total: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub section: Section,
    pub initial_total: String,
    pub final_total: String,
    pub total_matches_expected: bool,
    pub conserved: bool,
    pub final_charges: Vec<ElementCharge>,
    pub negative_elements: Vec<ElementCharge>,
    /// `Unbal3` only.
    pub groups: Option<Vec<GroupCharge>>,
    pub negative_groups: Option<Vec<GroupCharge>>,
    pub reducible: Vec<ReducibleConfig>,
    /// Negative total charge and no negative element would be impossible, so
    /// some reducible configuration must be present.
    pub reducible_found: bool,
    pub transfer_count: usize,
}

/// Connected, at least two vertices, and none of the section's forbidden
/// cycle lengths: the setting in which some reducible configuration must
/// occur.
pub fn hypotheses_hold(g: &PlaneGraph, section: Section) -> bool {
    g.vertex_count() >= 2 && g.is_connected() && section.forbidden_lengths().iter().all(|&l| !has_cycle_of_length(g, l))
}

pub fn audit(g: &PlaneGraph, section: Section) -> Result<AuditReport, DischargeError> {
    let ledger = apply_rules(g, section)?;
    let finals = ledger.final_charges();
    let zero = Rational64::from(0);
    let show = |(element, c): &(Element, Rational64)| ElementCharge { element: *element, charge: c.to_string() };
    let initial_total = ledger.initial_total();
    let final_total: Rational64 = finals.iter().map(|(_, c)| *c).sum();
    let (groups, negative_groups) = if section == Section::Unbal3 {
        let gs = grouped_final_charges_unbal3(&ledger, g)?;
        let to_report = |gr: &super::Group| GroupCharge { members: gr.members.clone(), total: gr.total.to_string() };
        let neg = gs.iter().filter(|gr| gr.total < zero).map(to_report).collect();
        (Some(gs.iter().map(to_report).collect()), Some(neg))
    } else {
        (None, None)
    };
    let reducible = find_reducible(g, section);
    Ok(AuditReport {
        section,
        initial_total: initial_total.to_string(),
        final_total: final_total.to_string(),
        total_matches_expected: initial_total == Rational64::from(section.expected_total()),
        conserved: final_total == initial_total,
        final_charges: finals.iter().map(show).collect(),
        negative_elements: finals.iter().filter(|(_, c)| *c < zero).map(show).collect(),
        groups,
        negative_groups,
        reducible_found: !reducible.is_empty(),
        reducible,
        transfer_count: ledger.transfers.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> PlaneGraph {
        PlaneGraph::from_rotations((0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect()).unwrap()
    }

    #[test]
    fn c8_unbal2() {
        let r = audit(&cycle(8), Section::Unbal2).unwrap();
        assert!(r.conserved && r.total_matches_expected && r.reducible_found);
        assert_eq!(r.initial_total, "-12");
    }

    #[test]
    fn c4_rejected() {
        assert!(matches!(
            audit(&cycle(4), Section::Bal2),
            Err(DischargeError::CycleRestrictionViolated { length: 4, .. })
        ));
    }
}
