use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{expected_size, ColoringClaim, GadgetDescriptor, SpectrumClaim};
use crate::color::{decide_with_fixed, verify_coloring, Budget, Decision};
use crate::graph::{cycle_spectrum_with_budget, PlaneGraph, SpectrumError, DEFAULT_SPECTRUM_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Not decided within the budget, or skipped because `D` is above the
    /// solver limit. Never counted as a failure.
    Unverified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: String,
    pub status: ClaimStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claims: Vec<ClaimResult>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.status == ClaimStatus::Pass)
    }

    pub fn any_fail(&self) -> bool {
        self.claims.iter().any(|c| c.status == ClaimStatus::Fail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub solver_budget: Budget,
    pub spectrum_budget: u64,
    /// Colouring claims are only run through the solver when `D` is at most
    /// this value.
    pub max_solver_d: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            solver_budget: Budget::nodes(200_000_000),
            spectrum_budget: DEFAULT_SPECTRUM_BUDGET,
            max_solver_d: 1,
        }
    }
}

/// Checks every claim a descriptor makes about `g`: embedding, size,
/// cycle spectrum and each colouring claim.
pub fn verify_descriptor(g: &PlaneGraph, desc: &GadgetDescriptor, opts: &VerifyOptions) -> VerificationReport {
    let mut claims = vec![check_planar(g), check_size(g, desc), check_spectrum(g, &desc.spectrum, opts)];
    claims.extend(desc.coloring_claims.iter().map(|c| check_coloring(g, desc.d, c, opts)));
    VerificationReport { claims }
}

fn result(claim: &str, ok: bool, detail: String) -> ClaimResult {
    let status = if ok { ClaimStatus::Pass } else { ClaimStatus::Fail };
    ClaimResult { claim: claim.to_string(), status, detail }
}

fn check_planar(g: &PlaneGraph) -> ClaimResult {
    let ok = g.is_connected() && g.is_euler_certified();
    let detail = format!("connected={}, euler_certified={}", g.is_connected(), g.is_euler_certified());
    result("planar", ok, detail)
}

fn check_size(g: &PlaneGraph, desc: &GadgetDescriptor) -> ClaimResult {
    let formula = expected_size(desc.family, desc.d, desc.l.unwrap_or(0));
    let actual = (g.vertex_count(), g.edge_count());
    let ok = actual == formula && actual == (desc.vertices, desc.edges);
    result("size", ok, format!("actual {actual:?}, formula {formula:?}"))
}

fn describe(claim: &SpectrumClaim) -> String {
    match claim {
        SpectrumClaim::SubsetOf(s) => format!("subset of {s:?}"),
        SpectrumClaim::Exactly(s) => format!("equal to {s:?}"),
    }
}

fn check_spectrum(g: &PlaneGraph, claim: &SpectrumClaim, opts: &VerifyOptions) -> ClaimResult {
    match cycle_spectrum_with_budget(g, opts.spectrum_budget) {
        Ok(spec) => {
            result("cycle_spectrum", claim.holds_for(&spec), format!("spectrum {spec:?}, claimed {}", describe(claim)))
        }
        Err(SpectrumError::BudgetExceeded { partial }) => {
            // a partial spectrum can still refute a subset claim
            let refuted = match claim {
                SpectrumClaim::SubsetOf(s) | SpectrumClaim::Exactly(s) => !partial.is_subset(s),
            };
            let status = if refuted { ClaimStatus::Fail } else { ClaimStatus::Unverified };
            ClaimResult {
                claim: "cycle_spectrum".into(),
                status,
                detail: format!("budget exhausted; lengths found {partial:?}"),
            }
        }
    }
}

fn check_coloring(g: &PlaneGraph, d: usize, claim: &ColoringClaim, opts: &VerifyOptions) -> ClaimResult {
    let name = format!("not {}-colourable: {}", claim.spec, claim.statement);
    if d > opts.max_solver_d {
        return ClaimResult {
            claim: name,
            status: ClaimStatus::Unverified,
            detail: format!("D = {d} above solver limit {}", opts.max_solver_d),
        };
    }
    let report = decide_with_fixed(g, &claim.spec, &claim.pinned, opts.solver_budget);
    match report.decision {
        Decision::NotColorable => ClaimResult {
            claim: name,
            status: ClaimStatus::Pass,
            detail: format!("refuted exhaustively in {} nodes", report.nodes),
        },
        Decision::Colorable(c) => {
            let valid = verify_coloring(g, &c, &claim.spec).map(|v| v.is_empty()).unwrap_or(false);
            let pins_hold = claim.pinned.iter().all(|&(v, k)| c.class_of(v) == k);
            ClaimResult {
                claim: name,
                status: ClaimStatus::Fail,
                detail: format!("counterexample colouring found (valid={}, pins={})", valid, pins_hold),
            }
        }
        Decision::Unknown => ClaimResult {
            claim: name,
            status: ClaimStatus::Unverified,
            detail: format!("solver budget exhausted after {} nodes", report.nodes),
        },
    }
}

/// Lengths that a spectrum has outside a claimed set.
pub fn excess_lengths(spectrum: &BTreeSet<usize>, claim: &SpectrumClaim) -> BTreeSet<usize> {
    match claim {
        SpectrumClaim::SubsetOf(s) | SpectrumClaim::Exactly(s) => spectrum.difference(s).copied().collect(),
    }
}
