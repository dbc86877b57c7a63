//! Exact decisions about `(d1, ..., dk)`-colourability.
//!
//! A colouring assigns every vertex a class `0..k`; class `i` may induce a
//! subgraph of maximum degree at most `caps[i]`. Class indices are 0-based in
//! code and 1-based in every text format.

mod cnf;
mod solver;
mod spec;

pub use cnf::{export_cnf, solve_cnf, CnfDocument};
pub use solver::{
    decide_colorable, decide_with_fixed, min_unbalanced_defect, Budget, Decision, SolveError, SolveReport,
};
pub use spec::{verify_coloring, ColorSpec, Coloring, ColoringError, ParseSpecError, Violation};
