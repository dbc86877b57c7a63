use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{has_cycle_of_length, is_bipartite, PlaneGraph};

/// A set of forbidden cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ObstructionSet {
    Lengths(BTreeSet<usize>),
    /// Every odd cycle: forbidding these means the graph is bipartite.
    AllOdd,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseObstructionError {
    #[error("cycle length {0} is below 3")]
    TooShort(usize),
    #[error("cannot parse cycle length {0:?}")]
    BadLength(String),
}

impl ObstructionSet {
    pub fn lengths<I: IntoIterator<Item = usize>>(lengths: I) -> Result<Self, ParseObstructionError> {
        let set: BTreeSet<usize> = lengths.into_iter().collect();
        if let Some(&k) = set.iter().find(|&&k| k < 3) {
            return Err(ParseObstructionError::TooShort(k));
        }
        Ok(ObstructionSet::Lengths(set))
    }

    /// True iff `g` contains none of the forbidden cycles.
    pub fn is_respected_by(&self, g: &PlaneGraph) -> bool {
        match self {
            ObstructionSet::Lengths(ks) => ks.iter().all(|&k| !has_cycle_of_length(g, k)),
            ObstructionSet::AllOdd => is_bipartite(g),
        }
    }

    /// Forbidden lengths present in `g` (for `AllOdd`, `[0]` stands for "some odd cycle").
    pub fn violations(&self, g: &PlaneGraph) -> Vec<usize> {
        match self {
            ObstructionSet::Lengths(ks) => ks.iter().copied().filter(|&k| has_cycle_of_length(g, k)).collect(),
            ObstructionSet::AllOdd if is_bipartite(g) => Vec::new(),
            ObstructionSet::AllOdd => vec![0],
        }
    }
}

pub fn respects_obstruction_set(g: &PlaneGraph, s: &ObstructionSet) -> bool {
    s.is_respected_by(g)
}

impl FromStr for ObstructionSet {
    type Err = ParseObstructionError;

    /// `odd`, or a comma-separated list such as `3,4,6`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("odd") {
            return Ok(ObstructionSet::AllOdd);
        }
        let lengths = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| ParseObstructionError::BadLength(t.into())))
            .collect::<Result<Vec<_>, _>>()?;
        ObstructionSet::lengths(lengths)
    }
}

impl fmt::Display for ObstructionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionSet::AllOdd => write!(f, "odd"),
            ObstructionSet::Lengths(ks) => {
                let parts: Vec<String> = ks.iter().map(usize::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}
