use std::time::{Duration, Instant};

use thiserror::Error;

use super::{ColorSpec, Coloring};
use crate::graph::{PlaneGraph, Vertex};

/// Limits on a single search. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(n: u64) -> Self {
        Budget { max_nodes: Some(n), max_time: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Colorable(Coloring),
    NotColorable,
    /// The budget ran out before the search finished.
    Unknown,
}

impl Decision {
    pub fn is_colorable(&self) -> bool {
        matches!(self, Decision::Colorable(_))
    }

    pub fn status(&self) -> &'static str {
        match self {
            Decision::Colorable(_) => "feasible",
            Decision::NotColorable => "infeasible",
            Decision::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub decision: Decision,
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
}

/// Exhaustive backtracking decision of `spec`-colourability.
pub fn decide_colorable(g: &PlaneGraph, spec: &ColorSpec, budget: Budget) -> SolveReport {
    decide_with_fixed(g, spec, &[], budget)
}

/// As [`decide_colorable`], with some vertices pinned to given classes.
pub fn decide_with_fixed(g: &PlaneGraph, spec: &ColorSpec, fixed: &[(Vertex, usize)], budget: Budget) -> SolveReport {
    let start = Instant::now();
    let mut search = Search::new(g, spec, budget, start);
    let decision = search.run(fixed);
    SolveReport { decision, nodes: search.nodes, elapsed: start.elapsed() }
}

/// Least `D` such that `g` is `(0, ..., 0, D)`-colourable with `k` classes.
///
/// `D = max degree` always works, so the scan terminates.
pub fn min_unbalanced_defect(g: &PlaneGraph, k: usize, budget: Budget) -> Result<usize, SolveError> {
    assert!(k >= 1, "need at least one class");
    let mut nodes = 0;
    for d in 0..=g.max_degree() {
        let report = decide_colorable(g, &ColorSpec::unbalanced(k, d), budget);
        nodes += report.nodes;
        match report.decision {
            Decision::Colorable(_) => return Ok(d),
            Decision::NotColorable => {}
            Decision::Unknown => return Err(SolveError::BudgetExceeded { nodes }),
        }
    }
    unreachable!("one class with cap equal to the maximum degree always suffices")
}

const UNCOLORED: usize = usize::MAX;

struct Search<'a> {
    g: &'a PlaneGraph,
    caps: &'a [usize],
    k: usize,
    /// For each class, the lowest class index with the same cap.
    group_leader: Vec<usize>,
    order: Vec<Vertex>,
    color: Vec<usize>,
    /// Same-class coloured neighbours of each coloured vertex.
    same: Vec<usize>,
    /// `count[v * k + c]`: coloured neighbours of `v` in class `c`.
    count: Vec<usize>,
    used: Vec<usize>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    out_of_budget: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a PlaneGraph, spec: &'a ColorSpec, budget: Budget, start: Instant) -> Self {
        let n = g.vertex_count();
        let k = spec.classes();
        let caps = spec.caps();
        let group_leader = (0..k).map(|c| (0..=c).find(|&c0| caps[c0] == caps[c]).unwrap()).collect();
        let mut order: Vec<Vertex> = g.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Search {
            g,
            caps,
            k,
            group_leader,
            order,
            color: vec![UNCOLORED; n],
            same: vec![0; n],
            count: vec![0; n * k],
            used: vec![0; k],
            nodes: 0,
            budget,
            start,
            out_of_budget: false,
        }
    }

    fn run(&mut self, fixed: &[(Vertex, usize)]) -> Decision {
        for &(v, c) in fixed {
            if c >= self.k || self.color[v] != UNCOLORED || !self.can_assign(v, c) {
                return Decision::NotColorable;
            }
            self.assign(v, c);
        }
        if self.recurse(0) {
            Decision::Colorable(Coloring(self.color.clone()))
        } else if self.out_of_budget {
            Decision::Unknown
        } else {
            Decision::NotColorable
        }
    }

    fn exhausted(&mut self) -> bool {
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.out_of_budget = true;
            }
        }
        if let Some(t) = self.budget.max_time {
            if self.nodes.is_multiple_of(1024) && self.start.elapsed() > t {
                self.out_of_budget = true;
            }
        }
        self.out_of_budget
    }

    fn can_assign(&self, v: Vertex, c: usize) -> bool {
        let cap = self.caps[c];
        self.count[v * self.k + c] <= cap
            && self.g.neighbors(v).iter().all(|&u| self.color[u] != c || self.same[u] < cap)
    }

    fn assign(&mut self, v: Vertex, c: usize) {
        self.color[v] = c;
        self.same[v] = self.count[v * self.k + c];
        self.used[c] += 1;
        for &u in self.g.neighbors(v) {
            self.count[u * self.k + c] += 1;
            if self.color[u] == c {
                self.same[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: Vertex) {
        let c = self.color[v];
        for &u in self.g.neighbors(v) {
            self.count[u * self.k + c] -= 1;
            if self.color[u] == c {
                self.same[u] -= 1;
            }
        }
        self.used[c] -= 1;
        self.same[v] = 0;
        self.color[v] = UNCOLORED;
    }

    fn has_option(&self, w: Vertex) -> bool {
        (0..self.k).any(|c| self.can_assign(w, c))
    }

    /// Every uncoloured vertex whose options may have shrunk still has one.
    fn forward_check(&self, v: Vertex) -> bool {
        let c = self.color[v];
        let cap = self.caps[c];
        for &u in self.g.neighbors(v) {
            if self.color[u] == UNCOLORED {
                if !self.has_option(u) {
                    return false;
                }
            } else if self.color[u] == c && self.same[u] == cap {
                for &w in self.g.neighbors(u) {
                    if self.color[w] == UNCOLORED && !self.has_option(w) {
                        return false;
                    }
                }
            }
        }
        if self.same[v] == cap {
            for &w in self.g.neighbors(v) {
                if self.color[w] == UNCOLORED && !self.has_option(w) {
                    return false;
                }
            }
        }
        true
    }

    fn recurse(&mut self, mut idx: usize) -> bool {
        while idx < self.order.len() && self.color[self.order[idx]] != UNCOLORED {
            idx += 1;
        }
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        for c in 0..self.k {
            // unused classes with equal caps are interchangeable: only try the first
            let leader = self.group_leader[c];
            if self.used[c] == 0 && (leader..c).any(|c0| self.group_leader[c0] == leader && self.used[c0] == 0) {
                continue;
            }
            if !self.can_assign(v, c) {
                continue;
            }
            self.nodes += 1;
            if self.exhausted() {
                return false;
            }
            self.assign(v, c);
            if self.forward_check(v) && self.recurse(idx + 1) {
                return true;
            }
            self.unassign(v);
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}
