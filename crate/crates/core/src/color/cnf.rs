use std::fmt::Write as _;

use super::{ColorSpec, Coloring};
use crate::graph::{PlaneGraph, Vertex};

/// Caps up to this value use the binomial at-most-`d` encoding; larger caps
/// use a sequential counter.
const BINOMIAL_MAX_CAP: usize = 2;

/// CNF whose models are exactly the `spec`-colourings of a graph.
///
/// Variable `x(v, i)` (1-based DIMACS index) is true when `v` is in class `i`.
/// Auxiliary counter variables follow the `n * k` colour variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfDocument {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i64>>,
    /// `(vertex, 0-based class)` for each colour variable, indexed by `var - 1`.
    pub decode: Vec<(Vertex, usize)>,
}

impl CnfDocument {
    /// DIMACS text; the decoding map is carried in `c var` comment lines.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        out.push_str("c defective colouring; x(v,i) true iff vertex v is in class i (1-based)\n");
        for (idx, &(v, i)) in self.decode.iter().enumerate() {
            let _ = writeln!(out, "c var {} vertex {} class {}", idx + 1, v, i + 1);
        }
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }

    /// Reads the colouring out of a model (`model[var - 1]`).
    pub fn decode_model(&self, model: &[bool], n: usize) -> Coloring {
        let mut classes = vec![0; n];
        for (idx, &(v, i)) in self.decode.iter().enumerate() {
            if model[idx] {
                classes[v] = i;
            }
        }
        Coloring(classes)
    }
}

/// Encodes `spec`-colourability of `g`.
pub fn export_cnf(g: &PlaneGraph, spec: &ColorSpec) -> CnfDocument {
    let n = g.vertex_count();
    let k = spec.classes();
    let var = |v: Vertex, i: usize| (v * k + i + 1) as i64;
    let mut num_vars = n * k;
    let mut clauses = Vec::new();
    let decode = (0..n).flat_map(|v| (0..k).map(move |i| (v, i))).collect();

    for v in g.vertices() {
        clauses.push((0..k).map(|i| var(v, i)).collect());
        for i in 0..k {
            for j in i + 1..k {
                clauses.push(vec![-var(v, i), -var(v, j)]);
            }
        }
    }
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        for i in 0..k {
            let d = spec.cap(i);
            if nbrs.len() <= d {
                continue;
            }
            let lits: Vec<i64> = nbrs.iter().map(|&u| var(u, i)).collect();
            let guard = var(v, i);
            if d <= BINOMIAL_MAX_CAP {
                binomial_at_most(guard, &lits, d, &mut clauses);
            } else {
                sequential_at_most(guard, &lits, d, &mut num_vars, &mut clauses);
            }
        }
    }
    CnfDocument { num_vars, clauses, decode }
}

/// `guard -> at most d of lits`, one clause per (d+1)-subset.
fn binomial_at_most(guard: i64, lits: &[i64], d: usize, clauses: &mut Vec<Vec<i64>>) {
    let m = lits.len();
    let mut idx: Vec<usize> = (0..=d).collect();
    loop {
        let mut clause = vec![-guard];
        clause.extend(idx.iter().map(|&j| -lits[j]));
        clauses.push(clause);
        // next combination in lexicographic order
        let mut pos = d + 1;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if idx[pos] < m - (d + 1 - pos) {
                break;
            }
            if pos == 0 {
                return;
            }
        }
        idx[pos] += 1;
        for j in pos + 1..=d {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `guard -> at most d of lits` with a sequential counter: register
/// `s(j, l)` holds when at least `l` of the first `j` literals are true.
/// Only the overflow clauses carry the guard.
fn sequential_at_most(guard: i64, lits: &[i64], d: usize, num_vars: &mut usize, clauses: &mut Vec<Vec<i64>>) {
    let m = lits.len();
    let base = *num_vars;
    *num_vars += (m - 1) * d;
    let s = |j: usize, l: usize| (base + j * d + l + 1) as i64; // j in 0..m-1, l in 0..d

    clauses.push(vec![-lits[0], s(0, 0)]);
    for l in 1..d {
        clauses.push(vec![-s(0, l)]);
    }
    #[allow(clippy::needless_range_loop)] // j also indexes the counter registers
    for j in 1..m - 1 {
        clauses.push(vec![-lits[j], s(j, 0)]);
        clauses.push(vec![-s(j - 1, 0), s(j, 0)]);
        for l in 1..d {
            clauses.push(vec![-lits[j], -s(j - 1, l - 1), s(j, l)]);
            clauses.push(vec![-s(j - 1, l), s(j, l)]);
        }
        clauses.push(vec![-guard, -lits[j], -s(j - 1, d - 1)]);
    }
    clauses.push(vec![-guard, -lits[m - 1], -s(m - 2, d - 1)]);
}

/// Small DPLL solver (unit propagation, first-unassigned branching).
///
/// Returns a model indexed by `var - 1`.
pub fn solve_cnf(doc: &CnfDocument) -> Option<Vec<bool>> {
    let mut assign: Vec<i8> = vec![0; doc.num_vars + 1];
    if dpll(&doc.clauses, &mut assign) {
        Some(assign[1..].iter().map(|&a| a > 0).collect())
    } else {
        None
    }
}

fn lit_value(assign: &[i8], lit: i64) -> i8 {
    let a = assign[lit.unsigned_abs() as usize];
    if lit > 0 {
        a
    } else {
        -a
    }
}

fn dpll(clauses: &[Vec<i64>], assign: &mut Vec<i8>) -> bool {
    let mut trail = Vec::new();
    // unit propagation to fixpoint
    loop {
        let mut changed = false;
        for clause in clauses {
            let mut unassigned = None;
            let mut free = 0;
            let mut sat = false;
            for &lit in clause {
                match lit_value(assign, lit) {
                    1 => {
                        sat = true;
                        break;
                    }
                    0 => {
                        free += 1;
                        unassigned = Some(lit);
                    }
                    _ => {}
                }
            }
            if sat {
                continue;
            }
            match (free, unassigned) {
                (0, _) => {
                    for v in trail {
                        assign[v] = 0;
                    }
                    return false;
                }
                (1, Some(lit)) => {
                    let v = lit.unsigned_abs() as usize;
                    assign[v] = if lit > 0 { 1 } else { -1 };
                    trail.push(v);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let branch = clauses
        .iter()
        .filter(|c| !c.iter().any(|&l| lit_value(assign, l) == 1))
        .flat_map(|c| c.iter())
        .find(|&&l| lit_value(assign, l) == 0)
        .copied();
    let Some(lit) = branch else {
        return true;
    };
    let v = lit.unsigned_abs() as usize;
    for value in [lit.signum() as i8, -(lit.signum() as i8)] {
        assign[v] = value;
        if dpll(clauses, assign) {
            return true;
        }
        assign[v] = 0;
    }
    for v in trail {
        assign[v] = 0;
    }
    false
}
