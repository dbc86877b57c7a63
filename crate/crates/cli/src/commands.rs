use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde::Serialize;

use planar_defect::color::{decide_with_fixed, export_cnf, min_unbalanced_defect, Budget, ColorSpec, Decision};
use planar_defect::colorer::{self, ColorerError, ColorerOptions, ColorerStats};
use planar_defect::corpus::{self, NamedGraph};
use planar_defect::discharging::{
    apply_rules, audit, find_reducible, hypotheses_hold, initial_charges, AuditReport, Section,
};
use planar_defect::gadgets::{
    self, verify_descriptor, ClaimStatus, Family, GadgetDescriptor, VerificationReport, VerifyOptions,
};
use planar_defect::graph::{
    cycle_spectrum, has_cycle_of_length, trace_faces, ObstructionSet, PlaneGraph, SpectrumError,
};
use planar_defect::io::write_rotation_file;
use planar_defect::par;

use crate::report::{emit, read_input, read_inputs, write_stdout, Job, Status};

#[derive(Serialize, serde::Deserialize)]
struct Sidecar {
    schema: u32,
    descriptor: GadgetDescriptor,
    #[serde(skip_deserializing)]
    verification: Option<VerificationReport>,
}

fn verify_options(budget: Budget, max_solver_d: usize) -> VerifyOptions {
    VerifyOptions { solver_budget: budget, max_solver_d, ..VerifyOptions::default() }
}

fn verification_status(report: &VerificationReport) -> Status {
    Status::from_ok(!report.any_fail())
}

pub fn gadget(family: Family, d: usize, l: Option<usize>, out: Option<&Path>, budget: Budget) -> Result<Status> {
    let g = gadgets::generate(family, d, l)?;
    let text = write_rotation_file(&g.graph);
    let Some(out) = out else {
        write_stdout(&text)?;
        return Ok(Status::Pass);
    };
    let mut job = Job::start();
    job.write_artifact(out, &text)?;
    let verification = verify_descriptor(&g.graph, &g.descriptor, &verify_options(budget, 1));
    let status = verification_status(&verification);
    let sidecar =
        Sidecar { schema: crate::report::SCHEMA_VERSION, descriptor: g.descriptor, verification: Some(verification) };
    let sidecar_path = sidecar_path(out);
    job.write_artifact(&sidecar_path, &(serde_json::to_string_pretty(&sidecar)? + "\n"))?;
    emit(&job.finish(status, sidecar), None)
}

fn sidecar_path(graph: &Path) -> PathBuf {
    let mut s = graph.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

#[derive(Serialize)]
struct CycleCheck {
    graph: String,
    forbidden: String,
    violations: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum_partial: Option<Vec<usize>>,
    status: Status,
}

fn describe_obstruction(set: &ObstructionSet) -> String {
    match set {
        ObstructionSet::AllOdd => "odd".into(),
        ObstructionSet::Lengths(ls) => ls.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
    }
}

pub fn check_cycles(set: &ObstructionSet, spectrum: bool, paths: &[PathBuf], out: Option<&Path>) -> Result<Status> {
    let mut job = Job::start();
    let inputs = read_inputs(paths)?;
    let checks: Vec<CycleCheck> = par::map(&inputs, |input| {
        let violations = set.violations(&input.graph);
        let (full, partial) = if spectrum {
            match cycle_spectrum(&input.graph) {
                Ok(s) => (Some(s.into_iter().collect()), None),
                Err(SpectrumError::BudgetExceeded { partial }) => (None, Some(partial.into_iter().collect())),
            }
        } else {
            (None, None)
        };
        CycleCheck {
            graph: input.digest.path.clone(),
            forbidden: describe_obstruction(set),
            status: Status::from_ok(violations.is_empty()),
            violations,
            spectrum: full,
            spectrum_partial: partial,
        }
    });
    job.inputs = inputs.into_iter().map(|i| i.digest).collect();
    let status = checks.iter().map(|c| c.status).max().unwrap_or(Status::Pass);
    emit(&job.finish(status, checks), out)
}

#[derive(Serialize)]
struct SolveRecord {
    graph: String,
    spec: String,
    status: &'static str,
    /// 1-based classes.
    coloring: Option<BTreeMap<usize, usize>>,
    nodes: u64,
    millis: u128,
}

pub fn solve(
    spec: &ColorSpec,
    pins: &[(usize, usize)],
    expect: Option<&str>,
    path: Option<&Path>,
    out: Option<&Path>,
    budget: Budget,
) -> Result<Status> {
    let mut job = Job::start();
    let input = read_input(path)?;
    for &(v, c) in pins {
        if v >= input.graph.vertex_count() || c >= spec.classes() {
            bail!("pin {v}={} is out of range", c + 1);
        }
    }
    let report = decide_with_fixed(&input.graph, spec, pins, budget);
    let coloring = match &report.decision {
        Decision::Colorable(c) => Some(c.to_one_based()),
        _ => None,
    };
    let status_word = report.decision.status();
    let status = match expect {
        Some(want) => Status::from_ok(want == status_word),
        None => Status::Pass,
    };
    let record = SolveRecord {
        graph: input.digest.path.clone(),
        spec: spec.to_string(),
        status: status_word,
        coloring,
        nodes: report.nodes,
        millis: report.elapsed.as_millis(),
    };
    job.inputs.push(input.digest);
    emit(&job.finish(status, record), out)
}

#[derive(Serialize)]
struct MinDRecord {
    graph: String,
    classes: usize,
    /// `None` when the budget ran out first.
    min_d: Option<usize>,
    status: &'static str,
    millis: u128,
}

pub fn min_d(k: usize, path: Option<&Path>, out: Option<&Path>, budget: Budget) -> Result<Status> {
    if k == 0 {
        bail!("-k must be at least 1");
    }
    let mut job = Job::start();
    let input = read_input(path)?;
    let start = Instant::now();
    let result = min_unbalanced_defect(&input.graph, k, budget);
    let record = MinDRecord {
        graph: input.digest.path.clone(),
        classes: k,
        min_d: result.as_ref().ok().copied(),
        status: if result.is_ok() { "decided" } else { "unverified_budget" },
        millis: start.elapsed().as_millis(),
    };
    job.inputs.push(input.digest);
    emit(&job.finish(Status::Pass, record), out)
}

pub fn cnf(spec: &ColorSpec, path: Option<&Path>, out: Option<&Path>) -> Result<Status> {
    let input = read_input(path)?;
    let text = export_cnf(&input.graph, spec).to_dimacs();
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?,
        None => write_stdout(&text)?,
    }
    Ok(Status::Pass)
}

#[derive(Serialize)]
struct DischargeRecord {
    graph: String,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    audit: Option<AuditReport>,
}

pub fn discharge(section: Section, paths: &[PathBuf], csv: Option<&Path>, out: Option<&Path>) -> Result<Status> {
    let mut job = Job::start();
    let inputs = read_inputs(paths)?;
    let records: Vec<(DischargeRecord, Option<String>)> = par::map(&inputs, |input| {
        let name = input.digest.path.clone();
        match (audit(&input.graph, section), apply_rules(&input.graph, section)) {
            (Ok(report), Ok(ledger)) => {
                let ok = report.conserved && report.total_matches_expected && report.reducible_found;
                let record =
                    DischargeRecord { graph: name, status: Status::from_ok(ok), error: None, audit: Some(report) };
                (record, Some(ledger.to_csv()))
            }
            (Err(e), _) | (_, Err(e)) => {
                (DischargeRecord { graph: name, status: Status::Error, error: Some(e.to_string()), audit: None }, None)
            }
        }
    });
    if let Some(path) = csv {
        let mut text = String::from("graph,rule,source,target,amount\n");
        for (record, ledger) in &records {
            for line in ledger.iter().flat_map(|l| l.lines().skip(1)) {
                text.push_str(&format!("{},{line}\n", record.graph));
            }
        }
        job.write_artifact(path, &text)?;
    }
    job.inputs = inputs.into_iter().map(|i| i.digest).collect();
    let records: Vec<DischargeRecord> = records.into_iter().map(|(r, _)| r).collect();
    let status = records.iter().map(|r| r.status).max().unwrap_or(Status::Pass);
    emit(&job.finish(status, records), out)
}

#[derive(Serialize)]
struct ColorRecord {
    graph: String,
    spec: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<BTreeMap<usize, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<ColorerStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn color55(path: Option<&Path>, fallback: bool, out: Option<&Path>, budget: Budget) -> Result<Status> {
    let mut job = Job::start();
    let input = read_input(path)?;
    let opts = ColorerOptions { fallback_solver: fallback, solver_budget: budget };
    let mut record = ColorRecord {
        graph: input.digest.path.clone(),
        spec: ColorSpec::balanced(2, colorer::CAP).to_string(),
        coloring: None,
        stats: None,
        error: None,
    };
    let status = match colorer::color55(&input.graph, &opts) {
        Ok((c, stats)) => {
            let map = c.to_one_based();
            match out {
                Some(p) => job.write_artifact(p, &(serde_json::to_string_pretty(&map)? + "\n"))?,
                None => record.coloring = Some(map),
            }
            record.stats = Some(stats);
            Status::Pass
        }
        Err(e) => {
            record.error = Some(e.to_string());
            match e {
                ColorerError::NotEmbedded | ColorerError::NotPlanar | ColorerError::ContainsC4 => Status::Error,
                _ => Status::Fail,
            }
        }
    };
    job.inputs.push(input.digest);
    emit(&job.finish(status, record), None)
}

fn read_descriptor(path: &Path) -> Result<GadgetDescriptor> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("{} is not JSON", path.display()))?;
    let inner = value.get("descriptor").cloned().unwrap_or(value);
    serde_json::from_value(inner).with_context(|| format!("{} holds no gadget descriptor", path.display()))
}

#[derive(Serialize)]
struct GadgetCheck {
    graph: String,
    family: Family,
    #[serde(rename = "D")]
    d: usize,
    l: Option<usize>,
    verification: VerificationReport,
    passed: usize,
    failed: usize,
    unverified: usize,
}

pub fn verify_gadget(
    graph: &Path,
    descriptor: Option<&Path>,
    max_solver_d: usize,
    out: Option<&Path>,
    budget: Budget,
) -> Result<Status> {
    let mut job = Job::start();
    let input = read_input(Some(graph))?;
    let desc_path = descriptor.map(Path::to_path_buf).unwrap_or_else(|| sidecar_path(graph));
    let desc = read_descriptor(&desc_path)?;
    let verification = verify_descriptor(&input.graph, &desc, &verify_options(budget, max_solver_d));
    let count = |s| verification.claims.iter().filter(|c| c.status == s).count();
    let check = GadgetCheck {
        graph: input.digest.path.clone(),
        family: desc.family,
        d: desc.d,
        l: desc.l,
        passed: count(ClaimStatus::Pass),
        failed: count(ClaimStatus::Fail),
        unverified: count(ClaimStatus::Unverified),
        verification,
    };
    job.inputs.push(input.digest);
    let status = Status::from_ok(check.failed == 0);
    emit(&job.finish(status, check), out)
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    fn of(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

#[derive(Serialize)]
struct GraphAudit {
    name: String,
    vertices: usize,
    edges: usize,
    checks: BTreeMap<String, CheckStatus>,
}

fn audit_graph(name: &str, g: &PlaneGraph) -> GraphAudit {
    let mut checks = BTreeMap::new();
    let euler = g.is_euler_certified();
    checks.insert("euler".to_string(), CheckStatus::of(euler));
    if euler {
        let faces = trace_faces(g).expect("certified graphs trace");
        let e = g.edge_count();
        let handshake = g.vertices().map(|v| g.degree(v)).sum::<usize>() == 2 * e
            && faces.walks().iter().map(|f| f.degree()).sum::<usize>() == 2 * e
            && faces
                .walks()
                .iter()
                .all(|f| f.distinct_vertices().iter().map(|&v| f.k_incidence(v)).sum::<usize>() == f.degree());
        checks.insert("handshake".to_string(), CheckStatus::of(handshake));
    }
    for s in Section::ALL {
        let total = match initial_charges(g, s) {
            Ok(l) => CheckStatus::of(l.initial_total() == s.expected_total().into()),
            Err(_) => CheckStatus::Skipped,
        };
        checks.insert(format!("{s}.total"), total);
        let (conserved, meta) = if euler && hypotheses_hold(g, s) {
            let conserved = apply_rules(g, s).map(|l| l.final_total() == l.initial_total()).unwrap_or(false);
            (CheckStatus::of(conserved), CheckStatus::of(!find_reducible(g, s).is_empty()))
        } else {
            (CheckStatus::Skipped, CheckStatus::Skipped)
        };
        checks.insert(format!("{s}.conservation"), conserved);
        checks.insert(format!("{s}.reducible_found"), meta);
    }
    let color = if euler && !has_cycle_of_length(g, 4) {
        CheckStatus::of(colorer::color55(g, &ColorerOptions::default()).is_ok())
    } else {
        CheckStatus::Skipped
    };
    checks.insert("color55".to_string(), color);
    GraphAudit { name: name.to_string(), vertices: g.vertex_count(), edges: g.edge_count(), checks }
}

#[derive(Serialize)]
struct CorpusSummary {
    graphs: usize,
    checks_passed: usize,
    checks_failed: usize,
    checks_skipped: usize,
    failures: Vec<String>,
    audits: Vec<GraphAudit>,
}

fn file_name_for(name: &str) -> String {
    let clean: String = name
        .chars()
        .map(|c| match c {
            'a'..='z' | 'A'..='Z' | '0'..='9' | '-' | '_' => c,
            '\'' => 'p',
            _ => '_',
        })
        .collect();
    format!("{clean}.rot")
}

pub fn corpus_audit(paths: &[PathBuf], seed: u64, export: Option<&Path>, out: Option<&Path>) -> Result<Status> {
    let mut job = Job::start();
    let graphs: Vec<NamedGraph> = if paths.is_empty() {
        let mut gs = corpus::structural(seed);
        gs.extend(corpus::c4_free(seed));
        gs
    } else {
        let inputs = read_inputs(paths)?;
        let named = inputs.iter().map(|i| NamedGraph { name: i.digest.path.clone(), graph: i.graph.clone() }).collect();
        job.inputs = inputs.into_iter().map(|i| i.digest).collect();
        named
    };
    if let Some(dir) = export {
        std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
        for (i, ng) in graphs.iter().enumerate() {
            let path = dir.join(format!("{i:03}-{}", file_name_for(&ng.name)));
            job.write_artifact(&path, &write_rotation_file(&ng.graph))?;
        }
    }
    let audits = par::map(&graphs, |ng| audit_graph(&ng.name, &ng.graph));
    let count = |s: CheckStatus| audits.iter().flat_map(|a| a.checks.values()).filter(|&&c| c == s).count();
    let failures: Vec<String> = audits
        .iter()
        .flat_map(|a| {
            a.checks.iter().filter(|(_, &c)| c == CheckStatus::Fail).map(move |(k, _)| format!("{}: {k}", a.name))
        })
        .collect();
    let summary = CorpusSummary {
        graphs: audits.len(),
        checks_passed: count(CheckStatus::Pass),
        checks_failed: count(CheckStatus::Fail),
        checks_skipped: count(CheckStatus::Skipped),
        failures,
        audits,
    };
    let status = Status::from_ok(summary.checks_failed == 0);
    emit(&job.finish(status, summary), out)
}
