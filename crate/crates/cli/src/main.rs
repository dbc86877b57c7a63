//! `planar-defect`: command-line front end for the defective-colouring toolkit.
//!
//! Exit codes: 0 when every check passes, 1 when a checked claim fails, 2 on
//! usage or input errors. Reports are JSON with a `schema` version field.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use planar_defect::color::{Budget, ColorSpec};
use planar_defect::discharging::Section;
use planar_defect::gadgets::Family;
use planar_defect::graph::ObstructionSet;

/// Environment variable holding the default solver node budget.
pub const NODES_ENV: &str = "PLANAR_DEFECT_NODES";
const DEFAULT_NODES: u64 = 200_000_000;

#[derive(Debug, Parser)]
#[command(name = "planar-defect", version, about = "Defective colouring of planar graphs")]
struct Cli {
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct BudgetArgs {
    /// Search-node limit per solver call (default: $PLANAR_DEFECT_NODES or 200000000).
    #[arg(long, global = true)]
    nodes: Option<u64>,
    /// Wall-clock limit per solver call, in seconds.
    #[arg(long, global = true)]
    seconds: Option<f64>,
}

impl BudgetArgs {
    fn resolve(&self) -> anyhow::Result<Budget> {
        let nodes = match self.nodes {
            Some(n) => n,
            None => match std::env::var(NODES_ENV) {
                Ok(v) => v.trim().parse().map_err(|_| anyhow::anyhow!("{NODES_ENV}={v:?} is not a node count"))?,
                Err(_) => DEFAULT_NODES,
            },
        };
        let max_time = match self.seconds {
            Some(s) if !(s.is_finite() && s > 0.0) => anyhow::bail!("--seconds must be positive"),
            Some(s) => Some(Duration::from_secs_f64(s)),
            None => None,
        };
        Ok(Budget { max_nodes: Some(nodes), max_time })
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a gadget and write it as a rotation file.
    Gadget {
        /// Family: H2, H1, H, F1, Fo, Fe, F, F', T0, T, X0 or X.
        family: Family,
        #[arg(long = "D", alias = "d")]
        d: usize,
        #[arg(long)]
        l: Option<usize>,
        /// Rotation file to write; a descriptor sidecar goes to `<out>.json`.
        /// Without it the rotation file is printed to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check graphs against forbidden cycle lengths.
    CheckCycles {
        /// Comma-separated lengths such as `3,4,6`, or `odd`.
        #[arg(long)]
        forbid: ObstructionSet,
        /// Also report the full set of cycle lengths.
        #[arg(long)]
        spectrum: bool,
        graphs: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide (d1,...,dk)-colourability exactly.
    Solve {
        #[arg(long)]
        spec: ColorSpec,
        /// Pin a vertex to a 1-based class, as `vertex=class`; repeatable.
        #[arg(long = "pin", value_parser = parse_pin)]
        pins: Vec<(usize, usize)>,
        /// Fail (exit 1) unless the decision matches.
        #[arg(long, value_parser = ["feasible", "infeasible"])]
        expect: Option<String>,
        graph: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Least D with a (0,...,0,D)-colouring using k classes.
    MinD {
        #[arg(long, short)]
        k: usize,
        graph: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the colourability question as DIMACS CNF.
    Cnf {
        #[arg(long)]
        spec: ColorSpec,
        graph: Option<PathBuf>,
        /// CNF file to write (stdout otherwise).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a discharging rule system and audit the result.
    Discharge {
        #[arg(long)]
        section: Section,
        graphs: Vec<PathBuf>,
        /// Write the transfer ledger of every graph as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Colour a planar graph without 4-cycles with two classes of defect 5.
    Color55 {
        graph: Option<PathBuf>,
        /// Colour irreducible graphs with the exact solver instead of failing.
        #[arg(long)]
        fallback_solver: bool,
        /// Colouring JSON `{vertex: class}` to write (classes 1-based).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a gadget file against its descriptor.
    VerifyGadget {
        graph: PathBuf,
        /// Descriptor JSON (default: `<graph>.json`).
        #[arg(long)]
        descriptor: Option<PathBuf>,
        /// Run the solver on colouring claims up to this D.
        #[arg(long, default_value_t = 1)]
        max_solver_d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every structural, discharging and colouring check over a corpus.
    CorpusAudit {
        /// Graph files; without them the built-in corpus is generated.
        graphs: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also write the built-in corpus as rotation files into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_pin(s: &str) -> Result<(usize, usize), String> {
    let (v, c) = s.split_once('=').ok_or_else(|| format!("expected vertex=class, got {s:?}"))?;
    let v = v.trim().parse().map_err(|_| format!("bad vertex in {s:?}"))?;
    let c: usize = c.trim().parse().map_err(|_| format!("bad class in {s:?}"))?;
    if c == 0 {
        return Err("classes are 1-based".into());
    }
    Ok((v, c - 1))
}

fn run(cli: Cli) -> anyhow::Result<report::Status> {
    let budget = cli.budget.resolve()?;
    match cli.command {
        Command::Gadget { family, d, l, out } => commands::gadget(family, d, l, out.as_deref(), budget),
        Command::CheckCycles { forbid, spectrum, graphs, out } => {
            commands::check_cycles(&forbid, spectrum, &graphs, out.as_deref())
        }
        Command::Solve { spec, pins, expect, graph, out } => {
            commands::solve(&spec, &pins, expect.as_deref(), graph.as_deref(), out.as_deref(), budget)
        }
        Command::MinD { k, graph, out } => commands::min_d(k, graph.as_deref(), out.as_deref(), budget),
        Command::Cnf { spec, graph, out } => commands::cnf(&spec, graph.as_deref(), out.as_deref()),
        Command::Discharge { section, graphs, csv, out } => {
            commands::discharge(section, &graphs, csv.as_deref(), out.as_deref())
        }
        Command::Color55 { graph, fallback_solver, out } => {
            commands::color55(graph.as_deref(), fallback_solver, out.as_deref(), budget)
        }
        Command::VerifyGadget { graph, descriptor, max_solver_d, out } => {
            commands::verify_gadget(&graph, descriptor.as_deref(), max_solver_d, out.as_deref(), budget)
        }
        Command::CorpusAudit { graphs, seed, export, out } => {
            commands::corpus_audit(&graphs, seed, export.as_deref(), out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(status) => ExitCode::from(status.exit_code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
