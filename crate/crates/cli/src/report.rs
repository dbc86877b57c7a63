use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};

use planar_defect::graph::PlaneGraph;
use planar_defect::io::parse_graph;

pub const SCHEMA_VERSION: u32 = 1;

/// How a job ended. Maps onto the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// A graph read from a file or stdin, with its digest.
pub struct Input {
    pub digest: InputDigest,
    pub graph: PlaneGraph,
}

pub fn read_input(path: Option<&Path>) -> Result<Input> {
    let (name, bytes) = match path {
        Some(p) if p.as_os_str() != "-" => {
            let bytes = std::fs::read(p).with_context(|| format!("cannot read {}", p.display()))?;
            (p.display().to_string(), bytes)
        }
        _ => {
            let mut bytes = Vec::new();
            std::io::stdin().read_to_end(&mut bytes).context("cannot read stdin")?;
            ("-".to_string(), bytes)
        }
    };
    let text = String::from_utf8(bytes.clone()).with_context(|| format!("{name} is not UTF-8"))?;
    let graph = parse_graph(&text).with_context(|| format!("cannot parse {name}"))?;
    Ok(Input { digest: InputDigest { path: name, sha256: sha256_hex(&bytes) }, graph })
}

/// Reads every path, or stdin when the list is empty.
pub fn read_inputs(paths: &[PathBuf]) -> Result<Vec<Input>> {
    if paths.is_empty() {
        return Ok(vec![read_input(None)?]);
    }
    paths.iter().map(|p| read_input(Some(p))).collect()
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

#[derive(Debug, Serialize)]
pub struct JobReport<T: Serialize> {
    pub schema: u32,
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub status: Status,
    pub elapsed_ms: u128,
    pub artifacts: Vec<String>,
    pub result: T,
}

/// Collects the parts of a report while a job runs.
pub struct Job {
    start: Instant,
    pub inputs: Vec<InputDigest>,
    pub artifacts: Vec<String>,
}

impl Job {
    pub fn start() -> Self {
        Job { start: Instant::now(), inputs: Vec::new(), artifacts: Vec::new() }
    }

    pub fn write_artifact(&mut self, path: &Path, contents: &str) -> Result<()> {
        std::fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))?;
        self.artifacts.push(path.display().to_string());
        Ok(())
    }

    pub fn finish<T: Serialize>(self, status: Status, result: T) -> JobReport<T> {
        JobReport {
            schema: SCHEMA_VERSION,
            command: std::env::args().collect(),
            inputs: self.inputs,
            status,
            elapsed_ms: self.start.elapsed().as_millis(),
            artifacts: self.artifacts,
            result,
        }
    }
}

/// Prints the report to stdout, or writes it to `out`.
pub fn emit<T: Serialize>(report: &JobReport<T>, out: Option<&Path>) -> Result<Status> {
    let text = serde_json::to_string_pretty(report)?;
    match out {
        Some(p) => std::fs::write(p, text + "\n").with_context(|| format!("cannot write {}", p.display()))?,
        None => write_stdout(&(text + "\n"))?,
    }
    Ok(report.status)
}

/// Writes to stdout; a closed pipe (as with `| head`) is not an error.
pub fn write_stdout(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e).context("cannot write stdout"),
        _ => Ok(()),
    }
}
