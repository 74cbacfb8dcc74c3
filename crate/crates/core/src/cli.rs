//! Command-line front end.
//!
//! Every subcommand writes one JSON line ([`ReportRecord`]) to standard
//! output and a short human-readable summary to standard error.
//!
//! Exit codes: 0 success, 1 a replayed trace did not reproduce, 2 usage
//! error, 3 a result contradicting the claimed classification (a solution
//! outside the `9324·11^{3M}` family, or a hit in a scan expected empty).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::bounds::{BoundsError, SearchBounds};
use crate::cases::{self, CaseError};
use crate::family::{self, Certification};
use crate::oracle::{self, Checkpoint};
use crate::report::{ReplayFailure, ReportRecord, ReportResult};
use crate::solution::Solution;
use crate::trace::EliminationTrace;
use crate::Nat;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dioph11", version, about = "Exact resolution and search for x^2 + 11^m = y^n")]
pub struct Cli {
    /// TOML file with bound keys (y_max, x_max, m_max, n_max, k_max, a_max); flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads for the parallel scans.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Default, Args)]
struct BoundFlags {
    #[arg(long)]
    y_max: Option<u64>,
    #[arg(long)]
    x_max: Option<u64>,
    #[arg(long)]
    m_max: Option<u32>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    k_max: Option<u32>,
    #[arg(long)]
    a_max: Option<u64>,
}

#[derive(Debug, Args)]
struct QuadArgs {
    #[arg(long)]
    x: Nat,
    #[arg(long)]
    y: Nat,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
}

impl QuadArgs {
    fn solution(&self) -> Solution {
        Solution::new(self.x.clone(), self.y.clone(), self.m, self.n)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the case analysis for one (m, n).
    Solve {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        bounds: BoundFlags,
    },
    /// Brute-force search over y <= y_max, odd m <= m_max, n <= n_max.
    Search {
        #[command(flatten)]
        bounds: BoundFlags,
        /// JSON-lines file of completed (m, n) cells, resumed if present.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Check x^2 + 11^m = y^n exactly.
    Certify(QuadArgs),
    /// The family member with index M.
    Family {
        #[arg(long = "M")]
        index: u32,
    },
    /// Family index of a certified solution.
    Identify(QuadArgs),
    /// Scan 11x^2 + 1 = y^n for odd n.
    Nagell {
        #[command(flatten)]
        bounds: BoundFlags,
    },
    /// Scan x^2 + 11 = y^n.
    Cohn {
        #[command(flatten)]
        bounds: BoundFlags,
    },
    /// Scan the integral-form imaginary-part equation.
    Eq5 {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        bounds: BoundFlags,
    },
    /// Scan 3a^2 + 8 = 11^(2k+1) and its sign variant.
    Aux3a2 {
        #[command(flatten)]
        bounds: BoundFlags,
    },
    /// Full elimination narrative for one (m, n).
    Trace {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        bounds: BoundFlags,
    },
    /// Replay every trace found in a JSON-lines file.
    CheckTrace {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Case(#[from] CaseError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_CHECK_FAILED,
            _ => EXIT_USAGE,
        }
    }
}

/// Result of one command before serialization.
struct Outcome {
    inputs: BTreeMap<String, String>,
    result: ReportResult,
    summary: String,
    /// Statements that contradict the claimed classification.
    violations: Vec<String>,
    check_failed: bool,
}

impl Outcome {
    fn new(result: ReportResult, summary: String) -> Self {
        Outcome {
            inputs: BTreeMap::new(),
            result,
            summary,
            violations: Vec::new(),
            check_failed: false,
        }
    }

    fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_owned(), value.to_string());
        self
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let started = Instant::now();
    let command = command_name(&cli.command).to_owned();
    let executed = prepare_bounds(&cli).and_then(|bounds| {
        let outcome = match cli.jobs {
            Some(jobs) => rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?
                .install(|| execute(&cli.command, &bounds)),
            None => execute(&cli.command, &bounds),
        }?;
        Ok((bounds, outcome))
    });
    let (bounds, outcome) = match executed {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let record = ReportRecord {
        command,
        inputs: outcome.inputs,
        result: outcome.result,
        elapsed_ms: started.elapsed().as_millis() as u64,
        bounds,
    };
    let line = serde_json::to_string(&record).expect("records serialize");
    if writeln!(out, "{line}").is_err() {
        return EXIT_CHECK_FAILED;
    }
    let _ = writeln!(err, "{}: {}", record.command, outcome.summary);
    for v in &outcome.violations {
        let _ = writeln!(err, "VIOLATION: {v}");
    }
    if !outcome.violations.is_empty() {
        EXIT_VIOLATION
    } else if outcome.check_failed {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Solve { .. } => "solve",
        Command::Search { .. } => "search",
        Command::Certify(_) => "certify",
        Command::Family { .. } => "family",
        Command::Identify(_) => "identify",
        Command::Nagell { .. } => "nagell",
        Command::Cohn { .. } => "cohn",
        Command::Eq5 { .. } => "eq5",
        Command::Aux3a2 { .. } => "aux3a2",
        Command::Trace { .. } => "trace",
        Command::CheckTrace { .. } => "check-trace",
    }
}

fn prepare_bounds(cli: &Cli) -> Result<SearchBounds, CliError> {
    let mut bounds = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            toml::from_str(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
        }
        None => SearchBounds::default(),
    };
    let flags = match &cli.command {
        Command::Solve { bounds, .. }
        | Command::Search { bounds, .. }
        | Command::Nagell { bounds }
        | Command::Cohn { bounds }
        | Command::Eq5 { bounds, .. }
        | Command::Aux3a2 { bounds }
        | Command::Trace { bounds, .. } => Some(bounds),
        _ => None,
    };
    if let Some(f) = flags {
        bounds.y_max = f.y_max.unwrap_or(bounds.y_max);
        bounds.x_max = f.x_max.unwrap_or(bounds.x_max);
        bounds.m_max = f.m_max.unwrap_or(bounds.m_max);
        bounds.n_max = f.n_max.unwrap_or(bounds.n_max);
        bounds.k_max = f.k_max.unwrap_or(bounds.k_max);
        bounds.a_max = f.a_max.unwrap_or(bounds.a_max);
    }
    bounds.validate()?;
    Ok(bounds)
}

fn off_family(solutions: &[Solution]) -> Vec<String> {
    solutions
        .iter()
        .filter(|s| !matches!(family::identify(s), Ok(Some(_))))
        .map(|s| format!("{s} is not a member of the 9324*11^(3M) family"))
        .collect()
}

fn execute(command: &Command, bounds: &SearchBounds) -> Result<Outcome, CliError> {
    Ok(match command {
        Command::Solve { m, n, .. } => {
            let r = cases::solve(*m, *n, bounds)?;
            let summary = format!(
                "{} solution(s), {} trace(s) for m = {m}, n = {n}",
                r.solutions.len(),
                r.traces.len()
            );
            let violations = off_family(&r.solutions);
            let mut o = Outcome::new(
                ReportResult::Resolution {
                    solutions: r.solutions,
                    traces: r.traces,
                },
                summary,
            )
            .input("m", m)
            .input("n", n);
            o.violations = violations;
            o
        }
        Command::Trace { m, n, .. } => {
            let r = cases::solve(*m, *n, bounds)?;
            let summary = r
                .traces
                .iter()
                .map(|t| format!("\n  {t}"))
                .collect::<String>();
            Outcome::new(ReportResult::Traces(r.traces), summary)
                .input("m", m)
                .input("n", n)
        }
        Command::Search { checkpoint, .. } => {
            let hits = match checkpoint {
                Some(path) => {
                    let io_err = |source| CliError::Io {
                        path: path.clone(),
                        source,
                    };
                    let cp = Checkpoint::open(path).map_err(io_err)?;
                    oracle::brute_force_resumable(bounds, &cp).map_err(io_err)?
                }
                None => oracle::brute_force(bounds),
            };
            let summary = format!("{} hit(s)", hits.len());
            let mut violations = off_family(&hits);
            violations.extend(
                hits.iter()
                    .filter(|s| !family::certify(s).is_certified())
                    .map(|s| format!("{s} fails the identity check")),
            );
            let mut o = Outcome::new(ReportResult::Solutions(hits), summary);
            o.violations = violations;
            o
        }
        Command::Certify(q) => {
            let c = family::certify(&q.solution());
            let summary = match c {
                Certification::Certified => "certified".to_owned(),
                Certification::CertifiedBaseCase => "certified (m = 1 lies outside m > 1)".into(),
                Certification::Rejected(r) => format!("rejected: {r}"),
            };
            quad_inputs(Outcome::new(ReportResult::Certification(c), summary), q)
        }
        Command::Family { index } => {
            let s = family::member(*index);
            let summary = format!("M = {index}: {s}");
            Outcome::new(ReportResult::Solutions(vec![s]), summary).input("M", index)
        }
        Command::Identify(q) => {
            let index = family::identify(&q.solution()).map_err(|e| CliError::Usage(e.to_string()))?;
            let summary = match index {
                Some(i) => format!("family member M = {i}"),
                None => "not a family member".to_owned(),
            };
            quad_inputs(
                Outcome::new(ReportResult::Identification { family_index: index }, summary),
                q,
            )
        }
        Command::Nagell { .. } => {
            let hits = oracle::nagell_scan(bounds.x_max, bounds.n_max);
            let violations = hits
                .iter()
                .map(|h| format!("11*{}^2 + 1 = {}^{}", h.x, h.y, h.n))
                .collect();
            let mut o = Outcome::new(
                ReportResult::Hits(hits),
                format!("x <= {}, odd n <= {}", bounds.x_max, bounds.n_max),
            );
            o.violations = violations;
            o
        }
        Command::Cohn { .. } => {
            let hits = oracle::cohn_base_scan(bounds.x_max, bounds.n_max);
            let known: Vec<(Nat, Nat)> = family::M1_BASE
                .iter()
                .map(|&(x, y)| (Nat::from(x), Nat::from(y)))
                .collect();
            let violations = hits
                .iter()
                .filter(|h| h.n != 3 || !known.contains(&(h.x.clone(), h.y.clone())))
                .map(|h| format!("{}^2 + 11 = {}^{} is not a known base solution", h.x, h.y, h.n))
                .collect();
            let summary = format!("{} hit(s)", hits.len());
            let mut o = Outcome::new(ReportResult::Hits(hits), summary);
            o.violations = violations;
            o
        }
        Command::Eq5 { p, k, .. } => {
            let roots = cases::eq5_search(*p, *k, bounds.a_max)?;
            let violations = roots.iter().map(|a| format!("a = {a} solves the equation")).collect();
            let summary = format!("{} root(s) with |a| <= {}", roots.len(), bounds.a_max);
            let mut o = Outcome::new(ReportResult::Roots(roots), summary)
                .input("p", p)
                .input("k", k);
            o.violations = violations;
            o
        }
        Command::Aux3a2 { .. } => {
            let report = cases::search_3a2_plus_8(bounds.k_max)?;
            let mut violations: Vec<String> = report
                .solutions
                .iter()
                .filter(|s| !(s.k == 1 && s.a == Nat::from(21u32)))
                .map(|s| format!("3*{}^2 + 8 = 11^{}", s.a, 2 * s.k + 1))
                .collect();
            violations.extend(
                report
                    .plus_sign_solutions
                    .iter()
                    .map(|s| format!("3*{}^2 - 8 = 11^{}", s.a, 2 * s.k + 1)),
            );
            let summary = format!(
                "{} solution(s) for k <= {}; plus sign residues mod 3: {:?}",
                report.solutions.len(),
                report.k_max,
                report.plus_sign_mod_3
            );
            let mut o = Outcome::new(ReportResult::Auxiliary(report), summary);
            o.violations = violations;
            o
        }
        Command::CheckTrace { file } => check_trace(file)?,
    })
}

fn quad_inputs(o: Outcome, q: &QuadArgs) -> Outcome {
    o.input("x", &q.x).input("y", &q.y).input("m", q.m).input("n", q.n)
}

/// Traces in a JSON-lines file of report records or bare traces.
fn read_traces(path: &PathBuf) -> Result<Vec<(usize, EliminationTrace)>, CliError> {
    let io_err = |source| CliError::Io {
        path: path.clone(),
        source,
    };
    let reader = BufReader::new(fs::File::open(path).map_err(io_err)?);
    let mut traces = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(io_err)?;
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        if let Ok(record) = serde_json::from_str::<ReportRecord>(&line) {
            traces.extend(record.result.traces().iter().cloned().map(|t| (line_no, t)));
        } else {
            let t = serde_json::from_str::<EliminationTrace>(&line).map_err(|e| {
                CliError::Usage(format!("{}:{line_no}: not a record or trace: {e}", path.display()))
            })?;
            traces.push((line_no, t));
        }
    }
    Ok(traces)
}

fn check_trace(path: &PathBuf) -> Result<Outcome, CliError> {
    let traces = read_traces(path)?;
    let failures: Vec<ReplayFailure> = traces
        .iter()
        .filter_map(|(line, t)| {
            cases::replay(t).err().map(|e| ReplayFailure {
                line: *line,
                rule: t.rule,
                error: e.to_string(),
            })
        })
        .collect();
    let summary = format!("{} trace(s) replayed, {} failure(s)", traces.len(), failures.len());
    let check_failed = !failures.is_empty();
    let mut o = Outcome::new(
        ReportResult::Replay {
            checked: traces.len(),
            failures,
        },
        summary,
    )
    .input("file", path.display());
    o.check_failed = check_failed;
    Ok(o)
}
