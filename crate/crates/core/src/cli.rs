//! The `nonham` command line.
//!
//! Exit status: 0 on success or confirmation, 1 on usage or input errors,
//! 2 when a verification is refuted or an identity check fails.

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::bounds::{theorem2_bound, theorem2_bound_product_form, BoundQuery};
use crate::closure::{bondy_chvatal_closure, maximal_nonhamiltonian_completion};
use crate::cycles::{moment_summary, xj_distribution};
use crate::error::{Error, Result};
use crate::exact::ExactCount;
use crate::graph::Graph;
use crate::graph6::{parse_graph6_lines, write_graph6};
use crate::paths::{count_hamilton_cycles, count_hamilton_paths, count_paths};
use crate::verify::{Claim, Shard, SweepSource, VerificationReport, Verdict, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "nonham", version, about = "Path counts and extremal checks for nonhamiltonian graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count paths of length k, Hamilton paths or Hamilton cycles.
    Count {
        /// An integer length, `hamilton-path` or `hamilton-cycle`.
        #[arg(long)]
        k: String,
        /// graph6 file, or `-` for stdin.
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Maximum number of length-k paths in a nonhamiltonian graph of order n.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Bondy–Chvátal closure, or a maximal nonhamiltonian completion.
    Closure {
        #[arg(long)]
        maximal: bool,
        #[arg(long = "in", default_value = "-")]
        input: String,
    },
    /// Hamilton cycle distribution and moments, one JSON object per graph.
    Xj {
        #[arg(long = "in", default_value = "-")]
        input: String,
    },
    /// Exhaustive verification sweep.
    Verify {
        /// theorem1, theorem2, corollary3 or lemma6.
        claim: String,
        #[arg(long)]
        n: usize,
        /// Path length for theorem2; all lengths when omitted.
        #[arg(long)]
        k: Option<usize>,
        /// `builtin` or `graph6:<path>` (`graph6:-` for stdin).
        #[arg(long, default_value = "builtin")]
        source: String,
        /// Run only shard `i/t`.
        #[arg(long)]
        shard: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Emit the CSV summary instead of JSON.
        #[arg(long)]
        csv: bool,
        /// Leave `elapsed_seconds` out of the JSON document.
        #[arg(long)]
        no_timing: bool,
    },
    /// Emit a named graph as graph6.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// K_{n-1}·K_2.
    Extremal {
        #[arg(long)]
        n: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
}

/// A failure with its exit status.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::IdentityViolation { .. } => EXIT_REFUTED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn read_graphs(input: &str, stdin: &mut dyn BufRead) -> Result<Vec<Graph>> {
    let mut text = String::new();
    if input == "-" {
        stdin.read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(input)?;
    }
    let graphs = parse_graph6_lines(&text)?;
    if graphs.is_empty() {
        return Err(Error::Graph6("no graphs in input".into()));
    }
    Ok(graphs)
}

enum CountKind {
    Length(usize),
    HamiltonPath,
    HamiltonCycle,
}

fn parse_count_kind(k: &str) -> Result<CountKind> {
    match k {
        "hamilton-path" => Ok(CountKind::HamiltonPath),
        "hamilton-cycle" => Ok(CountKind::HamiltonCycle),
        _ => k.parse().map(CountKind::Length).map_err(|_| {
            Error::InvalidParameters(format!(
                "--k must be an integer, hamilton-path or hamilton-cycle; got {k:?}"
            ))
        }),
    }
}

fn write_json(out: &mut dyn Write, value: &serde_json::Value, pretty: bool) -> std::io::Result<()> {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("json values serialize");
    writeln!(out, "{text}")
}

fn execute(cli: Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    match cli.command {
        Command::Count { k, input, json } => {
            let kind = parse_count_kind(&k)?;
            let graphs = read_graphs(&input, stdin)?;
            let mut rows = Vec::new();
            for g in &graphs {
                let c: ExactCount = match kind {
                    CountKind::Length(k) => count_paths(g, k)?,
                    CountKind::HamiltonPath => count_hamilton_paths(g)?,
                    CountKind::HamiltonCycle => count_hamilton_cycles(g)?,
                };
                if json {
                    rows.push(json!({"graph6": write_graph6(g), "k": k, "count": c}));
                } else {
                    writeln!(out, "{c}")?;
                }
            }
            if json {
                write_json(out, &serde_json::Value::Array(rows), false)?;
            }
        }
        Command::Bound { n, k, json } => {
            let q = BoundQuery::new(n, k)?;
            let bound = theorem2_bound(q);
            if json {
                let agrees = theorem2_bound_product_form(q)
                    == num_rational::Ratio::from_integer(bound.value().clone());
                write_json(
                    out,
                    &json!({"n": n, "k": k, "bound": bound, "product_form_agrees": agrees}),
                    false,
                )?;
            } else {
                writeln!(out, "{bound}")?;
            }
        }
        Command::Closure { maximal, input } => {
            for g in read_graphs(&input, stdin)? {
                if maximal {
                    let h = maximal_nonhamiltonian_completion(&g)?;
                    let added: Vec<_> = h.edges().into_iter().filter(|&(u, v)| !g.has_edge(u, v)).collect();
                    writeln!(out, "{}", write_graph6(&h))?;
                    write_json(out, &json!({"added_edges": added}), false)?;
                } else {
                    let (h, trace) = bondy_chvatal_closure(&g);
                    writeln!(out, "{}", write_graph6(&h))?;
                    write_json(out, &serde_json::to_value(&trace).expect("trace serializes"), false)?;
                }
            }
        }
        Command::Xj { input } => {
            for g in read_graphs(&input, stdin)? {
                let dist = xj_distribution(&g)?;
                let moments = moment_summary(&g, &dist)?;
                write_json(
                    out,
                    &json!({"graph6": write_graph6(&g), "distribution": dist, "moments": moments}),
                    false,
                )?;
            }
        }
        Command::Verify {
            claim,
            n,
            k,
            source,
            shard,
            jobs,
            csv,
            no_timing,
        } => {
            let claim: Claim = claim.parse()?;
            let mut src = match source.as_str() {
                "builtin" => SweepSource::builtin(),
                other => match other.strip_prefix("graph6:") {
                    Some("-") => {
                        let mut text = String::new();
                        stdin.read_to_string(&mut text)?;
                        SweepSource::graph6_text("-", &text)?
                    }
                    Some(path) => SweepSource::graph6_file(&PathBuf::from(path))?,
                    None => {
                        return Err(Error::InvalidParameters(format!(
                            "--source must be builtin or graph6:<path>, got {other:?}"
                        ))
                        .into())
                    }
                },
            };
            if let Some(s) = shard {
                src = src.with_shard(s.parse::<Shard>()?);
            }
            if k.is_some() && claim != Claim::Theorem2 {
                return Err(Error::InvalidParameters(format!("--k does not apply to {claim}")).into());
            }
            let verifier = Verifier::new(n, src).jobs(jobs);
            let reports: Vec<VerificationReport> = match claim {
                Claim::Theorem1 => vec![verifier.theorem1()?],
                Claim::Theorem2 => match k {
                    Some(k) => vec![verifier.theorem2(k)?],
                    None => verifier.theorem2_all()?,
                },
                Claim::Corollary3 => vec![verifier.corollary3()?],
                Claim::Lemma6 => vec![verifier.lemma6()?],
            };
            if csv {
                writeln!(out, "{}", VerificationReport::CSV_HEADER)?;
                for r in &reports {
                    writeln!(out, "{}", r.csv_row())?;
                }
            } else {
                let docs: Vec<_> = reports.iter().map(|r| r.to_json(!no_timing)).collect();
                let doc = if docs.len() == 1 {
                    docs.into_iter().next().unwrap()
                } else {
                    serde_json::Value::Array(docs)
                };
                write_json(out, &doc, true)?;
            }
            if reports.iter().any(|r| r.verdict == Verdict::Refuted) {
                return Ok(EXIT_REFUTED);
            }
        }
        Command::Gen { family } => {
            let g = match family {
                Family::Extremal { n } => Graph::extremal(n)?,
                Family::Complete { n } => Graph::complete(n)?,
                Family::Path { n } => Graph::path(n)?,
                Family::Cycle { n } => Graph::cycle(n)?,
            };
            writeln!(out, "{}", write_graph6(&g))?;
        }
    }
    Ok(EXIT_OK)
}

/// Runs the command line with explicit streams and returns the exit status.
pub fn run_with_io<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, stdin, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Runs the command line against the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = std::io::stdin();
    let mut lock = stdin.lock();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let stderr = std::io::stderr();
    let mut err = stderr.lock();
    run_with_io(args, &mut lock, &mut out, &mut err)
}
