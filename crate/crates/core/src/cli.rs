//! The `mdlab` command line.
//!
//! Exit codes: 0 when the answer is "yes" (or the command just produces
//! data), 1 when a check or coloring fails, 2 on usage and input errors,
//! 3 when a search budget runs out before the answer is known.

use crate::analysis::{is_closure, theta_classes};
use crate::checks::{run_check, CheckOptions, CHECKS};
use crate::coloring::{is_md_coloring, ColoringJson};
use crate::error::Error;
use crate::extremal::{verify_f, verify_g, MdCatalog, ThresholdReport, ENUMERATION_CAP};
use crate::families::Family;
use crate::graph::{from_graph6, to_graph6, Graph};
use crate::products::{product, ProductKind};
use crate::solver::{md_exact, SearchConfig};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Read;
use std::time::Duration;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

/// Environment variable holding the default time budget in milliseconds.
pub const BUDGET_ENV: &str = "MDLAB_BUDGET_MS";

#[derive(Debug, Parser)]
#[command(
    name = "mdlab",
    version,
    about = "Monochromatic disconnection numbers of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct BudgetArgs {
    /// Time budget per solve in milliseconds (default: $MDLAB_BUDGET_MS).
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Search node budget per solve.
    #[arg(long)]
    node_budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute md(G) with a certificate coloring and the bound trail.
    Md {
        /// graph6 string, or `-` for stdin.
        graph: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check a coloring file ({"graph6": ..., "colors": [...]}) for the MD property.
    VerifyColoring {
        /// Path to the JSON file, or `-` for stdin.
        coloring: String,
    },
    /// Report whether all edges fall into one θ-class.
    Closure { graph: String },
    /// Build a named family member; prints graph6, then an annotation line.
    Gen { family: String, params: Vec<usize> },
    /// Form a graph product; prints graph6.
    Product { kind: String, left: String, right: String },
    /// Run a property suite (`mdlab check list` shows the ids).
    Check {
        id: String,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long, default_value_t = 200)]
        sample: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Verify f(n, r) or g(n, r) against every connected graph of order n.
    Census {
        threshold: Threshold,
        #[arg(long)]
        n: usize,
        /// A single r; all 1 <= r < n when omitted.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Read the graphs from a graph6 file instead of enumerating them.
        #[arg(long)]
        graphs: Option<String>,
        /// Allow the built-in enumeration at n = 8.
        #[arg(long)]
        long_run: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print a graph in Graphviz DOT.
    Dot { graph: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Threshold {
    F,
    G,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(code: i32, stdout: String) -> Output {
        Output {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(err: &Error) -> Output {
        let code = match err {
            Error::BudgetExhausted { .. } => EXIT_UNKNOWN,
            _ => EXIT_USAGE,
        };
        let stdout = match err {
            Error::BudgetExhausted { lower, upper } => {
                line(&json!({ "status": "unknown", "lower": lower, "upper": upper }))
            }
            _ => String::new(),
        };
        Output {
            code,
            stdout,
            stderr: format!("error: {err}\n"),
        }
    }
}

fn line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Runs one command. `args` excludes the program name.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("mdlab".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output::ok(code, text)
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut input = Input { stdin, consumed: None };
    match dispatch(cli.command, &mut input) {
        Ok(out) => out,
        Err(e) => Output::error(&e),
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    consumed: Option<String>,
}

impl Input<'_> {
    fn stdin_text(&mut self) -> Result<String, Error> {
        if self.consumed.is_none() {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Domain(format!("cannot read stdin: {e}")))?;
            self.consumed = Some(s);
        }
        Ok(self.consumed.clone().unwrap())
    }

    /// A graph argument: graph6 text, or `-` for the first non-empty line of
    /// stdin.
    fn graph(&mut self, arg: &str) -> Result<Graph, Error> {
        if arg == "-" {
            let text = self.stdin_text()?;
            let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            from_graph6(first)
        } else {
            from_graph6(arg.trim())
        }
    }

    fn file(&mut self, arg: &str) -> Result<String, Error> {
        if arg == "-" {
            self.stdin_text()
        } else {
            std::fs::read_to_string(arg).map_err(|e| Error::Domain(format!("cannot read {arg}: {e}")))
        }
    }
}

fn search_config(b: &BudgetArgs) -> Result<SearchConfig, Error> {
    let mut cfg = SearchConfig::default();
    let ms = match b.budget_ms {
        Some(ms) => Some(ms),
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => Some(
                v.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Domain(format!("{BUDGET_ENV} must be an integer, got '{v}'")))?,
            ),
            Err(_) => None,
        },
    };
    if let Some(ms) = ms {
        cfg = cfg.with_time_budget(Duration::from_millis(ms));
    }
    if let Some(nodes) = b.node_budget {
        cfg = cfg.with_node_budget(nodes);
    }
    Ok(cfg)
}

fn dispatch(cmd: Command, input: &mut Input) -> Result<Output, Error> {
    match cmd {
        Command::Md { graph, budget } => {
            let g = input.graph(&graph)?;
            let cfg = search_config(&budget)?;
            let r = md_exact(&g, &cfg)?;
            let v = json!({
                "graph6": to_graph6(&g)?,
                "n": g.n(),
                "m": g.m(),
                "value": r.value,
                "certificate": r.certificate.to_json(&g)?,
                "bounds": r.bounds,
                "blocks": r.blocks,
                "stats": r.stats,
            });
            Ok(Output::ok(EXIT_OK, line(&v)))
        }
        Command::VerifyColoring { coloring } => {
            let (g, c) = ColoringJson::parse(&input.file(&coloring)?)?;
            let (ok, cert) = is_md_coloring(&g, &c)?;
            let witnesses: Vec<Value> = cert.pairs().map(|(u, v, w)| json!([u, v, w])).collect();
            let v = json!({
                "md_coloring": ok,
                "colors_used": c.k(),
                "unseparated": cert.unseparated(),
                "witnesses": witnesses,
            });
            Ok(Output::ok(if ok { EXIT_OK } else { EXIT_FALSE }, line(&v)))
        }
        Command::Closure { graph } => {
            let g = input.graph(&graph)?;
            let closure = is_closure(&g);
            let v = json!({ "closure": closure, "theta_classes": theta_classes(&g).len() });
            Ok(Output::ok(if closure { EXIT_OK } else { EXIT_FALSE }, line(&v)))
        }
        Command::Gen { family, params } => {
            let built = Family::parse(&family, &params)?.build()?;
            let g6 = to_graph6(&built.graph)?;
            let note = json!({
                "family": family,
                "params": params,
                "n": built.graph.n(),
                "m": built.graph.m(),
                "labels": built.labels,
            });
            let note = serde_json::to_string(&note).expect("JSON values always serialize");
            Ok(Output::ok(EXIT_OK, format!("{g6}\n{note}\n")))
        }
        Command::Product { kind, left, right } => {
            let kind: ProductKind = kind.parse()?;
            let (a, b) = (input.graph(&left)?, input.graph(&right)?);
            Ok(Output::ok(
                EXIT_OK,
                format!("{}\n", to_graph6(&product(&a, &b, kind)?)?),
            ))
        }
        Command::Check {
            id,
            max_order,
            sample,
            seed,
            jobs,
        } => {
            if id == "list" {
                let text: String = CHECKS.iter().map(|(id, about)| format!("{id:<24}{about}\n")).collect();
                return Ok(Output::ok(EXIT_OK, text));
            }
            let opts = CheckOptions {
                max_order,
                sample,
                seed,
                jobs,
            };
            let report = run_check(&id, &opts)?;
            let code = if report.passed { EXIT_OK } else { EXIT_FALSE };
            Ok(Output::ok(
                code,
                line(&serde_json::to_value(&report).expect("report serializes")),
            ))
        }
        Command::Census {
            threshold,
            n,
            r,
            jobs,
            graphs,
            long_run,
            budget,
        } => census(input, threshold, n, r, jobs, graphs, long_run, &budget),
        Command::Dot { graph } => Ok(Output::ok(EXIT_OK, input.graph(&graph)?.to_dot())),
    }
}

#[allow(clippy::too_many_arguments)]
fn census(
    input: &mut Input,
    threshold: Threshold,
    n: usize,
    r: Option<usize>,
    jobs: usize,
    graphs: Option<String>,
    long_run: bool,
    budget: &BudgetArgs,
) -> Result<Output, Error> {
    if n < 2 {
        return Err(Error::Domain(format!("census needs n >= 2, got {n}")));
    }
    let rs: Vec<usize> = match r {
        Some(r) if r == 0 || r >= n => return Err(Error::Domain(format!("r must satisfy 1 <= r < n, got r = {r}"))),
        Some(r) => vec![r],
        None => (1..n).collect(),
    };
    let cfg = search_config(budget)?;
    let catalog = match graphs {
        Some(path) => {
            let text = input.file(&path)?;
            let list = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(from_graph6)
                .collect::<Result<Vec<_>, _>>()?;
            MdCatalog::from_graphs(n, list, &cfg, jobs)?
        }
        None => {
            if n > ENUMERATION_CAP - 1 && !long_run {
                return Err(Error::SizeCap {
                    what: "census order without --long-run",
                    value: n,
                    cap: ENUMERATION_CAP - 1,
                });
            }
            MdCatalog::build(n, &cfg, jobs)?
        }
    };
    let reports: Vec<ThresholdReport> = rs
        .iter()
        .map(|&r| match threshold {
            Threshold::F => verify_f(&catalog, r, &cfg),
            Threshold::G => verify_g(&catalog, r, &cfg),
        })
        .collect::<Result<_, _>>()?;
    let code = if reports
        .iter()
        .any(|r| !r.counterexamples.is_empty() || (r.is_conclusive() && !r.verified))
    {
        EXIT_FALSE
    } else if reports.iter().any(|r| !r.is_conclusive()) {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    };
    let v = json!({
        "n": n,
        "graphs": catalog.entries.len(),
        "all_verified": reports.iter().all(|r| r.verified),
        "reports": reports,
        "stats": {
            "elapsed_ms": catalog.elapsed.as_secs_f64() * 1000.0,
            "nodes": catalog.nodes,
            "jobs": catalog.jobs,
        },
    });
    Ok(Output::ok(code, line(&v)))
}
