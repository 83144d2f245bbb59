//! Command-line front end. Reports are single JSON objects, streams are JSON
//! lines, graphs are graph6.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::census::dstar::catalog;
use crate::census::oracle::cached_census;
use crate::census::verify::{self, tally};
use crate::census::{ClassLabel, Report};
use crate::error::{Error, Result};
use crate::families::{build_bk, build_gn, canonical_graph, parse_bk};
use crate::graph::complete_multipartite;
use crate::graph6::{from_graph6, to_graph6};
use crate::spectral::{eigenvalues, inertia};
use crate::transforms::{find_all, reduction_chain};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "inertia-graphs", version, about = "Inertia, graph families and census checks for graphs with two positive eigenvalues")]
pub struct Cli {
    /// Worker threads for classify, verify and oracle (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Include wall-clock seconds in reports.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact inertia (p, n, eta) of a graph6 graph.
    Inertia { graph6: String },
    /// Adjacency eigenvalues, largest first.
    Spectrum {
        graph6: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Print the graph6 of a family member.
    #[command(subcommand)]
    Construct(Construct),
    /// Quotient by equal closed neighborhoods, with class sizes.
    Canon { graph6: String },
    /// Every type I/II/III finding.
    Transforms { graph6: String },
    /// Greedy reduction chain and how it ends.
    Reduce { graph6: String },
    /// Per-k counts of each B_k(n) class.
    Classify(ClassifyArgs),
    /// The D* catalog.
    Dstar {
        #[arg(long, value_enum, default_value_t = Emit::Names)]
        emit: Emit,
    },
    /// Run a verification; exit 1 on any violation.
    #[command(subcommand)]
    Verify(Check),
    /// Stream census records for one order as JSON lines.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected_only: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// G_n.
    Gn { n: usize },
    /// B_k from a name such as "B6(4,3,3;2,1,1)".
    Bk { name: String },
    /// Complete multipartite graph.
    Km {
        #[arg(required = true)]
        parts: Vec<usize>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ClassifyArgs {
    /// A single order.
    #[arg(long)]
    pub n: Option<usize>,
    /// Every order from 4 up to this one.
    #[arg(long)]
    pub n_max: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Names,
    Graph6,
}

#[derive(Debug, Subcommand)]
pub enum Check {
    Table1,
    Lemma49,
    Lemma412 {
        #[arg(long, num_args = 1.., default_values_t = [16, 17])]
        n: Vec<usize>,
    },
    Table2 {
        #[arg(long, default_value_t = 6)]
        oracle_n: usize,
    },
    Smith {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    Etamax {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Inertia law for every finding on the census up to n-max.
    Transforms {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
    /// Existence of a finding in connected census graphs with eta >= 2.
    Existence {
        #[arg(long, num_args = 1.., default_values_t = [6, 7])]
        n: Vec<usize>,
    },
}

/// Formats `x` with ten significant digits; magnitudes below `zero` print as 0.
pub fn format_sig(x: f64, zero: f64) -> String {
    if x.abs() < zero || x == 0.0 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{x:.9e}").parse().expect("float round trip");
    let magnitude = rounded.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    format!("{rounded:.decimals$}")
}

/// Parses `argv` (program name first), runs the verb and returns the exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = match cli.jobs {
        Some(0) => Err(Error::InvalidParameter("--jobs must be positive".into())),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut buf)),
            Err(e) => Err(Error::InvalidParameter(e.to_string())),
        },
        None => dispatch(&cli, &mut buf),
    };
    if out.write_all(&buf).and_then(|_| out.flush()).is_err() {
        return EXIT_USAGE;
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidParameter(format!("write failed: {e}"))
}

fn emit_report(report: Report, timing: bool, out: &mut dyn Write) -> Result<i32> {
    let report = if timing { report } else { report.without_timing() };
    writeln!(out, "{}", report.to_json()).map_err(io)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATIONS })
}

fn dispatch(cli: &Cli, out: &mut Vec<u8>) -> Result<i32> {
    match &cli.command {
        Command::Inertia { graph6 } => {
            let i = inertia(&from_graph6(graph6)?);
            writeln!(out, "{}", serde_json::to_string(&i).expect("inertia serializes")).map_err(io)?;
        }
        Command::Spectrum { graph6, tol } => {
            let s = eigenvalues(&from_graph6(graph6)?, *tol)?;
            for v in &s.values {
                writeln!(out, "{}", format_sig(*v, 10.0 * tol)).map_err(io)?;
            }
        }
        Command::Construct(c) => {
            let g = match c {
                Construct::Gn { n } => build_gn(*n)?,
                Construct::Bk { name } => build_bk(&parse_bk(name)?)?,
                Construct::Km { parts } => complete_multipartite(parts)?,
            };
            writeln!(out, "{}", to_graph6(&g)).map_err(io)?;
        }
        Command::Canon { graph6 } => {
            let d = canonical_graph(&from_graph6(graph6)?);
            let line = json!({
                "quotient": to_graph6(&d.quotient),
                "multiplicities": d.multiplicities,
                "classes": d.classes,
            });
            writeln!(out, "{line}").map_err(io)?;
        }
        Command::Transforms { graph6 } => {
            for f in find_all(&from_graph6(graph6)?) {
                writeln!(out, "{f}").map_err(io)?;
            }
        }
        Command::Reduce { graph6 } => {
            let chain = reduction_chain(&from_graph6(graph6)?)?;
            for step in &chain.steps {
                writeln!(out, "{} {}", step.before, step.finding).map_err(io)?;
            }
            let i = chain.terminal_inertia;
            writeln!(
                out,
                "terminal {:?} {} p={} n={} eta={}",
                chain.terminal_kind,
                to_graph6(&chain.terminal),
                i.p,
                i.n,
                i.eta
            )
            .map_err(io)?;
        }
        Command::Classify(args) => {
            let orders: Vec<usize> = match (args.n, args.n_max) {
                (Some(n), _) => vec![n],
                (_, Some(m)) => (4..=m).collect(),
                _ => unreachable!("clap requires one of --n, --n-max"),
            };
            if let Some(&bad) = orders.iter().find(|&&n| !(4..=crate::graph::MAX_ORDER).contains(&n)) {
                return Err(Error::InvalidParameter(format!("classify needs 4 <= n <= 64, got {bad}")));
            }
            for (n, k, counts, _) in tally(&orders) {
                let mut line = serde_json::Map::new();
                line.insert("n".into(), json!(n));
                line.insert("k".into(), json!(k));
                for l in ClassLabel::ALL {
                    line.insert(l.name().into(), json!(counts[&l]));
                }
                writeln!(out, "{}", serde_json::Value::Object(line)).map_err(io)?;
            }
        }
        Command::Dstar { emit } => {
            for e in &catalog().entries {
                match emit {
                    Emit::Names => writeln!(out, "{}", e.name),
                    Emit::Graph6 => writeln!(out, "{}", to_graph6(&build_bk(&e.spec)?)),
                }
                .map_err(io)?;
            }
        }
        Command::Verify(check) => {
            let report = match check {
                Check::Table1 => verify::verify_table1(),
                Check::Lemma49 => verify::verify_lemma_4_9(),
                Check::Lemma412 { n } => verify::verify_lemma_4_12(n)?,
                Check::Table2 { oracle_n } => verify::verify_table2(*oracle_n)?,
                Check::Smith { n } => verify::verify_smith(*n)?,
                Check::Etamax { n } => verify::verify_eta_max(*n)?,
                Check::Transforms { n_max } => verify::verify_transformation_law(*n_max)?,
                Check::Existence { n } => verify::verify_structure_existence(n)?,
            };
            return emit_report(report, cli.timing, out);
        }
        Command::Oracle { n, connected_only } => {
            for r in cached_census(*n)?.iter().filter(|r| r.connected || !connected_only) {
                writeln!(out, "{}", serde_json::to_string(r).expect("record serializes")).map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}
