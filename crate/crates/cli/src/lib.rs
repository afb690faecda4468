//! Command-line surface for `matchgap`. Reports go to stdout as JSON,
//! diagnostics to stderr. Exit codes: 0 success or verdict true, 1 verdict
//! false, 2 usage error, 3 input error, 4 size-guard refusal, 5 internal
//! consistency failure (a cross-check that disagrees).

pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use matchgap::gadget::{census_options, DEFAULT_CENSUS_LIMIT};
use matchgap::gap::{
    check_pairwise_bound, check_pendant_recurrence, check_perfect_matching_bound, extremal_structure_check,
};
use matchgap::generate::{random_cubic_bridgeless, random_gnp, DEFAULT_CUBIC_ATTEMPTS};
use matchgap::matching::DEFAULT_ORACLE_LIMIT;
use matchgap::{
    check_l_eq_2l, gap_profile, inflate, maximum_matching, odd_cycle_stats, parse_edgelist, reduction_check,
    three_edge_colorable, write_edgelist, EnumOptions, Graph,
};
use serde::Serialize;
use serde_json::{json, Value};

pub use report::Report;

pub const LIMIT_ENV: &str = "MATCHGAP_ORACLE_LIMIT";

#[derive(Parser, Debug)]
#[command(name = "matchgap", version, about = "Matching-removal gap analysis on edge-list graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Matching number and one maximum matching
    Nu { file: PathBuf },
    /// ν, L and l with witnesses, by exhaustive enumeration
    Gap {
        file: PathBuf,
        /// Largest vertex count the enumeration accepts
        #[arg(long)]
        limit: Option<usize>,
        /// Ignore the size guard
        #[arg(long)]
        force: bool,
    },
    /// Polynomial-time L = 2l decision with certificate
    #[command(name = "check-2l")]
    Check2l {
        file: PathBuf,
        /// Also run the exhaustive oracle and require agreement
        #[arg(long)]
        cross_check: bool,
    },
    /// Bounds, pendant recurrence and extremal structure checks
    Verify { file: PathBuf },
    /// Write the triangle inflation of a cubic graph
    Inflate {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        out: PathBuf,
    },
    /// Odd-cycle counts over all 2-factors of a cubic graph
    #[command(name = "two-factors")]
    TwoFactors { file: PathBuf },
    /// 3-edge-coloring of a cubic graph, or "none"
    Color3 { file: PathBuf },
    /// Inflation gap against 3-edge-colorability for a bridgeless cubic graph
    #[command(name = "reduce-check")]
    ReduceCheck { file: PathBuf },
    /// Seeded random graph
    Gen {
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// Edge probability, gnp only
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        seed: u64,
        #[arg(short = 'o', long = "output")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    Gnp,
    Cubic,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Guard(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
            Failure::Guard(_) => 4,
            Failure::Internal(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Guard(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<matchgap::Error> for Failure {
    fn from(e: matchgap::Error) -> Self {
        use matchgap::Error::*;
        match e {
            SizeGuard { .. } => Failure::Guard(format!("{e}, or set {LIMIT_ENV}")),
            InvariantViolation(_) => Failure::Internal(e.to_string()),
            InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Limits {
    oracle: usize,
    census: usize,
}

impl Limits {
    fn from_env(value: Option<&str>) -> Result<Self, Failure> {
        match value {
            None => Ok(Limits {
                oracle: DEFAULT_ORACLE_LIMIT,
                census: DEFAULT_CENSUS_LIMIT,
            }),
            Some(v) => {
                let limit = v
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("{LIMIT_ENV}=`{v}` is not a vertex count")))?;
                Ok(Limits {
                    oracle: limit,
                    census: limit,
                })
            }
        }
    }

    fn oracle(&self) -> EnumOptions {
        EnumOptions::with_limit(self.oracle)
    }

    fn census(&self) -> EnumOptions {
        EnumOptions {
            limit: self.census,
            ..census_options()
        }
    }
}

struct Input {
    bytes: Vec<u8>,
    graph: Graph,
}

fn read_graph(path: &Path) -> Result<Input, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes).map_err(|_| Failure::Input(format!("{}: not UTF-8", path.display())))?;
    let graph = parse_edgelist(text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(Input { bytes, graph })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("result types are plain data")
}

/// A finished command: report plus the verdict for boolean commands.
struct Done {
    report: Report,
    verdict: Option<bool>,
    /// A cross-check contradicted the result; exit 5 after printing.
    inconsistent: bool,
}

fn done(command: &str, input: Option<&Input>, result: Value, verdict: Option<bool>) -> Done {
    Done {
        report: Report::new(command, input.map(|i| i.bytes.as_slice()), result),
        verdict,
        inconsistent: false,
    }
}

fn execute(cmd: Command, limits: Limits, err: &mut dyn Write) -> Result<Done, Failure> {
    match cmd {
        Command::Nu { file } => {
            let input = read_graph(&file)?;
            let m = maximum_matching(&input.graph);
            let result = json!({ "nu": m.len(), "matching": to_value(m.edges()) });
            Ok(done("nu", Some(&input), result, None))
        }
        Command::Gap { file, limit, force } => {
            let input = read_graph(&file)?;
            let opts = EnumOptions {
                limit: limit.unwrap_or(limits.oracle),
                force,
                ..EnumOptions::default()
            };
            let profile = gap_profile(&input.graph, &opts)?;
            Ok(done("gap", Some(&input), to_value(&profile), None))
        }
        Command::Check2l { file, cross_check } => {
            let input = read_graph(&file)?;
            let cert = check_l_eq_2l(&input.graph);
            let mut result = to_value(&cert);
            if cross_check {
                let oracle = match gap_profile(&input.graph, &limits.oracle()) {
                    Ok(p) => {
                        let agrees = p.is_extremal() == cert.verdict;
                        if !agrees {
                            writeln!(
                                err,
                                "cross-check failed: verdict {} but the oracle found L = {}, l = {}",
                                cert.verdict, p.l_max, p.l_min
                            )
                            .ok();
                        }
                        json!({ "L": p.l_max, "l": p.l_min, "agrees": agrees })
                    }
                    Err(matchgap::Error::SizeGuard { n, limit }) => {
                        writeln!(err, "cross-check skipped: {n} vertices exceed the oracle limit {limit}").ok();
                        json!({ "skipped": format!("{n} vertices exceed the oracle limit {limit}") })
                    }
                    Err(e) => return Err(e.into()),
                };
                let disagrees = oracle["agrees"] == json!(false);
                result["cross_check"] = oracle;
                let mut d = done("check-2l", Some(&input), result, Some(cert.verdict));
                d.inconsistent = disagrees;
                return Ok(d);
            }
            Ok(done("check-2l", Some(&input), result, Some(cert.verdict)))
        }
        Command::Verify { file } => {
            let input = read_graph(&file)?;
            let g = &input.graph;
            let opts = limits.oracle();
            let profile = gap_profile(g, &opts)?;
            let pairwise = check_pairwise_bound(g, &opts)?;
            let perfect = check_perfect_matching_bound(g, &opts)?;
            let pendant = check_pendant_recurrence(g, &opts)?;
            let two_l = profile.l_max <= 2 * profile.l_min;
            let (extremal, extremal_ok) = match extremal_structure_check(g, &opts) {
                Ok(r) => {
                    let ok = r.holds;
                    (to_value(&r), ok)
                }
                Err(matchgap::Error::NotApplicable(reason)) => {
                    (json!({ "applicable": false, "reason": reason }), true)
                }
                Err(e) => return Err(e.into()),
            };
            let holds = pairwise.holds && two_l && perfect.holds != Some(false) && pendant.holds && extremal_ok;
            let result = json!({
                "holds": holds,
                "profile": to_value(&profile),
                "pairwise_bound": to_value(&pairwise),
                "l_at_most_twice_l": { "L": profile.l_max, "l": profile.l_min, "holds": two_l },
                "perfect_matching_bound": to_value(&perfect),
                "pendant_recurrence": to_value(&pendant),
                "extremal_structure": extremal,
            });
            Ok(done("verify", Some(&input), result, Some(holds)))
        }
        Command::Inflate { file, out } => {
            let input = read_graph(&file)?;
            let inf = inflate(&input.graph)?;
            write_file(&out, &write_edgelist(&inf.inflated))?;
            let result = json!({
                "base_vertices": inf.base.vertex_count(),
                "vertices": inf.inflated.vertex_count(),
                "edges": inf.inflated.edge_count(),
                "edge_map": to_value(&inf.edge_map),
                "output": out.display().to_string(),
            });
            Ok(done("inflate", Some(&input), result, None))
        }
        Command::TwoFactors { file } => {
            let input = read_graph(&file)?;
            let stats = odd_cycle_stats(&input.graph, &limits.census())?;
            Ok(done("two-factors", Some(&input), to_value(&stats), None))
        }
        Command::Color3 { file } => {
            let input = read_graph(&file)?;
            let coloring = three_edge_colorable(&input.graph)?;
            let result = json!({
                "colorable": coloring.is_some(),
                "coloring": coloring.as_ref().map_or(json!("none"), |c| to_value(&c.colors)),
            });
            Ok(done("color3", Some(&input), result, Some(coloring.is_some())))
        }
        Command::ReduceCheck { file } => {
            let input = read_graph(&file)?;
            let r = reduction_check(&input.graph, &limits.census())?;
            Ok(done("reduce-check", Some(&input), to_value(&r), Some(r.consistent)))
        }
        Command::Gen { kind, n, p, seed, out } => {
            let (g, mut result) = match (kind, p) {
                (GenKind::Gnp, None) => return Err(Failure::Usage("gen gnp needs --p".into())),
                (GenKind::Gnp, Some(p)) => (random_gnp(n, p, seed)?, json!({ "kind": "gnp", "p": p.to_string() })),
                (GenKind::Cubic, Some(_)) => return Err(Failure::Usage("--p only applies to gen gnp".into())),
                (GenKind::Cubic, None) => (
                    random_cubic_bridgeless(n, seed, DEFAULT_CUBIC_ATTEMPTS)?,
                    json!({ "kind": "cubic" }),
                ),
            };
            write_file(&out, &write_edgelist(&g))?;
            result["n"] = json!(g.vertex_count());
            result["m"] = json!(g.edge_count());
            result["output"] = json!(out.display().to_string());
            let mut d = done("gen", None, result, None);
            d.report.seed = Some(seed);
            Ok(d)
        }
    }
}

/// Runs one invocation. `env_limit` is the value of
/// `MATCHGAP_ORACLE_LIMIT`, if set.
pub fn run<I, T>(args: I, env_limit: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    write!(out, "{}", e.render()).ok();
                    0
                }
                _ => {
                    write!(err, "{}", e.render()).ok();
                    2
                }
            };
        }
    };
    let outcome = Limits::from_env(env_limit).and_then(|limits| {
        let start = Instant::now();
        let mut d = execute(cli.command, limits, err)?;
        d.report.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(d)
    });
    match outcome {
        Ok(d) => {
            write!(out, "{}", d.report.to_json()).ok();
            match d.verdict {
                _ if d.inconsistent => 5,
                Some(false) => 1,
                _ => 0,
            }
        }
        Err(f) => {
            writeln!(err, "matchgap: {}", f.message()).ok();
            f.code()
        }
    }
}
