mod commands;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use planar_turan::FamilyKind;

use crate::commands::{Outcome, Usage};
use crate::manifest::RunManifest;

pub const SCHEMA_VERSION: u32 = 1;

/// Planar Turán numbers of cycles and theta graphs: constructions,
/// verification, closed-form bounds and exact search.
///
/// Results go to stdout as JSON (or CSV/graph6/DOT where requested), logs to
/// stderr. Exit status: 0 when every requested check passes, 1 when a check
/// fails, 2 on errors (reported as JSON on stdout).
#[derive(Debug, Parser)]
#[command(name = "planar-turan", version)]
pub struct Cli {
    /// Also write a replayable run manifest to this path.
    #[arg(long, global = true, value_name = "PATH")]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a catalog construction; emits graph6 plus a JSON sidecar.
    Construct(ConstructArgs),
    /// Check planarity and freeness of a graph for one or more families.
    Verify(VerifyArgs),
    /// Evaluate a closed-form bound exactly (`bounds --id ...`), compare the
    /// glued construction with the conjecture, or list formulas.
    Bounds(BoundsArgs),
    /// Exact planar Turán number for small n by exhaustive search.
    Extremal(ExtremalArgs),
    /// Replay a run manifest and compare results byte for byte.
    Repro(ReproArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Construct(_) => "construct",
            Command::Verify(_) => "verify",
            Command::Bounds(b) => match b.action {
                Some(BoundsAction::Compare(_)) => "bounds compare",
                Some(BoundsAction::List(_)) => "bounds list",
                None => "bounds",
            },
            Command::Extremal(_) => "extremal",
            Command::Repro(_) => "repro",
        }
    }

    fn params(&self) -> serde_json::Value {
        let v = match self {
            Command::Construct(a) => serde_json::to_value(a),
            Command::Verify(a) => serde_json::to_value(a),
            Command::Bounds(a) => serde_json::to_value(a),
            Command::Extremal(a) => serde_json::to_value(a),
            Command::Repro(a) => serde_json::to_value(a),
        };
        v.unwrap_or(serde_json::Value::Null)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Json,
    Graph6,
    Dot,
}

#[derive(Debug, Args, Serialize)]
pub struct ConstructArgs {
    /// Catalog name: T, O, R, T-np, L-np, counterexample-ck,
    /// small-triangulation, witness, glue.
    pub name: String,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub ell: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Witness or gluing name, for `witness` and `glue`.
    #[arg(long = "name", value_name = "NAME")]
    #[serde(rename = "entry")]
    pub entry: Option<String>,
    /// Base graph (graph6) for `glue`.
    #[arg(long)]
    pub base: Option<String>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    pub format: GraphFormat,
    /// Write the output here; for graph6/DOT the sidecar goes to `<PATH>.json`
    /// and is also printed.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    /// Planar and free of every family.
    Free,
    /// Contains a member of every family.
    Contains,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    /// Graph in graph6.
    #[arg(long, conflicts_with = "construct", required_unless_present = "construct")]
    pub g6: Option<String>,
    /// Construction spec, e.g. "counterexample-ck k=13 n=390".
    #[arg(long)]
    pub construct: Option<String>,
    /// Family kind: cycle, cycle-plus, two-cycles, cycle-union-cycle-plus,
    /// theta, theta-plus. Repeat (with matching --k) for several checks.
    #[arg(long, required = true, value_parser = parse_kind)]
    pub family: Vec<FamilyKind>,
    /// Cycle length; one value for all families or one per --family.
    #[arg(long, required = true)]
    pub k: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Expect::Free)]
    pub expect: Expect,
}

#[derive(Debug, Args, Serialize)]
#[command(args_conflicts_with_subcommands = true)]
pub struct BoundsArgs {
    #[command(subcommand)]
    pub action: Option<BoundsAction>,
    #[command(flatten)]
    pub eval: EvalArgs,
}

#[derive(Debug, Subcommand, Serialize)]
pub enum BoundsAction {
    /// Glued construction against the conjectured bound, one row per k.
    Compare(CompareArgs),
    /// All formula ids with their statements.
    List(ListArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TextFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Args, Serialize)]
pub struct EvalArgs {
    /// Formula id (see `bounds list`).
    #[arg(long)]
    pub id: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    #[arg(long)]
    pub k: Option<i64>,
    #[arg(long)]
    pub ell: Option<i64>,
    /// Constant D of the power-law conjecture.
    #[arg(long)]
    pub d: Option<f64>,
    /// Digits after the decimal point in the decimal rendering.
    #[arg(long, default_value_t = 6)]
    pub places: usize,
    #[arg(long, value_enum, default_value_t = TextFormat::Json)]
    pub format: TextFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KRange {
    pub from: i64,
    pub to: i64,
}

#[derive(Debug, Args, Serialize)]
pub struct CompareArgs {
    /// `K`, or an inclusive range `A..B` (also `A..=B`).
    #[arg(long, value_parser = parse_range)]
    pub k: KRange,
    #[arg(long, conflicts_with = "at_threshold", required_unless_present = "at_threshold")]
    pub n: Option<i64>,
    /// Use the smallest integer n at or above the threshold 5M(k-1)/2.
    #[arg(long)]
    pub at_threshold: bool,
    #[arg(long, default_value_t = 6)]
    pub places: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

#[derive(Debug, Args, Serialize)]
pub struct ListArgs {
    #[arg(long, value_enum, default_value_t = TextFormat::Json)]
    pub format: TextFormat,
}

#[derive(Debug, Args, Serialize)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_kind)]
    pub family: FamilyKind,
    #[arg(long)]
    pub k: usize,
    /// Raise the search cap (default 9, or $PLANAR_TURAN_SEARCH_CAP).
    #[arg(long, value_name = "N")]
    pub cap_override: Option<usize>,
    /// Fail (exit 1) unless the exact value equals this.
    #[arg(long, value_name = "VALUE")]
    pub expect: Option<usize>,
}

#[derive(Debug, Args, Serialize)]
pub struct ReproArgs {
    /// Manifest written by an earlier run with `--manifest`.
    #[arg(value_name = "MANIFEST")]
    pub path: PathBuf,
}

fn parse_kind(s: &str) -> Result<FamilyKind, String> {
    s.parse::<FamilyKind>().map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<KRange, String> {
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("bad integer `{t}` in `{s}`"));
    let (from, to) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if from > to {
        return Err(format!("empty range `{s}`"));
    }
    Ok(KRange { from, to })
}

/// Runs a parsed command; `args` are the arguments that reproduce it.
pub fn dispatch(command: &Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Construct(a) => commands::construct(a),
        Command::Verify(a) => commands::verify(a),
        Command::Bounds(a) => match &a.action {
            None => commands::bounds_eval(&a.eval),
            Some(BoundsAction::Compare(c)) => commands::bounds_compare(c),
            Some(BoundsAction::List(l)) => commands::bounds_list(l),
        },
        Command::Extremal(a) => commands::extremal(a),
        Command::Repro(a) => manifest::repro(&a.path),
    }
}

/// Command-line arguments minus the global `--manifest` option.
fn replay_args(raw: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in raw {
        if skip {
            skip = false;
        } else if a == "--manifest" {
            skip = true;
        } else if !a.starts_with("--manifest=") {
            out.push(a.clone());
        }
    }
    out
}

fn error_exit(err: &anyhow::Error) -> ExitCode {
    let body = serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "error": { "kind": commands::error_kind(err), "message": format!("{err:#}") },
    });
    println!("{}", serde_json::to_string_pretty(&body).expect("serializable"));
    eprintln!("error: {err:#}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let raw: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            let rendered = e.render().to_string();
            // the error paragraph, without the usage block that follows it
            let head: Vec<&str> = rendered.lines().take_while(|l| !l.trim().is_empty()).map(str::trim).collect();
            let joined = head.join(" ");
            let message = joined.strip_prefix("error: ").unwrap_or(&joined).to_string();
            return error_exit(&anyhow::Error::new(Usage(message)));
        }
    };
    let start = Instant::now();
    let outcome = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(e) => return error_exit(&e),
    };
    let elapsed = start.elapsed();
    print!("{}", outcome.stdout);
    if let Some(path) = &cli.manifest {
        if matches!(cli.command, Command::Repro(_)) {
            eprintln!("note: --manifest is ignored for repro");
        } else {
            let m = RunManifest::new(cli.command.name(), replay_args(&raw), cli.command.params(), &outcome, elapsed);
            if let Err(e) = m.write(path) {
                return error_exit(&e);
            }
            eprintln!("manifest written to {}", path.display());
        }
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
