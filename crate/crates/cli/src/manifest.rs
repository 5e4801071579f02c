use std::collections::BTreeMap;
use std::path::Path;
use std::time::Duration;

use anyhow::Context;
use clap::Parser;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commands::{Outcome, Usage};
use crate::{Cli, Command, SCHEMA_VERSION};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_seconds: f64,
    pub stats: Value,
}

/// Self-contained record of one run. Everything except `timing` is
/// reproduced exactly by `repro`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub tool: String,
    pub subcommand: String,
    /// Arguments that replay the run.
    pub args: Vec<String>,
    pub params: Value,
    /// graph6 strings by role.
    pub artifacts: BTreeMap<String, String>,
    pub results: Value,
    pub passed: bool,
    pub citations: Vec<String>,
    pub timing: Timing,
}

impl RunManifest {
    pub fn new(subcommand: &str, args: Vec<String>, params: Value, outcome: &Outcome, elapsed: Duration) -> Self {
        RunManifest {
            schema_version: SCHEMA_VERSION,
            tool: format!("planar-turan {}", env!("CARGO_PKG_VERSION")),
            subcommand: subcommand.to_string(),
            args,
            params,
            artifacts: outcome.artifacts.clone(),
            results: outcome.results.clone(),
            passed: outcome.passed,
            citations: outcome.citations.clone(),
            timing: Timing { elapsed_seconds: elapsed.as_secs_f64(), stats: outcome.stats.clone() },
        }
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        let text = crate::commands::pretty(self);
        std::fs::write(path, text).with_context(|| format!("writing manifest {}", path.display()))
    }

    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading manifest {}", path.display()))?;
        Ok(serde_json::from_str(&text)?)
    }
}

fn bytes(v: &impl Serialize) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Re-runs the manifest's command and compares everything but timing.
pub fn repro(path: &Path) -> anyhow::Result<Outcome> {
    let m = RunManifest::read(path)?;
    if m.schema_version != SCHEMA_VERSION {
        return Err(Usage(format!("manifest schema {} is not supported (expected {SCHEMA_VERSION})", m.schema_version)).into());
    }
    let argv = std::iter::once("planar-turan".to_string()).chain(m.args.iter().cloned());
    let cli = Cli::try_parse_from(argv).map_err(|e| Usage(format!("manifest arguments do not parse: {e}")))?;
    if matches!(cli.command, Command::Repro(_)) {
        return Err(Usage("a manifest cannot replay another manifest".into()).into());
    }
    eprintln!("replaying: planar-turan {}", m.args.join(" "));
    let fresh = crate::dispatch(&cli.command)?;
    let mut mismatches = Vec::new();
    if bytes(&fresh.results) != bytes(&m.results) {
        mismatches.push("results");
    }
    if fresh.artifacts != m.artifacts {
        mismatches.push("artifacts");
    }
    if fresh.citations != m.citations {
        mismatches.push("citations");
    }
    if fresh.passed != m.passed {
        mismatches.push("passed");
    }
    let reproduced = mismatches.is_empty();
    let results = json!({
        "schema_version": SCHEMA_VERSION,
        "subcommand": m.subcommand,
        "args": m.args,
        "reproduced": reproduced,
        "mismatches": mismatches,
        "passed": fresh.passed,
    });
    let mut out = Outcome::json(results, reproduced);
    out.artifacts = fresh.artifacts;
    Ok(out)
}
