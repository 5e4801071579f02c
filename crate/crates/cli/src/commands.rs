use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::Serialize;
use serde_json::{json, Value};

use planar_turan::bounds::{
    beats_conjecture, eval_bound, threshold_order, BoundError, BoundQuery, BoundValue, FormulaId,
};
use planar_turan::constructions::catalog::{self, ConstructionSpec};
use planar_turan::constructions::ConstructionError;
use planar_turan::detectors::FamilyError;
use planar_turan::io::{from_graph6, to_dot, to_graph6, Graph6Error};
use planar_turan::planarity::is_planar;
use planar_turan::search::{exact_extremal_with, SearchConfig, SearchError, CAP_ENV, DEFAULT_CAP};
use planar_turan::ForbiddenFamily;

use crate::{
    CompareArgs, ConstructArgs, EvalArgs, Expect, ExtremalArgs, GraphFormat, ListArgs, TableFormat, TextFormat,
    VerifyArgs, SCHEMA_VERSION,
};

/// What a command produced.
#[derive(Debug, Clone)]
pub struct Outcome {
    /// Exactly what goes to stdout.
    pub stdout: String,
    /// Deterministic results; what `repro` compares.
    pub results: Value,
    /// Graphs by role, in graph6.
    pub artifacts: BTreeMap<String, String>,
    pub citations: Vec<String>,
    /// Run statistics that may vary between runs.
    pub stats: Value,
    pub passed: bool,
}

impl Outcome {
    pub fn json(results: Value, passed: bool) -> Self {
        Outcome {
            stdout: pretty(&results),
            results,
            artifacts: BTreeMap::new(),
            citations: Vec::new(),
            stats: Value::Null,
            passed,
        }
    }
}

/// Bad or missing command-line input not caught by the parser.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

pub fn error_kind(err: &anyhow::Error) -> &'static str {
    if err.is::<Usage>() {
        "usage"
    } else if err.is::<ConstructionError>() {
        "construction"
    } else if err.is::<Graph6Error>() {
        "graph6"
    } else if err.is::<FamilyError>() {
        "family"
    } else if err.is::<BoundError>() {
        "bounds"
    } else if err.is::<SearchError>() {
        "search"
    } else if err.is::<serde_json::Error>() {
        "json"
    } else if err.is::<std::io::Error>() {
        "io"
    } else {
        "other"
    }
}

pub fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct Sidecar<'a> {
    schema_version: u32,
    construction: String,
    name: &'a str,
    params: &'a BTreeMap<String, String>,
    vertices: usize,
    edges: usize,
    expected_edges: Option<usize>,
    edges_match: Option<bool>,
    planar: bool,
    citation: &'a str,
    graph6: String,
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut s: OsString = out.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

pub fn construct(a: &ConstructArgs) -> anyhow::Result<Outcome> {
    let mut spec = ConstructionSpec::new(a.name.as_str());
    let numeric = [("k", a.k), ("n", a.n), ("m", a.m), ("p", a.p), ("q", a.q), ("ell", a.ell), ("t", a.t)];
    for (key, value) in numeric {
        if let Some(v) = value {
            spec = spec.with(key, v);
        }
    }
    if let Some(entry) = &a.entry {
        spec = spec.with("name", entry);
    }
    if let Some(base) = &a.base {
        spec = spec.with("base", base);
    }
    let built = spec.build()?;
    let g = &built.graph;
    let graph6 = to_graph6(g);
    let sidecar = Sidecar {
        schema_version: SCHEMA_VERSION,
        construction: built.spec.to_string(),
        name: &built.spec.name,
        params: &built.spec.params,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        expected_edges: built.expected_edges,
        edges_match: built.expected_edges.map(|e| e == g.edge_count()),
        planar: is_planar(g),
        citation: &built.citation,
        graph6: graph6.clone(),
    };
    let passed = sidecar.planar && sidecar.edges_match != Some(false);
    let json = pretty(&sidecar);
    let primary = match a.format {
        GraphFormat::Json => json.clone(),
        GraphFormat::Graph6 => format!("{graph6}\n"),
        GraphFormat::Dot => to_dot(g),
    };
    let stdout = match &a.out {
        None => primary,
        Some(path) => {
            std::fs::write(path, &primary).with_context(|| format!("writing {}", path.display()))?;
            if a.format != GraphFormat::Json {
                let side = sidecar_path(path);
                std::fs::write(&side, &json).with_context(|| format!("writing {}", side.display()))?;
            }
            json
        }
    };
    Ok(Outcome {
        stdout,
        results: serde_json::to_value(&sidecar)?,
        artifacts: BTreeMap::from([("graph".to_string(), graph6)]),
        citations: vec![built.citation.clone()],
        stats: Value::Null,
        passed,
    })
}

pub fn verify(a: &VerifyArgs) -> anyhow::Result<Outcome> {
    let mut citations = Vec::new();
    let (graph, source) = match (&a.g6, &a.construct) {
        (Some(text), _) => (from_graph6(text.trim())?, json!({ "g6": text.trim() })),
        (None, Some(spec)) => {
            let built = catalog::build(spec)?;
            citations.push(built.citation.clone());
            (built.graph, json!({ "construct": built.spec.to_string() }))
        }
        (None, None) => return Err(Usage("give --g6 or --construct".into()).into()),
    };
    let ks = match a.k.len() {
        1 => vec![a.k[0]; a.family.len()],
        len if len == a.family.len() => a.k.clone(),
        len => {
            return Err(Usage(format!("{} families but {len} values of --k", a.family.len())).into());
        }
    };
    let families = a
        .family
        .iter()
        .zip(&ks)
        .map(|(&kind, &k)| ForbiddenFamily::new(kind, k))
        .collect::<Result<Vec<_>, _>>()?;
    let planar = is_planar(&graph);
    // independent checks run concurrently; results keep input order
    let found: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = families.iter().map(|f| s.spawn(|| f.find_in(&graph))).collect();
        handles.into_iter().map(|h| h.join().expect("detector thread panicked")).collect()
    });
    let checks: Vec<Value> = families
        .iter()
        .zip(&found)
        .map(|(f, w)| json!({ "family": f.kind(), "k": f.k(), "free": w.is_none(), "witness": w }))
        .collect();
    let all_free = found.iter().all(Option::is_none);
    let passed = match a.expect {
        Expect::Free => planar && all_free,
        Expect::Contains => found.iter().all(Option::is_some),
    };
    if !planar {
        eprintln!("note: the graph is not planar");
    }
    let graph6 = to_graph6(&graph);
    let results = json!({
        "schema_version": SCHEMA_VERSION,
        "source": source,
        "vertices": graph.vertex_count(),
        "edge_count": graph.edge_count(),
        "planar": planar,
        "free": all_free,
        "checks": checks,
        "expect": a.expect,
        "passed": passed,
    });
    let mut out = Outcome::json(results, passed);
    out.artifacts.insert("graph".into(), graph6);
    out.citations = citations;
    Ok(out)
}

pub fn bounds_eval(a: &EvalArgs) -> anyhow::Result<Outcome> {
    let id: FormulaId = a
        .id
        .as_deref()
        .ok_or_else(|| Usage("bounds needs --id, or one of the subcommands `compare`, `list`".into()))?
        .parse()?;
    let mut q = BoundQuery::new(id);
    q.n = a.n;
    q.k = a.k;
    q.ell = a.ell;
    q.d = a.d;
    let params = json!({ "n": a.n, "k": a.k, "ell": a.ell, "d": a.d });
    let (results, text) = match eval_bound(&q)? {
        BoundValue::Exact(r) => {
            let decimal = r.to_decimal(a.places);
            let text = if r.is_integer() { format!("{r}\n") } else { format!("{r}\t{decimal}\n") };
            let results = json!({
                "schema_version": SCHEMA_VERSION,
                "id": id.as_str(),
                "statement": id.description(),
                "params": params,
                "exact": true,
                "value": r.to_string(),
                "decimal": decimal,
            });
            (results, text)
        }
        BoundValue::Approximate(v) => {
            let results = json!({
                "schema_version": SCHEMA_VERSION,
                "id": id.as_str(),
                "statement": id.description(),
                "params": params,
                "exact": false,
                "value": null,
                "approximate": v,
            });
            (results, format!("~{v}\n"))
        }
    };
    let mut out = Outcome::json(results, true);
    out.citations.push(id.description().to_string());
    if a.format == TextFormat::Text {
        out.stdout = text;
    }
    Ok(out)
}

pub fn bounds_compare(a: &CompareArgs) -> anyhow::Result<Outcome> {
    let mut rows = Vec::new();
    for k in a.k.from..=a.k.to {
        let n = if a.at_threshold { threshold_order(k) } else { a.n.expect("clap requires --n or --at-threshold") };
        let c = beats_conjecture(k, n)?;
        rows.push(c);
    }
    let passed = rows.iter().all(|c| c.beats);
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|c| {
            let mut v = serde_json::to_value(c).expect("serializable");
            v["margin_decimal"] = Value::String(c.margin.to_decimal(a.places));
            v
        })
        .collect();
    let results = json!({ "schema_version": SCHEMA_VERSION, "rows": json_rows, "all_beat": passed });
    let mut out = Outcome::json(results, passed);
    out.citations.push(FormulaId::CkGluedExact.description().to_string());
    out.citations.push(FormulaId::CkConjecture.description().to_string());
    if a.format == TableFormat::Csv {
        let mut csv = String::from("k,n,construction_edges,conjecture,margin,margin_decimal,beats,threshold\n");
        for c in &rows {
            csv.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                c.k,
                c.n,
                c.construction_edges,
                c.conjecture,
                c.margin,
                c.margin.to_decimal(a.places),
                c.beats,
                c.threshold
            ));
        }
        out.stdout = csv;
    }
    Ok(out)
}

pub fn bounds_list(a: &ListArgs) -> anyhow::Result<Outcome> {
    let list: Vec<Value> =
        FormulaId::ALL.iter().map(|id| json!({ "id": id.as_str(), "statement": id.description() })).collect();
    let mut out = Outcome::json(json!({ "schema_version": SCHEMA_VERSION, "formulas": list }), true);
    if a.format == TextFormat::Text {
        out.stdout = FormulaId::ALL.iter().map(|id| format!("{id}\t{}\n", id.description())).collect();
    }
    Ok(out)
}

pub fn extremal(a: &ExtremalArgs) -> anyhow::Result<Outcome> {
    let family = ForbiddenFamily::new(a.family, a.k)?;
    let mut config = SearchConfig::from_env()?;
    if config.cap != DEFAULT_CAP {
        eprintln!("WARNING: {CAP_ENV} sets the search cap to {} (default {DEFAULT_CAP}).", config.cap);
    }
    if let Some(cap) = a.cap_override {
        eprintln!("==================================================================");
        eprintln!("WARNING: --cap-override raises the search cap to {cap} (default {DEFAULT_CAP}).");
        eprintln!("Exhaustive search grows super-exponentially in n; orders above");
        eprintln!("{DEFAULT_CAP} can run for hours and use a lot of memory.");
        eprintln!("==================================================================");
        config = config.with_cap(cap);
    }
    let r = exact_extremal_with(a.n, &family, &config)?;
    let secs = r.stats.elapsed.as_secs_f64();
    eprintln!("searched {} isomorphism classes in {secs:.3}s", r.stats.nodes);
    let graph6 = to_graph6(&r.witness);
    let mut results = json!({
        "schema_version": SCHEMA_VERSION,
        "n": r.n,
        "family": family.kind(),
        "k": family.k(),
        "value": r.value,
        "witness_graph6": graph6,
        "optimal_classes": r.optimal_classes,
    });
    let passed = match a.expect {
        Some(e) => {
            results["expect"] = json!(e);
            results["matches"] = json!(e == r.value);
            e == r.value
        }
        None => true,
    };
    let stats = json!({ "nodes": r.stats.nodes, "elapsed_seconds": secs, "cap": config.cap });
    let mut shown = results.clone();
    shown["stats"] = stats.clone();
    Ok(Outcome {
        stdout: pretty(&shown),
        results,
        artifacts: BTreeMap::from([("witness".to_string(), graph6)]),
        citations: Vec::new(),
        stats,
        passed,
    })
}
