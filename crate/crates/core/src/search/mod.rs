//! Exact planar Turán numbers for small orders by exhaustive search.
//!
//! Graphs are grown one edge at a time from the empty graph. A child is kept
//! only if it is planar and free of the forbidden family, and each
//! isomorphism class is expanded once (memoized on its canonical code).
//! Since both properties are closed under edge deletion, every admissible
//! class is reachable this way. A node is cut when its edge count plus the
//! number of individually admissible extra edges falls strictly below the
//! best value so far; strictness keeps every optimal class reachable, so the
//! reported witness (the optimal class with the smallest canonical code) does
//! not depend on thread scheduling.

pub mod canon;

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::witness::Witness;
use crate::detectors::{FamilyKind, ForbiddenFamily};
use crate::graph::Graph;
use crate::planarity::is_planar;
use canon::{adjacency, canonical_form, graph_from_code, MAX_ORDER};

/// Default largest order accepted without an override.
pub const DEFAULT_CAP: usize = 9;

/// Environment variable that raises the cap (up to [`MAX_ORDER`]).
pub const CAP_ENV: &str = "PLANAR_TURAN_SEARCH_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("n = {n} exceeds the search cap {cap}; raise it explicitly to proceed")]
    AboveCap { n: usize, cap: usize },
    #[error("n = {0} exceeds the largest supported order {MAX_ORDER}")]
    TooLarge(usize),
    #[error("invalid value `{0}` for {CAP_ENV}")]
    BadCapEnv(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub cap: usize,
    /// Whether to seed the best value from the construction catalog.
    pub seed_from_catalog: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { cap: DEFAULT_CAP, seed_from_catalog: true }
    }
}

impl SearchConfig {
    /// Default configuration with the cap taken from [`CAP_ENV`] when set.
    pub fn from_env() -> Result<Self, SearchError> {
        let mut config = SearchConfig::default();
        if let Ok(raw) = std::env::var(CAP_ENV) {
            config.cap = raw.trim().parse().map_err(|_| SearchError::BadCapEnv(raw.clone()))?;
        }
        Ok(config)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    fn check(&self, n: usize) -> Result<(), SearchError> {
        if n > MAX_ORDER {
            return Err(SearchError::TooLarge(n));
        }
        if n > self.cap {
            return Err(SearchError::AboveCap { n, cap: self.cap });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchStats {
    /// Isomorphism classes expanded; varies with scheduling.
    pub nodes: u64,
    #[serde(serialize_with = "ser_duration")]
    pub elapsed: Duration,
}

fn ser_duration<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

#[derive(Debug, Clone)]
pub struct ExtremalResult {
    pub n: usize,
    pub family: ForbiddenFamily,
    pub value: usize,
    /// Canonically labelled optimal graph with the smallest code.
    pub witness: Graph,
    /// Number of non-isomorphic optimal graphs.
    pub optimal_classes: usize,
    pub stats: SearchStats,
}

/// A verified catalog graph on `n` vertices avoiding `family`, if one is known.
pub fn catalog_seed(n: usize, family: &ForbiddenFamily) -> Option<Graph> {
    let w = match (family.kind(), family.k()) {
        (FamilyKind::Cycle, 4) if n == 8 => Witness::C8PlusChords,
        (FamilyKind::Cycle, 4) if n >= 1 => Witness::Windmill { n },
        (FamilyKind::CyclePlus, 4) if n == 8 => Witness::TwoK4,
        (FamilyKind::Theta, 4) if n == 6 => Witness::C6Complement,
        (FamilyKind::Theta, 4) if n >= 2 => Witness::K2m { m: n - 2 },
        (FamilyKind::ThetaPlus, 4) if n == 5 => Witness::K2JoinK3Bar,
        (FamilyKind::Cycle | FamilyKind::Theta, k) if k >= 5 && n > k && n <= 2 * k => Witness::GStar { k, n },
        _ => return None,
    };
    let g = w.build().ok()?;
    (g.vertex_count() == n && is_planar(&g) && family.is_free(&g)).then_some(g)
}

fn admissible(g: &Graph, family: &ForbiddenFamily) -> bool {
    is_planar(g) && family.is_free(g)
}

struct Shared<'a> {
    n: usize,
    family: &'a ForbiddenFamily,
    /// Cut nodes whose bound is below this; only increases.
    best: AtomicUsize,
    visited: Mutex<HashSet<u128>>,
    /// Codes of the graphs attaining `best`, or above `floor` when collecting.
    found: Mutex<(usize, BTreeSet<u128>)>,
    collect_all: bool,
    nodes: AtomicU64,
}

impl Shared<'_> {
    fn record(&self, edges: usize, code: u128) {
        let mut found = self.found.lock().unwrap();
        if self.collect_all || edges == found.0 {
            found.1.insert(code);
        } else if edges > found.0 {
            *found = (edges, BTreeSet::from([code]));
        }
    }

    fn expand(&self, g: &Graph) {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        let edges = g.edge_count();
        let children: Vec<Graph> = (0..self.n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|&(i, j)| !g.has_edge(i, j))
            .filter_map(|e| {
                let child = g.with_edges([e]).expect("edge within range");
                admissible(&child, self.family).then_some(child)
            })
            .collect();
        if edges + children.len() < self.best.load(Ordering::SeqCst) {
            return;
        }
        let fresh: Vec<(u128, Graph)> = children
            .into_iter()
            .filter_map(|child| {
                let (code, _) = canonical_form(&adjacency(&child));
                self.visited.lock().unwrap().insert(code).then(|| (code, graph_from_code(self.n, code)))
            })
            .collect();
        for (code, child) in &fresh {
            let e = child.edge_count();
            if e >= self.best.load(Ordering::SeqCst) {
                if !self.collect_all {
                    self.best.fetch_max(e, Ordering::SeqCst);
                }
                self.record(e, *code);
            }
        }
        fresh.par_iter().for_each(|(_, child)| self.expand(child));
    }
}

fn run(n: usize, family: &ForbiddenFamily, floor: usize, collect_all: bool) -> (Shared<'_>, Duration) {
    let start = Instant::now();
    let empty = Graph::empty(n);
    let (code, _) = canonical_form(&adjacency(&empty));
    let shared = Shared {
        n,
        family,
        best: AtomicUsize::new(floor),
        visited: Mutex::new(HashSet::from([code])),
        found: Mutex::new((floor, BTreeSet::new())),
        collect_all,
        nodes: AtomicU64::new(0),
    };
    if floor == 0 {
        shared.record(0, code);
    }
    shared.expand(&empty);
    let elapsed = start.elapsed();
    (shared, elapsed)
}

/// Exact `ex_P(n, family)` with a canonical optimal witness.
pub fn exact_extremal(n: usize, family: &ForbiddenFamily) -> Result<ExtremalResult, SearchError> {
    exact_extremal_with(n, family, &SearchConfig::default())
}

pub fn exact_extremal_with(
    n: usize,
    family: &ForbiddenFamily,
    config: &SearchConfig,
) -> Result<ExtremalResult, SearchError> {
    config.check(n)?;
    let seed = if config.seed_from_catalog { catalog_seed(n, family).map_or(0, |g| g.edge_count()) } else { 0 };
    let (shared, elapsed) = run(n, family, seed, false);
    let (value, codes) = shared.found.into_inner().unwrap();
    let code = *codes.first().expect("the seed value is attained by an admissible graph");
    let witness = graph_from_code(n, code);
    debug_assert!(admissible(&witness, family) && witness.edge_count() == value);
    Ok(ExtremalResult {
        n,
        family: *family,
        value,
        witness,
        optimal_classes: codes.len(),
        stats: SearchStats { nodes: shared.nodes.into_inner(), elapsed },
    })
}

/// One canonically labelled representative of every isomorphism class of
/// planar `family`-free graphs on `n` vertices with at least `min_edges`
/// edges, ordered by decreasing edge count, then by canonical code.
pub fn enumerate_free_graphs(
    n: usize,
    family: &ForbiddenFamily,
    min_edges: usize,
) -> Result<Vec<Graph>, SearchError> {
    enumerate_free_graphs_with(n, family, min_edges, &SearchConfig::default())
}

pub fn enumerate_free_graphs_with(
    n: usize,
    family: &ForbiddenFamily,
    min_edges: usize,
    config: &SearchConfig,
) -> Result<Vec<Graph>, SearchError> {
    config.check(n)?;
    let (shared, _) = run(n, family, min_edges, true);
    let (_, codes) = shared.found.into_inner().unwrap();
    let mut graphs: Vec<(usize, u128, Graph)> = codes
        .into_iter()
        .map(|c| {
            let g = graph_from_code(n, c);
            (g.edge_count(), c, g)
        })
        .collect();
    graphs.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    Ok(graphs.into_iter().map(|(_, _, g)| g).collect())
}

/// Whether `ex_P(n, family)` equals `claimed`.
pub fn verify_exact_value(n: usize, family: &ForbiddenFamily, claimed: usize) -> Result<bool, SearchError> {
    Ok(exact_extremal(n, family)?.value == claimed)
}
