//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use planar_turan::bounds::{beats_conjecture, eval_exact, frac, threshold_order, BoundQuery, FormulaId};
use planar_turan::constructions::gluing::Gluing;
use planar_turan::constructions::witness::Witness;
use planar_turan::constructions::{counterexample_ck, small_regime_triangulation, ConstructionParams};
use planar_turan::detectors::{
    contains_cycle_k, contains_cycle_plus, contains_theta, contains_theta_plus, contains_two_cycles,
};
use planar_turan::graph::{disjoint_union, Graph};
use planar_turan::planarity::is_planar;
use planar_turan::search::exact_extremal;
use planar_turan::ForbiddenFamily;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type FreeCheck<'a> = &'a dyn Fn(&Graph) -> bool;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn extremal_value(n: usize, family: ForbiddenFamily, expected: usize) -> Result<String, String> {
    let r = exact_extremal(n, &family).map_err(|e| e.to_string())?;
    ensure(is_planar(&r.witness) && family.is_free(&r.witness), || "witness fails re-verification".into())?;
    ensure(r.value == expected, || format!("ex({n}, {family}) = {}, expected {expected}", r.value))?;
    Ok(format!("ex({n}, {family}) = {}", r.value))
}

fn within(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let took = start.elapsed();
    ensure(took <= limit, || format!("{detail}; took {took:.2?}, limit {limit:?}"))?;
    Ok(format!("{detail} ({took:.2?})"))
}

fn c1() -> Outcome {
    within(Duration::from_secs(600), || extremal_value(8, ForbiddenFamily::cycle(4), 11))
}

fn c2() -> Outcome {
    within(Duration::from_secs(60), || {
        let a = extremal_value(5, ForbiddenFamily::theta(4), 6)?;
        let b = extremal_value(5, ForbiddenFamily::theta_plus(4), 7)?;
        Ok(format!("{a}, {b}"))
    })
}

fn c3() -> Outcome {
    within(Duration::from_secs(900), || extremal_value(8, ForbiddenFamily::cycle_plus(4), 12))
}

fn c4() -> Outcome {
    let built = counterexample_ck(13, 390).map_err(|e| e.to_string())?;
    let g = &built.graph;
    ensure(is_planar(g), || "not planar".into())?;
    let detect = within(Duration::from_secs(300), || {
        ensure(contains_cycle_k(g, 13).is_none(), || "contains C_13".into())?;
        Ok("C_13-free".into())
    })?;
    let exact = eval_exact(&BoundQuery::new(FormulaId::CkGluedExact).k(13).n(390)).map_err(|e| e.to_string())?;
    ensure(g.edge_count() == 1078 && exact == 1078, || format!("edges {} / formula {exact}", g.edge_count()))?;
    let cmp = beats_conjecture(13, 390).map_err(|e| e.to_string())?;
    ensure(cmp.conjecture == frac(13956, 13), || format!("conjecture value {}", cmp.conjecture))?;
    ensure(cmp.beats && cmp.margin == frac(58, 13), || format!("margin {}", cmp.margin))?;
    Ok(format!("planar, {detect}, 1078 edges, margin {} over {}", cmp.margin, cmp.conjecture))
}

/// Five orders per k: t = 0, r = 0, r = 1, r = k-2, and a large t with r = M-1.
fn sweep_orders(k: usize) -> Vec<usize> {
    let m = k - 6 + (k - 1) / 2;
    vec![k - 4 + (k - 1) / 2, 4 + 2 * m, 5 + 3 * m, 4 + 4 * m + (k - 2), 4 + (k - 1) * m + (m - 1)]
}

fn c5() -> Outcome {
    let mut checked = 0;
    for k in 11..=14 {
        let orders = sweep_orders(k);
        let params: Vec<ConstructionParams> = orders.iter().map(|&n| ConstructionParams::new(k, n).unwrap()).collect();
        ensure(params[0].t == 0, || format!("k={k}: no t = 0 case"))?;
        ensure(params.iter().any(|p| p.r == 0) && params.iter().any(|p| p.r == 1), || format!("k={k}: r cases"))?;
        ensure(params.iter().any(|p| p.r >= k - 2), || format!("k={k}: no r >= k-2 case"))?;
        for &n in &orders {
            let built = counterexample_ck(k, n).map_err(|e| e.to_string())?;
            let g = &built.graph;
            let exact = eval_exact(&BoundQuery::new(FormulaId::CkGluedExact).k(k as i64).n(n as i64))
                .map_err(|e| e.to_string())?;
            ensure(g.vertex_count() == n, || format!("k={k} n={n}: order {}", g.vertex_count()))?;
            ensure(is_planar(g), || format!("k={k} n={n}: not planar"))?;
            ensure(contains_cycle_k(g, k).is_none(), || format!("k={k} n={n}: contains C_k"))?;
            ensure(exact == g.edge_count() as i64, || format!("k={k} n={n}: {} edges vs {exact}", g.edge_count()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} constructions planar, C_k-free, edge counts exact"))
}

fn c6() -> Outcome {
    for (k, n) in [(11, 11), (12, 12)] {
        let t = small_regime_triangulation(k, n).map_err(|e| e.to_string())?;
        let g = &t.graph;
        ensure(g.vertex_count() == n && g.edge_count() == 3 * n - 6, || format!("k={k}: {} edges", g.edge_count()))?;
        ensure(is_planar(g), || format!("k={k}: not planar"))?;
        ensure(contains_cycle_k(g, k).is_none(), || format!("k={k}: contains C_k"))?;
    }
    Ok("T_11^5 and L_12^5: planar, 3n-6 edges, C_k-free".into())
}

fn check_gluing(gluing: Gluing, base: &Graph, free: impl Fn(&Graph) -> bool, label: &str) -> Result<(), String> {
    ensure(free(base), || format!("{label}: base is not free"))?;
    let g = gluing.apply(base).map_err(|e| format!("{label}: {e}"))?;
    ensure(g.edge_count() == base.edge_count() + gluing.edge_delta(), || {
        format!("{label}: delta {} != {}", g.edge_count() - base.edge_count(), gluing.edge_delta())
    })?;
    ensure(is_planar(&g), || format!("{label}: not planar"))?;
    ensure(free(&g), || format!("{label}: glued graph contains the family"))
}

fn c7() -> Outcome {
    let mut count = 0;
    let mut run = |gluing, base: &Graph, free: &dyn Fn(&Graph) -> bool, label: String| {
        count += 1;
        check_gluing(gluing, base, free, &label)
    };
    for k in 3..=8 {
        let base = if k == 3 {
            Graph::complete_bipartite(2, 4)
        } else if k == 4 {
            Witness::Windmill { n: 9 }.build().unwrap()
        } else {
            Witness::GStar { k, n: 2 * k - 2 }.build().unwrap()
        };
        let ck_free = move |g: &Graph| contains_cycle_k(g, k).is_none();
        let two_ck_free = move |g: &Graph| contains_two_cycles(g, k).is_none();
        run(Gluing::Fan { k }, &base, &ck_free, format!("fan k={k}"))?;
        if k >= 4 {
            run(Gluing::LongFan { k }, &base, &two_ck_free, format!("long fan k={k}"))?;
            // a 2C_k-free base that does contain C_k
            let two_base = disjoint_union(&[base.clone(), Graph::cycle(k)]);
            run(Gluing::DoubleFan { k }, &two_base, &two_ck_free, format!("double fan k={k}"))?;
            let theta_free = move |g: &Graph| contains_theta(g, k).is_none();
            let theta_base = disjoint_union(&[Graph::cycle(k), Graph::complete_bipartite(2, 3)]);
            run(Gluing::Fan { k }, &theta_base, &theta_free, format!("theta fan k={k}"))?;
            if k >= 5 {
                for t in [k - 2, k - 1] {
                    run(Gluing::Star { t }, &theta_base, &theta_free, format!("star k={k} t={t}"))?;
                }
            }
        }
    }
    let theta4_free = |g: &Graph| contains_theta(g, 4).is_none();
    let bases = [
        Graph::complete_bipartite(2, 3),
        Graph::complete_bipartite(2, 6),
        Witness::C6Complement.build().unwrap(),
        Witness::Theta4Seven.build().map_err(|e| e.to_string())?,
    ];
    for base in &bases {
        for t in [2, 3] {
            run(Gluing::FaceVertices { t }, base, &theta4_free, format!("face t={t} on {base:?}"))?;
        }
    }
    Ok(format!("{count} gluings: exact deltas, planar, family-free"))
}

fn c8() -> Outcome {
    let c4 = |g: &Graph| contains_cycle_k(g, 4).is_none();
    let cases: [(Witness, usize, usize, FreeCheck); 6] = [
        (Witness::C8PlusChords, 8, 11, &c4),
        (Witness::HStar12, 12, 18, &c4),
        (Witness::TwoK4, 8, 12, &|g| contains_cycle_plus(g, 4).is_none()),
        (Witness::K23, 5, 6, &|g| contains_theta(g, 4).is_none()),
        (Witness::K2JoinK3Bar, 5, 7, &|g| contains_theta_plus(g, 4).is_none()),
        (Witness::C6Complement, 6, 9, &|g| contains_theta(g, 4).is_none()),
    ];
    for (w, n, e, free) in cases {
        let g = w.build().map_err(|e| e.to_string())?;
        ensure((g.vertex_count(), g.edge_count()) == (n, e), || {
            format!("{}: {} vertices, {} edges", w.name(), g.vertex_count(), g.edge_count())
        })?;
        ensure(is_planar(&g), || format!("{} not planar", w.name()))?;
        ensure(free(&g), || format!("{} contains its forbidden family", w.name()))?;
    }
    Ok("6 witnesses verified".into())
}

fn c9() -> Outcome {
    let families = common::all_families(6);
    let mut compared = 0u64;
    let mut disagree = Vec::new();
    let mut check = |g: &Graph, families: &[ForbiddenFamily]| {
        for f in families {
            compared += 1;
            let fast = f.find_in(g);
            if let Some(w) = &fast {
                if !w.validate(g, f) {
                    disagree.push(format!("{f} on {g:?}: invalid witness"));
                }
            }
            if fast.is_some() != common::naive_family_contains(g, f) {
                disagree.push(format!("{f} on {g:?}"));
            }
        }
    };
    for n in 0..=6 {
        for mask in 0u64..1 << common::pair_count(n) {
            check(&common::graph_from_mask(n, mask), &families);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for _ in 0..500 {
        let n = rng.gen_range(7..=9);
        let p = rng.gen_range(0.25..0.75);
        let g = common::random_graph(&mut rng, n, p);
        check(&g, &families);
    }
    ensure(disagree.is_empty(), || format!("{} disagreements, first: {}", disagree.len(), disagree[0]))?;
    Ok(format!("{compared} detector calls agree with the naive reference"))
}

fn c10() -> Outcome {
    within(Duration::from_secs(1), || {
        let ev = |q: BoundQuery| eval_exact(&q).map_err(|e| e.to_string());
        ensure(ev(BoundQuery::new(FormulaId::C4Upper).n(30))? == 60, || "c4-upper(30)".into())?;
        ensure(ev(BoundQuery::new(FormulaId::CkGluedExact).k(13).n(390))? == 1078, || "glued exact".into())?;
        ensure(ev(BoundQuery::new(FormulaId::CkConjecture).k(13).n(390))? == frac(13956, 13), || "conjecture".into())?;
        let mut pairs = 0;
        for k in 11..=14 {
            for n in sweep_orders(k) {
                let (k, n) = (k as i64, n as i64);
                let lower = ev(BoundQuery::new(FormulaId::CkGluedLower).k(k).n(n))?;
                let exact = ev(BoundQuery::new(FormulaId::CkGluedExact).k(k).n(n))?;
                ensure(lower <= exact, || format!("lower {lower} > exact {exact} at k={k} n={n}"))?;
                pairs += 1;
            }
        }
        for k in 13..=25 {
            let c = beats_conjecture(k, threshold_order(k)).map_err(|e| e.to_string())?;
            ensure(c.beats && c.clears_threshold, || format!("k={k}: margin {}", c.margin))?;
        }
        Ok(format!("reference values exact, lower <= exact on {pairs} pairs, conjecture beaten for k = 13..25"))
    })
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("ex(8, C4) = 11", c1),
        ("ex(5, Theta4) = 6 and ex(5, Theta4+) = 7", c2),
        ("ex(8, C4+) = 12", c3),
        ("glued C13-free graph on 390 vertices", c4),
        ("parity sweep k = 11..14", c5),
        ("small-order triangulations", c6),
        ("gluing deltas", c7),
        ("witness catalog", c8),
        ("detector oracle equivalence", c9),
        ("bound engine", c10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
