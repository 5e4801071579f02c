//! Slow, obviously-correct reference implementations used as test oracles.

#![allow(dead_code)]

use planar_turan::graph::{disjoint_union, Graph};
use planar_turan::{FamilyKind, ForbiddenFamily};
use rand::Rng;

/// Every pattern graph of the family, up to isomorphism (some repeats are harmless).
pub fn patterns(family: &ForbiddenFamily) -> Vec<Graph> {
    let k = family.k();
    let cycle = Graph::cycle(k);
    let with_pendant = |g: &Graph, v: usize| {
        let n = g.vertex_count();
        let mut edges = g.edges().to_vec();
        edges.push((v, n));
        Graph::from_edges(n + 1, edges).unwrap()
    };
    let thetas = || (2..=k / 2).map(|j| cycle.with_edges([(0, j)]).unwrap()).collect::<Vec<_>>();
    match family.kind() {
        FamilyKind::Cycle => vec![cycle],
        FamilyKind::CyclePlus => vec![with_pendant(&cycle, 0)],
        FamilyKind::TwoCycles => vec![disjoint_union(&[cycle.clone(), cycle])],
        FamilyKind::CycleUnionCyclePlus => vec![disjoint_union(&[cycle.clone(), with_pendant(&cycle, 0)])],
        FamilyKind::Theta => thetas(),
        FamilyKind::ThetaPlus => thetas()
            .iter()
            .flat_map(|t| (0..k).filter(|&v| t.degree(v) == 2).map(|v| with_pendant(t, v)).collect::<Vec<_>>())
            .collect(),
    }
}

/// Backtracking search for an injective edge-preserving map `pattern -> host`.
pub fn naive_contains(host: &Graph, pattern: &Graph) -> bool {
    let p = pattern.vertex_count();
    if p > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return false;
    }
    let mut map = vec![usize::MAX; p];
    let mut used = vec![false; host.vertex_count()];
    fn extend(host: &Graph, pattern: &Graph, i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if i == map.len() {
            return true;
        }
        for x in host.vertices() {
            if used[x] {
                continue;
            }
            let ok = pattern.neighbors(i).iter().filter(|&&j| j < i).all(|&j| host.has_edge(map[j], x));
            if !ok {
                continue;
            }
            map[i] = x;
            used[x] = true;
            if extend(host, pattern, i + 1, map, used) {
                return true;
            }
            used[x] = false;
        }
        false
    }
    extend(host, pattern, 0, &mut map, &mut used)
}

pub fn naive_family_contains(host: &Graph, family: &ForbiddenFamily) -> bool {
    patterns(family).iter().any(|p| naive_contains(host, p))
}

/// Kuratowski check that is complete for graphs with at most six vertices:
/// K5, K3,3 and K5 with one subdivided edge are the only obstructions there.
pub fn small_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 6, "oracle only complete up to six vertices");
    let k5 = Graph::complete(5);
    let k33 = Graph::complete_bipartite(3, 3);
    let k5_sub = {
        let mut edges: Vec<_> = k5.edges().iter().copied().filter(|&e| e != (0, 1)).collect();
        edges.extend([(0, 5), (1, 5)]);
        Graph::from_edges(6, edges).unwrap()
    };
    !(naive_contains(g, &k5) || naive_contains(g, &k33) || naive_contains(g, &k5_sub))
}

/// Graph on `n` vertices whose edges are the set bits of `mask` in pair order
/// `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(perm.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            perm.swap(j, k - 1);
        }
    }
    heap(n, &mut perm, &mut out);
    out
}

/// Lexicographically largest sorted edge list over all relabellings.
pub fn brute_canonical(g: &Graph) -> Vec<(usize, usize)> {
    permutations(g.vertex_count())
        .into_iter()
        .map(|perm| g.permuted(&perm).edges().to_vec())
        .max()
        .unwrap_or_default()
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && brute_canonical(a) == brute_canonical(b)
}

/// Maximum edge count over all labelled planar `family`-free graphs on `n <= 6` vertices.
pub fn naive_extremal(n: usize, family: &ForbiddenFamily) -> usize {
    (0u64..1 << pair_count(n))
        .map(|mask| graph_from_mask(n, mask))
        .filter(|g| small_planar(g) && !naive_family_contains(g, family))
        .map(|g| g.edge_count())
        .max()
        .unwrap_or(0)
}

pub fn all_families(max_k: usize) -> Vec<ForbiddenFamily> {
    FamilyKind::ALL
        .iter()
        .flat_map(|&kind| (kind.min_k()..=max_k).map(move |k| ForbiddenFamily::new(kind, k).unwrap()))
        .collect()
}
