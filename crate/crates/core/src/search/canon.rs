//! Canonical labelling for graphs with at most 16 vertices.
//!
//! Individualization-refinement: the ordered partition is refined to an
//! equitable one, then each vertex of the first non-singleton cell is
//! individualized in turn. Every discrete leaf yields a relabelled adjacency
//! code; the largest code is the canonical form. Twins (`N(u) - v = N(v) - u`)
//! give isomorphic subtrees, so only one of them is expanded.

use crate::graph::Graph;

pub const MAX_ORDER: usize = 16;

/// Bit-packed adjacency: `adj[v]` has bit `u` set iff `uv` is an edge.
pub type Adjacency = Vec<u16>;

pub fn adjacency(g: &Graph) -> Adjacency {
    assert!(g.vertex_count() <= MAX_ORDER, "canonical forms support at most {MAX_ORDER} vertices");
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &u| m | 1 << u))
        .collect()
}

/// Upper triangle in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
/// first pair in the most significant bit.
fn code_of(adj: &[u16], order: &[usize]) -> u128 {
    let n = order.len();
    let mut code = 0u128;
    for j in 1..n {
        let row = adj[order[j]];
        for &oi in &order[..j] {
            code = (code << 1) | ((row >> oi) & 1) as u128;
        }
    }
    code
}

/// Inverse of the canonical code for an `n`-vertex graph.
pub fn graph_from_code(n: usize, code: u128) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if (code >> (bits - 1 - idx)) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, edges).expect("code decodes to a simple graph")
}

fn refine(adj: &[u16], cells: &mut Vec<u16>) {
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter = cells[si];
            let mut next = Vec::with_capacity(cells.len());
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut groups = [0u16; MAX_ORDER + 1];
                let mut rest = cell;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    groups[(adj[v] & splitter).count_ones() as usize] |= 1 << v;
                }
                next.extend(groups.iter().copied().filter(|&g| g != 0));
            }
            if next.len() != cells.len() {
                *cells = next;
                changed = true;
            }
            si += 1;
        }
        if !changed {
            return;
        }
    }
}

fn are_twins(adj: &[u16], u: usize, v: usize) -> bool {
    adj[u] & !(1 << v) == adj[v] & !(1 << u)
}

fn search(adj: &[u16], cells: Vec<u16>, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = code_of(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = cells[target];
    let mut expanded: Vec<usize> = Vec::new();
    let mut rest = cell;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if expanded.iter().any(|&u| are_twins(adj, u, v)) {
            continue;
        }
        expanded.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(1 << v);
        child.push(cell & !(1 << v));
        child.extend_from_slice(&cells[target + 1..]);
        refine(adj, &mut child);
        search(adj, child, best);
    }
}

/// Canonical code and the labelling achieving it: `order[i]` is the original
/// vertex placed at position `i`.
pub fn canonical_form(adj: &[u16]) -> (u128, Vec<usize>) {
    let n = adj.len();
    assert!(n <= MAX_ORDER);
    if n == 0 {
        return (0, Vec::new());
    }
    let all: u16 = if n == 16 { u16::MAX } else { (1 << n) - 1 };
    let mut cells = vec![all];
    refine(adj, &mut cells);
    let mut best = None;
    search(adj, cells, &mut best);
    best.expect("at least one leaf")
}

pub fn canonical_code(g: &Graph) -> u128 {
    canonical_form(&adjacency(g)).0
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    graph_from_code(g.vertex_count(), canonical_code(g))
}
