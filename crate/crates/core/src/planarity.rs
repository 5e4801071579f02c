//! Left-right planarity test with combinatorial embedding.
//!
//! Follows Brandes' formulation of the de Fraysseix–Rosenstiehl criterion:
//! a DFS orientation computes lowpoints and a nesting order, a second DFS
//! maintains a stack of conflict pairs of return-edge intervals, and a final
//! pass turns the resolved sides into a rotation system.
//!
//! References:
//! - U. Brandes, "The Left-Right Planarity Test", 2009.
//! - H. de Fraysseix, P. Ossona de Mendez, P. Rosenstiehl, "Trémaux trees
//!   and planarity", 2006.

use std::collections::HashMap;

use crate::graph::Graph;

/// Exact planarity decision.
pub fn is_planar(g: &Graph) -> bool {
    planar_embedding(g).is_some()
}

/// A rotation system: `rotation[v]` lists the neighbours of `v` in clockwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    fn position(&self, v: usize, w: usize) -> usize {
        self.rotation[v]
            .iter()
            .position(|&x| x == w)
            .expect("half-edge present in rotation")
    }

    /// Face boundary walks. Each walk is listed from its first half-edge in
    /// (vertex, clockwise-position) order; isolated vertices bound no face.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut visited: HashMap<(usize, usize), bool> = HashMap::new();
        let mut faces = Vec::new();
        for v in 0..self.rotation.len() {
            for &w in &self.rotation[v] {
                if visited.contains_key(&(v, w)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (v, w);
                loop {
                    visited.insert((a, b), true);
                    face.push(a);
                    // next half-edge: (b, neighbour of b counter-clockwise from a)
                    let rot = &self.rotation[b];
                    let i = self.position(b, a);
                    let c = rot[(i + rot.len() - 1) % rot.len()];
                    a = b;
                    b = c;
                    if (a, b) == (v, w) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }
}

/// Returns a planar embedding of `g`, or `None` when `g` is not planar.
pub fn planar_embedding(g: &Graph) -> Option<Embedding> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut state = LrState::new(g);
    for v in 0..n {
        if state.height[v] == NONE {
            state.height[v] = 0;
            state.roots.push(v);
            state.orient(v);
        }
    }
    for v in 0..n {
        let nd = &state.nesting_depth;
        state.ordered[v] = state.out[v].clone();
        state.ordered[v].sort_by_key(|&e| nd[e]);
    }
    for i in 0..state.roots.len() {
        let root = state.roots[i];
        if !state.test(root) {
            return None;
        }
    }
    Some(state.embed())
}

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// Rotation under construction: clockwise/counter-clockwise successor per half-edge.
struct HalfEdgeRing {
    cw: Vec<HashMap<usize, usize>>,
    ccw: Vec<HashMap<usize, usize>>,
    first: Vec<Option<usize>>,
}

impl HalfEdgeRing {
    fn new(n: usize) -> Self {
        HalfEdgeRing {
            cw: vec![HashMap::new(); n],
            ccw: vec![HashMap::new(); n],
            first: vec![None; n],
        }
    }

    fn add_cw(&mut self, start: usize, end: usize, reference: Option<usize>) {
        match reference {
            None => {
                self.cw[start].insert(end, end);
                self.ccw[start].insert(end, end);
                self.first[start] = Some(end);
            }
            Some(r) => {
                let cw_r = self.cw[start][&r];
                self.cw[start].insert(r, end);
                self.cw[start].insert(end, cw_r);
                self.ccw[start].insert(cw_r, end);
                self.ccw[start].insert(end, r);
            }
        }
    }

    fn add_ccw(&mut self, start: usize, end: usize, reference: Option<usize>) {
        match reference {
            None => self.add_cw(start, end, None),
            Some(r) => {
                let ccw_r = self.ccw[start][&r];
                self.add_cw(start, end, Some(ccw_r));
                if self.first[start] == Some(r) {
                    self.first[start] = Some(end);
                }
            }
        }
    }

    fn add_first(&mut self, start: usize, end: usize) {
        let reference = self.first[start];
        self.add_ccw(start, end, reference);
    }
}

struct LrState<'g> {
    g: &'g Graph,
    // undirected edge id per (vertex, neighbour-index)
    edge_ids: Vec<Vec<usize>>,
    oriented: Vec<bool>,
    src: Vec<usize>,
    dst: Vec<usize>,
    roots: Vec<usize>,
    height: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    out: Vec<Vec<usize>>,
    ordered: Vec<Vec<usize>>,
    reference: Vec<Option<usize>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
}

impl<'g> LrState<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        let mut ids: HashMap<(usize, usize), usize> = HashMap::with_capacity(m);
        for (i, &e) in g.edges().iter().enumerate() {
            ids.insert(e, i);
        }
        let edge_ids = (0..n)
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .map(|&w| ids[&(v.min(w), v.max(w))])
                    .collect()
            })
            .collect();
        LrState {
            g,
            edge_ids,
            oriented: vec![false; m],
            src: vec![NONE; m],
            dst: vec![NONE; m],
            roots: Vec::new(),
            height: vec![NONE; n],
            parent_edge: vec![None; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out: vec![Vec::new(); n],
            ordered: vec![Vec::new(); n],
            reference: vec![None; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![0; m],
            lowpt_edge: vec![NONE; m],
            left_ref: vec![NONE; n],
            right_ref: vec![NONE; n],
        }
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for i in 0..self.g.neighbors(v).len() {
            let w = self.g.neighbors(v)[i];
            let vw = self.edge_ids[v][i];
            if self.oriented[vw] {
                continue;
            }
            self.oriented[vw] = true;
            self.src[vw] = v;
            self.dst[vw] = w;
            self.out[v].push(vw);
            self.lowpt[vw] = self.height[v];
            self.lowpt2[vw] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = Some(vw);
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
            if self.lowpt2[vw] < self.height[v] {
                // chordal
                self.nesting_depth[vw] += 1;
            }
            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) if !i.is_empty() => self.lowpt[h] > self.lowpt[b],
            _ => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.expect("non-empty right interval")];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.expect("non-empty left interval")];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        for i in 0..self.ordered[v].len() {
            let ei = self.ordered[v][i];
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < self.height[v] {
                let e = e.expect("return edges below a root are impossible");
                if i == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        // merge return edges of ei into p.right
        loop {
            let mut q = self.stack.pop().expect("conflict pair above stack bottom");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty right interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q_low] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                self.reference[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                self.reference[pl] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        // drop entire conflict pairs returning to u
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(low) = p.left.low {
                self.side[low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            // trim left interval
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low {
                    self.reference[low] = p.right.low;
                    self.side[low] = -1;
                    p.left.low = None;
                }
            }
            // trim right interval
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low {
                    self.reference[low] = p.left.low;
                    self.side[low] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        // side of e is the side of a highest return edge
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("return edge implies a conflict pair");
            let hl = top.left.high;
            let hr = top.right.high;
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        // resolve the reference chain iteratively
        let mut chain = vec![e];
        while let Some(r) = self.reference[*chain.last().unwrap()] {
            chain.push(r);
        }
        for i in (0..chain.len() - 1).rev() {
            let (x, r) = (chain[i], chain[i + 1]);
            self.side[x] *= self.side[r];
            self.reference[x] = None;
        }
        self.side[e]
    }

    fn embed(mut self) -> Embedding {
        let n = self.g.vertex_count();
        let m = self.g.edge_count();
        for e in 0..m {
            let s = self.sign(e);
            self.nesting_depth[e] *= s;
        }
        let mut ring = HalfEdgeRing::new(n);
        for v in 0..n {
            let nd = &self.nesting_depth;
            let mut ordered = self.out[v].clone();
            ordered.sort_by_key(|&e| nd[e]);
            let mut previous = None;
            for &e in &ordered {
                let w = self.dst[e];
                ring.add_cw(v, w, previous);
                previous = Some(w);
            }
            self.ordered[v] = ordered;
        }
        for i in 0..self.roots.len() {
            let root = self.roots[i];
            self.embed_dfs(root, &mut ring);
        }
        let rotation = (0..n)
            .map(|v| {
                let mut rot = Vec::with_capacity(self.g.degree(v));
                if let Some(start) = ring.first[v] {
                    let mut x = start;
                    loop {
                        rot.push(x);
                        x = ring.cw[v][&x];
                        if x == start {
                            break;
                        }
                    }
                }
                rot
            })
            .collect();
        Embedding { rotation }
    }

    fn embed_dfs(&mut self, v: usize, ring: &mut HalfEdgeRing) {
        for i in 0..self.ordered[v].len() {
            let ei = self.ordered[v][i];
            let w = self.dst[ei];
            if self.parent_edge[w] == Some(ei) {
                ring.add_first(w, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.embed_dfs(w, ring);
            } else if self.side[ei] == 1 {
                ring.add_cw(w, v, Some(self.right_ref[w]));
            } else {
                ring.add_ccw(w, v, Some(self.left_ref[w]));
                self.left_ref[w] = v;
            }
        }
    }
}
