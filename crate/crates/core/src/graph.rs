//! Simple undirected graphs on dense `0..n` vertex labels.
//!
//! A [`Graph`] is an immutable value: every operation here returns a new
//! graph and leaves its inputs untouched, so construction chains can share
//! intermediate results freely (including across threads).

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("vertex {0} listed more than once")]
    RepeatedVertex(usize),
}

/// An unordered vertex pair, stored with the smaller label first.
pub type Edge = (usize, usize);

fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Equality compares the labelled graph and ignores the name.
#[derive(Clone)]
pub struct Graph {
    order: usize,
    // sorted, deduplicated, u < v
    edges: Vec<Edge>,
    // sorted neighbour lists
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse to one.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            set.insert(normalize(u, v));
        }
        Ok(Self::from_sorted(order, set.into_iter().collect()))
    }

    fn from_sorted(order: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            order,
            edges,
            adj,
            name: None,
        }
    }

    pub fn empty(order: usize) -> Self {
        Self::from_sorted(order, Vec::new())
    }

    pub fn complete(order: usize) -> Self {
        let edges = (0..order)
            .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(order, edges).with_name(format!("K{order}"))
    }

    /// The path `0-1-...-(order-1)`.
    pub fn path(order: usize) -> Self {
        let edges = (1..order).map(|v| (v - 1, v)).collect();
        Self::from_sorted(order, edges).with_name(format!("P{order}"))
    }

    /// The cycle `0-1-...-(order-1)-0`. Orders below 3 give a path.
    pub fn cycle(order: usize) -> Self {
        let mut edges: Vec<Edge> = (1..order).map(|v| (v - 1, v)).collect();
        if order >= 3 {
            edges.push((0, order - 1));
        }
        Self::from_edges(order, edges)
            .expect("cycle edges are valid")
            .with_name(format!("C{order}"))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Self::from_sorted(a + b, edges).with_name(format!("K{a},{b}"))
    }

    /// The star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::complete_bipartite(1, leaves)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degrees in non-decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    pub fn complement(&self) -> Self {
        let edges = (0..self.order)
            .flat_map(|u| (u + 1..self.order).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect();
        Self::from_sorted(self.order, edges)
    }

    /// Returns a copy with the extra edges added.
    pub fn with_edges<I>(&self, extra: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        Self::from_edges(self.order, self.edges.iter().copied().chain(extra))
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order, "permutation length mismatch");
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| normalize(perm[u], perm[v]))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        Self::from_sorted(self.order, edges)
    }

    /// Subgraph induced on `keep`, relabelled densely in the given order.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| normalize(index[u], index[v]))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        Self::from_sorted(keep.len(), edges)
    }

    /// Connected components, each as a sorted vertex list, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("edges", &self.edges)
            .finish()
    }
}

/// An ordered list of distinct vertices of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(host: &Graph, labels: Vec<usize>) -> Result<Self, GraphError> {
        let mut seen = vec![false; host.vertex_count()];
        for &v in &labels {
            if v >= host.vertex_count() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: host.vertex_count(),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::RepeatedVertex(v));
            }
        }
        Ok(VertexSet(labels))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// The join `g + h`: `h` is relabelled to follow `g`, then every cross pair is added.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let shift = g.vertex_count();
    let mut edges: Vec<Edge> = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    for u in 0..shift {
        for v in 0..h.vertex_count() {
            edges.push((u, v + shift));
        }
    }
    edges.sort_unstable();
    Graph::from_sorted(shift + h.vertex_count(), edges)
}

/// Side-by-side placement; the i-th graph's labels are offset by the orders of those before it.
pub fn disjoint_union(gs: &[Graph]) -> Graph {
    let mut edges = Vec::new();
    let mut shift = 0;
    for g in gs {
        edges.extend(g.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
        shift += g.vertex_count();
    }
    edges.sort_unstable();
    Graph::from_sorted(shift, edges)
}

/// Adds a new vertex (labelled `n`) adjacent only to `v`.
pub fn add_pendant(g: &Graph, v: usize) -> Result<Graph, GraphError> {
    let n = g.vertex_count();
    if v >= n {
        return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
    }
    let mut edges = g.edges().to_vec();
    edges.push((v, n));
    Graph::from_edges(n + 1, edges)
}

/// Result of [`identify_edge`].
#[derive(Debug, Clone)]
pub struct Identification {
    pub graph: Graph,
    /// `guest_map[x]` is the label in `graph` of vertex `x` of the guest.
    /// Host vertices keep their labels.
    pub guest_map: Vec<usize>,
}

/// Glues `h` onto `g` by merging edge `e_h` of `h` into edge `e_g` of `g`,
/// first endpoint with first endpoint. The remaining guest vertices are
/// appended after the host's labels in increasing order.
pub fn identify_edge(g: &Graph, e_g: Edge, h: &Graph, e_h: Edge) -> Result<Identification, GraphError> {
    if !g.has_edge(e_g.0, e_g.1) {
        return Err(GraphError::MissingEdge(e_g.0, e_g.1));
    }
    if !h.has_edge(e_h.0, e_h.1) {
        return Err(GraphError::MissingEdge(e_h.0, e_h.1));
    }
    let mut guest_map = vec![usize::MAX; h.vertex_count()];
    guest_map[e_h.0] = e_g.0;
    guest_map[e_h.1] = e_g.1;
    let mut next = g.vertex_count();
    for slot in guest_map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (guest_map[u], guest_map[v])));
    let graph = Graph::from_edges(next, edges)?;
    Ok(Identification { graph, guest_map })
}
