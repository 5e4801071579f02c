//! Deterministic builders for the graph families used in the lower-bound
//! constructions, each paired with its closed-form edge count.

pub mod catalog;
pub mod gluing;
pub mod witness;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{identify_edge, Edge, Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{what}: {reason}")]
    OutOfRange { what: &'static str, reason: String },
    #[error("unknown construction `{0}`")]
    UnknownName(String),
    #[error("construction `{name}` needs parameter `{param}`")]
    MissingParameter { name: String, param: String },
    #[error("bad value `{value}` for parameter `{param}`")]
    BadParameter { param: String, value: String },
    #[error("base graph is not planar")]
    NotPlanar,
    #[error("base graph is a triangulation; no face of length four or more")]
    Triangulation,
    #[error("no face has two non-adjacent vertices two steps apart")]
    NoSuitableFace,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("search failed: {0}")]
    Search(String),
}

fn out_of_range(what: &'static str, reason: impl Into<String>) -> ConstructionError {
    ConstructionError::OutOfRange { what, reason: reason.into() }
}

/// A plane triangulation together with its standard face list and the edge
/// used when it is glued onto another graph.
#[derive(Debug, Clone)]
pub struct PlaneTriangulation {
    pub graph: Graph,
    /// Triangular faces of the standard embedding, as sorted triples, sorted.
    pub faces: Vec<[usize; 3]>,
    /// Gluing edge; lies on `outer_face`.
    pub outer_edge: Edge,
    pub outer_face: [usize; 3],
}

impl PlaneTriangulation {
    fn from_faces(graph: Graph, mut faces: Vec<[usize; 3]>) -> Self {
        for f in &mut faces {
            f.sort_unstable();
        }
        faces.sort_unstable();
        let outer_edge = (0, 1);
        let outer_face = *faces
            .iter()
            .find(|f| f[0] == 0 && f[1] == 1)
            .expect("apex edge borders a face");
        PlaneTriangulation { graph, faces, outer_edge, outer_face }
    }
}

/// `K_2 + P_{m-2}`: apexes `0` and `1`, path `2..m`.
pub fn triangulation(m: usize) -> Result<PlaneTriangulation, ConstructionError> {
    if m < 3 {
        return Err(out_of_range("T(m)", format!("m must be at least 3, got {m}")));
    }
    let mut edges = vec![(0, 1)];
    for v in 2..m {
        edges.push((0, v));
        edges.push((1, v));
        if v > 2 {
            edges.push((v - 1, v));
        }
    }
    let graph = Graph::from_edges(m, edges)?.with_name(format!("T({m})"));
    let mut faces = vec![[0, 1, 2], [0, 1, m - 1]];
    for v in 2..m - 1 {
        faces.push([0, v, v + 1]);
        faces.push([1, v, v + 1]);
    }
    Ok(PlaneTriangulation::from_faces(graph, faces))
}

/// Maximal outerplanar graph on `p` vertices with maximum degree at most four:
/// the square of the path `0-1-...-(p-1)` (a triangulated strip).
pub fn outerplanar(p: usize) -> Result<Graph, ConstructionError> {
    if p < 1 {
        return Err(out_of_range("O(p)", "p must be at least 1"));
    }
    let edges = (1..p).map(|v| (v - 1, v)).chain((2..p).map(|v| (v - 2, v)));
    Ok(Graph::from_edges(p, edges)?.with_name(format!("O({p})")))
}

/// Closed-form edge count of [`outerplanar`].
pub fn outerplanar_edges(p: usize) -> usize {
    (2 * p).saturating_sub(3)
}

/// Spine of the glued construction: a path `v_1 ... v_{ell-2}` (labels
/// `0..ell-2`) plus adjacent vertices `u_1 = ell-2`, `u_2 = ell-1`, both joined to
/// `v_1, v_k, v_{2(k-1)+1}, ...`.
#[derive(Debug, Clone)]
pub struct Spine {
    pub graph: Graph,
    pub ell: usize,
    pub k: usize,
    /// Path indices (1-based) of the attachment vertices.
    pub attachments: Vec<usize>,
}

impl Spine {
    /// Label of path vertex `v_i` (1-based).
    pub fn path_vertex(&self, i: usize) -> usize {
        i - 1
    }

    pub fn hubs(&self) -> (usize, usize) {
        (self.ell - 2, self.ell - 1)
    }
}

pub fn spine(ell: usize, k: usize) -> Result<Spine, ConstructionError> {
    if ell < 4 {
        return Err(out_of_range("R(ell, k)", format!("ell must be at least 4, got {ell}")));
    }
    if k < 3 {
        return Err(out_of_range("R(ell, k)", format!("k must be at least 3, got {k}")));
    }
    let path_len = ell - 2;
    let a = (ell - 3) / (k - 1);
    let attachments: Vec<usize> = (0..=a).map(|j| j * (k - 1) + 1).collect();
    let (u1, u2) = (ell - 2, ell - 1);
    let mut edges: Vec<Edge> = (1..path_len).map(|v| (v - 1, v)).collect();
    edges.push((u1, u2));
    for &i in &attachments {
        edges.push((u1, i - 1));
        edges.push((u2, i - 1));
    }
    let graph = Graph::from_edges(ell, edges)?.with_name(format!("R({ell},{k})"));
    Ok(Spine { graph, ell, k, attachments })
}

/// Closed-form edge count of [`spine`].
pub fn spine_edges(ell: usize, k: usize) -> usize {
    ell + 2 * ((ell - 3) / (k - 1))
}

fn stack_into_faces(
    chosen: &[[usize; 3]],
    first_label: usize,
    kept: &mut Vec<[usize; 3]>,
    edges: &mut Vec<Edge>,
) {
    for (i, f) in chosen.iter().enumerate() {
        let x = first_label + i;
        for &c in f {
            edges.push((c, x));
        }
        kept.extend([[f[0], f[1], x], [f[1], f[2], x], [f[0], f[2], x]]);
    }
}

/// `T_p` with `n - p` new vertices stacked into its first `n - p` faces
/// (canonical face order), each joined to the face's three corners.
pub fn stacked_triangulation(n: usize, p: usize) -> Result<PlaneTriangulation, ConstructionError> {
    if p < 3 || n < p || n > 3 * p - 4 {
        return Err(out_of_range(
            "T_n^p",
            format!("need p >= 3 and p <= n <= 3p-4, got n={n}, p={p}"),
        ));
    }
    let base = triangulation(p)?;
    let added = n - p;
    let mut faces = base.faces[added..].to_vec();
    let mut edges = base.graph.edges().to_vec();
    stack_into_faces(&base.faces[..added], p, &mut faces, &mut edges);
    let graph = Graph::from_edges(n, edges)?.with_name(format!("T_{n}^{p}"));
    Ok(PlaneTriangulation::from_faces(graph, faces))
}

/// `T_q` (`q = p - 1`) with two adjacent new vertices in its first face `abc`
/// (`x` joined to `a, b, c`; `y` joined to `x, a, b`), then `n - q - 2` vertices
/// stacked into the following faces.
pub fn paired_triangulation(n: usize, q: usize) -> Result<PlaneTriangulation, ConstructionError> {
    let p = q + 1;
    if p < 4 || n < 2 * p || n > 3 * p - 6 {
        return Err(out_of_range(
            "L_n^(p-1)",
            format!("need 2p <= n <= 3p-6 with p = q+1, got n={n}, q={q}"),
        ));
    }
    let base = triangulation(q)?;
    let [a, b, c] = base.faces[0];
    let (x, y) = (q, q + 1);
    let mut edges = base.graph.edges().to_vec();
    edges.extend([(a, x), (b, x), (c, x), (x, y), (a, y), (b, y)]);
    let mut faces = vec![[x, b, c], [x, a, c], [y, x, a], [y, x, b], [y, a, b]];
    let added = n - q - 2;
    faces.extend_from_slice(&base.faces[1 + added..]);
    stack_into_faces(&base.faces[1..1 + added], q + 2, &mut faces, &mut edges);
    let graph = Graph::from_edges(n, edges)?.with_name(format!("L_{n}^{q}"));
    Ok(PlaneTriangulation::from_faces(graph, faces))
}

/// Parameters of the glued `C_k`-free construction on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstructionParams {
    pub k: usize,
    pub n: usize,
    /// `k = 2p + 1` (odd) or `k = 2p` (even).
    pub p: usize,
    /// `k mod 2`.
    pub parity: usize,
    /// `k - 6 + floor((k-1)/2)`; equals `3p-5` (odd) or `3p-7` (even).
    pub modulus: usize,
    /// Number of full blocks: `t * modulus + r = n - 4`.
    pub t: usize,
    pub r: usize,
    /// `floor((ell-3)/(k-1))` for the spine `R_{t+4}`.
    pub a: usize,
}

impl ConstructionParams {
    pub fn new(k: usize, n: usize) -> Result<Self, ConstructionError> {
        if k < 11 {
            return Err(out_of_range("C_k construction", format!("k must be at least 11, got {k}")));
        }
        let modulus = k - 6 + (k - 1) / 2;
        let min_n = k - 4 + (k - 1) / 2;
        if n < min_n {
            return Err(out_of_range(
                "C_k construction",
                format!("n must be at least k-4+floor((k-1)/2) = {min_n}, got {n}"),
            ));
        }
        let (t, r) = ((n - 4) / modulus, (n - 4) % modulus);
        Ok(ConstructionParams {
            k,
            n,
            p: k / 2,
            parity: k % 2,
            modulus,
            t,
            r,
            a: (t + 1) / (k - 1),
        })
    }

    /// Largest `n` for which a `C_k`-free triangulation exists by stacking.
    pub fn triangulation_limit(k: usize) -> usize {
        k - 5 + (k - 1) / 2
    }

    fn full_block(&self) -> Result<PlaneTriangulation, ConstructionError> {
        if self.parity == 1 {
            stacked_triangulation(3 * self.p - 4, self.p)
        } else {
            paired_triangulation(3 * self.p - 6, self.p - 1)
        }
    }

    fn last_block(&self) -> Result<(Graph, Edge), ConstructionError> {
        let r = self.r;
        if r <= 1 {
            return Ok((Graph::complete(r + 2), (0, 1)));
        }
        let block = if r <= self.k - 3 {
            triangulation(r + 2)?
        } else if self.parity == 1 {
            stacked_triangulation(r + 2, self.p)?
        } else {
            paired_triangulation(r + 2, self.p - 1)?
        };
        Ok((block.graph, block.outer_edge))
    }

    /// Edge count as the sum over the pieces: the spine plus each block minus
    /// its identified edge.
    pub fn expected_edges(&self) -> usize {
        let full = if self.parity == 1 { 3 * self.p - 4 } else { 3 * self.p - 6 };
        spine_edges(self.t + 4, self.k) + self.t * (3 * full - 7) + (3 * (self.r + 2)).saturating_sub(7)
    }
}

/// The glued `C_k`-free planar graph.
#[derive(Debug, Clone)]
pub struct GluedConstruction {
    pub graph: Graph,
    pub params: ConstructionParams,
    /// Vertices of each glued block `H_1, ..., H_{t+1}` in the final labelling.
    pub blocks: Vec<VertexSet>,
}

/// Glues `H_1, ..., H_{t+1}` onto the spine `R_{t+4}`, block `H_i` along
/// the spine edge `v_i v_{i+1}`.
pub fn counterexample_ck(k: usize, n: usize) -> Result<GluedConstruction, ConstructionError> {
    let params = ConstructionParams::new(k, n)?;
    let spine = spine(params.t + 4, k)?;
    let full = params.full_block()?;
    let mut graph = spine.graph.clone();
    let mut block_maps = Vec::with_capacity(params.t + 1);
    for i in 1..=params.t + 1 {
        let (block, edge) = if i <= params.t {
            (full.graph.clone(), full.outer_edge)
        } else {
            params.last_block()?
        };
        let target = (spine.path_vertex(i), spine.path_vertex(i + 1));
        let glued = identify_edge(&graph, target, &block, edge)?;
        graph = glued.graph;
        block_maps.push(glued.guest_map);
    }
    let graph = graph.with_name(format!("glued C{k}-free construction, n={n}"));
    let blocks = block_maps
        .into_iter()
        .map(|m| VertexSet::new(&graph, m))
        .collect::<Result<_, _>>()?;
    Ok(GluedConstruction { graph, params, blocks })
}

/// The `C_k`-free triangulation used for `k <= n <= k-5+floor((k-1)/2)`.
pub fn small_regime_triangulation(k: usize, n: usize) -> Result<PlaneTriangulation, ConstructionError> {
    if k < 11 || n < k || n > ConstructionParams::triangulation_limit(k) {
        return Err(out_of_range(
            "small-order triangulation",
            format!("need k >= 11 and k <= n <= k-5+floor((k-1)/2), got k={k}, n={n}"),
        ));
    }
    if k % 2 == 1 {
        stacked_triangulation(n, k / 2)
    } else {
        paired_triangulation(n, k / 2 - 1)
    }
}
