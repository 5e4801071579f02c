//! Recursive gluings: attach a fixed gadget to a vertex of a base graph so the
//! edge count grows by a known amount while the forbidden family stays absent.

use serde::Serialize;

use super::{outerplanar, ConstructionError};
use crate::graph::{disjoint_union, Graph};
use crate::planarity::planar_embedding;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Gluing {
    /// Vertex `0` joined to `O_{k-2} ∪ K_2` (to `k` isolated vertices when `k = 3`).
    /// Keeps `C_k`-freeness and `Θ_k`-freeness; adds `3k-6` edges on `k` vertices.
    Fan { k: usize },
    /// Vertex `0` joined to `2 O_{k-2} ∪ 2 K_2`; keeps `2C_k`-freeness, adds `6k-12`.
    DoubleFan { k: usize },
    /// Vertex `0` joined to `O_{2k-2} ∪ K_2`; turns a `C_k`-free base into a
    /// `2C_k`-free graph, adds `6k-6`.
    LongFan { k: usize },
    /// Vertex `0` joined to `K_{1,t-1}`; keeps `Θ_k`-freeness for
    /// `t ∈ {k-2, k-1}`, adds `2t-1`.
    Star { t: usize },
    /// `t` new vertices inside a non-triangular face, each joined to two face
    /// vertices at distance two; keeps `Θ_4`-freeness, adds `2t`.
    FaceVertices { t: usize },
}

impl Gluing {
    pub fn name(&self) -> &'static str {
        match self {
            Gluing::Fan { .. } => "glue-fan",
            Gluing::DoubleFan { .. } => "glue-double-fan",
            Gluing::LongFan { .. } => "glue-long-fan",
            Gluing::Star { .. } => "glue-star",
            Gluing::FaceVertices { .. } => "glue-face",
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            Gluing::Fan { .. } => "recursive C_k / Theta_k gluing: ex(n) >= ex(n-k) + 3k-6",
            Gluing::DoubleFan { .. } => "recursive 2C_k gluing: ex(n, 2C_k) >= ex(n-2k, 2C_k) + 6k-12",
            Gluing::LongFan { .. } => "2C_k gluing over a C_k-free base: ex(n, 2C_k) >= ex(n-2k, C_k) + 6k-6",
            Gluing::Star { .. } => "recursive Theta_k gluing: ex(n) >= ex(n-t) + 2t-1, t in {k-2, k-1}",
            Gluing::FaceVertices { .. } => "recursive Theta_4 gluing: ex(n) >= ex(n-t) + 2t, t in {2, 3}",
        }
    }

    fn bad(&self, reason: impl Into<String>) -> ConstructionError {
        ConstructionError::OutOfRange { what: self.name(), reason: reason.into() }
    }

    /// The gadget joined to the base vertex.
    fn gadget(&self) -> Result<Graph, ConstructionError> {
        match *self {
            Gluing::Fan { k: 3 } => Ok(Graph::empty(3)),
            Gluing::Fan { k } if k > 3 => Ok(disjoint_union(&[outerplanar(k - 2)?, Graph::complete(2)])),
            Gluing::Fan { k } => Err(self.bad(format!("k must be at least 3, got {k}"))),
            Gluing::DoubleFan { k } if k >= 4 => {
                let o = outerplanar(k - 2)?;
                Ok(disjoint_union(&[o.clone(), o, Graph::complete(2), Graph::complete(2)]))
            }
            Gluing::DoubleFan { k } => Err(self.bad(format!("k must be at least 4, got {k}"))),
            Gluing::LongFan { k } if k >= 4 => Ok(disjoint_union(&[outerplanar(2 * k - 2)?, Graph::complete(2)])),
            Gluing::LongFan { k } => Err(self.bad(format!("k must be at least 4, got {k}"))),
            Gluing::Star { t } if t >= 2 => Ok(Graph::star(t - 1)),
            Gluing::Star { t } => Err(self.bad(format!("t must be at least 2, got {t}"))),
            Gluing::FaceVertices { .. } => unreachable!("face gluing has no fixed gadget"),
        }
    }

    /// Number of vertices added to the base.
    pub fn added_vertices(&self) -> usize {
        match *self {
            Gluing::Fan { k } => k,
            Gluing::DoubleFan { k } | Gluing::LongFan { k } => 2 * k,
            Gluing::Star { t } | Gluing::FaceVertices { t } => t,
        }
    }

    /// Closed-form number of edges added.
    pub fn edge_delta(&self) -> usize {
        match *self {
            Gluing::Fan { k } => 3 * k - 6,
            Gluing::DoubleFan { k } => 6 * k - 12,
            Gluing::LongFan { k } => 6 * k - 6,
            Gluing::Star { t } => 2 * t - 1,
            Gluing::FaceVertices { t } => 2 * t,
        }
    }

    pub fn apply(&self, base: &Graph) -> Result<Graph, ConstructionError> {
        if base.vertex_count() == 0 {
            return Err(self.bad("base graph is empty"));
        }
        let g = match *self {
            Gluing::FaceVertices { t } => attach_in_face(base, t)?,
            _ => {
                let gadget = self.gadget()?;
                let n = base.vertex_count();
                let union = disjoint_union(&[base.clone(), gadget.clone()]);
                union.with_edges((0..gadget.vertex_count()).map(|i| (0, n + i)))?
            }
        };
        Ok(g.with_name(format!("{} of {}", self.name(), base.name().unwrap_or("base"))))
    }
}

fn attach_in_face(base: &Graph, t: usize) -> Result<Graph, ConstructionError> {
    if t < 1 {
        return Err(ConstructionError::OutOfRange { what: "glue-face", reason: "t must be at least 1".into() });
    }
    let embedding = planar_embedding(base).ok_or(ConstructionError::NotPlanar)?;
    let mut faces = embedding.faces();
    if faces.iter().all(|f| f.len() <= 3) {
        return Err(ConstructionError::Triangulation);
    }
    faces.retain(|f| f.len() >= 4);
    // canonical choice: the lexicographically least (u1, u2) over all faces
    let mut best: Option<(usize, usize)> = None;
    for f in &faces {
        let len = f.len();
        for i in 0..len {
            let (a, b) = (f[i], f[(i + 2) % len]);
            if a == b || base.has_edge(a, b) {
                continue;
            }
            let pair = (a.min(b), a.max(b));
            if best.is_none_or(|p| pair < p) {
                best = Some(pair);
            }
        }
    }
    let (u1, u2) = best.ok_or(ConstructionError::NoSuitableFace)?;
    let n = base.vertex_count();
    let union = disjoint_union(&[base.clone(), Graph::empty(t)]);
    Ok(union.with_edges((n..n + t).flat_map(|x| [(u1, x), (u2, x)]))?)
}
