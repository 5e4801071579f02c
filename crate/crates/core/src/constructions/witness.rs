//! Small explicit graphs that certify lower bounds on planar Turán numbers.

use serde::Serialize;

use super::{outerplanar, outerplanar_edges, ConstructionError};
use crate::detectors::{FamilyKind, ForbiddenFamily};
use crate::graph::{disjoint_union, join, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Witness {
    /// `K_1 + (t O_{k-2} ∪ O_eps)` on `n` vertices, `k+1 <= n <= 2k`.
    GStar { k: usize, n: usize },
    /// `C_8` plus the chords `v1v3, v3v5, v5v7`.
    C8PlusChords,
    /// `K_1 + (floor((n-1)/2) K_2 ∪ ((n-1) mod 2) K_1)`.
    Windmill { n: usize },
    /// `C_12` plus the chords `v_i v_{i+2}` for odd `i` (indices mod 12).
    HStar12,
    TwoK4,
    K23,
    /// `K_2 + complement(K_3)`.
    K2JoinK3Bar,
    C6Complement,
    /// `K_{2,m}`.
    K2m { m: usize },
    /// A 7-vertex planar `Θ_4`-free graph with at least 11 edges, found by search.
    Theta4Seven,
}

impl Witness {
    pub fn name(&self) -> &'static str {
        match self {
            Witness::GStar { .. } => "g-star",
            Witness::C8PlusChords => "c8-plus-chords",
            Witness::Windmill { .. } => "windmill",
            Witness::HStar12 => "h-star-12",
            Witness::TwoK4 => "two-k4",
            Witness::K23 => "k23",
            Witness::K2JoinK3Bar => "k2-join-k3bar",
            Witness::C6Complement => "c6-complement",
            Witness::K2m { .. } => "k2m",
            Witness::Theta4Seven => "theta4-seven",
        }
    }

    /// What the graph certifies.
    pub fn citation(&self) -> &'static str {
        match self {
            Witness::GStar { .. } => {
                "C_k-free planar graph on k+1..2k vertices with 3n-9, 3n-11 or 3n-12 edges; \
                 also Theta_k-free"
            }
            Witness::C8PlusChords => "C_4-free planar graph on 8 vertices with 11 edges",
            Witness::Windmill { .. } => "C_4-free planar graph on n vertices with floor(3(n-1)/2) edges",
            Witness::HStar12 => "C_4-free planar graph on 12 vertices with 18 edges",
            Witness::TwoK4 => "C_4^+-free planar graph on 8 vertices with 12 edges",
            Witness::K23 => "Theta_4-free planar graph on 5 vertices with 6 edges",
            Witness::K2JoinK3Bar => "Theta_4^+-free planar graph on 5 vertices with 7 edges",
            Witness::C6Complement => "Theta_4-free planar graph on 6 vertices with 9 edges",
            Witness::K2m { .. } => "Theta_4-free planar graph on m+2 vertices with 2m edges",
            Witness::Theta4Seven => {
                "Theta_4-free planar graph on 7 vertices with at least 11 edges (search-derived)"
            }
        }
    }

    /// The family the witness avoids, when it is a single fixed one.
    pub fn avoids(&self) -> Option<ForbiddenFamily> {
        let f = |kind, k| ForbiddenFamily::new(kind, k).ok();
        match *self {
            Witness::GStar { k, .. } => f(FamilyKind::Cycle, k),
            Witness::C8PlusChords | Witness::Windmill { .. } | Witness::HStar12 => f(FamilyKind::Cycle, 4),
            Witness::TwoK4 => f(FamilyKind::CyclePlus, 4),
            Witness::K23 | Witness::C6Complement | Witness::K2m { .. } | Witness::Theta4Seven => {
                f(FamilyKind::Theta, 4)
            }
            Witness::K2JoinK3Bar => f(FamilyKind::ThetaPlus, 4),
        }
    }

    fn g_star_parts(k: usize, n: usize) -> Result<(usize, usize), ConstructionError> {
        if k < 5 || n < k + 1 || n > 2 * k {
            return Err(ConstructionError::OutOfRange {
                what: "g-star",
                reason: format!("need k >= 5 and k+1 <= n <= 2k, got k={k}, n={n}"),
            });
        }
        Ok(if n <= 2 * k - 3 { (1, n - k + 1) } else { (2, n + 3 - 2 * k) })
    }

    pub fn build(&self) -> Result<Graph, ConstructionError> {
        let g = match *self {
            Witness::GStar { k, n } => {
                let (t, eps) = Self::g_star_parts(k, n)?;
                let mut parts = vec![outerplanar(k - 2)?; t];
                parts.push(outerplanar(eps)?);
                join(&Graph::complete(1), &disjoint_union(&parts))
            }
            Witness::C8PlusChords => Graph::cycle(8).with_edges([(0, 2), (2, 4), (4, 6)])?,
            Witness::Windmill { n } => {
                if n < 1 {
                    return Err(ConstructionError::OutOfRange { what: "windmill", reason: "n must be at least 1".into() });
                }
                let pairs = vec![Graph::complete(2); (n - 1) / 2];
                let mut parts = pairs;
                if (n - 1) % 2 == 1 {
                    parts.push(Graph::complete(1));
                }
                join(&Graph::complete(1), &disjoint_union(&parts))
            }
            Witness::HStar12 => Graph::cycle(12).with_edges((0..6).map(|j| (2 * j, (2 * j + 2) % 12)))?,
            Witness::TwoK4 => disjoint_union(&[Graph::complete(4), Graph::complete(4)]),
            Witness::K23 => Graph::complete_bipartite(2, 3),
            Witness::K2JoinK3Bar => join(&Graph::complete(2), &Graph::empty(3)),
            Witness::C6Complement => Graph::cycle(6).complement(),
            Witness::K2m { m } => Graph::complete_bipartite(2, m),
            Witness::Theta4Seven => {
                let family = ForbiddenFamily::theta(4);
                let found = crate::search::enumerate_free_graphs(7, &family, 11)
                    .map_err(|e| ConstructionError::Search(e.to_string()))?;
                found.into_iter().next().ok_or_else(|| {
                    ConstructionError::Search("no 7-vertex Theta_4-free planar graph with 11 edges".into())
                })?
            }
        };
        Ok(g.with_name(self.name()))
    }

    /// Closed-form edge count; `None` for the search-derived entry.
    pub fn expected_edges(&self) -> Option<usize> {
        Some(match *self {
            Witness::GStar { k, n } => {
                let (t, eps) = Self::g_star_parts(k, n).ok()?;
                (t * (k - 2) + eps) + t * outerplanar_edges(k - 2) + outerplanar_edges(eps)
            }
            Witness::C8PlusChords => 11,
            Witness::Windmill { n } => (n - 1) + (n - 1) / 2,
            Witness::HStar12 => 18,
            Witness::TwoK4 => 12,
            Witness::K23 => 6,
            Witness::K2JoinK3Bar => 7,
            Witness::C6Complement => 9,
            Witness::K2m { m } => 2 * m,
            Witness::Theta4Seven => return None,
        })
    }
}
