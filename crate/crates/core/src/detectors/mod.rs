//! Containment tests for the forbidden families: `C_k`, `C_k^+`, `2C_k`,
//! `C_k ∪ C_k^+`, the Theta family `Θ_k` (a `k`-cycle plus one chord) and
//! `Θ_k^+` (a Theta graph with a pendant edge at a degree-two vertex).
//!
//! All searches are layered on [`cycles::CycleWalker`]; every family member
//! contains an exact `k`-cycle, so enumerating those cycles and checking the
//! extra structure around each one is complete.

pub mod cycles;

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use cycles::CycleWalker;

pub use cycles::circumference;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Cycle,
    CyclePlus,
    TwoCycles,
    CycleUnionCyclePlus,
    Theta,
    ThetaPlus,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Cycle,
        FamilyKind::CyclePlus,
        FamilyKind::TwoCycles,
        FamilyKind::CycleUnionCyclePlus,
        FamilyKind::Theta,
        FamilyKind::ThetaPlus,
    ];

    pub fn min_k(self) -> usize {
        match self {
            FamilyKind::Theta | FamilyKind::ThetaPlus => 4,
            _ => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Cycle => "cycle",
            FamilyKind::CyclePlus => "cycle-plus",
            FamilyKind::TwoCycles => "two-cycles",
            FamilyKind::CycleUnionCyclePlus => "cycle-union-cycle-plus",
            FamilyKind::Theta => "theta",
            FamilyKind::ThetaPlus => "theta-plus",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| FamilyError::UnknownKind(s.to_string()))
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownKind(String),
    #[error("{kind} needs k >= {min}, got {k}")]
    SizeTooSmall { kind: FamilyKind, k: usize, min: usize },
}

/// A forbidden family with its size parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ForbiddenFamily {
    kind: FamilyKind,
    k: usize,
}

impl ForbiddenFamily {
    pub fn new(kind: FamilyKind, k: usize) -> Result<Self, FamilyError> {
        if k < kind.min_k() {
            return Err(FamilyError::SizeTooSmall { kind, k, min: kind.min_k() });
        }
        Ok(ForbiddenFamily { kind, k })
    }

    pub fn cycle(k: usize) -> Self {
        Self::new(FamilyKind::Cycle, k).expect("k >= 3")
    }

    pub fn cycle_plus(k: usize) -> Self {
        Self::new(FamilyKind::CyclePlus, k).expect("k >= 3")
    }

    pub fn two_cycles(k: usize) -> Self {
        Self::new(FamilyKind::TwoCycles, k).expect("k >= 3")
    }

    pub fn cycle_union_cycle_plus(k: usize) -> Self {
        Self::new(FamilyKind::CycleUnionCyclePlus, k).expect("k >= 3")
    }

    pub fn theta(k: usize) -> Self {
        Self::new(FamilyKind::Theta, k).expect("k >= 4")
    }

    pub fn theta_plus(k: usize) -> Self {
        Self::new(FamilyKind::ThetaPlus, k).expect("k >= 4")
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of vertices of a smallest member.
    pub fn pattern_order(&self) -> usize {
        match self.kind {
            FamilyKind::Cycle | FamilyKind::Theta => self.k,
            FamilyKind::CyclePlus | FamilyKind::ThetaPlus => self.k + 1,
            FamilyKind::TwoCycles => 2 * self.k,
            FamilyKind::CycleUnionCyclePlus => 2 * self.k + 1,
        }
    }

    /// A copy of some member of the family in `g`, if there is one.
    pub fn find_in(&self, g: &Graph) -> Option<ContainmentWitness> {
        let k = self.k;
        match self.kind {
            FamilyKind::Cycle => contains_cycle_k(g, k),
            FamilyKind::CyclePlus => contains_cycle_plus(g, k),
            FamilyKind::TwoCycles => contains_two_cycles(g, k),
            FamilyKind::CycleUnionCyclePlus => contains_ck_union_ck_plus(g, k),
            FamilyKind::Theta => contains_theta(g, k),
            FamilyKind::ThetaPlus => contains_theta_plus(g, k),
        }
    }

    pub fn is_contained_in(&self, g: &Graph) -> bool {
        self.find_in(g).is_some()
    }

    pub fn is_free(&self, g: &Graph) -> bool {
        !self.is_contained_in(g)
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.k)
    }
}

/// The vertices realising a found pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentWitness {
    /// One cycle, or two vertex-disjoint cycles, in traversal order.
    pub cycles: Vec<Vec<usize>>,
    /// Chord of the first cycle (Theta kinds).
    pub chord: Option<(usize, usize)>,
    /// `(attachment on a cycle, outside vertex)` (plus kinds).
    pub pendant: Option<(usize, usize)>,
}

impl ContainmentWitness {
    fn cycle(c: &[usize]) -> Self {
        ContainmentWitness { cycles: vec![c.to_vec()], chord: None, pendant: None }
    }

    /// Re-checks the witness against `g` for the given family.
    pub fn validate(&self, g: &Graph, family: &ForbiddenFamily) -> bool {
        let k = family.k();
        let expected_cycles = match family.kind() {
            FamilyKind::TwoCycles | FamilyKind::CycleUnionCyclePlus => 2,
            _ => 1,
        };
        if self.cycles.len() != expected_cycles {
            return false;
        }
        let mut used = vec![false; g.vertex_count()];
        for c in &self.cycles {
            if c.len() != k {
                return false;
            }
            for (i, &v) in c.iter().enumerate() {
                if v >= g.vertex_count() || std::mem::replace(&mut used[v], true) {
                    return false;
                }
                if !g.has_edge(v, c[(i + 1) % k]) {
                    return false;
                }
            }
        }
        let needs_chord = matches!(family.kind(), FamilyKind::Theta | FamilyKind::ThetaPlus);
        let needs_pendant = matches!(
            family.kind(),
            FamilyKind::CyclePlus | FamilyKind::CycleUnionCyclePlus | FamilyKind::ThetaPlus
        );
        if needs_chord != self.chord.is_some() || needs_pendant != self.pendant.is_some() {
            return false;
        }
        if let Some((x, y)) = self.chord {
            let c = &self.cycles[0];
            let (Some(i), Some(j)) = (c.iter().position(|&v| v == x), c.iter().position(|&v| v == y)) else {
                return false;
            };
            let gap = i.abs_diff(j);
            if gap <= 1 || gap == k - 1 || !g.has_edge(x, y) {
                return false;
            }
        }
        if let Some((on, off)) = self.pendant {
            if !used.get(on).copied().unwrap_or(false) || off >= g.vertex_count() || used[off] {
                return false;
            }
            if !g.has_edge(on, off) {
                return false;
            }
            if let Some((x, y)) = self.chord {
                // the pendant hangs off a degree-two vertex of the Theta graph
                if on == x || on == y {
                    return false;
                }
            }
        }
        true
    }
}

fn outside_neighbor(g: &Graph, on_pattern: &[bool], candidates: impl IntoIterator<Item = usize>) -> Option<(usize, usize)> {
    candidates
        .into_iter()
        .find_map(|v| g.neighbors(v).iter().find(|&&w| !on_pattern[w]).map(|&w| (v, w)))
}

fn mask(n: usize, vertices: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vertices {
        m[v] = true;
    }
    m
}

/// A cycle of length exactly `k`.
pub fn contains_cycle_k(g: &Graph, k: usize) -> Option<ContainmentWitness> {
    CycleWalker::new(g, k).first().map(|c| ContainmentWitness::cycle(&c))
}

/// A `k`-cycle with a vertex adjacent to something off the cycle.
pub fn contains_cycle_plus(g: &Graph, k: usize) -> Option<ContainmentWitness> {
    if g.vertex_count() < k + 1 {
        return None;
    }
    let n = g.vertex_count();
    let flow = CycleWalker::new(g, k).for_each(&mut |c| {
        let on = mask(n, c);
        match outside_neighbor(g, &on, c.iter().copied()) {
            Some(p) => ControlFlow::Break(ContainmentWitness {
                cycles: vec![c.to_vec()],
                chord: None,
                pendant: Some(p),
            }),
            None => ControlFlow::Continue(()),
        }
    });
    flow.break_value()
}

/// Visits unordered pairs of vertex-disjoint `k`-cycles; the first cycle has the smaller anchor.
fn for_each_disjoint_pair<B>(
    g: &Graph,
    k: usize,
    visit: &mut impl FnMut(&[usize], &[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let n = g.vertex_count();
    CycleWalker::new(g, k).for_each(&mut |first| {
        let blocked = mask(n, first);
        CycleWalker::new(g, k)
            .avoiding(&blocked)
            .for_each_from(first[0] + 1, &mut |second| visit(first, second))
    })
}

/// Two vertex-disjoint `k`-cycles.
pub fn contains_two_cycles(g: &Graph, k: usize) -> Option<ContainmentWitness> {
    if g.vertex_count() < 2 * k {
        return None;
    }
    for_each_disjoint_pair(g, k, &mut |a, b| {
        ControlFlow::Break(ContainmentWitness {
            cycles: vec![a.to_vec(), b.to_vec()],
            chord: None,
            pendant: None,
        })
    })
    .break_value()
}

/// Vertex-disjoint copies of `C_k` and `C_k^+`.
pub fn contains_ck_union_ck_plus(g: &Graph, k: usize) -> Option<ContainmentWitness> {
    let n = g.vertex_count();
    if n < 2 * k + 1 {
        return None;
    }
    for_each_disjoint_pair(g, k, &mut |a, b| {
        let mut on = mask(n, a);
        for &v in b {
            on[v] = true;
        }
        // put the cycle carrying the pendant second
        if let Some(p) = outside_neighbor(g, &on, b.iter().copied()) {
            return ControlFlow::Break(ContainmentWitness {
                cycles: vec![a.to_vec(), b.to_vec()],
                chord: None,
                pendant: Some(p),
            });
        }
        if let Some(p) = outside_neighbor(g, &on, a.iter().copied()) {
            return ControlFlow::Break(ContainmentWitness {
                cycles: vec![b.to_vec(), a.to_vec()],
                chord: None,
                pendant: Some(p),
            });
        }
        ControlFlow::Continue(())
    })
    .break_value()
}

/// Chords `(c[i], c[j])` of a cycle, `i < j`, in index order.
fn chords<'a>(g: &'a Graph, c: &'a [usize]) -> impl Iterator<Item = (usize, usize)> + 'a {
    let k = c.len();
    (0..k).flat_map(move |i| {
        (i + 2..k)
            .filter(move |&j| !(i == 0 && j == k - 1))
            .filter(move |&j| g.has_edge(c[i], c[j]))
            .map(move |j| (c[i], c[j]))
    })
}

/// A `k`-cycle together with a chord.
pub fn contains_theta(g: &Graph, k: usize) -> Option<ContainmentWitness> {
    if k < 4 || g.vertex_count() < k {
        return None;
    }
    CycleWalker::new(g, k)
        .for_each(&mut |c| match chords(g, c).next() {
            Some(chord) => ControlFlow::Break(ContainmentWitness {
                cycles: vec![c.to_vec()],
                chord: Some(chord),
                pendant: None,
            }),
            None => ControlFlow::Continue(()),
        })
        .break_value()
}

/// A Theta graph on `k` vertices with a pendant edge at one of its degree-two vertices.
pub fn contains_theta_plus(g: &Graph, k: usize) -> Option<ContainmentWitness> {
    let n = g.vertex_count();
    if k < 4 || n < k + 1 {
        return None;
    }
    CycleWalker::new(g, k)
        .for_each(&mut |c| {
            let on = mask(n, c);
            for (x, y) in chords(g, c) {
                let rest = c.iter().copied().filter(|&v| v != x && v != y);
                if let Some(p) = outside_neighbor(g, &on, rest) {
                    return ControlFlow::Break(ContainmentWitness {
                        cycles: vec![c.to_vec()],
                        chord: Some((x, y)),
                        pendant: Some(p),
                    });
                }
            }
            ControlFlow::Continue(())
        })
        .break_value()
}
