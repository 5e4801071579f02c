//! Exact-length cycle enumeration.
//!
//! Every cycle is reported once, rooted at its smallest vertex (the anchor)
//! and oriented so that the anchor's successor is smaller than its
//! predecessor. Paths are extended depth-first through vertices larger than
//! the anchor; a branch is cut as soon as the BFS distance back to the anchor
//! (within the same admissible vertex set) cannot be covered in the edges
//! that remain.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::graph::Graph;

/// Orders at or above this enumerate anchors in parallel.
const PARALLEL_ORDER: usize = 96;

pub(crate) struct CycleWalker<'g> {
    g: &'g Graph,
    len: usize,
    blocked: Option<&'g [bool]>,
}

impl<'g> CycleWalker<'g> {
    pub fn new(g: &'g Graph, len: usize) -> Self {
        CycleWalker { g, len, blocked: None }
    }

    /// Excludes vertices with `blocked[v] == true` from every cycle.
    pub fn avoiding(mut self, blocked: &'g [bool]) -> Self {
        self.blocked = Some(blocked);
        self
    }

    fn is_blocked(&self, v: usize) -> bool {
        self.blocked.is_some_and(|b| b[v])
    }

    /// Visits every cycle whose smallest vertex is at least `min_anchor`, in
    /// canonical order, until `visit` breaks.
    pub fn for_each_from<B>(
        &self,
        min_anchor: usize,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if self.len < 3 {
            return ControlFlow::Continue(());
        }
        for anchor in min_anchor..self.g.vertex_count() {
            self.for_each_at(anchor, visit)?;
        }
        ControlFlow::Continue(())
    }

    pub fn for_each<B>(&self, visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>) -> ControlFlow<B> {
        self.for_each_from(0, visit)
    }

    /// First cycle in canonical order, searched in parallel over anchors on
    /// large hosts. The answer does not depend on scheduling.
    pub fn first(&self) -> Option<Vec<usize>> {
        if self.len < 3 || self.len > self.g.vertex_count() {
            return None;
        }
        let at = |anchor: usize| match self.for_each_at(anchor, &mut |c| ControlFlow::Break(c.to_vec())) {
            ControlFlow::Break(c) => Some(c),
            ControlFlow::Continue(()) => None,
        };
        if self.g.vertex_count() >= PARALLEL_ORDER {
            (0..self.g.vertex_count()).into_par_iter().find_map_first(at)
        } else {
            (0..self.g.vertex_count()).find_map(at)
        }
    }

    fn for_each_at<B>(
        &self,
        anchor: usize,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let g = self.g;
        if self.is_blocked(anchor) || g.degree(anchor) < 2 {
            return ControlFlow::Continue(());
        }
        let admissible = |v: usize| v > anchor && !self.is_blocked(v);
        let dist = self.distances(anchor, &admissible);
        // a cycle through the anchor needs two admissible neighbours
        if g.neighbors(anchor).iter().filter(|&&w| admissible(w)).count() < 2 {
            return ControlFlow::Continue(());
        }
        let mut path = Vec::with_capacity(self.len);
        let mut on_path = vec![false; g.vertex_count()];
        path.push(anchor);
        on_path[anchor] = true;
        self.extend(&mut path, &mut on_path, &dist, &admissible, visit)
    }

    fn distances(&self, anchor: usize, admissible: &impl Fn(usize) -> bool) -> Vec<usize> {
        let g = self.g;
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[anchor] = 0;
        let mut queue = vec![anchor];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            if dist[v] >= self.len {
                continue;
            }
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX && admissible(w) {
                    dist[w] = dist[v] + 1;
                    queue.push(w);
                }
            }
        }
        dist
    }

    fn extend<B>(
        &self,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        dist: &[usize],
        admissible: &impl Fn(usize) -> bool,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let anchor = path[0];
        let last = *path.last().unwrap();
        let used = path.len();
        for &w in self.g.neighbors(last) {
            if w == anchor {
                if used == self.len && path[1] < last {
                    visit(path)?;
                }
                continue;
            }
            if used == self.len || on_path[w] || !admissible(w) {
                continue;
            }
            // `used` edges after stepping to w, at least dist[w] to return
            if dist[w] == usize::MAX || used + dist[w] > self.len {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            let flow = self.extend(path, on_path, dist, admissible, visit);
            on_path[w] = false;
            path.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Length of a longest cycle, 0 for forests.
pub fn circumference(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    for anchor in 0..n {
        // cycles rooted here use only vertices >= anchor
        if n - anchor <= best {
            break;
        }
        let mut on_path = vec![false; n];
        on_path[anchor] = true;
        let mut path = vec![anchor];
        longest_from(g, &mut path, &mut on_path, &mut best, n - anchor);
        if best == n {
            break;
        }
    }
    best
}

fn longest_from(g: &Graph, path: &mut Vec<usize>, on_path: &mut [bool], best: &mut usize, limit: usize) {
    if *best == limit {
        return;
    }
    let anchor = path[0];
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == anchor && path.len() >= 3 {
            *best = (*best).max(path.len());
        } else if w > anchor && !on_path[w] {
            path.push(w);
            on_path[w] = true;
            longest_from(g, path, on_path, best, limit);
            on_path[w] = false;
            path.pop();
        }
    }
}
