//! The Indigenous graph `IG_k` and its exact invariants.
//!
//! Vertices are the nonzero elements `1, …, k, m`; distinct `a`, `b` are
//! adjacent exactly when `a ⊙ b = m`. Adjacency is computed from the
//! semiring multiplication itself.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::{limits, Elem, Result, SemiringCtx};

/// A distance-like graph quantity that may be infinite (girth of a forest,
/// diameter of a disconnected graph).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndigenousGraph {
    ctx: SemiringCtx,
    vertices: Vec<Elem>,
    adjacency: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphInvariants {
    pub diameter: Length,
    pub girth: Length,
    pub clique_number: u32,
    pub chromatic_number: u32,
}

impl IndigenousGraph {
    pub fn new(k: u32) -> Result<Self> {
        Ok(Self::from_ctx(&SemiringCtx::new(k)?))
    }

    pub fn from_ctx(ctx: &SemiringCtx) -> Self {
        let vertices: Vec<Elem> = ctx.nonzero_elements().collect();
        let adjacency = vertices
            .iter()
            .map(|&a| vertices.iter().map(|&b| a != b && ctx.times(a, b) == Elem::Many).collect())
            .collect();
        IndigenousGraph { ctx: *ctx, vertices, adjacency }
    }

    pub fn k(&self) -> u32 {
        self.ctx.k()
    }

    /// `1, …, k, m` in that order; vertex ids index into this slice.
    pub fn vertices(&self) -> &[Elem] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_id(&self, v: Elem) -> Option<usize> {
        match v {
            Elem::Zero => None,
            _ if self.ctx.contains(v) => Some(v.index(self.k()) - 1),
            _ => None,
        }
    }

    pub fn adjacent(&self, u: Elem, v: Elem) -> bool {
        match (self.vertex_id(u), self.vertex_id(v)) {
            (Some(i), Some(j)) => self.adjacency[i][j],
            _ => false,
        }
    }

    pub fn neighbors(&self, v: Elem) -> Vec<Elem> {
        self.vertex_id(v).map(|i| self.neighbor_ids(i).map(|j| self.vertices[j]).collect()).unwrap_or_default()
    }

    pub fn degree(&self, v: Elem) -> usize {
        self.vertex_id(v).map_or(0, |i| self.neighbor_ids(i).count())
    }

    fn neighbor_ids(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[i].iter().enumerate().filter(|(_, &e)| e).map(|(j, _)| j)
    }

    /// Edges `(u, v)` with `u` listed before `v`, in vertex order.
    pub fn edges(&self) -> Vec<(Elem, Elem)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacency[i][j])
            .map(|(i, j)| (self.vertices[i], self.vertices[j]))
            .collect()
    }

    /// Plain-text edge list, one `u v` pair per line.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn is_clique(&self, vs: &[Elem]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.neighbor_ids(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Greatest shortest-path distance, by breadth-first search from every vertex.
    pub fn diameter(&self) -> Length {
        let mut best = 0;
        for s in 0..self.vertex_count() {
            for d in self.bfs(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Length::Infinite,
                }
            }
        }
        Length::Finite(best)
    }

    /// Length of a shortest cycle. A BFS from every vertex; each non-tree
    /// edge `(u, w)` closes a walk of length `d(u) + d(w) + 1`, and the
    /// minimum over all roots is the girth.
    pub fn girth(&self) -> Length {
        let n = self.vertex_count();
        let mut best: Option<u32> = None;
        for s in 0..n {
            let mut dist = vec![u32::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbor_ids(u) {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best.map_or(Length::Infinite, Length::Finite)
    }

    fn masks(&self) -> Vec<u128> {
        (0..self.vertex_count()).map(|i| self.neighbor_ids(i).fold(0u128, |m, j| m | (1 << j))).collect()
    }

    /// Exact clique number by branch and bound, for `k <= limits::GRAPH_EXACT`.
    pub fn clique_number(&self) -> Result<u32> {
        self.clique_number_within(limits::GRAPH_EXACT)
    }

    pub fn clique_number_within(&self, limit: u32) -> Result<u32> {
        Ok(self.maximum_clique_within(limit)?.len() as u32)
    }

    /// A maximum clique, vertices in ascending order.
    pub fn maximum_clique_within(&self, limit: u32) -> Result<Vec<Elem>> {
        self.ctx.ensure_within("exact clique search", limit.min(limits::ELEM_SET))?;
        let masks = self.masks();
        let all = if self.vertex_count() == 128 { u128::MAX } else { (1u128 << self.vertex_count()) - 1 };
        let mut best = 0u128;
        expand_clique(&masks, 0, all, &mut best);
        Ok(bits(best).map(|i| self.vertices[i]).collect())
    }

    /// Exact chromatic number: backtracking colouring with budgets starting
    /// at the clique number.
    pub fn chromatic_number(&self) -> Result<u32> {
        self.chromatic_number_within(limits::GRAPH_EXACT)
    }

    pub fn chromatic_number_within(&self, limit: u32) -> Result<u32> {
        let omega = self.clique_number_within(limit)?;
        let n = self.vertex_count();
        // colour high-degree vertices first
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| core::cmp::Reverse(self.neighbor_ids(i).count()));
        let mut colours = vec![u32::MAX; n];
        let mut budget = omega.max(1);
        loop {
            if self.colour(&order, 0, budget, 0, &mut colours) {
                return Ok(budget);
            }
            budget += 1;
        }
    }

    fn colour(&self, order: &[usize], pos: usize, budget: u32, used: u32, colours: &mut [u32]) -> bool {
        let Some(&v) = order.get(pos) else {
            return true;
        };
        // a fresh colour is interchangeable with any other fresh colour
        for c in 0..budget.min(used + 1) {
            if self.neighbor_ids(v).all(|w| colours[w] != c) {
                colours[v] = c;
                if self.colour(order, pos + 1, budget, used.max(c + 1), colours) {
                    return true;
                }
                colours[v] = u32::MAX;
            }
        }
        false
    }

    /// Checks that `colours` (indexed by vertex id) is a proper colouring.
    pub fn is_proper_colouring(&self, colours: &[u32]) -> bool {
        colours.len() == self.vertex_count()
            && self.edges().iter().all(|&(u, v)| {
                let (i, j) = (self.vertex_id(u).unwrap_or(0), self.vertex_id(v).unwrap_or(0));
                colours[i] != colours[j]
            })
    }

    pub fn invariants(&self) -> Result<GraphInvariants> {
        self.invariants_within(limits::GRAPH_EXACT)
    }

    pub fn invariants_within(&self, limit: u32) -> Result<GraphInvariants> {
        Ok(GraphInvariants {
            diameter: self.diameter(),
            girth: self.girth(),
            clique_number: self.clique_number_within(limit)?,
            chromatic_number: self.chromatic_number_within(limit)?,
        })
    }
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn expand_clique(masks: &[u128], current: u128, mut candidates: u128, best: &mut u128) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    while candidates != 0 {
        if current.count_ones() + candidates.count_ones() <= best.count_ones() {
            return;
        }
        // highest id first: `m` and the large values carry the most edges
        let v = 127 - candidates.leading_zeros() as usize;
        expand_clique(masks, current | (1 << v), candidates & masks[v], best);
        candidates &= !(1 << v);
    }
    if current.count_ones() > best.count_ones() {
        *best = current;
    }
}

/// `⌊k/2⌋ + 1`, the guaranteed lower bound on clique and chromatic numbers.
pub fn clique_lower_bound(k: u32) -> u32 {
    k / 2 + 1
}

/// The explicit clique `{k - ⌊k/2⌋, …, k, m}`.
pub fn explicit_clique(k: u32) -> Vec<Elem> {
    (k - k / 2..=k).map(Elem::Fin).chain(core::iter::once(Elem::Many)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ig(k: u32) -> IndigenousGraph {
        IndigenousGraph::new(k).unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(ig(1).edges(), [(Elem::ONE, Elem::Many)]);
        assert_eq!(ig(2).edges(), [(Elem::Fin(1), Elem::Many), (Elem::Fin(2), Elem::Many)]);
        let g = ig(4);
        assert!(g.is_clique(&[Elem::Fin(2), Elem::Fin(3), Elem::Fin(4), Elem::Many]));
        assert_eq!(g.neighbors(Elem::ONE), [Elem::Many]);
        assert_eq!(g.edge_list(), "1 m\n2 3\n2 4\n2 m\n3 4\n3 m\n4 m\n");
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(ig(1).diameter(), Length::Finite(1));
        assert_eq!(ig(2).diameter(), Length::Finite(2));
        assert_eq!(ig(10).diameter(), Length::Finite(2));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(ig(3).girth(), Length::Finite(3));
        assert_eq!(ig(2).girth(), Length::Infinite);
        assert_eq!(ig(1).girth(), Length::Infinite);
    }

    #[test]
    fn clique_examples() {
        assert_eq!(ig(4).clique_number(), Ok(4));
        assert_eq!(ig(2).clique_number(), Ok(2));
        assert!(ig(10).clique_number().unwrap() >= 6);
        assert!(matches!(ig(25).clique_number(), Err(crate::Error::BoundExceeded { .. })));
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(ig(1).chromatic_number(), Ok(2));
        assert!(ig(4).chromatic_number().unwrap() >= 4);
        assert!(ig(7).chromatic_number().unwrap() >= 4);
    }

    #[test]
    fn disconnected_and_acyclic_lengths_order_last() {
        assert!(Length::Finite(u32::MAX) < Length::Infinite);
    }
}
