//! Simple undirected graphs on dense vertex ids `0..n`, stored as bit rows.
//!
//! Graphs are immutable once built. Every derived graph (complement, induced
//! subgraph) is a fresh value, so graphs can be shared freely across threads.

mod blocks;
pub mod io;
mod set;

pub use blocks::{blocks_and_cutpoints, is_biconnected, BlockCutTree};
pub use set::{Iter, VertexSet};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges_unchecked(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_edges_unchecked(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Builds a graph from an edge list, rejecting self-loops and out-of-range
    /// endpoints. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but panics on malformed input. Meant for
    /// literals in code and tests.
    pub fn from_edges_unchecked<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(n, edges).expect("invalid edge list")
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert_ne!(u, v);
        if present {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        } else {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    /// Returns a copy with the edge `uv` toggled.
    pub fn with_edge_toggled(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.order() && v < self.order());
        let mut g = self.clone();
        let present = g.has_edge(u, v);
        g.set_edge(u, v, !present);
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Graph { adj }
    }

    /// The subgraph induced by `s`, relabeled `0..|s|` in increasing order of
    /// the original ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        if s.universe() > self.order() {
            if let Some(v) = s.iter().find(|&v| v >= self.order()) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order(),
                });
            }
        }
        Ok(self.induced(&s.iter().collect::<Vec<_>>()))
    }

    /// Induced subgraph on an explicit vertex list; the new id of `vertices[i]`
    /// is `i`. The list must be duplicate-free.
    pub fn induced(&self, vertices: &[usize]) -> InducedSubgraph {
        let k = vertices.len();
        let mut g = Graph::empty(k);
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        InducedSubgraph {
            graph: g,
            vertices: vertices.to_vec(),
        }
    }

    /// `N[s]`: `s` together with every vertex adjacent to a member of `s`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// `N(s)`: vertices outside `s` adjacent to a member of `s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        self.closed_neighborhood(s).difference(s)
    }

    /// Edges with exactly one endpoint in `p.left()`, as `(left, right)` pairs.
    pub fn cut_edges(&self, p: &Bipartition) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in p.left() {
            for v in self.adj[u].intersection(p.right()).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter()
            .map(|v| self.adj[v].intersection_len(s))
            .sum::<usize>()
            / 2
    }

    /// Every vertex has exactly one neighbor on the other side.
    pub fn is_perfect_matching_cut(&self, p: &Bipartition) -> bool {
        p.left()
            .iter()
            .all(|u| self.adj[u].intersection_len(p.right()) == 1)
            && p.right()
                .iter()
                .all(|v| self.adj[v].intersection_len(p.left()) == 1)
    }

    /// The crossing edges of `p` when they form a perfect matching.
    pub fn perfect_matching_cut(&self, p: &Bipartition) -> Option<MatchingCut> {
        if !self.is_perfect_matching_cut(p) {
            return None;
        }
        let edges = self.cut_edges(p);
        Some(MatchingCut::new(self.order(), edges).expect("perfect matching cut"))
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let comp = self.reach(start, within);
            remaining.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.order(), start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.order());
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.reach(0, &self.vertices()).len() == self.order()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(VertexSet::is_empty)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order() + other.order();
        let shift = self.order();
        Graph::from_edges_unchecked(
            n,
            self.edges()
                .chain(other.edges().map(|(u, v)| (u + shift, v + shift))),
        )
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        Graph::from_edges_unchecked(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph({}; {:?})",
            self.order(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// A subgraph together with the original id of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertices[new] = old`.
    pub vertices: Vec<usize>,
}

impl InducedSubgraph {
    /// New id of an original vertex, if it was kept.
    pub fn local(&self, original: usize) -> Option<usize> {
        self.vertices.iter().position(|&v| v == original)
    }
}

/// An ordered split of the vertex set into two disjoint covering parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    left: VertexSet,
    right: VertexSet,
}

impl Bipartition {
    pub fn new(left: VertexSet, right: VertexSet) -> Result<Self> {
        if left.universe() != right.universe() {
            return Err(Error::precondition("sides have different universes"));
        }
        if !left.is_disjoint(&right) {
            return Err(Error::precondition("sides overlap"));
        }
        if left.len() + right.len() != left.universe() {
            return Err(Error::precondition("sides do not cover the vertex set"));
        }
        Ok(Bipartition { left, right })
    }

    pub fn from_left(left: VertexSet) -> Self {
        let right = left.complement();
        Bipartition { left, right }
    }

    pub fn left(&self) -> &VertexSet {
        &self.left
    }

    pub fn right(&self) -> &VertexSet {
        &self.right
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A perfect matching between two sides, stored as partner arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingCut {
    order: usize,
    /// `(left, right)` pairs sorted by left endpoint.
    edges: Vec<(usize, usize)>,
    partner: Vec<Option<usize>>,
}

impl MatchingCut {
    /// Accepts `(left, right)` pairs. Fails if some vertex appears twice.
    pub fn new(order: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut partner = vec![None; order];
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v || partner[u].is_some() || partner[v].is_some() {
                return Err(Error::precondition(format!(
                    "pair ({u}, {v}) reuses a matched vertex"
                )));
            }
            partner[u] = Some(v);
            partner[v] = Some(u);
        }
        edges.sort_unstable();
        Ok(MatchingCut {
            order,
            edges,
            partner,
        })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.partner.get(v).copied().flatten()
    }

    /// Every vertex is covered.
    pub fn is_perfect(&self) -> bool {
        self.partner.iter().all(Option::is_some)
    }

    fn side_set(&self, side: Side) -> VertexSet {
        let pick = |&(l, r): &(usize, usize)| match side {
            Side::Left => l,
            Side::Right => r,
        };
        VertexSet::from_vertices(self.order, self.edges.iter().map(pick))
    }

    /// Matching partners of `x`, where `x` lies on `side`.
    pub fn corresponding_set(&self, x: &VertexSet, side: Side) -> Result<VertexSet> {
        let allowed = self.side_set(side);
        if let Some(v) = x.difference(&allowed).first() {
            return Err(Error::precondition(format!(
                "vertex {v} is not a matched vertex of the {side:?} side"
            )));
        }
        Ok(VertexSet::from_vertices(
            self.order,
            x.iter().map(|v| self.partner[v].expect("matched")),
        ))
    }
}
