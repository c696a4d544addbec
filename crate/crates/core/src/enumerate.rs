//! Exhaustive enumeration of small graphs up to isomorphism.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::iso::{backtracking_isomorphic, graph_invariant};
use crate::par::map_collect;

type Invariant = (usize, usize, u64);

/// Isomorphism classes, bucketed by a refinement invariant and resolved by
/// backtracking inside each bucket. Keeps the first representative inserted.
#[derive(Clone, Debug, Default)]
pub struct IsoClassSet {
    buckets: HashMap<Invariant, Vec<usize>>,
    graphs: Vec<Graph>,
}

impl IsoClassSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `g` unless an isomorphic graph is present; returns whether it was added.
    pub fn insert(&mut self, g: Graph) -> bool {
        let key = graph_invariant(&g);
        self.insert_keyed(key, g)
    }

    fn insert_keyed(&mut self, key: Invariant, g: Graph) -> bool {
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&i| isomorphic(&self.graphs[i], &g)) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        true
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.find(g).is_some()
    }

    /// The stored representative isomorphic to `g`.
    pub fn find(&self, g: &Graph) -> Option<&Graph> {
        let bucket = self.buckets.get(&graph_invariant(g))?;
        bucket
            .iter()
            .map(|&i| &self.graphs[i])
            .find(|h| isomorphic(h, g))
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// Representatives in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = &Graph> {
        self.graphs.iter()
    }

    pub fn into_vec(self) -> Vec<Graph> {
        self.graphs
    }

    /// Inserts a batch in order, computing invariants in parallel.
    pub fn extend_from(&mut self, batch: Vec<Graph>, parallel: bool) {
        let keys = map_collect(&batch, parallel, graph_invariant);
        for (key, g) in keys.into_iter().zip(batch) {
            self.insert_keyed(key, g);
        }
    }
}

fn isomorphic(a: &Graph, b: &Graph) -> bool {
    matches!(backtracking_isomorphic(a, b), Ok(Some(_)))
}

/// Largest order accepted by [`all_graphs`].
pub const ALL_GRAPHS_LIMIT: usize = 9;

/// One graph per isomorphism class of order `n`, built by adding a vertex
/// with every possible neighborhood to each class of order `n - 1`.
///
/// # Panics
/// If `n` exceeds [`ALL_GRAPHS_LIMIT`].
pub fn all_graphs(n: usize, parallel: bool) -> Vec<Graph> {
    assert!(n <= ALL_GRAPHS_LIMIT, "all_graphs({n}) is too large");
    let mut level = vec![Graph::empty(0)];
    for k in 0..n {
        let batch: Vec<Graph> = level
            .iter()
            .flat_map(|g| (0u32..1 << k).map(move |mask| add_vertex(g, |v| mask >> v & 1 == 1)))
            .collect();
        let mut set = IsoClassSet::new();
        set.extend_from(batch, parallel);
        level = set.into_vec();
    }
    level
}

/// `g` plus a vertex adjacent to every `v` with `adjacent(v)`.
fn add_vertex(g: &Graph, adjacent: impl Fn(usize) -> bool) -> Graph {
    let n = g.order();
    let edges = g
        .edges()
        .chain((0..n).filter(|&v| adjacent(v)).map(|v| (v, n)));
    Graph::from_edges_unchecked(n + 1, edges.collect::<Vec<_>>())
}

/// Connected distance-hereditary graphs of order `n`, one per isomorphism
/// class, grown from `K_1` by pendant, true-twin and false-twin extensions
/// (a false twin of the single vertex of `K_1` is discarded as disconnected).
pub fn connected_distance_hereditary(n: usize, parallel: bool) -> Vec<Graph> {
    connected_distance_hereditary_up_to(n, parallel)
        .pop()
        .unwrap_or_default()
}

/// `result[k]` holds the connected distance-hereditary classes of order `k`.
pub fn connected_distance_hereditary_up_to(n: usize, parallel: bool) -> Vec<Vec<Graph>> {
    let mut out = vec![Vec::new()];
    if n == 0 {
        return out;
    }
    out.push(vec![Graph::empty(1)]);
    for k in 1..n {
        let batch: Vec<Graph> = out[k]
            .iter()
            .flat_map(|g| (0..k).flat_map(move |v| extensions(g, v)))
            .filter(Graph::is_connected)
            .collect();
        let mut set = IsoClassSet::new();
        set.extend_from(batch, parallel);
        out.push(set.into_vec());
    }
    out
}

fn extensions(g: &Graph, v: usize) -> [Graph; 3] {
    let pendant = add_vertex(g, |u| u == v);
    let false_twin = add_vertex(g, |u| g.has_edge(u, v));
    let true_twin = add_vertex(g, |u| u == v || g.has_edge(u, v));
    [pendant, false_twin, true_twin]
}
