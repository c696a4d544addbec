//! Isomorphism tests: cotree codes for cographs, the clique-type extension for
//! cluster graphs with a small apex set, and a refined backtracking search for
//! small general graphs.

mod backtrack;
mod cluster_apex;
mod code;
mod refine;

pub use backtrack::{
    backtracking_isomorphic, backtracking_isomorphic_with_limit, BACKTRACK_HARD_LIMIT,
};
pub use cluster_apex::{
    clique_type_signatures, cluster_apex_isomorphism, cluster_apex_isomorphism_any,
    CliqueTypeSignature,
};
pub use code::{cograph_canonical_code, cograph_isomorphic, cotree_canonical_code, CanonicalCode};
pub use refine::{color_refinement, graph_invariant, Refinement};

use crate::graph::Graph;

/// Vertex bijection `i -> image[i]` from one graph onto another.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsoMapping {
    image: Vec<usize>,
}

impl IsoMapping {
    /// `image` must be a permutation of `0..image.len()`.
    pub fn new(image: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &w in &image {
            if w >= image.len() || std::mem::replace(&mut seen[w], true) {
                return None;
            }
        }
        Some(IsoMapping { image })
    }

    pub fn identity(n: usize) -> Self {
        IsoMapping {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> IsoMapping {
        let mut inv = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        IsoMapping { image: inv }
    }

    /// First pair `(u, v)` of `g1` whose adjacency differs from that of its
    /// image in `g2`. With `complement` set, adjacency must instead flip.
    pub fn first_violation(
        &self,
        g1: &Graph,
        g2: &Graph,
        complement: bool,
    ) -> Option<(usize, usize)> {
        let n = g1.order();
        if n != g2.order() || n != self.image.len() {
            return Some((0, 0));
        }
        for u in 0..n {
            for v in u + 1..n {
                if g1.has_edge(u, v) != (g2.has_edge(self.image[u], self.image[v]) ^ complement) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Adjacency-preserving from `g1` onto `g2`.
    pub fn verify(&self, g1: &Graph, g2: &Graph) -> bool {
        self.first_violation(g1, g2, false).is_none()
    }

    /// Maps `g1` onto the complement of `g2`.
    pub fn verify_complement(&self, g1: &Graph, g2: &Graph) -> bool {
        self.first_violation(g1, g2, true).is_none()
    }
}
