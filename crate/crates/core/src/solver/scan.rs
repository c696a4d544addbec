//! Candidate bipartitions from small dominating sets.

use std::collections::HashSet;

use itertools::Itertools;

use crate::graph::{Bipartition, Graph, VertexSet};
use crate::par::map_collect;

/// Every bipartition `(N[A] \ B, rest)` with a perfect matching cut, where `A`
/// ranges over vertex sets of size `1..=max_k`, `|N[A]|` is half the order plus
/// `|A|`, and `B` is a `|A|`-subset of `N[A] \ A`. The first side returned is
/// the dominated one. Order: by `|A|`, then `A` lexicographically, then `B`
/// lexicographically; duplicates keep their first position.
///
/// The size test and the matching test are necessary for the side dominated
/// by `A` to be half of a decomposition whose cut matches `A` onto `B`, so no
/// decomposition of that shape is skipped.
pub(crate) fn dominated_candidates(g: &Graph, max_k: usize, parallel: bool) -> Vec<Bipartition> {
    let n = g.order();
    let half = n / 2;
    let seeds: Vec<Vec<usize>> = (1..=max_k.min(n))
        .flat_map(|k| (0..n).combinations(k))
        .collect();
    let per_seed = map_collect(&seeds, parallel, |a| {
        let k = a.len();
        let aset = VertexSet::from_vertices(n, a.iter().copied());
        let dom = g.closed_neighborhood(&aset);
        if dom.len() != half + k {
            return Vec::new();
        }
        let outside: Vec<usize> = dom.difference(&aset).to_vec();
        outside
            .into_iter()
            .combinations(k)
            .filter_map(|b| {
                let mut side = dom.clone();
                for v in b {
                    side.remove(v);
                }
                let p = Bipartition::from_left(side);
                g.is_perfect_matching_cut(&p).then_some(p)
            })
            .collect::<Vec<_>>()
    });
    let mut seen = HashSet::new();
    per_seed
        .into_iter()
        .flatten()
        .filter(|p| seen.insert(p.left().clone()))
        .collect()
}
