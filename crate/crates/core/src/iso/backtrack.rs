use super::refine::color_refinement;
use super::IsoMapping;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`backtracking_isomorphic`].
pub const BACKTRACK_HARD_LIMIT: usize = 64;

/// Exact isomorphism search: refined colors restrict candidates, then
/// backtracking with adjacency checks against already placed vertices.
pub fn backtracking_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<IsoMapping>> {
    backtracking_isomorphic_with_limit(g1, g2, BACKTRACK_HARD_LIMIT)
}

pub fn backtracking_isomorphic_with_limit(
    g1: &Graph,
    g2: &Graph,
    limit: usize,
) -> Result<Option<IsoMapping>> {
    let n = g1.order();
    if n.max(g2.order()) > limit {
        return Err(Error::ResourceLimit {
            what: "backtracking isomorphism order",
            limit,
            actual: n.max(g2.order()),
        });
    }
    if n != g2.order() || g1.size() != g2.size() {
        return Ok(None);
    }
    let r1 = color_refinement(g1);
    let r2 = color_refinement(g2);
    if r1.history != r2.history {
        return Ok(None);
    }
    let mut class_size = vec![0usize; r1.classes.max(1)];
    for &c in &r1.colors {
        class_size[c as usize] += 1;
    }
    let order = search_order(g1, &r1.colors, &class_size);
    let mut state = Search {
        g1,
        g2,
        c1: &r1.colors,
        c2: &r2.colors,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if !state.extend(0) {
        return Ok(None);
    }
    let m = IsoMapping::new(state.map).expect("search produces a bijection");
    debug_assert!(m.verify(g1, g2));
    Ok(Some(m))
}

/// Greedy order: most already-placed neighbors first, then the rarest color.
fn search_order(g: &Graph, colors: &[u32], class_size: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                (
                    std::cmp::Reverse(links[v]),
                    class_size[colors[v] as usize],
                    v,
                )
            })
            .unwrap();
        placed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            links[u] += 1;
        }
    }
    order
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    c1: &'a [u32],
    c2: &'a [u32],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        for w in 0..self.g2.order() {
            if self.used[w] || self.c2[w] != self.c1[v] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.g1.has_edge(u, v) == self.g2.has_edge(self.map[u], w));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
        }
        self.map[v] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use crate::recognize::small_isomorphic;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn iso(a: &Graph, b: &Graph) -> bool {
        backtracking_isomorphic(a, b).unwrap().is_some()
    }

    #[test]
    fn examples() {
        let c5 = Graph::cycle(5);
        let m = backtracking_isomorphic(&c5, &c5.complement())
            .unwrap()
            .unwrap();
        assert!(m.verify(&c5, &c5.complement()));
        let star = Graph::from_edges_unchecked(4, [(0, 1), (0, 2), (0, 3)]);
        assert!(!iso(&Graph::path(4), &star));
        let k3k1 = Graph::complete(3).disjoint_union(&Graph::empty(1));
        assert!(!iso(&Graph::path(4), &k3k1));
        assert!(iso(&Graph::empty(0), &Graph::empty(0)));
        // Regular pair that refinement cannot split: C6 vs 2K3.
        assert!(!iso(
            &Graph::cycle(6),
            &Graph::cycle(3).disjoint_union(&Graph::cycle(3))
        ));
    }

    #[test]
    fn limit_is_enforced() {
        let g = Graph::empty(10);
        let e = backtracking_isomorphic_with_limit(&g, &g, 8).unwrap_err();
        assert!(matches!(
            e,
            Error::ResourceLimit {
                limit: 8,
                actual: 10,
                ..
            }
        ));
    }

    proptest! {
        #[test]
        fn agrees_with_small_oracle(a in arb_graph(7), b in arb_graph(7)) {
            let found = backtracking_isomorphic(&a, &b).unwrap();
            if let Some(m) = &found {
                prop_assert!(m.verify(&a, &b));
            }
            prop_assert_eq!(found.is_some(), small_isomorphic(&a, &b));
        }

        #[test]
        fn finds_relabelings(g in arb_graph(16), seed in 0u64..1000) {
            let mut perm: Vec<usize> = (0..g.order()).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let h = g.permute(&perm);
            let m = backtracking_isomorphic(&g, &h).unwrap().unwrap();
            prop_assert!(m.verify(&g, &h));
        }
    }
}
