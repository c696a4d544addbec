use crate::graph::{Graph, VertexSet};

/// A clique / independent-set partition of a split graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

/// Split recognition from the degree sequence (Hammer and Simeone).
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (0..n).take_while(|&i| deg[i] >= i).count();
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut clique = order[..m].to_vec();
    let mut independent = order[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    debug_assert!(is_split_partition(g, &clique, &independent));
    Some(SplitPartition {
        clique,
        independent,
    })
}

pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_some()
}

fn is_split_partition(g: &Graph, clique: &[usize], independent: &[usize]) -> bool {
    clique
        .iter()
        .all(|&u| clique.iter().all(|&v| u == v || g.has_edge(u, v)))
        && independent
            .iter()
            .all(|&u| independent.iter().all(|&v| !g.has_edge(u, v)))
}

/// Maximum cardinality search; returns the visit order.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        numbered[v] = true;
        visit.push(v);
        for u in g.neighbors(v) {
            if !numbered[u] {
                weight[u] += 1;
            }
        }
    }
    visit
}

/// A perfect elimination ordering, if the graph is chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut peo = maximum_cardinality_search(g);
    peo.reverse();
    is_perfect_elimination_ordering(g, &peo).then_some(peo)
}

pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.order();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later = VertexSet::from_vertices(n, g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]));
        let Some(parent) = later.iter().min_by_key(|&u| pos[u]) else {
            continue;
        };
        let mut rest = later.clone();
        rest.remove(parent);
        if !rest.is_subset(g.neighbors(parent)) {
            return false;
        }
    }
    true
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}
