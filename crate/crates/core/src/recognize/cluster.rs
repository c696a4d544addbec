use crate::graph::{Graph, VertexSet};

/// Vertex set of size at most two whose deletion leaves a cluster graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClusterModulator {
    pub vertices: Vec<usize>,
}

impl ClusterModulator {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// An induced P3 `a-b-c` (center `b`) inside `within`.
pub fn find_p3_within(g: &Graph, within: &VertexSet) -> Option<[usize; 3]> {
    for b in within {
        let nb = g.neighbors(b).intersection(within);
        for a in &nb {
            let mut far = nb.difference(g.neighbors(a));
            far.remove(a);
            if let Some(c) = far.first() {
                return Some([a, b, c]);
            }
        }
    }
    None
}

pub fn find_p3(g: &Graph) -> Option<[usize; 3]> {
    find_p3_within(g, &g.vertices())
}

pub fn is_cluster(g: &Graph) -> bool {
    find_p3(g).is_none()
}

pub fn is_cluster_within(g: &Graph, within: &VertexSet) -> bool {
    find_p3_within(g, within).is_none()
}

pub fn is_complete_multipartite(g: &Graph) -> bool {
    is_cluster(&g.complement())
}

/// Maximal cliques of a cluster graph restricted to `within`, each sorted,
/// ordered by smallest vertex.
pub fn cluster_cliques(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    debug_assert!(is_cluster_within(g, within));
    g.components_within(within)
}

/// Depth-two search tree over P3 hits. Entries are sorted and deduplicated;
/// a branch stops as soon as its deletion set leaves a cluster graph, so the
/// list holds every inclusion-minimal modulator of size at most two.
pub fn cluster_modulators_up_to_2(g: &Graph) -> Vec<ClusterModulator> {
    let all = g.vertices();
    let Some(p) = find_p3_within(g, &all) else {
        return vec![ClusterModulator {
            vertices: Vec::new(),
        }];
    };
    let mut out = Vec::new();
    for w in p {
        let mut rest = all.clone();
        rest.remove(w);
        match find_p3_within(g, &rest) {
            None => out.push(vec![w]),
            Some(q) => {
                for w2 in q {
                    let mut rest2 = rest.clone();
                    rest2.remove(w2);
                    if is_cluster_within(g, &rest2) {
                        let mut pair = vec![w, w2];
                        pair.sort_unstable();
                        out.push(pair);
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out.into_iter()
        .map(|vertices| ClusterModulator { vertices })
        .collect()
}
