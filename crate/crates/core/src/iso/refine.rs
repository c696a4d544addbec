use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::graph::Graph;

/// Stable coloring from 1-dimensional Weisfeiler-Leman refinement.
///
/// Colors are ranks of sorted signatures, so they do not depend on vertex
/// labels: isomorphic graphs get equal `history` values and every isomorphism
/// maps each vertex to one of the same color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub colors: Vec<u32>,
    pub classes: usize,
    pub history: u64,
}

fn triangles_at(g: &Graph, v: usize) -> usize {
    let nv = g.neighbors(v);
    nv.iter()
        .map(|u| g.neighbors(u).intersection_len(nv))
        .sum::<usize>()
        / 2
}

fn rank<K: Ord + Clone + Hash>(keys: &[K], hasher: &mut DefaultHasher) -> (Vec<u32>, usize) {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    // The sorted key list with multiplicities is label-free.
    let mut sorted = keys.to_vec();
    sorted.sort();
    sorted.hash(hasher);
    let colors = keys
        .iter()
        .map(|k| distinct.binary_search(k).unwrap() as u32)
        .collect();
    (colors, distinct.len())
}

pub fn color_refinement(g: &Graph) -> Refinement {
    let n = g.order();
    let mut hasher = DefaultHasher::new();
    n.hash(&mut hasher);
    let initial: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), triangles_at(g, v))).collect();
    let (mut colors, mut classes) = rank(&initial, &mut hasher);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let (next, next_classes) = rank(&sigs, &mut hasher);
        colors = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    Refinement {
        colors,
        classes,
        history: hasher.finish(),
    }
}

/// Label-invariant fingerprint: equal for isomorphic graphs.
pub fn graph_invariant(g: &Graph) -> (usize, usize, u64) {
    (g.order(), g.size(), color_refinement(g).history)
}
