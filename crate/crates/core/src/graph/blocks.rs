use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Blocks and cutpoints of a connected graph, with their incidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCutTree {
    pub blocks: Vec<VertexSet>,
    pub cutpoints: VertexSet,
    /// `(cutpoint, block index)` pairs, sorted.
    pub incidence: Vec<(usize, usize)>,
}

impl BlockCutTree {
    /// Blocks that contain exactly one cutpoint (the leaves of the tree).
    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.incidence.iter().filter(|&&(_, bb)| bb == b).count() == 1)
            .collect()
    }
}

/// Hopcroft–Tarjan decomposition. Bridges come out as two-vertex blocks and a
/// single vertex is its own block.
pub fn blocks_and_cutpoints(g: &Graph) -> Result<BlockCutTree> {
    let n = g.order();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut blocks = Vec::new();
    let mut cutpoints = VertexSet::empty(n);
    if n == 1 {
        blocks.push(VertexSet::singleton(1, 0));
    }
    if n >= 2 {
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        // (vertex, parent, remaining neighbors)
        let mut stack: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        let root = 0;
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, g.neighbors(root).to_vec()));
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if let Some(w) = top.2.pop() {
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, g.neighbors(w).to_vec()));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            cutpoints.insert(p);
                        }
                        let mut block = VertexSet::empty(n);
                        while let Some((a, b)) = edge_stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children >= 2 {
            cutpoints.insert(root);
        }
    }
    blocks.sort_by_key(|b| b.to_vec());
    let mut incidence = Vec::new();
    for c in &cutpoints {
        for (i, b) in blocks.iter().enumerate() {
            if b.contains(c) {
                incidence.push((c, i));
            }
        }
    }
    incidence.sort_unstable();
    Ok(BlockCutTree {
        blocks,
        cutpoints,
        incidence,
    })
}

/// A single vertex and a single edge count as biconnected; otherwise the graph
/// must be connected with no cutpoint.
pub fn is_biconnected(g: &Graph) -> bool {
    match g.order() {
        0 | 1 => true,
        2 => g.has_edge(0, 1),
        _ => g.is_connected() && blocks_and_cutpoints(g).is_ok_and(|t| t.cutpoints.is_empty()),
    }
}
