//! Fixed small patterns and subset scans over them.

use crate::graph::Graph;

use super::holes::is_hole_free;

/// The square 0-1-2-3 with roof vertex 4 on the edge 0-1.
pub fn house() -> Graph {
    Graph::from_edges_unchecked(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)])
}

/// P4 0-1-2-3 plus vertex 4 adjacent to all of it.
pub fn gem() -> Graph {
    Graph::from_edges_unchecked(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
}

/// C6 0..5 with the chord 0-3, giving two 4-faces.
pub fn domino() -> Graph {
    Graph::from_edges_unchecked(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `true`.
pub fn any_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Induced subgraph on at most eight vertices as adjacency bytes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    n: usize,
    adj: [u8; 8],
}

impl SmallGraph {
    pub fn induced(g: &Graph, vs: &[usize]) -> SmallGraph {
        assert!(vs.len() <= 8, "SmallGraph holds at most eight vertices");
        let mut adj = [0u8; 8];
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate() {
                if g.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        SmallGraph { n: vs.len(), adj }
    }

    pub fn from_graph(g: &Graph) -> SmallGraph {
        SmallGraph::induced(g, &(0..g.order()).collect::<Vec<_>>())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn degree_within(&self, v: usize, mask: u8) -> u32 {
        (self.adj[v] & mask).count_ones()
    }

    fn size(&self) -> u32 {
        (0..self.n).map(|v| self.adj[v].count_ones()).sum::<u32>() / 2
    }

    fn sorted_degrees(&self) -> [u32; 8] {
        let mut d = [0u32; 8];
        for (v, slot) in d.iter_mut().enumerate().take(self.n) {
            *slot = self.adj[v].count_ones();
        }
        d[..self.n].sort_unstable();
        d
    }

    /// Shape of the subgraph induced by a 4-vertex `mask`.
    fn quad(&self, mask: u8) -> Quad {
        let mut degs = [0u32; 4];
        let mut k = 0;
        for v in 0..self.n {
            if mask >> v & 1 == 1 {
                degs[k] = self.degree_within(v, mask);
                k += 1;
            }
        }
        degs.sort_unstable();
        match degs {
            [1, 1, 2, 2] => Quad::P4,
            [1, 1, 1, 1] => Quad::TwoK2,
            [2, 2, 2, 2] => Quad::C4,
            _ => Quad::Other,
        }
    }

    fn quads(&self) -> impl Iterator<Item = Quad> + '_ {
        let full: u16 = (1 << self.n) - 1;
        (0..=full)
            .filter(|m| m.count_ones() == 4)
            .map(|m| self.quad(m as u8))
    }

    pub fn isomorphic(&self, other: &SmallGraph) -> bool {
        if self.n != other.n
            || self.size() != other.size()
            || self.sorted_degrees() != other.sorted_degrees()
        {
            return false;
        }
        let mut map = [0usize; 8];
        self.extend(other, 0, &mut map, 0)
    }

    fn extend(&self, other: &SmallGraph, v: usize, map: &mut [usize; 8], used: u8) -> bool {
        if v == self.n {
            return true;
        }
        for w in 0..other.n {
            if used >> w & 1 == 1 || self.adj[v].count_ones() != other.adj[w].count_ones() {
                continue;
            }
            if (0..v).any(|u| (self.adj[v] >> u & 1) != (other.adj[w] >> map[u] & 1)) {
                continue;
            }
            map[v] = w;
            if self.extend(other, v + 1, map, used | 1 << w) {
                return true;
            }
        }
        false
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Quad {
    P4,
    TwoK2,
    C4,
    Other,
}

/// Exact isomorphism test for graphs on at most eight vertices.
pub fn small_isomorphic(a: &Graph, b: &Graph) -> bool {
    SmallGraph::from_graph(a).isomorphic(&SmallGraph::from_graph(b))
}

/// Vertices of some induced copy of `pattern` (at most eight vertices).
pub fn find_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let p = SmallGraph::from_graph(pattern);
    let mut found = None;
    any_subset(g.order(), p.order(), |vs| {
        if SmallGraph::induced(g, vs).isomorphic(&p) {
            found = Some(vs.to_vec());
            true
        } else {
            false
        }
    });
    found
}

pub fn contains_induced(g: &Graph, pattern: &Graph) -> bool {
    find_induced(g, pattern).is_some()
}

pub fn is_distance_hereditary(g: &Graph) -> bool {
    is_hole_free(g)
        && ![house(), gem(), domino()]
            .iter()
            .any(|p| contains_induced(g, p))
}

/// Number of 4-vertex subsets inducing a P4.
pub fn count_p4(g: &Graph) -> usize {
    let mut count = 0;
    any_subset(g.order(), 4, |vs| {
        if SmallGraph::induced(g, vs).quad(0b1111) == Quad::P4 {
            count += 1;
        }
        false
    });
    count
}

fn laden_violation(sub: &SmallGraph) -> bool {
    let mut p4s = 0;
    let mut bad = false;
    for q in sub.quads() {
        match q {
            Quad::P4 => p4s += 1,
            Quad::TwoK2 | Quad::C4 => bad = true,
            Quad::Other => {}
        }
    }
    p4s > 2 && bad
}

/// Every induced subgraph on at most six vertices with more than two induced
/// P4s is {2K2, C4}-free. Subsets of four or fewer vertices hold at most one
/// P4, so only 5- and 6-subsets are scanned.
pub fn is_extended_p4_laden(g: &Graph) -> bool {
    ![5, 6].into_iter().any(|k| {
        any_subset(g.order(), k, |vs| {
            laden_violation(&SmallGraph::induced(g, vs))
        })
    })
}
