//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use compsub::generators::prism_of_clique;
use compsub::graph::is_biconnected;
use compsub::iso::backtracking_isomorphic;
use compsub::recognize::{find_induced_cycle_at_least, is_cluster, is_hole_free};
use compsub::{DecompositionCertificate, Graph, Verdict};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && backtracking_isomorphic(a, b).unwrap().is_some()
}

pub fn is_clique_prism(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && g.order() > 0 && isomorphic(g, &prism_of_clique(g.order() / 2))
}

/// Random cograph: each new vertex is a true or false twin of an earlier one.
#[allow(clippy::needless_range_loop)]
pub fn random_cograph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut adj = vec![vec![false; n]; n];
    for w in 1..n {
        let v = rng.gen_range(0..w);
        let true_twin = rng.gen_bool(0.5);
        for u in 0..w {
            if adj[v][u] || (true_twin && u == v) {
                adj[u][w] = true;
                adj[w][u] = true;
                edges.push((u, w));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges_unchecked(n, edges).permute(&perm)
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_unchecked(n, edges)
}

/// An induced cycle of length at least `min_len` in `g` or its complement.
pub fn long_hole_or_antihole(g: &Graph, min_len: usize) -> Option<(bool, Vec<usize>)> {
    if let Some(c) = find_induced_cycle_at_least(g, min_len) {
        return Some((false, c));
    }
    find_induced_cycle_at_least(&g.complement(), min_len).map(|c| (true, c))
}

/// Collects every YES certificate seen and checks verification, the JSON
/// round trip and the biconnected-side property.
#[derive(Default)]
pub struct Audit {
    pub yes: usize,
    pub invalid: Vec<String>,
    pub property_checked: usize,
    pub property_violations: Vec<String>,
    /// Biconnected sides whose partner is not a cluster graph, on inputs with a hole.
    pub property_outside_scope: usize,
}

impl Audit {
    pub fn verdict(&mut self, g: &Graph, v: &Verdict) {
        if let Some(c) = v.certificate() {
            self.certificate(g, c);
        }
    }

    pub fn certificate(&mut self, g: &Graph, c: &DecompositionCertificate) {
        self.yes += 1;
        if let Err(e) = c.verify(g) {
            self.invalid
                .push(format!("{e} on {:?}", g.edges().collect::<Vec<_>>()));
            return;
        }
        match DecompositionCertificate::from_json(&c.to_json()) {
            Ok(back) if back == *c && back.is_valid(g) => {}
            Ok(_) => self
                .invalid
                .push("round trip changed the certificate".into()),
            Err(e) => self.invalid.push(format!("round trip failed: {e}")),
        }
        let hole_free = is_hole_free(g);
        for (first, second) in [(&c.left, &c.right), (&c.right, &c.left)] {
            let side = g.induced(first).graph;
            if side.order() < 5 || !is_biconnected(&side) {
                continue;
            }
            let other = g.induced(second).graph;
            let holds = is_cluster(&other);
            if hole_free {
                self.property_checked += 1;
                if !holds {
                    self.property_violations
                        .push(format!("{:?}", g.edges().collect::<Vec<_>>()));
                }
            } else if !holds {
                self.property_outside_scope += 1;
            }
        }
    }
}
