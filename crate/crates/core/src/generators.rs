//! Instance builders.

use std::ops::Range;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumerate::connected_distance_hereditary_up_to;
use crate::error::{Error, Result};
use crate::graph::io::to_graph6;
use crate::graph::{Bipartition, Graph, MatchingCut, VertexSet};
use crate::iso::IsoMapping;
use crate::par::filter_collect;
use crate::recognize::is_split;
use crate::solver::{
    brute_force, matches_prism, DecompositionCertificate, Method, SolverConfig, BRUTE_HARD_LIMIT,
};

/// `h` on `0..k`, its complement on `k..2k`, and the matching `i ~ k + i`.
pub fn complementary_prism(h: &Graph) -> Graph {
    let k = h.order();
    matched_complement(h, &IsoMapping::identity(k)).expect("identity is a permutation")
}

/// `h` on `0..k`, its complement on `k..2k`, and the matching `i ~ k + pi(i)`.
/// Fails unless `pi` is a permutation of `0..k`.
pub fn matched_complement(h: &Graph, pi: &IsoMapping) -> Result<Graph> {
    let k = h.order();
    if pi.len() != k {
        return Err(Error::precondition(format!(
            "permutation has length {} but the graph has order {k}",
            pi.len()
        )));
    }
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    edges.extend(h.complement().edges().map(|(u, v)| (u + k, v + k)));
    edges.extend((0..k).map(|i| (i, k + pi.apply(i))));
    Graph::from_edges(2 * k, edges)
}

/// Builds [`matched_complement`] from a raw image vector.
pub fn matched_complement_from_slice(h: &Graph, pi: &[usize]) -> Result<Graph> {
    let pi = IsoMapping::new(pi.to_vec())
        .ok_or_else(|| Error::precondition(format!("{pi:?} is not a permutation")))?;
    matched_complement(h, &pi)
}

/// The certificate for [`matched_complement`]: sides `0..k` and `k..2k` with
/// the isomorphism `i -> k + i`.
pub fn matched_complement_certificate(
    h: &Graph,
    pi: &IsoMapping,
) -> Result<DecompositionCertificate> {
    let g = matched_complement(h, pi)?;
    let k = h.order();
    let p = Bipartition::from_left(VertexSet::from_vertices(2 * k, 0..k));
    let cut = g
        .perfect_matching_cut(&p)
        .expect("construction has a perfect matching cut");
    let local: Vec<usize> = (0..k).collect();
    Ok(DecompositionCertificate::from_parts(
        &p,
        &cut,
        &local,
        Method::Construction,
    ))
}

/// A uniformly random permutation of `0..k` from `seed`.
pub fn seeded_permutation(k: usize, seed: u64) -> IsoMapping {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_permutation(k, &mut rng)
}

fn random_permutation(k: usize, rng: &mut ChaCha8Rng) -> IsoMapping {
    let mut image: Vec<usize> = (0..k).collect();
    image.shuffle(rng);
    IsoMapping::new(image).expect("shuffle of 0..k")
}

/// The complementary prism of `K_n`: an `n`-clique with one pendant per vertex.
pub fn prism_of_clique(n: usize) -> Graph {
    complementary_prism(&Graph::complete(n))
}

/// The reduction instance built from two split graphs `a` and `b` of order `n`.
///
/// Vertex blocks: `a` on `A = 0..n`, a clique `K = n..2n`, the complement of
/// `b` on `B̄ = 2n..3n`, and an independent set `I = 3n..4n`. `A` is completely
/// joined to `K`; `A`–`I` and `K`–`B̄` carry seeded random perfect matchings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub a: Graph,
    pub b: Graph,
    pub g: Graph,
    pub seed: u64,
    /// `(A vertex, I vertex)` pairs, labelled in `g`.
    pub a_i_matching: Vec<(usize, usize)>,
    /// `(K vertex, B̄ vertex)` pairs, labelled in `g`.
    pub k_b_matching: Vec<(usize, usize)>,
    /// The two blocks that are completely joined: `A` and `K`.
    pub join: (Range<usize>, Range<usize>),
}

#[derive(Serialize)]
struct GadgetProvenance<'a> {
    n: usize,
    seed: u64,
    a: String,
    b: String,
    blocks: Blocks,
    a_i_matching: &'a [(usize, usize)],
    k_b_matching: &'a [(usize, usize)],
    join: [[usize; 2]; 2],
}

#[derive(Serialize)]
struct Blocks {
    a: [usize; 2],
    k: [usize; 2],
    b_complement: [usize; 2],
    i: [usize; 2],
}

impl GadgetInstance {
    pub fn n(&self) -> usize {
        self.a.order()
    }

    pub fn block_a(&self) -> Range<usize> {
        0..self.n()
    }

    pub fn block_k(&self) -> Range<usize> {
        self.n()..2 * self.n()
    }

    pub fn block_b_complement(&self) -> Range<usize> {
        2 * self.n()..3 * self.n()
    }

    pub fn block_i(&self) -> Range<usize> {
        3 * self.n()..4 * self.n()
    }

    /// Provenance record: inputs in graph6, seed, blocks and matchings.
    pub fn provenance_json(&self) -> String {
        let r = |x: Range<usize>| [x.start, x.end];
        let rec = GadgetProvenance {
            n: self.n(),
            seed: self.seed,
            a: to_graph6(&self.a),
            b: to_graph6(&self.b),
            blocks: Blocks {
                a: r(self.block_a()),
                k: r(self.block_k()),
                b_complement: r(self.block_b_complement()),
                i: r(self.block_i()),
            },
            a_i_matching: &self.a_i_matching,
            k_b_matching: &self.k_b_matching,
            join: [r(self.join.0.clone()), r(self.join.1.clone())],
        };
        serde_json::to_string_pretty(&rec).expect("provenance serializes")
    }

    /// The decomposition `(A ∪ K, B̄ ∪ I)` when `iso` maps `a` onto `b`.
    pub fn certificate_from(&self, iso: &IsoMapping) -> Option<DecompositionCertificate> {
        let n = self.n();
        let order = 4 * n;
        let p = Bipartition::from_left(VertexSet::from_vertices(order, 0..2 * n));
        let cut: MatchingCut = self.g.perfect_matching_cut(&p)?;
        let right = p.right().to_vec();
        // Right side, sorted: B̄ then I. K vertex n + j goes to I vertex 3n + j
        // (complement of an independent set is a clique), a vertex i to B̄ vertex
        // 2n + iso(i).
        let position = |v: usize| right.binary_search(&v).expect("right vertex");
        let local: Vec<usize> = (0..n)
            .map(|i| position(2 * n + iso.apply(i)))
            .chain((0..n).map(|j| position(3 * n + j)))
            .collect();
        let c = DecompositionCertificate::from_parts(&p, &cut, &local, Method::Construction);
        c.is_valid(&self.g).then_some(c)
    }
}

/// Builds the reduction instance for `a` and `b`.
///
/// Preconditions (each failure names the predicate): equal orders `n ≥ 3`,
/// both graphs connected split graphs without isolated vertices.
pub fn gi_gadget(a: &Graph, b: &Graph, seed: u64) -> Result<GadgetInstance> {
    let n = a.order();
    if b.order() != n {
        return Err(Error::precondition(format!(
            "orders differ: a has {n} vertices, b has {}",
            b.order()
        )));
    }
    if n < 3 {
        return Err(Error::precondition(format!("order {n} is below 3")));
    }
    for (name, x) in [("a", a), ("b", b)] {
        if !is_split(x) {
            return Err(Error::precondition(format!("{name} is not a split graph")));
        }
        if !x.is_connected() {
            return Err(Error::precondition(format!("{name} is not connected")));
        }
        if x.has_isolated_vertex() {
            return Err(Error::precondition(format!(
                "{name} has an isolated vertex"
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma = random_permutation(n, &mut rng);
    let tau = random_permutation(n, &mut rng);
    let a_i_matching: Vec<(usize, usize)> = (0..n).map(|i| (i, 3 * n + sigma.apply(i))).collect();
    let k_b_matching: Vec<(usize, usize)> = (0..n).map(|j| (n + j, 2 * n + tau.apply(j))).collect();

    let mut edges: Vec<(usize, usize)> = a.edges().collect();
    edges.extend((n..2 * n).flat_map(|u| (u + 1..2 * n).map(move |v| (u, v))));
    edges.extend(b.complement().edges().map(|(u, v)| (2 * n + u, 2 * n + v)));
    edges.extend((0..n).flat_map(|u| (n..2 * n).map(move |v| (u, v))));
    edges.extend(a_i_matching.iter().copied());
    edges.extend(k_b_matching.iter().copied());
    let g = Graph::from_edges(4 * n, edges)?;
    Ok(GadgetInstance {
        a: a.clone(),
        b: b.clone(),
        g,
        seed,
        a_i_matching,
        k_b_matching,
        join: (0..n, n..2 * n),
    })
}

/// A connected split graph without isolated vertices, deterministic in
/// `seed`. The clique part has between 1 and `n` vertices; every independent
/// vertex gets a random nonempty set of clique neighbors. Fails for `n < 2`.
pub fn random_split_graph(n: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::precondition(format!(
            "order {n}: a connected graph without isolated vertices needs at least 2 vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = rng.gen_range(1..=n);
    let mut edges: Vec<(usize, usize)> = (0..c)
        .flat_map(|u| (u + 1..c).map(move |v| (u, v)))
        .collect();
    for w in c..n {
        let mut nbrs: Vec<usize> = (0..c).filter(|_| rng.gen_bool(0.5)).collect();
        if nbrs.is_empty() {
            nbrs.push(rng.gen_range(0..c));
        }
        edges.extend(nbrs.into_iter().map(|u| (u, w)));
    }
    let g = Graph::from_edges(n, edges)?;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    Ok(g.permute(&perm))
}

/// Largest order accepted by [`rho_candidates`].
pub const RHO_ORDER_LIMIT: usize = 12;

/// Connected distance-hereditary graphs of even order up to `max_order` that
/// exhaustive search accepts and that are not a prism of a clique, one per
/// isomorphism class, by increasing order.
pub fn rho_candidates(max_order: usize, cfg: &SolverConfig) -> Result<Vec<Graph>> {
    if max_order > RHO_ORDER_LIMIT {
        return Err(Error::ResourceLimit {
            what: "rho derivation order",
            limit: RHO_ORDER_LIMIT,
            actual: max_order,
        });
    }
    let brute = cfg.clone().with_brute_limit(BRUTE_HARD_LIMIT);
    let levels = connected_distance_hereditary_up_to(max_order, cfg.parallel);
    let mut out = Vec::new();
    for level in levels.into_iter().skip(2).step_by(2) {
        let found = filter_collect(level, cfg.parallel, |g| {
            matches_prism(g).is_none()
                && brute_force(g, &brute.clone().with_parallel(false))
                    .map(|v| v.is_yes())
                    .unwrap_or(false)
        });
        out.extend(found);
    }
    Ok(out)
}
