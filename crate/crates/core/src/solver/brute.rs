use super::{checked, trivial_verdict, DecompositionCertificate, Method, SolverConfig, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, VertexSet};
use crate::iso::backtracking_isomorphic;
use crate::par::find_first_map;

pub const BRUTE_DEFAULT_LIMIT: usize = 16;

/// Orders above this are refused even when a larger limit is configured.
pub const BRUTE_HARD_LIMIT: usize = 26;

/// Exhaustive search over balanced bipartitions with vertex 0 on the left.
/// Bipartitions are visited in increasing bitmask order and the first success
/// is returned.
pub fn brute_force(g: &Graph, cfg: &SolverConfig) -> Result<Verdict> {
    let n = g.order();
    if n % 2 == 1 {
        return Ok(Verdict::No(Method::OddOrder));
    }
    let limit = cfg.brute_limit.min(BRUTE_HARD_LIMIT);
    if n > limit {
        return Err(Error::ResourceLimit {
            what: "brute-force order",
            limit,
            actual: n,
        });
    }
    Ok(exhaustive(g, cfg.parallel))
}

/// [`brute_force`] without the configured limit, for internal use on inputs
/// known to be small.
pub(crate) fn exhaustive(g: &Graph, parallel: bool) -> Verdict {
    let n = g.order();
    assert!(n <= BRUTE_HARD_LIMIT, "exhaustive search on order {n}");
    if n == 0 {
        return trivial_verdict(g).expect("empty graph");
    }
    if n % 2 == 1 {
        return Verdict::No(Method::OddOrder);
    }
    let masks = balanced_masks(n);
    let found = find_first_map(&masks, parallel, |&mask| try_mask(g, mask));
    checked(
        g,
        found.map_or(Verdict::No(Method::BruteForce), Verdict::Yes),
    )
}

/// Half-size subsets of `0..n` containing 0, as bitmasks in increasing order.
fn balanced_masks(n: usize) -> Vec<u64> {
    let half = n / 2;
    let mut out = Vec::new();
    // Subsets of {1..n-1} of size half-1, by Gosper's hack.
    let k = half - 1;
    let m = n - 1;
    if k == 0 {
        return vec![1];
    }
    let mut x: u64 = (1 << k) - 1;
    while x < 1 << m {
        out.push(x << 1 | 1);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

fn try_mask(g: &Graph, mask: u64) -> Option<DecompositionCertificate> {
    let n = g.order();
    let left = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
    let p = Bipartition::from_left(left);
    let cut = g.perfect_matching_cut(&p)?;
    let gl = g.induced_subgraph(p.left()).ok()?.graph;
    let gr = g.induced_subgraph(p.right()).ok()?.graph;
    let m = backtracking_isomorphic(&gl, &gr.complement()).ok()??;
    Some(DecompositionCertificate::from_parts(
        &p,
        &cut,
        m.as_slice(),
        Method::BruteForce,
    ))
}
