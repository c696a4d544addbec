use super::brute::exhaustive;
use super::cograph_case::solve_cograph_case;
use super::scan::dominated_candidates;
use super::{checked, trivial_verdict, DecompositionCertificate, Method, SolverConfig, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::iso::cluster_apex_isomorphism_any;
use crate::par::find_first_map;
use crate::recognize::{cluster_modulators_up_to_2, find_hole};

/// Decompositions where both `G[L]` and the complement of `G[R]` are within
/// two vertex deletions of a cluster graph.
///
/// Then the complement of one side is a complete multipartite graph plus at
/// most two vertices, so that side is dominated by at most four vertices `Y`
/// (or, when the multipartite part has a single part, the other side is a
/// clique plus at most two vertices and is dominated by three). The scan over
/// `Y` is label-free, so it reaches whichever side is dominated; each
/// candidate is then tested in both orientations, pairing minimal cluster
/// modulators of equal size and extending every bijection between them.
pub fn algorithm2(g: &Graph, cfg: &SolverConfig) -> Verdict {
    let n = g.order();
    if n % 2 == 1 {
        return Verdict::No(Method::OddOrder);
    }
    if n == 0 {
        return trivial_verdict(g).expect("empty graph");
    }
    let candidates = dominated_candidates(g, 4, cfg.parallel);
    let found = find_first_map(&candidates, cfg.parallel, |p| {
        // The dominated side is listed first; try it on the right, then left.
        let q = p.swapped();
        cluster_split(g, &q).or_else(|| cluster_split(g, p))
    });
    checked(g, found.map_or(Verdict::No(Method::HoleFree), Verdict::Yes))
}

/// Tests `G[L]` against the complement of `G[R]` through cluster modulators.
fn cluster_split(g: &Graph, p: &Bipartition) -> Option<DecompositionCertificate> {
    let g1 = g.induced_subgraph(p.left()).ok()?.graph;
    let h2 = g.induced_subgraph(p.right()).ok()?.graph.complement();
    if g1.size() != h2.size() {
        return None;
    }
    let mods1 = cluster_modulators_up_to_2(&g1);
    if mods1.is_empty() {
        return None;
    }
    let mods2 = cluster_modulators_up_to_2(&h2);
    for s1 in &mods1 {
        for s2 in mods2.iter().filter(|s2| s2.len() == s1.len()) {
            if let Ok(Some(m)) = cluster_apex_isomorphism_any(&g1, &h2, s1, s2) {
                let cut = g.perfect_matching_cut(p)?;
                return Some(DecompositionCertificate::from_parts(
                    p,
                    &cut,
                    m.as_slice(),
                    Method::HoleFree,
                ));
            }
        }
    }
    None
}

/// Exact on hole-free graphs.
///
/// If the connected side of a decomposition is biconnected, the other side is
/// a cluster graph, both sides are cographs, and the cograph scan finds it.
/// Otherwise two deletions leave a biconnected side, which puts both
/// `G[L]` and the complement of `G[R]` within two deletions of a cluster graph,
/// the case handled by [`algorithm2`]. Fails with a precondition error listing
/// a hole when the input has one.
pub fn solve_holefree(g: &Graph, cfg: &SolverConfig) -> Result<Verdict> {
    if let Some(hole) = find_hole(g) {
        return Err(Error::precondition(format!("graph has a hole {hole:?}")));
    }
    if let Some(v) = trivial_verdict(g) {
        return Ok(v);
    }
    if g.order() <= 4 {
        return Ok(checked(
            g,
            exhaustive(g, cfg.parallel).retag(Method::HoleFree),
        ));
    }
    let first = solve_cograph_case(g, cfg);
    if first.is_yes() {
        return Ok(first.retag(Method::HoleFree));
    }
    Ok(algorithm2(g, cfg))
}
