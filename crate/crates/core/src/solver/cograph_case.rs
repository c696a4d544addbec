use super::brute::exhaustive;
use super::scan::dominated_candidates;
use super::{checked, DecompositionCertificate, Method, SolverConfig, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::iso::cograph_isomorphic;
use crate::par::find_first_map;
use crate::recognize::{find_induced_path, is_cograph};

/// Decompositions in which both sides are cographs.
///
/// One side is connected (the complement of a disconnected side is
/// connected), and a connected cograph on two or more vertices is a join, so
/// one vertex from each of two co-components dominates it. The scan seeds
/// with every set `X` of one or two vertices, removes `|X|` matching partners
/// from `N[X]`, and tests the remaining side. Orders up to 4 go straight to
/// exhaustive search.
pub fn solve_cograph_case(g: &Graph, cfg: &SolverConfig) -> Verdict {
    let n = g.order();
    if n % 2 == 1 {
        return Verdict::No(Method::OddOrder);
    }
    if n <= 4 {
        return checked(g, exhaustive(g, cfg.parallel).retag(Method::CographCase));
    }
    let candidates = dominated_candidates(g, 2, cfg.parallel);
    let found = find_first_map(&candidates, cfg.parallel, |p| cograph_split(g, p));
    checked(
        g,
        found.map_or(Verdict::No(Method::CographCase), Verdict::Yes),
    )
}

fn cograph_split(g: &Graph, p: &Bipartition) -> Option<DecompositionCertificate> {
    let gl = g.induced_subgraph(p.left()).ok()?.graph;
    let gr = g.induced_subgraph(p.right()).ok()?.graph;
    if !is_cograph(&gl) || !is_cograph(&gr) {
        return None;
    }
    let m = cograph_isomorphic(&gl, &gr.complement()).ok()??;
    let cut = g.perfect_matching_cut(p)?;
    Some(DecompositionCertificate::from_parts(
        p,
        &cut,
        m.as_slice(),
        Method::CographCase,
    ))
}

/// Exact on P5-free graphs, where both sides of any decomposition are
/// cographs. Fails with a precondition error naming an induced P5 otherwise.
pub fn solve_p5free(g: &Graph, cfg: &SolverConfig) -> Result<Verdict> {
    if let Some(path) = find_induced_path(g, 5) {
        return Err(Error::precondition(format!(
            "graph has an induced P5 {path:?}"
        )));
    }
    Ok(solve_cograph_case(g, cfg).retag(Method::P5Free))
}
