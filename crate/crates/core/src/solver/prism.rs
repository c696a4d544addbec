use super::{DecompositionCertificate, Method};
use crate::graph::{Bipartition, Graph, VertexSet};

/// Recognizes the prism of `K_h`: an `h`-clique whose vertices each carry one
/// pendant vertex. Returns the clique / pendant certificate.
pub fn matches_prism(g: &Graph) -> Option<DecompositionCertificate> {
    let n = g.order();
    if n == 0 || n % 2 == 1 {
        return None;
    }
    let h = n / 2;
    let (clique, pendants): (Vec<usize>, Vec<usize>) = if h == 1 {
        (vec![0], vec![1])
    } else {
        (0..n).partition(|&v| g.degree(v) != 1)
    };
    if clique.len() != h || pendants.len() != h {
        return None;
    }
    if clique
        .iter()
        .any(|&u| clique.iter().any(|&v| u != v && !g.has_edge(u, v)))
    {
        return None;
    }
    if clique.iter().any(|&u| g.degree(u) != h) {
        return None;
    }
    let mut covered = VertexSet::empty(n);
    for &p in &pendants {
        let c = g.neighbors(p).first()?;
        if g.degree(p) != 1 || pendants.contains(&c) || covered.contains(c) {
            return None;
        }
        covered.insert(c);
    }
    let part = Bipartition::from_left(VertexSet::from_vertices(n, clique.iter().copied()));
    let cut = g.perfect_matching_cut(&part)?;
    // Both G[clique] and the complement of G[pendants] are K_h.
    let local: Vec<usize> = (0..h).collect();
    let c = DecompositionCertificate::from_parts(&part, &cut, &local, Method::Construction);
    debug_assert!(c.is_valid(g));
    Some(c)
}
