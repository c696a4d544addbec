use super::IsoMapping;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognize::{is_cluster_within, ClusterModulator};

/// How a clique of `g - S` attaches to the modulator `S = {w, w'}`.
/// Missing modulator vertices count as adjacent to nothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliqueTypeSignature {
    pub size: usize,
    pub only_w: usize,
    pub only_w2: usize,
    pub both: usize,
}

/// One clique with its signature and its vertices split into the four
/// attachment classes (only `w`, only `w'`, both, neither), each sorted.
struct TypedClique {
    signature: CliqueTypeSignature,
    classes: [Vec<usize>; 4],
}

fn type_cliques(g: &Graph, modulator: &[usize]) -> Vec<TypedClique> {
    let n = g.order();
    let mut rest = g.vertices();
    for &v in modulator {
        rest.remove(v);
    }
    let empty = VertexSet::empty(n);
    let nw = modulator.first().map_or(&empty, |&w| g.neighbors(w));
    let nw2 = modulator.get(1).map_or(&empty, |&w| g.neighbors(w));
    let mut out: Vec<TypedClique> = g
        .components_within(&rest)
        .into_iter()
        .map(|c| {
            let mut classes: [Vec<usize>; 4] = Default::default();
            for v in &c {
                let k = match (nw.contains(v), nw2.contains(v)) {
                    (true, false) => 0,
                    (false, true) => 1,
                    (true, true) => 2,
                    (false, false) => 3,
                };
                classes[k].push(v);
            }
            TypedClique {
                signature: CliqueTypeSignature {
                    size: c.len(),
                    only_w: classes[0].len(),
                    only_w2: classes[1].len(),
                    both: classes[2].len(),
                },
                classes,
            }
        })
        .collect();
    out.sort_by_key(|a| a.signature);
    out
}

/// Sorted signatures of the cliques of `g - modulator`, with `modulator[0]`
/// playing `w` and `modulator[1]` playing `w'`.
pub fn clique_type_signatures(g: &Graph, modulator: &[usize]) -> Vec<CliqueTypeSignature> {
    type_cliques(g, modulator)
        .into_iter()
        .map(|c| c.signature)
        .collect()
}

fn check_modulator(g: &Graph, s: &ClusterModulator, name: &str) -> Result<()> {
    if s.len() > 2 {
        return Err(Error::precondition(format!(
            "{name} has more than two vertices"
        )));
    }
    let mut rest = g.vertices();
    for &v in &s.vertices {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
        rest.remove(v);
    }
    if rest.len() + s.len() != g.order() {
        return Err(Error::precondition(format!("{name} repeats a vertex")));
    }
    if !is_cluster_within(g, &rest) {
        return Err(Error::precondition(format!(
            "deleting {name} does not leave a cluster graph"
        )));
    }
    Ok(())
}

/// Extends the bijection `f: s1 -> s2` (as `(u, f(u))` pairs) to an
/// isomorphism `g1 -> h2`, or returns `None` when no extension exists.
///
/// An extension exists iff `f` preserves adjacency inside the modulator and the
/// clique-type multisets agree; matched cliques are then mapped class by
/// class.
pub fn cluster_apex_isomorphism(
    g1: &Graph,
    h2: &Graph,
    s1: &ClusterModulator,
    s2: &ClusterModulator,
    f: &[(usize, usize)],
) -> Result<Option<IsoMapping>> {
    check_modulator(g1, s1, "s1")?;
    check_modulator(h2, s2, "s2")?;
    if s1.len() != s2.len() || f.len() != s1.len() {
        return Err(Error::precondition("modulators and mapping differ in size"));
    }
    for &(u, v) in f {
        if !s1.vertices.contains(&u) || !s2.vertices.contains(&v) {
            return Err(Error::precondition(format!(
                "mapping pair ({u}, {v}) leaves the modulators"
            )));
        }
    }
    if f.len() == 2 && (f[0].0 == f[1].0 || f[0].1 == f[1].1) {
        return Err(Error::precondition("mapping is not a bijection"));
    }
    if g1.order() != h2.order() {
        return Ok(None);
    }
    if f.len() == 2 && g1.has_edge(f[0].0, f[1].0) != h2.has_edge(f[0].1, f[1].1) {
        return Ok(None);
    }
    let left: Vec<usize> = f.iter().map(|p| p.0).collect();
    let right: Vec<usize> = f.iter().map(|p| p.1).collect();
    let c1 = type_cliques(g1, &left);
    let c2 = type_cliques(h2, &right);
    if c1.len() != c2.len() || c1.iter().zip(&c2).any(|(a, b)| a.signature != b.signature) {
        return Ok(None);
    }
    let mut image = vec![usize::MAX; g1.order()];
    for &(u, v) in f {
        image[u] = v;
    }
    for (a, b) in c1.iter().zip(&c2) {
        for (ca, cb) in a.classes.iter().zip(&b.classes) {
            for (&u, &v) in ca.iter().zip(cb) {
                image[u] = v;
            }
        }
    }
    let m = IsoMapping::new(image).expect("class-by-class matching is a bijection");
    debug_assert!(m.verify(g1, h2));
    Ok(m.verify(g1, h2).then_some(m))
}

/// Tries every bijection between the modulators.
pub fn cluster_apex_isomorphism_any(
    g1: &Graph,
    h2: &Graph,
    s1: &ClusterModulator,
    s2: &ClusterModulator,
) -> Result<Option<IsoMapping>> {
    let a = &s1.vertices;
    let b = &s2.vertices;
    let maps: Vec<Vec<(usize, usize)>> = match (a.len(), b.len()) {
        (0, 0) => vec![vec![]],
        (1, 1) => vec![vec![(a[0], b[0])]],
        (2, 2) => vec![
            vec![(a[0], b[0]), (a[1], b[1])],
            vec![(a[0], b[1]), (a[1], b[0])],
        ],
        _ => return Err(Error::precondition("modulators differ in size")),
    };
    for f in maps {
        if let Some(m) = cluster_apex_isomorphism(g1, h2, s1, s2, &f)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
