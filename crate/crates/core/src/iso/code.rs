use super::IsoMapping;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognize::{cograph_cotree, Cotree, CotreeNode};

/// Canonical string for a normalized cotree: `v` for a leaf, `U(..)` or
/// `J(..)` around the sorted child codes. Equal codes mean isomorphic
/// cographs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub String);

impl std::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Codes for every node of the tree, indexed like `t.nodes`.
fn node_codes(t: &Cotree) -> Vec<String> {
    let mut codes: Vec<Option<String>> = vec![None; t.nodes.len()];
    // Children are pushed into the arena before their parent.
    for (i, node) in t.nodes.iter().enumerate() {
        let code = match node {
            CotreeNode::Leaf(_) => "v".to_string(),
            CotreeNode::Union(c) | CotreeNode::Join(c) => {
                let mut parts: Vec<&str> = c
                    .iter()
                    .map(|&x| codes[x].as_deref().expect("child precedes parent"))
                    .collect();
                parts.sort_unstable();
                let tag = if matches!(node, CotreeNode::Union(_)) {
                    'U'
                } else {
                    'J'
                };
                format!("{tag}({})", parts.concat())
            }
        };
        codes[i] = Some(code);
    }
    codes.into_iter().map(Option::unwrap).collect()
}

pub fn cotree_canonical_code(t: &Cotree) -> CanonicalCode {
    match t.root {
        None => CanonicalCode(String::new()),
        Some(r) => CanonicalCode(node_codes(t).swap_remove(r)),
    }
}

/// Code of a cograph, or a precondition error naming a P4.
pub fn cograph_canonical_code(g: &Graph) -> Result<CanonicalCode> {
    let t = cograph_cotree(g)
        .map_err(|e| Error::precondition(format!("not a cograph: induced P4 {:?}", e.p4)))?;
    Ok(cotree_canonical_code(&t))
}

/// Isomorphism of two cographs by aligning their canonically sorted cotrees.
pub fn cograph_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<IsoMapping>> {
    let not_cograph = |which: &str, p4: [usize; 4]| {
        Error::precondition(format!("{which} is not a cograph: induced P4 {p4:?}"))
    };
    let t1 = cograph_cotree(g1).map_err(|e| not_cograph("first graph", e.p4))?;
    let t2 = cograph_cotree(g2).map_err(|e| not_cograph("second graph", e.p4))?;
    if g1.order() != g2.order() {
        return Ok(None);
    }
    let (Some(r1), Some(r2)) = (t1.root, t2.root) else {
        return Ok(Some(IsoMapping::identity(0)));
    };
    let k1 = node_codes(&t1);
    let k2 = node_codes(&t2);
    if k1[r1] != k2[r2] {
        return Ok(None);
    }
    let mut image = vec![usize::MAX; g1.order()];
    let mut stack = vec![(r1, r2)];
    while let Some((a, b)) = stack.pop() {
        match (&t1.nodes[a], &t2.nodes[b]) {
            (CotreeNode::Leaf(u), CotreeNode::Leaf(v)) => image[*u] = *v,
            _ => {
                let mut ca = t1.children(a).to_vec();
                let mut cb = t2.children(b).to_vec();
                ca.sort_by(|&x, &y| k1[x].cmp(&k1[y]));
                cb.sort_by(|&x, &y| k2[x].cmp(&k2[y]));
                stack.extend(ca.into_iter().zip(cb));
            }
        }
    }
    let m = IsoMapping::new(image).expect("aligned cotrees give a bijection");
    debug_assert!(m.verify(g1, g2));
    Ok(Some(m))
}
