use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(usize),
    Union(Vec<usize>),
    Join(Vec<usize>),
}

/// Normalized cotree: labels alternate along every root-leaf path and every
/// internal node has at least two children. Nodes live in an arena; children
/// are ordered by their smallest leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cotree {
    pub order: usize,
    pub nodes: Vec<CotreeNode>,
    /// `None` only for the empty graph.
    pub root: Option<usize>,
}

/// Four vertices `a-b-c-d` inducing a P4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotCograph {
    pub p4: [usize; 4],
}

impl Cotree {
    pub fn children(&self, node: usize) -> &[usize] {
        match &self.nodes[node] {
            CotreeNode::Leaf(_) => &[],
            CotreeNode::Union(c) | CotreeNode::Join(c) => c,
        }
    }

    /// Leaves below `node`, in child order.
    pub fn leaves(&self, node: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(x) = stack.pop() {
            match &self.nodes[x] {
                CotreeNode::Leaf(v) => out.push(*v),
                CotreeNode::Union(c) | CotreeNode::Join(c) => stack.extend(c.iter().rev()),
            }
        }
        out
    }

    /// Rebuilds the graph the cotree encodes: two leaves are adjacent iff their
    /// lowest common ancestor is a JOIN.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.order);
        for node in &self.nodes {
            if let CotreeNode::Join(children) = node {
                let parts: Vec<Vec<usize>> = children.iter().map(|&c| self.leaves(c)).collect();
                for (a, pa) in parts.iter().enumerate() {
                    for pb in &parts[a + 1..] {
                        for &u in pa {
                            for &v in pb {
                                g.set_edge(u, v, true);
                            }
                        }
                    }
                }
            }
        }
        g
    }

    /// Same tree with UNION and JOIN exchanged; this is the cotree of the
    /// complement.
    pub fn with_labels_swapped(&self) -> Cotree {
        let nodes = self
            .nodes
            .iter()
            .map(|n| match n {
                CotreeNode::Leaf(v) => CotreeNode::Leaf(*v),
                CotreeNode::Union(c) => CotreeNode::Join(c.clone()),
                CotreeNode::Join(c) => CotreeNode::Union(c.clone()),
            })
            .collect();
        Cotree {
            order: self.order,
            nodes,
            root: self.root,
        }
    }
}

/// Recursive component / co-component decomposition.
pub fn cograph_cotree(g: &Graph) -> Result<Cotree, NotCograph> {
    let co = g.complement();
    let mut nodes = Vec::new();
    let root = if g.order() == 0 {
        None
    } else {
        Some(build(g, &co, &g.vertices(), &mut nodes)?)
    };
    Ok(Cotree {
        order: g.order(),
        nodes,
        root,
    })
}

pub fn is_cograph(g: &Graph) -> bool {
    cograph_cotree(g).is_ok()
}

fn build(
    g: &Graph,
    co: &Graph,
    within: &VertexSet,
    nodes: &mut Vec<CotreeNode>,
) -> Result<usize, NotCograph> {
    if within.len() == 1 {
        nodes.push(CotreeNode::Leaf(within.first().unwrap()));
        return Ok(nodes.len() - 1);
    }
    let comps = g.components_within(within);
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| build(g, co, c, nodes))
            .collect::<Result<Vec<_>, _>>()?;
        nodes.push(CotreeNode::Union(children));
        return Ok(nodes.len() - 1);
    }
    let co_comps = co.components_within(within);
    if co_comps.len() > 1 {
        let children = co_comps
            .iter()
            .map(|c| build(g, co, c, nodes))
            .collect::<Result<Vec<_>, _>>()?;
        nodes.push(CotreeNode::Join(children));
        return Ok(nodes.len() - 1);
    }
    // Connected and co-connected on at least two vertices: a P4 must exist.
    Err(NotCograph {
        p4: find_p4_within(g, within).expect("connected, co-connected graph contains a P4"),
    })
}

/// Some induced P4 `a-b-c-d` inside `within`, found through its middle edge.
pub fn find_p4_within(g: &Graph, within: &VertexSet) -> Option<[usize; 4]> {
    for b in within {
        let nb = g.neighbors(b).intersection(within);
        for c in nb.iter().filter(|&c| c > b) {
            let nc = g.neighbors(c).intersection(within);
            let mut only_b = nb.difference(&nc);
            only_b.remove(c);
            let mut only_c = nc.difference(&nb);
            only_c.remove(b);
            for a in &only_b {
                if let Some(d) = only_c.difference(g.neighbors(a)).first() {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}
