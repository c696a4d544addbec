use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};

/// A chordless cycle on at least five vertices, listed in cycle order.
///
/// For every induced P4 `a-b-c-d`, `a` and `d` are joined avoiding
/// `N[b] ∪ N[c]`; a shortest such path closes a hole through `b` and `c`.
/// Every hole contains such a P4, so the search is complete.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    for b in 0..n {
        for c in g.neighbors(b).iter() {
            let nb = g.neighbors(b);
            let nc = g.neighbors(c);
            let mut only_b = nb.difference(nc);
            only_b.remove(c);
            let mut only_c = nc.difference(nb);
            only_c.remove(b);
            if only_b.is_empty() || only_c.is_empty() {
                continue;
            }
            let mut blocked = nb.union(nc);
            blocked.insert(b);
            blocked.insert(c);
            for a in &only_b {
                for d in only_c.difference(g.neighbors(a)).iter() {
                    let mut allowed = blocked.complement();
                    allowed.insert(a);
                    allowed.insert(d);
                    if let Some(path) = shortest_path(g, a, d, &allowed) {
                        let mut cycle = path;
                        cycle.push(c);
                        cycle.push(b);
                        debug_assert!(cycle.len() >= 5 && is_induced_cycle(g, &cycle));
                        return Some(cycle);
                    }
                }
            }
        }
    }
    None
}

pub fn is_hole_free(g: &Graph) -> bool {
    find_hole(g).is_none()
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: &VertexSet) -> Option<Vec<usize>> {
    let n = g.order();
    let mut prev = vec![usize::MAX; n];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut x = to;
            while x != from {
                x = prev[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(v).intersection(allowed).iter() {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// `cycle` lists distinct vertices whose induced subgraph is exactly that
/// cycle.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let set = VertexSet::from_vertices(g.order(), cycle.iter().copied());
    if set.len() != k {
        return false;
    }
    (0..k).all(|i| {
        let v = cycle[i];
        let want =
            VertexSet::from_vertices(g.order(), [cycle[(i + 1) % k], cycle[(i + k - 1) % k]]);
        g.neighbors(v).intersection(&set) == want
    })
}

/// An induced path on exactly `k` vertices, if one exists.
pub fn find_induced_path(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let n = g.order();
    let mut path = Vec::with_capacity(k);
    for start in 0..n {
        path.clear();
        path.push(start);
        if extend_path(g, k, &mut path, &VertexSet::singleton(n, start)) {
            return Some(path);
        }
    }
    None
}

/// `used` covers the closed neighborhoods of all path vertices but the last.
fn extend_path(g: &Graph, k: usize, path: &mut Vec<usize>, used: &VertexSet) -> bool {
    if path.len() == k {
        return true;
    }
    let last = *path.last().unwrap();
    let candidates = g.neighbors(last).difference(used);
    let mut next_used = used.union(g.neighbors(last));
    next_used.insert(last);
    for w in &candidates {
        path.push(w);
        if extend_path(g, k, path, &next_used) {
            return true;
        }
        path.pop();
    }
    false
}

pub fn is_pk_free(g: &Graph, k: usize) -> bool {
    find_induced_path(g, k).is_none()
}

pub fn is_p5_free(g: &Graph) -> bool {
    is_pk_free(g, 5)
}

/// An induced cycle with at least `min_len` vertices (`min_len` is raised to
/// 3). Chordless paths are grown from the cycle's smallest vertex; exponential
/// in the worst case, so meant for small graphs and bounded scans.
pub fn find_induced_cycle_at_least(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    let min_len = min_len.max(3);
    let n = g.order();
    for s in 0..n {
        let above = VertexSet::from_vertices(n, s + 1..n);
        for p1 in g.neighbors(s).intersection(&above).iter() {
            let mut path = vec![s, p1];
            let blocked = VertexSet::empty(n);
            if grow_cycle(g, min_len, &above, &mut path, &blocked) {
                return Some(path);
            }
        }
    }
    None
}

/// `blocked` is the union of `N[p]` over interior path vertices (neither the
/// root nor the tip). No path vertex after `p1` is adjacent to the root.
fn grow_cycle(
    g: &Graph,
    min_len: usize,
    above: &VertexSet,
    path: &mut Vec<usize>,
    blocked: &VertexSet,
) -> bool {
    let s = path[0];
    let tip = *path.last().unwrap();
    let mut candidates = g.neighbors(tip).intersection(above);
    candidates.difference_with(blocked);
    if path.len() >= 2 {
        candidates.remove(path[path.len() - 2]);
    }
    let mut next = blocked.union(g.neighbors(tip));
    next.insert(tip);
    for w in &candidates {
        if g.has_edge(w, s) {
            if path.len() + 1 >= min_len {
                path.push(w);
                debug_assert!(is_induced_cycle(g, path));
                return true;
            }
            continue;
        }
        path.push(w);
        if grow_cycle(g, min_len, above, path, &next) {
            return true;
        }
        path.pop();
    }
    false
}
