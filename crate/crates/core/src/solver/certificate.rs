use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Method;
use crate::graph::{Bipartition, Graph, MatchingCut, VertexSet};

/// Evidence for a YES answer: a balanced bipartition whose cut is a perfect
/// matching, and a map from the left side onto the complement of the right
/// side.
///
/// The JSON form is
/// `{"n": half order, "left": [..], "right": [..], "matching": [[l, r], ..],
///   "iso": {"l": r, ..}, "method": ".."}`
/// with every matching pair written left vertex first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionCertificate {
    pub n: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub matching: Vec<[usize; 2]>,
    pub iso: BTreeMap<usize, usize>,
    pub method: Method,
}

/// First reason a certificate fails against a graph.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("field `n`: {n} is not half the graph order {order}")]
    HalfOrder { n: usize, order: usize },
    #[error("field `{field}`: expected {expected} vertices, found {found}")]
    SideSize {
        field: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("field `{field}`: vertex {vertex} out of range for order {order}")]
    OutOfRange {
        field: &'static str,
        vertex: usize,
        order: usize,
    },
    #[error("fields `left`/`right`: vertex {0} is listed twice or on both sides")]
    NotPartition(usize),
    #[error("field `matching`: pair [{0}, {1}] is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("field `matching`: pair [{0}, {1}] does not go from `left` to `right`")]
    NotCrossing(usize, usize),
    #[error("field `matching`: not perfect, vertex {0} is uncovered or covered twice")]
    NotPerfect(usize),
    #[error("field `matching`: cut edge [{0}, {1}] is missing, so the cut is not a matching")]
    CutEdgeOutsideMatching(usize, usize),
    #[error("field `iso`: not a bijection from `left` onto `right` ({0})")]
    IsoNotBijection(String),
    #[error(
        "field `iso`: adjacency of left pair ({u}, {v}) equals that of right pair ({fu}, {fv}); \
         it must be opposite"
    )]
    IsoViolation {
        u: usize,
        v: usize,
        fu: usize,
        fv: usize,
    },
}

impl DecompositionCertificate {
    /// Builds a certificate from a bipartition and a map `left[i] -> right[image[i]]`
    /// given in the local order of the sorted sides.
    pub(crate) fn from_parts(
        p: &Bipartition,
        cut: &MatchingCut,
        local_iso: &[usize],
        method: Method,
    ) -> Self {
        let left = p.left().to_vec();
        let right = p.right().to_vec();
        let iso = left
            .iter()
            .zip(local_iso)
            .map(|(&u, &j)| (u, right[j]))
            .collect();
        DecompositionCertificate {
            n: left.len(),
            matching: cut.edges().iter().map(|&(l, r)| [l, r]).collect(),
            left,
            right,
            iso,
            method,
        }
    }

    /// The certificate for the empty graph.
    pub(crate) fn empty(method: Method) -> Self {
        DecompositionCertificate {
            n: 0,
            left: Vec::new(),
            right: Vec::new(),
            matching: Vec::new(),
            iso: BTreeMap::new(),
            method,
        }
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn bipartition(&self, order: usize) -> Option<Bipartition> {
        Bipartition::new(
            VertexSet::from_vertices(order, self.left.iter().copied().filter(|&v| v < order)),
            VertexSet::from_vertices(order, self.right.iter().copied().filter(|&v| v < order)),
        )
        .ok()
    }

    /// Checks every invariant against `g` in O(n^2); deterministic and
    /// side-effect free.
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        let order = g.order();
        if 2 * self.n != order {
            return Err(CertificateError::HalfOrder { n: self.n, order });
        }
        let half = self.n;
        let mut side = vec![None; order];
        for (field, list, tag) in [("left", &self.left, 0u8), ("right", &self.right, 1u8)] {
            if list.len() != half {
                return Err(CertificateError::SideSize {
                    field,
                    expected: half,
                    found: list.len(),
                });
            }
            for &v in list {
                if v >= order {
                    return Err(CertificateError::OutOfRange {
                        field,
                        vertex: v,
                        order,
                    });
                }
                if side[v].replace(tag).is_some() {
                    return Err(CertificateError::NotPartition(v));
                }
            }
        }
        let mut partner = vec![usize::MAX; order];
        for &[l, r] in &self.matching {
            for v in [l, r] {
                if v >= order {
                    return Err(CertificateError::OutOfRange {
                        field: "matching",
                        vertex: v,
                        order,
                    });
                }
            }
            if !g.has_edge(l, r) {
                return Err(CertificateError::NotAnEdge(l, r));
            }
            if side[l] != Some(0) || side[r] != Some(1) {
                return Err(CertificateError::NotCrossing(l, r));
            }
            for (a, b) in [(l, r), (r, l)] {
                if partner[a] != usize::MAX {
                    return Err(CertificateError::NotPerfect(a));
                }
                partner[a] = b;
            }
        }
        if let Some(v) = (0..order).find(|&v| partner[v] == usize::MAX) {
            return Err(CertificateError::NotPerfect(v));
        }
        for &l in &self.left {
            for &r in &self.right {
                if g.has_edge(l, r) && partner[l] != r {
                    return Err(CertificateError::CutEdgeOutsideMatching(l, r));
                }
            }
        }
        if self.iso.len() != half {
            return Err(CertificateError::IsoNotBijection(format!(
                "{} entries for {half} left vertices",
                self.iso.len()
            )));
        }
        let mut hit = vec![false; order];
        for (&u, &fu) in &self.iso {
            if u >= order || side[u] != Some(0) {
                return Err(CertificateError::IsoNotBijection(format!(
                    "key {u} is not a left vertex"
                )));
            }
            if fu >= order || side[fu] != Some(1) {
                return Err(CertificateError::IsoNotBijection(format!(
                    "value {fu} is not a right vertex"
                )));
            }
            if std::mem::replace(&mut hit[fu], true) {
                return Err(CertificateError::IsoNotBijection(format!(
                    "value {fu} is used twice"
                )));
            }
        }
        let pairs: Vec<(usize, usize)> = self.iso.iter().map(|(&u, &f)| (u, f)).collect();
        for (i, &(u, fu)) in pairs.iter().enumerate() {
            for &(v, fv) in &pairs[i + 1..] {
                if g.has_edge(u, v) == g.has_edge(fu, fv) {
                    return Err(CertificateError::IsoViolation { u, v, fu, fv });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.verify(g).is_ok()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// `true` iff `c` is a valid certificate for `g`.
pub fn verify_certificate(g: &Graph, c: &DecompositionCertificate) -> bool {
    c.is_valid(g)
}
