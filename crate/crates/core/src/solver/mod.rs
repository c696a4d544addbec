//! Deciding whether a graph splits into `H` and the complement of `H` joined
//! by a perfect matching.
//!
//! [`decide`] dispatches on recognized graph classes: closed-form
//! characterizations first, then the polynomial algorithms for P5-free and
//! hole-free inputs, then exhaustive search up to a configurable order.
//! Every YES answer carries a certificate that is re-verified before it is
//! returned.

mod brute;
mod certificate;
mod cograph_case;
mod holefree;
mod prism;
mod scan;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use brute::{brute_force, BRUTE_DEFAULT_LIMIT, BRUTE_HARD_LIMIT};
pub use certificate::{verify_certificate, CertificateError, DecompositionCertificate};
pub use cograph_case::{solve_cograph_case, solve_p5free};
pub use holefree::{algorithm2, solve_holefree};
pub use prism::matches_prism;

use crate::error::Result;
use crate::graph::Graph;
use crate::iso::backtracking_isomorphic;
use crate::recognize::{
    is_chordal, is_cograph, is_distance_hereditary, is_extended_p4_laden, is_hole_free, is_p5_free,
};

/// Which procedure settled an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    EmptyGraph,
    OddOrder,
    Disconnected,
    IsolatedVertex,
    CographCharacterization,
    ChordalCharacterization,
    ExtendedP4LadenCharacterization,
    DistanceHereditaryCharacterization,
    CographCase,
    P5Free,
    HoleFree,
    BruteForce,
    Construction,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::EmptyGraph => "empty-graph",
            Method::OddOrder => "odd-order",
            Method::Disconnected => "disconnected",
            Method::IsolatedVertex => "isolated-vertex",
            Method::CographCharacterization => "cograph-characterization",
            Method::ChordalCharacterization => "chordal-characterization",
            Method::ExtendedP4LadenCharacterization => "extended-p4-laden-characterization",
            Method::DistanceHereditaryCharacterization => "distance-hereditary-characterization",
            Method::CographCase => "cograph-case",
            Method::P5Free => "p5-free",
            Method::HoleFree => "hole-free",
            Method::BruteForce => "brute-force",
            Method::Construction => "construction",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes(DecompositionCertificate),
    No(Method),
    Unknown(String),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }

    pub fn certificate(&self) -> Option<&DecompositionCertificate> {
        match self {
            Verdict::Yes(c) => Some(c),
            _ => None,
        }
    }

    pub fn method(&self) -> Option<Method> {
        match self {
            Verdict::Yes(c) => Some(c.method),
            Verdict::No(m) => Some(*m),
            Verdict::Unknown(_) => None,
        }
    }

    /// `YES`, `NO` or `UNKNOWN`.
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "YES",
            Verdict::No(_) => "NO",
            Verdict::Unknown(_) => "UNKNOWN",
        }
    }

    /// Process exit code: 0 YES, 1 NO, 2 UNKNOWN.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Yes(_) => 0,
            Verdict::No(_) => 1,
            Verdict::Unknown(_) => 2,
        }
    }

    fn retag(self, method: Method) -> Verdict {
        match self {
            Verdict::Yes(c) => Verdict::Yes(c.with_method(method)),
            Verdict::No(_) => Verdict::No(method),
            other => other,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    #[default]
    Auto,
    Brute,
    Cograph,
    P5Free,
    HoleFree,
    Characterization,
}

impl Strategy {
    pub const ALL: [Strategy; 6] = [
        Strategy::Auto,
        Strategy::Brute,
        Strategy::Cograph,
        Strategy::P5Free,
        Strategy::HoleFree,
        Strategy::Characterization,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::Brute => "brute",
            Strategy::Cograph => "cograph",
            Strategy::P5Free => "p5free",
            Strategy::HoleFree => "holefree",
            Strategy::Characterization => "characterization",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Strategy::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Strategy::ALL.iter().map(|x| x.as_str()).collect();
                format!(
                    "unknown strategy `{s}`, expected one of {}",
                    names.join(", ")
                )
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub strategy: Strategy,
    /// Largest order handed to exhaustive search; 0 disables it.
    pub brute_limit: usize,
    /// Spread enumeration over the rayon pool (ignored without the `parallel`
    /// feature). Results do not depend on this flag.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            strategy: Strategy::Auto,
            brute_limit: BRUTE_DEFAULT_LIMIT,
            parallel: crate::par::parallel_available(),
        }
    }
}

impl SolverConfig {
    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_brute_limit(mut self, limit: usize) -> Self {
        self.brute_limit = limit;
        self
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }
}

/// Panics unless a YES certificate verifies; a failure here is a solver bug.
pub(crate) fn checked(g: &Graph, v: Verdict) -> Verdict {
    if let Verdict::Yes(c) = &v {
        if let Err(e) = c.verify(g) {
            panic!("solver produced an invalid certificate ({e}): {c:?}");
        }
    }
    v
}

/// Answers that need no search: NO for odd order, disconnected graphs and
/// isolated vertices, YES for the empty graph.
pub fn trivial_verdict(g: &Graph) -> Option<Verdict> {
    let n = g.order();
    if n == 0 {
        return Some(Verdict::Yes(DecompositionCertificate::empty(
            Method::EmptyGraph,
        )));
    }
    if n % 2 == 1 {
        return Some(Verdict::No(Method::OddOrder));
    }
    if g.has_isolated_vertex() {
        return Some(Verdict::No(Method::IsolatedVertex));
    }
    if !g.is_connected() {
        return Some(Verdict::No(Method::Disconnected));
    }
    None
}

/// The exceptional distance-hereditary YES instance, derived once by
/// exhaustive search; `None` if the search did not isolate exactly one graph.
pub fn rho() -> Option<&'static Graph> {
    static RHO: OnceLock<Option<Graph>> = OnceLock::new();
    RHO.get_or_init(|| {
        let found = crate::generators::rho_candidates(10, &SolverConfig::default())
            .expect("order 10 is within the derivation limit");
        (found.len() == 1).then(|| found.into_iter().next().unwrap())
    })
    .as_ref()
}

fn characterization(g: &Graph, cfg: &SolverConfig) -> Option<Verdict> {
    if is_cograph(g) {
        // Connected and of even order here, so K2 is the only candidate.
        return Some(if g.order() == 2 {
            brute::exhaustive(g, cfg.parallel).retag(Method::CographCharacterization)
        } else {
            Verdict::No(Method::CographCharacterization)
        });
    }
    let prism_or = |method| match matches_prism(g) {
        Some(c) => Verdict::Yes(c.with_method(method)),
        None => Verdict::No(method),
    };
    if is_chordal(g) {
        return Some(prism_or(Method::ChordalCharacterization));
    }
    if is_extended_p4_laden(g) {
        return Some(prism_or(Method::ExtendedP4LadenCharacterization));
    }
    if is_distance_hereditary(g) {
        let method = Method::DistanceHereditaryCharacterization;
        if let Some(c) = matches_prism(g) {
            return Some(Verdict::Yes(c.with_method(method)));
        }
        let r = rho()?;
        let is_rho =
            r.order() == g.order() && backtracking_isomorphic(g, r).ok().flatten().is_some();
        return Some(if is_rho {
            brute::exhaustive(g, cfg.parallel).retag(method)
        } else {
            Verdict::No(method)
        });
    }
    None
}

/// Runs the configured strategy. Only the explicit strategies can fail, when
/// their preconditions or size limits are violated; `auto` and
/// `characterization` degrade to UNKNOWN.
pub fn decide(g: &Graph, cfg: &SolverConfig) -> Result<Verdict> {
    let v = match cfg.strategy {
        Strategy::Brute => brute_force(g, cfg)?,
        Strategy::Cograph => solve_cograph_case(g, cfg),
        Strategy::P5Free => solve_p5free(g, cfg)?,
        Strategy::HoleFree => solve_holefree(g, cfg)?,
        Strategy::Characterization => match trivial_verdict(g) {
            Some(v) => v,
            None => characterization(g, cfg)
                .unwrap_or_else(|| Verdict::Unknown("no characterization applies".into())),
        },
        Strategy::Auto => decide_auto(g, cfg),
    };
    Ok(checked(g, v))
}

fn decide_auto(g: &Graph, cfg: &SolverConfig) -> Verdict {
    if let Some(v) = trivial_verdict(g) {
        return v;
    }
    if let Some(v) = characterization(g, cfg) {
        return v;
    }
    if is_p5_free(g) {
        return solve_p5free(g, cfg).expect("input is P5-free");
    }
    if is_hole_free(g) {
        return solve_holefree(g, cfg).expect("input is hole-free");
    }
    if g.order() <= cfg.brute_limit {
        if let Ok(v) = brute_force(g, cfg) {
            return v;
        }
    }
    Verdict::Unknown(format!(
        "class not supported: graph has a hole and an induced P5, and order {} exceeds the brute-force limit {}",
        g.order(),
        cfg.brute_limit
    ))
}
