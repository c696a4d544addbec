pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod iso;
mod par;
pub mod recognize;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, MatchingCut, Side, VertexSet};
pub use par::parallel_available;
pub use solver::{decide, DecompositionCertificate, Method, SolverConfig, Strategy, Verdict};
