//! Graph class recognition with witnesses where one is natural.

mod chordal;
mod cluster;
mod cotree;
mod holes;
mod small;

pub use chordal::{
    is_chordal, is_perfect_elimination_ordering, is_split, maximum_cardinality_search,
    perfect_elimination_ordering, split_partition, SplitPartition,
};
pub use cluster::{
    cluster_cliques, cluster_modulators_up_to_2, find_p3, find_p3_within, is_cluster,
    is_cluster_within, is_complete_multipartite, ClusterModulator,
};
pub use cotree::{cograph_cotree, find_p4_within, is_cograph, Cotree, CotreeNode, NotCograph};
pub use holes::{
    find_hole, find_induced_cycle_at_least, find_induced_path, is_hole_free, is_induced_cycle,
    is_p5_free, is_pk_free,
};
pub use small::{
    any_subset, contains_induced, count_p4, domino, find_induced, gem, house,
    is_distance_hereditary, is_extended_p4_laden, small_isomorphic, SmallGraph,
};
