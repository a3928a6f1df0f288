//! Word relation graphs, threshold micro-clusters, strongest-relation trees
//! and mirror shades.

mod graph;
mod shade;
mod tree;

pub use graph::{build_word_graph, micro_cluster, Measure, MicroCluster, WeightedEdge, WordGraph};
pub use shade::{
    mirror_shade, theorem_check, verify_theorem, MirrorShade, ShadeEntry, TheoremCheck,
};
pub use tree::{optimal_micro_cluster, TreeCluster};
