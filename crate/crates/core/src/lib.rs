//! A deterministic "simple search engine" over a local corpus, and the
//! selective statistics built on top of it.
//!
//! The crate is layered bottom-up:
//!
//! - [`engine`]: tokenization, the positional inverted index, singleton and
//!   doubleton event sets, hit counts with optional bias injection.
//! - [`snippets`]: word windows around every occurrence of a term.
//! - [`triplet`]: the term–snippet–word probabilities and the [`Context`]
//!   carrying the `nu` (snippet weight) and `mu` (singleton count) vectors.
//! - [`microcluster`]: the word relation graph, threshold micro-clusters,
//!   strongest-relation spanning trees and mirror shades.
//! - [`pipeline`]: end-to-end orchestration and the JSON / DOT artifacts.
//!
//! All probabilities and weights are exact rationals ([`Rational`]), so
//! thresholds and tie-breaks never depend on floating point rounding.

pub mod engine;
pub mod error;
pub mod export;
pub mod microcluster;
pub mod pipeline;
pub mod rational;
pub mod snippets;
pub mod triplet;

pub use engine::{
    build_index, doubleton, hit_count, singleton, tokenize, BiasConfig, BiasMode, DocId, Document,
    EventSet, Index, Term,
};
pub use error::{Error, Result};
pub use microcluster::{
    build_word_graph, micro_cluster, mirror_shade, optimal_micro_cluster, theorem_check,
    verify_theorem, Measure, MicroCluster, MirrorShade, ShadeEntry, TheoremCheck, TreeCluster,
    WeightedEdge, WordGraph,
};
pub use rational::Rational;
pub use snippets::{extract_snippets, Snippet, SnippetList, DEFAULT_PER_DOC_LIMIT, MAX_WINDOW};
pub use triplet::{
    build_context, p_list_word, p_snippet_word, p_term_list, p_term_snippet, p_term_word,
    word_weight, Context, WordStat,
};
