//! The deterministic search engine: tokens, terms, the inverted index and the
//! event sets returned for singleton and doubleton queries.

mod bias;
pub mod corpus;
mod index;
mod term;
mod tokenize;

pub use bias::{hit_count, BiasConfig, BiasMode};
pub use index::{build_index, doubleton, singleton, DocId, Document, EventSet, Index, Posting};
pub use term::Term;
pub use tokenize::tokenize;
