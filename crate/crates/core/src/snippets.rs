//! Word windows around term occurrences.

use crate::engine::{Index, Term};
use crate::error::{Error, Result};

/// Largest number of words kept on either side of a term occurrence.
pub const MAX_WINDOW: usize = 50;

pub const DEFAULT_PER_DOC_LIMIT: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snippet {
    pub doc_id: String,
    pub words: Vec<String>,
    /// Half-open `(start, end)` ranges of the term inside `words`.
    pub term_spans: Vec<(usize, usize)>,
}

impl Snippet {
    /// A snippet with no recorded term spans.
    pub fn new(doc_id: impl Into<String>, words: Vec<String>) -> Self {
        Snippet {
            doc_id: doc_id.into(),
            words,
            term_spans: Vec::new(),
        }
    }

    /// A snippet whose spans are every occurrence of `term` in `words`.
    pub fn for_term(doc_id: impl Into<String>, words: Vec<String>, term: &Term) -> Self {
        let term_spans = term
            .find_in(&words)
            .into_iter()
            .map(|s| (s, s + term.len()))
            .collect();
        Snippet {
            doc_id: doc_id.into(),
            words,
            term_spans,
        }
    }

    /// The snippet's own `max`: its word count after boundary truncation.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, term: &Term) -> bool {
        term.occurs_in(&self.words)
    }
}

/// The list `L` of snippets returned for one term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnippetList {
    pub term: Term,
    pub snippets: Vec<Snippet>,
}

impl SnippetList {
    pub fn new(term: Term, snippets: Vec<Snippet>) -> Self {
        SnippetList { term, snippets }
    }

    pub fn n(&self) -> usize {
        self.snippets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.snippets.is_empty()
    }
}

/// One snippet per occurrence of `term`, at most `per_doc_limit` per
/// document, each holding up to `window` words on both sides. Ordered by
/// document id, then by occurrence position.
pub fn extract_snippets(
    index: &Index,
    term: &Term,
    window: usize,
    per_doc_limit: usize,
) -> Result<SnippetList> {
    if !(1..=MAX_WINDOW).contains(&window) {
        return Err(Error::WindowOutOfRange(window));
    }
    if per_doc_limit == 0 {
        return Err(Error::InvalidLimit);
    }
    let mut snippets = Vec::new();
    for (doc, starts) in index.occurrences(term) {
        let document = index.document(doc);
        for &start in starts.iter().take(per_doc_limit) {
            let from = start.saturating_sub(window);
            let to = (start + term.len() + window).min(document.tokens.len());
            snippets.push(Snippet::for_term(
                document.id.clone(),
                document.tokens[from..to].to_vec(),
                term,
            ));
        }
    }
    Ok(SnippetList::new(term.clone(), snippets))
}
