use std::collections::{HashMap, HashSet};

use super::term::Term;
use super::tokenize::tokenize;
use crate::error::{Error, Result};

/// Dense document handle. Handles are assigned in ascending id order, so
/// sorting by `DocId` is sorting by document id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DocId(pub u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub tokens: Vec<String>,
}

/// Occurrences of one token inside one document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Posting {
    pub doc: DocId,
    pub positions: Vec<u32>,
}

/// The indexed page universe. Immutable once built.
#[derive(Debug, Clone, Default)]
pub struct Index {
    documents: Vec<Document>,
    postings: HashMap<String, Vec<Posting>>,
}

/// Builds the positional inverted index over `(id, raw text)` pairs.
pub fn build_index<I, K, V>(corpus: I) -> Result<Index>
where
    I: IntoIterator<Item = (K, V)>,
    K: Into<String>,
    V: AsRef<str>,
{
    let mut seen = HashSet::new();
    let mut documents = Vec::new();
    for (id, text) in corpus {
        let id = id.into();
        if !seen.insert(id.clone()) {
            return Err(Error::DuplicateDocument(id));
        }
        documents.push(Document {
            tokens: tokenize(text.as_ref()),
            id,
        });
    }
    Ok(Index::from_documents(documents))
}

impl Index {
    fn from_documents(mut documents: Vec<Document>) -> Self {
        documents.sort_by(|a, b| a.id.cmp(&b.id));
        let mut postings: HashMap<String, Vec<Posting>> = HashMap::new();
        for (ordinal, doc) in documents.iter().enumerate() {
            let doc_id = DocId(ordinal as u32);
            for (pos, token) in doc.tokens.iter().enumerate() {
                let list = postings.entry(token.clone()).or_default();
                match list.last_mut() {
                    Some(last) if last.doc == doc_id => last.positions.push(pos as u32),
                    _ => list.push(Posting {
                        doc: doc_id,
                        positions: vec![pos as u32],
                    }),
                }
            }
        }
        Index {
            documents,
            postings,
        }
    }

    /// `|Ω|`.
    pub fn universe_size(&self) -> usize {
        self.documents.len()
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn document(&self, handle: DocId) -> &Document {
        &self.documents[handle.0 as usize]
    }

    pub fn lookup(&self, id: &str) -> Option<DocId> {
        self.documents
            .binary_search_by(|d| d.id.as_str().cmp(id))
            .ok()
            .map(|i| DocId(i as u32))
    }

    pub fn postings(&self, token: &str) -> &[Posting] {
        self.postings.get(token).map_or(&[], Vec::as_slice)
    }

    pub fn unique_tokens(&self) -> usize {
        self.postings.len()
    }

    pub fn total_tokens(&self) -> usize {
        self.documents.iter().map(|d| d.tokens.len()).sum()
    }

    /// Every phrase occurrence of `term`, grouped by document in id order.
    pub fn occurrences(&self, term: &Term) -> Vec<(DocId, Vec<usize>)> {
        let first = &term.tokens()[0];
        self.postings(first)
            .iter()
            .filter_map(|posting| {
                let tokens = &self.document(posting.doc).tokens;
                let starts: Vec<usize> = posting
                    .positions
                    .iter()
                    .map(|&p| p as usize)
                    .filter(|&p| term.matches_at(tokens, p))
                    .collect();
                (!starts.is_empty()).then_some((posting.doc, starts))
            })
            .collect()
    }
}

/// A set of documents returned for a query, `Ω_x` or `Ω_x ∩ Ω_y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EventSet {
    docs: Vec<DocId>,
}

impl EventSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_sorted(docs: Vec<DocId>) -> Self {
        debug_assert!(docs.windows(2).all(|w| w[0] < w[1]));
        EventSet { docs }
    }

    pub fn cardinality(&self) -> usize {
        self.docs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.docs.is_empty()
    }

    pub fn handles(&self) -> &[DocId] {
        &self.docs
    }

    pub fn contains(&self, doc: DocId) -> bool {
        self.docs.binary_search(&doc).is_ok()
    }

    pub fn ids<'a>(&'a self, index: &'a Index) -> impl Iterator<Item = &'a str> + 'a {
        self.docs
            .iter()
            .map(move |&d| index.document(d).id.as_str())
    }

    pub fn intersection(&self, other: &EventSet) -> EventSet {
        let mut out = Vec::with_capacity(self.docs.len().min(other.docs.len()));
        let (mut i, mut j) = (0, 0);
        while i < self.docs.len() && j < other.docs.len() {
            match self.docs[i].cmp(&other.docs[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.docs[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        EventSet { docs: out }
    }

    pub fn intersection_len(&self, other: &EventSet) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.docs.len() && j < other.docs.len() {
            match self.docs[i].cmp(&other.docs[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }
}

/// `Ω_x`: documents containing `term` as a contiguous token sequence.
pub fn singleton(index: &Index, term: &Term) -> EventSet {
    EventSet {
        docs: index
            .occurrences(term)
            .into_iter()
            .map(|(d, _)| d)
            .collect(),
    }
}

/// `Ω_x ∩ Ω_y` for two different terms.
pub fn doubleton(index: &Index, tx: &Term, ty: &Term) -> Result<EventSet> {
    if tx.same_pattern(ty) {
        return Err(Error::IdenticalTerms(tx.to_string()));
    }
    Ok(singleton(index, tx).intersection(&singleton(index, ty)))
}
