use std::collections::{HashMap, HashSet};

use num_traits::Zero;

use super::graph::MicroCluster;
use super::tree::TreeCluster;
use crate::engine::{singleton, Index, Term};
use crate::error::{Error, Result};
use crate::rational::{ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadeEntry {
    pub word: String,
    /// `|Ω_word|`.
    pub raw: u64,
    /// `raw / z`, or 0 when `z = 0`.
    pub normalized: Rational,
}

/// The vector of singleton cardinalities of a word list, plus its
/// normalization by the largest entry `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorShade {
    pub entries: Vec<ShadeEntry>,
    pub z: u64,
}

impl MirrorShade {
    /// The word-to-entry map `g`.
    pub fn entry(&self, word: &str) -> Option<&ShadeEntry> {
        self.entries.iter().find(|e| e.word == word)
    }

    pub fn raws(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.raw).collect()
    }

    pub fn normalized(&self) -> Vec<&Rational> {
        self.entries.iter().map(|e| &e.normalized).collect()
    }

    /// Entries for `words`, in that order; `None` if any word is missing.
    pub fn restrict(&self, words: &[String]) -> Option<Vec<&ShadeEntry>> {
        let by_word: HashMap<&str, &ShadeEntry> =
            self.entries.iter().map(|e| (e.word.as_str(), e)).collect();
        words
            .iter()
            .map(|w| by_word.get(w.as_str()).copied())
            .collect()
    }
}

/// Computes the shade of `words` in the given order, with unbiased counts.
pub fn mirror_shade(words: &[String], index: &Index) -> Result<MirrorShade> {
    if words.is_empty() {
        return Err(Error::EmptyWordList);
    }
    let mut seen = HashSet::new();
    if let Some(dup) = words.iter().find(|w| !seen.insert(w.as_str())) {
        return Err(Error::InvalidGraph(format!(
            "duplicate word `{dup}` in shade input"
        )));
    }
    let raws: Vec<u64> = words
        .iter()
        .map(|w| match Term::new([w.as_str()]) {
            Ok(t) => singleton(index, &t).cardinality() as u64,
            Err(_) => 0,
        })
        .collect();
    let z = raws.iter().copied().max().unwrap_or(0);
    let entries = words
        .iter()
        .zip(raws)
        .map(|(word, raw)| ShadeEntry {
            word: word.clone(),
            raw,
            normalized: if z == 0 {
                Rational::zero()
            } else {
                ratio(raw, z)
            },
        })
        .collect();
    Ok(MirrorShade { entries, z })
}

/// Result of checking that a tree's shade is the restriction of its
/// cluster's shade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub holds: bool,
    pub tree_shade: MirrorShade,
    pub cluster_shade: MirrorShade,
    /// The cluster's normalized values restricted to the tree words, in tree
    /// word order. These keep the cluster's `z`, unlike `tree_shade`.
    pub inherited_normalized: Vec<Rational>,
}

fn ensure_subcluster(tree: &TreeCluster, full: &MicroCluster) -> Result<()> {
    let words: HashSet<&str> = full.words.iter().map(String::as_str).collect();
    if let Some(w) = tree.words.iter().find(|w| !words.contains(w.as_str())) {
        return Err(Error::NotASubcluster(format!(
            "word `{w}` is not in the cluster"
        )));
    }
    if let Some(v) = tree
        .vertices
        .iter()
        .find(|v| full.graph.vertex(v).is_none())
    {
        return Err(Error::NotASubcluster(format!(
            "vertex `{v}` is not in the cluster"
        )));
    }
    for e in &tree.edges {
        let (x, y) = (
            tree.vertices
                .get(e.a)
                .ok_or_else(|| Error::NotASubcluster("dangling edge".into()))?,
            tree.vertices
                .get(e.b)
                .ok_or_else(|| Error::NotASubcluster("dangling edge".into()))?,
        );
        if full.graph.weight(x, y) != Some(&e.weight) {
            return Err(Error::NotASubcluster(format!(
                "edge `{x}`-`{y}` is not a cluster edge"
            )));
        }
    }
    Ok(())
}

/// Computes both shades and compares raw values entry by entry.
pub fn theorem_check(
    tree: &TreeCluster,
    full: &MicroCluster,
    index: &Index,
) -> Result<TheoremCheck> {
    ensure_subcluster(tree, full)?;
    let tree_shade = mirror_shade(&tree.words, index)?;
    let cluster_shade = mirror_shade(&full.words, index)?;
    let restricted = cluster_shade
        .restrict(&tree.words)
        .ok_or_else(|| Error::NotASubcluster("tree word missing from cluster shade".into()))?;
    let distinct: HashSet<&str> = tree_shade.entries.iter().map(|e| e.word.as_str()).collect();
    let one_to_one =
        distinct.len() == tree.words.len() && tree_shade.entries.len() == tree.words.len();
    let raws_match = tree_shade
        .entries
        .iter()
        .zip(&restricted)
        .all(|(t, f)| t.word == f.word && t.raw == f.raw);
    let inherited_normalized = restricted.iter().map(|e| e.normalized.clone()).collect();
    Ok(TheoremCheck {
        holds: one_to_one && raws_match && restricted.len() == tree_shade.entries.len(),
        tree_shade,
        cluster_shade,
        inherited_normalized,
    })
}

/// True iff the tree's shade equals the restriction of the cluster's shade
/// on raw values and the word-to-entry map stays one-one.
pub fn verify_theorem(tree: &TreeCluster, full: &MicroCluster, index: &Index) -> Result<bool> {
    theorem_check(tree, full, index).map(|c| c.holds)
}
