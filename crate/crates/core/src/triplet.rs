//! Term–snippet–word probabilities and the two-vector word context.
//!
//! Every snippet `S_i` contributes with its own length `max_i`, and `m` is
//! the number of times a word occurs inside that snippet.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::engine::{singleton, Index, Term};
use crate::error::{Error, Result};
use crate::rational::{half, ratio, Rational};
use crate::snippets::{Snippet, SnippetList};

fn nonempty(snippet: &Snippet) -> Result<usize> {
    match snippet.len() {
        0 => Err(Error::EmptySnippet(snippet.doc_id.clone())),
        len => Ok(len),
    }
}

fn occurrences(word: &str, snippet: &Snippet) -> u64 {
    snippet.words.iter().filter(|w| w.as_str() == word).count() as u64
}

/// 1/2 when the term occurs in the snippet, otherwise 0.
pub fn p_term_snippet(term: &Term, snippet: &Snippet) -> Rational {
    if snippet.contains(term) {
        half()
    } else {
        Rational::zero()
    }
}

/// Mean of [`p_term_snippet`] over the list.
pub fn p_term_list(term: &Term, list: &SnippetList) -> Result<Rational> {
    if list.is_empty() {
        return Err(Error::EmptySnippetList);
    }
    let total: Rational = list.snippets.iter().map(|s| p_term_snippet(term, s)).sum();
    Ok(total / Rational::from_integer(BigInt::from(list.n())))
}

/// `m / max` for one snippet.
pub fn p_snippet_word(word: &str, snippet: &Snippet) -> Result<Rational> {
    let len = nonempty(snippet)?;
    Ok(ratio(occurrences(word, snippet), len as u64))
}

/// `Σ_i m_i / max_i`. Not bounded by 1: a word filling all `n` snippets scores `n`.
pub fn p_list_word(word: &str, list: &SnippetList) -> Result<Rational> {
    list.snippets.iter().map(|s| p_snippet_word(word, s)).sum()
}

/// `(m / max) / 2` when the term occurs in the snippet, otherwise 0.
pub fn p_term_word(term: &Term, word: &str, snippet: &Snippet) -> Result<Rational> {
    let p = p_snippet_word(word, snippet)?;
    Ok(if snippet.contains(term) {
        p / BigInt::from(2)
    } else {
        Rational::zero()
    })
}

/// The word weight `ν = Σ_i m_i / (2 max_i)`.
pub fn word_weight(word: &str, list: &SnippetList) -> Result<Rational> {
    list.snippets
        .iter()
        .map(|s| {
            let len = nonempty(s)?;
            Ok(ratio(occurrences(word, s), 2 * len as u64))
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordStat {
    pub word: String,
    /// Snippet-derived weight.
    pub nu: Rational,
    /// Singleton cardinality `|Ω_word|`.
    pub mu: u64,
}

/// A word set with its `ν` and `μ` vectors, each sorted descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context {
    pub term: Term,
    pub words: BTreeMap<String, WordStat>,
    pub nu_order: Vec<String>,
    pub mu_order: Vec<String>,
}

impl Context {
    /// Assembles a context from precomputed stats. Ties in either order are
    /// broken by ascending word.
    pub fn from_stats(term: Term, stats: impl IntoIterator<Item = WordStat>) -> Result<Self> {
        let words: BTreeMap<String, WordStat> =
            stats.into_iter().map(|s| (s.word.clone(), s)).collect();
        if words.is_empty() {
            return Err(Error::EmptyContext);
        }
        // BTreeMap iteration is already ascending, and sort_by is stable.
        let mut nu_order: Vec<String> = words.keys().cloned().collect();
        nu_order.sort_by(|a, b| words[b].nu.cmp(&words[a].nu));
        let mut mu_order: Vec<String> = words.keys().cloned().collect();
        mu_order.sort_by(|a, b| words[b].mu.cmp(&words[a].mu));
        Ok(Context {
            term,
            words,
            nu_order,
            mu_order,
        })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn nu(&self, word: &str) -> Option<&Rational> {
        self.words.get(word).map(|s| &s.nu)
    }

    pub fn mu(&self, word: &str) -> Option<u64> {
        self.words.get(word).map(|s| s.mu)
    }

    /// `[ν_i, …, ν_j]`, non-increasing.
    pub fn nu_vector(&self) -> Vec<&Rational> {
        self.nu_order.iter().map(|w| &self.words[w].nu).collect()
    }

    /// `[μ_i, …, μ_j]`, non-increasing.
    pub fn mu_vector(&self) -> Vec<u64> {
        self.mu_order.iter().map(|w| self.words[w].mu).collect()
    }
}

/// Collects every distinct non-stopword token of the snippet list, weighting
/// each with [`word_weight`] and its singleton cardinality in `index`.
pub fn build_context(
    list: &SnippetList,
    index: &Index,
    stopwords: &HashSet<String>,
) -> Result<Context> {
    if list.is_empty() {
        return Err(Error::EmptySnippetList);
    }
    // word -> (snippet length -> summed occurrence count)
    let mut counts: HashMap<&str, BTreeMap<usize, u64>> = HashMap::new();
    for snippet in &list.snippets {
        let len = nonempty(snippet)?;
        for word in &snippet.words {
            if stopwords.contains(word) {
                continue;
            }
            *counts.entry(word).or_default().entry(len).or_default() += 1;
        }
    }
    let stats = counts.into_iter().map(|(word, by_len)| {
        let nu = by_len
            .into_iter()
            .map(|(len, m)| ratio(m, 2 * len as u64))
            .sum();
        let mu = match Term::new([word]) {
            Ok(t) => singleton(index, &t).cardinality() as u64,
            Err(_) => 0,
        };
        WordStat {
            word: word.to_string(),
            nu,
            mu,
        }
    });
    Context::from_stats(list.term.clone(), stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::build_index;
    use crate::rational::integer;
    use crate::snippets::extract_snippets;

    fn snip(s: &str) -> Snippet {
        Snippet::new("d", s.split_whitespace().map(String::from).collect())
    }

    fn term(s: &str) -> Term {
        Term::parse(s).unwrap()
    }

    #[test]
    fn term_snippet_gate() {
        assert_eq!(p_term_snippet(&term("b"), &snip("a b c")), half());
        assert_eq!(p_term_snippet(&term("z"), &snip("a b c")), Rational::zero());
        assert_eq!(p_term_snippet(&term("b c"), &snip("a b c")), half());
        assert_eq!(
            p_term_snippet(&term("c b"), &snip("a b c")),
            Rational::zero()
        );
    }

    #[test]
    fn term_list_mean() {
        let t = term("x");
        let all = SnippetList::new(
            t.clone(),
            vec![snip("x"), snip("a x"), snip("x b"), snip("x x")],
        );
        assert_eq!(p_term_list(&t, &all).unwrap(), half());
        let one_of_two = SnippetList::new(t.clone(), vec![snip("x a"), snip("a b")]);
        assert_eq!(p_term_list(&t, &one_of_two).unwrap(), ratio(1, 4));
        let single = SnippetList::new(t.clone(), vec![snip("x")]);
        assert_eq!(p_term_list(&t, &single).unwrap(), half());
        let empty = SnippetList::new(t.clone(), vec![]);
        assert!(matches!(
            p_term_list(&t, &empty),
            Err(Error::EmptySnippetList)
        ));
    }

    #[test]
    fn snippet_word_count_and_divide() {
        assert_eq!(
            p_snippet_word("z", &snip("b c b")).unwrap(),
            Rational::zero()
        );
        assert_eq!(p_snippet_word("b", &snip("b c b")).unwrap(), ratio(2, 3));
        assert_eq!(p_snippet_word("w", &snip("w")).unwrap(), integer(1));
        assert!(matches!(
            p_snippet_word("w", &snip("")),
            Err(Error::EmptySnippet(_))
        ));
    }

    #[test]
    fn list_word_sums() {
        let t = term("t");
        let none = SnippetList::new(t.clone(), vec![snip("a b"), snip("c")]);
        assert_eq!(p_list_word("w", &none).unwrap(), Rational::zero());
        let thirds = SnippetList::new(t.clone(), vec![snip("w a b"), snip("c w d")]);
        assert_eq!(p_list_word("w", &thirds).unwrap(), ratio(2, 3));
        let full = SnippetList::new(t.clone(), vec![snip("w w"), snip("w"), snip("w w w")]);
        assert_eq!(p_list_word("w", &full).unwrap(), integer(3));
        let bad = SnippetList::new(t, vec![snip("w"), snip("")]);
        assert!(p_list_word("w", &bad).is_err());
        assert!(word_weight("w", &bad).is_err());
    }

    #[test]
    fn term_word_gate() {
        let t = term("t");
        assert_eq!(
            p_term_word(&t, "w", &snip("w w a b")).unwrap(),
            Rational::zero()
        );
        assert_eq!(p_term_word(&t, "w", &snip("w t w b")).unwrap(), ratio(1, 4));
        assert_eq!(
            p_term_word(&t, "z", &snip("t a")).unwrap(),
            Rational::zero()
        );
    }

    #[test]
    fn word_weight_values() {
        let t = term("t");
        let none = SnippetList::new(t.clone(), vec![snip("t a")]);
        assert_eq!(word_weight("w", &none).unwrap(), Rational::zero());
        let ten = SnippetList::new(t, vec![snip("w t a b c d e f g h")]);
        assert_eq!(word_weight("w", &ten).unwrap(), ratio(1, 20));
    }

    #[test]
    fn context_two_word_snippet() {
        let index = build_index([("d1", "x y"), ("d2", "q r")]).unwrap();
        let list = extract_snippets(&index, &term("x"), 5, 3).unwrap();
        let ctx = build_context(&list, &index, &HashSet::new()).unwrap();
        assert_eq!(ctx.len(), 2);
        assert_eq!(ctx.nu("x"), Some(&ratio(1, 4)));
        assert_eq!(ctx.nu("y"), Some(&ratio(1, 4)));
        assert_eq!(ctx.mu("x"), Some(1));
        assert_eq!(ctx.nu_order, ["x", "y"]);
    }

    #[test]
    fn context_rejects_empty_inputs() {
        let index = build_index([("d1", "x y")]).unwrap();
        let list = extract_snippets(&index, &term("x"), 5, 3).unwrap();
        let all: HashSet<String> = ["x", "y"].into_iter().map(String::from).collect();
        assert!(matches!(
            build_context(&list, &index, &all),
            Err(Error::EmptyContext)
        ));
        let empty = SnippetList::new(term("x"), vec![]);
        assert!(matches!(
            build_context(&empty, &index, &HashSet::new()),
            Err(Error::EmptySnippetList)
        ));
    }

    #[test]
    fn context_orders_are_sorted_permutations() {
        let index = build_index([
            ("d1", "t a a b c"),
            ("d2", "b b t c"),
            ("d3", "c c c"),
            ("d4", "a"),
        ])
        .unwrap();
        let list = extract_snippets(&index, &term("t"), 4, 3).unwrap();
        let ctx = build_context(&list, &index, &HashSet::new()).unwrap();
        let mut a = ctx.nu_order.clone();
        let mut b = ctx.mu_order.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert!(ctx.nu_vector().windows(2).all(|w| w[0] >= w[1]));
        assert!(ctx.mu_vector().windows(2).all(|w| w[0] >= w[1]));
        // mu of c is 3, a and b tie at 2 and sort by word
        assert_eq!(ctx.mu_order, ["c", "a", "b", "t"]);
        for w in ctx.words.keys() {
            assert_eq!(ctx.nu(w).unwrap(), &word_weight(w, &list).unwrap());
        }
    }

    #[test]
    fn stopwords_are_dropped() {
        let index = build_index([("d1", "the t of z")]).unwrap();
        let list = extract_snippets(&index, &term("t"), 5, 3).unwrap();
        let stop: HashSet<String> = ["the", "of"].into_iter().map(String::from).collect();
        let ctx = build_context(&list, &index, &stop).unwrap();
        assert_eq!(ctx.words.keys().collect::<Vec<_>>(), ["t", "z"]);
    }
}
