use std::fmt;

use super::tokenize::tokenize;
use crate::error::{Error, Result};

/// A search term: an ordered word pattern of `l` tokens with declared size `k >= l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    tokens: Vec<String>,
    size: usize,
}

impl Term {
    /// Builds a term whose size equals its token count.
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        let size = tokens.len();
        Self::with_size(tokens, size)
    }

    pub fn with_size(tokens: Vec<String>, size: usize) -> Result<Self> {
        if tokens.is_empty() {
            return Err(Error::InvalidTerm("a term needs at least one token".into()));
        }
        for token in &tokens {
            if token.is_empty() || token.chars().any(char::is_whitespace) {
                return Err(Error::InvalidTerm(format!("bad token `{token}`")));
            }
            if tokenize(token) != [token.as_str()] {
                return Err(Error::InvalidTerm(format!(
                    "token `{token}` is not in tokenizer normal form"
                )));
            }
        }
        if tokens.len() > size {
            return Err(Error::InvalidTerm(format!(
                "{} tokens exceed declared size {size}",
                tokens.len()
            )));
        }
        Ok(Term { tokens, size })
    }

    /// Tokenizes free text into a term.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens = tokenize(text);
        if tokens.is_empty() {
            return Err(Error::InvalidTerm(format!("`{text}` has no tokens")));
        }
        Self::new(tokens)
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    /// Number of tokens `l`.
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Declared size `k`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// True when the token pattern is equal, regardless of declared size.
    pub fn same_pattern(&self, other: &Term) -> bool {
        self.tokens == other.tokens
    }

    pub fn matches_at(&self, words: &[String], start: usize) -> bool {
        words
            .get(start..start + self.tokens.len())
            .is_some_and(|window| window == self.tokens.as_slice())
    }

    /// Start positions of every contiguous occurrence inside `words`.
    pub fn find_in(&self, words: &[String]) -> Vec<usize> {
        if words.len() < self.tokens.len() {
            return Vec::new();
        }
        (0..=words.len() - self.tokens.len())
            .filter(|&start| self.matches_at(words, start))
            .collect()
    }

    pub fn occurs_in(&self, words: &[String]) -> bool {
        words
            .windows(self.tokens.len())
            .any(|w| w == self.tokens.as_slice())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tokens.join(" "))
    }
}
