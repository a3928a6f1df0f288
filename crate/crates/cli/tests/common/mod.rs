//! Corpus generators and brute-force oracles shared by the CLI test targets.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const ALPHABET: [&str; 8] = ["ant", "bee", "cat", "dog", "eel", "fox", "gnu", "hen"];

pub type Corpus = Vec<(String, String)>;

/// Up to `max_docs` documents of up to `max_tokens` words from [`ALPHABET`].
pub fn small_corpus(rng: &mut ChaCha8Rng, max_docs: usize, max_tokens: usize) -> Corpus {
    let docs = rng.gen_range(1..=max_docs);
    (0..docs)
        .map(|i| {
            let len = rng.gen_range(0..=max_tokens);
            let words: Vec<&str> = (0..len)
                .map(|_| ALPHABET[rng.gen_range(0..ALPHABET.len())])
                .collect();
            (format!("d{i:02}"), words.join(" "))
        })
        .collect()
}

/// Zipf-like synthetic text: word of rank r drawn with weight 1/(r+1).
pub fn synthetic_corpus(rng: &mut ChaCha8Rng, docs: usize, tokens: usize, vocab: usize) -> Corpus {
    let mut cumulative = Vec::with_capacity(vocab);
    let mut acc = 0.0;
    for r in 0..vocab {
        acc += 1.0 / (r as f64 + 1.0);
        cumulative.push(acc);
    }
    (0..docs)
        .map(|i| {
            let len = rng.gen_range(tokens * 3 / 4..=tokens * 5 / 4);
            let words: Vec<String> = (0..len)
                .map(|_| {
                    let u = rng.gen_range(0.0..acc);
                    let r = cumulative.partition_point(|&c| c < u).min(vocab - 1);
                    format!("w{r}")
                })
                .collect();
            let mut text = words.join(" ");
            text.push('.');
            (format!("doc{i:04}"), text)
        })
        .collect()
}

pub fn write_jsonl(path: &Path, corpus: &Corpus) {
    let mut out = String::new();
    for (id, text) in corpus {
        out.push_str(&serde_json::json!({ "id": id, "text": text }).to_string());
        out.push('\n');
    }
    fs::write(path, out).unwrap();
}

pub fn write_txt_dir(dir: &Path, corpus: &Corpus) {
    fs::create_dir_all(dir).unwrap();
    for (id, text) in corpus {
        fs::write(dir.join(format!("{id}.txt")), text).unwrap();
    }
}

pub fn words(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|s| !s.is_empty())
        .map(|s| s.to_lowercase())
        .collect()
}

fn matches_at(tokens: &[String], at: usize, pattern: &[String]) -> bool {
    if at + pattern.len() > tokens.len() {
        return false;
    }
    (0..pattern.len()).all(|j| tokens[at + j] == pattern[j])
}

/// Ids of documents containing `pattern` as a contiguous run.
pub fn brute_singleton(corpus: &Corpus, pattern: &[String]) -> BTreeSet<String> {
    corpus
        .iter()
        .filter(|(_, text)| {
            let toks = words(text);
            (0..toks.len()).any(|i| matches_at(&toks, i, pattern))
        })
        .map(|(id, _)| id.clone())
        .collect()
}

/// Snippet word lists, ordered by document id then occurrence.
pub fn brute_snippets(
    corpus: &Corpus,
    pattern: &[String],
    window: usize,
    limit: usize,
) -> Vec<Vec<String>> {
    let mut sorted: Vec<&(String, String)> = corpus.iter().collect();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out = Vec::new();
    for (_, text) in sorted {
        let toks = words(text);
        let mut taken = 0;
        for i in 0..toks.len() {
            if taken == limit {
                break;
            }
            if matches_at(&toks, i, pattern) {
                let lo = i.saturating_sub(window);
                let hi = std::cmp::min(toks.len(), i + pattern.len() + window);
                out.push(toks[lo..hi].to_vec());
                taken += 1;
            }
        }
    }
    out
}

pub fn contains(snippet: &[String], pattern: &[String]) -> bool {
    (0..snippet.len()).any(|i| matches_at(snippet, i, pattern))
}

pub fn count(snippet: &[String], word: &str) -> usize {
    snippet.iter().filter(|w| *w == word).count()
}

/// Heaviest spanning tree of `K_n` by enumerating all `n^(n-2)` Prüfer codes.
pub fn cayley_max(n: usize, weight: &dyn Fn(usize, usize) -> u64) -> u64 {
    if n < 2 {
        return 0;
    }
    if n == 2 {
        return weight(0, 1);
    }
    let mut best = 0;
    for code in 0..n.pow((n - 2) as u32) {
        let mut seq = Vec::with_capacity(n - 2);
        let mut c = code;
        for _ in 0..n - 2 {
            seq.push(c % n);
            c /= n;
        }
        let mut degree = vec![1; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut total = 0;
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            total += weight(leaf, s);
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        total += weight(rest[0], rest[1]);
        best = best.max(total);
    }
    best
}

/// Relative error, exact zero required when the reference is zero.
pub fn rel_err(got: f64, expected: f64) -> f64 {
    if expected == 0.0 {
        got.abs()
    } else {
        (got - expected).abs() / expected.abs()
    }
}

/// Every file of a pipeline output directory, by name.
pub fn read_bundle(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let path = e.unwrap().path();
            (
                path.file_name().unwrap().to_string_lossy().into_owned(),
                fs::read(&path).unwrap(),
            )
        })
        .collect();
    files.sort();
    files
}
