use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::engine::{singleton, EventSet, Index, Term};
use crate::error::{Error, Result};
use crate::rational::{integer, Rational};
use crate::triplet::Context;

/// How the relation strength between two words is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    /// `|Ω_i ∩ Ω_j|`.
    DoubletonCount,
    /// `|Ω_i ∩ Ω_j| / |Ω_i ∪ Ω_j|`, 0 when the union is empty.
    #[default]
    Jaccard,
}

/// An undirected edge between vertex indices `a < b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedEdge {
    pub a: usize,
    pub b: usize,
    pub weight: Rational,
}

/// Undirected weighted word graph. Vertices are kept in ascending word order,
/// and a vertex's position is its handle; edges are sorted by `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordGraph {
    vertices: Vec<String>,
    edges: Vec<WeightedEdge>,
}

impl WordGraph {
    /// Builds a graph from words and `(word, word, weight)` triples.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = String>,
        E: IntoIterator<Item = (String, String, Rational)>,
    {
        let mut vertices: Vec<String> = vertices.into_iter().collect();
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate vertex `{}`", w[0])));
        }
        let position = |word: &str| {
            vertices
                .binary_search_by(|v| v.as_str().cmp(word))
                .map_err(|_| Error::InvalidGraph(format!("edge endpoint `{word}` is not a vertex")))
        };
        let mut out = Vec::new();
        for (x, y, weight) in edges {
            let (i, j) = (position(&x)?, position(&y)?);
            if i == j {
                return Err(Error::InvalidGraph(format!("self loop on `{x}`")));
            }
            if weight.is_negative() {
                return Err(Error::InvalidGraph(format!(
                    "negative weight on `{x}`-`{y}`"
                )));
            }
            out.push(WeightedEdge {
                a: i.min(j),
                b: i.max(j),
                weight,
            });
        }
        out.sort_by_key(|e| (e.a, e.b));
        if let Some(w) = out
            .windows(2)
            .find(|w| (w[0].a, w[0].b) == (w[1].a, w[1].b))
        {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge `{}`-`{}`",
                vertices[w[0].a], vertices[w[0].b]
            )));
        }
        Ok(WordGraph {
            vertices,
            edges: out,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    pub fn vertex(&self, word: &str) -> Option<usize> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(word))
            .ok()
    }

    pub fn word(&self, vertex: usize) -> &str {
        &self.vertices[vertex]
    }

    /// Weight of the edge between two words, in either order.
    pub fn weight(&self, x: &str, y: &str) -> Option<&Rational> {
        let (i, j) = (self.vertex(x)?, self.vertex(y)?);
        let key = (i.min(j), i.max(j));
        self.edges
            .binary_search_by_key(&key, |e| (e.a, e.b))
            .ok()
            .map(|at| &self.edges[at].weight)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertices.len();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    /// The subgraph induced on `keep`; words not in the graph are ignored.
    pub fn induced(&self, keep: &HashSet<&str>) -> WordGraph {
        let mut remap = vec![None; self.vertices.len()];
        let mut vertices = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if keep.contains(v.as_str()) {
                remap[i] = Some(vertices.len());
                vertices.push(v.clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                Some(WeightedEdge {
                    a: remap[e.a]?,
                    b: remap[e.b]?,
                    weight: e.weight.clone(),
                })
            })
            .collect();
        WordGraph { vertices, edges }
    }

    pub fn total_weight(&self) -> Rational {
        self.edges.iter().map(|e| &e.weight).sum()
    }
}

/// The complete graph over the context words, weighted by `measure` on their
/// unbiased singleton event sets.
pub fn build_word_graph(ctx: &Context, index: &Index, measure: Measure) -> WordGraph {
    let vertices: Vec<String> = ctx.words.keys().cloned().collect();
    let events: Vec<EventSet> = vertices
        .iter()
        .map(|w| match Term::new([w.as_str()]) {
            Ok(t) => singleton(index, &t),
            Err(_) => EventSet::empty(),
        })
        .collect();
    let n = vertices.len();
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let both = events[i].intersection_len(&events[j]) as u64;
            let weight = match measure {
                Measure::DoubletonCount => integer(both),
                Measure::Jaccard => {
                    let either = (events[i].cardinality() + events[j].cardinality()) as u64 - both;
                    if either == 0 {
                        Rational::zero()
                    } else {
                        let g = both.gcd(&either);
                        Rational::new_raw(BigInt::from(both / g), BigInt::from(either / g))
                    }
                }
            };
            edges.push(WeightedEdge { a: i, b: j, weight });
        }
    }
    WordGraph { vertices, edges }
}

/// `G′`: the complete graph on every word whose weight clears `alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MicroCluster {
    pub graph: WordGraph,
    /// Retained words, `ν` descending (ties ascending by word).
    pub words: Vec<String>,
    pub alpha: Rational,
}

impl MicroCluster {
    /// Treats every vertex of `graph` as retained, in ascending word order.
    pub fn from_graph(graph: WordGraph, alpha: Rational) -> Self {
        let words = graph.vertices.clone();
        MicroCluster {
            graph,
            words,
            alpha,
        }
    }

    /// No word survived the threshold.
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Keeps exactly the words with `ν >= alpha` and the subgraph they induce.
pub fn micro_cluster(graph: &WordGraph, ctx: &Context, alpha: &Rational) -> Result<MicroCluster> {
    if alpha.is_negative() {
        return Err(Error::NegativeAlpha(alpha.to_string()));
    }
    let words: Vec<String> = ctx
        .nu_order
        .iter()
        .filter(|w| ctx.words[*w].nu >= *alpha && graph.vertex(w).is_some())
        .cloned()
        .collect();
    let keep: HashSet<&str> = words.iter().map(String::as_str).collect();
    Ok(MicroCluster {
        graph: graph.induced(&keep),
        words,
        alpha: alpha.clone(),
    })
}
