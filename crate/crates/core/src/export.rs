//! JSON and DOT renderings of every artifact.
//!
//! JSON keys appear in declaration order of the view structs below, and all
//! rationals are strings with twelve significant digits, so equal inputs
//! always produce byte-identical documents.

use std::fmt::Write as _;

use serde::Serialize;

use crate::microcluster::{MirrorShade, TreeCluster, WeightedEdge, WordGraph};
use crate::rational::{format_rational, Rational};
use crate::snippets::SnippetList;
use crate::triplet::Context;

pub fn decimal(value: &Rational) -> String {
    format_rational(value)
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("artifact views are serializable");
    out.push('\n');
    out
}

#[derive(Serialize)]
pub struct SnippetView<'a> {
    pub doc_id: &'a str,
    pub words: &'a [String],
    pub term_spans: &'a [(usize, usize)],
}

#[derive(Serialize)]
pub struct SnippetListView<'a> {
    pub term: String,
    pub snippets: Vec<SnippetView<'a>>,
}

impl<'a> From<&'a SnippetList> for SnippetListView<'a> {
    fn from(list: &'a SnippetList) -> Self {
        SnippetListView {
            term: list.term.to_string(),
            snippets: list
                .snippets
                .iter()
                .map(|s| SnippetView {
                    doc_id: &s.doc_id,
                    words: &s.words,
                    term_spans: &s.term_spans,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct WordStatView<'a> {
    pub word: &'a str,
    pub nu: String,
    pub mu: u64,
}

#[derive(Serialize)]
pub struct ContextView<'a> {
    pub term: String,
    pub words: Vec<WordStatView<'a>>,
    pub nu_order: &'a [String],
    pub mu_order: &'a [String],
}

impl<'a> From<&'a Context> for ContextView<'a> {
    fn from(ctx: &'a Context) -> Self {
        ContextView {
            term: ctx.term.to_string(),
            words: ctx
                .words
                .values()
                .map(|s| WordStatView {
                    word: &s.word,
                    nu: decimal(&s.nu),
                    mu: s.mu,
                })
                .collect(),
            nu_order: &ctx.nu_order,
            mu_order: &ctx.mu_order,
        }
    }
}

#[derive(Serialize)]
pub struct EdgeView<'a> {
    pub a: &'a str,
    pub b: &'a str,
    pub weight: String,
}

#[derive(Serialize)]
pub struct GraphView<'a> {
    pub vertices: &'a [String],
    pub edges: Vec<EdgeView<'a>>,
}

impl<'a> GraphView<'a> {
    fn build(vertices: &'a [String], edges: &'a [WeightedEdge]) -> Self {
        GraphView {
            vertices,
            edges: edges
                .iter()
                .map(|e| EdgeView {
                    a: &vertices[e.a],
                    b: &vertices[e.b],
                    weight: decimal(&e.weight),
                })
                .collect(),
        }
    }
}

impl<'a> From<&'a WordGraph> for GraphView<'a> {
    fn from(g: &'a WordGraph) -> Self {
        GraphView::build(g.vertices(), g.edges())
    }
}

impl<'a> From<&'a TreeCluster> for GraphView<'a> {
    fn from(t: &'a TreeCluster) -> Self {
        GraphView::build(&t.vertices, &t.edges)
    }
}

#[derive(Serialize)]
pub struct ShadeEntryView<'a> {
    pub word: &'a str,
    pub raw: u64,
    pub normalized: String,
}

#[derive(Serialize)]
pub struct ShadeView<'a> {
    pub entries: Vec<ShadeEntryView<'a>>,
    pub z: u64,
}

impl<'a> From<&'a MirrorShade> for ShadeView<'a> {
    fn from(s: &'a MirrorShade) -> Self {
        ShadeView {
            entries: s
                .entries
                .iter()
                .map(|e| ShadeEntryView {
                    word: &e.word,
                    raw: e.raw,
                    normalized: decimal(&e.normalized),
                })
                .collect(),
            z: s.z,
        }
    }
}

pub fn snippets_json(list: &SnippetList) -> String {
    to_json(&SnippetListView::from(list))
}

pub fn context_json(ctx: &Context) -> String {
    to_json(&ContextView::from(ctx))
}

pub fn graph_json(graph: &WordGraph) -> String {
    to_json(&GraphView::from(graph))
}

pub fn tree_json(tree: &TreeCluster) -> String {
    to_json(&GraphView::from(tree))
}

pub fn shade_json(shade: &MirrorShade) -> String {
    to_json(&ShadeView::from(shade))
}

fn quote(word: &str) -> String {
    format!("\"{}\"", word.replace('\\', "\\\\").replace('"', "\\\""))
}

fn dot(name: &str, vertices: &[String], edges: &[WeightedEdge]) -> String {
    let quoted: Vec<String> = vertices.iter().map(|v| quote(v)).collect();
    let mut out = format!("graph {name} {{\n");
    for v in &quoted {
        let _ = writeln!(out, "  {v};");
    }
    for e in edges {
        let weight = crate::rational::to_f64(&e.weight);
        let _ = writeln!(
            out,
            "  {} -- {} [label=\"{weight:.6}\"];",
            quoted[e.a], quoted[e.b]
        );
    }
    out.push_str("}\n");
    out
}

/// DOT with one `label` per edge carrying the weight to six decimals.
pub fn graph_dot(name: &str, graph: &WordGraph) -> String {
    dot(name, graph.vertices(), graph.edges())
}

pub fn tree_dot(name: &str, tree: &TreeCluster) -> String {
    dot(name, &tree.vertices, &tree.edges)
}
