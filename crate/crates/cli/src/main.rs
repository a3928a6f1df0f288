use std::fs;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use clap::{Parser, Subcommand};
use searchshade::engine::corpus::load_corpus;
use searchshade::export::{self, decimal, GraphView, ShadeView};
use searchshade::pipeline::{run_pipeline, PipelineConfig};
use searchshade::rational::format_f64;
use searchshade::{
    build_context, build_index, build_word_graph, doubleton, extract_snippets, hit_count,
    micro_cluster, mirror_shade, optimal_micro_cluster, singleton, EventSet, Index, Term,
};
use serde::Serialize;

mod config;

use config::{Flags, RunConfig};

/// Singleton/doubleton hit counts, snippet contexts and word micro-clusters
/// over a local corpus.
#[derive(Debug, Parser)]
#[command(name = "searchshade", version)]
struct Cli {
    #[command(flatten)]
    flags: Flags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Summarize the indexed corpus
    Index,
    /// Hit counts for one term, or two terms and their co-occurrence
    Query {
        #[arg(num_args = 1..=2, required = true)]
        terms: Vec<String>,
    },
    /// Snippet list for a term
    Snippets { term: String },
    /// Word context (nu and mu vectors) for a term
    Context { term: String },
    /// Thresholded micro-cluster and its strongest-relation tree
    Cluster { term: String },
    /// Mirror shade of the micro-cluster words
    Shade { term: String },
    /// Run every stage and write the artifact bundle into --out
    Pipeline { term: String },
}

fn load_index(config: &RunConfig) -> Result<Index> {
    let corpus = load_corpus(&config.corpus_path, config.corpus_format)?;
    Ok(build_index(corpus)?)
}

fn emit(config: &RunConfig, contents: &str) -> Result<()> {
    match &config.output {
        Some(path) => {
            fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(contents.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

#[derive(Serialize)]
struct IndexSummary {
    documents: usize,
    unique_tokens: usize,
    total_tokens: usize,
}

#[derive(Serialize)]
struct Count {
    term: String,
    count: usize,
    hit_count: String,
}

#[derive(Serialize)]
struct PairCount {
    count: usize,
    hit_count: String,
}

#[derive(Serialize)]
struct QueryReport {
    singletons: Vec<Count>,
    doubleton: Option<PairCount>,
}

#[derive(Serialize)]
struct ClusterReport<'a> {
    term: String,
    alpha: String,
    words: &'a [String],
    graph: GraphView<'a>,
    tree: Option<GraphView<'a>>,
}

fn pipeline_config(config: &RunConfig) -> PipelineConfig {
    PipelineConfig {
        window: config.window,
        per_doc_limit: config.per_doc_limit,
        alpha: config.alpha.clone(),
        measure: config.measure,
        stopwords: config.stopwords.clone(),
    }
}

fn run(cli: Cli) -> Result<()> {
    let config = RunConfig::resolve(&cli.flags)?;
    let index = load_index(&config)?;
    match cli.command {
        Command::Index => emit(
            &config,
            &export::to_json(&IndexSummary {
                documents: index.universe_size(),
                unique_tokens: index.unique_tokens(),
                total_tokens: index.total_tokens(),
            }),
        ),
        Command::Query { terms } => {
            let terms: Vec<Term> = terms
                .iter()
                .map(|t| Term::parse(t))
                .collect::<Result<_, _>>()?;
            let count = |e: &EventSet| (e.cardinality(), format_f64(hit_count(e, &config.bias)));
            let singletons = terms
                .iter()
                .map(|t| {
                    let (count, hit_count) = count(&singleton(&index, t));
                    Count {
                        term: t.to_string(),
                        count,
                        hit_count,
                    }
                })
                .collect();
            let doubleton = match terms.as_slice() {
                [x, y] => {
                    let (count, hit_count) = count(&doubleton(&index, x, y)?);
                    Some(PairCount { count, hit_count })
                }
                _ => None,
            };
            emit(
                &config,
                &export::to_json(&QueryReport {
                    singletons,
                    doubleton,
                }),
            )
        }
        Command::Snippets { term } => {
            let list = extract_snippets(
                &index,
                &Term::parse(&term)?,
                config.window,
                config.per_doc_limit,
            )?;
            emit(&config, &export::snippets_json(&list))
        }
        Command::Context { term } => {
            let list = extract_snippets(
                &index,
                &Term::parse(&term)?,
                config.window,
                config.per_doc_limit,
            )?;
            let ctx = build_context(&list, &index, &config.stopwords)?;
            emit(&config, &export::context_json(&ctx))
        }
        Command::Cluster { term } => {
            let term = Term::parse(&term)?;
            let list = extract_snippets(&index, &term, config.window, config.per_doc_limit)?;
            let ctx = build_context(&list, &index, &config.stopwords)?;
            let graph = build_word_graph(&ctx, &index, config.measure);
            let cluster = micro_cluster(&graph, &ctx, &config.alpha)?;
            if cluster.is_empty() {
                eprintln!("note: no word reaches alpha {}", decimal(&config.alpha));
            }
            let tree = (!cluster.is_empty())
                .then(|| optimal_micro_cluster(&cluster))
                .transpose()?;
            emit(
                &config,
                &export::to_json(&ClusterReport {
                    term: term.to_string(),
                    alpha: decimal(&cluster.alpha),
                    words: &cluster.words,
                    graph: GraphView::from(&cluster.graph),
                    tree: tree.as_ref().map(GraphView::from),
                }),
            )
        }
        Command::Shade { term } => {
            let list = extract_snippets(
                &index,
                &Term::parse(&term)?,
                config.window,
                config.per_doc_limit,
            )?;
            let ctx = build_context(&list, &index, &config.stopwords)?;
            let graph = build_word_graph(&ctx, &index, config.measure);
            let cluster = micro_cluster(&graph, &ctx, &config.alpha)?;
            let shade = mirror_shade(&cluster.words, &index)?;
            emit(&config, &export::to_json(&ShadeView::from(&shade)))
        }
        Command::Pipeline { term } => {
            let Some(dir) = &config.output else {
                bail!("pipeline needs --out <directory>");
            };
            let run = run_pipeline(&index, &Term::parse(&term)?, &pipeline_config(&config))?;
            run.write_to(dir, index.universe_size())?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
