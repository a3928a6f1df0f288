//! Run configuration: an optional JSON config file overlaid by flags.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context as _, Result};
use clap::{Args, ValueEnum};
use searchshade::engine::corpus::CorpusFormat;
use searchshade::rational::parse_rational;
use searchshade::{tokenize, BiasConfig, BiasMode, Measure, Rational, MAX_WINDOW};
use serde::Deserialize;

#[derive(Debug, Clone, Copy, ValueEnum, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormatArg {
    TxtDir,
    Jsonl,
}

#[derive(Debug, Clone, Copy, ValueEnum, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureArg {
    DoubletonCount,
    Jaccard,
}

#[derive(Debug, Clone, Copy, ValueEnum, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BiasModeArg {
    None,
    Additive,
    Multiplicative,
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// JSON config file; explicit flags override its values
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Corpus directory (txt-dir) or JSON-lines file (jsonl)
    #[arg(long, global = true)]
    pub corpus: Option<PathBuf>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<FormatArg>,
    /// Words kept on each side of a term occurrence, 1..=50
    #[arg(long, global = true)]
    pub window: Option<usize>,
    /// Snippets kept per document
    #[arg(long, global = true)]
    pub limit: Option<usize>,
    /// File of stopwords, tokenized like the corpus
    #[arg(long, global = true)]
    pub stopwords: Option<PathBuf>,
    /// Micro-cluster threshold, decimal or fraction (e.g. 0.05 or 1/20)
    #[arg(long, global = true)]
    pub alpha: Option<String>,
    #[arg(long, value_enum, global = true)]
    pub measure: Option<MeasureArg>,
    #[arg(long = "bias-mode", value_enum, global = true)]
    pub bias_mode: Option<BiasModeArg>,
    #[arg(long = "bias-magnitude", global = true)]
    pub bias_magnitude: Option<f64>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Output file (directory for `pipeline`); standard output when absent
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    corpus: Option<PathBuf>,
    format: Option<FormatArg>,
    window: Option<usize>,
    #[serde(alias = "per_doc_limit")]
    limit: Option<usize>,
    stopwords: Option<PathBuf>,
    alpha: Option<serde_json::Value>,
    measure: Option<MeasureArg>,
    bias_mode: Option<BiasModeArg>,
    bias_magnitude: Option<f64>,
    seed: Option<u64>,
    out: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub corpus_path: PathBuf,
    pub corpus_format: CorpusFormat,
    pub window: usize,
    pub per_doc_limit: usize,
    pub stopwords: HashSet<String>,
    pub alpha: Rational,
    pub measure: Measure,
    pub bias: BiasConfig,
    pub output: Option<PathBuf>,
}

fn alpha_from_json(value: &serde_json::Value) -> Result<String> {
    match value {
        serde_json::Value::String(s) => Ok(s.clone()),
        // the number's own text, so 0.1 stays exactly 1/10
        serde_json::Value::Number(n) => Ok(n.to_string()),
        other => bail!("alpha must be a number or string, got {other}"),
    }
}

/// Paths inside a config file are relative to the file's directory.
fn relative_to(base: Option<&Path>, path: PathBuf) -> PathBuf {
    match base {
        Some(dir) if path.is_relative() => dir.join(path),
        _ => path,
    }
}

impl RunConfig {
    pub fn resolve(flags: &Flags) -> Result<Self> {
        let (file, base) = match &flags.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading config {}", path.display()))?;
                let file: FileConfig = serde_json::from_str(&text)
                    .with_context(|| format!("parsing config {}", path.display()))?;
                (file, path.parent().map(Path::to_path_buf))
            }
            None => (FileConfig::default(), None),
        };
        let base = base.as_deref();

        let corpus_path = match (&flags.corpus, file.corpus) {
            (Some(p), _) => p.clone(),
            (None, Some(p)) => relative_to(base, p),
            (None, None) => bail!("no corpus given (use --corpus or a config file)"),
        };
        let corpus_format = match flags.format.or(file.format) {
            Some(FormatArg::Jsonl) => CorpusFormat::Jsonl,
            Some(FormatArg::TxtDir) => CorpusFormat::TxtDir,
            None if corpus_path.extension().is_some_and(|e| e == "jsonl") => CorpusFormat::Jsonl,
            None => CorpusFormat::TxtDir,
        };
        let window = flags.window.or(file.window).unwrap_or(10);
        if !(1..=MAX_WINDOW).contains(&window) {
            bail!("--window {window} is outside [1, {MAX_WINDOW}]");
        }
        let per_doc_limit = flags
            .limit
            .or(file.limit)
            .unwrap_or(searchshade::DEFAULT_PER_DOC_LIMIT);
        if per_doc_limit == 0 {
            bail!("--limit must be at least 1");
        }
        let stopwords = match (&flags.stopwords, file.stopwords) {
            (Some(p), _) => Some(p.clone()),
            (None, Some(p)) => Some(relative_to(base, p)),
            (None, None) => None,
        };
        let stopwords = match stopwords {
            Some(path) => {
                let text = fs::read_to_string(&path)
                    .with_context(|| format!("reading stopwords {}", path.display()))?;
                tokenize(&text).into_iter().collect()
            }
            None => HashSet::new(),
        };
        let alpha_text = match (&flags.alpha, &file.alpha) {
            (Some(a), _) => a.clone(),
            (None, Some(v)) => alpha_from_json(v)?,
            (None, None) => "0".to_string(),
        };
        let alpha = parse_rational(&alpha_text)?;
        if alpha < Rational::from_integer(0.into()) {
            bail!("--alpha must be non-negative, got {alpha_text}");
        }
        let measure = match flags.measure.or(file.measure) {
            Some(MeasureArg::DoubletonCount) => Measure::DoubletonCount,
            Some(MeasureArg::Jaccard) | None => Measure::Jaccard,
        };
        let mode = match flags.bias_mode.or(file.bias_mode) {
            Some(BiasModeArg::Additive) => BiasMode::Additive,
            Some(BiasModeArg::Multiplicative) => BiasMode::Multiplicative,
            Some(BiasModeArg::None) | None => BiasMode::None,
        };
        let magnitude = flags.bias_magnitude.or(file.bias_magnitude).unwrap_or(0.0);
        if !(magnitude.is_finite() && magnitude >= 0.0) {
            bail!("--bias-magnitude must be a non-negative number");
        }
        let seed = flags.seed.or(file.seed).unwrap_or(0);
        let output = match (&flags.out, file.out) {
            (Some(p), _) => Some(p.clone()),
            (None, Some(p)) => Some(relative_to(base, p)),
            (None, None) => None,
        };
        Ok(RunConfig {
            corpus_path,
            corpus_format,
            window,
            per_doc_limit,
            stopwords,
            alpha,
            measure,
            bias: BiasConfig::new(mode, magnitude, seed),
            output,
        })
    }
}
