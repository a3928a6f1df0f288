//! End-to-end run: snippets, context, word graph, micro-cluster, tree,
//! mirror shade and the restriction check, rendered as a fixed artifact set.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use num_traits::Zero;
use serde::Serialize;

use crate::engine::{Index, Term};
use crate::error::{Error, Result};
use crate::export::{self, decimal};
use crate::microcluster::{
    build_word_graph, micro_cluster, mirror_shade, optimal_micro_cluster, theorem_check, Measure,
    MicroCluster, MirrorShade, TheoremCheck, TreeCluster, WordGraph,
};
use crate::rational::Rational;
use crate::snippets::{extract_snippets, SnippetList, DEFAULT_PER_DOC_LIMIT};
use crate::triplet::{build_context, Context};

/// Artifact file names, in the order they are written.
pub const ARTIFACTS: [&str; 6] = [
    "snippets.json",
    "context.json",
    "graph.dot",
    "tree.dot",
    "shade.json",
    "report.json",
];

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub window: usize,
    pub per_doc_limit: usize,
    pub alpha: Rational,
    pub measure: Measure,
    pub stopwords: HashSet<String>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            window: 10,
            per_doc_limit: DEFAULT_PER_DOC_LIMIT,
            alpha: Rational::zero(),
            measure: Measure::Jaccard,
            stopwords: HashSet::new(),
        }
    }
}

/// Every intermediate result of one run. Stages after an empty one are `None`.
#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub term: Term,
    pub config: PipelineConfig,
    pub snippets: SnippetList,
    pub context: Option<Context>,
    pub graph: Option<WordGraph>,
    pub cluster: Option<MicroCluster>,
    pub tree: Option<TreeCluster>,
    pub shade: Option<MirrorShade>,
    pub theorem: Option<TheoremCheck>,
    /// Checks on each connected component of the tree.
    pub component_checks: Vec<TheoremCheck>,
}

pub fn run_pipeline(index: &Index, term: &Term, config: &PipelineConfig) -> Result<PipelineRun> {
    let snippets = extract_snippets(index, term, config.window, config.per_doc_limit)?;
    let mut run = PipelineRun {
        term: term.clone(),
        config: config.clone(),
        snippets,
        context: None,
        graph: None,
        cluster: None,
        tree: None,
        shade: None,
        theorem: None,
        component_checks: Vec::new(),
    };
    if run.snippets.is_empty() {
        return Ok(run);
    }
    let context = match build_context(&run.snippets, index, &config.stopwords) {
        Ok(ctx) => ctx,
        Err(Error::EmptyContext) => return Ok(run),
        Err(e) => return Err(e),
    };
    let graph = build_word_graph(&context, index, config.measure);
    let cluster = micro_cluster(&graph, &context, &config.alpha)?;
    run.context = Some(context);
    run.graph = Some(graph);
    if cluster.is_empty() {
        run.cluster = Some(cluster);
        return Ok(run);
    }
    let tree = optimal_micro_cluster(&cluster)?;
    let shade = mirror_shade(&cluster.words, index)?;
    let theorem = theorem_check(&tree, &cluster, index)?;
    run.component_checks = tree
        .component_trees()
        .iter()
        .map(|part| theorem_check(part, &cluster, index))
        .collect::<Result<_>>()?;
    run.cluster = Some(cluster);
    run.tree = Some(tree);
    run.shade = Some(shade);
    run.theorem = Some(theorem);
    Ok(run)
}

#[derive(Serialize)]
struct ConfigReport {
    window: usize,
    per_doc_limit: usize,
    alpha: String,
    measure: Measure,
    stopwords: usize,
}

#[derive(Serialize)]
struct StageReport {
    status: &'static str,
    count: usize,
}

#[derive(Serialize)]
struct TreeReport {
    status: &'static str,
    vertices: usize,
    edges: usize,
    components: usize,
    total_weight: Option<String>,
}

#[derive(Serialize)]
struct TheoremReport {
    status: &'static str,
    holds: Option<bool>,
    components_checked: usize,
    components_hold: Option<bool>,
    tree_normalized: Vec<String>,
    inherited_normalized: Vec<String>,
}

#[derive(Serialize)]
struct Report {
    term: String,
    config: ConfigReport,
    documents: usize,
    snippets: StageReport,
    context: StageReport,
    graph: StageReport,
    cluster: StageReport,
    tree: TreeReport,
    shade: StageReport,
    theorem: TheoremReport,
}

fn stage(count: Option<usize>) -> StageReport {
    match count {
        Some(c) if c > 0 => StageReport {
            status: "ok",
            count: c,
        },
        _ => StageReport {
            status: "empty",
            count: 0,
        },
    }
}

impl PipelineRun {
    fn report_json(&self, documents: usize) -> String {
        let theorem = match &self.theorem {
            Some(check) => TheoremReport {
                status: "ok",
                holds: Some(check.holds),
                components_checked: self.component_checks.len(),
                components_hold: Some(self.component_checks.iter().all(|c| c.holds)),
                tree_normalized: check
                    .tree_shade
                    .normalized()
                    .into_iter()
                    .map(decimal)
                    .collect(),
                inherited_normalized: check.inherited_normalized.iter().map(decimal).collect(),
            },
            None => TheoremReport {
                status: "empty",
                holds: None,
                components_checked: 0,
                components_hold: None,
                tree_normalized: Vec::new(),
                inherited_normalized: Vec::new(),
            },
        };
        let report = Report {
            term: self.term.to_string(),
            config: ConfigReport {
                window: self.config.window,
                per_doc_limit: self.config.per_doc_limit,
                alpha: decimal(&self.config.alpha),
                measure: self.config.measure,
                stopwords: self.config.stopwords.len(),
            },
            documents,
            snippets: stage(Some(self.snippets.n())),
            context: stage(self.context.as_ref().map(Context::len)),
            graph: stage(self.graph.as_ref().map(|g| g.vertices().len())),
            cluster: stage(self.cluster.as_ref().map(|c| c.words.len())),
            tree: match &self.tree {
                Some(t) => TreeReport {
                    status: "ok",
                    vertices: t.vertices.len(),
                    edges: t.edges.len(),
                    components: t.component_count(),
                    total_weight: Some(decimal(&t.total_weight())),
                },
                None => TreeReport {
                    status: "empty",
                    vertices: 0,
                    edges: 0,
                    components: 0,
                    total_weight: None,
                },
            },
            shade: stage(self.shade.as_ref().map(|s| s.entries.len())),
            theorem,
        };
        export::to_json(&report)
    }

    /// The six artifacts as `(file name, contents)`, in [`ARTIFACTS`] order.
    /// Empty stages still produce a file with an empty structure.
    pub fn artifacts(&self, documents: usize) -> Vec<(&'static str, String)> {
        let empty_graph = WordGraph::default();
        let context = match &self.context {
            Some(ctx) => export::context_json(ctx),
            None => export::to_json(&export::ContextView {
                term: self.term.to_string(),
                words: Vec::new(),
                nu_order: &[],
                mu_order: &[],
            }),
        };
        let cluster_graph = self.cluster.as_ref().map_or(&empty_graph, |c| &c.graph);
        let tree = match &self.tree {
            Some(t) => export::tree_dot("tree", t),
            None => export::graph_dot("tree", &empty_graph),
        };
        let shade = match &self.shade {
            Some(s) => export::shade_json(s),
            None => export::shade_json(&MirrorShade {
                entries: Vec::new(),
                z: 0,
            }),
        };
        vec![
            (ARTIFACTS[0], export::snippets_json(&self.snippets)),
            (ARTIFACTS[1], context),
            (ARTIFACTS[2], export::graph_dot("cluster", cluster_graph)),
            (ARTIFACTS[3], tree),
            (ARTIFACTS[4], shade),
            (ARTIFACTS[5], self.report_json(documents)),
        ]
    }

    pub fn write_to(&self, dir: &Path, documents: usize) -> Result<()> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| Error::Io { path, source }
        };
        fs::create_dir_all(dir).map_err(io(dir))?;
        for (name, contents) in self.artifacts(documents) {
            let path = dir.join(name);
            fs::write(&path, contents).map_err(io(&path))?;
        }
        Ok(())
    }
}
