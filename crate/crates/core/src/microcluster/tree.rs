use std::cmp::Ordering;
use std::collections::HashSet;

use petgraph::unionfind::UnionFind;

use super::graph::{MicroCluster, WeightedEdge};
use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};

/// `T`: the strongest-relation spanning forest of a micro-cluster.
///
/// Vertex handles are shared with the parent cluster graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCluster {
    pub vertices: Vec<String>,
    /// Kept edges, in the order they were accepted (strongest first).
    pub edges: Vec<WeightedEdge>,
    /// `w_T`, in the parent cluster's `ν` order.
    pub words: Vec<String>,
    pub alpha: Rational,
}

impl TreeCluster {
    pub fn total_weight(&self) -> Rational {
        self.edges.iter().map(|e| &e.weight).sum()
    }

    /// Component label per vertex, labels numbered by smallest member.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::<usize>::new(self.vertices.len());
        for e in &self.edges {
            uf.union(e.a, e.b);
        }
        let mut label_of_root = vec![usize::MAX; self.vertices.len()];
        let mut next = 0;
        (0..self.vertices.len())
            .map(|v| {
                let root = uf.find(v);
                if label_of_root[root] == usize::MAX {
                    label_of_root[root] = next;
                    next += 1;
                }
                label_of_root[root]
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.component_labels()
            .into_iter()
            .max()
            .map_or(0, |m| m + 1)
    }

    /// True when no edge closes a cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut uf = UnionFind::<usize>::new(self.vertices.len());
        self.edges.iter().all(|e| uf.union(e.a, e.b))
    }

    /// One tree per connected component, each keeping the parent's `alpha`.
    pub fn component_trees(&self) -> Vec<TreeCluster> {
        let labels = self.component_labels();
        let count = labels.iter().copied().max().map_or(0, |m| m + 1);
        (0..count)
            .map(|c| {
                let mut remap = vec![usize::MAX; self.vertices.len()];
                let mut vertices = Vec::new();
                for (v, &l) in labels.iter().enumerate() {
                    if l == c {
                        remap[v] = vertices.len();
                        vertices.push(self.vertices[v].clone());
                    }
                }
                let members: HashSet<&str> = vertices.iter().map(String::as_str).collect();
                let edges = self
                    .edges
                    .iter()
                    .filter(|e| labels[e.a] == c)
                    .map(|e| WeightedEdge {
                        a: remap[e.a],
                        b: remap[e.b],
                        weight: e.weight.clone(),
                    })
                    .collect();
                let words = self
                    .words
                    .iter()
                    .filter(|w| members.contains(w.as_str()))
                    .cloned()
                    .collect();
                TreeCluster {
                    vertices,
                    edges,
                    words,
                    alpha: self.alpha.clone(),
                }
            })
            .collect()
    }
}

/// Orders by float approximation when the two are clearly apart, and by the
/// exact rationals otherwise.
fn descending_weight(fx: f64, x: &Rational, fy: f64, y: &Rational) -> Ordering {
    if (fx - fy).abs() > 1e-9 * fx.abs().max(fy.abs()) {
        fy.total_cmp(&fx)
    } else {
        y.cmp(x)
    }
}

/// Kruskal in descending weight order: an edge is kept iff it joins two
/// different components. Equal weights are ordered by the endpoint words.
pub fn optimal_micro_cluster(cluster: &MicroCluster) -> Result<TreeCluster> {
    let graph = &cluster.graph;
    if graph.vertices().is_empty() {
        return Err(Error::EmptyCluster);
    }
    // Vertex handles follow ascending word order, so (a, b) order is the
    // lexicographic order of the sorted endpoint pair.
    let mut order: Vec<(f64, &WeightedEdge)> = graph
        .edges()
        .iter()
        .map(|e| (to_f64(&e.weight), e))
        .collect();
    order.sort_by(|(fx, x), (fy, y)| {
        descending_weight(*fx, &x.weight, *fy, &y.weight).then((x.a, x.b).cmp(&(y.a, y.b)))
    });

    let n = graph.vertices().len();
    let mut uf = UnionFind::<usize>::new(n);
    let mut edges = Vec::with_capacity(n - 1);
    for (_, e) in order {
        if uf.union(e.a, e.b) {
            edges.push(e.clone());
            if edges.len() == n - 1 {
                break;
            }
        }
    }
    Ok(TreeCluster {
        vertices: graph.vertices().to_vec(),
        edges,
        words: cluster.words.clone(),
        alpha: cluster.alpha.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::microcluster::WordGraph;
    use crate::rational::integer;
    use num_traits::Zero;

    fn cluster(vertices: &[&str], edges: &[(&str, &str, u64)]) -> MicroCluster {
        let g = WordGraph::new(
            vertices.iter().map(|s| s.to_string()),
            edges
                .iter()
                .map(|(a, b, w)| (a.to_string(), b.to_string(), integer(*w))),
        )
        .unwrap();
        MicroCluster::from_graph(g, Rational::zero())
    }

    fn kept(t: &TreeCluster) -> Vec<(String, String)> {
        t.edges
            .iter()
            .map(|e| (t.vertices[e.a].clone(), t.vertices[e.b].clone()))
            .collect()
    }

    #[test]
    fn empty_cluster_is_rejected() {
        let mc = cluster(&[], &[]);
        assert!(matches!(
            optimal_micro_cluster(&mc),
            Err(Error::EmptyCluster)
        ));
    }

    #[test]
    fn single_vertex() {
        let t = optimal_micro_cluster(&cluster(&["a"], &[])).unwrap();
        assert!(t.edges.is_empty());
        assert_eq!(t.component_count(), 1);
    }

    #[test]
    fn triangle_drops_weakest() {
        let mc = cluster(
            &["a", "b", "c"],
            &[("a", "b", 3), ("b", "c", 2), ("a", "c", 1)],
        );
        let t = optimal_micro_cluster(&mc).unwrap();
        assert_eq!(
            kept(&t),
            [("a".into(), "b".into()), ("b".into(), "c".into())]
        );
        assert_eq!(t.total_weight(), integer(5));
        assert!(t.is_acyclic());
    }

    #[test]
    fn equal_weights_break_ties_lexicographically() {
        let names = ["d", "c", "b", "a"];
        let mut edges = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((names[i], names[j], 1));
            }
        }
        let t = optimal_micro_cluster(&cluster(&names, &edges)).unwrap();
        assert_eq!(
            kept(&t),
            [
                ("a".into(), "b".into()),
                ("a".into(), "c".into()),
                ("a".into(), "d".into())
            ]
        );
        assert_eq!(t, optimal_micro_cluster(&cluster(&names, &edges)).unwrap());
    }

    #[test]
    fn disconnected_graph_gives_forest() {
        let mc = cluster(
            &["a", "b", "c", "d", "e"],
            &[("a", "b", 2), ("c", "d", 5), ("d", "e", 1)],
        );
        let t = optimal_micro_cluster(&mc).unwrap();
        assert_eq!(t.edges.len(), 3);
        assert_eq!(t.component_count(), 2);
        assert_eq!(t.edges.len(), t.vertices.len() - t.component_count());
        let parts = t.component_trees();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].vertices, ["a", "b"]);
        assert_eq!(parts[1].vertices, ["c", "d", "e"]);
        assert_eq!(parts[1].edges.len(), 2);
        assert!(parts.iter().all(TreeCluster::is_acyclic));
    }

    #[test]
    fn weights_closer_than_float_precision_keep_exact_order() {
        let third = crate::rational::ratio(1, 3);
        let eps = crate::rational::ratio(1, 100_000_000_000_000_000);
        let g = WordGraph::new(
            ["a", "b", "c"].map(String::from),
            [
                ("a".into(), "b".into(), &third - &eps),
                ("a".into(), "c".into(), &third - &eps),
                ("b".into(), "c".into(), third.clone()),
            ],
        )
        .unwrap();
        let t = optimal_micro_cluster(&MicroCluster::from_graph(g, Rational::zero())).unwrap();
        assert_eq!(
            kept(&t),
            [("b".into(), "c".into()), ("a".into(), "b".into())]
        );
    }

    #[test]
    fn cycle_detection() {
        let mut t = optimal_micro_cluster(&cluster(
            &["a", "b", "c"],
            &[("a", "b", 3), ("b", "c", 2), ("a", "c", 1)],
        ))
        .unwrap();
        t.edges.push(WeightedEdge {
            a: 0,
            b: 2,
            weight: integer(1),
        });
        assert!(!t.is_acyclic());
    }
}
