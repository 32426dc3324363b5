//! Set-labelings of graphs, the induced edge map, and classification of a
//! labeling against the labeling classes (IASL, IASI, uniform, weak, strong).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{self, Edge, Graph, Graph6Error, GraphError, InducedSubgraph};
use crate::intset::{IntegerSet, SetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("graph has {expected} vertices but {found} labels were given")]
    LabelCount { expected: usize, found: usize },
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

/// A total assignment of integer sets to the vertices of a graph.
///
/// Injectivity is not a construction precondition; it is reported by
/// [`SetLabeling::classify`] as the IASL verdict.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetLabeling {
    graph: Graph,
    labels: Vec<IntegerSet>,
}

/// Sum set without the default element bound: edge labels of in-bound vertex
/// labels always fit in `u64`.
pub(crate) fn edge_sum(a: &IntegerSet, b: &IntegerSet) -> IntegerSet {
    a.sumset_within(b, u64::MAX).expect("sums of bounded labels fit in u64")
}

impl SetLabeling {
    pub fn new(graph: Graph, labels: Vec<IntegerSet>) -> Result<Self, LabelingError> {
        if labels.len() != graph.vertex_count() {
            return Err(LabelingError::LabelCount {
                expected: graph.vertex_count(),
                found: labels.len(),
            });
        }
        Ok(SetLabeling { graph, labels })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[IntegerSet] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &IntegerSet {
        &self.labels[v]
    }

    pub fn into_parts(self) -> (Graph, Vec<IntegerSet>) {
        (self.graph, self.labels)
    }

    /// `f+(uv) = f(u) + f(v)` for an edge of the graph.
    pub fn induced_edge_label(&self, u: usize, v: usize) -> Result<IntegerSet, LabelingError> {
        self.graph.check_edge(u, v)?;
        Ok(edge_sum(&self.labels[u], &self.labels[v]))
    }

    /// Edge labels in canonical edge order.
    pub fn edge_labels(&self) -> Vec<IntegerSet> {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| edge_sum(&self.labels[u], &self.labels[v]))
            .collect()
    }

    /// The labeling restricted to an induced subgraph of this graph.
    pub fn restrict(&self, sub: &InducedSubgraph) -> SetLabeling {
        SetLabeling {
            graph: sub.graph.clone(),
            labels: sub.vertices.iter().map(|&v| self.labels[v].clone()).collect(),
        }
    }

    /// Same labels on another graph over the same vertex set (for example a
    /// spanning subgraph or the complement).
    pub fn on_graph(&self, graph: Graph) -> Result<SetLabeling, LabelingError> {
        SetLabeling::new(graph, self.labels.clone())
    }

    pub fn classify(&self) -> ClassificationReport {
        classify(self)
    }

    pub fn to_json(&self) -> LabelingJson {
        LabelingJson {
            graph6: graph::write_graph6(&self.graph),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(json: &LabelingJson) -> Result<SetLabeling, LabelingError> {
        let graph = graph::parse_graph6(&json.graph6)?;
        SetLabeling::new(graph, json.labels.clone())
    }
}

/// Interchange form: `{"graph6": "...", "labels": [[...], ...]}` with
/// `labels[i]` labeling vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingJson {
    pub graph6: String,
    pub labels: Vec<IntegerSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeRecord {
    pub edge: Edge,
    pub label: IntegerSet,
    /// Cardinality of the edge label; equals the compatibility index of the
    /// endpoint labels.
    pub set_indexing_number: usize,
    /// `|f(u)| * |f(v)| - |f+(uv)|`.
    pub neglecting_number: usize,
    /// `|f+(uv)| = max(|f(u)|, |f(v)|)`.
    pub weak: bool,
    /// `|f+(uv)| = |f(u)| * |f(v)|`.
    pub strong: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DuplicateVertexLabel { first: usize, second: usize, label: IntegerSet },
    DuplicateEdgeLabel { first: Edge, second: Edge, label: IntegerSet },
    NotWeak { edge: Edge, endpoint_sizes: (usize, usize), set_indexing_number: usize },
    NotStrong { edge: Edge, endpoint_sizes: (usize, usize), set_indexing_number: usize },
    EdgeSizesDiffer { first: Edge, second: Edge },
    VertexSizesDiffer { first: usize, second: usize },
}

/// Verdicts for one labeling, each false verdict backed by a [`Violation`].
///
/// `is_iasl` is injectivity of the vertex labels and `is_iasi` injectivity of
/// the edge labels; a set-indexer in the full sense needs both, see
/// [`ClassificationReport::is_set_indexer`]. `is_weak` and `is_strong` are the
/// per-edge cardinality identities on every edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub is_iasl: bool,
    pub is_iasi: bool,
    pub edge_uniform_k: Option<usize>,
    pub vertex_uniform_l: Option<usize>,
    pub completely_uniform: Option<(usize, usize)>,
    pub is_weak: bool,
    pub is_strong: bool,
    /// No edges: every edge verdict holds vacuously.
    pub vacuous: bool,
    pub edges: Vec<EdgeRecord>,
    pub violations: Vec<Violation>,
}

impl ClassificationReport {
    pub fn is_set_indexer(&self) -> bool {
        self.is_iasl && self.is_iasi
    }

    pub fn is_weak_iasi(&self) -> bool {
        self.is_set_indexer() && self.is_weak
    }

    pub fn is_strong_iasi(&self) -> bool {
        self.is_set_indexer() && self.is_strong
    }
}

/// First pair `(i, j)`, `i < j`, with equal items, ordered by `j` then `i`.
pub(crate) fn first_duplicate<T: Ord>(items: &[T]) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by(|&a, &b| items[a].cmp(&items[b]).then(a.cmp(&b)));
    order
        .windows(2)
        .filter(|w| items[w[0]] == items[w[1]])
        .map(|w| (w[0], w[1]))
        .min_by_key(|&(i, j)| (j, i))
}

pub fn classify(f: &SetLabeling) -> ClassificationReport {
    let g = f.graph();
    let labels = f.labels();
    let mut violations = Vec::new();

    let is_iasl = match first_duplicate(labels) {
        Some((first, second)) => {
            violations.push(Violation::DuplicateVertexLabel {
                first,
                second,
                label: labels[first].clone(),
            });
            false
        }
        None => true,
    };

    let edges: Vec<EdgeRecord> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let label = edge_sum(&labels[u], &labels[v]);
            let (m, n) = (labels[u].len(), labels[v].len());
            let k = label.len();
            EdgeRecord {
                edge: (u, v),
                set_indexing_number: k,
                neglecting_number: m * n - k,
                weak: k == m.max(n),
                strong: k == m * n,
                label,
            }
        })
        .collect();

    let edge_labels: Vec<&IntegerSet> = edges.iter().map(|r| &r.label).collect();
    let is_iasi = match first_duplicate(&edge_labels) {
        Some((i, j)) => {
            violations.push(Violation::DuplicateEdgeLabel {
                first: edges[i].edge,
                second: edges[j].edge,
                label: edges[i].label.clone(),
            });
            false
        }
        None => true,
    };

    let sizes = |e: Edge| (labels[e.0].len(), labels[e.1].len());
    let is_weak = match edges.iter().find(|r| !r.weak) {
        Some(r) => {
            violations.push(Violation::NotWeak {
                edge: r.edge,
                endpoint_sizes: sizes(r.edge),
                set_indexing_number: r.set_indexing_number,
            });
            false
        }
        None => true,
    };
    let is_strong = match edges.iter().find(|r| !r.strong) {
        Some(r) => {
            violations.push(Violation::NotStrong {
                edge: r.edge,
                endpoint_sizes: sizes(r.edge),
                set_indexing_number: r.set_indexing_number,
            });
            false
        }
        None => true,
    };

    let edge_uniform_k = match edges.first() {
        None => None,
        Some(first) => match edges.iter().find(|r| r.set_indexing_number != first.set_indexing_number) {
            Some(r) => {
                violations.push(Violation::EdgeSizesDiffer { first: first.edge, second: r.edge });
                None
            }
            None => Some(first.set_indexing_number),
        },
    };
    let vertex_uniform_l = match labels.first() {
        None => None,
        Some(first) => match labels.iter().position(|l| l.len() != first.len()) {
            Some(second) => {
                violations.push(Violation::VertexSizesDiffer { first: 0, second });
                None
            }
            None => Some(first.len()),
        },
    };
    let completely_uniform = edge_uniform_k.zip(vertex_uniform_l);

    ClassificationReport {
        is_iasl,
        is_iasi,
        edge_uniform_k,
        vertex_uniform_l,
        completely_uniform,
        is_weak,
        is_strong,
        vacuous: edges.is_empty(),
        edges,
        violations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructureWitness {
    NoSingletonEndpoint { edge: Edge },
    SharedDifference { edge: Edge, difference: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    pub holds: bool,
    pub witness: Option<StructureWitness>,
}

/// Every edge has an endpoint whose label is a singleton.
pub fn weak_structure_check(f: &SetLabeling) -> StructureCheck {
    let witness = f
        .graph()
        .edges()
        .iter()
        .find(|&&(u, v)| f.label(u).len() != 1 && f.label(v).len() != 1)
        .map(|&edge| StructureWitness::NoSingletonEndpoint { edge });
    StructureCheck { holds: witness.is_none(), witness }
}

/// The difference sets of adjacent labels are disjoint.
pub fn strong_structure_check(f: &SetLabeling) -> StructureCheck {
    let diffs: Vec<_> = f.labels().iter().map(IntegerSet::difference_set).collect();
    let witness = f.graph().edges().iter().find_map(|&(u, v)| {
        diffs[u]
            .first_common(&diffs[v])
            .map(|difference| StructureWitness::SharedDifference { edge: (u, v), difference })
    });
    StructureCheck { holds: witness.is_none(), witness }
}
