//! Deterministic labeling constructions.
//!
//! Each constructor first builds its labeling exactly by formula, then checks
//! it. If the formula labeling misses its target class, colliding vertices
//! are translated past the current element range, one at a time, until the
//! target holds. Every such translation is logged in the outcome as a
//! [`Repair`]; an outcome with `repaired == false` is the formula labeling.
//!
//! Repair rule. Let `P` be the smallest power of two greater than every
//! element of every vertex and edge label. A vertex collision `f(i) = f(j)`,
//! `i < j`, is resolved by `f(j) += P`. An edge collision between edges
//! `e < e'` (canonical order) is resolved by `f(x) += P` where `x` is the
//! smaller endpoint of `e'` not on `e`. Each step strictly reduces the number
//! of colliding pairs, so the loop terminates.

mod induced;
mod uniform;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError};
use crate::intset::{IntegerSet, SetError};
use crate::labeling::{self, first_duplicate, ClassificationReport, LabelingError, SetLabeling};

pub use induced::{
    contraction_labeling, corona_labeling, homeomorphic_transfer, induced_labeling,
    line_graph_labeling, minor_labeling, rooted_labeling, subdivision_labeling,
    total_graph_labeling, Homeomorphism, Operation,
};
pub use uniform::{
    canonical_iasi, strongly_uniform_iasi, two_uniform_iasi, weakly_uniform_iasi, UniformOutcome,
};

/// Labeling class a construction must reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// Injective vertex labels.
    Iasl,
    /// Injective vertex labels and injective edge labels.
    Iasi,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("shared vertices ({left}, {right}) carry different labels {left_label} and {right_label}")]
    SharedLabelMismatch {
        left: usize,
        right: usize,
        left_label: IntegerSet,
        right_label: IntegerSet,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("correspondence is not an isomorphism of the subdivided graphs")]
    NotIsomorphism,
    #[error("operation needs {0}")]
    MissingOperand(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RepairReason {
    VertexCollision { with: usize },
    EdgeCollision { edge: Edge, with: Edge },
}

/// One logged relabeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Repair {
    pub vertex: usize,
    pub original: IntegerSet,
    pub replacement: IntegerSet,
    pub reason: RepairReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionOutcome {
    #[serde(serialize_with = "serialize_labeling")]
    pub labeling: SetLabeling,
    pub target: Target,
    pub repaired: bool,
    pub repairs: Vec<Repair>,
    /// Vertex-label injectivity of the formula labeling, before repair.
    pub formula_is_iasl: bool,
    /// Edge-label injectivity of the formula labeling, before repair.
    pub formula_is_iasi: bool,
    pub report: ClassificationReport,
    pub notes: Vec<String>,
}

fn serialize_labeling<S: serde::Serializer>(f: &SetLabeling, s: S) -> Result<S::Ok, S::Error> {
    f.to_json().serialize(s)
}

impl ConstructionOutcome {
    pub fn reaches(&self, target: Target) -> bool {
        match target {
            Target::Iasl => self.report.is_iasl,
            Target::Iasi => self.report.is_set_indexer(),
        }
    }
}

/// Smallest power of two strictly above every vertex and edge element.
fn clearing_power(graph: &Graph, labels: &[IntegerSet]) -> Result<u64, SetError> {
    let vertex_max = labels.iter().map(IntegerSet::max_element).max().unwrap_or(0);
    let edge_max = graph
        .edges()
        .iter()
        .map(|&(u, v)| labels[u].max_element() + labels[v].max_element())
        .max()
        .unwrap_or(0);
    let top = vertex_max.max(edge_max);
    top.checked_add(1)
        .and_then(u64::checked_next_power_of_two)
        .ok_or(SetError::SumOverflow { a: top, b: 1, bound: u64::MAX })
}

fn next_collision(graph: &Graph, labels: &[IntegerSet], target: Target) -> Option<(usize, RepairReason)> {
    if let Some((i, j)) = first_duplicate(labels) {
        return Some((j, RepairReason::VertexCollision { with: i }));
    }
    if target == Target::Iasi {
        let edge_labels: Vec<IntegerSet> = graph
            .edges()
            .iter()
            .map(|&(u, v)| labeling::edge_sum(&labels[u], &labels[v]))
            .collect();
        if let Some((a, b)) = first_duplicate(&edge_labels) {
            let first = graph.edges()[a];
            let second = graph.edges()[b];
            let x = [second.0, second.1]
                .into_iter()
                .find(|&x| x != first.0 && x != first.1)
                .expect("distinct edges differ in an endpoint");
            return Some((x, RepairReason::EdgeCollision { edge: second, with: first }));
        }
    }
    None
}

/// Verifies `labels` on `graph` against `target`, repairing as described in
/// the module docs.
pub(crate) fn verify_and_repair(
    graph: Graph,
    mut labels: Vec<IntegerSet>,
    target: Target,
    notes: Vec<String>,
) -> Result<ConstructionOutcome, ConstructError> {
    let formula = SetLabeling::new(graph, labels.clone())?;
    let formula_report = formula.classify();
    let (graph, _) = formula.into_parts();

    let mut repairs = Vec::new();
    while let Some((vertex, reason)) = next_collision(&graph, &labels, target) {
        let shift = clearing_power(&graph, &labels)?;
        let replacement = labels[vertex].translate(shift)?;
        repairs.push(Repair {
            vertex,
            original: labels[vertex].clone(),
            replacement: replacement.clone(),
            reason,
        });
        labels[vertex] = replacement;
    }

    let labeling = SetLabeling::new(graph, labels)?;
    let report = labeling.classify();
    Ok(ConstructionOutcome {
        labeling,
        target,
        repaired: !repairs.is_empty(),
        repairs,
        formula_is_iasl: formula_report.is_iasl,
        formula_is_iasi: formula_report.is_iasi,
        report,
        notes,
    })
}
