//! Labelings carried over to graphs built from labeled operands.

use serde::{Deserialize, Serialize};

use super::{verify_and_repair, ConstructError, ConstructionOutcome, Target};
use crate::graph::{
    self, complement, contract_edge, corona, delete_edge, delete_vertex, join, line_graph,
    product, reduce_vertex, rooted_product, subdivide_edge, total_graph, union, Edge, Graph,
    MinorStep, ProductKind,
};
use crate::intset::IntegerSet;
use crate::labeling::{edge_sum, SetLabeling};

/// Graph operation for [`induced_labeling`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Operation {
    /// Union identifying vertex `a` of the first operand with `b` of the second
    /// for each pair.
    Union { shared: Vec<(usize, usize)> },
    Join,
    Complement,
    Product { kind: ProductKind },
}

impl Operation {
    pub fn is_binary(&self) -> bool {
        !matches!(self, Operation::Complement)
    }
}

fn second<'a>(f2: Option<&'a SetLabeling>, op: &Operation) -> Result<&'a SetLabeling, ConstructError> {
    f2.ok_or(match op {
        Operation::Union { .. } => ConstructError::MissingOperand("a second labeled graph for union"),
        Operation::Join => ConstructError::MissingOperand("a second labeled graph for join"),
        _ => ConstructError::MissingOperand("a second labeled graph for the product"),
    })
}

/// Labels the result of `op` from the operand labelings.
///
/// Union and join keep each operand's labels on its own vertices, the
/// complement keeps the labels unchanged, and product vertex `(i, j)` gets
/// `f1(i) + f2(j)`.
pub fn induced_labeling(
    op: &Operation,
    f1: &SetLabeling,
    f2: Option<&SetLabeling>,
    target: Target,
) -> Result<ConstructionOutcome, ConstructError> {
    let g1 = f1.graph();
    match op {
        Operation::Complement => {
            let g = complement(g1);
            verify_and_repair(g, f1.labels().to_vec(), target, vec![])
        }
        Operation::Union { shared } => {
            let f2 = second(f2, op)?;
            for &(a, b) in shared {
                g1.check_vertex(a)?;
                f2.graph().check_vertex(b)?;
                if f1.label(a) != f2.label(b) {
                    return Err(ConstructError::SharedLabelMismatch {
                        left: a,
                        right: b,
                        left_label: f1.label(a).clone(),
                        right_label: f2.label(b).clone(),
                    });
                }
            }
            let u = union(g1, f2.graph(), shared)?;
            let labels = place(u.graph.vertex_count(), f1, f2, &u.left, &u.right);
            verify_and_repair(u.graph, labels, target, vec![])
        }
        Operation::Join => {
            let f2 = second(f2, op)?;
            let u = join(g1, f2.graph());
            let labels = place(u.graph.vertex_count(), f1, f2, &u.left, &u.right);
            verify_and_repair(u.graph, labels, target, vec![])
        }
        Operation::Product { kind } => {
            let f2 = second(f2, op)?;
            let p = product(*kind, g1, f2.graph());
            let labels = (0..p.graph.vertex_count())
                .map(|id| {
                    let (i, j) = p.pair(id);
                    f1.label(i).sumset(f2.label(j))
                })
                .collect::<Result<Vec<_>, _>>()?;
            verify_and_repair(p.graph, labels, target, vec![format!("{kind:?} product").to_lowercase()])
        }
    }
}

fn place(n: usize, f1: &SetLabeling, f2: &SetLabeling, left: &[usize], right: &[usize]) -> Vec<IntegerSet> {
    let mut labels = vec![None; n];
    for (v, &to) in left.iter().enumerate() {
        labels[to] = Some(f1.label(v).clone());
    }
    for (v, &to) in right.iter().enumerate() {
        labels[to].get_or_insert_with(|| f2.label(v).clone());
    }
    labels.into_iter().map(|l| l.expect("every vertex comes from an operand")).collect()
}

/// Corona labeling: base vertices keep `f1`, and vertex `j` of the `i`-th
/// copy (0-based) gets `(i + 1) * f2(j)`.
pub fn corona_labeling(
    f1: &SetLabeling,
    f2: &SetLabeling,
    target: Target,
) -> Result<ConstructionOutcome, ConstructError> {
    let c = corona(f1.graph(), f2.graph());
    let labels = c
        .origin
        .iter()
        .map(|o| match *o {
            graph::CoronaVertex::Base(i) => Ok(f1.label(i).clone()),
            graph::CoronaVertex::Copy { copy, vertex } => f2.label(vertex).multiple(copy as u64 + 1),
        })
        .collect::<Result<Vec<_>, _>>()?;
    verify_and_repair(c.graph, labels, target, vec![])
}

/// Rooted product labeling: vertex `(i, root)` keeps `f1(i)`, and the other
/// vertices of copy `i` get `m_i * f2(j)`. Multipliers run through 1, 2, 3, ...
/// skipping any that would repeat a label already placed.
pub fn rooted_labeling(
    f1: &SetLabeling,
    f2: &SetLabeling,
    root: usize,
    target: Target,
) -> Result<ConstructionOutcome, ConstructError> {
    let r = rooted_product(f1.graph(), f2.graph(), root)?;
    let n1 = f1.graph().vertex_count();
    let n2 = f2.graph().vertex_count();
    let mut labels: Vec<Option<IntegerSet>> = vec![None; r.graph.vertex_count()];
    let mut used: std::collections::BTreeSet<IntegerSet> = f1.labels().iter().cloned().collect();
    for i in 0..n1 {
        labels[r.id(i, root)] = Some(f1.label(i).clone());
    }
    let mut notes = Vec::new();
    let mut m = 0u64;
    for i in 0..n1 {
        // m * A = B pins m for A != {0}, so each placed label rules out at
        // most one multiplier per copy vertex; {0} is fixed by every m and
        // is left to the repair.
        let mut tries = used.len() * n2 + 1;
        let copy = loop {
            m += 1;
            let copy = (0..n2)
                .filter(|&j| j != root)
                .map(|j| f2.label(j).multiple(m))
                .collect::<Result<Vec<_>, _>>()?;
            if copy.iter().all(|l| !used.contains(l)) {
                break copy;
            }
            tries -= 1;
            if tries == 0 {
                notes.push(format!("no collision-free multiplier for copy {i}, kept {m}"));
                break copy;
            }
            notes.push(format!("multiplier {m} skipped for copy {i}"));
        };
        let others = (0..n2).filter(|&j| j != root);
        for (j, l) in others.zip(copy) {
            used.insert(l.clone());
            labels[r.id(i, j)] = Some(l);
        }
    }
    let labels = labels.into_iter().map(|l| l.expect("all vertices labeled")).collect();
    verify_and_repair(r.graph, labels, target, notes)
}

/// Subdivides edge `uv`; the new vertex gets the old edge label.
pub fn subdivision_labeling(
    f: &SetLabeling,
    u: usize,
    v: usize,
    target: Target,
) -> Result<ConstructionOutcome, ConstructError> {
    let s = subdivide_edge(f.graph(), u, v)?;
    let mut labels = f.labels().to_vec();
    labels.push(edge_sum(f.label(u), f.label(v)));
    verify_and_repair(s.graph, labels, target, vec![])
}

fn contract_labels(g: &Graph, labels: &[IntegerSet], u: usize, v: usize) -> Result<(Graph, Vec<IntegerSet>), ConstructError> {
    let c = contract_edge(g, u, v)?;
    let mut out = vec![None; c.graph.vertex_count()];
    for (x, &to) in c.map.iter().enumerate() {
        if to != c.merged {
            out[to] = Some(labels[x].clone());
        }
    }
    out[c.merged] = Some(labels[u].sumset(&labels[v])?);
    Ok((c.graph, out.into_iter().map(|l| l.expect("all vertices labeled")).collect()))
}

/// Contracts edge `uv`; the merged vertex gets `f(u) + f(v)`.
pub fn contraction_labeling(
    f: &SetLabeling,
    u: usize,
    v: usize,
    target: Target,
) -> Result<ConstructionOutcome, ConstructError> {
    let (g, labels) = contract_labels(f.graph(), f.labels(), u, v)?;
    verify_and_repair(g, labels, target, vec![])
}

/// Applies a script of deletions and contractions, then verifies once.
/// Deletions restrict the labeling; contractions label as in
/// [`contraction_labeling`].
pub fn minor_labeling(
    f: &SetLabeling,
    script: &[MinorStep],
    target: Target,
) -> Result<ConstructionOutcome, ConstructError> {
    let mut g = f.graph().clone();
    let mut labels = f.labels().to_vec();
    for step in script {
        match *step {
            MinorStep::DeleteEdge(u, v) => g = delete_edge(&g, u, v)?,
            MinorStep::DeleteVertex(v) => {
                let sub = delete_vertex(&g, v)?;
                labels = sub.vertices.iter().map(|&x| labels[x].clone()).collect();
                g = sub.graph;
            }
            MinorStep::Contract(u, v) => (g, labels) = contract_labels(&g, &labels, u, v)?,
        }
    }
    verify_and_repair(g, labels, target, vec![format!("{} steps", script.len())])
}

/// Line graph labeling: the vertex for edge `e` gets `f+(e)`.
pub fn line_graph_labeling(f: &SetLabeling) -> Result<ConstructionOutcome, ConstructError> {
    let l = line_graph(f.graph());
    verify_and_repair(l.graph, f.edge_labels(), Target::Iasi, vec![])
}

/// Total graph labeling: vertices keep `f`, edge vertices get `f+`.
pub fn total_graph_labeling(f: &SetLabeling) -> Result<ConstructionOutcome, ConstructError> {
    let t = total_graph(f.graph());
    let mut labels = f.labels().to_vec();
    labels.extend(f.edge_labels());
    verify_and_repair(t.graph, labels, Target::Iasi, vec![])
}

/// Explicit witness that `G` and `H` are homeomorphic.
///
/// `subdivisions` are applied to `G` in order (ids refer to the graph after
/// the previous step, new vertices are appended), giving `G'`.
/// `isomorphism[x]` maps vertex `x` of `G'` onto vertex of `target`, and
/// `reductions` are then applied to `target` in order, giving `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homeomorphism {
    pub subdivisions: Vec<Edge>,
    #[serde(with = "graph6_field")]
    pub target: Graph,
    pub isomorphism: Vec<usize>,
    pub reductions: Vec<usize>,
}

mod graph6_field {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::graph::{parse_graph6, write_graph6, Graph};

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&write_graph6(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

/// Pushes `f` through subdivisions of `G`, the isomorphism and the
/// reductions, yielding a labeling of `H`.
pub fn homeomorphic_transfer(
    f: &SetLabeling,
    h: &Homeomorphism,
    target: Target,
) -> Result<ConstructionOutcome, ConstructError> {
    let mut g = f.graph().clone();
    let mut labels = f.labels().to_vec();
    for &(u, v) in &h.subdivisions {
        let s = subdivide_edge(&g, u, v)?;
        labels.push(edge_sum(&labels[u], &labels[v]));
        g = s.graph;
    }
    if !g.is_isomorphism(&h.target, &h.isomorphism) {
        return Err(ConstructError::NotIsomorphism);
    }
    let mut moved = labels.clone();
    for (x, &to) in h.isomorphism.iter().enumerate() {
        moved[to] = labels[x].clone();
    }
    let mut g = h.target.clone();
    let mut labels = moved;
    for &v in &h.reductions {
        let r = reduce_vertex(&g, v)?;
        labels = labels
            .into_iter()
            .enumerate()
            .filter(|&(x, _)| r.map[x].is_some())
            .map(|(_, l)| l)
            .collect();
        g = r.graph;
    }
    let notes = vec![format!(
        "{} subdivisions, {} reductions",
        h.subdivisions.len(),
        h.reductions.len()
    )];
    verify_and_repair(g, labels, target, notes)
}
