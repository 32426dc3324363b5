//! Finite-domain checks of the characterization results.
//!
//! Each check has a descriptive id, a default corpus (graphs plus a label
//! universe) and runs exhaustively over it. A verdict only speaks for the
//! finite domain stated in the report. Nonexistence directions that rely on
//! search are scoped to the search bounds in the attached config.
//!
//! A failing instance is reported as a [`Counterexample`] that can be
//! re-checked on its own with [`Counterexample::reverify`], which recomputes
//! the property with the library's real arithmetic. Labelings that break a
//! statement read literally, outside the domain a check covers, are reported
//! separately as [`Anomaly`]s.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::{
    canonical_iasi, line_graph_labeling, strongly_uniform_iasi, total_graph_labeling,
    two_uniform_iasi, weakly_uniform_iasi, ConstructError, UniformOutcome,
};
use crate::graph::{
    delete_edge, enumerate_graphs, induced_subgraph, line_graph, parse_graph6, total_graph,
    write_graph6, Graph, GraphError, GraphFilter,
};
use crate::intset::{subsets_of, subsets_up_to, CompatibilityTable, IntegerSet};
use crate::labeling::{
    edge_sum, strong_structure_check, weak_structure_check, LabelingJson, SetLabeling,
};
use crate::search::{
    binomial, check_binomial_bound_over, find_constrained, find_labeling, ground_set_lower_bound,
    min_ground_set_size, Certificate, CertificateKind, EdgeConstraint, SearchConfig, SearchError,
};

/// Largest element accepted in an oracle label universe.
pub const MAX_UNIVERSE_ELEMENT: u64 = 12;

/// Counterexamples kept per check; the total count is always reported.
pub const COUNTEREXAMPLE_LIMIT: usize = 10;

macro_rules! check_ids {
    ($($variant:ident => $name:literal, $statement:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CheckId {
            $($variant,)*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $name,)*
                }
            }

            pub fn statement(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $statement,)*
                }
            }
        }

        impl FromStr for CheckId {
            type Err = OracleError;

            fn from_str(s: &str) -> Result<Self, OracleError> {
                match s {
                    $($name => Ok(CheckId::$variant),)*
                    _ => Err(OracleError::UnknownCheck(s.to_string())),
                }
            }
        }
    };
}

check_ids! {
    EveryGraphIasl => "every-graph-iasl",
        "every graph has an integer additive set-labeling";
    EveryGraphIasi => "every-graph-iasi",
        "every graph has an integer additive set-indexer";
    Hereditary => "hereditary",
        "restricting a set-indexer to an induced or spanning subgraph gives a set-indexer";
    GroundSetLogBound => "ground-set-log-bound",
        "a set-indexer of n vertices over ground set X needs |X| >= ceil(log2(n+1))";
    GroundSetBinomialBound => "ground-set-binomial-bound",
        "a set-indexer of n vertices with all labels of size l over X has n <= C(|X|, l)";
    SumsetCardinalityBounds => "sumset-cardinality-bounds",
        "max(|A|,|B|) <= |A+B| <= |A||B|";
    NeglectingNumberIdentity => "neglecting-number-identity",
        "|A+B| = |A||B| - r with r the number of neglected pairs";
    SaturatedClassSize => "saturated-class-size",
        "no compatibility class has more than min(|A|,|B|) pairs";
    AdjacentEdgeRatio => "adjacent-edge-ratio",
        "adjacent edges uv_i, uv_j have equal label sizes iff |f(u)| = (r_i - r_j)/(n_i - n_j)";
    UniformRatioCharacterization => "uniform-ratio-characterization",
        "on a connected graph a labeling is edge-uniform iff the ratio condition holds on every pair of adjacent edges";
    UniformNeglectingNumber => "uniform-neglecting-number",
        "with all vertex labels of one size, a labeling is edge-uniform iff every edge has the same neglecting number";
    TwoUniformBipartite => "two-uniform-bipartite",
        "a graph has a 2-uniform set-indexer iff it is bipartite";
    WeakSingletonEndpoint => "weak-singleton-endpoint",
        "|A+B| = max(|A|,|B|) iff |A| = 1 or |B| = 1";
    WeakCharacterization => "weak-characterization",
        "a labeling is weak iff every edge has an endpoint with a singleton label";
    WeaklyUniformBipartite => "weakly-uniform-bipartite",
        "a connected graph has a weakly k-uniform set-indexer (k >= 2) iff it is bipartite";
    DifferenceSetDisjointness => "difference-set-disjointness",
        "|A+B| = |A||B| iff the difference sets of A and B are disjoint";
    StrongCharacterization => "strong-characterization",
        "a labeling is strong iff adjacent labels have disjoint difference sets";
    StronglyUniformCharacterization => "strongly-uniform-characterization",
        "a connected graph has a strongly k-uniform set-indexer iff it is bipartite or the labeling is (k,l)-completely uniform with k = l^2";
    LineGraphIasi => "line-graph-iasi",
        "the line graph of a set-indexed graph has an induced set-indexer";
    TotalGraphIasi => "total-graph-iasi",
        "the total graph of a set-indexed graph has an induced set-indexer";
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for CheckId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("corpus too large: {0}")]
    CorpusTooLarge(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

/// Labels drawn from the non-empty subsets of `{0..max_element}` with at most
/// `max_size` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelUniverse {
    pub max_element: u64,
    pub max_size: usize,
}

impl LabelUniverse {
    pub fn labels(&self) -> Vec<IntegerSet> {
        subsets_up_to(self.max_element, self.max_size)
    }
}

/// Graphs and labels a check runs over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub connected_only: bool,
    pub max_edges: Option<usize>,
    /// Replaces the enumeration when set.
    pub explicit: Option<Vec<Graph>>,
    pub labels: LabelUniverse,
}

impl Corpus {
    pub fn enumerated(min_vertices: usize, max_vertices: usize, connected_only: bool) -> Self {
        Corpus {
            min_vertices,
            max_vertices,
            connected_only,
            max_edges: None,
            explicit: None,
            labels: LabelUniverse { max_element: 4, max_size: 2 },
        }
    }

    pub fn explicit(graphs: Vec<Graph>) -> Self {
        Corpus {
            explicit: Some(graphs),
            ..Corpus::enumerated(0, 0, false)
        }
    }

    pub fn with_labels(self, max_element: u64, max_size: usize) -> Self {
        Corpus {
            labels: LabelUniverse { max_element, max_size },
            ..self
        }
    }

    pub fn with_max_edges(self, max_edges: usize) -> Self {
        Corpus { max_edges: Some(max_edges), ..self }
    }

    /// Default corpus of a check.
    pub fn default_for(id: CheckId) -> Corpus {
        use CheckId::*;
        match id {
            EveryGraphIasl | EveryGraphIasi | Hereditary => Corpus::enumerated(1, 5, false),
            GroundSetLogBound | TwoUniformBipartite | WeaklyUniformBipartite | LineGraphIasi
            | TotalGraphIasi | StronglyUniformCharacterization => Corpus::enumerated(1, 5, true),
            GroundSetBinomialBound => Corpus::enumerated(1, 4, true),
            SumsetCardinalityBounds | NeglectingNumberIdentity | SaturatedClassSize
            | WeakSingletonEndpoint | DifferenceSetDisjointness => {
                Corpus::explicit(vec![]).with_labels(8, 9)
            }
            AdjacentEdgeRatio => Corpus::explicit(vec![]).with_labels(4, 5),
            UniformRatioCharacterization => Corpus::enumerated(2, 4, true).with_labels(3, 2),
            UniformNeglectingNumber => Corpus::enumerated(1, 4, false).with_labels(4, 2),
            WeakCharacterization | StrongCharacterization => {
                Corpus::enumerated(1, 4, false).with_labels(4, 2).with_max_edges(4)
            }
        }
    }

    pub fn graphs(&self) -> Result<Vec<Graph>, OracleError> {
        if let Some(g) = &self.explicit {
            return Ok(g.clone());
        }
        let filter = if self.connected_only { GraphFilter::CONNECTED } else { GraphFilter::ALL };
        let mut out = Vec::new();
        for n in self.min_vertices..=self.max_vertices {
            out.extend(
                enumerate_graphs(n, filter)?
                    .filter(|g| self.max_edges.is_none_or(|m| g.edge_count() <= m)),
            );
        }
        Ok(out)
    }

    fn check_universe(&self) -> Result<(), OracleError> {
        if self.labels.max_element > MAX_UNIVERSE_ELEMENT {
            return Err(OracleError::CorpusTooLarge(format!(
                "label elements up to {} exceed the cap {MAX_UNIVERSE_ELEMENT}",
                self.labels.max_element
            )));
        }
        Ok(())
    }

    fn describe_graphs(&self) -> String {
        match &self.explicit {
            Some(g) => format!("{} explicit graphs", g.len()),
            None => format!(
                "all {}labeled graphs with {}..={} vertices{}",
                if self.connected_only { "connected " } else { "" },
                self.min_vertices,
                self.max_vertices,
                self.max_edges.map_or(String::new(), |m| format!(" and at most {m} edges")),
            ),
        }
    }

    fn describe_labels(&self) -> String {
        format!(
            "labels: non-empty subsets of {{0..{}}} with at most {} elements",
            self.labels.max_element, self.labels.max_size
        )
    }
}

/// Hook for fault injection: the sum set used by the set-level checks.
#[derive(Clone, Copy)]
pub struct OracleContext {
    pub sumset: fn(&IntegerSet, &IntegerSet) -> IntegerSet,
}

impl Default for OracleContext {
    fn default() -> Self {
        OracleContext { sumset: edge_sum }
    }
}

impl fmt::Debug for OracleContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("OracleContext")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Counterexample,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "subject", rename_all = "snake_case")]
pub enum Subject {
    Sets { sets: Vec<IntegerSet> },
    Labeling { labeling: LabelingJson },
    Search { certificate: Box<Certificate> },
    Graph { graph6: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: CheckId,
    /// Edge label size `k` for the uniform checks.
    pub parameter: Option<usize>,
    #[serde(flatten)]
    pub subject: Subject,
    pub detail: String,
}

impl Counterexample {
    /// Recomputes the checked property from the subject alone; true when the
    /// subject still violates it.
    pub fn reverify(&self) -> bool {
        match &self.subject {
            Subject::Sets { sets } => !sets_hold(self.check, sets, edge_sum),
            Subject::Labeling { labeling } => match SetLabeling::from_json(labeling) {
                Ok(f) => !labeling_holds(self.check, &f, self.parameter),
                Err(_) => false,
            },
            Subject::Search { certificate } => certificate_violates(self.check, certificate),
            Subject::Graph { graph6 } => match parse_graph6(graph6) {
                Ok(g) => graph_violates(self.check, &g, self.parameter),
                Err(_) => false,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnomalyKind {
    /// The induced line graph labeling, before any repair, has equal edge
    /// labels.
    UnrepairedLineGraphNotIasi,
    /// Same for the total graph.
    UnrepairedTotalGraphNotIasi,
    /// Same for an edge subdivision, whose new vertex carries the edge label.
    UnrepairedSubdivisionNotIasi,
    /// An all-singleton labeling is weakly 1-uniform on a graph with an odd
    /// cycle.
    WeaklyOneUniformOnOddCycle,
    /// On a disconnected graph the ratio condition holds on every pair of
    /// adjacent edges while edge label sizes differ.
    RatioConditionWithoutUniformity,
}

/// A labeling contradicting a statement read literally, outside the
/// domain where the corresponding check applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anomaly {
    pub claim: AnomalyKind,
    pub labeling: LabelingJson,
    pub detail: String,
}

impl Anomaly {
    pub fn reverify(&self) -> bool {
        let Ok(f) = SetLabeling::from_json(&self.labeling) else { return false };
        let r = f.classify();
        match self.claim {
            AnomalyKind::UnrepairedLineGraphNotIasi
            | AnomalyKind::UnrepairedTotalGraphNotIasi
            | AnomalyKind::UnrepairedSubdivisionNotIasi => {
                !r.is_set_indexer()
            }
            AnomalyKind::WeaklyOneUniformOnOddCycle => {
                r.is_weak_iasi() && r.edge_uniform_k == Some(1) && !f.graph().is_bipartite().is_bipartite()
            }
            AnomalyKind::RatioConditionWithoutUniformity => {
                r.is_iasl && ratio_condition(&f) && r.edge_uniform_k.is_none() && !r.vacuous
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: CheckId,
    pub statement: String,
    /// Exact finite domain the verdict covers.
    pub domain: String,
    pub config: SearchConfig,
    pub verdict: Verdict,
    pub cases: u64,
    pub counterexample_count: u64,
    pub counterexamples: Vec<Counterexample>,
    pub anomalies: Vec<Anomaly>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SearchConfig,
    pub passed: usize,
    pub counterexamples: usize,
    pub inconclusive: usize,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.passed == self.checks.len()
    }
}

/// Running totals of a check.
#[derive(Default)]
struct Tally {
    cases: u64,
    failures: Vec<Counterexample>,
    failure_count: u64,
    claims: Vec<Anomaly>,
    inconclusive: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn case(&mut self) {
        self.cases += 1;
    }

    fn fail(&mut self, c: Counterexample) {
        self.failure_count += 1;
        if self.failures.len() < COUNTEREXAMPLE_LIMIT {
            self.failures.push(c);
        }
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < COUNTEREXAMPLE_LIMIT {
                self.failures.push(f);
            }
        }
        self.claims.extend(other.claims);
        self.inconclusive.extend(other.inconclusive);
        self.notes.extend(other.notes);
    }
}

/// Maps `job` over `items` (in parallel when asked) and merges the tallies in
/// item order.
fn gather<T: Sync>(items: &[T], parallel: bool, job: impl Fn(&T) -> Tally + Sync) -> Tally {
    let parts: Vec<Tally> = if parallel {
        items.par_iter().map(&job).collect()
    } else {
        items.iter().map(&job).collect()
    };
    let mut total = Tally::default();
    for p in parts {
        total.merge(p);
    }
    total
}

fn labeling_subject(f: &SetLabeling) -> Subject {
    Subject::Labeling { labeling: f.to_json() }
}

// ---- set-level predicates ----

fn sets_hold(check: CheckId, sets: &[IntegerSet], sum: fn(&IntegerSet, &IntegerSet) -> IntegerSet) -> bool {
    match (check, sets) {
        (CheckId::AdjacentEdgeRatio, [u, vi, vj]) => ratio_triple_holds(u, vi, vj, sum),
        (_, [a, b]) => pair_holds(check, a, b, sum),
        _ => false,
    }
}

fn pair_holds(check: CheckId, a: &IntegerSet, b: &IntegerSet, sum: fn(&IntegerSet, &IntegerSet) -> IntegerSet) -> bool {
    let s = sum(a, b).len();
    let (na, nb) = (a.len(), b.len());
    match check {
        CheckId::SumsetCardinalityBounds => na.max(nb) <= s && s <= na * nb,
        CheckId::NeglectingNumberIdentity => {
            let table = CompatibilityTable::build(a, b);
            let neglected: usize = table.classes.values().map(|c| c.len() - 1).sum();
            s + neglected == na * nb
        }
        CheckId::SaturatedClassSize => {
            let table = CompatibilityTable::build(a, b);
            table.classes.values().all(|c| c.len() <= na.min(nb))
                && table.classes.len() == s
        }
        CheckId::WeakSingletonEndpoint => (s == na.max(nb)) == (na.min(nb) == 1),
        CheckId::DifferenceSetDisjointness => {
            (s == na * nb) == a.difference_set().is_disjoint(&b.difference_set())
        }
        _ => false,
    }
}

/// Edges `e_i = u v_i`, `e_j = u v_j`. With `n_i != n_j` the sizes agree iff
/// `|f(u)| (n_i - n_j) = r_i - r_j`; with `n_i = n_j` the quotient is
/// undefined and the sizes agree iff `r_i = r_j`.
fn ratio_triple_holds(u: &IntegerSet, vi: &IntegerSet, vj: &IntegerSet, sum: fn(&IntegerSet, &IntegerSet) -> IntegerSet) -> bool {
    let m = u.len() as i64;
    let (ni, nj) = (vi.len() as i64, vj.len() as i64);
    let (si, sj) = (sum(u, vi).len() as i64, sum(u, vj).len() as i64);
    let (ri, rj) = (m * ni - si, m * nj - sj);
    if ni != nj {
        (si == sj) == (m * (ni - nj) == ri - rj)
    } else {
        (si == sj) == (ri == rj)
    }
}

/// The ratio condition on every pair of adjacent edges of `f`.
fn ratio_condition(f: &SetLabeling) -> bool {
    let g = f.graph();
    g.vertices().all(|u| {
        let nb = g.neighbors(u);
        nb.iter().enumerate().all(|(a, &vi)| {
            nb[a + 1..].iter().all(|&vj| {
                let m = f.label(u).len() as i64;
                let (ni, nj) = (f.label(vi).len() as i64, f.label(vj).len() as i64);
                let si = edge_sum(f.label(u), f.label(vi)).len() as i64;
                let sj = edge_sum(f.label(u), f.label(vj)).len() as i64;
                let (ri, rj) = (m * ni - si, m * nj - sj);
                if ni != nj {
                    m * (ni - nj) == ri - rj
                } else {
                    ri == rj
                }
            })
        })
    })
}

// ---- labeling-level predicates ----

fn labeling_holds(check: CheckId, f: &SetLabeling, k: Option<usize>) -> bool {
    let r = f.classify();
    let uniform = r.vacuous || r.edge_uniform_k.is_some();
    match check {
        CheckId::EveryGraphIasl => r.is_iasl,
        CheckId::EveryGraphIasi | CheckId::Hereditary | CheckId::LineGraphIasi | CheckId::TotalGraphIasi => {
            r.is_set_indexer()
        }
        CheckId::WeakCharacterization => r.is_weak == weak_structure_check(f).holds,
        CheckId::StrongCharacterization => r.is_strong == strong_structure_check(f).holds,
        CheckId::UniformRatioCharacterization => uniform == ratio_condition(f),
        CheckId::UniformNeglectingNumber => {
            let same_r = r.edges.windows(2).all(|w| w[0].neglecting_number == w[1].neglecting_number);
            uniform == same_r
        }
        CheckId::TwoUniformBipartite => r.is_set_indexer() && (r.vacuous || r.edge_uniform_k == Some(2)),
        CheckId::WeaklyUniformBipartite => r.is_weak_iasi() && (r.vacuous || r.edge_uniform_k == k),
        CheckId::StronglyUniformCharacterization => {
            let branch_ok = f.graph().is_bipartite().is_bipartite()
                || r.completely_uniform.map_or(r.vacuous, |(kk, l)| kk == l * l);
            r.is_strong_iasi() && (r.vacuous || r.edge_uniform_k == k) && branch_ok
        }
        _ => false,
    }
}

fn certificate_violates(check: CheckId, c: &Certificate) -> bool {
    let Some(f) = c.witness.as_ref().and_then(|w| w.to_labeling().ok()) else { return false };
    if !c.reverify() {
        return false;
    }
    let bipartite = f.graph().is_bipartite().is_bipartite();
    match check {
        CheckId::TwoUniformBipartite | CheckId::WeaklyUniformBipartite => !bipartite,
        CheckId::StronglyUniformCharacterization => !labeling_holds(check, &f, Some(constraint_k(c))),
        CheckId::GroundSetLogBound => {
            let union: std::collections::BTreeSet<u64> = f.labels().iter().flat_map(|l| l.iter()).collect();
            union.len() < ground_set_lower_bound(f.graph().vertex_count())
        }
        CheckId::GroundSetBinomialBound => {
            let x = c.witness.as_ref().and_then(|w| w.ground_set.clone());
            match x.map(|x| check_binomial_bound_over(&f, &x)) {
                Some(Ok(b)) => !b.holds,
                _ => false,
            }
        }
        _ => false,
    }
}

fn constraint_k(c: &Certificate) -> usize {
    match c.constraint {
        EdgeConstraint::Uniform { k }
        | EdgeConstraint::WeaklyUniform { k }
        | EdgeConstraint::StronglyUniform { k } => k,
        EdgeConstraint::Any => 0,
    }
}

/// Graph-level failures of the constructive side.
fn graph_violates(check: CheckId, g: &Graph, k: Option<usize>) -> bool {
    let bipartite = g.is_bipartite().is_bipartite();
    let built = |o: Result<UniformOutcome, ConstructError>| o.map(|o| o.is_built()).unwrap_or(false);
    match check {
        CheckId::TwoUniformBipartite => bipartite != built(two_uniform_iasi(g)),
        CheckId::WeaklyUniformBipartite => bipartite != built(weakly_uniform_iasi(g, k.unwrap_or(2))),
        CheckId::StronglyUniformCharacterization => {
            let k = k.unwrap_or(1);
            let square = (1..=k).any(|l| l * l == k);
            (bipartite || square) != built(strongly_uniform_iasi(g, k))
        }
        CheckId::EveryGraphIasl | CheckId::EveryGraphIasi => canonical_iasi(g).map_or(true, |o| o.repaired),
        _ => false,
    }
}

// ---- checks ----

/// Runs one check with the default context.
pub fn run_check(id: CheckId, corpus: &Corpus, config: &SearchConfig) -> Result<CheckReport, OracleError> {
    run_check_with(id, corpus, config, &OracleContext::default())
}

pub fn run_check_with(
    id: CheckId,
    corpus: &Corpus,
    config: &SearchConfig,
    ctx: &OracleContext,
) -> Result<CheckReport, OracleError> {
    config.validate()?;
    corpus.check_universe()?;
    let graphs = corpus.graphs()?;
    let par = config.parallel;
    use CheckId::*;
    let (domain, tally) = match id {
        SumsetCardinalityBounds | NeglectingNumberIdentity | SaturatedClassSize
        | WeakSingletonEndpoint | DifferenceSetDisjointness => {
            let labels = corpus.labels.labels();
            let tally = gather(&labels, par, |a| {
                let mut t = Tally::default();
                for b in &labels {
                    t.case();
                    if !pair_holds(id, a, b, ctx.sumset) {
                        t.fail(Counterexample {
                            check: id,
                            parameter: None,
                            subject: Subject::Sets { sets: vec![a.clone(), b.clone()] },
                            detail: format!("A = {a}, B = {b}, A+B = {}", (ctx.sumset)(a, b)),
                        });
                    }
                }
                t
            });
            (format!("all ordered pairs (A, B) of {}", corpus.describe_labels()), tally)
        }
        AdjacentEdgeRatio => {
            let labels = corpus.labels.labels();
            let mut tally = gather(&labels, par, |u| {
                let mut t = Tally::default();
                let mut degenerate = 0u64;
                for vi in &labels {
                    for vj in &labels {
                        t.case();
                        if vi.len() == vj.len() {
                            degenerate += 1;
                        }
                        if !ratio_triple_holds(u, vi, vj, ctx.sumset) {
                            t.fail(Counterexample {
                                check: id,
                                parameter: None,
                                subject: Subject::Sets { sets: vec![u.clone(), vi.clone(), vj.clone()] },
                                detail: format!("f(u) = {u}, f(v_i) = {vi}, f(v_j) = {vj}"),
                            });
                        }
                    }
                }
                t.notes.push(degenerate.to_string());
                t
            });
            let degenerate: u64 = tally.notes.drain(..).map(|n| n.parse::<u64>().unwrap_or(0)).sum();
            tally.notes.push(format!(
                "{degenerate} triples have |f(v_i)| = |f(v_j)| (zero denominator); checked as: equal edge sizes iff r_i = r_j"
            ));
            (
                format!("all triples (f(u), f(v_i), f(v_j)) of {}", corpus.describe_labels()),
                tally,
            )
        }
        EveryGraphIasl | EveryGraphIasi => {
            let tally = gather(&graphs, par, |g| {
                let mut t = Tally::default();
                t.case();
                match canonical_iasi(g) {
                    Ok(o) if !o.repaired && labeling_holds(id, &o.labeling, None) => {}
                    Ok(o) => t.fail(Counterexample {
                        check: id,
                        parameter: None,
                        subject: Subject::Graph { graph6: write_graph6(g) },
                        detail: format!("canonical labeling needed {} repairs", o.repairs.len()),
                    }),
                    Err(e) => t.inconclusive.push(format!("{}: {e}", write_graph6(g))),
                }
                t
            });
            (format!("{}; labeling: vertex i gets {{2^i}}", corpus.describe_graphs()), tally)
        }
        Hereditary => {
            let tally = gather(&graphs, par, |g| {
                let mut t = Tally::default();
                let Ok(o) = canonical_iasi(g) else {
                    t.inconclusive.push(format!("{}: canonical labeling overflowed", write_graph6(g)));
                    return t;
                };
                let f = o.labeling;
                let n = g.vertex_count();
                for mask in 1u64..(1 << n) {
                    let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                    let sub = induced_subgraph(g, &subset).expect("subset in range");
                    let h = f.restrict(&sub);
                    t.case();
                    if !labeling_holds(id, &h, None) {
                        t.fail(Counterexample { check: id, parameter: None, subject: labeling_subject(&h), detail: format!("induced on {subset:?}") });
                    }
                }
                for &(u, v) in g.edges() {
                    let h = f.on_graph(delete_edge(g, u, v).expect("edge exists")).expect("same vertex count");
                    t.case();
                    if !labeling_holds(id, &h, None) {
                        t.fail(Counterexample { check: id, parameter: None, subject: labeling_subject(&h), detail: format!("edge ({u},{v}) deleted") });
                    }
                }
                t
            });
            (
                format!(
                    "{}; canonical labeling restricted to every non-empty induced subgraph and every single-edge deletion",
                    corpus.describe_graphs()
                ),
                tally,
            )
        }
        GroundSetLogBound => {
            let tally = gather(&graphs, par, |g| {
                let mut t = Tally::default();
                t.case();
                let r = match min_ground_set_size(g, &config.serial()) {
                    Ok(r) => r,
                    Err(e) => {
                        t.inconclusive.push(format!("{}: {e}", write_graph6(g)));
                        return t;
                    }
                };
                match r.certificate.kind {
                    CertificateKind::Witness => {
                        if certificate_violates(id, &r.certificate) || !r.certificate.reverify() {
                            t.fail(Counterexample {
                                check: id,
                                parameter: None,
                                subject: Subject::Search { certificate: Box::new(r.certificate) },
                                detail: format!("ground set smaller than {}", r.lower_bound),
                            });
                        }
                    }
                    CertificateKind::Exhausted => t.notes.push(format!("{}: no set-indexer within bounds", write_graph6(g))),
                    CertificateKind::BudgetExceeded => t.inconclusive.push(format!("{}: budget exceeded", write_graph6(g))),
                }
                t
            });
            (
                format!(
                    "{}; smallest ground set containing 0 within {{0..{}}}, labels of at most {} elements",
                    corpus.describe_graphs(),
                    config.element_bound,
                    config.size_bound
                ),
                tally,
            )
        }
        GroundSetBinomialBound => {
            let top = (config.element_bound as usize + 1).min(5);
            let tally = gather(&graphs, par, |g| {
                let mut t = Tally::default();
                for l in 1..=config.size_bound.min(3) {
                    for m in l..=top {
                        let universe: Vec<u64> = (0..m as u64).collect();
                        let pool = subsets_of(&universe, l, l);
                        let x = IntegerSet::new(universe.iter().copied()).expect("m >= 1");
                        let space = format!("labels: {l}-subsets of {x}");
                        t.case();
                        let cert = match find_labeling(g, &pool, EdgeConstraint::Any, &config.serial(), space) {
                            Ok(c) => c,
                            Err(e) => {
                                t.inconclusive.push(e.to_string());
                                continue;
                            }
                        };
                        match cert.kind {
                            CertificateKind::Witness => {
                                let mut cert = cert;
                                if let Some(w) = cert.witness.as_mut() {
                                    w.ground_set = Some(x.clone());
                                }
                                if certificate_violates(id, &cert) {
                                    t.fail(Counterexample {
                                        check: id,
                                        parameter: Some(l),
                                        subject: Subject::Search { certificate: Box::new(cert) },
                                        detail: format!("n = {} > C({m}, {l}) = {}", g.vertex_count(), binomial(m, l)),
                                    });
                                }
                            }
                            CertificateKind::Exhausted => {}
                            CertificateKind::BudgetExceeded => t.inconclusive.push(format!("{}: budget exceeded", write_graph6(g))),
                        }
                    }
                }
                t
            });
            (
                format!(
                    "{}; l in 1..={}, X = {{0..m-1}} for m in l..={top}, every l-uniform set-indexer found by search",
                    corpus.describe_graphs(),
                    config.size_bound.min(3)
                ),
                tally,
            )
        }
        UniformRatioCharacterization | UniformNeglectingNumber | WeakCharacterization | StrongCharacterization => {
            let labels = corpus.labels.labels();
            let injective = matches!(id, UniformRatioCharacterization | UniformNeglectingNumber);
            let by_size = id == UniformNeglectingNumber;
            let tally = gather(&graphs, par, |g| {
                let mut t = Tally::default();
                let pools: Vec<Vec<IntegerSet>> = if by_size {
                    (1..=corpus.labels.max_size)
                        .map(|l| labels.iter().filter(|x| x.len() == l).cloned().collect())
                        .collect()
                } else {
                    vec![labels.clone()]
                };
                for pool in &pools {
                    for_each_labeling(g.vertex_count(), pool.len(), injective, |idx| {
                        let f = SetLabeling::new(g.clone(), idx.iter().map(|&i| pool[i].clone()).collect())
                            .expect("one label per vertex");
                        t.case();
                        if !labeling_holds(id, &f, None) {
                            t.fail(Counterexample { check: id, parameter: None, subject: labeling_subject(&f), detail: String::new() });
                        }
                    });
                }
                t
            });
            let kind = match id {
                UniformRatioCharacterization => "every injective labeling",
                UniformNeglectingNumber => "every injective labeling with all labels of one size",
                _ => "every labeling (injective or not)",
            };
            let mut tally = tally;
            if id == UniformRatioCharacterization {
                tally.claims.push(disconnected_ratio_claim());
                tally.notes.push(
                    "restricted to connected graphs: on a disconnected graph edge sizes can differ between components while every adjacent pair agrees"
                        .into(),
                );
            }
            (format!("{}; {kind} with {}", corpus.describe_graphs(), corpus.describe_labels()), tally)
        }
        TwoUniformBipartite | WeaklyUniformBipartite | StronglyUniformCharacterization => {
            let ks: Vec<usize> = match id {
                TwoUniformBipartite => vec![2],
                WeaklyUniformBipartite => vec![2, 3],
                _ => vec![1, 2, 3, 4],
            };
            let mut tally = gather(&graphs, par, |g| {
                let mut t = Tally::default();
                for &k in &ks {
                    t.case();
                    uniform_case(id, g, k, config, &mut t);
                }
                t
            });
            if id == WeaklyUniformBipartite {
                if let Some(claim) = weak_one_uniform_claim(&graphs) {
                    tally.claims.push(claim);
                }
                tally.notes.push("k = 1 excluded: every all-singleton set-indexer is weakly 1-uniform, bipartite or not".into());
            }
            (
                format!(
                    "{}; k in {ks:?}; constructive side by construction, nonexistence side by exhaustive search within the config bounds",
                    corpus.describe_graphs()
                ),
                tally,
            )
        }
        LineGraphIasi | TotalGraphIasi => {
            let tally = gather(&graphs, par, |g| {
                let mut t = Tally::default();
                let Ok(base) = canonical_iasi(g) else {
                    t.inconclusive.push(format!("{}: canonical labeling overflowed", write_graph6(g)));
                    return t;
                };
                let f = base.labeling;
                t.case();
                let (out, formula, claim) = if id == LineGraphIasi {
                    let formula = SetLabeling::new(line_graph(g).graph, f.edge_labels()).expect("one label per edge");
                    (line_graph_labeling(&f), formula, AnomalyKind::UnrepairedLineGraphNotIasi)
                } else {
                    let mut labels = f.labels().to_vec();
                    labels.extend(f.edge_labels());
                    let formula = SetLabeling::new(total_graph(g).graph, labels).expect("one label per element");
                    (total_graph_labeling(&f), formula, AnomalyKind::UnrepairedTotalGraphNotIasi)
                };
                match out {
                    Ok(o) => {
                        if !labeling_holds(id, &o.labeling, None) {
                            t.fail(Counterexample { check: id, parameter: None, subject: labeling_subject(&o.labeling), detail: "repaired labeling".into() });
                        }
                        if !o.formula_is_iasi || !o.formula_is_iasl {
                            t.claims.push(Anomaly {
                                claim,
                                labeling: formula.to_json(),
                                detail: format!("source {} with canonical labels", write_graph6(g)),
                            });
                        }
                    }
                    Err(e) => t.inconclusive.push(format!("{}: {e}", write_graph6(g))),
                }
                t
            });
            (
                format!(
                    "{}; canonical source labeling; verdict on the verified (possibly repaired) induced labeling",
                    corpus.describe_graphs()
                ),
                tally,
            )
        }
    };
    Ok(finish(id, domain, config, tally))
}

fn finish(id: CheckId, domain: String, config: &SearchConfig, mut tally: Tally) -> CheckReport {
    let verdict = if tally.failure_count > 0 {
        Verdict::Counterexample
    } else if tally.cases == 0 {
        tally.notes.push("empty domain".into());
        Verdict::Inconclusive
    } else if !tally.inconclusive.is_empty() {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    let mut notes = tally.notes;
    notes.extend(tally.inconclusive.into_iter().map(|s| format!("inconclusive: {s}")));
    CheckReport {
        id,
        statement: id.statement().to_string(),
        domain,
        config: *config,
        verdict,
        cases: tally.cases,
        counterexample_count: tally.failure_count,
        counterexamples: tally.failures,
        anomalies: tally.claims,
        notes,
    }
}

/// Calls `visit` with every assignment of pool indices to `n` vertices, in
/// lexicographic order.
fn for_each_labeling(n: usize, pool: usize, injective: bool, mut visit: impl FnMut(&[usize])) {
    if pool == 0 && n > 0 {
        return;
    }
    let mut idx = vec![0usize; n];
    loop {
        let distinct = !injective || {
            let mut seen = idx.clone();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        };
        if distinct {
            visit(&idx);
        }
        let mut p = n;
        loop {
            if p == 0 {
                return;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < pool {
                break;
            }
            idx[p] = 0;
        }
    }
}

fn uniform_case(id: CheckId, g: &Graph, k: usize, config: &SearchConfig, t: &mut Tally) {
    let bipartite = g.is_bipartite().is_bipartite();
    let square = (1..=k).any(|l| l * l == k);
    let (outcome, exists, constraint) = match id {
        CheckId::TwoUniformBipartite => (two_uniform_iasi(g), bipartite, EdgeConstraint::Uniform { k }),
        CheckId::WeaklyUniformBipartite => (weakly_uniform_iasi(g, k), bipartite, EdgeConstraint::WeaklyUniform { k }),
        _ => (strongly_uniform_iasi(g, k), bipartite || square, EdgeConstraint::StronglyUniform { k }),
    };
    let graph_fail = |t: &mut Tally, detail: String| {
        t.fail(Counterexample {
            check: id,
            parameter: Some(k),
            subject: Subject::Graph { graph6: write_graph6(g) },
            detail,
        })
    };
    match outcome {
        Err(e) => t.inconclusive.push(format!("{} k={k}: {e}", write_graph6(g))),
        Ok(UniformOutcome::Built(o)) if exists => {
            if !labeling_holds(id, &o.labeling, Some(k)) {
                t.fail(Counterexample { check: id, parameter: Some(k), subject: labeling_subject(&o.labeling), detail: "constructed labeling".into() });
            }
        }
        Ok(UniformOutcome::Built(_)) => graph_fail(t, "construction succeeded where none should exist".into()),
        Ok(UniformOutcome::Impossible { .. }) if exists => graph_fail(t, "construction reported impossible".into()),
        Ok(UniformOutcome::Impossible { .. }) => {}
    }
    // Search the non-bipartite side: a witness must not exist unless k is a
    // square (strong case), and then it must be completely uniform.
    if !bipartite {
        match find_constrained(g, constraint, &config.serial()) {
            Err(e) => t.inconclusive.push(format!("{} k={k}: {e}", write_graph6(g))),
            Ok(c) => match c.kind {
                CertificateKind::BudgetExceeded => t.inconclusive.push(format!("{} k={k}: budget exceeded", write_graph6(g))),
                CertificateKind::Exhausted => {}
                CertificateKind::Witness => {
                    if certificate_violates(id, &c) {
                        t.fail(Counterexample {
                            check: id,
                            parameter: Some(k),
                            subject: Subject::Search { certificate: Box::new(c) },
                            detail: "search found a labeling on a graph with an odd cycle".into(),
                        });
                    }
                }
            },
        }
    }
}

fn weak_one_uniform_claim(graphs: &[Graph]) -> Option<Anomaly> {
    let g = graphs.iter().find(|g| !g.is_bipartite().is_bipartite())?;
    let f = canonical_iasi(g).ok()?.labeling;
    Some(Anomaly {
        claim: AnomalyKind::WeaklyOneUniformOnOddCycle,
        labeling: f.to_json(),
        detail: "all-singleton labels give a weakly 1-uniform set-indexer on a non-bipartite graph".into(),
    })
}

fn disconnected_ratio_claim() -> Anomaly {
    let g = Graph::from_edges(4, [(0, 1), (2, 3)]).expect("valid edges");
    let labels = [vec![0], vec![1], vec![2], vec![0, 3]]
        .into_iter()
        .map(|l| IntegerSet::new(l).expect("non-empty"))
        .collect();
    let f = SetLabeling::new(g, labels).expect("four labels");
    Anomaly {
        claim: AnomalyKind::RatioConditionWithoutUniformity,
        labeling: f.to_json(),
        detail: "two disjoint edges share no vertex, so the ratio condition is vacuous, yet their labels have 1 and 2 elements".into(),
    }
}

/// Runs every registered check on its default corpus. Checks run in
/// parallel when the config asks for it; the report lists them in registry
/// order either way.
pub fn run_suite(config: &SearchConfig) -> Result<SuiteReport, OracleError> {
    run_suite_with(config, &OracleContext::default())
}

pub fn run_suite_with(config: &SearchConfig, ctx: &OracleContext) -> Result<SuiteReport, OracleError> {
    let job = |&id: &CheckId| run_check_with(id, &Corpus::default_for(id), config, ctx);
    let checks: Vec<CheckReport> = if config.parallel {
        CheckId::ALL.par_iter().map(job).collect::<Result<_, _>>()?
    } else {
        CheckId::ALL.iter().map(job).collect::<Result<_, _>>()?
    };
    let count = |v: Verdict| checks.iter().filter(|c| c.verdict == v).count();
    Ok(SuiteReport {
        config: *config,
        passed: count(Verdict::Pass),
        counterexamples: count(Verdict::Counterexample),
        inconclusive: count(Verdict::Inconclusive),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> IntegerSet {
        IntegerSet::new(xs.iter().copied()).unwrap()
    }

    fn small(id: CheckId) -> CheckReport {
        let corpus = match id {
            CheckId::SumsetCardinalityBounds
            | CheckId::NeglectingNumberIdentity
            | CheckId::SaturatedClassSize
            | CheckId::WeakSingletonEndpoint
            | CheckId::DifferenceSetDisjointness
            | CheckId::AdjacentEdgeRatio => Corpus::explicit(vec![]).with_labels(3, 4),
            _ => Corpus {
                max_vertices: 3,
                ..Corpus::default_for(id)
            },
        };
        run_check(id, &corpus, &SearchConfig::new(5, 3)).unwrap()
    }

    #[test]
    fn ids_round_trip() {
        assert_eq!(CheckId::ALL.len(), 20);
        for &id in CheckId::ALL {
            assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
            assert!(id.as_str().chars().all(|c| c.is_ascii_lowercase() || c == '-' || c.is_ascii_digit()));
        }
        assert!(matches!("nope".parse::<CheckId>(), Err(OracleError::UnknownCheck(_))));
    }

    #[test]
    fn every_check_passes_on_small_corpora() {
        for &id in CheckId::ALL {
            let c = small(id);
            assert_eq!(c.verdict, Verdict::Pass, "{id}: {:?}", c.notes);
            assert!(c.cases > 0);
            for claim in &c.anomalies {
                assert!(claim.reverify(), "{id}: {claim:?}");
            }
        }
    }

    #[test]
    fn pair_count_of_default_universe() {
        let c = run_check(CheckId::DifferenceSetDisjointness, &Corpus::default_for(CheckId::DifferenceSetDisjointness), &SearchConfig::default()).unwrap();
        assert_eq!(c.cases, 261_121);
        assert_eq!(c.verdict, Verdict::Pass);
    }

    fn broken_sumset(a: &IntegerSet, b: &IntegerSet) -> IntegerSet {
        let s = edge_sum(a, b);
        if a.len() == 2 && b.len() == 2 {
            IntegerSet::new(s.iter().take(1)).unwrap()
        } else {
            s
        }
    }

    #[test]
    fn corrupted_sumset_is_caught() {
        let ctx = OracleContext { sumset: broken_sumset };
        let corpus = Corpus::explicit(vec![]).with_labels(3, 2);
        let c = run_check_with(CheckId::SumsetCardinalityBounds, &corpus, &SearchConfig::default(), &ctx).unwrap();
        assert_eq!(c.verdict, Verdict::Counterexample);
        assert!(c.counterexample_count > 0);
        let first = &c.counterexamples[0];
        assert_eq!(first.subject, Subject::Sets { sets: vec![set(&[0, 1]), set(&[0, 1])] });
        // the real arithmetic does not reproduce the failure
        assert!(!first.reverify());
    }

    #[test]
    fn empty_domain_is_inconclusive() {
        let c = run_check(CheckId::EveryGraphIasi, &Corpus::explicit(vec![]), &SearchConfig::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Inconclusive);
        assert!(c.notes.contains(&"empty domain".to_string()));
    }

    #[test]
    fn corpus_caps() {
        let c = Corpus::enumerated(1, 7, false);
        assert!(matches!(run_check(CheckId::EveryGraphIasl, &c, &SearchConfig::default()), Err(OracleError::Graph(_))));
        let c = Corpus::explicit(vec![]).with_labels(13, 2);
        assert!(matches!(run_check(CheckId::SaturatedClassSize, &c, &SearchConfig::default()), Err(OracleError::CorpusTooLarge(_))));
    }

    #[test]
    fn known_anomalies_reverify() {
        assert!(disconnected_ratio_claim().reverify());
        let c = weak_one_uniform_claim(&[Graph::complete(3)]).unwrap();
        assert!(c.reverify());

        let c = run_check(CheckId::TotalGraphIasi, &Corpus::explicit(vec![Graph::cycle(4)]), &SearchConfig::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
        assert_eq!(c.anomalies.len(), 1);
        assert!(c.anomalies[0].reverify());
    }

    #[test]
    fn graph_counterexamples_reverify() {
        let fake = Counterexample {
            check: CheckId::TwoUniformBipartite,
            parameter: Some(2),
            subject: Subject::Graph { graph6: write_graph6(&Graph::complete(3)) },
            detail: String::new(),
        };
        assert!(!fake.reverify());
        let labeling = SetLabeling::new(Graph::complete(2), vec![set(&[1]), set(&[1])]).unwrap();
        let bad = Counterexample {
            check: CheckId::EveryGraphIasl,
            parameter: None,
            subject: labeling_subject(&labeling),
            detail: String::new(),
        };
        assert!(bad.reverify());
    }

    #[test]
    fn labeling_enumeration_counts() {
        let mut all = 0;
        for_each_labeling(3, 4, false, |_| all += 1);
        assert_eq!(all, 64);
        let mut inj = 0;
        for_each_labeling(3, 4, true, |_| inj += 1);
        assert_eq!(inj, 24);
        let mut none = 0;
        for_each_labeling(0, 4, true, |_| none += 1);
        assert_eq!(none, 1);
    }
}
