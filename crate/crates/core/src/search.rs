//! Bounded exact search for set-indexers.
//!
//! Labels are held as bitmasks, so every element must be below 64 and every
//! edge sum below 128. Vertices are assigned in maximum-cardinality order
//! (start at vertex 0, then always the vertex with the most assigned
//! neighbors, lowest id on ties); labels are tried in size-then-lexicographic
//! order. The first witness in that order is the answer, in both serial and
//! parallel runs: parallel runs split the top level and keep the earliest
//! branch that found something.
//!
//! Ground sets for [`min_ground_set_size`] always contain 0. Translating every
//! label by `c` translates every edge label by `2c`, so both injectivity
//! conditions are preserved and a ground set `X` works exactly when
//! `X - min X` does.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{write_graph6, Graph};
use crate::intset::{subsets_of, IntegerSet};
use crate::labeling::{LabelingError, LabelingJson, SetLabeling};

/// Largest element the bitmask engine can hold.
pub const MAX_ELEMENT_BOUND: u64 = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid search config: {0}")]
    InvalidConfig(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("labels are not all of one size")]
    NotVertexUniform,
    #[error("labeling is not a set-indexer")]
    NotSetIndexer,
    #[error("label {label} is not a subset of the ground set {ground_set}")]
    OutsideGroundSet { label: IntegerSet, ground_set: IntegerSet },
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Largest integer allowed in any label.
    pub element_bound: u64,
    /// Largest label cardinality.
    pub size_bound: usize,
    pub time_budget_ms: u64,
    /// Execution mode only; it never changes a completed result and is left
    /// out of serialized output.
    #[serde(skip, default = "parallel_default")]
    pub parallel: bool,
}

fn parallel_default() -> bool {
    true
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            element_bound: 8,
            size_bound: 4,
            time_budget_ms: 60_000,
            parallel: true,
        }
    }
}

impl SearchConfig {
    pub fn new(element_bound: u64, size_bound: usize) -> Self {
        SearchConfig {
            element_bound,
            size_bound,
            ..SearchConfig::default()
        }
    }

    pub fn serial(self) -> Self {
        SearchConfig { parallel: false, ..self }
    }

    pub fn with_budget(self, budget: Duration) -> Self {
        SearchConfig {
            time_budget_ms: budget.as_millis().try_into().unwrap_or(u64::MAX),
            ..self
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.element_bound == 0 || self.element_bound > MAX_ELEMENT_BOUND {
            return Err(SearchError::InvalidConfig(format!(
                "element_bound must be in 1..={MAX_ELEMENT_BOUND}, got {}",
                self.element_bound
            )));
        }
        if self.size_bound == 0 {
            return Err(SearchError::InvalidConfig("size_bound must be positive".into()));
        }
        if self.time_budget_ms == 0 {
            return Err(SearchError::InvalidConfig("time_budget_ms must be positive".into()));
        }
        Ok(())
    }
}

/// Condition every edge label must meet, on top of the set-indexer
/// conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum EdgeConstraint {
    Any,
    /// Every edge label has `k` elements.
    Uniform { k: usize },
    /// `k`-uniform and `|f+(uv)| = max(|f(u)|, |f(v)|)` on every edge.
    WeaklyUniform { k: usize },
    /// `k`-uniform and `|f+(uv)| = |f(u)| |f(v)|` on every edge.
    StronglyUniform { k: usize },
}

impl EdgeConstraint {
    fn admits(self, su: usize, sv: usize, s: usize) -> bool {
        match self {
            EdgeConstraint::Any => true,
            EdgeConstraint::Uniform { k } => s == k,
            EdgeConstraint::WeaklyUniform { k } => s == k && s == su.max(sv),
            EdgeConstraint::StronglyUniform { k } => s == k && s == su * sv,
        }
    }

    /// Whether any edge label can meet the constraint given endpoint sizes,
    /// using `a + b - 1 <= |A + B| <= ab` for integer sets.
    fn sizes_feasible(self, su: usize, sv: usize) -> bool {
        let (lo, hi) = (su + sv - 1, su * sv);
        match self {
            EdgeConstraint::Any => true,
            EdgeConstraint::Uniform { k } => lo <= k && k <= hi,
            EdgeConstraint::WeaklyUniform { k } => su.max(sv) == k && lo <= k,
            EdgeConstraint::StronglyUniform { k } => hi == k,
        }
    }

    fn describe(self) -> String {
        match self {
            EdgeConstraint::Any => "no edge cardinality constraint".into(),
            EdgeConstraint::Uniform { k } => format!("every edge label has {k} elements"),
            EdgeConstraint::WeaklyUniform { k } => {
                format!("every edge label has {k} elements and max(|f(u)|,|f(v)|) elements")
            }
            EdgeConstraint::StronglyUniform { k } => {
                format!("every edge label has {k} elements and |f(u)||f(v)| elements")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Witness,
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub labeling: LabelingJson,
    /// Ground set the labels were drawn from, when the search fixed one.
    pub ground_set: Option<IntegerSet>,
    pub edge_labels: Vec<IntegerSet>,
}

impl Witness {
    pub fn to_labeling(&self) -> Result<SetLabeling, LabelingError> {
        SetLabeling::from_json(&self.labeling)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub graph6: String,
    pub constraint: EdgeConstraint,
    pub config: SearchConfig,
    /// Exact description of the space that was searched.
    pub space: String,
    pub witness: Option<Witness>,
}

impl Certificate {
    pub fn is_witness(&self) -> bool {
        self.kind == CertificateKind::Witness
    }

    pub fn is_exhausted(&self) -> bool {
        self.kind == CertificateKind::Exhausted
    }

    /// Re-checks a witness with the classifier alone: set-indexer, labels
    /// within the config bounds, and the edge constraint.
    pub fn reverify(&self) -> bool {
        let Some(w) = &self.witness else {
            return self.kind != CertificateKind::Witness;
        };
        let Ok(f) = w.to_labeling() else { return false };
        if write_graph6(f.graph()) != self.graph6 || f.edge_labels() != w.edge_labels {
            return false;
        }
        let in_bounds = f.labels().iter().all(|l| {
            l.len() <= self.config.size_bound
                && l.max_element() <= self.config.element_bound
                && w.ground_set.as_ref().is_none_or(|x| l.is_subset(x))
        });
        let report = f.classify();
        let edges_ok = report.edges.iter().all(|e| {
            let (u, v) = e.edge;
            self.constraint
                .admits(f.label(u).len(), f.label(v).len(), e.set_indexing_number)
        });
        report.is_set_indexer() && in_bounds && edges_ok
    }
}

fn mask_of(set: &IntegerSet) -> u128 {
    set.iter().fold(0, |m, x| m | 1u128 << x)
}

fn set_of(mask: u128) -> IntegerSet {
    IntegerSet::new((0..128).filter(|&i| mask >> i & 1 == 1)).expect("non-empty mask")
}

fn mask_sum(a: u128, b: u128) -> u128 {
    let mut acc = 0;
    let mut rest = a;
    while rest != 0 {
        let shift = rest.trailing_zeros();
        acc |= b << shift;
        rest &= rest - 1;
    }
    acc
}

/// Vertex order for the backtracking: maximum cardinality search from 0.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            weight[w] += 1;
        }
    }
    order
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Outcome {
    Found(Vec<usize>),
    Exhausted,
    Aborted,
}

struct Clock<'a> {
    deadline: Instant,
    abort: &'a AtomicBool,
}

impl Clock<'_> {
    fn expired(&self, ticks: &mut u32) -> bool {
        *ticks = ticks.wrapping_add(1);
        if (*ticks).is_multiple_of(1024) && Instant::now() >= self.deadline {
            self.abort.store(true, Ordering::Relaxed);
        }
        self.abort.load(Ordering::Relaxed)
    }
}

struct Engine<'a> {
    order: Vec<usize>,
    /// For each position, the positions of earlier neighbors.
    back: Vec<Vec<usize>>,
    pool: &'a [u128],
    sizes: Vec<usize>,
    /// Maximal runs `(size, start, end)` of equal-size labels in pool order.
    runs: Vec<(usize, usize, usize)>,
    constraint: EdgeConstraint,
}

struct State {
    /// Pool index per position.
    assigned: Vec<usize>,
    used: Vec<bool>,
    edge_labels: Vec<u128>,
    ticks: u32,
}

impl<'a> Engine<'a> {
    fn new(g: &Graph, pool: &'a [u128], constraint: EdgeConstraint) -> Self {
        let order = search_order(g);
        let mut position = vec![0; order.len()];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(p, &v)| {
                let mut earlier: Vec<usize> =
                    g.neighbors(v).iter().map(|&w| position[w]).filter(|&q| q < p).collect();
                earlier.sort_unstable();
                earlier
            })
            .collect();
        let sizes: Vec<usize> = pool.iter().map(|m| m.count_ones() as usize).collect();
        let mut runs: Vec<(usize, usize, usize)> = Vec::new();
        for (i, &size) in sizes.iter().enumerate() {
            match runs.last_mut() {
                Some(run) if run.0 == size => run.2 = i + 1,
                _ => runs.push((size, i, i + 1)),
            }
        }
        Engine { order, back, pool, sizes, runs, constraint }
    }

    /// Tries pool label `i` at position `p`; on success pushes its edge
    /// labels and returns how many were pushed.
    fn place(&self, p: usize, i: usize, st: &mut State) -> Option<usize> {
        if st.used[i] {
            return None;
        }
        let start = st.edge_labels.len();
        for &q in &self.back[p] {
            let j = st.assigned[q];
            if !self.constraint.sizes_feasible(self.sizes[i], self.sizes[j]) {
                st.edge_labels.truncate(start);
                return None;
            }
            let s = mask_sum(self.pool[i], self.pool[j]);
            let ok = self.constraint.admits(self.sizes[i], self.sizes[j], s.count_ones() as usize)
                && !st.edge_labels.contains(&s);
            if !ok {
                st.edge_labels.truncate(start);
                return None;
            }
            st.edge_labels.push(s);
        }
        st.used[i] = true;
        st.assigned.push(i);
        Some(st.edge_labels.len() - start)
    }

    fn unplace(&self, pushed: usize, st: &mut State) {
        let i = st.assigned.pop().expect("something was placed");
        st.used[i] = false;
        let len = st.edge_labels.len();
        st.edge_labels.truncate(len - pushed);
    }

    fn dfs(&self, st: &mut State, clock: &Clock) -> Outcome {
        let p = st.assigned.len();
        if p == self.order.len() {
            return Outcome::Found(st.assigned.clone());
        }
        for &(size, start, end) in &self.runs {
            let feasible = self.back[p]
                .iter()
                .all(|&q| self.constraint.sizes_feasible(size, self.sizes[st.assigned[q]]));
            if !feasible {
                continue;
            }
            for i in start..end {
                if clock.expired(&mut st.ticks) {
                    return Outcome::Aborted;
                }
                if let Some(pushed) = self.place(p, i, st) {
                    match self.dfs(st, clock) {
                        Outcome::Exhausted => self.unplace(pushed, st),
                        other => return other,
                    }
                }
            }
        }
        Outcome::Exhausted
    }

    fn fresh(&self) -> State {
        State {
            assigned: Vec::with_capacity(self.order.len()),
            used: vec![false; self.pool.len()],
            edge_labels: Vec::new(),
            ticks: 0,
        }
    }

    fn run_from(&self, first: usize, clock: &Clock) -> Outcome {
        let mut st = self.fresh();
        match self.place(0, first, &mut st) {
            Some(_) => self.dfs(&mut st, clock),
            None => Outcome::Exhausted,
        }
    }

    /// Whether label sizes alone can satisfy the constraint on every edge.
    fn sizes_possible(&self) -> bool {
        let mut distinct: Vec<usize> = self.runs.iter().map(|r| r.0).collect();
        distinct.sort_unstable();
        distinct.dedup();
        fn go(e: &Engine, distinct: &[usize], chosen: &mut Vec<usize>) -> bool {
            let p = chosen.len();
            if p == e.order.len() {
                return true;
            }
            for &s in distinct {
                if e.back[p].iter().all(|&q| e.constraint.sizes_feasible(s, chosen[q])) {
                    chosen.push(s);
                    if go(e, distinct, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        go(self, &distinct, &mut Vec::with_capacity(self.order.len()))
    }

    fn run(&self, parallel: bool, clock: &Clock) -> Outcome {
        if self.order.is_empty() {
            return Outcome::Found(Vec::new());
        }
        if self.pool.len() < self.order.len() || !self.sizes_possible() {
            return Outcome::Exhausted;
        }
        let hit = |i: usize| match self.run_from(i, clock) {
            Outcome::Exhausted => None,
            other => Some(other),
        };
        let first = if parallel {
            (0..self.pool.len()).into_par_iter().find_map_first(hit)
        } else {
            (0..self.pool.len()).find_map(hit)
        };
        first.unwrap_or(Outcome::Exhausted)
    }

    /// Labels by vertex id for a found assignment.
    fn labels(&self, assigned: &[usize]) -> Vec<IntegerSet> {
        let mut labels = vec![None; self.order.len()];
        for (p, &i) in assigned.iter().enumerate() {
            labels[self.order[p]] = Some(set_of(self.pool[i]));
        }
        labels.into_iter().map(|l| l.expect("every vertex assigned")).collect()
    }
}

fn witness(g: &Graph, labels: Vec<IntegerSet>, ground_set: Option<IntegerSet>) -> Witness {
    let f = SetLabeling::new(g.clone(), labels).expect("one label per vertex");
    Witness {
        edge_labels: f.edge_labels(),
        labeling: f.to_json(),
        ground_set,
    }
}

fn universe(config: &SearchConfig) -> Vec<u64> {
    (0..=config.element_bound).collect()
}

/// Searches labelings drawn from `pool` (tried in the given order) for a
/// set-indexer meeting `constraint`.
pub fn find_labeling(
    g: &Graph,
    pool: &[IntegerSet],
    constraint: EdgeConstraint,
    config: &SearchConfig,
    space: String,
) -> Result<Certificate, SearchError> {
    config.validate()?;
    if let Some(bad) = pool
        .iter()
        .find(|l| l.max_element() > config.element_bound || l.len() > config.size_bound)
    {
        return Err(SearchError::InvalidConfig(format!("pool label {bad} exceeds the config bounds")));
    }
    let masks: Vec<u128> = pool.iter().map(mask_of).collect();
    let abort = AtomicBool::new(false);
    let clock = Clock {
        deadline: Instant::now() + Duration::from_millis(config.time_budget_ms),
        abort: &abort,
    };
    let engine = Engine::new(g, &masks, constraint);
    let outcome = engine.run(config.parallel, &clock);
    Ok(certificate(g, constraint, config, space, outcome, |a| {
        witness(g, engine.labels(a), None)
    }))
}

fn certificate(
    g: &Graph,
    constraint: EdgeConstraint,
    config: &SearchConfig,
    space: String,
    outcome: Outcome,
    build: impl FnOnce(&[usize]) -> Witness,
) -> Certificate {
    let (kind, witness) = match outcome {
        Outcome::Found(a) => (CertificateKind::Witness, Some(build(&a))),
        Outcome::Exhausted => (CertificateKind::Exhausted, None),
        Outcome::Aborted => (CertificateKind::BudgetExceeded, None),
    };
    Certificate {
        kind,
        graph6: write_graph6(g),
        constraint,
        config: *config,
        space,
        witness,
    }
}

fn pool_description(config: &SearchConfig, count: usize) -> String {
    format!(
        "labels: non-empty subsets of {{0..{}}} with at most {} elements ({} labels)",
        config.element_bound, config.size_bound, count
    )
}

/// Exhaustive search for a set-indexer whose edge labels all have `k`
/// elements, over every label within the config bounds.
pub fn find_k_uniform(g: &Graph, k: usize, config: &SearchConfig) -> Result<Certificate, SearchError> {
    find_constrained(g, EdgeConstraint::Uniform { k }, config)
}

/// As [`find_k_uniform`] for any [`EdgeConstraint`].
pub fn find_constrained(
    g: &Graph,
    constraint: EdgeConstraint,
    config: &SearchConfig,
) -> Result<Certificate, SearchError> {
    config.validate()?;
    let pool = subsets_of(&universe(config), 1, config.size_bound);
    let space = format!("{}; {}", pool_description(config, pool.len()), constraint.describe());
    find_labeling(g, &pool, constraint, config, space)
}

/// `ceil(log2(n + 1))`: a set-indexer of `n` vertices needs at least this
/// many ground-set elements, since vertex labels are distinct non-empty
/// subsets.
pub fn ground_set_lower_bound(n: usize) -> usize {
    (n as u128 + 1).next_power_of_two().trailing_zeros() as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundSetResult {
    pub lower_bound: usize,
    /// Smallest ground set size that admits a set-indexer within the config
    /// bounds; `None` when the space was exhausted or the budget ran out.
    pub size: Option<usize>,
    /// `size` equals the lower bound, so it is the minimum over all integer
    /// ground sets, not only those within the element bound.
    pub proven_minimum: bool,
    pub certificate: Certificate,
}

/// Smallest `m` such that some `X` with `|X| = m`, `0 in X` and
/// `X within {0..element_bound}` admits a set-indexer of `g` with labels
/// drawn from the non-empty subsets of `X` (at most `size_bound` elements).
/// Sizes are tried upward from [`ground_set_lower_bound`].
pub fn min_ground_set_size(g: &Graph, config: &SearchConfig) -> Result<GroundSetResult, SearchError> {
    config.validate()?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(SearchError::EmptyGraph);
    }
    let lower_bound = ground_set_lower_bound(n);
    let abort = AtomicBool::new(false);
    let clock = Clock {
        deadline: Instant::now() + Duration::from_millis(config.time_budget_ms),
        abort: &abort,
    };
    let rest: Vec<u64> = (1..=config.element_bound).collect();
    let top = config.element_bound as usize + 1;
    let mut searched = Vec::new();

    for m in lower_bound..=top {
        let tails = if m == 1 { vec![None] } else { subsets_of(&rest, m - 1, m - 1).into_iter().map(Some).collect() };
        let ground_sets: Vec<IntegerSet> = tails
            .into_iter()
            .map(|t| {
                let mut xs = vec![0];
                xs.extend(t.iter().flat_map(|t| t.iter()));
                IntegerSet::new(xs).expect("non-empty")
            })
            .collect();
        let try_x = |x: &IntegerSet| {
            let pool: Vec<u128> = subsets_of(x.elements(), 1, config.size_bound).iter().map(mask_of).collect();
            let engine = Engine::new(g, &pool, EdgeConstraint::Any);
            match engine.run(false, &clock) {
                Outcome::Exhausted => None,
                Outcome::Found(a) => Some(Ok((engine.labels(&a), x.clone()))),
                Outcome::Aborted => Some(Err(())),
            }
        };
        let hit = if config.parallel {
            ground_sets.par_iter().find_map_first(try_x)
        } else {
            ground_sets.iter().find_map(try_x)
        };
        let space_for = |searched: &[usize]| {
            format!(
                "ground sets X within {{0..{}}} containing 0 with |X| in {:?}; labels: non-empty subsets of X with at most {} elements",
                config.element_bound, searched, config.size_bound
            )
        };
        match hit {
            Some(Ok((labels, x))) => {
                searched.push(m);
                let cert = certificate(g, EdgeConstraint::Any, config, space_for(&searched), Outcome::Found(vec![]), |_| {
                    witness(g, labels, Some(x))
                });
                return Ok(GroundSetResult {
                    lower_bound,
                    size: Some(m),
                    proven_minimum: m == lower_bound,
                    certificate: cert,
                });
            }
            Some(Err(())) => {
                searched.push(m);
                let cert = certificate(g, EdgeConstraint::Any, config, space_for(&searched), Outcome::Aborted, |_| unreachable!());
                return Ok(GroundSetResult { lower_bound, size: None, proven_minimum: false, certificate: cert });
            }
            None => searched.push(m),
        }
    }
    let space = format!(
        "ground sets X within {{0..{}}} containing 0 with |X| in {}..={}; labels: non-empty subsets of X with at most {} elements",
        config.element_bound, lower_bound, top, config.size_bound
    );
    let cert = certificate(g, EdgeConstraint::Any, config, space, Outcome::Exhausted, |_| unreachable!());
    Ok(GroundSetResult { lower_bound, size: None, proven_minimum: false, certificate: cert })
}

/// An instance of `n <= C(|X|, l)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialBound {
    pub vertices: usize,
    pub ground_set: IntegerSet,
    pub label_size: usize,
    pub binomial: u128,
    pub holds: bool,
    pub tight: bool,
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Checks `n <= C(|X|, l)` for a set-indexer whose labels all have `l`
/// elements, with `X` the union of the labels.
pub fn check_binomial_bound(f: &SetLabeling) -> Result<BinomialBound, SearchError> {
    let x = IntegerSet::new(f.labels().iter().flat_map(|l| l.iter())).map_err(|_| SearchError::EmptyGraph)?;
    check_binomial_bound_over(f, &x)
}

/// As [`check_binomial_bound`] with an explicit ground set.
pub fn check_binomial_bound_over(f: &SetLabeling, ground_set: &IntegerSet) -> Result<BinomialBound, SearchError> {
    if f.labels().is_empty() {
        return Err(SearchError::EmptyGraph);
    }
    if let Some(label) = f.labels().iter().find(|l| !l.is_subset(ground_set)) {
        return Err(SearchError::OutsideGroundSet {
            label: label.clone(),
            ground_set: ground_set.clone(),
        });
    }
    let report = f.classify();
    if !report.is_set_indexer() {
        return Err(SearchError::NotSetIndexer);
    }
    let l = report.vertex_uniform_l.ok_or(SearchError::NotVertexUniform)?;
    let n = f.graph().vertex_count();
    let bound = binomial(ground_set.len(), l);
    Ok(BinomialBound {
        vertices: n,
        ground_set: ground_set.clone(),
        label_size: l,
        binomial: bound,
        holds: n as u128 <= bound,
        tight: n as u128 == bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> IntegerSet {
        IntegerSet::new(xs.iter().copied()).unwrap()
    }

    fn bounds(e: u64, s: usize) -> SearchConfig {
        SearchConfig::new(e, s)
    }

    #[test]
    fn mask_arithmetic() {
        let a = mask_of(&set(&[1, 2]));
        let b = mask_of(&set(&[1, 3]));
        assert_eq!(set_of(mask_sum(a, b)), set(&[2, 3, 4, 5]));
        assert_eq!(set_of(mask_sum(mask_of(&set(&[63])), mask_of(&set(&[63])))), set(&[126]));
    }

    #[test]
    fn order_is_max_cardinality() {
        assert_eq!(search_order(&Graph::path(4)), vec![0, 1, 2, 3]);
        assert_eq!(search_order(&Graph::star(3)), vec![0, 1, 2, 3]);
        let g = Graph::from_edges(4, [(0, 3), (1, 2), (2, 3)]).unwrap();
        assert_eq!(search_order(&g), vec![0, 3, 2, 1]);
        assert_eq!(search_order(&Graph::empty(3)), vec![0, 1, 2]);
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(ground_set_lower_bound(1), 1);
        assert_eq!(ground_set_lower_bound(2), 2);
        assert_eq!(ground_set_lower_bound(3), 2);
        assert_eq!(ground_set_lower_bound(4), 3);
        assert_eq!(ground_set_lower_bound(7), 3);
        assert_eq!(ground_set_lower_bound(8), 4);
    }

    #[test]
    fn min_ground_set_small_cases() {
        let r = min_ground_set_size(&Graph::complete(2), &SearchConfig::default()).unwrap();
        assert_eq!(r.size, Some(2));
        assert!(r.proven_minimum);
        let w = r.certificate.witness.as_ref().unwrap();
        assert_eq!(w.ground_set, Some(set(&[0, 1])));
        assert_eq!(w.labeling.labels, vec![set(&[0]), set(&[1])]);
        assert!(r.certificate.reverify());

        let r = min_ground_set_size(&Graph::complete(3), &SearchConfig::default()).unwrap();
        assert_eq!(r.size, Some(2));
        let w = r.certificate.witness.as_ref().unwrap();
        assert_eq!(w.labeling.labels, vec![set(&[0]), set(&[1]), set(&[0, 1])]);
        assert_eq!(w.edge_labels, vec![set(&[1]), set(&[0, 1]), set(&[1, 2])]);

        let r = min_ground_set_size(&Graph::empty(1), &SearchConfig::default()).unwrap();
        assert_eq!(r.size, Some(1));
        assert!(min_ground_set_size(&Graph::empty(0), &SearchConfig::default()).is_err());

        let r = min_ground_set_size(&Graph::empty(7), &SearchConfig::default()).unwrap();
        assert_eq!(r.size, Some(3));
    }

    #[test]
    fn min_ground_set_exhausts_tiny_bounds() {
        // two elements and singleton labels cannot label three vertices
        let r = min_ground_set_size(&Graph::complete(3), &bounds(1, 1)).unwrap();
        assert_eq!(r.size, None);
        assert!(r.certificate.is_exhausted());
        assert!(r.certificate.space.contains("|X| in 2..=2"));
    }

    #[test]
    fn k_uniform_examples() {
        let c = find_k_uniform(&Graph::complete(3), 2, &bounds(6, 3)).unwrap();
        assert!(c.is_exhausted());
        assert!(c.space.contains("(63 labels)"));

        let c = find_k_uniform(&Graph::cycle(4), 2, &bounds(6, 3)).unwrap();
        assert!(c.is_witness() && c.reverify());

        let c = find_k_uniform(&Graph::complete(3), 1, &bounds(6, 3)).unwrap();
        let w = c.witness.as_ref().unwrap();
        assert!(w.labeling.labels.iter().all(|l| l.len() == 1));
        assert!(c.reverify());
    }

    #[test]
    fn constrained_variants() {
        let weak = find_constrained(&Graph::path(3), EdgeConstraint::WeaklyUniform { k: 2 }, &bounds(4, 2)).unwrap();
        assert!(weak.reverify() && weak.is_witness());
        let f = weak.witness.unwrap().to_labeling().unwrap();
        assert!(f.classify().is_weak_iasi());

        let strong = find_constrained(&Graph::complete(3), EdgeConstraint::StronglyUniform { k: 2 }, &bounds(5, 2)).unwrap();
        assert!(strong.is_exhausted());
        let strong = find_constrained(&Graph::complete(3), EdgeConstraint::StronglyUniform { k: 4 }, &bounds(6, 2)).unwrap();
        assert!(strong.is_witness() && strong.reverify());
    }

    #[test]
    fn serial_and_parallel_agree() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::path(4)] {
            let p = find_k_uniform(&g, 2, &bounds(5, 2)).unwrap();
            let s = find_k_uniform(&g, 2, &bounds(5, 2).serial()).unwrap();
            assert_eq!(serde_json::to_string(&p).unwrap(), serde_json::to_string(&s).unwrap());
            let p = min_ground_set_size(&g, &SearchConfig::default()).unwrap();
            let s = min_ground_set_size(&g, &SearchConfig::default().serial()).unwrap();
            assert_eq!(serde_json::to_string(&p).unwrap(), serde_json::to_string(&s).unwrap());
        }
    }

    #[test]
    fn budget_is_reported() {
        let cfg = bounds(20, 4).with_budget(Duration::from_millis(1));
        let c = find_k_uniform(&Graph::complete(7), 3, &cfg).unwrap();
        assert_eq!(c.kind, CertificateKind::BudgetExceeded);
        assert!(c.witness.is_none());
    }

    #[test]
    fn config_validation() {
        assert!(find_k_uniform(&Graph::complete(2), 1, &bounds(0, 1)).is_err());
        assert!(find_k_uniform(&Graph::complete(2), 1, &bounds(64, 1)).is_err());
        assert!(find_k_uniform(&Graph::complete(2), 1, &bounds(3, 0)).is_err());
        let json = serde_json::to_string(&SearchConfig::default()).unwrap();
        assert_eq!(json, r#"{"element_bound":8,"size_bound":4,"time_budget_ms":60000}"#);
    }

    #[test]
    fn binomial_bound_examples() {
        let f = SetLabeling::new(Graph::complete(3), vec![set(&[0]), set(&[1]), set(&[2])]).unwrap();
        let b = check_binomial_bound(&f).unwrap();
        assert_eq!((b.vertices, b.binomial, b.tight), (3, 3, true));

        let f = SetLabeling::new(Graph::complete(3), vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]).unwrap();
        let b = check_binomial_bound(&f).unwrap();
        assert_eq!((b.label_size, b.binomial, b.holds, b.tight), (2, 3, true, true));

        let f = SetLabeling::new(Graph::empty(1), vec![set(&[0, 4, 7])]).unwrap();
        let b = check_binomial_bound(&f).unwrap();
        assert_eq!((b.binomial, b.tight), (1, true));

        let f = SetLabeling::new(Graph::path(2), vec![set(&[0]), set(&[1, 2])]).unwrap();
        assert_eq!(check_binomial_bound(&f), Err(SearchError::NotVertexUniform));
        let f = SetLabeling::new(Graph::path(2), vec![set(&[0]), set(&[0])]).unwrap();
        assert_eq!(check_binomial_bound(&f), Err(SearchError::NotSetIndexer));
        assert!(matches!(
            check_binomial_bound_over(&SetLabeling::new(Graph::empty(1), vec![set(&[5])]).unwrap(), &set(&[0, 1])),
            Err(SearchError::OutsideGroundSet { .. })
        ));
        assert_eq!(binomial(9, 4), 126);
        assert_eq!(binomial(3, 5), 0);
    }
}
