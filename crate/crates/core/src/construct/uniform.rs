//! The universal set-indexer and the uniform constructions on bipartite and
//! completely uniform labelings.

use serde::Serialize;

use super::{verify_and_repair, ConstructError, ConstructionOutcome, Target};
use crate::graph::{Bipartiteness, Graph};
use crate::intset::{IntegerSet, SetError};

/// Result of a uniform construction: a verified labeling, or a reason why the
/// requested class does not exist on this graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum UniformOutcome {
    Built(Box<ConstructionOutcome>),
    Impossible {
        reason: String,
        odd_cycle: Option<Vec<usize>>,
    },
}

impl UniformOutcome {
    pub fn built(&self) -> Option<&ConstructionOutcome> {
        match self {
            UniformOutcome::Built(o) => Some(o),
            UniformOutcome::Impossible { .. } => None,
        }
    }

    pub fn is_built(&self) -> bool {
        self.built().is_some()
    }
}

fn power_of_two(exp: usize) -> Result<u64, SetError> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| 1u64.checked_shl(e))
        .filter(|&p| p <= crate::intset::DEFAULT_ELEMENT_BOUND)
        .ok_or(SetError::ElementOutOfBound { element: u64::MAX, bound: crate::intset::DEFAULT_ELEMENT_BOUND })
}

/// Vertex `i` gets `{2^i}`. Every edge label is the singleton `{2^i + 2^j}`,
/// and binary representations are unique, so both maps are injective.
pub fn canonical_iasi(g: &Graph) -> Result<ConstructionOutcome, ConstructError> {
    let labels = g
        .vertices()
        .map(|i| power_of_two(i).and_then(IntegerSet::singleton))
        .collect::<Result<Vec<_>, _>>()?;
    verify_and_repair(g.clone(), labels, Target::Iasi, Vec::new())
}

fn not_bipartite(b: Bipartiteness, what: &str) -> UniformOutcome {
    UniformOutcome::Impossible {
        reason: format!("graph is not bipartite; {what}"),
        odd_cycle: b.odd_cycle().map(<[usize]>::to_vec),
    }
}

/// 2-uniform set-indexer of a bipartite graph: color-0 vertex `v` gets
/// `{2^v}` and color-1 vertex `w` gets `{0, 2^w}`, so edge `vw` is labeled
/// `{2^v, 2^v + 2^w}`.
pub fn two_uniform_iasi(g: &Graph) -> Result<UniformOutcome, ConstructError> {
    let b = g.is_bipartite();
    let Some(coloring) = b.coloring() else {
        return Ok(not_bipartite(b, "no 2-uniform set-indexer exists"));
    };
    let mut labels = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let p = power_of_two(v)?;
        labels.push(if coloring[v] == 0 {
            IntegerSet::singleton(p)?
        } else {
            IntegerSet::new([0, p])?
        });
    }
    let out = verify_and_repair(g.clone(), labels, Target::Iasi, Vec::new())?;
    Ok(UniformOutcome::Built(Box::new(out)))
}

/// Singletons on the color-0 side and `k`-element intervals on the other.
///
/// The `s`-th color-0 vertex gets `{s}` and the `j`-th color-1 vertex gets
/// `{jM, ..., jM + k - 1}` with `M = max(a, k + 1)`, `a` the size of the
/// color-0 side. Edge labels are intervals starting at `s + jM`, all distinct.
fn singleton_interval_labels(coloring: &[u8], k: usize) -> Result<Vec<IntegerSet>, SetError> {
    let a = coloring.iter().filter(|&&c| c == 0).count();
    let spacing = a.max(k + 1) as u64;
    let (mut s, mut j) = (0u64, 0u64);
    let mut labels = Vec::with_capacity(coloring.len());
    for &c in coloring {
        if c == 0 {
            labels.push(IntegerSet::singleton(s)?);
            s += 1;
        } else {
            let start = j * spacing;
            labels.push(IntegerSet::new(start..start + k as u64)?);
            j += 1;
        }
    }
    Ok(labels)
}

/// Weak `k`-uniform set-indexer, `k >= 2`; exists exactly on bipartite graphs.
pub fn weakly_uniform_iasi(g: &Graph, k: usize) -> Result<UniformOutcome, ConstructError> {
    if k < 2 {
        return Err(ConstructError::InvalidParameter(format!(
            "weakly uniform construction needs k >= 2, got {k}"
        )));
    }
    let b = g.is_bipartite();
    let Some(coloring) = b.coloring() else {
        return Ok(not_bipartite(b, "no weakly uniform set-indexer exists"));
    };
    let labels = singleton_interval_labels(coloring, k)?;
    let out = verify_and_repair(g.clone(), labels, Target::Iasi, Vec::new())?;
    Ok(UniformOutcome::Built(Box::new(out)))
}

fn integer_sqrt(k: usize) -> Option<usize> {
    let r = (k as f64).sqrt().round() as usize;
    (r * r == k).then_some(r)
}

fn primes_from(min: u64, count: usize) -> Vec<u64> {
    let is_prime = |p: u64| p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    (min.max(2)..).filter(|&p| is_prime(p)).take(count).collect()
}

/// Strong `k`-uniform set-indexer.
///
/// Bipartite graphs use singletons against `k`-element intervals (for `k = 1`
/// the canonical labeling). Other graphs need `k = l^2`: vertex `v` then gets
/// the progression `{0, p_v, ..., (l-1) p_v}` with distinct primes `p_v >= l`,
/// whose difference sets are pairwise disjoint.
pub fn strongly_uniform_iasi(g: &Graph, k: usize) -> Result<UniformOutcome, ConstructError> {
    if k == 0 {
        return Err(ConstructError::InvalidParameter("k must be positive".into()));
    }
    let b = g.is_bipartite();
    let mut notes = Vec::new();
    let labels = if let Some(coloring) = b.coloring() {
        notes.push("bipartite branch".to_string());
        if k == 1 {
            return canonical_iasi(g).map(|o| UniformOutcome::Built(Box::new(o)));
        }
        singleton_interval_labels(coloring, k)?
    } else {
        let Some(l) = integer_sqrt(k) else {
            return Ok(not_bipartite(
                b,
                &format!("{k} is not a perfect square, so no strongly {k}-uniform set-indexer exists"),
            ));
        };
        notes.push(format!("completely uniform branch, l = {l}"));
        if l == 1 {
            return canonical_iasi(g).map(|mut o| {
                o.notes = notes;
                UniformOutcome::Built(Box::new(o))
            });
        }
        let primes = primes_from(l as u64, g.vertex_count());
        primes
            .iter()
            .map(|&p| IntegerSet::new((0..l as u64).map(|t| t * p)))
            .collect::<Result<Vec<_>, _>>()?
    };
    let out = verify_and_repair(g.clone(), labels, Target::Iasi, notes)?;
    Ok(UniformOutcome::Built(Box::new(out)))
}
