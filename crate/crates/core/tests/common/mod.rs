//! Naive reference implementations shared by the integration tests. Nothing
//! here calls into the library's arithmetic or codec.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

pub type Set = BTreeSet<u64>;

pub fn set(xs: &[u64]) -> Set {
    xs.iter().copied().collect()
}

pub fn sumset(a: &Set, b: &Set) -> Set {
    let mut out = Set::new();
    for x in a {
        for y in b {
            out.insert(x + y);
        }
    }
    out
}

pub fn differences(a: &Set) -> Set {
    let mut out = Set::new();
    for x in a {
        for y in a {
            if x > y {
                out.insert(x - y);
            }
        }
    }
    out
}

/// Sum value to the number of pairs producing it.
pub fn class_sizes(a: &Set, b: &Set) -> BTreeMap<u64, usize> {
    let mut out = BTreeMap::new();
    for x in a {
        for y in b {
            *out.entry(x + y).or_insert(0) += 1;
        }
    }
    out
}

/// Every non-empty subset of `{0..=max}` as a bitmask-decoded set.
pub fn all_subsets(max: u64) -> Vec<Set> {
    (1u64..1 << (max + 1))
        .map(|m| (0..=max).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// graph6 decoding, bit by bit, for n < 63.
pub fn decode_graph6(s: &str) -> Option<(usize, Vec<(usize, usize)>)> {
    let bytes = s.as_bytes();
    let n = (*bytes.first()? as usize).checked_sub(63)?;
    if n >= 63 {
        return None;
    }
    let mut bits = Vec::new();
    for &c in &bytes[1..] {
        let v = (c as usize).checked_sub(63)?;
        if v > 63 {
            return None;
        }
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    let need = n * (n.saturating_sub(1)) / 2;
    if bits.len() != need.div_ceil(6) * 6 || bits[need..].iter().any(|&b| b) {
        return None;
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort();
    Some((n, edges))
}

pub fn encode_graph6(n: usize, edges: &[(usize, usize)]) -> String {
    let adj: HashSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(adj.contains(&(i, j)));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        s.push((v + 63) as char);
    }
    s
}

/// Two-coloring by trying all 2^n assignments.
pub fn brute_bipartite(n: usize, edges: &[(usize, usize)]) -> bool {
    (0u32..1 << n).any(|c| edges.iter().all(|&(u, v)| (c >> u & 1) != (c >> v & 1)))
}

pub fn brute_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(u, v) in edges {
            for (a, b) in [(u, v), (v, u)] {
                if a == x && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub struct Verdict {
    pub iasl: bool,
    pub iasi: bool,
    pub weak: bool,
    pub strong: bool,
    pub edge_sizes: Vec<usize>,
}

pub fn classify(labels: &[Set], edges: &[(usize, usize)]) -> Verdict {
    let distinct = |xs: &[Set]| xs.iter().collect::<HashSet<_>>().len() == xs.len();
    let edge_labels: Vec<Set> = edges.iter().map(|&(u, v)| sumset(&labels[u], &labels[v])).collect();
    let weak = edges
        .iter()
        .zip(&edge_labels)
        .all(|(&(u, v), l)| l.len() == labels[u].len().max(labels[v].len()));
    let strong = edges
        .iter()
        .zip(&edge_labels)
        .all(|(&(u, v), l)| l.len() == labels[u].len() * labels[v].len());
    Verdict {
        iasl: distinct(labels),
        iasi: distinct(&edge_labels),
        weak,
        strong,
        edge_sizes: edge_labels.iter().map(BTreeSet::len).collect(),
    }
}

pub fn to_vec(s: &iasi::IntegerSet) -> Set {
    s.iter().collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
