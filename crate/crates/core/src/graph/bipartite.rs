use std::collections::VecDeque;

use serde::Serialize;

use super::Graph;

/// Outcome of a bipartiteness test, always with a checkable certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bipartiteness {
    /// A proper 2-coloring, `coloring[v]` in `{0, 1}`.
    Bipartite { coloring: Vec<u8> },
    /// An odd cycle `c0, c1, ..., c(k-1)` with `k` odd; consecutive vertices
    /// and the pair `(c(k-1), c0)` are adjacent.
    OddCycle { cycle: Vec<usize> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }

    pub fn coloring(&self) -> Option<&[u8]> {
        match self {
            Bipartiteness::Bipartite { coloring } => Some(coloring),
            Bipartiteness::OddCycle { .. } => None,
        }
    }

    pub fn odd_cycle(&self) -> Option<&[usize]> {
        match self {
            Bipartiteness::OddCycle { cycle } => Some(cycle),
            Bipartiteness::Bipartite { .. } => None,
        }
    }

    /// Re-checks the certificate against `graph`.
    pub fn verify(&self, graph: &Graph) -> bool {
        match self {
            Bipartiteness::Bipartite { coloring } => {
                coloring.len() == graph.vertex_count()
                    && coloring.iter().all(|&c| c < 2)
                    && graph.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
            }
            Bipartiteness::OddCycle { cycle } => {
                let k = cycle.len();
                k % 2 == 1
                    && k >= 3
                    && (0..k).all(|i| graph.has_edge(cycle[i], cycle[(i + 1) % k]))
            }
        }
    }
}

pub(super) fn two_color(graph: &Graph) -> Bipartiteness {
    let n = graph.vertex_count();
    let mut color: Vec<Option<u8>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in graph.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(1 - cu);
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return Bipartiteness::OddCycle {
                            cycle: tree_cycle(&parent, &depth, u, w),
                        }
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartiteness::Bipartite {
        coloring: color.into_iter().map(|c| c.unwrap()).collect(),
    }
}

/// Cycle closed by the non-tree edge `(u, w)`: the tree path from their
/// lowest common ancestor to `u`, then back up from `w`.
fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_a.push(a);
        up_b.push(b);
    }
    // both paths now end at the common ancestor
    up_b.pop();
    up_a.reverse();
    up_a.extend(up_b);
    up_a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_cycle_alternates() {
        let c4 = Graph::cycle(4);
        let b = c4.is_bipartite();
        assert_eq!(b.coloring(), Some(&[0u8, 1, 0, 1][..]));
        assert!(b.verify(&c4));
    }

    #[test]
    fn triangle_yields_odd_cycle() {
        let k3 = Graph::complete(3);
        let b = k3.is_bipartite();
        assert_eq!(b.odd_cycle(), Some(&[0usize, 1, 2][..]));
        assert!(b.verify(&k3));
    }

    #[test]
    fn disconnected_forest_is_bipartite() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let b = g.is_bipartite();
        assert!(b.is_bipartite());
        assert!(b.verify(&g));
    }

    #[test]
    fn long_odd_cycle_certificate() {
        // pentagon with a pendant path hanging off vertex 4
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (4, 5), (5, 6)]).unwrap();
        let b = g.is_bipartite();
        let cycle = b.odd_cycle().unwrap();
        assert_eq!(cycle.len(), 5);
        assert!(b.verify(&g));
    }
}
