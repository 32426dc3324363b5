use super::{Edge, Graph, GraphError};

/// Largest vertex count accepted by [`enumerate_graphs`].
pub const DEFAULT_ENUMERATION_CAP: usize = 6;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GraphFilter {
    pub connected_only: bool,
    pub skip_isolated: bool,
}

impl GraphFilter {
    pub const ALL: GraphFilter = GraphFilter { connected_only: false, skip_isolated: false };
    pub const CONNECTED: GraphFilter = GraphFilter { connected_only: true, skip_isolated: false };

    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.connected_only || g.is_connected())
            && (!self.skip_isolated || !g.has_isolated_vertices())
    }
}

/// All labeled graphs on a fixed vertex set, in increasing edge-mask order.
/// Bit `i` of the mask selects the `i`-th pair in lexicographic order.
#[derive(Debug, Clone)]
pub struct GraphStream {
    n: usize,
    pairs: Vec<Edge>,
    next_mask: u64,
    end: u64,
    filter: GraphFilter,
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            let edges = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_canonical(self.n, edges);
            if self.filter.accepts(&g) {
                return Some(g);
            }
        }
        None
    }
}

pub fn enumerate_graphs(n: usize, filter: GraphFilter) -> Result<GraphStream, GraphError> {
    enumerate_graphs_with_cap(n, filter, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_graphs_with_cap(
    n: usize,
    filter: GraphFilter,
    cap: usize,
) -> Result<GraphStream, GraphError> {
    // 2^(n choose 2) must fit the mask
    if n > cap || n > 11 {
        return Err(GraphError::EnumerationCap { n, cap: cap.min(11) });
    }
    let pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let end = 1u64 << pairs.len();
    Ok(GraphStream { n, pairs, next_mask: 0, end, filter })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_graphs(2, GraphFilter::ALL).unwrap().count(), 2);
        let no_isolated = GraphFilter { skip_isolated: true, ..GraphFilter::ALL };
        assert_eq!(enumerate_graphs(2, no_isolated).unwrap().count(), 1);
        let connected: Vec<Graph> = enumerate_graphs(3, GraphFilter::CONNECTED).unwrap().collect();
        assert_eq!(connected.len(), 4);
        assert_eq!(connected.last().unwrap(), &Graph::complete(3));
        assert_eq!(enumerate_graphs(4, GraphFilter::ALL).unwrap().count(), 64);
        // labeled connected graphs on 4 and 5 vertices
        assert_eq!(enumerate_graphs(4, GraphFilter::CONNECTED).unwrap().count(), 38);
        assert_eq!(enumerate_graphs(5, GraphFilter::CONNECTED).unwrap().count(), 728);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_graphs(7, GraphFilter::ALL),
            Err(GraphError::EnumerationCap { n: 7, cap: 6 })
        ));
        assert!(enumerate_graphs_with_cap(7, GraphFilter::CONNECTED, 7).is_ok());
    }

    #[test]
    fn streams_restart_independently() {
        let s = enumerate_graphs(3, GraphFilter::ALL).unwrap();
        let a: Vec<Graph> = s.clone().collect();
        let b: Vec<Graph> = s.collect();
        assert_eq!(a, b);
        assert_eq!(a[1].edges(), &[(0, 1)]);
        assert_eq!(a[2].edges(), &[(0, 2)]);
    }
}
