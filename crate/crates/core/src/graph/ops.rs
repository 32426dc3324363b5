//! Graph operations. Every operation that renumbers vertices returns the
//! correspondence between operand and result vertices alongside the graph.

use serde::{Deserialize, Serialize};

use super::{normalize, Edge, Graph, GraphError};

/// Union of two graphs. `left[v]` and `right[v]` give the result vertex of an
/// operand vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionGraph {
    pub graph: Graph,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Union of `g1` and `g2` where each `(a, b)` in `shared` identifies vertex
/// `a` of `g1` with vertex `b` of `g2`. Vertices of `g1` keep their ids; the
/// unshared vertices of `g2` follow in order.
pub fn union(g1: &Graph, g2: &Graph, shared: &[(usize, usize)]) -> Result<UnionGraph, GraphError> {
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let mut right = vec![usize::MAX; n2];
    let mut left_taken = vec![false; n1];
    for &(a, b) in shared {
        if a >= n1 || b >= n2 {
            return Err(GraphError::InconsistentCorrespondence(format!(
                "pair ({a}, {b}) is out of range"
            )));
        }
        if left_taken[a] || right[b] != usize::MAX {
            return Err(GraphError::InconsistentCorrespondence(format!(
                "pair ({a}, {b}) reuses a vertex"
            )));
        }
        left_taken[a] = true;
        right[b] = a;
    }
    let mut next = n1;
    for slot in &mut right {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut edges = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|&(u, v)| (right[u], right[v])));
    Ok(UnionGraph {
        graph: Graph::from_unsorted(next, edges),
        left: (0..n1).collect(),
        right,
    })
}

/// Disjoint union plus every edge between the two operands.
pub fn join(g1: &Graph, g2: &Graph) -> UnionGraph {
    let mut u = union(g1, g2, &[]).expect("empty correspondence is consistent");
    let n1 = g1.vertex_count();
    let mut edges = u.graph.edges().to_vec();
    for a in 0..n1 {
        edges.extend(u.right.iter().map(|&b| (a, b)));
    }
    u.graph = Graph::from_unsorted(u.graph.vertex_count(), edges);
    u
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    Graph::from_canonical(n, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Cartesian,
    Direct,
    Strong,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Direct,
        ProductKind::Strong,
        ProductKind::Lexicographic,
    ];

    /// Adjacency of `(u, v)` and `(u2, v2)` in the product.
    pub fn adjacent(self, g1: &Graph, g2: &Graph, (u, v): Edge, (u2, v2): Edge) -> bool {
        let e1 = g1.has_edge(u, u2);
        let e2 = g2.has_edge(v, v2);
        match self {
            ProductKind::Cartesian => (u == u2 && e2) || (v == v2 && e1),
            ProductKind::Direct => e1 && e2,
            ProductKind::Strong => (e1 && v == v2) || (u == u2 && e2) || (e1 && e2),
            ProductKind::Lexicographic => e1 || (u == u2 && e2),
        }
    }
}

/// A product graph whose vertex `(i, j)` has id `i * right_order + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    pub graph: Graph,
    pub kind: ProductKind,
    pub right_order: usize,
}

impl ProductGraph {
    pub fn pair(&self, id: usize) -> (usize, usize) {
        (id / self.right_order, id % self.right_order)
    }

    pub fn id(&self, i: usize, j: usize) -> usize {
        i * self.right_order + j
    }
}

pub fn product(kind: ProductKind, g1: &Graph, g2: &Graph) -> ProductGraph {
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let total = n1 * n2;
    let mut edges = Vec::new();
    for a in 0..total {
        for b in a + 1..total {
            let pa = (a / n2, a % n2);
            let pb = (b / n2, b % n2);
            if kind.adjacent(g1, g2, pa, pb) {
                edges.push((a, b));
            }
        }
    }
    ProductGraph {
        graph: Graph::from_canonical(total, edges),
        kind,
        right_order: n2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoronaVertex {
    Base(usize),
    /// Vertex `vertex` of the `copy`-th copy (0-based) of the second graph.
    Copy { copy: usize, vertex: usize },
}

/// Corona: base vertices `0..n1`, then copy `i` vertex `j` at
/// `n1 + i * n2 + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaGraph {
    pub graph: Graph,
    pub origin: Vec<CoronaVertex>,
}

pub fn corona(g1: &Graph, g2: &Graph) -> CoronaGraph {
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let id = |i: usize, j: usize| n1 + i * n2 + j;
    let mut edges = g1.edges().to_vec();
    let mut origin: Vec<CoronaVertex> = (0..n1).map(CoronaVertex::Base).collect();
    for i in 0..n1 {
        origin.extend((0..n2).map(|j| CoronaVertex::Copy { copy: i, vertex: j }));
        edges.extend(g2.edges().iter().map(|&(a, b)| (id(i, a), id(i, b))));
        edges.extend((0..n2).map(|j| (i, id(i, j))));
    }
    CoronaGraph {
        graph: Graph::from_unsorted(n1 + n1 * n2, edges),
        origin,
    }
}

/// Rooted product with vertex `(i, j)` at `i * copy_order + j`; vertex `i` of
/// the first graph is `(i, root)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: usize,
    pub copy_order: usize,
}

impl RootedGraph {
    pub fn id(&self, i: usize, j: usize) -> usize {
        i * self.copy_order + j
    }

    pub fn pair(&self, id: usize) -> (usize, usize) {
        (id / self.copy_order, id % self.copy_order)
    }
}

pub fn rooted_product(g1: &Graph, g2: &Graph, root: usize) -> Result<RootedGraph, GraphError> {
    g2.check_vertex(root)?;
    let n2 = g2.vertex_count();
    let id = |i: usize, j: usize| i * n2 + j;
    let mut edges: Vec<Edge> = g1.edges().iter().map(|&(a, b)| (id(a, root), id(b, root))).collect();
    for i in 0..g1.vertex_count() {
        edges.extend(g2.edges().iter().map(|&(a, b)| (id(i, a), id(i, b))));
    }
    Ok(RootedGraph {
        graph: Graph::from_unsorted(g1.vertex_count() * n2, edges),
        root,
        copy_order: n2,
    })
}

/// Line graph; vertex `i` stands for `edge_of[i]`, the `i`-th edge of the
/// source in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraph {
    pub graph: Graph,
    pub edge_of: Vec<Edge>,
}

pub fn line_graph(g: &Graph) -> LineGraph {
    let edge_of = g.edges().to_vec();
    let mut edges = Vec::new();
    for v in g.vertices() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_index(v, w).expect("neighbor edge exists"))
            .collect();
        for (k, &a) in incident.iter().enumerate() {
            edges.extend(incident[k + 1..].iter().map(|&b| (a, b)));
        }
    }
    LineGraph {
        graph: Graph::from_unsorted(edge_of.len(), edges),
        edge_of,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Element {
    Vertex(usize),
    Edge(usize, usize),
}

/// Total graph; vertices `0..n` are the source vertices, `n..n+m` its edges in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalGraph {
    pub graph: Graph,
    pub elements: Vec<Element>,
}

pub fn total_graph(g: &Graph) -> TotalGraph {
    let n = g.vertex_count();
    let line = line_graph(g);
    let mut edges = g.edges().to_vec();
    edges.extend(line.graph.edges().iter().map(|&(a, b)| (n + a, n + b)));
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
    }
    let mut elements: Vec<Element> = (0..n).map(Element::Vertex).collect();
    elements.extend(g.edges().iter().map(|&(u, v)| Element::Edge(u, v)));
    TotalGraph {
        graph: Graph::from_unsorted(n + g.edge_count(), edges),
        elements,
    }
}

/// Subdivision of `edge`; the new vertex is appended with id `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub graph: Graph,
    pub edge: Edge,
    pub new_vertex: usize,
}

pub fn subdivide_edge(g: &Graph, u: usize, v: usize) -> Result<Subdivision, GraphError> {
    let edge = g.check_edge(u, v)?;
    let w = g.vertex_count();
    let mut edges: Vec<Edge> = g.edges().iter().copied().filter(|&e| e != edge).collect();
    edges.push((edge.0, w));
    edges.push((edge.1, w));
    Ok(Subdivision {
        graph: Graph::from_unsorted(w + 1, edges),
        edge,
        new_vertex: w,
    })
}

/// Contraction of `edge` into its smaller endpoint. `map[x]` is the new id of
/// old vertex `x`; both endpoints map to `merged`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    pub edge: Edge,
    pub merged: usize,
    pub map: Vec<usize>,
}

/// Contracts an edge, dropping the loop and collapsing parallel edges.
pub fn contract_edge(g: &Graph, u: usize, v: usize) -> Result<Contraction, GraphError> {
    let edge = g.check_edge(u, v)?;
    let (lo, hi) = edge;
    let map: Vec<usize> = g
        .vertices()
        .map(|x| match x.cmp(&hi) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => lo,
            std::cmp::Ordering::Greater => x - 1,
        })
        .collect();
    let edges = g
        .edges()
        .iter()
        .map(|&(a, b)| (map[a], map[b]))
        .filter(|&(a, b)| a != b)
        .collect();
    Ok(Contraction {
        graph: Graph::from_unsorted(g.vertex_count() - 1, edges),
        edge,
        merged: lo,
        map,
    })
}

/// Elementary topological reduction of a degree-2 vertex. `map[x]` is the new
/// id of old vertex `x` (`None` for the removed vertex); `joined` is the new
/// edge between the former neighbors, in new ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub graph: Graph,
    pub removed: usize,
    pub joined: Edge,
    pub map: Vec<Option<usize>>,
}

pub fn reduce_vertex(g: &Graph, v: usize) -> Result<Reduction, GraphError> {
    g.check_vertex(v)?;
    if g.degree(v) != 2 {
        return Err(GraphError::NotReducible {
            v,
            reason: format!("degree is {}, not 2", g.degree(v)),
        });
    }
    let (a, b) = (g.neighbors(v)[0], g.neighbors(v)[1]);
    if g.has_edge(a, b) {
        return Err(GraphError::NotReducible {
            v,
            reason: format!("neighbors {a} and {b} are already adjacent"),
        });
    }
    let map: Vec<Option<usize>> = g
        .vertices()
        .map(|x| match x.cmp(&v) {
            std::cmp::Ordering::Less => Some(x),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(x - 1),
        })
        .collect();
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|&&(x, y)| x != v && y != v)
        .map(|&(x, y)| (map[x].unwrap(), map[y].unwrap()))
        .collect();
    let joined = normalize(map[a].unwrap(), map[b].unwrap());
    edges.push(joined);
    Ok(Reduction {
        graph: Graph::from_unsorted(g.vertex_count() - 1, edges),
        removed: v,
        joined,
        map,
    })
}

/// Induced subgraph; new vertex `i` is old vertex `vertices[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

/// Keeps the given vertices (in ascending order) and every edge between them.
pub fn induced_subgraph(g: &Graph, subset: &[usize]) -> Result<InducedSubgraph, GraphError> {
    let mut vertices = subset.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    let mut new_id = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in vertices.iter().enumerate() {
        g.check_vertex(v)?;
        new_id[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(a, b)| new_id[a] != usize::MAX && new_id[b] != usize::MAX)
        .map(|&(a, b)| (new_id[a], new_id[b]))
        .collect();
    Ok(InducedSubgraph {
        graph: Graph::from_unsorted(vertices.len(), edges),
        vertices,
    })
}

pub fn delete_edge(g: &Graph, u: usize, v: usize) -> Result<Graph, GraphError> {
    let edge = g.check_edge(u, v)?;
    let edges = g.edges().iter().copied().filter(|&e| e != edge).collect();
    Ok(Graph::from_canonical(g.vertex_count(), edges))
}

pub fn delete_vertex(g: &Graph, v: usize) -> Result<InducedSubgraph, GraphError> {
    g.check_vertex(v)?;
    let keep: Vec<usize> = g.vertices().filter(|&x| x != v).collect();
    induced_subgraph(g, &keep)
}

/// One step of a minor script. Ids refer to the graph produced by the
/// previous step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinorStep {
    DeleteEdge(usize, usize),
    DeleteVertex(usize),
    Contract(usize, usize),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges_of(g: &Graph) -> Vec<Edge> {
        g.edges().to_vec()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&Graph::complete(3)), Graph::empty(3));
        let m = complement(&Graph::cycle(4));
        assert_eq!(edges_of(&m), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn union_examples() {
        let k2 = Graph::complete(2);
        let u = union(&k2, &k2, &[]).unwrap();
        assert_eq!((u.graph.vertex_count(), u.graph.edge_count()), (4, 2));

        let k3 = Graph::complete(3);
        let u = union(&k3, &k3, &[(0, 0)]).unwrap();
        assert_eq!((u.graph.vertex_count(), u.graph.edge_count()), (5, 6));
        assert_eq!(u.right, vec![0, 3, 4]);

        let c4 = Graph::cycle(4);
        let full: Vec<(usize, usize)> = (0..4).map(|v| (v, v)).collect();
        assert_eq!(union(&c4, &c4, &full).unwrap().graph, c4);

        assert!(union(&k3, &k3, &[(0, 0), (0, 1)]).is_err());
        assert!(union(&k3, &k3, &[(0, 5)]).is_err());
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::complete(1);
        assert_eq!(join(&k1, &k1).graph, Graph::complete(2));
        let wheel = join(&k1, &Graph::cycle(4)).graph;
        assert_eq!((wheel.vertex_count(), wheel.edge_count()), (5, 8));
        let k2 = Graph::complete(2);
        assert_eq!(join(&k2, &k2).graph, Graph::complete(4));
    }

    #[test]
    fn product_examples() {
        let k2 = Graph::complete(2);
        // (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3; C4 as 0-1-3-2-0
        let cart = product(ProductKind::Cartesian, &k2, &k2);
        assert_eq!(edges_of(&cart.graph), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(cart.graph.is_isomorphism(&Graph::cycle(4), &[0, 1, 3, 2]));
        let direct = product(ProductKind::Direct, &k2, &k2);
        assert_eq!(edges_of(&direct.graph), vec![(0, 3), (1, 2)]);
        assert_eq!(product(ProductKind::Strong, &k2, &k2).graph, Graph::complete(4));
        assert_eq!(product(ProductKind::Lexicographic, &k2, &k2).graph, Graph::complete(4));
        assert_eq!(cart.pair(2), (1, 0));
        assert_eq!(cart.id(1, 1), 3);
    }

    #[test]
    fn corona_examples() {
        let k1 = Graph::complete(1);
        assert_eq!(corona(&k1, &k1).graph, Graph::complete(2));
        let k2 = Graph::complete(2);
        let c = corona(&k2, &k2);
        assert_eq!((c.graph.vertex_count(), c.graph.edge_count()), (6, 7));
        let c = corona(&Graph::complete(3), &k1);
        assert_eq!((c.graph.vertex_count(), c.graph.edge_count()), (6, 6));
        assert!((0..3).all(|v| c.graph.degree(v) == 3));
        assert!((3..6).all(|v| c.graph.degree(v) == 1));
        assert_eq!(c.origin[4], CoronaVertex::Copy { copy: 1, vertex: 0 });
    }

    #[test]
    fn rooted_examples() {
        let k2 = Graph::complete(2);
        let r = rooted_product(&k2, &k2, 0).unwrap();
        // 1 - 0 - 2 - 3
        assert!(r.graph.is_isomorphism(&Graph::path(4), &[1, 0, 2, 3]));
        let c4 = Graph::cycle(4);
        assert_eq!(rooted_product(&c4, &Graph::complete(1), 0).unwrap().graph, c4);
        for root in 0..2 {
            let r = rooted_product(&Graph::complete(3), &Graph::path(2), root).unwrap();
            assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (6, 6));
            let pendants = r.graph.vertices().filter(|&v| r.graph.degree(v) == 1).count();
            assert_eq!(pendants, 3);
        }
        assert!(rooted_product(&k2, &k2, 2).is_err());
    }

    #[test]
    fn line_graph_examples() {
        assert_eq!(line_graph(&Graph::complete(3)).graph, Graph::complete(3));
        assert_eq!(line_graph(&Graph::path(3)).graph, Graph::complete(2));
        assert_eq!(line_graph(&Graph::star(3)).graph, Graph::complete(3));
        assert_eq!(line_graph(&Graph::empty(3)).graph, Graph::empty(0));
    }

    #[test]
    fn total_graph_examples() {
        assert_eq!(total_graph(&Graph::complete(2)).graph, Graph::complete(3));
        let t = total_graph(&Graph::path(3));
        // 2 vertex-vertex + 1 edge-edge + 4 incidences
        assert_eq!((t.graph.vertex_count(), t.graph.edge_count()), (5, 7));
        assert_eq!(t.elements[3], Element::Edge(0, 1));
    }

    #[test]
    fn subdivision_and_contraction() {
        let s = subdivide_edge(&Graph::complete(2), 0, 1).unwrap();
        assert!(s.graph.is_isomorphism(&Graph::path(3), &[0, 2, 1]));
        assert_eq!(s.new_vertex, 2);
        assert!(subdivide_edge(&Graph::path(3), 0, 2).is_err());

        let p3 = Graph::path(3);
        for (u, v) in [(0, 1), (1, 2)] {
            assert_eq!(contract_edge(&p3, u, v).unwrap().graph, Graph::complete(2));
        }
        for &(u, v) in Graph::cycle(4).edges() {
            assert_eq!(contract_edge(&Graph::cycle(4), u, v).unwrap().graph, Graph::complete(3));
        }
        let c = contract_edge(&Graph::cycle(4), 1, 2).unwrap();
        assert_eq!(c.map, vec![0, 1, 1, 2]);
        assert_eq!(contract_edge(&p3, 0, 2), Err(GraphError::MissingEdge(0, 2)));
    }

    #[test]
    fn reduction_inverts_subdivision() {
        let c4 = Graph::cycle(4);
        let s = subdivide_edge(&c4, 0, 1).unwrap();
        let r = reduce_vertex(&s.graph, s.new_vertex).unwrap();
        assert_eq!(r.graph, c4);
        assert_eq!(r.joined, (0, 1));
        assert!(reduce_vertex(&Graph::complete(3), 0).is_err());
        assert!(reduce_vertex(&Graph::star(3), 0).is_err());
    }

    #[test]
    fn induced_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(induced_subgraph(&k3, &[0, 1]).unwrap().graph, Graph::complete(2));
        assert_eq!(induced_subgraph(&k3, &[0, 1, 2]).unwrap().graph, k3);
        let p = induced_subgraph(&Graph::cycle(4), &[1, 2, 3]).unwrap();
        assert_eq!(p.graph, Graph::path(3));
        assert!(induced_subgraph(&k3, &[4]).is_err());
        let d = delete_vertex(&k3, 1).unwrap();
        assert_eq!(d.vertices, vec![0, 2]);
        assert_eq!(delete_edge(&k3, 2, 0).unwrap(), Graph::path(3));
    }
}
