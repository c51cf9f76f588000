//! Simple undirected graphs and their distance tables.
//!
//! [`SimpleGraph`] only enforces simplicity (no loops, no parallel edges).
//! [`Graph`] additionally requires connectivity, which every dimension
//! routine in this crate assumes. Edge identity is positional: edge `i` is
//! the `i`-th pair handed to the constructor.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Hop distance between vertices, or between a vertex and an edge.
pub type Dist = u32;

/// Marker for an unreachable vertex in [`SimpleGraph::bfs`].
pub const UNREACHABLE: Dist = Dist::MAX;

/// A finite simple undirected graph, not necessarily connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, bound: n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(SimpleGraph {
            n,
            edges: edges.to_vec(),
            adj,
        })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Breadth-first distances from `src`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs(&self, src: usize) -> Vec<Dist> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(x) = queue.pop_front() {
            let d = dist[x] + 1;
            for &y in &self.adj[x] {
                if dist[y] == UNREACHABLE {
                    dist[y] = d;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: v,
                bound: self.n,
            })
        }
    }

    pub(crate) fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.m() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: e,
                bound: self.m(),
            })
        }
    }
}

impl AsRef<SimpleGraph> for SimpleGraph {
    fn as_ref(&self) -> &SimpleGraph {
        self
    }
}

/// A connected simple graph with lazily computed distance tables.
pub struct Graph {
    base: SimpleGraph,
    labels: Option<Vec<String>>,
    tables: OnceLock<DistanceTables>,
}

impl Graph {
    /// Validates `edges` and checks connectivity.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_simple(SimpleGraph::new(n, edges)?)
    }

    pub fn from_simple(base: SimpleGraph) -> Result<Self> {
        if !base.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(Graph {
            base,
            labels: None,
            tables: OnceLock::new(),
        })
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::BadParams {
                name: "labels".into(),
                msg: format!("expected {} labels, got {}", self.n(), labels.len()),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Display label of `v`; defaults to the 1-based `v{v+1}`.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => format!("v{}", v + 1),
        }
    }

    pub fn as_simple(&self) -> &SimpleGraph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    pub fn m(&self) -> usize {
        self.base.m()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        self.base.edges()
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.base.edge(i)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.base.neighbors(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.base.degree(v)
    }

    /// All-pairs tables, computed on first use.
    pub fn distances(&self) -> &DistanceTables {
        self.tables.get_or_init(|| DistanceTables::compute(&self.base))
    }

    pub fn dist(&self, u: usize, v: usize) -> Dist {
        self.distances().vertex(u, v)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        self.base.check_vertex(v)
    }

    pub(crate) fn check_edge(&self, e: usize) -> Result<()> {
        self.base.check_edge(e)
    }
}

impl AsRef<SimpleGraph> for Graph {
    fn as_ref(&self) -> &SimpleGraph {
        &self.base
    }
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            base: self.base.clone(),
            labels: self.labels.clone(),
            tables: self.tables.clone(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Vertex-vertex distances (`n x n`) and the vertex-edge matrix `D` (`m x n`)
/// with `D[i][j] = d(e_i, v_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTables {
    n: usize,
    m: usize,
    vv: Vec<Dist>,
    ve: Vec<Dist>,
}

impl DistanceTables {
    /// One BFS per vertex. The graph must be connected.
    pub fn compute(g: &SimpleGraph) -> Self {
        let n = g.n();
        let mut vv = Vec::with_capacity(n * n);
        for s in 0..n {
            vv.extend(g.bfs(s));
        }
        let m = g.m();
        let mut ve = Vec::with_capacity(m * n);
        for &(x, y) in g.edges() {
            for j in 0..n {
                ve.push(vv[x * n + j].min(vv[y * n + j]));
            }
        }
        DistanceTables { n, m, vv, ve }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `d(u, v)`.
    pub fn vertex(&self, u: usize, v: usize) -> Dist {
        self.vv[u * self.n + v]
    }

    /// `d(v, e)` for vertex `v` and edge index `e`.
    pub fn edge(&self, e: usize, v: usize) -> Dist {
        self.ve[e * self.n + v]
    }

    pub fn vertex_row(&self, u: usize) -> &[Dist] {
        &self.vv[u * self.n..(u + 1) * self.n]
    }

    /// Row `e` of `D`: distances from edge `e` to every vertex.
    pub fn edge_row(&self, e: usize) -> &[Dist] {
        &self.ve[e * self.n..(e + 1) * self.n]
    }

    pub fn edge_matrix(&self) -> Vec<Vec<Dist>> {
        (0..self.m).map(|e| self.edge_row(e).to_vec()).collect()
    }
}

/// All-pairs distances of a connected graph.
pub fn all_pairs_distances(g: &Graph) -> &DistanceTables {
    g.distances()
}

/// `d(v, xy) = min(d(v, x), d(v, y))`.
pub fn vertex_edge_distance(g: &Graph, v: usize, e: usize) -> Result<Dist> {
    g.check_vertex(v)?;
    g.check_edge(e)?;
    Ok(g.distances().edge(e, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::new(4, &[(0, 1), (2, 3)]).unwrap_err(),
            Error::Disconnected
        );
        assert_eq!(Graph::new(2, &[(0, 0)]).unwrap_err(), Error::LoopEdge(0));
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]).unwrap_err(),
            Error::DuplicateEdge(1, 0)
        );
        assert_eq!(
            Graph::new(2, &[(0, 2)]).unwrap_err(),
            Error::IndexOutOfRange { index: 2, bound: 2 }
        );
        assert_eq!(Graph::new(0, &[]).unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn small_graphs() {
        let p2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!((p2.n(), p2.m()), (2, 1));
        let g = k3();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.distances().vertex(0, 0), 0);
    }

    #[test]
    fn k3_edge_matrix() {
        // rows e1 = v1v2, e2 = v2v3, e3 = v1v3
        let g = k3();
        assert_eq!(
            g.distances().edge_matrix(),
            vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]
        );
        assert_eq!(vertex_edge_distance(&g, 2, 0).unwrap(), 1);
    }

    #[test]
    fn path_and_cycle_distances() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.dist(0, 2), 2);
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(vertex_edge_distance(&c4, 2, 0).unwrap(), 1);
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(vertex_edge_distance(&p4, 0, 2).unwrap(), 2);
        assert_eq!(
            vertex_edge_distance(&p4, 4, 0).unwrap_err(),
            Error::IndexOutOfRange { index: 4, bound: 4 }
        );
    }

    #[test]
    fn endpoint_distance_is_zero() {
        let g = k3();
        for (i, &(x, y)) in g.edges().iter().enumerate() {
            assert_eq!(vertex_edge_distance(&g, x, i).unwrap(), 0);
            assert_eq!(vertex_edge_distance(&g, y, i).unwrap(), 0);
        }
    }

    #[test]
    fn default_labels_are_one_based() {
        let g = k3();
        assert_eq!(g.label(0), "v1");
        let g = g
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        assert_eq!(g.label(2), "c");
    }
}
