//! Distance representations, generator checks and exhaustive dimension oracles.
//!
//! The brute-force routines enumerate vertex subsets by cardinality and then
//! lexicographically on sorted indices, and test each subset by comparing
//! representation vectors directly. They share nothing with the hitting-set
//! solver and serve as its ground truth.

use std::fmt;
use std::ops::Deref;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Dist, Graph, SimpleGraph, UNREACHABLE};

/// Default vertex-count cap for exhaustive search.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 16;

/// Ordered list of distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OrderedVertexSet(Vec<usize>);

impl OrderedVertexSet {
    /// Validates against a graph of `n` vertices.
    pub fn new(vertices: Vec<usize>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for &v in &vertices {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, bound: n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        Ok(OrderedVertexSet(vertices))
    }

    pub fn empty() -> Self {
        OrderedVertexSet(Vec::new())
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<usize>) -> Self {
        OrderedVertexSet(vertices)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// 1-based labels `v1, v2, ...`.
    pub fn labels(&self) -> Vec<String> {
        self.0.iter().map(|v| format!("v{}", v + 1)).collect()
    }
}

impl Deref for OrderedVertexSet {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for OrderedVertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

/// Distance vector of an edge or vertex with respect to an ordered set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation(pub Vec<Dist>);

fn check_set(g: &Graph, s: &[usize]) -> Result<()> {
    s.iter().try_for_each(|&v| g.check_vertex(v))
}

/// `r(e|S) = (d(s_1, e), ..., d(s_k, e))`.
pub fn edge_representation(g: &Graph, e: usize, s: &[usize]) -> Result<Representation> {
    g.check_edge(e)?;
    check_set(g, s)?;
    let row = g.distances().edge_row(e);
    Ok(Representation(s.iter().map(|&v| row[v]).collect()))
}

/// `r(u|S) = (d(s_1, u), ..., d(s_k, u))`.
pub fn vertex_representation(g: &Graph, u: usize, s: &[usize]) -> Result<Representation> {
    g.check_vertex(u)?;
    check_set(g, s)?;
    let row = g.distances().vertex_row(u);
    Ok(Representation(s.iter().map(|&v| row[v]).collect()))
}

pub fn all_edges(g: &Graph) -> Vec<usize> {
    (0..g.m()).collect()
}

pub fn all_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).collect()
}

/// True when the rows `items` of `table` restricted to columns `s` are pairwise distinct.
fn rows_distinct<'a, F>(row: F, items: &[usize], s: &[usize], buf: &mut Vec<Dist>) -> bool
where
    F: Fn(usize) -> &'a [Dist],
{
    if items.len() <= 1 {
        return true;
    }
    if s.is_empty() {
        return false;
    }
    let k = s.len();
    buf.clear();
    for &i in items {
        let r = row(i);
        buf.extend(s.iter().map(|&v| r[v]));
    }
    let mut keys: Vec<&[Dist]> = buf.chunks_exact(k).collect();
    keys.sort_unstable();
    keys.windows(2).all(|w| w[0] != w[1])
}

/// Whether `s` distinguishes every pair of edges in `f`.
pub fn is_edge_metric_generator(g: &Graph, s: &[usize], f: &[usize]) -> Result<bool> {
    check_set(g, s)?;
    f.iter().try_for_each(|&e| g.check_edge(e))?;
    let t = g.distances();
    Ok(rows_distinct(|e| t.edge_row(e), f, s, &mut Vec::new()))
}

/// Whether `s` distinguishes every pair of vertices in `x`.
pub fn is_metric_generator(g: &Graph, s: &[usize], x: &[usize]) -> Result<bool> {
    check_set(g, s)?;
    x.iter().try_for_each(|&v| g.check_vertex(v))?;
    let t = g.distances();
    Ok(rows_distinct(|v| t.vertex_row(v), x, s, &mut Vec::new()))
}

/// Size of a smallest generator and the first one in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceResult {
    pub size: usize,
    pub basis: OrderedVertexSet,
}

fn exhaustive<'a, F>(
    n: usize,
    cap: usize,
    min_size: usize,
    items: &[usize],
    row: F,
) -> Result<BruteForceResult>
where
    F: Fn(usize) -> &'a [Dist] + Copy,
{
    if n > cap {
        return Err(Error::SizeCapExceeded { n, cap });
    }
    let mut buf = Vec::new();
    for k in min_size..=n {
        for s in (0..n).combinations(k) {
            if rows_distinct(row, items, &s, &mut buf) {
                return Ok(BruteForceResult {
                    size: k,
                    basis: OrderedVertexSet(s),
                });
            }
        }
    }
    unreachable!("the full vertex set distinguishes every pair")
}

/// Smallest admissible basis size for the edge set `f`.
///
/// A basis of a whole graph is a non-empty vertex list, so `edim(P2) = 1`
/// even though the empty set separates a single edge from nothing. Proper
/// subsets `F` of the edges follow the empty-set convention.
pub(crate) fn edge_basis_floor(g: &Graph, f: &[usize]) -> usize {
    let whole = g.m() >= 1 && {
        let mut ids = f.to_vec();
        ids.sort_unstable();
        ids.dedup();
        ids.len() == g.m()
    };
    usize::from(whole)
}

/// Edge metric dimension of `g` restricted to the edges `f`, by exhaustive search.
pub fn brute_force_edim(g: &Graph, f: &[usize]) -> Result<BruteForceResult> {
    brute_force_edim_with_cap(g, f, DEFAULT_BRUTE_FORCE_CAP)
}

pub fn brute_force_edim_with_cap(g: &Graph, f: &[usize], cap: usize) -> Result<BruteForceResult> {
    f.iter().try_for_each(|&e| g.check_edge(e))?;
    let t = g.distances();
    exhaustive(g.n(), cap, edge_basis_floor(g, f), f, |e| t.edge_row(e))
}

/// Metric dimension of `g` restricted to the vertices `x`, by exhaustive search.
pub fn brute_force_dim(g: &Graph, x: &[usize]) -> Result<BruteForceResult> {
    brute_force_dim_with_cap(g, x, DEFAULT_BRUTE_FORCE_CAP)
}

pub fn brute_force_dim_with_cap(g: &Graph, x: &[usize], cap: usize) -> Result<BruteForceResult> {
    x.iter().try_for_each(|&v| g.check_vertex(v))?;
    let t = g.distances();
    exhaustive(g.n(), cap, 0, x, |v| t.vertex_row(v))
}

/// Every vertex lies within distance 1 of every edge.
///
/// Vacuously true for edgeless graphs; false whenever some edge is
/// unreachable from some vertex.
pub fn is_family_f<G: AsRef<SimpleGraph>>(g: &G) -> bool {
    let g = g.as_ref();
    if g.m() == 0 {
        return true;
    }
    (0..g.n()).all(|v| {
        let d = g.bfs(v);
        g.edges().iter().all(|&(x, y)| {
            let de = d[x].min(d[y]);
            de != UNREACHABLE && de <= 1
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::random::connected_graph;
    use proptest::prelude::*;

    fn k3() -> Graph {
        catalog::complete(3).unwrap()
    }

    #[test]
    fn representations() {
        let g = k3();
        assert_eq!(
            edge_representation(&g, 0, &[1, 2]).unwrap(),
            Representation(vec![0, 1])
        );
        let p4 = catalog::path(4).unwrap();
        assert_eq!(
            edge_representation(&p4, 2, &[0, 1]).unwrap(),
            Representation(vec![2, 1])
        );
        assert_eq!(
            edge_representation(&p4, 2, &[2]).unwrap(),
            Representation(vec![0])
        );
        let p3 = catalog::path(3).unwrap();
        assert_eq!(
            vertex_representation(&p3, 2, &[0]).unwrap(),
            Representation(vec![2])
        );
        assert_eq!(
            vertex_representation(&g, 0, &[1, 2]).unwrap(),
            Representation(vec![1, 1])
        );
        assert!(edge_representation(&g, 3, &[0]).is_err());
        assert!(vertex_representation(&g, 0, &[5]).is_err());
    }

    #[test]
    fn generator_checks() {
        let g = k3();
        let e = all_edges(&g);
        assert!(is_edge_metric_generator(&g, &[1, 2], &e).unwrap());
        assert!(!is_edge_metric_generator(&g, &[0], &e).unwrap());
        assert!(is_edge_metric_generator(&g, &[], &[1]).unwrap());
        assert!(is_edge_metric_generator(&g, &[], &[]).unwrap());
        assert!(!is_metric_generator(&g, &[0], &all_vertices(&g)).unwrap());
        let p6 = catalog::path(6).unwrap();
        assert!(is_metric_generator(&p6, &[0], &all_vertices(&p6)).unwrap());
        assert!(is_metric_generator(&p6, &[1, 3], &[1, 3]).unwrap());
    }

    #[test]
    fn small_dimensions() {
        for n in 2..8 {
            let p = catalog::path(n).unwrap();
            assert_eq!(brute_force_edim(&p, &all_edges(&p)).unwrap().size, 1);
            assert_eq!(brute_force_dim(&p, &all_vertices(&p)).unwrap().size, 1);
        }
        let g = k3();
        let r = brute_force_edim(&g, &all_edges(&g)).unwrap();
        assert_eq!(r.size, 2);
        assert_eq!(r.basis.as_slice(), &[0, 1]);
        assert_eq!(brute_force_dim(&g, &all_vertices(&g)).unwrap().size, 2);
        let c4 = catalog::cycle(4).unwrap();
        assert_eq!(brute_force_edim(&c4, &all_edges(&c4)).unwrap().size, 2);
        assert_eq!(brute_force_dim(&c4, &all_vertices(&c4)).unwrap().size, 2);
        let k1 = catalog::path(1).unwrap();
        assert_eq!(brute_force_edim(&k1, &[]).unwrap().size, 0);
        assert_eq!(brute_force_dim(&k1, &[0]).unwrap().size, 0);
        let p2 = catalog::path(2).unwrap();
        assert!(is_edge_metric_generator(&p2, &[], &[0]).unwrap());
        assert_eq!(brute_force_edim(&p2, &[0]).unwrap().basis.as_slice(), &[0]);
        let p3 = catalog::path(3).unwrap();
        assert_eq!(brute_force_edim(&p3, &[1]).unwrap().size, 0);
    }

    #[test]
    fn cap_is_enforced() {
        let g = catalog::path(20).unwrap();
        assert_eq!(
            brute_force_edim(&g, &all_edges(&g)).unwrap_err(),
            Error::SizeCapExceeded { n: 20, cap: 16 }
        );
        assert_eq!(
            brute_force_edim_with_cap(&g, &all_edges(&g), 20)
                .unwrap()
                .size,
            1
        );
    }

    #[test]
    fn family_f() {
        assert!(is_family_f(&k3()));
        assert!(!is_family_f(&catalog::path(4).unwrap()));
        assert!(is_family_f(&catalog::path(1).unwrap()));
        assert!(is_family_f(&catalog::star(4).unwrap()));
        assert!(!is_family_f(&SimpleGraph::new(3, &[(0, 1)]).unwrap()));
    }

    #[test]
    fn ordered_set_validation() {
        assert_eq!(
            OrderedVertexSet::new(vec![1, 1], 3).unwrap_err(),
            Error::DuplicateVertex(1)
        );
        assert!(OrderedVertexSet::new(vec![3], 3).is_err());
        let s = OrderedVertexSet::new(vec![1, 2], 3).unwrap();
        assert_eq!(s.to_string(), "{v2, v3}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn whole_vertex_set_resolves_edges(n in 1usize..10, seed in any::<u64>()) {
            let g = connected_graph(n, 0.3, seed);
            prop_assert!(is_edge_metric_generator(&g, &all_vertices(&g), &all_edges(&g)).unwrap());
        }

        #[test]
        fn generators_are_monotone(n in 2usize..9, seed in any::<u64>(), mask in any::<u16>(), extra in any::<u16>()) {
            let g = connected_graph(n, 0.3, seed);
            let s: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            let t: Vec<usize> = (0..n).filter(|v| (mask | extra) >> v & 1 == 1).collect();
            let e = all_edges(&g);
            if is_edge_metric_generator(&g, &s, &e).unwrap() {
                prop_assert!(is_edge_metric_generator(&g, &t, &e).unwrap());
            }
        }

        #[test]
        fn restricting_edges_never_increases_edim(n in 2usize..8, seed in any::<u64>(), mask in any::<u32>()) {
            let g = connected_graph(n, 0.35, seed);
            let f: Vec<usize> = (0..g.m()).filter(|e| mask >> (e % 32) & 1 == 1).collect();
            let full = brute_force_edim(&g, &all_edges(&g)).unwrap().size;
            prop_assert!(brute_force_edim(&g, &f).unwrap().size <= full);
        }

        #[test]
        fn brute_force_basis_is_minimal(n in 1usize..8, seed in any::<u64>()) {
            let g = connected_graph(n, 0.3, seed);
            let e = all_edges(&g);
            let r = brute_force_edim(&g, &e).unwrap();
            prop_assert!(is_edge_metric_generator(&g, &r.basis, &e).unwrap());
            prop_assert_eq!(r.basis.len(), r.size);
            if r.size > edge_basis_floor(&g, &e) {
                for s in (0..n).combinations(r.size - 1) {
                    prop_assert!(!is_edge_metric_generator(&g, &s, &e).unwrap());
                }
            }
        }

        #[test]
        fn edge_table_uses_min_rule(n in 1usize..11, seed in any::<u64>()) {
            let g = connected_graph(n, 0.3, seed);
            let t = g.distances();
            for (i, &(x, y)) in g.edges().iter().enumerate() {
                for j in 0..n {
                    prop_assert_eq!(t.edge(i, j), t.vertex(x, j).min(t.vertex(y, j)));
                }
            }
            for a in 0..n {
                prop_assert_eq!(t.vertex(a, a), 0);
                for b in 0..n {
                    prop_assert_eq!(t.vertex(a, b), t.vertex(b, a));
                    for c in 0..n {
                        prop_assert!(t.vertex(a, c) <= t.vertex(a, b) + t.vertex(b, c));
                    }
                }
            }
        }
    }
}
