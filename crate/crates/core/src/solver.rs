//! The 0/1 program for edge metric bases, recast as minimum hitting set.
//!
//! For edges `e_i`, `e_j` the program asks `sum_t |d_it - d_jt| x_t > 0`.
//! With binary `x` only the support of the coefficients matters, so each pair
//! becomes the covering row `sum_{t : d_it != d_jt} x_t >= 1`, i.e. the chosen
//! set must hit `{v_t : d(v_t, e_i) != d(v_t, e_j)}`.
//!
//! [`solve_hitting_set`] runs an exact branch-and-bound:
//!
//! * incumbent from a greedy cover (most uncovered rows, ties to lowest index);
//! * lower bound from a greedily grown family of pairwise-disjoint uncovered rows;
//! * branching on the uncovered row with fewest free vertices, each branch
//!   banning the vertices tried before it.
//!
//! Once the optimum is known, a second pass fixes variables `x_1, x_2, ...` in
//! order, trying `0` first, which yields the optimal set whose indicator vector
//! is lexicographically smallest. The returned witness therefore does not
//! depend on search heuristics.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Dist, Graph};
use crate::resolve::{edge_basis_floor, OrderedVertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairKind {
    EdgePair,
    VertexPair,
}

/// The pair of items a covering row was generated from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Origin {
    pub i: usize,
    pub j: usize,
    pub kind: PairKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constraint {
    /// Sorted vertex indices; at least one must be chosen.
    pub members: Vec<usize>,
    pub origins: Vec<Origin>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HittingSetInstance {
    universe: usize,
    constraints: Vec<Constraint>,
}

impl HittingSetInstance {
    pub fn builder(universe: usize) -> InstanceBuilder {
        InstanceBuilder {
            universe,
            dedup: true,
            index: HashMap::new(),
            constraints: Vec::new(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn is_hit_by(&self, set: &[usize]) -> bool {
        let mut chosen = vec![false; self.universe];
        for &v in set {
            chosen[v] = true;
        }
        self.constraints
            .iter()
            .all(|c| c.members.iter().any(|&v| chosen[v]))
    }
}

/// Accumulates covering rows, merging identical member sets unless disabled.
pub struct InstanceBuilder {
    universe: usize,
    dedup: bool,
    index: HashMap<Vec<usize>, usize>,
    constraints: Vec<Constraint>,
}

impl InstanceBuilder {
    pub fn dedup(mut self, on: bool) -> Self {
        self.dedup = on;
        self
    }

    pub fn add(&mut self, origin: Origin, mut members: Vec<usize>) {
        members.sort_unstable();
        members.dedup();
        if self.dedup {
            if let Some(&at) = self.index.get(&members) {
                self.constraints[at].origins.push(origin);
                return;
            }
            self.index.insert(members.clone(), self.constraints.len());
        }
        self.constraints.push(Constraint {
            members,
            origins: vec![origin],
        });
    }

    pub fn build(self) -> HittingSetInstance {
        HittingSetInstance {
            universe: self.universe,
            constraints: self.constraints,
        }
    }
}

/// Vertices `t` with `a[t] != b[t]`.
pub fn distinguishing_set(a: &[Dist], b: &[Dist]) -> Vec<usize> {
    a.iter()
        .zip(b)
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(t, _)| t)
        .collect()
}

/// One covering row per unordered edge pair `i < j`, identical rows merged.
pub fn build_edge_instance(g: &Graph) -> HittingSetInstance {
    build_edge_instance_with(g, true)
}

pub fn build_edge_instance_with(g: &Graph, dedup: bool) -> HittingSetInstance {
    let t = g.distances();
    let mut b = HittingSetInstance::builder(g.n()).dedup(dedup);
    for i in 0..g.m() {
        for j in i + 1..g.m() {
            let origin = Origin {
                i,
                j,
                kind: PairKind::EdgePair,
            };
            b.add(origin, distinguishing_set(t.edge_row(i), t.edge_row(j)));
        }
    }
    b.build()
}

/// Vertex analogue: one row per unordered vertex pair, for the metric dimension.
pub fn build_vertex_instance(g: &Graph) -> HittingSetInstance {
    let t = g.distances();
    let mut b = HittingSetInstance::builder(g.n());
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            let origin = Origin {
                i,
                j,
                kind: PairKind::VertexPair,
            };
            b.add(origin, distinguishing_set(t.vertex_row(i), t.vertex_row(j)));
        }
    }
    b.build()
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Wall-clock budget; on expiry the incumbent is returned with `optimal = false`.
    pub timeout: Option<Duration>,
    /// Run the second pass that makes the witness canonical.
    pub canonical_witness: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            timeout: None,
            canonical_witness: true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed_ms: f64,
    pub root_lower_bound: usize,
    pub initial_upper_bound: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub optimum: usize,
    pub witness: OrderedVertexSet,
    /// False only when the time budget ran out.
    pub optimal: bool,
    pub stats: SolveStats,
}

struct Search<'a> {
    sets: Vec<&'a [usize]>,
    by_vertex: Vec<Vec<usize>>,
    packing_order: Vec<usize>,
    hits: Vec<u32>,
    avail: Vec<u32>,
    banned: Vec<bool>,
    chosen: Vec<usize>,
    mark: Vec<u64>,
    epoch: u64,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl<'a> Search<'a> {
    fn new(inst: &'a HittingSetInstance, deadline: Option<Instant>) -> Self {
        let n = inst.universe;
        let sets: Vec<&[usize]> = inst.constraints.iter().map(|c| &c.members[..]).collect();
        let mut by_vertex = vec![Vec::new(); n];
        for (c, s) in sets.iter().enumerate() {
            for &v in *s {
                by_vertex[v].push(c);
            }
        }
        let mut packing_order: Vec<usize> = (0..sets.len()).collect();
        packing_order.sort_by_key(|&c| (sets[c].len(), c));
        let avail = sets.iter().map(|s| s.len() as u32).collect();
        Search {
            hits: vec![0; sets.len()],
            avail,
            sets,
            by_vertex,
            packing_order,
            banned: vec![false; n],
            chosen: Vec::new(),
            mark: vec![0; n],
            epoch: 0,
            nodes: 0,
            deadline,
            timed_out: false,
        }
    }

    fn choose(&mut self, v: usize) {
        self.chosen.push(v);
        for &c in &self.by_vertex[v] {
            self.hits[c] += 1;
        }
    }

    fn unchoose(&mut self, v: usize) {
        debug_assert_eq!(self.chosen.last(), Some(&v));
        self.chosen.pop();
        for &c in &self.by_vertex[v] {
            self.hits[c] -= 1;
        }
    }

    fn ban(&mut self, v: usize) {
        self.banned[v] = true;
        for &c in &self.by_vertex[v] {
            self.avail[c] -= 1;
        }
    }

    fn unban(&mut self, v: usize) {
        self.banned[v] = false;
        for &c in &self.by_vertex[v] {
            self.avail[c] += 1;
        }
    }

    /// Size of a greedily packed family of disjoint uncovered rows, counting
    /// only free vertices. `None` when some uncovered row has no free vertex.
    fn packing_bound(&mut self) -> Option<usize> {
        self.epoch += 1;
        let mut count = 0;
        for &c in &self.packing_order {
            if self.hits[c] > 0 {
                continue;
            }
            if self.avail[c] == 0 {
                return None;
            }
            let free = self.sets[c].iter().filter(|&&v| !self.banned[v]);
            if free.clone().all(|&v| self.mark[v] != self.epoch) {
                for &v in free {
                    self.mark[v] = self.epoch;
                }
                count += 1;
            }
        }
        Some(count)
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(256) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    fn branch(&mut self, best: &mut Vec<usize>) {
        if self.tick() {
            return;
        }
        let Some(lb) = self.packing_bound() else {
            return;
        };
        if lb == 0 {
            if self.chosen.len() < best.len() {
                *best = self.chosen.clone();
            }
            return;
        }
        if self.chosen.len() + lb >= best.len() {
            return;
        }
        let row = (0..self.sets.len())
            .filter(|&c| self.hits[c] == 0)
            .min_by_key(|&c| (self.avail[c], c))
            .expect("lb > 0 implies an uncovered row");
        let candidates: Vec<usize> = self.sets[row]
            .iter()
            .copied()
            .filter(|&v| !self.banned[v])
            .collect();
        let mut banned_here = Vec::with_capacity(candidates.len());
        for v in candidates {
            self.choose(v);
            self.branch(best);
            self.unchoose(v);
            if self.timed_out {
                break;
            }
            self.ban(v);
            banned_here.push(v);
        }
        for v in banned_here.into_iter().rev() {
            self.unban(v);
        }
    }

    /// Fixes `x_i, x_{i+1}, ...` trying 0 first; finds the lexicographically
    /// smallest indicator vector with at most `budget` ones.
    fn canonical(&mut self, i: usize, budget: usize) -> Option<Vec<usize>> {
        if self.tick() {
            return None;
        }
        let lb = self.packing_bound()?;
        if lb == 0 {
            return Some(self.chosen.clone());
        }
        if self.chosen.len() + lb > budget || i == self.banned.len() {
            return None;
        }
        self.ban(i);
        let found = self.canonical(i + 1, budget);
        self.unban(i);
        if found.is_some() || self.timed_out {
            return found;
        }
        let useful = self.by_vertex[i].iter().any(|&c| self.hits[c] == 0);
        if !useful {
            return None;
        }
        self.choose(i);
        let found = self.canonical(i + 1, budget);
        self.unchoose(i);
        found
    }
}

fn greedy_cover(inst: &HittingSetInstance) -> Vec<usize> {
    let n = inst.universe;
    let mut covered = vec![false; inst.len()];
    let mut gain = vec![0usize; n];
    for c in inst.constraints() {
        for &v in &c.members {
            gain[v] += 1;
        }
    }
    let mut left = inst.len();
    let mut picked = Vec::new();
    while left > 0 {
        let v = (0..n)
            .max_by_key(|&v| (gain[v], std::cmp::Reverse(v)))
            .expect("non-empty universe");
        picked.push(v);
        for (ci, c) in inst.constraints().iter().enumerate() {
            if !covered[ci] && c.members.contains(&v) {
                covered[ci] = true;
                left -= 1;
                for &w in &c.members {
                    gain[w] -= 1;
                }
            }
        }
    }
    picked.sort_unstable();
    picked
}

/// Exact minimum hitting set.
pub fn solve_hitting_set(inst: &HittingSetInstance, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    if let Some(at) = inst.constraints.iter().position(|c| c.members.is_empty()) {
        return Err(Error::Infeasible(at));
    }
    let deadline = opts.timeout.map(|t| start + t);
    let mut search = Search::new(inst, deadline);
    let root_lower_bound = search.packing_bound().unwrap_or(0);
    let mut best = greedy_cover(inst);
    let initial_upper_bound = best.len();
    if root_lower_bound < best.len() {
        search.branch(&mut best);
    }
    let optimal = !search.timed_out;
    if optimal && opts.canonical_witness {
        if let Some(w) = search.canonical(0, best.len()) {
            best = w;
        }
    }
    best.sort_unstable();
    Ok(SolveResult {
        optimum: best.len(),
        witness: OrderedVertexSet::from_vec_unchecked(best),
        optimal,
        stats: SolveStats {
            nodes: search.nodes,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
            root_lower_bound,
            initial_upper_bound,
        },
    })
}

/// Edge metric dimension and basis of `g` via the covering program.
pub fn edim_via_ilp(g: &Graph) -> Result<SolveResult> {
    edim_via_ilp_with(g, &SolveOptions::default())
}

/// A graph whose only edge pair set is empty (`P2`) has no rows; its basis is
/// still non-empty, and the lexicographically smallest indicator vector of
/// weight one selects the last vertex.
pub fn edim_via_ilp_with(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    let mut r = solve_hitting_set(&build_edge_instance(g), opts)?;
    if r.optimum < edge_basis_floor(g, &(0..g.m()).collect::<Vec<_>>()) {
        r.optimum = 1;
        r.witness = OrderedVertexSet::from_vec_unchecked(vec![g.n() - 1]);
    }
    Ok(r)
}

/// Metric dimension and basis of `g` via the covering program.
pub fn dim_via_ilp(g: &Graph) -> Result<SolveResult> {
    dim_via_ilp_with(g, &SolveOptions::default())
}

pub fn dim_via_ilp_with(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    solve_hitting_set(&build_vertex_instance(g), opts)
}

/// Writes the instance in the CPLEX LP dialect with binary variables `x1..xn`.
pub fn export_lp(inst: &HittingSetInstance, objective_name: &str) -> String {
    let var = |v: usize| format!("x{}", v + 1);
    let mut out = String::new();
    out.push_str("Minimize\n");
    let all: Vec<String> = (0..inst.universe).map(var).collect();
    let _ = writeln!(out, " {}: {}", objective_name, all.join(" + "));
    out.push_str("Subject To\n");
    for (k, c) in inst.constraints.iter().enumerate() {
        let lhs: Vec<String> = c.members.iter().map(|&v| var(v)).collect();
        let _ = writeln!(out, " c{}: {} >= 1", k + 1, lhs.join(" + "));
    }
    out.push_str("Binary\n");
    for v in &all {
        let _ = writeln!(out, " {v}");
    }
    out.push_str("End\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::random::connected_graph;
    use crate::resolve::{all_edges, brute_force_edim, is_edge_metric_generator};
    use itertools::Itertools;
    use proptest::prelude::*;

    fn members(inst: &HittingSetInstance) -> Vec<Vec<usize>> {
        inst.constraints().iter().map(|c| c.members.clone()).collect()
    }

    #[test]
    fn k3_instance() {
        let inst = build_edge_instance(&catalog::complete(3).unwrap());
        assert_eq!(members(&inst), vec![vec![0, 2], vec![1, 2], vec![0, 1]]);
        let r = solve_hitting_set(&inst, &SolveOptions::default()).unwrap();
        assert_eq!(r.optimum, 2);
        assert_eq!(r.witness.as_slice(), &[1, 2]);
        assert!(r.optimal);
    }

    #[test]
    fn trivial_instances() {
        let p2 = catalog::path(2).unwrap();
        let inst = build_edge_instance(&p2);
        assert!(inst.is_empty());
        let r = solve_hitting_set(&inst, &SolveOptions::default()).unwrap();
        assert_eq!(r.optimum, 0);
        assert!(r.witness.is_empty());
        let r = edim_via_ilp(&p2).unwrap();
        assert_eq!((r.optimum, r.witness.as_slice()), (1, &[1][..]));
        assert_eq!(edim_via_ilp(&catalog::path(1).unwrap()).unwrap().optimum, 0);

        let p3 = catalog::path(3).unwrap();
        let inst = build_edge_instance(&p3);
        assert_eq!(members(&inst), vec![vec![0, 2]]);
        assert_eq!(inst.constraints()[0].origins[0].kind, PairKind::EdgePair);
    }

    #[test]
    fn empty_row_is_infeasible() {
        let mut b = HittingSetInstance::builder(3);
        b.add(Origin { i: 0, j: 1, kind: PairKind::EdgePair }, vec![1]);
        b.add(Origin { i: 0, j: 2, kind: PairKind::EdgePair }, vec![]);
        let inst = b.build();
        assert_eq!(
            solve_hitting_set(&inst, &SolveOptions::default()).unwrap_err(),
            Error::Infeasible(1)
        );
    }

    #[test]
    fn merged_rows_keep_all_origins() {
        // C6 has symmetric edge pairs with identical rows; no origin may be lost
        let g = catalog::cycle(6).unwrap();
        let inst = build_edge_instance(&g);
        let origins: usize = inst.constraints().iter().map(|c| c.origins.len()).sum();
        assert_eq!(origins, 15);
        assert_eq!(build_edge_instance_with(&g, false).len(), 15);
    }

    #[test]
    fn paths_and_cycles() {
        let p11 = catalog::path(11).unwrap();
        assert_eq!(edim_via_ilp(&p11).unwrap().optimum, 1);
        let c6 = catalog::cycle(6).unwrap();
        assert_eq!(edim_via_ilp(&c6).unwrap().optimum, 2);
        assert_eq!(dim_via_ilp(&c6).unwrap().optimum, 2);
        assert_eq!(dim_via_ilp(&catalog::petersen().unwrap()).unwrap().optimum, 3);
    }

    #[test]
    fn lp_export() {
        let inst = build_edge_instance(&catalog::complete(3).unwrap());
        let lp = export_lp(&inst, "obj");
        assert_eq!(
            lp,
            "Minimize\n obj: x1 + x2 + x3\nSubject To\n c1: x1 + x3 >= 1\n c2: x2 + x3 >= 1\n c3: x1 + x2 >= 1\nBinary\n x1\n x2\n x3\nEnd\n"
        );
        let p3 = export_lp(&build_edge_instance(&catalog::path(3).unwrap()), "F");
        assert!(p3.contains(" c1: x1 + x3 >= 1\n"));
        assert!(!p3.contains(" c2:"));
        let empty = export_lp(&build_edge_instance(&catalog::path(2).unwrap()), "F");
        assert!(empty.contains("Subject To\nBinary\n"));
    }

    #[test]
    fn timeout_returns_incumbent() {
        let g = catalog::truncated_cube().unwrap();
        let opts = SolveOptions {
            timeout: Some(Duration::ZERO),
            canonical_witness: true,
        };
        let r = edim_via_ilp_with(&g, &opts).unwrap();
        assert!(r.optimum >= 3);
        assert!(is_edge_metric_generator(&g, &r.witness, &all_edges(&g)).unwrap());
    }

    fn exhaustive_min(inst: &HittingSetInstance) -> usize {
        (0..=inst.universe())
            .find(|&k| {
                (0..inst.universe())
                    .combinations(k)
                    .any(|s| inst.is_hit_by(&s))
            })
            .unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn solver_matches_oracle(n in 1usize..9, p in 0.1f64..0.7, seed in any::<u64>()) {
            let g = connected_graph(n, p, seed);
            let r = edim_via_ilp(&g).unwrap();
            prop_assert_eq!(r.optimum, brute_force_edim(&g, &all_edges(&g)).unwrap().size);
            prop_assert!(is_edge_metric_generator(&g, &r.witness, &all_edges(&g)).unwrap());
            prop_assert_eq!(r.witness.len(), r.optimum);
        }

        #[test]
        fn rows_are_distinguishing_sets(n in 2usize..9, seed in any::<u64>()) {
            let g = connected_graph(n, 0.3, seed);
            let t = g.distances();
            for c in build_edge_instance(&g).constraints() {
                for o in &c.origins {
                    for v in 0..n {
                        let differs = t.edge(o.i, v) != t.edge(o.j, v);
                        prop_assert_eq!(c.members.contains(&v), differs);
                    }
                }
            }
        }

        #[test]
        fn dedup_keeps_optimum(n in 2usize..9, seed in any::<u64>()) {
            let g = connected_graph(n, 0.4, seed);
            let opts = SolveOptions::default();
            let merged = solve_hitting_set(&build_edge_instance_with(&g, true), &opts).unwrap();
            let raw = solve_hitting_set(&build_edge_instance_with(&g, false), &opts).unwrap();
            prop_assert_eq!(merged.optimum, raw.optimum);
            prop_assert_eq!(merged.witness, raw.witness);
        }

        #[test]
        fn random_set_systems(universe in 1usize..10, rows in proptest::collection::vec(any::<u16>(), 0..14)) {
            let mut b = HittingSetInstance::builder(universe);
            for (k, mask) in rows.iter().enumerate() {
                let mut m: Vec<usize> = (0..universe).filter(|v| mask >> v & 1 == 1).collect();
                if m.is_empty() {
                    m.push(k % universe);
                }
                b.add(Origin { i: k, j: k + 1, kind: PairKind::VertexPair }, m);
            }
            let inst = b.build();
            let r = solve_hitting_set(&inst, &SolveOptions::default()).unwrap();
            prop_assert!(inst.is_hit_by(&r.witness));
            prop_assert_eq!(r.optimum, exhaustive_min(&inst));
            // witness has the lexicographically smallest indicator vector
            let best = (0..universe)
                .combinations(r.optimum)
                .filter(|s| inst.is_hit_by(s))
                .map(|s| {
                    let mut x = vec![0u8; universe];
                    for v in s { x[v] = 1; }
                    x
                })
                .min()
                .unwrap();
            let mut got = vec![0u8; universe];
            for &v in r.witness.iter() { got[v] = 1; }
            prop_assert_eq!(got, best);
        }
    }
}
