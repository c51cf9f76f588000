//! Reproducibility checks behind `edgemetric verify`.
//!
//! Each check is deterministic for a given seed. Random sweeps draw small
//! connected factors and compare closed forms against exhaustive search on
//! the constructed graphs.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::catalog;
use crate::error::Result;
use crate::graph::{Graph, SimpleGraph};
use crate::products::{
    corona_edim, corona_product, edim_gu, edim_plus_gu, hierarchical_product,
    hierarchical_upper_bound, is_rooted_path, product_distance, sharp_bound, RootedSubset,
};
use crate::random::connected_graph_with;
use crate::resolve::{all_edges, brute_force_edim, brute_force_edim_with_cap};
use crate::solver::{build_edge_instance, edim_via_ilp, solve_hitting_set, SolveOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

fn edim(g: &Graph) -> Result<usize> {
    Ok(brute_force_edim(g, &all_edges(g))?.size)
}

/// Random rooted factor `G(U)` and connected `H` with `n(G) * n(H) <= max_size`.
pub fn random_hierarchical<R: Rng>(
    rng: &mut R,
    max_size: usize,
    min_roots: usize,
    max_roots: usize,
    min_h: usize,
) -> (RootedSubset, Graph) {
    loop {
        let nh = rng.gen_range(min_h..=(max_size / 2).max(min_h));
        let max_g = max_size / nh;
        if max_g < min_roots.max(2) {
            continue;
        }
        let ng = rng.gen_range(min_roots.max(2)..=max_g);
        let (pg, ph) = (rng.gen_range(0.0..0.6), rng.gen_range(0.0..0.6));
        let g = connected_graph_with(rng, ng, pg);
        let h = connected_graph_with(rng, nh, ph);
        let k = rng.gen_range(min_roots..=max_roots.min(ng));
        let mut roots: Vec<usize> = rand::seq::index::sample(rng, ng, k).into_vec();
        roots.sort_unstable();
        return (RootedSubset::new(g, roots).expect("valid roots"), h);
    }
}

pub fn k3_worked_example() -> Result<Check> {
    let g = catalog::complete(3)?;
    let inst = build_edge_instance(&g);
    let rows: Vec<Vec<usize>> = inst.constraints().iter().map(|c| c.members.clone()).collect();
    let r = solve_hitting_set(&inst, &SolveOptions::default())?;
    let ok = rows == [vec![0, 2], vec![1, 2], vec![0, 1]] && r.optimum == 2 && *r.witness == [1, 2];
    Ok(check(
        "k3_worked_example",
        ok,
        format!("rows {rows:?}, optimum {}, witness {}", r.optimum, r.witness),
    ))
}

pub fn path_characterization() -> Result<Check> {
    let mut bad = Vec::new();
    for n in 2..=12 {
        let p = catalog::path(n)?;
        let (b, i) = (edim(&p)?, edim_via_ilp(&p)?.optimum);
        if b != 1 || i != 1 {
            bad.push(n);
        }
    }
    Ok(check(
        "path_characterization",
        bad.is_empty(),
        format!("paths P2..P12, failures {bad:?}"),
    ))
}

pub fn p11_instance() -> Result<Check> {
    let gu = RootedSubset::new(catalog::path(11)?, vec![0, 2, 4, 6, 8, 10])?;
    let h = catalog::path(2)?;
    let x = hierarchical_product(&gu, &h)?;
    let exact = brute_force_edim_with_cap(&x.graph, &all_edges(&x.graph), x.graph.n())?.size;
    let plus = edim_plus_gu(&gu)?.optimum;
    let b = sharp_bound(&gu, &h)?;
    let ok = exact == 2 && plus == 1 && b.applicable && b.value == 2;
    Ok(check(
        "p11_hierarchical",
        ok,
        format!("edim {exact}, edim+ {plus}, sharp bound {}", b.value),
    ))
}

pub fn truncated_cube() -> Result<Check> {
    let r = edim_via_ilp(&catalog::truncated_cube()?)?;
    Ok(check(
        "truncated_cube",
        r.optimum == 3 && r.optimal,
        format!("edim {}, {} search nodes", r.optimum, r.stats.nodes),
    ))
}

pub fn distance_formula(seed: u64, count: usize) -> Result<Check> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut mismatches = 0;
    for _ in 0..count {
        let (gu, h) = random_hierarchical(&mut rng, 60, 1, 5, 1);
        let x = hierarchical_product(&gu, &h)?;
        for a in 0..x.graph.n() {
            for b in 0..x.graph.n() {
                if product_distance(&gu, &h, x.pair_of(a), x.pair_of(b))? != x.graph.dist(a, b) {
                    mismatches += 1;
                }
            }
        }
    }
    Ok(check(
        "distance_formula",
        mismatches == 0,
        format!("{count} products, {mismatches} mismatches"),
    ))
}

pub fn single_root_sweep(seed: u64, count: usize) -> Result<Check> {
    let mut rng = StdRng::seed_from_u64(seed);
    let (mut done, mut bad) = (0, 0);
    while done < count {
        let (gu, h) = random_hierarchical(&mut rng, 14, 1, 1, 2);
        if is_rooted_path(gu.graph(), gu.roots()[0])? {
            continue;
        }
        let x = hierarchical_product(&gu, &h)?;
        if edim(&x.graph)? != h.n() * edim_gu(&gu)?.optimum {
            bad += 1;
        }
        done += 1;
    }
    Ok(check(
        "single_root_exact",
        bad == 0,
        format!("{count} products, {bad} mismatches"),
    ))
}

pub fn bounds_sweep(seed: u64, count: usize) -> Result<Check> {
    let mut rng = StdRng::seed_from_u64(seed);
    let (mut upper, mut sharp, mut applicable) = (0, 0, 0);
    for _ in 0..count {
        let (gu, h) = random_hierarchical(&mut rng, 14, 2, 4, 1);
        let x = hierarchical_product(&gu, &h)?;
        let exact = edim(&x.graph)?;
        if exact > hierarchical_upper_bound(&gu, &h)? {
            upper += 1;
        }
        let b = sharp_bound(&gu, &h)?;
        if b.applicable {
            applicable += 1;
            if exact > b.value {
                sharp += 1;
            }
        }
    }
    Ok(check(
        "hierarchical_bounds",
        upper == 0 && sharp == 0,
        format!(
            "{count} products, upper-bound violations {upper}, sharp-bound violations {sharp} of {applicable} applicable"
        ),
    ))
}

pub fn corona_sweep() -> Result<Check> {
    let mut cases = 0;
    let mut bad = Vec::new();
    let bases: Vec<Graph> = vec![
        catalog::path(1)?,
        catalog::path(2)?,
        catalog::path(3)?,
        catalog::complete(3)?,
        catalog::star(3)?,
    ];
    let mut factors: Vec<(&str, SimpleGraph)> = vec![
        ("K2", catalog::complete(2)?.as_simple().clone()),
        ("K3", catalog::complete(3)?.as_simple().clone()),
        ("P3", catalog::path(3)?.as_simple().clone()),
        ("C4", catalog::cycle(4)?.as_simple().clone()),
        ("K4", catalog::complete(4)?.as_simple().clone()),
        ("K1,3", catalog::star(3)?.as_simple().clone()),
        ("P4", catalog::path(4)?.as_simple().clone()),
        ("C5", catalog::cycle(5)?.as_simple().clone()),
        ("W4", catalog::wheel(4)?.as_simple().clone()),
        ("K2+K1", SimpleGraph::new(3, &[(0, 1)])?),
        ("2K2", SimpleGraph::new(4, &[(0, 1), (2, 3)])?),
    ];
    factors.push(("3K1", SimpleGraph::empty(3)?));
    for g in &bases {
        for (name, h) in &factors {
            if g.n() * (h.n() + 1) > 14 {
                continue;
            }
            cases += 1;
            let c = corona_product(g, h)?;
            let (formula, exact) = (corona_edim(g, h)?, edim(&c.graph)?);
            if formula != exact {
                bad.push(format!("n(G)={} H={name}: {formula} vs {exact}", g.n()));
            }
        }
    }
    Ok(check(
        "corona_exact",
        bad.is_empty(),
        format!("{cases} coronas, mismatches {bad:?}"),
    ))
}

pub fn solver_oracle(seed: u64, count: usize) -> Result<Check> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..count {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.0..0.8);
        let g = connected_graph_with(&mut rng, n, p);
        if edim_via_ilp(&g)?.optimum != edim(&g)? {
            bad += 1;
        }
    }
    Ok(check(
        "solver_oracle",
        bad == 0,
        format!("{count} graphs, {bad} mismatches"),
    ))
}

/// All checks, in a fixed order.
pub fn run_all(seed: u64) -> Result<Vec<Check>> {
    Ok(vec![
        k3_worked_example()?,
        path_characterization()?,
        p11_instance()?,
        truncated_cube()?,
        distance_formula(seed, 50)?,
        single_root_sweep(seed, 30)?,
        bounds_sweep(seed, 30)?,
        corona_sweep()?,
        solver_oracle(seed, 200)?,
    ])
}
