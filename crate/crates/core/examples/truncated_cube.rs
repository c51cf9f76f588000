//! Edge metric dimension of the truncated cube, with search statistics.
//!
//! `cargo run --release --example truncated_cube`

use edgemetric::catalog;
use edgemetric::resolve::{all_edges, is_edge_metric_generator};
use edgemetric::solver::edim_via_ilp;

fn main() -> edgemetric::Result<()> {
    let g = catalog::truncated_cube()?;
    let r = edim_via_ilp(&g)?;
    println!("n = {}, m = {}", g.n(), g.m());
    println!("edim = {} (optimal: {})", r.optimum, r.optimal);
    println!("basis {}", r.witness);
    println!(
        "nodes {}, root lower bound {}, greedy upper bound {}, {:.2} ms",
        r.stats.nodes, r.stats.root_lower_bound, r.stats.initial_upper_bound, r.stats.elapsed_ms
    );
    assert!(is_edge_metric_generator(&g, &r.witness, &all_edges(&g))?);
    Ok(())
}
