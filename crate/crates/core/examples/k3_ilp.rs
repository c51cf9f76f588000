//! Covering rows, LP text and solver output for the triangle.
//!
//! `cargo run --example k3_ilp`

use edgemetric::catalog;
use edgemetric::solver::{build_edge_instance, export_lp, solve_hitting_set, SolveOptions};

fn main() -> edgemetric::Result<()> {
    let g = catalog::complete(3)?;
    let t = g.distances();
    println!("vertex-edge distance matrix (rows = edges):");
    for (i, row) in t.edge_matrix().iter().enumerate() {
        let (a, b) = g.edge(i);
        println!("  e{} = {}{}: {row:?}", i + 1, g.label(a), g.label(b));
    }

    let inst = build_edge_instance(&g);
    println!("\n{}", export_lp(&inst, "F"));

    let r = solve_hitting_set(&inst, &SolveOptions::default())?;
    println!("edim = {}, basis {}", r.optimum, r.witness);
    Ok(())
}
