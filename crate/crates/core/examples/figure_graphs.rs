//! Exact edge metric dimension of graphs given as edge-list files.
//!
//! `cargo run --release --example figure_graphs -- a.txt b.txt ...`

use std::time::Duration;

use edgemetric::io::read_edge_list;
use edgemetric::solver::{edim_via_ilp_with, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let paths: Vec<String> = std::env::args().skip(1).collect();
    if paths.is_empty() {
        eprintln!("usage: figure_graphs FILE...");
        std::process::exit(2);
    }
    let opts = SolveOptions {
        timeout: Some(Duration::from_secs(60)),
        ..SolveOptions::default()
    };
    for p in paths {
        let g = read_edge_list(&std::fs::read_to_string(&p)?)?;
        let r = edim_via_ilp_with(&g, &opts)?;
        println!(
            "{p}: n = {}, m = {}, edim = {}{} basis {}",
            g.n(),
            g.m(),
            r.optimum,
            if r.optimal { "" } else { " (not proven optimal)" },
            r.witness
        );
    }
    Ok(())
}
