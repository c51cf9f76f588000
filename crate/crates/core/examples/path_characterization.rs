//! Paths are exactly the graphs with edge metric dimension 1; contrast with
//! cycles, complete graphs and stars.
//!
//! `cargo run --example path_characterization`

use edgemetric::catalog;
use edgemetric::resolve::{all_edges, brute_force_edim};
use edgemetric::solver::edim_via_ilp;
use edgemetric::{Graph, Result};

type Family = (&'static str, fn(usize) -> Result<Graph>);

fn main() -> Result<()> {
    let families: [Family; 4] = [
        ("path", catalog::path),
        ("cycle", catalog::cycle),
        ("complete", catalog::complete),
        ("star", catalog::star),
    ];
    println!("{:<10} {:>3} {:>6} {:>4}", "family", "k", "brute", "ilp");
    for (name, make) in families {
        for k in 3..=8 {
            let g = make(k)?;
            let brute = brute_force_edim(&g, &all_edges(&g))?.size;
            let ilp = edim_via_ilp(&g)?;
            println!("{name:<10} {k:>3} {brute:>6} {:>4}  {}", ilp.optimum, ilp.witness);
        }
    }
    Ok(())
}
