//! Bridge cycles: k rooted copies of a graph with their roots on a cycle.
//!
//! `cargo run --example bridge_cycle`

use edgemetric::catalog;
use edgemetric::products::{bridge_cycle_edim, bridge_cycle_uniform};
use edgemetric::solver::edim_via_ilp;

fn main() -> edgemetric::Result<()> {
    let factors = [
        ("K3", catalog::complete(3)?, 0),
        ("C4", catalog::cycle(4)?, 0),
        ("K1,3 at a leaf", catalog::star(3)?, 1),
        ("P3 at center", catalog::path(3)?, 1),
    ];
    for (name, g, r) in factors {
        for k in 3..=5 {
            let bc = bridge_cycle_uniform(&g, r, k)?;
            let exact = edim_via_ilp(&bc)?.optimum;
            let formula = bridge_cycle_edim(&g, r, k)?;
            println!("{name:<15} k = {k}: n = {:>2}, formula {formula}, exact {exact}", bc.n());
        }
    }
    Ok(())
}
