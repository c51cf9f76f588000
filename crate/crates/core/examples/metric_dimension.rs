//! Vertex metric dimension next to edge metric dimension.
//!
//! `cargo run --example metric_dimension`

use edgemetric::catalog;
use edgemetric::solver::{dim_via_ilp, edim_via_ilp};

fn main() -> edgemetric::Result<()> {
    let graphs = [
        ("P6", catalog::path(6)?),
        ("C7", catalog::cycle(7)?),
        ("K5", catalog::complete(5)?),
        ("K1,5", catalog::star(5)?),
        ("W6", catalog::wheel(6)?),
        ("Petersen", catalog::petersen()?),
    ];
    println!("{:<9} {:>4} {:>5}", "graph", "dim", "edim");
    for (name, g) in graphs {
        let (d, e) = (dim_via_ilp(&g)?, edim_via_ilp(&g)?);
        println!("{name:<9} {:>4} {:>5}   {} / {}", d.optimum, e.optimum, d.witness, e.witness);
    }
    Ok(())
}
