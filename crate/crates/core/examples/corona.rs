//! Corona products: closed form against exhaustive search.
//!
//! With a single base vertex the closed form misses graphs outside the
//! distance-one family that have a dominating vertex (the paw is the
//! smallest); the last rows show that gap.
//!
//! `cargo run --example corona`

use edgemetric::catalog;
use edgemetric::graph::SimpleGraph;
use edgemetric::products::{corona_edim, corona_product};
use edgemetric::resolve::{all_edges, brute_force_edim, is_family_f};

fn main() -> edgemetric::Result<()> {
    let cases: Vec<(&str, edgemetric::Graph, &str, SimpleGraph)> = vec![
        ("K1", catalog::path(1)?, "K3", catalog::complete(3)?.as_simple().clone()),
        ("P2", catalog::path(2)?, "P2", catalog::path(2)?.as_simple().clone()),
        ("P3", catalog::path(3)?, "C4", catalog::cycle(4)?.as_simple().clone()),
        ("K1", catalog::path(1)?, "P4", catalog::path(4)?.as_simple().clone()),
        ("P2", catalog::path(2)?, "2K2", SimpleGraph::new(4, &[(0, 1), (2, 3)])?),
        ("K1", catalog::path(1)?, "paw", SimpleGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2)])?),
        ("K1", catalog::path(1)?, "W5", catalog::wheel(5)?.as_simple().clone()),
    ];
    println!("{:<4} {:<4} {:>6} {:>8} {:>6}", "G", "H", "H in F", "formula", "exact");
    for (gn, g, hn, h) in cases {
        let c = corona_product(&g, &h)?;
        let exact = brute_force_edim(&c.graph, &all_edges(&c.graph))?.size;
        let formula = corona_edim(&g, &h)?;
        let mark = if formula == exact { "" } else { "  <- differs" };
        println!(
            "{gn:<4} {hn:<4} {:>6} {formula:>8} {exact:>6}{mark}",
            is_family_f(&h)
        );
    }
    Ok(())
}
