//! The hierarchical product of P11 rooted at its odd-numbered vertices with
//! P2: equidistant dimensions, both bounds, and the exact value.
//!
//! `cargo run --example hierarchical_bounds`

use edgemetric::catalog;
use edgemetric::products::{
    edim_gu, edim_plus_gu, hierarchical_product, hierarchical_upper_bound, sharp_bound,
    RootedSubset,
};
use edgemetric::solver::edim_via_ilp;

fn main() -> edgemetric::Result<()> {
    let gu = RootedSubset::new(catalog::path(11)?, vec![0, 2, 4, 6, 8, 10])?;
    let h = catalog::path(2)?;
    let x = hierarchical_product(&gu, &h)?;
    println!("product: n = {}, m = {}", x.graph.n(), x.graph.m());

    println!("edim(G(U))  = {}", edim_gu(&gu)?.optimum);
    println!("edim+(G(U)) = {}", edim_plus_gu(&gu)?.optimum);
    println!("upper bound = {}", hierarchical_upper_bound(&gu, &h)?);

    let b = sharp_bound(&gu, &h)?;
    let witness: Vec<String> = b.witness.iter().map(|&v| gu.graph().label(v)).collect();
    println!(
        "sharp bound = {} (applicable: {}, edim+ witness {{{}}})",
        b.value,
        b.applicable,
        witness.join(", ")
    );

    let exact = edim_via_ilp(&x.graph)?;
    println!("edim(product) = {}, basis {}", exact.optimum, exact.witness);
    for &v in exact.witness.iter() {
        let (g, h) = x.pair_of(v);
        println!("  {} = ({}, {})", x.graph.label(v), g + 1, h + 1);
    }
    Ok(())
}
