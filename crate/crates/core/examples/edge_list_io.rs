//! Reading and writing the edge-list format.
//!
//! `cargo run --example edge_list_io`

use edgemetric::io::{read_edge_list, write_edge_list};
use edgemetric::solver::edim_via_ilp;

const HOUSE: &str = "\
# house: a square with a roof
5
0 1
1 2
2 3
3 0
2 4
3 4
";

fn main() -> edgemetric::Result<()> {
    let g = read_edge_list(HOUSE)?;
    println!("parsed n = {}, m = {}", g.n(), g.m());
    println!("edim = {}", edim_via_ilp(&g)?.optimum);
    print!("{}", write_edge_list(&g));
    Ok(())
}
