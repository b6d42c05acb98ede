//! DIMACS export of the avoidance problem, with a few cycles blocked.
//!
//! ```text
//! cargo run --release --example export_cnf
//! ```

use bramsey::coloring::Color;
use bramsey::cycles::find_cycles;
use bramsey::graph::BiGraph;
use bramsey::verify::{export_cnf, BlockedCycle};

fn main() -> bramsey::Result<()> {
    let (n, m, big_n) = (2, 2, 3);
    let k = BiGraph::complete(big_n, big_n)?;
    let mut blocked = Vec::new();
    for cycle in find_cycles(&k, 4, 2) {
        blocked.push(BlockedCycle { color: Color::Blue, cycle: cycle.clone() });
        blocked.push(BlockedCycle { color: Color::Red, cycle });
    }
    let doc = export_cnf(n, m, big_n, &blocked, true)?;
    print!("{}", doc.to_dimacs());
    Ok(())
}
