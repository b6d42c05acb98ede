//! Hamiltonian cycles from degree conditions, built constructively.
//!
//! ```text
//! cargo run --release --example degree_theorems
//! ```

use bramsey::cycles::{hamiltonian_by_degree_traced, jackson_cycle_traced};
use bramsey::graph::BiGraph;
use bramsey::witness::validate_cycle_witness;

fn main() -> bramsey::Result<()> {
    // K_{5,5} minus a perfect matching: d(x) + d(y) = 8 >= 6 for every non-edge
    let mut g = BiGraph::complete(5, 5)?;
    for i in 0..5 {
        g.remove_edge(i, i);
    }
    let t = hamiltonian_by_degree_traced(&g)?;
    validate_cycle_witness(&g, &t.cycle).expect("valid");
    println!("degree condition: C_{} after {} rotations", t.cycle.len(), t.rotations);

    // a 2+2 pair of blocks fails the condition
    let weak = BiGraph::from_edges(4, 4, &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)])?;
    match hamiltonian_by_degree_traced(&weak) {
        Ok(_) => println!("unexpected cycle"),
        Err(e) => println!("rejected: {e}"),
    }

    let g = BiGraph::complete(5, 3)?;
    let t = jackson_cycle_traced(&g)?;
    println!("K_5,3: C_{} via {:?}", t.cycle.len(), t.route);

    // 6+3, each right vertex sees 4 >= max{3, 6/2 + 1} left vertices
    let rows = vec![0b011, 0b101, 0b110, 0b011, 0b101, 0b110];
    let g = BiGraph::from_rows(6, 3, rows)?;
    let t = jackson_cycle_traced(&g)?;
    validate_cycle_witness(&g, &t.cycle).expect("valid");
    println!("dominating cycle: C_{} via {:?}", t.cycle.len(), t.route);
    Ok(())
}
