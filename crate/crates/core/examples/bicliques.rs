//! Complete bipartite subgraphs `K_{s,t}` by branch and bound.
//!
//! ```text
//! cargo run --release --example bicliques
//! ```

use bramsey::constructions::construct_balanced;
use bramsey::coloring::Color;
use bramsey::cycles::find_biclique;
use bramsey::graph::BiGraph;

fn main() -> bramsey::Result<()> {
    let mut g = BiGraph::complete(4, 4)?;
    for i in 0..4 {
        g.remove_edge(i, i);
    }
    for (s, t) in [(2, 2), (3, 1), (1, 3), (3, 3)] {
        match find_biclique(&g, s, t)? {
            Some(w) => println!("K_4,4 - M: K_{s},{t} on left {:?} right {:?}", w.left, w.right),
            None => println!("K_4,4 - M: no K_{s},{t}"),
        }
    }

    // the largest blue square biclique of the balanced (5,5) coloring
    let blue = construct_balanced(5)?.view(Color::Blue);
    let best = (1..=9).rev().find_map(|s| find_biclique(&blue, s, s).ok().flatten());
    if let Some(w) = best {
        println!("balanced (5,5) blue: K_{0},{0} on left {1:?} right {2:?}", w.left.len(), w.left, w.right);
    }
    Ok(())
}
