//! Realized even cycle lengths in each color class, with witnesses.
//!
//! ```text
//! cargo run --release --example cycle_spectrum
//! ```

use bramsey::coloring::Color;
use bramsey::constructions::construct_balanced;
use bramsey::cycles::{cycle_spectrum, find_cycle};
use bramsey::witness::validate_cycle_witness;

fn main() -> bramsey::Result<()> {
    // avoids blue C_10 and red C_10 on K_{9,9}
    let c = construct_balanced(5)?;
    for color in [Color::Blue, Color::Red] {
        let g = c.view(color);
        let s = cycle_spectrum(&g);
        println!("{color}: lengths {:?}, longest {}", s.lengths, s.longest);
        for (len, w) in &s.witnesses {
            validate_cycle_witness(&g, w).expect("witness checks out");
            let shown: Vec<String> = w.vertices.iter().map(|v| v.to_string()).collect();
            println!("  C_{len}: {}", shown.join(" "));
        }
        assert!(find_cycle(&g, 10).is_none());
    }
    Ok(())
}
