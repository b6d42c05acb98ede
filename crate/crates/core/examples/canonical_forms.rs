//! Orbits of colorings under row/column permutations and side/color swaps.
//!
//! ```text
//! cargo run --release --example canonical_forms
//! ```

use bramsey::canon::{canonical_form, canonical_representatives, orbit_size, SymmetryFlags};
use bramsey::coloring::Coloring;

fn main() -> bramsey::Result<()> {
    for (label, flags) in [
        ("rows+cols", SymmetryFlags { side_swap: false, color_swap: false }),
        ("+side swap", SymmetryFlags { side_swap: true, color_swap: false }),
        ("+color swap", SymmetryFlags { side_swap: true, color_swap: true }),
    ] {
        let mut line = format!("{label:<12}");
        for s in 1..=4 {
            let reps = canonical_representatives(s, s, flags)?;
            let covered: u128 = reps.iter().map(|c| orbit_size(c, flags).unwrap()).sum();
            assert_eq!(covered, 1u128 << (s * s));
            line.push_str(&format!(" {s}x{s}: {:<5}", reps.len()));
        }
        println!("{line}");
    }

    let c = Coloring::from_pattern(&["BRR", "RBR", "RRB"])?;
    let shuffled = c.permuted(&[2, 0, 1], &[1, 2, 0]);
    let flags = SymmetryFlags::for_run(3, 3);
    let (a, b) = (canonical_form(&c, flags)?, canonical_form(&shuffled, flags)?);
    assert_eq!(a, b);
    println!("\nblue matching and a shuffle share the form {:?}", a.pattern());
    Ok(())
}
