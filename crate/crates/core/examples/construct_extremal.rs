//! The two extremal colorings, certified free of a blue `C_2n` and a red `C_2m`.
//!
//! ```text
//! cargo run --release --example construct_extremal
//! ```

use bramsey::constructions::{certify_extremal, construct_balanced, construct_unbalanced};

fn main() -> bramsey::Result<()> {
    for n in 6..=8 {
        for m in 5..n {
            let c = construct_unbalanced(n, m)?;
            let cert = certify_extremal(&c, n, m);
            println!("unbalanced ({n},{m}) {}x{} {}", c.rows(), c.cols(), cert.verdict);
        }
    }
    for m in 5..=8 {
        let c = construct_balanced(m)?;
        let cert = certify_extremal(&c, m, m);
        println!("balanced   ({m},{m}) {}x{} {}", c.rows(), c.cols(), cert.verdict);
    }

    let c = construct_unbalanced(6, 5)?;
    println!("\nunbalanced (6,5), B = blue:");
    for row in c.pattern() {
        println!("  {row}");
    }
    Ok(())
}
