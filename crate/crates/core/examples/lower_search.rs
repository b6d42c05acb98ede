//! Lower bounds: a certified avoiding coloring of `K_{N,N}` means `br > N`.
//!
//! ```text
//! cargo run --release --example lower_search
//! ```

use bramsey::verify::{search_lower, LowerOptions};

fn main() -> bramsey::Result<()> {
    // past the constructions each node runs a cycle search, so keep the budget small
    let opts = LowerOptions { budget: 20_000, ..LowerOptions::default() };
    for (n, m, big_n) in [(2, 2, 4), (3, 2, 4), (3, 3, 5), (4, 4, 7), (6, 5, 9), (6, 5, 10)] {
        let r = search_lower(n, m, big_n, &opts)?;
        println!(
            "(n,m,N)=({n},{m},{big_n}) {:<20} source={}",
            r.verdict.to_string(),
            r.details["source"]
        );
        if let Some(w) = &r.witness {
            if big_n <= 5 {
                for row in w.pattern() {
                    println!("    {row}");
                }
            }
        }
    }
    Ok(())
}
