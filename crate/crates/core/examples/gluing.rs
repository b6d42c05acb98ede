//! Long cycles across two complete blocks joined by two edges.
//!
//! ```text
//! cargo run --release --example gluing
//! ```

use bramsey::cycles::{cycle_spectrum, glue_complete_pairs, near_complete_glue_check, Connector, GlueSpec, NearCompleteSpec};

fn main() -> bramsey::Result<()> {
    for connector in [Connector::CrossPair, Connector::TwoDisjoint] {
        let spec = GlueSpec { a1: 3, b1: 4, a2: 2, b2: 3, connector };
        let r = glue_complete_pairs(&spec)?;
        let all = cycle_spectrum(&spec.graph()?);
        println!(
            "{connector:?}: guaranteed {:?}, realized {:?}, outside the guarantee {:?}",
            spec.guaranteed_lengths(),
            all.lengths,
            r.unguaranteed
        );
    }

    // one missing edge in each block
    let mut spec = NearCompleteSpec::complete(3, 4, 3, 4);
    spec.a_missing[2] = Some(3);
    spec.c_missing[0] = Some(1);
    let r = near_complete_glue_check(&spec)?;
    println!(
        "near-complete 3x4 + 3x4: guaranteed {:?}, witnessed {:?}, missing {:?}",
        spec.guaranteed_lengths(),
        r.guaranteed.lengths,
        r.missing
    );
    Ok(())
}
