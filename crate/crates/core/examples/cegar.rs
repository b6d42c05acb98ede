//! Lazy clause generation with an external SAT solver.
//!
//! The solver comes from `BRAMSEY_SAT_CMD`, for example
//!
//! ```text
//! BRAMSEY_SAT_CMD='splr -q -C -r {model} {cnf} >/dev/null 2>&1; [ $? -eq 20 ] && echo UNSAT > {model}; true' \
//!     cargo run --release --example cegar
//! ```

use bramsey::verify::{cegar_verify, CegarOptions, SolverCommand};

fn main() -> bramsey::Result<()> {
    let Some(solver) = SolverCommand::resolve(None, None)? else {
        eprintln!("set BRAMSEY_SAT_CMD to a solver template using {{cnf}} and {{model}}");
        std::process::exit(1);
    };
    for (n, m, big_n) in [(2, 2, 4), (2, 2, 5), (3, 3, 5), (3, 3, 6)] {
        let r = cegar_verify(n, m, big_n, &solver, &CegarOptions::default())?;
        println!(
            "(n,m,N)=({n},{m},{big_n}) {:<13} rounds={:<4} blocked blue={} red={} {} ms",
            r.verdict.to_string(),
            r.counters["rounds"],
            r.counters["blocked_blue"],
            r.counters["blocked_red"],
            r.wall_ms
        );
        if let Some(w) = &r.witness {
            println!("    {}", w.pattern().join(" "));
        }
    }
    Ok(())
}
