//! Checks on colorings of `K_{N,N}` at the threshold `N`, where `N = 2m`
//! for `n = m` and `N = n + m - 1` for `n > m`, with `n >= m >= 5`.

use serde_json::json;

use super::{LemmaCheck, LemmaId};
use crate::certificate::WitnessRecord;
use crate::coloring::{Color, Coloring};
use crate::constructions::check_extremal;
use crate::cycles::find_biclique;
use crate::error::{Error, Result};

/// The host side required by the two threshold lemmas.
pub fn extremal_shape(n: usize, m: usize) -> Result<usize> {
    if m < 5 || n < m {
        return Err(Error::Parameters(format!("need n >= m >= 5, got n={n} m={m}")));
    }
    Ok(if n == m { 2 * m } else { n + m - 1 })
}

fn start(c: &Coloring, n: usize, m: usize, lemma: LemmaId) -> Result<(LemmaCheck, bool)> {
    let side = extremal_shape(n, m)?;
    if c.rows() != side || c.cols() != side {
        return Err(Error::Shape(format!(
            "(n,m)=({n},{m}) needs a {side}x{side} coloring, got {}x{}",
            c.rows(),
            c.cols()
        )));
    }
    let mut r = LemmaCheck::new(lemma, format!("{side}x{side} coloring, n={n} m={m}"));
    let check = check_extremal(c, n, m);
    r.details = json!({
        "n": n,
        "m": m,
        "blue_longest": check.blue_longest,
        "red_longest": check.red_longest,
    });
    let mut met = true;
    if let Some(w) = &check.blue_cycle {
        r.witnesses.push(WitnessRecord::cycle(Some(Color::Blue), w));
        r.notes.push(format!("blue C_{} present", 2 * n));
        met = false;
    }
    if let Some(w) = &check.red_cycle {
        r.witnesses.push(WitnessRecord::cycle(Some(Color::Red), w));
        r.notes.push(format!("red C_{} present", 2 * m));
        met = false;
    }
    r.precondition_met = met;
    Ok((r, met))
}

/// No blue `K_{n-1,n-1}` in a coloring at the threshold that has neither
/// a blue `C_2n` nor a red `C_2m`.
pub fn check_no_biclique(c: &Coloring, n: usize, m: usize) -> Result<LemmaCheck> {
    let (mut r, met) = start(c, n, m, LemmaId::NoBiclique)?;
    if !met {
        return Ok(r);
    }
    match find_biclique(&c.view(Color::Blue), n - 1, n - 1)? {
        Some(w) => {
            r.conclusion_held = false;
            r.witnesses.push(WitnessRecord::Biclique {
                color: Some(Color::Blue),
                witness: w,
            });
            r.notes.push(format!("blue K_{{{0},{0}}} found", n - 1));
        }
        None => {
            r.conclusion_held = true;
            r.notes.push(format!("no blue K_{{{0},{0}}} (exhaustive search)", n - 1));
        }
    }
    Ok(r)
}

/// In the same setting: longest blue cycle `2c` has `c <= n - 1`, and for
/// `n = m` the longest red cycle `2t` has `t <= m - 1` as well.
pub fn check_longest_cycle_bound(c: &Coloring, n: usize, m: usize) -> Result<LemmaCheck> {
    let (mut r, met) = start(c, n, m, LemmaId::LongestCycleBound)?;
    if !met {
        return Ok(r);
    }
    let blue = r.details["blue_longest"].as_u64().unwrap_or(0) as usize / 2;
    let red = r.details["red_longest"].as_u64().unwrap_or(0) as usize / 2;
    let mut held = blue < n;
    if n == m {
        held &= red < m;
    }
    r.conclusion_held = held;
    r.notes.push(format!("c={blue}, t={red}"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct_unbalanced;

    #[test]
    fn shapes() {
        assert_eq!(extremal_shape(5, 5).unwrap(), 10);
        assert_eq!(extremal_shape(6, 5).unwrap(), 10);
        assert!(extremal_shape(4, 4).is_err());
        let nine = construct_unbalanced(6, 5).unwrap();
        assert!(matches!(check_no_biclique(&nine, 6, 5), Err(Error::Shape(_))));
        assert!(matches!(check_longest_cycle_bound(&nine, 6, 5), Err(Error::Shape(_))));
    }

    #[test]
    fn all_red_is_vacuous() {
        let red = Coloring::uniform(10, 10, Color::Red).unwrap();
        let r = check_longest_cycle_bound(&red, 5, 5).unwrap();
        assert!(!r.precondition_met);
        assert!(r.notes.iter().any(|s| s == "red C_10 present"));
        let r = check_no_biclique(&red, 5, 5).unwrap();
        assert_eq!(r.verdict(), "vacuous");
    }
}
