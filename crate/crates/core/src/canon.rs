//! Exact canonical forms of colorings under row and column permutations,
//! optionally extended by the side swap (transpose) and the color swap.
//!
//! A coloring is read as a tuple of rows, each row a big-endian integer in
//! which column 0 is the most significant bit. The canonical form is the
//! lexicographically least sorted row tuple over all column orders that list
//! the columns by a refined, isomorphism-invariant class label. Restricting
//! to invariant-sorted orders keeps the form exact: isomorphic colorings see
//! the same set of candidate images.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::bits;
use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// Which symmetries beyond row and column permutations are enabled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetryFlags {
    pub side_swap: bool,
    pub color_swap: bool,
}

impl SymmetryFlags {
    pub const NONE: SymmetryFlags = SymmetryFlags {
        side_swap: false,
        color_swap: false,
    };

    /// The flags used by the verifier for an `(n, m)` run on a square host:
    /// side swap always, color swap only when `n = m`.
    pub fn for_run(n: usize, m: usize) -> SymmetryFlags {
        SymmetryFlags {
            side_swap: true,
            color_swap: n == m,
        }
    }

    /// Names recorded in certificates.
    pub fn names(&self) -> Vec<String> {
        let mut v = vec!["row-permutations".to_string(), "column-permutations".to_string()];
        if self.side_swap {
            v.push("side-swap".into());
        }
        if self.color_swap {
            v.push("color-swap".into());
        }
        v
    }

    /// Order of the enabled group acting on `rows x cols` colorings.
    pub fn group_order(&self, rows: usize, cols: usize) -> u128 {
        let mut g = factorial(rows) * factorial(cols);
        if self.side_swap {
            g *= 2;
        }
        if self.color_swap {
            g *= 2;
        }
        g
    }

    fn check(&self, c: &Coloring) -> Result<()> {
        if self.side_swap && !c.is_square() {
            return Err(Error::Parameters(format!(
                "side swap needs a square coloring, got {}x{}",
                c.rows(),
                c.cols()
            )));
        }
        Ok(())
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// An exact isomorphism-class label. Two colorings of the same shape get equal
/// keys iff one maps onto the other under the enabled group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn from_rows(rows: usize, cols: usize, be_rows: &[u64]) -> CanonicalKey {
        let mut bytes = Vec::with_capacity(2 + 8 * be_rows.len());
        bytes.push(rows as u8);
        bytes.push(cols as u8);
        for r in be_rows {
            bytes.extend_from_slice(&r.to_be_bytes());
        }
        CanonicalKey(bytes)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Rows of `c` as big-endian integers (column 0 most significant).
pub fn big_endian_rows(c: &Coloring) -> Vec<u64> {
    c.blue_rows()
        .iter()
        .map(|&r| bits::reverse(r, c.cols()))
        .collect()
}

/// Inverse of [`big_endian_rows`].
pub fn from_big_endian_rows(rows: usize, cols: usize, be_rows: &[u64]) -> Result<Coloring> {
    let blue = be_rows.iter().map(|&r| bits::reverse(r, cols)).collect();
    Coloring::from_blue_rows(rows, cols, blue)
}

pub fn canonical_key(c: &Coloring, flags: SymmetryFlags) -> Result<CanonicalKey> {
    let rows = canonical_rows(c, flags)?;
    Ok(CanonicalKey::from_rows(c.rows(), c.cols(), &rows))
}

/// The representative of the class of `c`.
pub fn canonical_form(c: &Coloring, flags: SymmetryFlags) -> Result<Coloring> {
    let rows = canonical_rows(c, flags)?;
    from_big_endian_rows(c.rows(), c.cols(), &rows)
}

/// Least sorted big-endian row tuple in the class of `c`.
pub fn canonical_rows(c: &Coloring, flags: SymmetryFlags) -> Result<Vec<u64>> {
    flags.check(c)?;
    let mut best: Option<Vec<u64>> = None;
    for v in variants(c, flags) {
        let mut s = ImageSearch::new(&v, best.clone(), false);
        s.run();
        if let Some(b) = s.best {
            if best.as_ref().is_none_or(|cur| b < *cur) {
                best = Some(b);
            }
        }
    }
    Ok(best.expect("at least one image"))
}

/// True iff `c` is literally its own canonical form.
pub fn is_canonical(c: &Coloring, flags: SymmetryFlags) -> Result<bool> {
    flags.check(c)?;
    Ok(is_canonical_rows(&big_endian_rows(c), c.rows(), c.cols(), flags))
}

/// Canonicity test on a big-endian row tuple, with early exit as soon as a
/// smaller image turns up.
pub fn is_canonical_rows(be_rows: &[u64], rows: usize, cols: usize, flags: SymmetryFlags) -> bool {
    if be_rows.windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    let c = from_big_endian_rows(rows, cols, be_rows).expect("valid rows");
    let own = be_rows.to_vec();
    let mut equal = false;
    for v in variants(&c, flags) {
        let mut s = ImageSearch::new(&v, Some(own.clone()), true);
        s.run();
        if s.smaller {
            return false;
        }
        equal |= s.equal;
    }
    equal
}

fn variants(c: &Coloring, flags: SymmetryFlags) -> Vec<Coloring> {
    let mut out = vec![c.clone()];
    if flags.side_swap {
        out.push(c.transpose());
    }
    if flags.color_swap {
        let swapped: Vec<Coloring> = out.iter().map(Coloring::swap_colors).collect();
        out.extend(swapped);
    }
    out
}

/// Invariant class label of every column, from iterated degree refinement.
fn column_classes(c: &Coloring) -> Vec<usize> {
    let (r, k) = (c.rows(), c.cols());
    let mut row_cls: Vec<usize> = (0..r).map(|i| c.blue_row(i).count_ones() as usize).collect();
    let col_weight = |j: usize| (0..r).filter(|&i| bits::contains(c.blue_row(i), j)).count();
    let mut col_cls: Vec<usize> = (0..k).map(col_weight).collect();
    let distinct = |v: &[usize]| v.iter().unique().count();
    loop {
        let col_sigs: Vec<(usize, Vec<usize>)> = (0..k)
            .map(|j| {
                let mut s: Vec<usize> = (0..r)
                    .filter(|&i| bits::contains(c.blue_row(i), j))
                    .map(|i| row_cls[i])
                    .collect();
                s.sort_unstable();
                (col_cls[j], s)
            })
            .collect();
        let new_col = rank(&col_sigs);
        let row_sigs: Vec<(usize, Vec<usize>)> = (0..r)
            .map(|i| {
                let mut s: Vec<usize> = bits::members(c.blue_row(i)).map(|j| new_col[j]).collect();
                s.sort_unstable();
                (row_cls[i], s)
            })
            .collect();
        let new_row = rank(&row_sigs);
        let stable = distinct(&new_col) == distinct(&col_cls) && distinct(&new_row) == distinct(&row_cls);
        col_cls = new_col;
        row_cls = new_row;
        if stable {
            return col_cls;
        }
    }
}

fn rank<T: Ord + Clone>(sigs: &[T]) -> Vec<usize> {
    let ranks: BTreeMap<T, usize> = sigs
        .iter()
        .cloned()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(k, s)| (s, k))
        .collect();
    sigs.iter().map(|s| ranks[s]).collect()
}

/// Depth-first search over class-respecting column orders.
struct ImageSearch<'a> {
    c: &'a Coloring,
    slot_class: Vec<usize>,
    class_of: Vec<usize>,
    acc: Vec<u64>,
    used: u64,
    best: Option<Vec<u64>>,
    // early-exit mode: stop at the first image below `best`
    decide: bool,
    smaller: bool,
    equal: bool,
}

impl<'a> ImageSearch<'a> {
    fn new(c: &'a Coloring, best: Option<Vec<u64>>, decide: bool) -> ImageSearch<'a> {
        let class_of = column_classes(c);
        let mut slot_class = class_of.clone();
        slot_class.sort_unstable();
        ImageSearch {
            c,
            slot_class,
            class_of,
            acc: vec![0; c.rows()],
            used: 0,
            best,
            decide,
            smaller: false,
            equal: false,
        }
    }

    fn run(&mut self) {
        self.step(0);
    }

    fn step(&mut self, pos: usize) {
        let cols = self.c.cols();
        if pos == cols {
            let mut img = self.acc.clone();
            img.sort_unstable();
            match &self.best {
                Some(b) if img > *b => {}
                Some(b) if img == *b => self.equal = true,
                _ => {
                    if self.decide {
                        self.smaller = true;
                    } else {
                        self.best = Some(img);
                    }
                }
            }
            return;
        }
        if let (Some(b), true) = (&self.best, pos > 0) {
            // the smallest final row is at least the smallest prefix shifted up
            let lo = self.acc.iter().copied().min().unwrap_or(0);
            if lo > b.first().copied().unwrap_or(0) >> (cols - pos) {
                return;
            }
        }
        let want = self.slot_class[pos];
        for j in 0..cols {
            if self.class_of[j] != want || bits::contains(self.used, j) {
                continue;
            }
            let saved = self.acc.clone();
            for (i, a) in self.acc.iter_mut().enumerate() {
                *a = (*a << 1) | ((self.c.blue_row(i) >> j) & 1);
            }
            self.used |= bits::bit(j);
            self.step(pos + 1);
            self.used &= !bits::bit(j);
            self.acc = saved;
            if self.smaller {
                return;
            }
        }
    }
}

/// All canonical representatives of `rows x cols` colorings, in increasing
/// order of their big-endian row tuples. Orderly generation over sorted row
/// tuples; practical up to about 5x5.
pub fn canonical_representatives(rows: usize, cols: usize, flags: SymmetryFlags) -> Result<Vec<Coloring>> {
    if flags.side_swap && rows != cols {
        return Err(Error::Parameters("side swap needs a square shape".into()));
    }
    let probe = Coloring::uniform(rows, cols, crate::coloring::Color::Red)?;
    flags.check(&probe)?;
    let top = bits::full(cols);
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(rows);
    fn rec(
        tuple: &mut Vec<u64>,
        rows: usize,
        cols: usize,
        top: u64,
        flags: SymmetryFlags,
        out: &mut Vec<Coloring>,
    ) {
        if tuple.len() == rows {
            if is_canonical_rows(tuple, rows, cols, flags) {
                out.push(from_big_endian_rows(rows, cols, tuple).expect("valid"));
            }
            return;
        }
        let start = tuple.last().copied().unwrap_or(0);
        for v in start..=top {
            tuple.push(v);
            rec(tuple, rows, cols, top, flags, out);
            tuple.pop();
        }
    }
    rec(&mut tuple, rows, cols, top, flags, &mut out);
    Ok(out)
}

/// Size of the orbit of `c`, as the group order over the stabilizer order.
/// Enumerates all column permutations, so keep `cols` small.
pub fn orbit_size(c: &Coloring, flags: SymmetryFlags) -> Result<u128> {
    flags.check(c)?;
    let mut target = big_endian_rows(c);
    target.sort_unstable();
    let row_stab: u128 = target
        .iter()
        .dedup_with_count()
        .map(|(k, _)| factorial(k))
        .product();
    let cols = c.cols();
    let mut stab: u128 = 0;
    for v in variants(c, flags) {
        for perm in (0..cols).permutations(cols) {
            let mut img: Vec<u64> = (0..v.rows())
                .map(|i| {
                    perm.iter()
                        .fold(0u64, |acc, &j| (acc << 1) | ((v.blue_row(i) >> j) & 1))
                })
                .collect();
            img.sort_unstable();
            if img == target {
                stab += row_stab;
            }
        }
    }
    Ok(flags.group_order(c.rows(), c.cols()) / stab)
}
