//! Red/blue edge colorings of complete bipartite graphs and their text format.
//!
//! A coloring of `K_{R,C}` is a total `R x C` bit matrix: bit `(i, j)` set
//! means the edge `x_i y_j` is blue, clear means red.
//!
//! The document format is line oriented and byte exact:
//!
//! ```text
//! bramsey-coloring v1
//! rows=2 cols=3
//! BRR
//! RRB
//! ```
//!
//! Lines end in LF and the last row carries a trailing newline.

use std::fmt;
use std::ops::Deref;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bits::{self, MAX_SIDE};
use crate::error::{Error, Result};
use crate::graph::BiGraph;

pub const HEADER: &str = "bramsey-coloring v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

impl std::str::FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Color> {
        match s {
            "red" | "R" => Ok(Color::Red),
            "blue" | "B" => Ok(Color::Blue),
            _ => Err(Error::Parameters(format!("unknown color {s:?}"))),
        }
    }
}

/// A red/blue coloring of `K_{rows,cols}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    rows: usize,
    cols: usize,
    // bit j of blue[i] is the color of x_i y_j
    blue: Vec<u64>,
}

impl Coloring {
    /// The monochromatic coloring of `K_{rows,cols}`.
    pub fn uniform(rows: usize, cols: usize, color: Color) -> Result<Coloring> {
        let fill = match color {
            Color::Blue => bits::full(cols),
            Color::Red => 0,
        };
        Coloring::from_blue_rows(rows, cols, vec![fill; rows])
    }

    /// Build from rows of blue bits (bit `j` of `blue[i]` set iff `x_i y_j` is blue).
    pub fn from_blue_rows(rows: usize, cols: usize, blue: Vec<u64>) -> Result<Coloring> {
        check_shape(rows, cols)?;
        if blue.len() != rows {
            return Err(Error::Shape(format!(
                "expected {rows} rows, got {}",
                blue.len()
            )));
        }
        let mask = bits::full(cols);
        if let Some(i) = blue.iter().position(|r| r & !mask != 0) {
            return Err(Error::Shape(format!("row {i} has bits beyond column {cols}")));
        }
        Ok(Coloring { rows, cols, blue })
    }

    /// Build from strings over `{R, B}`, one per row.
    pub fn from_pattern(rows: &[&str]) -> Result<Coloring> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut blue = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!("row {i} has length {}", row.len())));
            }
            let mut bitsrow = 0u64;
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    'B' => bitsrow |= bits::bit(j),
                    'R' => {}
                    _ => {
                        return Err(Error::Parameters(format!(
                            "invalid color char at ({},{})",
                            i + 1,
                            j + 1
                        )))
                    }
                }
            }
            blue.push(bitsrow);
        }
        Coloring::from_blue_rows(rows.len(), cols, blue)
    }

    pub fn random<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Result<Coloring> {
        check_shape(rows, cols)?;
        let mask = bits::full(cols);
        let blue = (0..rows).map(|_| rng.gen::<u64>() & mask).collect();
        Ok(Coloring { rows, cols, blue })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn color(&self, i: usize, j: usize) -> Color {
        if bits::contains(self.blue[i], j) {
            Color::Blue
        } else {
            Color::Red
        }
    }

    pub fn set(&mut self, i: usize, j: usize, color: Color) {
        match color {
            Color::Blue => self.blue[i] |= bits::bit(j),
            Color::Red => self.blue[i] &= !bits::bit(j),
        }
    }

    pub fn blue_row(&self, i: usize) -> u64 {
        self.blue[i]
    }

    pub fn blue_rows(&self) -> &[u64] {
        &self.blue
    }

    pub fn blue_count(&self) -> usize {
        self.blue.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// One color class as a bipartite graph.
    pub fn view(&self, color: Color) -> ColorView {
        let rows = match color {
            Color::Blue => self.blue.clone(),
            Color::Red => {
                let mask = bits::full(self.cols);
                self.blue.iter().map(|r| !r & mask).collect()
            }
        };
        ColorView {
            color,
            graph: BiGraph::from_rows(self.rows, self.cols, rows).expect("shape checked"),
        }
    }

    /// Exchange the roles of rows and columns.
    pub fn transpose(&self) -> Coloring {
        let mut blue = vec![0u64; self.cols];
        for (i, &row) in self.blue.iter().enumerate() {
            for j in bits::members(row) {
                blue[j] |= bits::bit(i);
            }
        }
        Coloring {
            rows: self.cols,
            cols: self.rows,
            blue,
        }
    }

    /// Exchange red and blue.
    pub fn swap_colors(&self) -> Coloring {
        let mask = bits::full(self.cols);
        Coloring {
            rows: self.rows,
            cols: self.cols,
            blue: self.blue.iter().map(|r| !r & mask).collect(),
        }
    }

    /// Relabel vertices: row `i` moves to `row_perm[i]`, column `j` to `col_perm[j]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Coloring {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        let mut blue = vec![0u64; self.rows];
        for (i, &row) in self.blue.iter().enumerate() {
            blue[row_perm[i]] = bits::members(row).fold(0, |acc, j| acc | bits::bit(col_perm[j]));
        }
        Coloring {
            rows: self.rows,
            cols: self.cols,
            blue,
        }
    }

    /// The sub-coloring on the first `rows` rows and `cols` columns.
    pub fn restrict(&self, rows: usize, cols: usize) -> Result<Coloring> {
        if rows > self.rows || cols > self.cols {
            return Err(Error::Shape(format!(
                "cannot restrict {}x{} to {rows}x{cols}",
                self.rows, self.cols
            )));
        }
        let mask = bits::full(cols);
        Coloring::from_blue_rows(rows, cols, self.blue[..rows].iter().map(|r| r & mask).collect())
    }

    /// Rows as `{R, B}` strings.
    pub fn pattern(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.color(i, j).as_char()).collect())
            .collect()
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({}x{} [{}])", self.rows, self.cols, self.pattern().join(" "))
    }
}

fn check_shape(rows: usize, cols: usize) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Err(Error::Shape(format!("empty shape {rows}x{cols}")));
    }
    if rows > MAX_SIDE || cols > MAX_SIDE {
        return Err(Error::Shape(format!(
            "shape {rows}x{cols} exceeds {MAX_SIDE} per side"
        )));
    }
    Ok(())
}

/// One color class of a [`Coloring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorView {
    pub color: Color,
    pub graph: BiGraph,
}

impl Deref for ColorView {
    type Target = BiGraph;

    fn deref(&self) -> &BiGraph {
        &self.graph
    }
}

pub fn color_view(c: &Coloring, color: Color) -> ColorView {
    c.view(color)
}

/// Render a coloring in the `bramsey-coloring v1` format.
pub fn serialize_coloring(c: &Coloring) -> String {
    let mut out = String::with_capacity(HEADER.len() + 24 + c.rows * (c.cols + 1));
    out.push_str(HEADER);
    out.push('\n');
    out.push_str(&format!("rows={} cols={}\n", c.rows, c.cols));
    for row in c.pattern() {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

/// Parse a `bramsey-coloring v1` document.
pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let err = |line: usize, column: usize, message: String| Error::Parse {
        line,
        column,
        message,
    };
    if !text.ends_with('\n') {
        let line = text.split('\n').count();
        return Err(err(line, 1, "missing trailing newline".into()));
    }
    // the final split piece after the trailing LF is empty
    let lines: Vec<&str> = text[..text.len() - 1].split('\n').collect();

    if lines[0] != HEADER {
        return Err(err(1, 1, format!("malformed header, expected {HEADER:?}")));
    }
    let dims = lines
        .get(1)
        .ok_or_else(|| err(2, 1, "missing dimensions line".into()))?;
    let (rows, cols) = parse_dims(dims).ok_or_else(|| {
        err(2, 1, format!("malformed dimensions line {dims:?}, expected \"rows=<R> cols=<C>\""))
    })?;
    if rows == 0 || cols == 0 || rows > MAX_SIDE || cols > MAX_SIDE {
        return Err(err(
            2,
            1,
            format!("unsupported shape {rows}x{cols} (each side must be 1..={MAX_SIDE})"),
        ));
    }

    let body = &lines[2..];
    if body.len() < rows {
        return Err(err(
            3 + body.len(),
            1,
            format!("expected {rows} rows, found {}", body.len()),
        ));
    }
    if body.len() > rows {
        return Err(err(3 + rows, 1, format!("unexpected extra row, expected {rows} rows")));
    }

    let mut blue = Vec::with_capacity(rows);
    for (i, line) in body.iter().enumerate() {
        let mut row = 0u64;
        let mut count = 0usize;
        for (j, ch) in line.chars().enumerate() {
            if ch != 'B' && ch != 'R' {
                return Err(err(
                    i + 3,
                    j + 1,
                    format!("invalid color char at ({},{}): {ch:?}", i + 1, j + 1),
                ));
            }
            if j >= cols {
                return Err(err(
                    i + 3,
                    j + 1,
                    format!("row {} is longer than {cols} columns", i + 1),
                ));
            }
            if ch == 'B' {
                row |= bits::bit(j);
            }
            count += 1;
        }
        if count < cols {
            return Err(err(
                i + 3,
                count + 1,
                format!("row {} has {count} columns, expected {cols}", i + 1),
            ));
        }
        blue.push(row);
    }
    Coloring::from_blue_rows(rows, cols, blue)
}

fn parse_dims(line: &str) -> Option<(usize, usize)> {
    let (r, c) = line.split_once(' ')?;
    let rows = r.strip_prefix("rows=")?;
    let cols = c.strip_prefix("cols=")?;
    // reject signs, spaces and leading '+' that str::parse would accept
    if !rows.bytes().all(|b| b.is_ascii_digit()) || !cols.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some((rows.parse().ok()?, cols.parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_diagonal() {
        let c = parse_coloring("bramsey-coloring v1\nrows=2 cols=2\nBR\nRB\n").unwrap();
        assert_eq!(c.blue_rows(), &[0b01, 0b10]);
        assert_eq!(c.color(0, 0), Color::Blue);
        assert_eq!(c.color(0, 1), Color::Red);
    }

    #[test]
    fn serializes_small_cases() {
        let b = Coloring::uniform(1, 1, Color::Blue).unwrap();
        assert_eq!(serialize_coloring(&b), "bramsey-coloring v1\nrows=1 cols=1\nB\n");
        let r = Coloring::uniform(2, 3, Color::Red).unwrap();
        assert_eq!(
            serialize_coloring(&r),
            "bramsey-coloring v1\nrows=2 cols=3\nRRR\nRRR\n"
        );
    }

    #[test]
    fn reports_bad_char_position() {
        let e = parse_coloring("bramsey-coloring v1\nrows=2 cols=2\nBX\nRB\n").unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("invalid color char at (1,2)"), "{msg}");
        match e {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (3, 2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reports_structural_errors() {
        let cases = [
            ("bramsey-coloring v2\nrows=1 cols=1\nB\n", "malformed header"),
            ("bramsey-coloring v1\nrows=1\nB\n", "malformed dimensions"),
            ("bramsey-coloring v1\nrows=2 cols=1\nB\n", "expected 2 rows, found 1"),
            ("bramsey-coloring v1\nrows=1 cols=1\nB\nR\n", "unexpected extra row"),
            ("bramsey-coloring v1\nrows=1 cols=2\nB\n", "has 1 columns"),
            ("bramsey-coloring v1\nrows=1 cols=1\nBB\n", "longer than"),
            ("bramsey-coloring v1\nrows=1 cols=1\nB", "trailing newline"),
            ("bramsey-coloring v1\nrows=0 cols=1\n", "unsupported shape"),
            ("bramsey-coloring v1\nrows=1 cols=1\nB\r\n", "invalid color char at (1,2)"),
        ];
        for (doc, want) in cases {
            let msg = parse_coloring(doc).unwrap_err().to_string();
            assert!(msg.contains(want), "{doc:?}: {msg}");
        }
    }

    #[test]
    fn views_partition_edges() {
        let c = Coloring::from_pattern(&["BRB", "RRB"]).unwrap();
        let blue = c.view(Color::Blue);
        let red = c.view(Color::Red);
        for i in 0..2 {
            for j in 0..3 {
                assert_ne!(blue.has_edge(i, j), red.has_edge(i, j));
            }
        }
        assert_eq!(Coloring::uniform(3, 3, Color::Blue).unwrap().view(Color::Red).edge_count(), 0);
    }

    #[test]
    fn transpose_and_permute() {
        let c = Coloring::from_pattern(&["BRR", "RRB"]).unwrap();
        let t = c.transpose();
        assert_eq!(t.pattern(), vec!["BR", "RR", "RB"]);
        let p = c.permuted(&[1, 0], &[2, 0, 1]);
        assert_eq!(p.pattern(), vec!["RBR", "RRB"]);
        assert_eq!(c.swap_colors().pattern(), vec!["RBB", "BBR"]);
        assert_eq!(c.restrict(1, 2).unwrap().pattern(), vec!["BR"]);
    }
}
