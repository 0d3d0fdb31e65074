use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// A finite block of a bi-infinite lower-triangular matrix, rows and columns
/// indexed by (possibly negative) integers, bounds inclusive.
///
/// `None` entries are beyond the propagated precision.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixWindow<F> {
    pub row_lo: i64,
    pub row_hi: i64,
    pub col_lo: i64,
    pub col_hi: i64,
    /// entries with `m - n < diag_offset` are structural zeros
    pub diag_offset: i64,
    pub entries: Vec<Vec<Option<F>>>,
}

impl<F: Field> MatrixWindow<F> {
    pub fn from_fn(
        row_lo: i64,
        row_hi: i64,
        col_lo: i64,
        col_hi: i64,
        diag_offset: i64,
        mut entry: impl FnMut(i64, i64) -> Option<F>,
    ) -> Result<Self> {
        if row_lo > row_hi || col_lo > col_hi {
            return Err(Error::InvalidArgument(format!("empty window rows {row_lo}:{row_hi} cols {col_lo}:{col_hi}")));
        }
        let entries = (row_lo..=row_hi).map(|m| (col_lo..=col_hi).map(|n| entry(m, n)).collect()).collect();
        Ok(MatrixWindow { row_lo, row_hi, col_lo, col_hi, diag_offset, entries })
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn contains(&self, m: i64, n: i64) -> bool {
        (self.row_lo..=self.row_hi).contains(&m) && (self.col_lo..=self.col_hi).contains(&n)
    }

    /// Entry `(m, n)`; `None` if outside the window or unknown.
    pub fn get(&self, m: i64, n: i64) -> Option<&F> {
        if !self.contains(m, n) {
            return None;
        }
        self.entries[(m - self.row_lo) as usize][(n - self.col_lo) as usize].as_ref()
    }

    pub fn is_structural_zero(&self, m: i64, n: i64) -> bool {
        m - n < self.diag_offset
    }

    pub fn is_known(&self, m: i64, n: i64) -> bool {
        self.get(m, n).is_some()
    }

    /// Known/unknown mask, row-major like `entries`.
    pub fn known_mask(&self) -> Vec<Vec<bool>> {
        self.entries.iter().map(|r| r.iter().map(Option::is_some).collect()).collect()
    }

    /// Entries as plain values, or `None` if any of them is unknown.
    pub fn values(&self) -> Option<Vec<Vec<F>>> {
        self.entries.iter().map(|r| r.iter().cloned().collect()).collect()
    }

    /// Aligned text grid with row and column indices; `·` marks structural
    /// zeros and `?` unknown entries.
    pub fn render_text(&self) -> String {
        let cell = |m: i64, n: i64| -> String {
            if self.is_structural_zero(m, n) {
                "·".to_string()
            } else {
                match self.get(m, n) {
                    Some(v) => v.to_string(),
                    None => "?".to_string(),
                }
            }
        };
        let grid: Vec<Vec<String>> =
            (self.row_lo..=self.row_hi).map(|m| (self.col_lo..=self.col_hi).map(|n| cell(m, n)).collect()).collect();
        let width = grid
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .chain((self.col_lo..=self.col_hi).map(|n| n.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = (self.row_lo..=self.row_hi).map(|m| m.to_string().len()).max().unwrap_or(1);

        let pad = |s: &str, w: usize| format!("{}{}", " ".repeat(w.saturating_sub(s.chars().count())), s);
        let mut out = String::new();
        out.push_str(&" ".repeat(label + 2));
        let header: Vec<String> = (self.col_lo..=self.col_hi).map(|n| pad(&n.to_string(), width)).collect();
        out.push_str(&header.join(" "));
        out.push('\n');
        for (m, row) in (self.row_lo..=self.row_hi).zip(&grid) {
            out.push_str(&pad(&m.to_string(), label));
            out.push_str(" |");
            let cells: Vec<String> = row.iter().map(|s| pad(s, width)).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Formal product of two windows over the shared index range
    /// `self.col_lo..=self.col_hi` = `other.row_lo..=other.row_hi`.
    ///
    /// Only meaningful when the window covers every nonzero term of the
    /// inner sums, which lower-triangularity guarantees for suitable blocks.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.col_lo != other.row_lo || self.col_hi != other.row_hi {
            return Err(Error::InvalidArgument("window index ranges do not match".into()));
        }
        MatrixWindow::from_fn(
            self.row_lo,
            self.row_hi,
            other.col_lo,
            other.col_hi,
            self.diag_offset + other.diag_offset,
            |m, n| {
                let mut acc = F::zero();
                for k in self.col_lo..=self.col_hi {
                    let a = self.get(m, k)?;
                    let b = other.get(k, n)?;
                    acc = acc + &(a.clone() * b);
                }
                Some(acc)
            },
        )
    }
}

impl<F: Field> fmt::Display for MatrixWindow<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, Rational};

    fn pascal_block() -> MatrixWindow<Rational> {
        MatrixWindow::from_fn(0, 3, 0, 3, 0, |m, n| {
            if n > m {
                return Some(int(0));
            }
            let mut c = 1i64;
            for i in 0..n {
                c = c * (m - i) / (i + 1);
            }
            Some(int(c))
        })
        .unwrap()
    }

    #[test]
    fn text_grid() {
        let mut w = pascal_block();
        w.entries[3][0] = None;
        let text = w.render_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "   0 1 2 3");
        assert_eq!(lines[1], "0 |1 · · ·");
        assert_eq!(lines[3], "2 |1 2 1 ·");
        assert_eq!(lines[4], "3 |? 3 3 1");
    }

    #[test]
    fn product_of_blocks() {
        let p = pascal_block();
        let sq = p.matmul(&p).unwrap();
        assert_eq!(sq.get(3, 1), Some(&int(12)));
        assert_eq!(sq.get(2, 0), Some(&int(4)));
    }

    #[test]
    fn empty_range_rejected() {
        assert!(MatrixWindow::<Rational>::from_fn(1, 0, 0, 0, 0, |_, _| None).is_err());
    }
}
