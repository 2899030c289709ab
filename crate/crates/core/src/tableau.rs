//! Standard Young tableaux and tabloids.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A filling of a Young diagram by `1..=n`, rows and columns strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardYoungTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardYoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lengths.contains(&0) || lengths.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!("row lengths {lengths:?} are not a partition")));
        }
        let n: usize = lengths.iter().sum();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidTableau(format!("entries of {rows:?} are not 1..={n}")));
            }
            seen[v] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {i} of {rows:?} is not increasing")));
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidTableau(format!("a column of {rows:?} is not increasing")));
            }
        }
        Ok(StandardYoungTableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        StandardYoungTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("tableau rows form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `(row, column)` of each value, indexed by value (entry 0 unused).
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); self.size() + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                pos[v] = (i, j);
            }
        }
        pos
    }

    pub fn tabloid(&self) -> Tabloid {
        let row_of = self.positions().into_iter().map(|(i, _)| i).collect();
        Tabloid {
            shape: self.shape(),
            row_of,
        }
    }

    /// Row-reading tableau: `1..=n` filled left to right, top to bottom.
    pub fn row_reading(shape: &Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        StandardYoungTableau { rows }
    }
}

impl fmt::Display for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            write!(f, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

/// Every standard tableau of the given shape, in a fixed order (entries are
/// placed in increasing order, trying rows top to bottom).
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardYoungTableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    place(shape, 1, &mut rows, &mut out);
    out
}

fn place(shape: &Partition, value: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardYoungTableau>) {
    if value > shape.weight() {
        out.push(StandardYoungTableau { rows: rows.clone() });
        return;
    }
    for i in 0..rows.len() {
        let len = rows[i].len();
        let fits_row = len < shape.part(i);
        let fits_column = i == 0 || rows[i - 1].len() > len;
        if fits_row && fits_column {
            rows[i].push(value);
            place(shape, value + 1, rows, out);
            rows[i].pop();
        }
    }
}

/// A tableau with unordered rows, stored as the row index of each value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tabloid {
    shape: Partition,
    row_of: Vec<usize>,
}

impl Tabloid {
    /// Builds a tabloid from the value sets of its rows.
    pub fn new(shape: Partition, rows: &[Vec<usize>]) -> Result<Self> {
        let n = shape.weight();
        if rows.len() != shape.len() || rows.iter().zip(shape.parts()).any(|(r, &len)| r.len() != len) {
            return Err(Error::InvalidTableau(format!("row sizes of {rows:?} do not match {shape}")));
        }
        let mut row_of = vec![usize::MAX; n + 1];
        for (i, row) in rows.iter().enumerate() {
            for &v in row {
                if v == 0 || v > n || row_of[v] != usize::MAX {
                    return Err(Error::InvalidTableau(format!("rows {rows:?} do not partition 1..={n}")));
                }
                row_of[v] = i;
            }
        }
        Ok(Tabloid { shape, row_of })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Row index (0-based) holding `value`.
    pub fn row(&self, value: usize) -> usize {
        self.row_of[value]
    }
}
