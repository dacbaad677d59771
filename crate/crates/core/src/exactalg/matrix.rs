use super::{fmt_rat, parse_rat, Rational};
use crate::error::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::io::{BufRead, Write};

/// Row-major sparse matrix with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    /// Duplicate positions are summed; zeros are dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::Dimension(format!("entry ({r},{c}) outside {rows}x{cols}")));
            }
            *acc[r].entry(c).or_insert_with(Rational::zero) += v;
        }
        let data = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(SparseMatrix { rows, cols, data })
    }

    /// Assembles from per-column entry lists; column `c` owns `columns[c]`.
    /// The result does not depend on the order of entries inside a column.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, Rational)>>) -> Result<Self> {
        let cols = columns.len();
        let it = columns
            .into_iter()
            .enumerate()
            .flat_map(|(c, col)| col.into_iter().map(move |(r, v)| (r, c, v)));
        Self::from_triplets(rows, cols, it)
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged dense matrix".into()));
        }
        let it = rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (i, j, v.clone())));
        Self::from_triplets(rows.len(), cols, it)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.data[i]
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r]
            .binary_search_by_key(&c, |(k, _)| *k)
            .map(|k| self.data[r][k].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Entries in (row, col) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok(self
            .data
            .iter()
            .map(|r| r.iter().fold(Rational::zero(), |acc, (j, x)| acc + x * &v[*j]))
            .collect())
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (i, j, v) in self.entries() {
            data[j].push((i, v.clone()));
        }
        SparseMatrix { rows: self.cols, cols: self.rows, data }
    }

    /// Keeps the listed columns, renumbered in the given order.
    pub fn select_columns(&self, keep: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &c) in keep.iter().enumerate() {
            pos[c] = k;
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut row: Vec<_> = r
                    .iter()
                    .filter(|(j, _)| pos[*j] != usize::MAX)
                    .map(|(j, v)| (pos[*j], v.clone()))
                    .collect();
                row.sort_by_key(|(j, _)| *j);
                row
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: keep.len(), data }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension("vstack with different column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(SparseMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Writes the dump format: header `rows cols nnz`, then `row col num/den`.
    pub fn write_dump<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{} {} {}", self.rows, self.cols, self.nnz())?;
        for (i, j, v) in self.entries() {
            writeln!(w, "{} {} {}", i, j, fmt_rat(v))?;
        }
        Ok(())
    }

    pub fn read_dump<R: BufRead>(r: R) -> Result<Self> {
        let mut lines = r.lines();
        let header = lines.next().ok_or_else(|| Error::Invalid("empty dump".into()))??;
        let h: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Invalid(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        if h.len() != 3 {
            return Err(Error::Invalid(format!("bad header {header:?}")));
        }
        let mut entries = Vec::with_capacity(h[2]);
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let t: Vec<&str> = line.split_whitespace().collect();
            if t.len() != 3 {
                return Err(Error::Invalid(format!("bad entry {line:?}")));
            }
            let i = t[0].parse().map_err(|_| Error::Invalid(format!("bad row in {line:?}")))?;
            let j = t[1].parse().map_err(|_| Error::Invalid(format!("bad col in {line:?}")))?;
            entries.push((i, j, parse_rat(t[2])?));
        }
        if entries.len() != h[2] {
            return Err(Error::Invalid(format!("expected {} entries, found {}", h[2], entries.len())));
        }
        Self::from_triplets(h[0], h[1], entries)
    }
}
