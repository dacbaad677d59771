use super::block::Label;
use crate::error::{Error, Result};
use crate::symfun::{NPartition, Partition};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A Young^d_r filling: for each factor, the rows of a Young diagram filled
/// with values 1..=r, each value occurring d_j times in factor j.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TabloidFilling {
    pub d: Vec<usize>,
    pub r: usize,
    pub rows: Vec<Vec<Vec<u8>>>,
}

fn rows_from_columns(cols: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let h = cols.iter().map(Vec::len).max().unwrap_or(0);
    (0..h).map(|x| cols.iter().filter(|c| c.len() > x).map(|c| c[x]).collect()).collect()
}

impl TabloidFilling {
    pub fn new(d: Vec<usize>, r: usize, mut rows: Vec<Vec<Vec<u8>>>) -> Result<Self> {
        if rows.len() != d.len() {
            return Err(Error::Dimension(format!("{} factors filled for format {d:?}", rows.len())));
        }
        for f in rows.iter_mut() {
            f.retain(|row| !row.is_empty());
        }
        for (j, f) in rows.iter().enumerate() {
            if f.windows(2).any(|w| w[0].len() < w[1].len()) {
                return Err(Error::Invalid(format!("factor {} rows are not a Young diagram", j + 1)));
            }
            let mut counts = vec![0usize; r + 1];
            for &v in f.iter().flatten() {
                if v == 0 || v as usize > r {
                    return Err(Error::Invalid(format!("value {v} outside 1..={r}")));
                }
                counts[v as usize] += 1;
            }
            if let Some(v) = (1..=r).find(|&v| counts[v] != d[j]) {
                return Err(Error::Invalid(format!(
                    "value {v} occurs {} times in factor {}, expected {}",
                    counts[v],
                    j + 1,
                    d[j]
                )));
            }
        }
        Ok(TabloidFilling { d, r, rows })
    }

    /// Builds from the columns of size at least two, listed per factor; the
    /// remaining occurrences become size-one columns in increasing order.
    pub fn from_big_columns(d: &[usize], r: usize, big: Vec<Vec<Vec<u8>>>) -> Result<Self> {
        if big.len() != d.len() {
            return Err(Error::Dimension("one column list per factor".into()));
        }
        let mut rows = Vec::new();
        for (j, mut cols) in big.into_iter().enumerate() {
            let mut counts = vec![0usize; r + 1];
            for &v in cols.iter().flatten() {
                if v == 0 || v as usize > r {
                    return Err(Error::Invalid(format!("value {v} outside 1..={r}")));
                }
                counts[v as usize] += 1;
            }
            cols.sort_by_key(|c| std::cmp::Reverse(c.len()));
            for v in 1..=r {
                if counts[v] > d[j] {
                    return Err(Error::Invalid(format!("value {v} occurs more than {} times in factor {}", d[j], j + 1)));
                }
                cols.extend(std::iter::repeat(vec![v as u8]).take(d[j] - counts[v]));
            }
            rows.push(rows_from_columns(&cols));
        }
        TabloidFilling::new(d.to_vec(), r, rows)
    }

    /// Parses `"135678/24 x 513512347788/6246"`; factors are separated by `x`
    /// or `⊗`, rows by `/`, and each value is one digit. Missing occurrences
    /// are completed by size-one columns.
    pub fn parse(d: &[usize], r: usize, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(['x', '⊗']).map(str::trim).collect();
        if parts.len() != d.len() {
            return Err(Error::Dimension(format!("{} factors in {text:?} for format {d:?}", parts.len())));
        }
        let mut big = Vec::new();
        for p in parts {
            let rows: Vec<Vec<u8>> = p
                .split('/')
                .map(|row| {
                    row.trim()
                        .chars()
                        .map(|c| c.to_digit(10).map(|v| v as u8).ok_or_else(|| Error::Invalid(format!("bad digit {c:?}"))))
                        .collect::<Result<Vec<u8>>>()
                })
                .collect::<Result<_>>()?;
            let rows: Vec<Vec<u8>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
            let w = rows.first().map_or(0, Vec::len);
            let cols: Vec<Vec<u8>> =
                (0..w).map(|c| rows.iter().filter(|row| row.len() > c).map(|row| row[c]).collect()).collect();
            big.push(cols);
        }
        Self::from_big_columns(d, r, big)
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn shape(&self) -> NPartition {
        NPartition::new(
            self.rows.iter().map(|f| Partition::new(f.iter().map(Vec::len).collect()).unwrap()).collect(),
        )
    }

    pub fn columns(&self, j: usize) -> Vec<Vec<u8>> {
        let f = &self.rows[j];
        let w = f.first().map_or(0, Vec::len);
        (0..w).map(|c| f.iter().filter(|row| row.len() > c).map(|row| row[c]).collect()).collect()
    }

    /// Rebuilds from full column lists (sizes weakly decreasing).
    pub fn with_columns(&self, cols: Vec<Vec<Vec<u8>>>) -> Result<Self> {
        TabloidFilling::new(self.d.clone(), self.r, cols.iter().map(|c| rows_from_columns(c)).collect())
    }

    /// Applies σ to values; `sigma[v-1]` is the image of v.
    pub fn relabel(&self, sigma: &[u8]) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|f| f.iter().map(|row| row.iter().map(|&v| sigma[v as usize - 1]).collect()).collect())
            .collect();
        TabloidFilling { d: self.d.clone(), r: self.r, rows }
    }

    /// Representative up to relabeling by S_r and permutations of equal-size
    /// columns. With `oriented = false` entries inside each column are also
    /// sorted, i.e. the sign is forgotten.
    pub fn canonical_key(&self, oriented: bool) -> Vec<Vec<Vec<u8>>> {
        let cols: Vec<Vec<Vec<u8>>> = (0..self.n()).map(|j| self.columns(j)).collect();
        let mut best: Option<Vec<Vec<Vec<u8>>>> = None;
        for perm in (1..=self.r as u8).permutations(self.r) {
            let key: Vec<Vec<Vec<u8>>> = cols
                .iter()
                .map(|fc| {
                    let mut m: Vec<Vec<u8>> = fc
                        .iter()
                        .map(|c| {
                            let mut c: Vec<u8> = c.iter().map(|&v| perm[v as usize - 1]).collect();
                            if !oriented {
                                c.sort_unstable();
                            }
                            c
                        })
                        .collect();
                    m.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
                    m
                })
                .collect();
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap_or_default()
    }

    /// A uniformly shuffled filling of the given shape.
    pub fn random<R: Rng>(d: &[usize], r: usize, shape: &NPartition, rng: &mut R) -> Result<Self> {
        shape.check_degree(r, d)?;
        let mut rows = Vec::new();
        for (j, p) in shape.components().iter().enumerate() {
            let mut vals: Vec<u8> = (1..=r as u8).flat_map(|v| std::iter::repeat(v).take(d[j])).collect();
            vals.shuffle(rng);
            let mut it = vals.into_iter();
            rows.push(p.parts().iter().map(|&len| it.by_ref().take(len).collect()).collect());
        }
        TabloidFilling::new(d.to_vec(), r, rows)
    }
}

impl fmt::Display for TabloidFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.r > 9 { "," } else { "" };
        let factors: Vec<String> = self
            .rows
            .iter()
            .map(|fr| fr.iter().map(|row| row.iter().map(|v| v.to_string()).join(sep)).join("/"))
            .collect();
        write!(f, "{}", factors.join(" ⊗ "))
    }
}

/// A {1,2}-filling of λ^j per factor: cells with 2 go to the bottom row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetFilling {
    pub a: Vec<usize>,
    pub rows: Vec<Vec<Vec<u8>>>,
}

impl TargetFilling {
    pub fn new(a: Vec<usize>, rows: Vec<Vec<Vec<u8>>>) -> Result<Self> {
        for (j, f) in rows.iter().enumerate() {
            let twos = f.iter().flatten().filter(|&&v| v == 2).count();
            if f.iter().flatten().any(|&v| v != 1 && v != 2) || twos != a[j] {
                return Err(Error::Invalid(format!("factor {} needs exactly {} twos among 1s and 2s", j + 1, a[j])));
            }
        }
        Ok(TargetFilling { a, rows })
    }

    /// Ones then twos, left to right and top to bottom, in the given shape.
    pub fn ones_then_twos(shape: &NPartition, a: &[usize]) -> Result<Self> {
        let rows = shape
            .components()
            .iter()
            .zip(a)
            .map(|(p, &aj)| {
                let ones = p.size() - aj;
                let mut k = 0;
                p.parts()
                    .iter()
                    .map(|&len| {
                        (0..len)
                            .map(|_| {
                                k += 1;
                                if k <= ones {
                                    1
                                } else {
                                    2
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        TargetFilling::new(a.to_vec(), rows)
    }

    pub fn shape(&self) -> NPartition {
        NPartition::new(
            self.rows.iter().map(|f| Partition::new(f.iter().map(Vec::len).collect()).unwrap()).collect(),
        )
    }
}

/// An n-tableau: a bijection from the cells of each λ^j to labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub cells: Vec<Vec<Vec<Label>>>,
}

impl Tableau {
    /// Cells numbered row by row: T(x, y) = λ_1 + … + λ_{x-1} + y.
    pub fn canonical(shape: &NPartition) -> Self {
        let cells = shape
            .components()
            .iter()
            .map(|p| {
                let mut next = 0;
                p.parts()
                    .iter()
                    .map(|&len| {
                        (0..len)
                            .map(|_| {
                                next += 1;
                                next as Label
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Tableau { cells }
    }

    pub fn shape(&self) -> NPartition {
        NPartition::new(
            self.cells.iter().map(|f| Partition::new(f.iter().map(Vec::len).collect()).unwrap()).collect(),
        )
    }

    /// Tableau row (0-based) of each label, per factor.
    pub fn row_of(&self) -> Vec<std::collections::HashMap<Label, u8>> {
        self.cells
            .iter()
            .map(|f| {
                f.iter()
                    .enumerate()
                    .flat_map(|(x, row)| row.iter().map(move |&l| (l, x as u8)))
                    .collect()
            })
            .collect()
    }
}
