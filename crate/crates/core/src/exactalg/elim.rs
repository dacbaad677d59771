use super::{Rational, SparseMatrix};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

type IntRow = Vec<(usize, BigInt)>;

/// Clears denominators of one row by the lcm; kernel and rank are unchanged.
fn integer_row(row: &[(usize, Rational)]) -> IntRow {
    let l = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    row.iter().map(|(j, v)| (*j, v.numer() * (&l / v.denom()))).collect()
}

/// `(p*x - a*y) / prev`, exact by the Bareiss determinant identity.
fn combine(x: &IntRow, p: &BigInt, y: &IntRow, a: &BigInt, prev: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(x.len().max(y.len()));
    let (mut i, mut k) = (0, 0);
    while i < x.len() || k < y.len() {
        let (col, val) = match (x.get(i), y.get(k)) {
            (Some((cx, vx)), Some((cy, _))) if cx < cy => {
                i += 1;
                (*cx, p * vx)
            }
            (Some((cx, _)), Some((cy, vy))) if cy < cx => {
                k += 1;
                (*cy, -(a * vy))
            }
            (Some((cx, vx)), Some((_, vy))) => {
                i += 1;
                k += 1;
                (*cx, p * vx - a * vy)
            }
            (Some((cx, vx)), None) => {
                i += 1;
                (*cx, p * vx)
            }
            (None, Some((cy, vy))) => {
                k += 1;
                (*cy, -(a * vy))
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            debug_assert!((&val % prev).is_zero());
            out.push((col, val / prev));
        }
    }
    out
}

fn lookup(row: &IntRow, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|k| &row[k].1)
}

/// Forward fraction-free elimination. Returns pivot rows with their pivot columns,
/// in pivot order.
fn eliminate(m: &SparseMatrix) -> Vec<(usize, IntRow)> {
    let mut active: Vec<(usize, IntRow)> = (0..m.rows())
        .map(|i| (i, integer_row(m.row(i))))
        .filter(|(_, r)| !r.is_empty())
        .collect();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut counts = vec![0usize; m.cols()];
    while !active.is_empty() {
        counts.iter_mut().for_each(|c| *c = 0);
        for (_, r) in &active {
            for (c, _) in r {
                counts[*c] += 1;
            }
        }
        // sparsest column first, ties by column index, then shortest row, ties by row index
        let col = (0..m.cols())
            .filter(|&c| counts[c] > 0)
            .min_by_key(|&c| (counts[c], c))
            .expect("active rows are nonempty");
        let pk = active
            .iter()
            .enumerate()
            .filter(|(_, (_, r))| lookup(r, col).is_some())
            .min_by_key(|(_, (i, r))| (r.len(), *i))
            .map(|(k, _)| k)
            .unwrap();
        let (_, prow) = active.swap_remove(pk);
        let p = lookup(&prow, col).unwrap().clone();
        let mut next = Vec::with_capacity(active.len());
        for (i, r) in active.into_iter() {
            let a = lookup(&r, col).cloned().unwrap_or_else(BigInt::zero);
            let nr = combine(&r, &p, &prow, &a, &prev);
            if !nr.is_empty() {
                next.push((i, nr));
            }
        }
        next.sort_by_key(|(i, _)| *i);
        active = next;
        prev = p;
        pivots.push((col, prow));
    }
    pivots
}

/// Rank and a kernel basis. Each kernel vector has a 1 in its own free column
/// and 0 in the other free columns, so the basis is reproducible.
pub fn rank_and_kernel(m: &SparseMatrix) -> (usize, Vec<Vec<Rational>>) {
    let pivots = eliminate(m);
    let mut is_pivot = vec![false; m.cols()];
    for (c, _) in &pivots {
        is_pivot[*c] = true;
    }
    let mut kernel = Vec::new();
    for f in (0..m.cols()).filter(|&c| !is_pivot[c]) {
        let mut x = vec![Rational::zero(); m.cols()];
        x[f] = Rational::one();
        for (pc, row) in pivots.iter().rev() {
            let mut s = Rational::zero();
            let mut pv = None;
            for (c, v) in row {
                if c == pc {
                    pv = Some(v);
                } else if !x[*c].is_zero() {
                    s += &x[*c] * Rational::from_integer(v.clone());
                }
            }
            x[*pc] = -s / Rational::from_integer(pv.unwrap().clone());
        }
        kernel.push(x);
    }
    (pivots.len(), kernel)
}

pub fn rank(m: &SparseMatrix) -> usize {
    eliminate(m).len()
}

/// True iff `v` is a rational combination of `basis`.
pub fn in_span(v: &[Rational], basis: &[Vec<Rational>]) -> Result<bool> {
    if let Some(b) = basis.iter().find(|b| b.len() != v.len()) {
        return Err(Error::Dimension(format!("vector length {} vs basis length {}", v.len(), b.len())));
    }
    if v.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    let base = if basis.is_empty() {
        SparseMatrix::zeros(0, v.len())
    } else {
        SparseMatrix::from_dense(basis)?
    };
    let with = base.vstack(&SparseMatrix::from_dense(&[v.to_vec()])?)?;
    Ok(rank(&base) == rank(&with))
}

/// Textbook Gauss-Jordan over the rationals; a slow reference for tests.
pub fn rank_naive(m: &SparseMatrix) -> usize {
    let mut a: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        let pv = a[rank][c].clone();
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let f = &a[i][c] / &pv;
                for j in c..m.cols() {
                    let t = &f * &a[rank][j];
                    a[i][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

