use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A weakly decreasing list of positive parts. The derived order is
/// lexicographic on parts, so `(2,2) < (3,1) < (4)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i`, 0-indexed, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.part(0);
        Partition((0..n).map(|k| self.0.iter().filter(|&&p| p > k).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Partitions of `n` with at most `max_rows` parts, in lexicographic order.
pub fn partitions(n: usize, max_rows: usize) -> Vec<Partition> {
    fn go(n: usize, max_part: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            go(n - p, p, rows - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_rows, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Dimension of the Schur module S_λ(K^m), by the Weyl formula.
pub fn dim_gl(lambda: &Partition, m: usize) -> u128 {
    if lambda.len() > m {
        return 0;
    }
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..m {
        for j in i + 1..m {
            num *= BigUint::from(lambda.part(i) - lambda.part(j) + j - i);
            den *= BigUint::from(j - i);
        }
    }
    (num / den).to_u128().expect("dimension fits in u128")
}

/// An n-tuple of partitions; component j has size r·d_j.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NPartition(Vec<Partition>);

impl NPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        NPartition(components)
    }

    /// Convenience for literals: `NPartition::from_parts(&[&[3,1], &[4]])`.
    pub fn from_parts(parts: &[&[usize]]) -> Result<Self> {
        Ok(NPartition(parts.iter().map(|p| Partition::new(p.to_vec())).collect::<Result<_>>()?))
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Total number of second-row cells.
    pub fn e(&self) -> usize {
        self.0.iter().map(|p| p.part(1)).sum()
    }

    /// max_j ceil(λ^j_2 / d_j).
    pub fn f(&self, d: &[usize]) -> usize {
        self.0
            .iter()
            .zip(d)
            .map(|(p, &dj)| p.part(1).div_ceil(dj))
            .max()
            .unwrap_or(0)
    }

    pub fn max_rows(&self) -> usize {
        self.0.iter().map(Partition::len).max().unwrap_or(0)
    }

    /// Checks |λ^j| = r·d_j for every j.
    pub fn check_degree(&self, r: usize, d: &[usize]) -> Result<()> {
        if self.0.len() != d.len() {
            return Err(Error::Dimension(format!("{} components for {} factors", self.0.len(), d.len())));
        }
        for (j, (p, &dj)) in self.0.iter().zip(d).enumerate() {
            if p.size() != r * dj {
                return Err(Error::Dimension(format!(
                    "component {} of {} has size {}, expected {}",
                    j + 1,
                    self,
                    p.size(),
                    r * dj
                )));
            }
        }
        Ok(())
    }

    /// All n-partitions of r·d with at most `max_rows` rows per component.
    pub fn all(r: usize, d: &[usize], max_rows: usize) -> Vec<NPartition> {
        let lists: Vec<Vec<Partition>> = d.iter().map(|&dj| partitions(r * dj, max_rows)).collect();
        let mut out = vec![Vec::new()];
        for list in &lists {
            out = out
                .into_iter()
                .flat_map(|pre: Vec<Partition>| {
                    list.iter().map(move |p| {
                        let mut v = pre.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(NPartition).collect()
    }
}

impl fmt::Display for NPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}
