use crate::error::{Error, Result};
use crate::exactalg::{fmt_rat, Rational};
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::hash::Hash;

pub type Label = u32;

/// Per-factor label sets A_1, …, A_n of a generic algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelUniverse {
    pub d: Vec<usize>,
    pub sets: Vec<BTreeSet<Label>>,
}

impl LabelUniverse {
    pub fn new(d: Vec<usize>, sets: Vec<BTreeSet<Label>>) -> Result<Self> {
        if d.len() != sets.len() || d.contains(&0) {
            return Err(Error::Invalid("universe needs one nonempty format entry per label set".into()));
        }
        let r = sets[0].len() / d[0];
        if sets.iter().zip(&d).any(|(s, &dj)| s.len() != r * dj) {
            return Err(Error::Invalid("label set sizes must be r·d_j".into()));
        }
        Ok(LabelUniverse { d, sets })
    }

    /// Labels 1..=r·d_j in every factor.
    pub fn standard(d: &[usize], r: usize) -> Self {
        let sets = d.iter().map(|&dj| (1..=(r * dj) as Label).collect()).collect();
        LabelUniverse { d: d.to_vec(), sets }
    }

    pub fn r(&self) -> usize {
        self.sets[0].len() / self.d[0]
    }
}

/// One row of a block: the label sets α_1, …, α_n, each sorted.
pub type BlockRow = Vec<Vec<Label>>;

/// The monomial z_α of the generic algebra, as a multiset of rows kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block {
    rows: Vec<BlockRow>,
}

impl Block {
    pub fn new(mut rows: Vec<BlockRow>) -> Self {
        for row in rows.iter_mut() {
            for s in row.iter_mut() {
                s.sort_unstable();
            }
        }
        rows.sort();
        Block { rows }
    }

    /// The empty block, unit of the algebra.
    pub fn unit() -> Self {
        Block { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[BlockRow] {
        &self.rows
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn canonical(&self) -> Self {
        Block::new(self.rows.clone())
    }

    /// Checks row widths against `d` and per-factor disjointness.
    pub fn validate(&self, d: &[usize]) -> Result<()> {
        let mut seen: Vec<BTreeSet<Label>> = vec![BTreeSet::new(); d.len()];
        for row in &self.rows {
            if row.len() != d.len() {
                return Err(Error::Invalid(format!("row {row:?} has {} factors, expected {}", row.len(), d.len())));
            }
            for (j, set) in row.iter().enumerate() {
                if set.len() != d[j] {
                    return Err(Error::Invalid(format!("cell {set:?} in factor {} must have {} labels", j + 1, d[j])));
                }
                for &l in set {
                    if !seen[j].insert(l) {
                        return Err(Error::Invalid(format!("label {l} repeated in factor {}", j + 1)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn labels(&self, n: usize) -> Vec<BTreeSet<Label>> {
        let mut out = vec![BTreeSet::new(); n];
        for row in &self.rows {
            for (j, set) in row.iter().enumerate() {
                out[j].extend(set.iter().copied());
            }
        }
        out
    }

    /// Applies `f(factor, label)` to every label.
    pub fn relabel(&self, f: impl Fn(usize, Label) -> Label) -> Self {
        Block::new(
            self.rows
                .iter()
                .map(|row| row.iter().enumerate().map(|(j, s)| s.iter().map(|&l| f(j, l)).collect()).collect())
                .collect(),
        )
    }

    pub fn times(&self, other: &Block) -> Block {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Block::new(rows)
    }
}

/// z_β ⊗ z_γ in the target algebra: top row β, bottom row γ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TargetBlock {
    pub top: Vec<Vec<Label>>,
    pub bottom: Vec<Vec<Label>>,
}

impl TargetBlock {
    pub fn new(mut top: Vec<Vec<Label>>, mut bottom: Vec<Vec<Label>>) -> Self {
        top.iter_mut().for_each(|s| s.sort_unstable());
        bottom.iter_mut().for_each(|s| s.sort_unstable());
        TargetBlock { top, bottom }
    }

    pub fn grade(&self) -> Vec<usize> {
        self.bottom.iter().map(Vec::len).collect()
    }

    pub fn times(&self, other: &TargetBlock) -> TargetBlock {
        let cat = |a: &[Vec<Label>], b: &[Vec<Label>]| -> Vec<Vec<Label>> {
            a.iter().zip(b).map(|(x, y)| x.iter().chain(y).copied().collect()).collect()
        };
        TargetBlock::new(cat(&self.top, &other.top), cat(&self.bottom, &other.bottom))
    }

    pub fn relabel(&self, f: impl Fn(usize, Label) -> Label) -> Self {
        let m = |v: &[Vec<Label>]| v.iter().enumerate().map(|(j, s)| s.iter().map(|&l| f(j, l)).collect()).collect();
        TargetBlock::new(m(&self.top), m(&self.bottom))
    }
}

/// A sparse rational combination of canonical keys with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for FormalSum<K> {
    fn default() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> FormalSum<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K) -> Self {
        let mut s = Self::zero();
        s.add_term(k, Rational::one());
        s
    }

    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FormalSum { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, k: &K) -> Rational {
        self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> FormalSum<L> {
        let mut out = FormalSum::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// The scalar s with self = s·other, if any (both nonzero).
    pub fn ratio_to(&self, other: &Self) -> Option<Rational> {
        let (k, c) = other.terms.iter().next()?;
        let s = self.get(k) / c;
        (other.scaled(&s) == *self && !s.is_zero()).then_some(s)
    }

    pub fn from_counts<I: IntoIterator<Item = (K, i64)>>(it: I) -> Self {
        let mut s = Self::zero();
        for (k, c) in it {
            s.add_term(k, Rational::from_integer(c.into()));
        }
        s
    }
}

impl<K: Ord + Serialize> Serialize for FormalSum<K> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a, K> {
            key: &'a K,
            coeff: String,
        }
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            seq.serialize_element(&Term { key: k, coeff: fmt_rat(c) })?;
        }
        seq.end()
    }
}

fn check_disjoint(x: &FormalSum<Block>, y: &FormalSum<Block>) -> Result<()> {
    let collect = |s: &FormalSum<Block>| {
        let mut out: Vec<BTreeSet<Label>> = Vec::new();
        for (b, _) in s.iter() {
            for row in b.rows() {
                if out.len() < row.len() {
                    out.resize(row.len(), BTreeSet::new());
                }
                for (j, set) in row.iter().enumerate() {
                    out[j].extend(set.iter().copied());
                }
            }
        }
        out
    };
    let (a, b) = (collect(x), collect(y));
    for (j, (sa, sb)) in a.iter().zip(&b).enumerate() {
        if let Some(l) = sa.intersection(sb).next() {
            return Err(Error::Invalid(format!("label {l} of factor {} occurs in both operands", j + 1)));
        }
    }
    Ok(())
}

/// Product in the generic algebra: concatenate rows, then canonicalize.
pub fn multiply(x: &FormalSum<Block>, y: &FormalSum<Block>) -> Result<FormalSum<Block>> {
    check_disjoint(x, y)?;
    let mut out = FormalSum::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_term(a.times(b), ca * cb);
        }
    }
    Ok(out)
}

pub fn multiply_targets(x: &FormalSum<TargetBlock>, y: &FormalSum<TargetBlock>) -> FormalSum<TargetBlock> {
    let mut out = FormalSum::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_term(a.times(b), ca * cb);
        }
    }
    out
}

/// π_a on one block, as integer counts: every row i picks a factor c(i) with
/// |c⁻¹(j)| = a_j and moves one label of α^i_{c(i)} to the bottom row.
pub fn pi_block_counts(block: &Block, a: &[usize]) -> HashMap<TargetBlock, i64> {
    let mut out: HashMap<TargetBlock, i64> = HashMap::new();
    let rows = block.rows();
    let n = a.len();
    if a.iter().sum::<usize>() != rows.len() {
        return out;
    }
    let all = block.labels(n);
    let mut left = a.to_vec();
    let mut moved: Vec<Vec<Label>> = vec![Vec::new(); n];
    fn go(
        i: usize,
        rows: &[BlockRow],
        left: &mut Vec<usize>,
        moved: &mut Vec<Vec<Label>>,
        all: &[BTreeSet<Label>],
        out: &mut HashMap<TargetBlock, i64>,
    ) {
        if i == rows.len() {
            let top = all
                .iter()
                .zip(moved.iter())
                .map(|(s, m)| s.iter().copied().filter(|l| !m.contains(l)).collect())
                .collect();
            *out.entry(TargetBlock::new(top, moved.clone())).or_default() += 1;
            return;
        }
        for j in 0..left.len() {
            if left[j] == 0 {
                continue;
            }
            left[j] -= 1;
            for &l in &rows[i][j] {
                moved[j].push(l);
                go(i + 1, rows, left, moved, all, out);
                moved[j].pop();
            }
            left[j] += 1;
        }
    }
    go(0, rows, &mut left, &mut moved, &all, &mut out);
    out
}

/// The graded piece π_a of the generic map.
pub fn pi_generic(x: &FormalSum<Block>, a: &[usize]) -> Result<FormalSum<TargetBlock>> {
    let mut out = FormalSum::zero();
    for (b, c) in x.iter() {
        if b.r() != a.iter().sum::<usize>() {
            return Err(Error::Invalid(format!("grade {a:?} does not sum to r = {}", b.r())));
        }
        if b.rows().first().is_some_and(|row| row.len() != a.len()) {
            return Err(Error::Dimension(format!("grade {a:?} has the wrong number of factors")));
        }
        for (t, k) in pi_block_counts(b, a) {
            out.add_term(t, c * Rational::from_integer(k.into()));
        }
    }
    Ok(out)
}

/// All compositions of `r` into `n` nonnegative parts, lexicographic.
pub fn compositions(r: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if r == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in 0..=r {
        for mut rest in compositions(r - k, n - 1) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}
