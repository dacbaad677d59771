//! Young symmetrizers on tabloids, in a compressed form.
//!
//! The covariant t_F = Σ_{σ∈R} Σ_{κ∈C} sgn(κ)·σκ·z is invariant under the row
//! group R, so it is constant on R-orbits of labeled blocks. An orbit is
//! determined by replacing each label with the tableau row it sits in; that
//! replacement is a `Pattern`. A covariant is stored as the coefficient shared
//! by all labeled blocks of each orbit. `Covariant::expand` recovers the
//! labeled sum for small cases.

use super::block::{pi_block_counts, Block, FormalSum, Label, TargetBlock};
use super::tabloid::{TabloidFilling, Tableau, TargetFilling};
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::symfun::{factorial, NPartition};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use std::collections::{BTreeSet, HashMap};

/// Block rows with labels replaced by 0-based tableau row indices; rows sorted.
pub type Pattern = Vec<Vec<Vec<u8>>>;
/// Per factor: (tableau rows of the top labels, tableau rows of the bottom labels).
pub type TargetPattern = Vec<(Vec<u8>, Vec<u8>)>;

/// Largest column group expanded by `symmetrize`.
pub const COLUMN_GROUP_CAP: u128 = 1 << 22;
/// Largest |R|·|C| (or lift count) expanded by the labeled reference routines.
pub const LABELED_CAP: u128 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covariant {
    pub d: Vec<usize>,
    pub r: usize,
    pub shape: NPartition,
    pub terms: FormalSum<Pattern>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetCovariant {
    pub a: Vec<usize>,
    pub shape: NPartition,
    pub terms: FormalSum<TargetPattern>,
}

impl Covariant {
    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn neg(&self) -> Self {
        Covariant { terms: self.terms.scaled(&-Rational::one()), ..self.clone() }
    }

    pub fn plus(&self, other: &Covariant) -> Result<Covariant> {
        if self.shape != other.shape || self.d != other.d {
            return Err(Error::Invalid("adding covariants of different shapes".into()));
        }
        let mut terms = self.terms.clone();
        terms.add(&other.terms);
        Ok(Covariant { terms, ..self.clone() })
    }

    /// The labeled formal sum for tableau `t`; refuses large orbits.
    pub fn expand(&self, t: &Tableau) -> Result<FormalSum<Block>> {
        let mut out = FormalSum::zero();
        for (p, c) in self.terms.iter() {
            for b in lifts(p, t, LABELED_CAP)? {
                out.add_term(b, c.clone());
            }
        }
        Ok(out)
    }
}

impl TargetCovariant {
    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// The scalar s with self = s·other.
    pub fn ratio_to(&self, other: &TargetCovariant) -> Option<Rational> {
        self.terms.ratio_to(&other.terms)
    }
}

fn fact(k: usize) -> BigInt {
    factorial(k)
}

/// Order of the stabilizer in R of any labeled block with pattern `p`.
fn stab_pattern(p: &Pattern) -> BigInt {
    let mut s = BigInt::one();
    for row in p {
        for cell in row {
            for g in cell.chunk_by(|x, y| x == y) {
                s *= fact(g.len());
            }
        }
    }
    for g in p.chunk_by(|x, y| x == y) {
        s *= fact(g.len());
    }
    s
}

fn stab_target(p: &TargetPattern) -> BigInt {
    let mut s = BigInt::one();
    for (top, bottom) in p {
        for side in [top, bottom] {
            for g in side.chunk_by(|x, y| x == y) {
                s *= fact(g.len());
            }
        }
    }
    s
}

/// For each column of each factor: the (row image, sign) of every permutation
/// of its cells.
type ColumnPerms = Vec<(usize, Vec<u8>, Vec<(Vec<u8>, i8)>)>;

fn column_perms(cols_per_factor: &[Vec<Vec<u8>>]) -> Result<ColumnPerms> {
    let mut out = Vec::new();
    let mut size: u128 = 1;
    for (j, cols) in cols_per_factor.iter().enumerate() {
        for col in cols {
            let s = col.len();
            let perms: Vec<(Vec<u8>, i8)> = (0..s as u8)
                .permutations(s)
                .map(|p| {
                    let inv = (0..s).flat_map(|a| (a + 1..s).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
                    (p, if inv % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            size = size.saturating_mul(perms.len() as u128);
            out.push((j, col.clone(), perms));
        }
    }
    if size > COLUMN_GROUP_CAP {
        return Err(Error::Cap(format!("column group of order {size} exceeds {COLUMN_GROUP_CAP}")));
    }
    Ok(out)
}

/// Walks the column group; `visit` gets, per column, the chosen row image of
/// each cell, plus the total sign.
fn for_each_column_element(cp: &ColumnPerms, mut visit: impl FnMut(&[&Vec<u8>], i8)) {
    let mut idx = vec![0usize; cp.len()];
    loop {
        let chosen: Vec<&Vec<u8>> = cp.iter().zip(&idx).map(|((_, _, ps), &i)| &ps[i].0).collect();
        let sign = cp.iter().zip(&idx).map(|((_, _, ps), &i)| ps[i].1).product::<i8>();
        visit(&chosen, sign);
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < cp[k].2.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
}

/// The covariant R·C·z_{T∘F⁻¹} of a tabloid (column antisymmetrizer applied
/// first, then the row symmetrizer), in compressed form.
pub fn symmetrize(f: &TabloidFilling) -> Result<Covariant> {
    let n = f.n();
    let cols: Vec<Vec<Vec<u8>>> = (0..n).map(|j| f.columns(j)).collect();
    let cp = column_perms(&cols)?;
    let mut acc: HashMap<Pattern, BigInt> = HashMap::new();
    for_each_column_element(&cp, |chosen, sign| {
        let mut rows: Vec<Vec<Vec<u8>>> = vec![vec![Vec::new(); n]; f.r];
        for ((j, col, _), img) in cp.iter().zip(chosen) {
            for (k, &v) in col.iter().enumerate() {
                rows[v as usize - 1][*j].push(img[k]);
            }
        }
        for row in rows.iter_mut() {
            row.iter_mut().for_each(|c| c.sort_unstable());
        }
        rows.sort();
        let s = stab_pattern(&rows);
        *acc.entry(rows).or_insert_with(BigInt::zero) += s * sign;
    });
    let terms = FormalSum::from_counts(std::iter::empty());
    let mut terms: FormalSum<Pattern> = terms;
    for (p, c) in acc {
        terms.add_term(p, Rational::from_integer(c));
    }
    Ok(Covariant { d: f.d.clone(), r: f.r, shape: f.shape(), terms })
}

/// One labeled block in the orbit of a pattern, taking labels of each tableau
/// row in order.
pub fn lift(p: &Pattern, t: &Tableau) -> Block {
    let n = t.cells.len();
    let mut next: Vec<Vec<usize>> = t.cells.iter().map(|f| vec![0; f.len()]).collect();
    let rows = p
        .iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row[j]
                        .iter()
                        .map(|&x| {
                            let x = x as usize;
                            let l = t.cells[j][x][next[j][x]];
                            next[j][x] += 1;
                            l
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Block::new(rows)
}

fn next_multiset_perm(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every labeled block whose pattern is `p`.
pub fn lifts(p: &Pattern, t: &Tableau, cap: u128) -> Result<BTreeSet<Block>> {
    let n = t.cells.len();
    // slot sequences per (factor, tableau row)
    let mut groups: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for j in 0..n {
        for x in 0..t.cells[j].len() {
            let slots: Vec<usize> =
                p.iter().enumerate().flat_map(|(i, row)| row[j].iter().filter(|&&y| y as usize == x).map(move |_| i)).collect();
            groups.push((j, x, slots));
        }
    }
    let mut arrangements: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut total: u128 = 1;
    for (_, _, slots) in &groups {
        let mut v = slots.clone();
        v.sort_unstable();
        let mut all = vec![v.clone()];
        while next_multiset_perm(&mut v) {
            all.push(v.clone());
            if all.len() as u128 > cap {
                return Err(Error::Cap("orbit too large to expand".into()));
            }
        }
        total = total.saturating_mul(all.len() as u128);
        arrangements.push(all);
    }
    if total > cap {
        return Err(Error::Cap(format!("orbit of size {total} too large to expand")));
    }
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; groups.len()];
    loop {
        let mut rows: Vec<Vec<Vec<Label>>> = vec![vec![Vec::new(); n]; p.len()];
        for (g, (j, x, _)) in groups.iter().enumerate() {
            for (k, &slot) in arrangements[g][idx[g]].iter().enumerate() {
                rows[slot][*j].push(t.cells[*j][*x][k]);
            }
        }
        out.insert(Block::new(rows));
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < arrangements[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    Ok(out)
}

/// π_a of the covariant of F, expressed on orbits of target blocks. Computed
/// by applying the generic π to one lift per orbit, using that π commutes
/// with the row group.
pub fn pi_on_tabloid(f: &TabloidFilling, a: &[usize]) -> Result<TargetCovariant> {
    if a.len() != f.n() || a.iter().sum::<usize>() != f.r {
        return Err(Error::Invalid(format!("grade {a:?} is not a composition of {} into {} parts", f.r, f.n())));
    }
    let cov = symmetrize(f)?;
    let t = Tableau::canonical(&cov.shape);
    let row_of = t.row_of();
    let mut acc: HashMap<TargetPattern, Rational> = HashMap::new();
    for (p, c) in cov.terms.iter() {
        let base = c / Rational::from_integer(stab_pattern(p));
        let counts = pi_block_counts(&lift(p, &t), a);
        for (tb, k) in counts {
            let tp = target_pattern(&tb, &row_of);
            let w = Rational::from_integer(stab_target(&tp) * k);
            *acc.entry(tp).or_insert_with(Rational::zero) += &base * w;
        }
    }
    let mut terms = FormalSum::zero();
    for (k, v) in acc {
        terms.add_term(k, v);
    }
    Ok(TargetCovariant { a: a.to_vec(), shape: cov.shape, terms })
}

fn target_pattern(tb: &TargetBlock, row_of: &[HashMap<Label, u8>]) -> TargetPattern {
    tb.top
        .iter()
        .zip(&tb.bottom)
        .enumerate()
        .map(|(j, (top, bottom))| {
            let m = |s: &Vec<Label>| {
                let mut v: Vec<u8> = s.iter().map(|l| row_of[j][l]).collect();
                v.sort_unstable();
                v
            };
            (m(top), m(bottom))
        })
        .collect()
}

/// The covariant R·C·z_{β,γ} of a {1,2}-filled target tabloid.
pub fn target_covariant(tf: &TargetFilling) -> Result<TargetCovariant> {
    let n = tf.rows.len();
    let cols: Vec<Vec<Vec<u8>>> = tf
        .rows
        .iter()
        .map(|f| {
            let w = f.first().map_or(0, Vec::len);
            (0..w).map(|c| f.iter().filter(|row| row.len() > c).map(|row| row[c]).collect()).collect()
        })
        .collect();
    let cp = column_perms(&cols)?;
    let mut acc: HashMap<TargetPattern, BigInt> = HashMap::new();
    for_each_column_element(&cp, |chosen, sign| {
        let mut tp: TargetPattern = vec![(Vec::new(), Vec::new()); n];
        for ((j, col, _), img) in cp.iter().zip(chosen) {
            for (k, &v) in col.iter().enumerate() {
                if v == 1 {
                    tp[*j].0.push(img[k]);
                } else {
                    tp[*j].1.push(img[k]);
                }
            }
        }
        for (t, b) in tp.iter_mut() {
            t.sort_unstable();
            b.sort_unstable();
        }
        let s = stab_target(&tp);
        *acc.entry(tp).or_insert_with(BigInt::zero) += s * sign;
    });
    let mut terms = FormalSum::zero();
    for (k, v) in acc {
        terms.add_term(k, Rational::from_integer(v));
    }
    Ok(TargetCovariant { a: tf.a.clone(), shape: tf.shape(), terms })
}

/// Composition order of the Young symmetrizer in the labeled reference routine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetrizerOrder {
    /// Σ_σ Σ_κ sgn(κ) σ(κ(z)): columns act first.
    ColumnsFirst,
    /// Σ_κ Σ_σ sgn(κ) κ(σ(z)): rows act first.
    RowsFirst,
}

/// The block z_{T∘F⁻¹}: row i of factor j holds the labels of cells filled with i.
pub fn tabloid_block(f: &TabloidFilling, t: &Tableau) -> Block {
    let mut rows: Vec<Vec<Vec<Label>>> = vec![vec![Vec::new(); f.n()]; f.r];
    for j in 0..f.n() {
        for (x, row) in f.rows[j].iter().enumerate() {
            for (y, &v) in row.iter().enumerate() {
                rows[v as usize - 1][j].push(t.cells[j][x][y]);
            }
        }
    }
    Block::new(rows)
}

/// Direct expansion over both groups on labeled blocks. Only for small shapes.
pub fn symmetrize_labeled(f: &TabloidFilling, t: &Tableau, order: SymmetrizerOrder) -> Result<FormalSum<Block>> {
    let n = f.n();
    let z = tabloid_block(f, t);
    // permutations as per-factor label maps
    type Perm = Vec<HashMap<Label, Label>>;
    let mut rgroup: Vec<Perm> = vec![vec![HashMap::new(); n]];
    let mut cgroup: Vec<(Perm, i8)> = vec![(vec![HashMap::new(); n], 1)];
    for j in 0..n {
        let cells = &t.cells[j];
        for row in cells {
            let mut next = Vec::new();
            for base in &rgroup {
                for p in row.iter().permutations(row.len()) {
                    let mut m = base.clone();
                    for (a, b) in row.iter().zip(p) {
                        m[j].insert(*a, *b);
                    }
                    next.push(m);
                }
            }
            rgroup = next;
        }
        let w = cells.first().map_or(0, Vec::len);
        for c in 0..w {
            let col: Vec<Label> = cells.iter().filter(|r| r.len() > c).map(|r| r[c]).collect();
            let mut next = Vec::new();
            for (base, s) in &cgroup {
                for p in (0..col.len()).permutations(col.len()) {
                    let inv = (0..p.len()).flat_map(|a| (a + 1..p.len()).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
                    let mut m = base.clone();
                    for (k, &pk) in p.iter().enumerate() {
                        m[j].insert(col[k], col[pk]);
                    }
                    next.push((m, if inv % 2 == 0 { *s } else { -*s }));
                }
            }
            cgroup = next;
        }
        if (rgroup.len() as u128) * (cgroup.len() as u128) > LABELED_CAP {
            return Err(Error::Cap("group too large for the labeled expansion".into()));
        }
    }
    let apply = |b: &Block, m: &Perm| b.relabel(|j, l| *m[j].get(&l).unwrap_or(&l));
    let mut out: HashMap<Block, i64> = HashMap::new();
    for (k, s) in &cgroup {
        for sg in &rgroup {
            let b = match order {
                SymmetrizerOrder::ColumnsFirst => apply(&apply(&z, k), sg),
                SymmetrizerOrder::RowsFirst => apply(&apply(&z, sg), k),
            };
            *out.entry(b).or_default() += i64::from(*s);
        }
    }
    Ok(FormalSum::from_counts(out))
}

/// Straightening identities, instantiated on a filling.
#[derive(Clone, Debug)]
pub enum Relation {
    /// Swapping two cells of one column negates the covariant.
    ColumnSwap { filling: TabloidFilling, factor: usize, column: usize, i: usize, k: usize },
    /// A column with a repeated value gives zero.
    RepeatedEntry { filling: TabloidFilling },
    /// [xz/y] = [xy/z] + [zx/y], where (x,y) is the size-two column `c1` and z
    /// tops column `c2`. With `c2` of size one this is the truncated Plücker
    /// relation, with size two the full one.
    Shuffle { filling: TabloidFilling, factor: usize, c1: usize, c2: usize },
}

fn swap_cells(f: &TabloidFilling, j: usize, a: (usize, usize), b: (usize, usize)) -> TabloidFilling {
    let mut g = f.clone();
    let va = g.rows[j][a.0][a.1];
    g.rows[j][a.0][a.1] = g.rows[j][b.0][b.1];
    g.rows[j][b.0][b.1] = va;
    g
}

impl Relation {
    /// Left side and the signed right-side terms.
    pub fn sides(&self) -> Result<(TabloidFilling, Vec<(i8, TabloidFilling)>)> {
        match self {
            Relation::ColumnSwap { filling, factor, column, i, k } => {
                let h = filling.columns(*factor).get(*column).map_or(0, Vec::len);
                if *i >= h || *k >= h || i == k {
                    return Err(Error::Invalid("column swap needs two distinct cells of one column".into()));
                }
                let g = swap_cells(filling, *factor, (*i, *column), (*k, *column));
                Ok((filling.clone(), vec![(-1, g)]))
            }
            Relation::RepeatedEntry { filling } => {
                let rep = (0..filling.n()).any(|j| {
                    filling.columns(j).iter().any(|c| c.iter().collect::<BTreeSet<_>>().len() < c.len())
                });
                if !rep {
                    return Err(Error::Invalid("no column has a repeated value".into()));
                }
                Ok((filling.clone(), vec![]))
            }
            Relation::Shuffle { filling, factor, c1, c2 } => {
                let cols = filling.columns(*factor);
                if cols.get(*c1).map(Vec::len) != Some(2) || c1 == c2 || *c2 >= cols.len() || cols[*c2].len() > 2 {
                    return Err(Error::Invalid("shuffle needs a size-two column and a second column of size ≤ 2".into()));
                }
                let (p, q, s) = ((0, *c1), (1, *c1), (0, *c2));
                // [xz/y] = [xy/z] + [zx/y]
                let f1 = swap_cells(filling, *factor, q, s);
                // p ← z, s ← x, q stays y
                let mut f2 = filling.clone();
                f2.rows[*factor][p.0][p.1] = filling.rows[*factor][s.0][s.1];
                f2.rows[*factor][s.0][s.1] = filling.rows[*factor][p.0][p.1];
                Ok((filling.clone(), vec![(1, f1), (1, f2)]))
            }
        }
    }

    /// A random instance on a random filling of `shape`; `kind` is 0 for a
    /// column swap, 1 for the truncated and 2 for the full Plücker form, 3 for
    /// a column with a repeated value (needs some d_j ≥ 2).
    pub fn random<R: Rng>(kind: u8, d: &[usize], r: usize, shape: &NPartition, rng: &mut R) -> Result<Relation> {
        let f = TabloidFilling::random(d, r, shape, rng)?;
        if kind == 3 {
            return Self::random_repeat(f, rng);
        }
        let mut options = Vec::new();
        for j in 0..f.n() {
            let cols = f.columns(j);
            for (c1, col) in cols.iter().enumerate() {
                if col.len() < 2 {
                    continue;
                }
                match kind {
                    0 => options.push((j, c1, 0)),
                    _ => {
                        for (c2, other) in cols.iter().enumerate() {
                            let want = if kind == 1 { 1 } else { 2 };
                            if c2 != c1 && other.len() == want && col.len() == 2 {
                                options.push((j, c1, c2));
                            }
                        }
                    }
                }
            }
        }
        if options.is_empty() {
            return Err(Error::Invalid(format!("shape {shape} admits no relation of kind {kind}")));
        }
        let (j, c1, c2) = options[rng.gen_range(0..options.len())];
        Ok(match kind {
            0 => Relation::ColumnSwap { filling: f, factor: j, column: c1, i: 0, k: 1 },
            _ => Relation::Shuffle { filling: f, factor: j, c1, c2 },
        })
    }

    // Moves a second copy of a column's top value into that column's second cell.
    fn random_repeat<R: Rng>(f: TabloidFilling, rng: &mut R) -> Result<Relation> {
        let mut options = Vec::new();
        for j in 0..f.n() {
            let rows = &f.rows[j];
            if rows.len() < 2 {
                continue;
            }
            for c in 0..rows[1].len() {
                let x = rows[0][c];
                if rows[1][c] == x {
                    continue;
                }
                for (i, row) in rows.iter().enumerate() {
                    for (k, &v) in row.iter().enumerate() {
                        if v == x && k != c {
                            options.push((j, c, (i, k)));
                        }
                    }
                }
            }
        }
        if options.is_empty() {
            return Err(Error::Invalid("filling admits no repeated column value".into()));
        }
        let (j, c, cell) = options[rng.gen_range(0..options.len())];
        Ok(Relation::RepeatedEntry { filling: swap_cells(&f, j, (1, c), cell) })
    }
}

/// True iff both sides agree after symmetrizing with the canonical tableau.
pub fn straighten_check(rel: &Relation) -> Result<bool> {
    let (lhs, rhs) = rel.sides()?;
    let left = symmetrize(&lhs)?;
    let mut right = Covariant { terms: FormalSum::zero(), ..left.clone() };
    for (s, f) in rhs {
        let c = symmetrize(&f)?;
        right = right.plus(&if s < 0 { c.neg() } else { c })?;
    }
    Ok(left == right)
}

/// Whether `x` is a linear combination of `basis` (all of one shape).
pub fn covariant_in_span(x: &Covariant, basis: &[Covariant]) -> Result<bool> {
    let mut keys: Vec<&Pattern> = x.terms.iter().map(|(k, _)| k).collect();
    for b in basis {
        if b.shape != x.shape {
            return Err(Error::Invalid("covariants of different shapes".into()));
        }
        keys.extend(b.terms.iter().map(|(k, _)| k));
    }
    keys.sort();
    keys.dedup();
    let vec_of = |c: &Covariant| -> Vec<Rational> { keys.iter().map(|k| c.terms.get(k)).collect() };
    let basis: Vec<Vec<Rational>> = basis.iter().map(vec_of).collect();
    crate::exactalg::in_span(&vec_of(x), &basis)
}
