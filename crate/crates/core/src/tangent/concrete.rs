use super::space::{MonomialBasis, Monomial, TensorSpaceSpec, Var};
use crate::error::{Error, Result};
use crate::exactalg::{rank_and_kernel, Rational, SparseMatrix};
use crate::generic::{compositions, FormalSum};
use crate::graphs::ColoredGraph;
use num_traits::Zero;
use rayon::prelude::*;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// A basis element of Sym^{rd−a}V ⊗ Sym^a V: per factor, (top multiset, bottom multiset).
pub type TargetKey = Vec<(Vec<u8>, Vec<u8>)>;

/// A homogeneous polynomial in the z_α; monomials index into `spec.variables()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcretePolynomial {
    pub r: usize,
    pub terms: FormalSum<Monomial>,
}

impl ConcretePolynomial {
    pub fn zero(r: usize) -> Self {
        ConcretePolynomial { r, terms: FormalSum::zero() }
    }

    pub fn from_dense(basis: &MonomialBasis, v: &[Rational]) -> Self {
        let mut terms = FormalSum::zero();
        for (m, c) in basis.monomials.iter().zip(v) {
            terms.add_term(m.clone(), c.clone());
        }
        ConcretePolynomial { r: basis.r, terms }
    }

    pub fn to_dense(&self, basis: &MonomialBasis) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); basis.len()];
        for (m, c) in self.terms.iter() {
            let i = basis
                .index_of(m)
                .ok_or_else(|| Error::Dimension(format!("monomial {m:?} is not of degree {}", basis.r)))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Value at a point given by its coordinates z_α.
    pub fn evaluate(&self, z: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| m.iter().fold(c.clone(), |acc, &v| acc * &z[v as usize]))
            .sum()
    }

    /// Product with the single variable z_v.
    pub fn times_var(&self, v: u32) -> Self {
        let terms = self.terms.map_keys(|m| {
            let mut m = m.clone();
            let k = m.partition_point(|&x| x <= v);
            m.insert(k, v);
            m
        });
        ConcretePolynomial { r: self.r + 1, terms }
    }

    /// Named terms for reports: `[("z[11.2]*z[12.1]", "3/2"), …]`.
    pub fn named(&self, basis: &MonomialBasis) -> NamedPolynomial {
        NamedPolynomial(self.terms.iter().map(|(m, c)| (basis.name(m), c.clone())).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPolynomial(pub Vec<(String, Rational)>);

impl Serialize for NamedPolynomial {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            monomial: &'a str,
            coeff: String,
        }
        let mut seq = ser.serialize_seq(Some(self.0.len()))?;
        for (m, c) in &self.0 {
            seq.serialize_element(&Term { monomial: m, coeff: crate::exactalg::fmt_rat(c) })?;
        }
        seq.end()
    }
}

/// π_a on one monomial: every row picks a factor c(i) with |c⁻¹(j)| = a_j and
/// sends one of the d_j positions of α^i_{c(i)} to the bottom.
pub fn pi_column(vars: &[Var], m: &Monomial, a: &[usize]) -> HashMap<TargetKey, i64> {
    let mut out = HashMap::new();
    if a.iter().sum::<usize>() != m.len() {
        return out;
    }
    let rows: Vec<&Var> = m.iter().map(|&v| &vars[v as usize]).collect();
    let n = a.len();
    let mut all: Vec<Vec<u8>> = vec![Vec::new(); n];
    for row in &rows {
        for (j, s) in row.iter().enumerate() {
            all[j].extend_from_slice(s);
        }
    }
    let mut left = a.to_vec();
    let mut moved: Vec<Vec<u8>> = vec![Vec::new(); n];
    fn go(
        i: usize,
        rows: &[&Var],
        left: &mut [usize],
        moved: &mut Vec<Vec<u8>>,
        all: &[Vec<u8>],
        out: &mut HashMap<TargetKey, i64>,
    ) {
        if i == rows.len() {
            let key = all
                .iter()
                .zip(moved.iter())
                .map(|(s, mv)| {
                    let mut top = s.clone();
                    for x in mv {
                        let k = top.iter().position(|y| y == x).unwrap();
                        top.remove(k);
                    }
                    top.sort_unstable();
                    let mut bottom = mv.clone();
                    bottom.sort_unstable();
                    (top, bottom)
                })
                .collect();
            *out.entry(key).or_default() += 1;
            return;
        }
        for j in 0..left.len() {
            if left[j] == 0 {
                continue;
            }
            left[j] -= 1;
            for &x in &rows[i][j] {
                moved[j].push(x);
                go(i + 1, rows, left, moved, all, out);
                moved[j].pop();
            }
            left[j] += 1;
        }
    }
    go(0, &rows, &mut left, &mut moved, &all, &mut out);
    out
}

/// The matrix of π_a with its row and column labels.
#[derive(Clone, Debug)]
pub struct PiMatrix {
    pub matrix: SparseMatrix,
    pub rows: Vec<TargetKey>,
    pub cols: Vec<Monomial>,
}

impl PiMatrix {
    pub fn column(&self, m: &Monomial) -> Option<BTreeMap<TargetKey, Rational>> {
        let c = self.cols.iter().position(|x| x == m)?;
        Some(
            self.matrix
                .entries()
                .filter(|(_, j, _)| *j == c)
                .map(|(i, _, v)| (self.rows[i].clone(), v.clone()))
                .collect(),
        )
    }
}

fn assemble(columns: Vec<HashMap<TargetKey, i64>>) -> Result<(SparseMatrix, Vec<TargetKey>)> {
    let mut keys: Vec<TargetKey> = columns.iter().flat_map(|c| c.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let at: HashMap<&TargetKey, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let cols = columns
        .iter()
        .map(|c| {
            let mut col: Vec<(usize, Rational)> =
                c.iter().map(|(k, &v)| (at[k], Rational::from_integer(v.into()))).collect();
            col.sort_by_key(|(i, _)| *i);
            col
        })
        .collect();
    Ok((SparseMatrix::from_columns(keys.len(), cols)?, keys))
}

/// π_a(V) in the monomial bases.
pub fn pi_concrete(a: &[usize], spec: &TensorSpaceSpec, r: usize) -> Result<PiMatrix> {
    if a.len() != spec.n() {
        return Err(Error::Dimension(format!("grade {a:?} for {} factors", spec.n())));
    }
    if a.iter().sum::<usize>() != r {
        return Err(Error::Invalid(format!("grade {a:?} does not sum to r = {r}")));
    }
    let basis = MonomialBasis::new(spec, r)?;
    let columns = basis.monomials.iter().map(|m| pi_column(&basis.vars, m, a)).collect();
    let (matrix, rows) = assemble(columns)?;
    Ok(PiMatrix { matrix, rows, cols: basis.monomials })
}

/// A basis of I_r together with the monomial basis it lives in.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    pub basis: MonomialBasis,
    pub kernel: Vec<ConcretePolynomial>,
}

impl IdealBasis {
    pub fn dim(&self) -> usize {
        self.kernel.len()
    }

    pub fn dense(&self) -> Result<Vec<Vec<Rational>>> {
        self.kernel.iter().map(|p| p.to_dense(&self.basis)).collect()
    }
}

/// I_r = ⋂_a Ker π_a, computed one torus-weight block at a time.
pub fn ideal_dimension(spec: &TensorSpaceSpec, r: usize) -> Result<IdealBasis> {
    let basis = MonomialBasis::new(spec, r)?;
    let grades = compositions(r, spec.n());
    let blocks = basis.weight_blocks();
    let per_block: Vec<Result<Vec<ConcretePolynomial>>> = blocks
        .par_iter()
        .map(|block| {
            let columns: Vec<HashMap<TargetKey, i64>> = block
                .iter()
                .map(|&i| {
                    let mut all = HashMap::new();
                    for a in &grades {
                        all.extend(pi_column(&basis.vars, &basis.monomials[i], a));
                    }
                    all
                })
                .collect();
            let (matrix, _) = assemble(columns)?;
            let (_, kernel) = rank_and_kernel(&matrix);
            Ok(kernel
                .into_iter()
                .map(|v| {
                    let mut terms = FormalSum::zero();
                    for (&i, c) in block.iter().zip(v) {
                        terms.add_term(basis.monomials[i].clone(), c);
                    }
                    ConcretePolynomial { r, terms }
                })
                .collect())
        })
        .collect();
    let mut kernel = Vec::new();
    for k in per_block {
        kernel.extend(k?);
    }
    Ok(IdealBasis { basis, kernel })
}

/// The highest weight vector of a two-row graph covariant: each vertex starts
/// with all-first-index multisets, and each edge u→v of color j puts a second
/// index at v (sign +) or at u (sign −).
pub fn graph_covariant_concrete(g: &ColoredGraph, spec: &TensorSpaceSpec) -> Result<ConcretePolynomial> {
    if spec.m.iter().any(|&m| m != 2) {
        return Err(Error::Invalid("graph covariants are only realized with all m_j = 2".into()));
    }
    if spec.d != g.d {
        return Err(Error::Dimension(format!("graph has d = {:?}, space has d = {:?}", g.d, spec.d)));
    }
    let vars = spec.variables();
    let lookup: HashMap<&Var, u32> = vars.iter().enumerate().map(|(i, v)| (v, i as u32)).collect();
    let n = spec.n();
    let mut out = FormalSum::zero();
    let edges = &g.edges;
    for choice in 0u64..(1u64 << edges.len()) {
        // seconds[vertex][factor] = number of index-2 entries
        let mut seconds = vec![vec![0usize; n]; g.r];
        let mut sign = 1i64;
        for (k, e) in edges.iter().enumerate() {
            let at = if choice >> k & 1 == 0 { e.v } else { e.u };
            if choice >> k & 1 == 1 {
                sign = -sign;
            }
            seconds[at as usize - 1][e.color] += 1;
        }
        if seconds.iter().any(|row| row.iter().zip(&spec.d).any(|(s, d)| s > d)) {
            continue;
        }
        let mut mono: Monomial = seconds
            .iter()
            .map(|row| {
                let var: Var = row
                    .iter()
                    .zip(&spec.d)
                    .map(|(&s, &d)| std::iter::repeat(0u8).take(d - s).chain(std::iter::repeat(1u8).take(s)).collect())
                    .collect();
                lookup[&var]
            })
            .collect();
        mono.sort_unstable();
        out.add_term(mono, Rational::from_integer(sign.into()));
    }
    Ok(ConcretePolynomial { r: g.r, terms: out })
}
