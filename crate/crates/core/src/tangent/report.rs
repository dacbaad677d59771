use super::concrete::{ideal_dimension, ConcretePolynomial, IdealBasis, NamedPolynomial};
use super::oracle::{oracle_kernel, same_span};
use super::space::{MonomialBasis, TensorSpaceSpec};
use crate::error::Result;
use crate::exactalg::{rank, Rational, SparseMatrix};
use crate::symfun::{dim_gl, m_tau, NPartition};
use serde::Serialize;

/// One isotypic family S_λ of the degree-r coordinate ring.
#[derive(Clone, Debug, Serialize)]
pub struct Family {
    pub lambda: Vec<Vec<usize>>,
    pub dim: u128,
}

/// The families with m_λ = 1 and nonzero dimension at the given m.
pub fn coordinate_families(spec: &TensorSpaceSpec, r: usize) -> Vec<Family> {
    NPartition::all(r, &spec.d, 2)
        .into_iter()
        .filter(|l| m_tau(l, r, &spec.d) == 1)
        .map(|l| {
            let dim = l.components().iter().zip(&spec.m).map(|(p, &m)| dim_gl(p, m)).product();
            Family { lambda: l.components().iter().map(|p| p.parts().to_vec()).collect(), dim }
        })
        .filter(|f| f.dim > 0)
        .collect()
}

/// Families up to permuting factors of equal format.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyClass {
    pub lambda: Vec<Vec<usize>>,
    pub members: usize,
    pub dim: u128,
}

pub fn family_classes(spec: &TensorSpaceSpec, families: &[Family]) -> Vec<FamilyClass> {
    let mut out: Vec<(Vec<(usize, usize, Vec<usize>)>, FamilyClass)> = Vec::new();
    for f in families {
        let mut key: Vec<(usize, usize, Vec<usize>)> =
            (0..spec.n()).map(|j| (spec.d[j], spec.m[j], f.lambda[j].clone())).collect();
        key.sort();
        match out.iter_mut().find(|(k, _)| *k == key) {
            Some((_, c)) => {
                c.members += 1;
                c.dim += f.dim;
            }
            None => out.push((key, FamilyClass { lambda: f.lambda.clone(), members: 1, dim: f.dim })),
        }
    }
    out.into_iter().map(|(_, c)| c).collect()
}

/// Predicted dim K[τ]_r = Σ_λ m_λ Π_j dim S_{λ^j} K^{m_j}.
pub fn coordinate_dim(spec: &TensorSpaceSpec, r: usize) -> u128 {
    coordinate_families(spec, r).iter().map(|f| f.dim).sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeRow {
    pub r: usize,
    pub ideal_dim: usize,
    /// dim (I_{r−1}·S₁)_r
    pub from_lower: usize,
    pub new_generators: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerationReport {
    pub spec: TensorSpaceSpec,
    pub rows: Vec<DegreeRow>,
}

impl GenerationReport {
    /// Degrees where I_r is not spanned by products from lower degree.
    pub fn generator_degrees(&self) -> Vec<usize> {
        self.rows.iter().filter(|x| x.new_generators > 0).map(|x| x.r).collect()
    }
}

/// Compare I_r with the span of I_{r−1}·z_v for every degree up to `up_to`.
pub fn generated_in_degree(spec: &TensorSpaceSpec, up_to: usize) -> Result<GenerationReport> {
    let mut rows = Vec::new();
    let mut prev: Option<IdealBasis> = None;
    for r in 1..=up_to {
        let ideal = ideal_dimension(spec, r)?;
        let from_lower = match &prev {
            Some(p) if !p.kernel.is_empty() => products_rank(&p.kernel, &ideal.basis)?,
            _ => 0,
        };
        rows.push(DegreeRow {
            r,
            ideal_dim: ideal.dim(),
            from_lower,
            new_generators: ideal.dim() - from_lower,
        });
        prev = Some(ideal);
    }
    Ok(GenerationReport { spec: spec.clone(), rows })
}

fn products_rank(lower: &[ConcretePolynomial], basis: &MonomialBasis) -> Result<usize> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for p in lower {
        for v in 0..basis.vars.len() as u32 {
            rows.push(p.times_var(v).to_dense(basis)?);
        }
    }
    Ok(rank(&SparseMatrix::from_dense(&rows)?))
}

/// A replayable record of one degree-r computation.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub version: String,
    pub spec: TensorSpaceSpec,
    pub r: usize,
    pub ambient_dim: usize,
    pub sym_dim: u128,
    pub ideal_dim: usize,
    pub coordinate_dim: u128,
    pub reconciled: bool,
    pub seed: u64,
    pub oracle_dim: usize,
    pub oracle_samples: usize,
    pub oracle_agrees: bool,
    pub kernel_basis: Vec<NamedPolynomial>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.reconciled && self.oracle_agrees
    }
}

/// Kernel of π, the evaluation oracle, and the character count, side by side.
pub fn certify(spec: &TensorSpaceSpec, r: usize, seed: u64) -> Result<Certificate> {
    let ideal = ideal_dimension(spec, r)?;
    let oracle = oracle_kernel(spec, r, seed)?;
    let agrees = same_span(&ideal.basis, &ideal.kernel, &oracle.kernel)?;
    let coord = coordinate_dim(spec, r);
    let sym = spec.sym_dim(r);
    Ok(Certificate {
        version: crate::VERSION.to_string(),
        spec: spec.clone(),
        r,
        ambient_dim: spec.ambient_dim(),
        sym_dim: sym,
        ideal_dim: ideal.dim(),
        coordinate_dim: coord,
        reconciled: coord + ideal.dim() as u128 == sym,
        seed,
        oracle_dim: oracle.dim(),
        oracle_samples: oracle.samples,
        oracle_agrees: agrees,
        kernel_basis: ideal.kernel.iter().map(|p| p.named(&ideal.basis)).collect(),
    })
}
