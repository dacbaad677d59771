use super::concrete::ConcretePolynomial;
use super::space::{MonomialBasis, TensorSpaceSpec, Var};
use crate::error::{Error, Result};
use crate::exactalg::{rank, rank_and_kernel, Rational, SparseMatrix};
use crate::generic::FormalSum;
use crate::symfun::factorial;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Bound on numerators and denominators of sampled rationals.
pub const SAMPLE_BOUND: i64 = 97;

/// A point (e, f) of X × tangent directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentPointInput {
    pub e: Vec<Vec<Rational>>,
    pub f: Vec<Vec<Rational>>,
}

/// How the coordinate z_α reads a symmetric tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Convention {
    /// z_α(e^d) = e^α: the pairing of x^α with the tensor, no multinomial factor.
    DividedPowers,
    /// z_α is the coefficient of x^α, so z_α(e^d) = (d choose α)·e^α.
    Multinomial,
}

fn multinomial(s: &[u8]) -> Rational {
    let mut out = factorial(s.len());
    for run in s.chunk_by(|x, y| x == y) {
        out /= factorial(run.len());
    }
    Rational::from_integer(out)
}

/// Σ_j e₁^{d₁}⊗…⊗e_j^{d_j−1}f_j⊗…⊗e_n^{d_n}, in divided-power coordinates.
pub fn tangent_point(p: &TangentPointInput, spec: &TensorSpaceSpec) -> Result<Vec<Rational>> {
    tangent_point_with(p, spec, Convention::DividedPowers)
}

pub fn tangent_point_with(p: &TangentPointInput, spec: &TensorSpaceSpec, conv: Convention) -> Result<Vec<Rational>> {
    let n = spec.n();
    if p.e.len() != n || p.f.len() != n {
        return Err(Error::Dimension(format!("point has {} / {} factors, space has {n}", p.e.len(), p.f.len())));
    }
    for j in 0..n {
        if p.e[j].len() != spec.m[j] || p.f[j].len() != spec.m[j] {
            return Err(Error::Dimension(format!("factor {} vectors must have length {}", j + 1, spec.m[j])));
        }
    }
    let vars = spec.variables();
    Ok(vars.iter().map(|v| coordinate(v, p, spec, conv)).collect())
}

fn coordinate(v: &Var, p: &TangentPointInput, spec: &TensorSpaceSpec, conv: Convention) -> Rational {
    let n = spec.n();
    let pow: Vec<Rational> = (0..n)
        .map(|j| v[j].iter().fold(Rational::one(), |acc, &x| acc * &p.e[j][x as usize]))
        .collect();
    let mut z = Rational::zero();
    for j in 0..n {
        // (1/d_j) ∂_{f_j} e_j^{α_j}
        let mut der = Rational::zero();
        for k in 0..v[j].len() {
            let mut t = p.f[j][v[j][k] as usize].clone();
            for (q, &x) in v[j].iter().enumerate() {
                if q != k {
                    t *= &p.e[j][x as usize];
                }
            }
            der += t;
        }
        der /= Rational::from_integer((spec.d[j] as i64).into());
        for (i, pw) in pow.iter().enumerate() {
            if i != j {
                der *= pw;
            }
        }
        z += der;
    }
    if conv == Convention::Multinomial {
        for s in v {
            z *= multinomial(s);
        }
    }
    z
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
    let den = rng.gen_range(1..=SAMPLE_BOUND);
    Rational::new(num.into(), den.into())
}

pub fn random_input<R: Rng>(spec: &TensorSpaceSpec, rng: &mut R) -> TangentPointInput {
    let mut draw = |m: usize| (0..m).map(|_| random_rational(rng)).collect::<Vec<_>>();
    let e = spec.m.iter().map(|&m| draw(m)).collect();
    let f = spec.m.iter().map(|&m| draw(m)).collect();
    TangentPointInput { e, f }
}

/// A reproducible stream of random tangent points; the first k points do not
/// depend on how many are drawn later.
pub struct PointStream {
    spec: TensorSpaceSpec,
    conv: Convention,
    rng: ChaCha8Rng,
    points: Vec<Vec<Rational>>,
}

impl PointStream {
    pub fn new(spec: &TensorSpaceSpec, seed: u64, conv: Convention) -> Self {
        PointStream { spec: spec.clone(), conv, rng: ChaCha8Rng::seed_from_u64(seed), points: Vec::new() }
    }

    pub fn take(&mut self, k: usize) -> &[Vec<Rational>] {
        if self.points.len() < k {
            let inputs: Vec<TangentPointInput> =
                (self.points.len()..k).map(|_| random_input(&self.spec, &mut self.rng)).collect();
            let (spec, conv) = (&self.spec, self.conv);
            let fresh: Vec<Vec<Rational>> = inputs
                .par_iter()
                .map(|p| tangent_point_with(p, spec, conv).expect("sampled input matches the space"))
                .collect();
            self.points.extend(fresh);
        }
        &self.points[..k]
    }
}

fn monomial_value(m: &[u32], z: &[Rational]) -> Rational {
    m.iter().fold(Rational::one(), |acc, &v| acc * &z[v as usize])
}

fn evaluation_rows(basis: &MonomialBasis, cols: &[usize], points: &[Vec<Rational>]) -> Result<SparseMatrix> {
    let rows: Vec<Vec<Rational>> = points
        .par_iter()
        .map(|z| cols.iter().map(|&c| monomial_value(&basis.monomials[c], z)).collect())
        .collect();
    if rows.is_empty() {
        return Ok(SparseMatrix::zeros(0, cols.len()));
    }
    SparseMatrix::from_dense(&rows)
}

/// Rows: `sample_count` random tangent points, evaluated on every degree-r monomial.
pub fn evaluation_oracle(spec: &TensorSpaceSpec, r: usize, sample_count: usize, seed: u64) -> Result<SparseMatrix> {
    let basis = MonomialBasis::new(spec, r)?;
    let mut stream = PointStream::new(spec, seed, Convention::DividedPowers);
    let all: Vec<usize> = (0..basis.len()).collect();
    evaluation_rows(&basis, &all, stream.take(sample_count))
}

/// The kernel of the evaluation matrix, with its sampling record.
#[derive(Clone, Debug)]
pub struct OracleKernel {
    pub basis: MonomialBasis,
    pub kernel: Vec<ConcretePolynomial>,
    pub seed: u64,
    /// Largest number of points used by any weight block.
    pub samples: usize,
}

impl OracleKernel {
    pub fn dim(&self) -> usize {
        self.kernel.len()
    }
}

/// Degree-r forms vanishing at random tangent points, one weight block at a time.
/// Each block starts at twice its size and doubles until the kernel dimension
/// agrees twice in a row.
pub fn oracle_kernel(spec: &TensorSpaceSpec, r: usize, seed: u64) -> Result<OracleKernel> {
    oracle_kernel_with(spec, r, seed, Convention::DividedPowers)
}

pub fn oracle_kernel_with(spec: &TensorSpaceSpec, r: usize, seed: u64, conv: Convention) -> Result<OracleKernel> {
    let basis = MonomialBasis::new(spec, r)?;
    let mut stream = PointStream::new(spec, seed, conv);
    let mut kernel = Vec::new();
    let mut samples = 0;
    for block in basis.weight_blocks() {
        let mut s = 2 * block.len();
        let mut dims = Vec::new();
        let last = loop {
            let m = evaluation_rows(&basis, &block, stream.take(s))?;
            let (_, k) = rank_and_kernel(&m);
            dims.push(k.len());
            let n = dims.len();
            if n >= 3 && dims[n - 1] == dims[n - 2] && dims[n - 2] == dims[n - 3] {
                samples = samples.max(s);
                break k;
            }
            s *= 2;
        };
        for v in last {
            let mut terms = FormalSum::zero();
            for (&i, c) in block.iter().zip(v) {
                terms.add_term(basis.monomials[i].clone(), c);
            }
            kernel.push(ConcretePolynomial { r, terms });
        }
    }
    Ok(OracleKernel { basis, kernel, seed, samples })
}

/// Equal subspaces: same dimension and rank of the union unchanged.
pub fn same_span(basis: &MonomialBasis, a: &[ConcretePolynomial], b: &[ConcretePolynomial]) -> Result<bool> {
    let dense = |ps: &[ConcretePolynomial]| ps.iter().map(|p| p.to_dense(basis)).collect::<Result<Vec<_>>>();
    let (da, db) = (dense(a)?, dense(b)?);
    let rk = |rows: &[Vec<Rational>]| -> Result<usize> {
        if rows.is_empty() {
            return Ok(0);
        }
        Ok(rank(&SparseMatrix::from_dense(rows)?))
    };
    let (ra, rb) = (rk(&da)?, rk(&db)?);
    let both: Vec<Vec<Rational>> = da.into_iter().chain(db).collect();
    Ok(ra == rb && rk(&both)? == ra)
}

/// True iff every polynomial is exactly 0 at `count` fresh points drawn from `seed`.
pub fn vanishes_on_samples(spec: &TensorSpaceSpec, polys: &[ConcretePolynomial], count: usize, seed: u64) -> bool {
    let mut stream = PointStream::new(spec, seed, Convention::DividedPowers);
    let points = stream.take(count);
    polys.par_iter().all(|p| points.iter().all(|z| p.evaluate(z).is_zero()))
}
