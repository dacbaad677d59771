use crate::error::{Error, Result};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// Matrix entries allowed for one degree: D^r must stay below this.
pub const DESK_CAP: u128 = 10_000_000;

/// One variable z_α: for each factor, the sorted multiset α_j of 0-based indices.
pub type Var = Vec<Vec<u8>>;

/// A degree-r monomial in the z_α, as sorted variable indices.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorSpaceSpec {
    pub d: Vec<usize>,
    pub m: Vec<usize>,
}

impl TensorSpaceSpec {
    pub fn new(d: Vec<usize>, m: Vec<usize>) -> Result<Self> {
        if d.is_empty() || d.len() != m.len() {
            return Err(Error::Dimension(format!("d has {} factors, dims has {}", d.len(), m.len())));
        }
        if d.iter().chain(&m).any(|&x| x == 0) {
            return Err(Error::Invalid("every d_j and m_j must be at least 1".into()));
        }
        if m.iter().any(|&x| x > 255) {
            return Err(Error::Cap("m_j above 255".into()));
        }
        Ok(TensorSpaceSpec { d, m })
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    /// D = Π_j C(m_j + d_j − 1, d_j).
    pub fn ambient_dim(&self) -> usize {
        self.d.iter().zip(&self.m).map(|(&d, &m)| binomial(m + d - 1, d) as usize).product()
    }

    /// All z_α in lexicographic order.
    pub fn variables(&self) -> Vec<Var> {
        self.d
            .iter()
            .zip(&self.m)
            .map(|(&d, &m)| (0..m as u8).combinations_with_replacement(d).collect::<Vec<_>>())
            .multi_cartesian_product()
            .collect()
    }

    /// dim Sym^r(Sym^d V).
    pub fn sym_dim(&self, r: usize) -> u128 {
        binomial(self.ambient_dim() + r - 1, r)
    }

    pub fn check_cap(&self, r: usize) -> Result<()> {
        let big = (self.ambient_dim() as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
        if big > DESK_CAP {
            return Err(Error::Cap(format!("D^r = {}^{r} exceeds {DESK_CAP}", self.ambient_dim())));
        }
        Ok(())
    }
}

impl std::fmt::Display for TensorSpaceSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "d={:?} m={:?}", self.d, self.m)
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Variable name: 1-based indices per factor, factors separated by '.'.
pub fn var_name(v: &Var) -> String {
    v.iter()
        .map(|s| s.iter().map(|i| (i + 1).to_string()).collect::<String>())
        .join(".")
}

/// Monomials of one degree, grouped by torus weight.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    pub spec: TensorSpaceSpec,
    pub r: usize,
    pub vars: Vec<Var>,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(spec: &TensorSpaceSpec, r: usize) -> Result<Self> {
        spec.check_cap(r)?;
        let vars = spec.variables();
        let monomials: Vec<Monomial> = (0..vars.len() as u32).combinations_with_replacement(r).collect();
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Ok(MonomialBasis { spec: spec.clone(), r, vars, monomials, index })
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Index counts per factor, flattened.
    pub fn weight(&self, m: &Monomial) -> Vec<u16> {
        let mut w = vec![0u16; self.spec.m.iter().sum()];
        for &v in m {
            let mut off = 0;
            for (j, s) in self.vars[v as usize].iter().enumerate() {
                for &i in s {
                    w[off + i as usize] += 1;
                }
                off += self.spec.m[j];
            }
        }
        w
    }

    /// Monomial indices grouped by weight, in a fixed order.
    pub fn weight_blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: BTreeMap<Vec<u16>, Vec<usize>> = BTreeMap::new();
        for (i, m) in self.monomials.iter().enumerate() {
            blocks.entry(self.weight(m)).or_default().push(i);
        }
        blocks.into_values().collect()
    }

    pub fn name(&self, m: &Monomial) -> String {
        m.iter().map(|&v| format!("z[{}]", var_name(&self.vars[v as usize]))).join("*")
    }
}
