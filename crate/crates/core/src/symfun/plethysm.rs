use super::characters::{character, class_size, factorial, z};
use super::kostka::KostkaMatrix;
use super::partition::{partitions, NPartition, Partition};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

/// One factor's contribution to the multiplicity formula
/// `m_λ = (1/r!) Σ_ρ |class ρ| Π_j T_j[ρ][λ^j]`,
/// where `T_j[ρ][ν] = ⟨p_ρ[h_{d_j}], s_ν⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorTable {
    pub r: usize,
    pub d: usize,
    pub classes: Vec<Partition>,
    pub shapes: Vec<Partition>,
    pub values: Vec<Vec<i128>>,
}

impl FactorTable {
    pub fn shape_index(&self, nu: &Partition) -> Option<usize> {
        self.shapes.binary_search(nu).ok()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Route {
    /// Monomial counts by torus weight, then the inverse Kostka matrix.
    Weights,
    /// Murnaghan–Nakayama characters of the block stabilizer.
    Characters,
}

thread_local! {
    static TABLES: RefCell<HashMap<(usize, usize, Route), Rc<FactorTable>>> = RefCell::new(HashMap::new());
    static KOSTKA: RefCell<HashMap<usize, Rc<KostkaMatrix>>> = RefCell::new(HashMap::new());
}

fn kostka_matrix(n: usize) -> Rc<KostkaMatrix> {
    KOSTKA.with(|k| k.borrow_mut().entry(n).or_insert_with(|| Rc::new(KostkaMatrix::build(n))).clone())
}

pub fn factor_table(r: usize, d: usize, route: Route) -> Rc<FactorTable> {
    if let Some(t) = TABLES.with(|t| t.borrow().get(&(r, d, route)).cloned()) {
        return t;
    }
    let t = Rc::new(match route {
        Route::Weights => table_by_weights(r, d),
        Route::Characters => table_by_characters(r, d),
    });
    TABLES.with(|m| m.borrow_mut().insert((r, d, route), t.clone()));
    t
}

/// Number of ways to write `mu` as Σ_c ℓ_c·β_c with each β_c a weak
/// composition of `d`: the coefficient of x^μ in Π_c h_d(x^{ℓ_c}).
fn weight_count(cycles: &[usize], d: usize, mu: &[usize], memo: &mut HashMap<(usize, Vec<usize>), i128>) -> i128 {
    let Some((&l, rest)) = cycles.split_first() else {
        return i128::from(mu.iter().all(|&x| x == 0));
    };
    let mut key_rem = mu.to_vec();
    key_rem.sort_unstable();
    let key = (cycles.len(), key_rem);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut rem = mu.to_vec();
    fn place(
        i: usize,
        left: usize,
        l: usize,
        rem: &mut Vec<usize>,
        rest: &[usize],
        d: usize,
        memo: &mut HashMap<(usize, Vec<usize>), i128>,
        total: &mut i128,
    ) {
        if i == rem.len() {
            if left == 0 {
                let r2 = rem.clone();
                *total += weight_count(rest, d, &r2, memo);
            }
            return;
        }
        let cap = (rem[i] / l).min(left);
        for b in 0..=cap {
            rem[i] -= b * l;
            place(i + 1, left - b, l, rem, rest, d, memo, total);
            rem[i] += b * l;
        }
    }
    place(0, d, l, &mut rem, rest, d, memo, &mut total);
    memo.insert(key, total);
    total
}

fn table_by_weights(r: usize, d: usize) -> FactorTable {
    let classes = partitions(r, r);
    let shapes = partitions(r * d, r * d);
    let km = kostka_matrix(r * d);
    let mut values = vec![vec![0i128; shapes.len()]; classes.len()];
    for (a, rho) in classes.iter().enumerate() {
        let mut memo = HashMap::new();
        let w: Vec<i128> = km
            .partitions
            .iter()
            .map(|mu| weight_count(rho.parts(), d, mu.parts(), &mut memo))
            .collect();
        for (b, nu) in shapes.iter().enumerate() {
            let c = km.index(nu).unwrap();
            values[a][b] = (0..km.partitions.len()).map(|m| w[m] * km.inverse[m][c] as i128).sum();
        }
    }
    FactorTable { r, d, classes, shapes, values }
}

fn table_by_characters(r: usize, d: usize) -> FactorTable {
    let classes = partitions(r, r);
    let shapes = partitions(r * d, r * d);
    let inner = partitions(d, d);
    let mut values = vec![vec![0i128; shapes.len()]; classes.len()];
    for (a, rho) in classes.iter().enumerate() {
        // each cycle of length ℓ carrying class τ of S_d contributes cycles ℓ·τ
        let k = rho.len();
        let mut choice = vec![0usize; k];
        let mut terms: Vec<(Partition, BigRational)> = Vec::new();
        loop {
            let mut cyc = Vec::new();
            let mut weight = BigRational::from_integer(BigInt::from(1));
            for (c, &l) in rho.parts().iter().enumerate() {
                let tau = &inner[choice[c]];
                cyc.extend(tau.parts().iter().map(|&t| t * l));
                weight /= BigRational::from_integer(z(tau));
            }
            terms.push((Partition::from_unsorted(cyc), weight));
            let mut c = 0;
            while c < k {
                choice[c] += 1;
                if choice[c] < inner.len() {
                    break;
                }
                choice[c] = 0;
                c += 1;
            }
            if c == k {
                break;
            }
        }
        for (b, nu) in shapes.iter().enumerate() {
            let mut s = BigRational::zero();
            for (cls, w) in &terms {
                s += w * BigRational::from_integer(BigInt::from(character(nu, cls).unwrap()));
            }
            assert!(s.is_integer(), "non-integral plethysm coefficient");
            values[a][b] = s.to_integer().to_i128().unwrap();
        }
    }
    FactorTable { r, d, classes, shapes, values }
}

/// Evaluates `(1/r!) Σ_ρ |class ρ| Π_j T_j[ρ][idx_j]`.
pub fn combine(tables: &[&FactorTable], idx: &[usize]) -> i128 {
    let r = tables.first().map_or(0, |t| t.r);
    let classes = partitions(r, r);
    let fact = factorial(r).to_i128().unwrap();
    let mut s = 0i128;
    for (a, rho) in classes.iter().enumerate() {
        let mut p = class_size(rho).to_i128().unwrap();
        for (t, &i) in tables.iter().zip(idx) {
            p *= t.values[a][i];
            if p == 0 {
                break;
            }
        }
        s += p;
    }
    assert!(s % fact == 0, "multiplicity is not integral");
    s / fact
}

fn mult_route(lambda: &NPartition, r: usize, d: &[usize], route: Route) -> Result<u64> {
    lambda.check_degree(r, d)?;
    if r == 0 {
        return Ok(1);
    }
    let tables: Vec<Rc<FactorTable>> = d.iter().map(|&dj| factor_table(r, dj, route)).collect();
    let refs: Vec<&FactorTable> = tables.iter().map(|t| t.as_ref()).collect();
    let idx: Vec<usize> = lambda
        .components()
        .iter()
        .zip(&refs)
        .map(|(p, t)| t.shape_index(p).unwrap())
        .collect();
    let m = combine(&refs, &idx);
    u64::try_from(m).map_err(|_| Error::Invalid(format!("negative multiplicity {m} for {lambda}")))
}

/// Multiplicity of S_λ in Sym^r(Sym^{d_1} ⊗ … ⊗ Sym^{d_n}), by counting
/// monomials per torus weight and inverting the Kostka matrix per factor.
pub fn mult_in_sym(lambda: &NPartition, r: usize, d: &[usize]) -> Result<u64> {
    mult_route(lambda, r, d, Route::Weights)
}

/// Same multiplicity, as ⟨Res χ_λ, 1⟩ over the stabilizer of a block
/// (rows permuted together, labels permuted inside each cell).
pub fn mult_in_sym_characters(lambda: &NPartition, r: usize, d: &[usize]) -> Result<u64> {
    mult_route(lambda, r, d, Route::Characters)
}

/// Direct count of degree-r monomials in the variables z_α, α an n-tuple of
/// multisets of sizes d_j over [m_j], grouped by total weight. Reference
/// oracle for small cases.
pub fn weight_multiplicities_direct(r: usize, d: &[usize], m: &[usize]) -> HashMap<Vec<Vec<usize>>, u64> {
    let vars: Vec<Vec<Vec<usize>>> = variable_weights(d, m);
    let zero: Vec<Vec<usize>> = m.iter().map(|&mj| vec![0; mj]).collect();
    let mut layer: HashMap<(usize, Vec<Vec<usize>>), u64> = HashMap::new();
    layer.insert((0, zero), 1);
    // multisets of variables: process variables one at a time, choosing a multiplicity
    for v in &vars {
        let mut next: HashMap<(usize, Vec<Vec<usize>>), u64> = HashMap::new();
        for ((deg, w), c) in &layer {
            let mut w2 = w.clone();
            for k in 0..=(r - deg) {
                if k > 0 {
                    for (a, b) in w2.iter_mut().zip(v) {
                        for (x, y) in a.iter_mut().zip(b) {
                            *x += y;
                        }
                    }
                }
                *next.entry((deg + k, w2.clone())).or_default() += c;
            }
        }
        layer = next;
    }
    layer.into_iter().filter(|((deg, _), _)| *deg == r).map(|((_, w), c)| (w, c)).collect()
}

fn variable_weights(d: &[usize], m: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let per: Vec<Vec<Vec<usize>>> = d
        .iter()
        .zip(m)
        .map(|(&dj, &mj)| {
            let mut out = Vec::new();
            fn comp(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if i + 1 == cur.len() {
                    cur[i] = left;
                    out.push(cur.clone());
                    return;
                }
                for b in 0..=left {
                    cur[i] = b;
                    comp(i + 1, left - b, cur, out);
                }
            }
            comp(0, dj, &mut vec![0; mj], &mut out);
            out
        })
        .collect();
    let mut all = vec![Vec::new()];
    for list in per {
        all = all
            .into_iter()
            .flat_map(|pre: Vec<Vec<usize>>| {
                list.iter().map(move |x| {
                    let mut v = pre.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    all
}

/// Multiplicity of S_λ in the degree-r coordinate ring of the tangential variety.
pub fn m_tau(lambda: &NPartition, r: usize, d: &[usize]) -> u8 {
    if lambda.max_rows() > 2 {
        return 0;
    }
    let (e, f) = (lambda.e(), lambda.f(d));
    u8::from(e >= 2 * f && e <= r)
}

/// Shapes λ of the Veronese minimal-generator module K_{1,q}.
pub fn veronese_k1q(d: usize, q: usize) -> Result<Vec<Partition>> {
    let p = |v: Vec<usize>| Partition::new(v).unwrap();
    let out = match q {
        1 => (4..=d).filter(|k| k % 2 == 0).map(|k| p(vec![2 * d - k, k])).collect(),
        2 => {
            let mut v = Vec::new();
            if d >= 2 {
                v.push(p(vec![3 * d - 4, 2, 2]));
            }
            if d == 3 {
                v.push(p(vec![4, 4, 1]));
            }
            if d == 4 {
                v.push(p(vec![6, 6]));
            }
            v
        }
        3 => {
            if d == 3 {
                vec![p(vec![6, 6])]
            } else {
                vec![]
            }
        }
        _ => return Err(Error::Invalid(format!("q must be 1, 2 or 3, got {q}"))),
    };
    Ok(out)
}
