use super::partition::{partitions, Partition};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::cell::RefCell;
use std::collections::HashMap;

thread_local! {
    static MEMO: RefCell<HashMap<(Vec<usize>, Vec<usize>), i64>> = RefCell::new(HashMap::new());
}

/// χ_λ(μ) by the Murnaghan–Nakayama rule on beta-sets, memoized per thread.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::Dimension(format!("χ_{lambda} evaluated at class {mu}")));
    }
    Ok(mn(lambda.parts(), mu.parts()))
}

fn mn(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = MEMO.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    let k = mu[0];
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut total = 0i64;
    for i in 0..l {
        if beta[i] < k || beta.contains(&(beta[i] - k)) {
            continue;
        }
        let nb = beta[i] - k;
        // leg length = beta entries strictly between
        let between = beta.iter().filter(|&&b| b > nb && b < beta[i]).count();
        let mut newb = beta.clone();
        newb[i] = nb;
        newb.sort_unstable_by(|a, b| b.cmp(a));
        let len = newb.len();
        let shape: Vec<usize> = newb
            .iter()
            .enumerate()
            .map(|(j, &b)| b - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&shape, &mu[1..]);
    }
    MEMO.with(|m| m.borrow_mut().insert(key, total));
    total
}

/// z_μ = Π i^{m_i} m_i!, the centralizer order of the class μ.
pub fn z(mu: &Partition) -> BigInt {
    let mut out = BigInt::from(1);
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
        out *= p;
    }
    for (_, c) in counts {
        for k in 2..=c {
            out *= k;
        }
    }
    out
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// Number of permutations with cycle type μ.
pub fn class_size(mu: &Partition) -> BigInt {
    factorial(mu.size()) / z(mu)
}

/// Full character table of S_r: rows are irreducibles, columns cycle types,
/// both in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub r: usize,
    pub irreps: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn build(r: usize) -> Self {
        let ps = partitions(r, r);
        let values = ps
            .iter()
            .map(|l| ps.iter().map(|m| mn(l.parts(), m.parts())).collect())
            .collect();
        CharacterTable { r, irreps: ps.clone(), classes: ps, values }
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        let i = self.irreps.binary_search(lambda).ok()?;
        let j = self.classes.binary_search(mu).ok()?;
        Some(self.values[i][j])
    }

    /// r!·⟨χ_a, χ_b⟩, which is r! exactly when a = b and 0 otherwise.
    pub fn scaled_inner(&self, a: usize, b: usize) -> BigInt {
        self.classes
            .iter()
            .enumerate()
            .map(|(k, mu)| class_size(mu) * self.values[a][k] * self.values[b][k])
            .sum()
    }
}
