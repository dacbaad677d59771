use super::partition::{partitions, Partition};
use serde::{Deserialize, Serialize};
use std::cell::RefCell;
use std::collections::HashMap;

thread_local! {
    static MEMO: RefCell<HashMap<(Vec<usize>, Vec<usize>), u64>> = RefCell::new(HashMap::new());
}

/// Number of semistandard tableaux of shape λ and content μ (μ any
/// composition). Strips the largest letter as a horizontal strip.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> u64 {
    let mut mu = mu.to_vec();
    while mu.last() == Some(&0) {
        mu.pop();
    }
    if lambda.size() != mu.iter().sum::<usize>() {
        return 0;
    }
    ssyt(lambda.parts(), &mu)
}

fn ssyt(shape: &[usize], content: &[usize]) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    if shape.len() > content.len() {
        return 0;
    }
    let key = (shape.to_vec(), content.to_vec());
    if let Some(v) = MEMO.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    let mut total = 0;
    let mut inner = vec![0usize; shape.len()];
    strips(shape, 0, last, &mut inner, &mut |nu| {
        let nu: Vec<usize> = nu.iter().copied().filter(|&p| p > 0).collect();
        total += ssyt(&nu, rest);
    });
    MEMO.with(|m| m.borrow_mut().insert(key, total));
    total
}

/// Enumerates ν ⊆ shape with shape/ν a horizontal strip of the given size.
fn strips(shape: &[usize], i: usize, left: usize, nu: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if i == shape.len() {
        if left == 0 {
            f(nu);
        }
        return;
    }
    let lo = shape.get(i + 1).copied().unwrap_or(0);
    for v in lo..=shape[i] {
        let take = shape[i] - v;
        if take > left {
            continue;
        }
        nu[i] = v;
        strips(shape, i + 1, left - take, nu, f);
    }
}

/// The Kostka matrix on partitions of `n`, listed in reverse lexicographic
/// order (a linear extension of dominance), with its integer inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostkaMatrix {
    pub n: usize,
    pub partitions: Vec<Partition>,
    /// `k[a][b]` = K_{λ_a, λ_b}, shape λ_a and content λ_b; upper unitriangular.
    pub k: Vec<Vec<i64>>,
    pub inverse: Vec<Vec<i64>>,
}

impl KostkaMatrix {
    pub fn build(n: usize) -> Self {
        let mut ps = partitions(n, n);
        ps.reverse();
        let size = ps.len();
        let k: Vec<Vec<i64>> = ps
            .iter()
            .map(|l| ps.iter().map(|m| kostka(l, m.parts()) as i64).collect())
            .collect();
        // back-substitution for the upper unitriangular inverse
        let mut inv = vec![vec![0i64; size]; size];
        for c in 0..size {
            inv[c][c] = 1;
            for r in (0..c).rev() {
                let s: i64 = (r + 1..=c).map(|t| k[r][t] * inv[t][c]).sum();
                inv[r][c] = -s;
            }
        }
        KostkaMatrix { n, partitions: ps, k, inverse: inv }
    }

    pub fn index(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }
}
