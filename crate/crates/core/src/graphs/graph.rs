//! Colored oriented multigraphs and the two-row tabloids they encode.

use crate::error::{Error, Result};
use crate::generic::TabloidFilling;
use crate::symfun::{NPartition, Partition};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// An edge u → v of color `color` (0-based factor index); vertices are 1..=r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: u8,
    pub v: u8,
    pub color: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredGraph {
    pub r: usize,
    pub d: Vec<usize>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub rich: bool,
    pub has_triangle: bool,
    pub has_odd_cycle: bool,
    /// MCB type (a, b) with a ≥ b.
    pub mcb: Option<(usize, usize)>,
}

impl ColoredGraph {
    /// Checks vertex range and admissibility. A loop counts twice at its vertex.
    pub fn new(r: usize, d: Vec<usize>, edges: Vec<Edge>) -> Result<Self> {
        let mut load = vec![vec![0usize; d.len()]; r + 1];
        for e in &edges {
            if e.color >= d.len() {
                return Err(Error::Invalid(format!("color {} but only {} factors", e.color + 1, d.len())));
            }
            for x in [e.u, e.v] {
                if x == 0 || x as usize > r {
                    return Err(Error::Invalid(format!("vertex {x} outside 1..={r}")));
                }
            }
            load[e.u as usize][e.color] += 1;
            load[e.v as usize][e.color] += 1;
        }
        for (x, row) in load.iter().enumerate().skip(1) {
            for (j, &c) in row.iter().enumerate() {
                if c > d[j] {
                    return Err(Error::Inadmissible { vertex: x, color: j + 1, count: c, limit: d[j] });
                }
            }
        }
        Ok(ColoredGraph { r, d, edges })
    }

    pub fn edgeless(r: usize, d: Vec<usize>) -> Self {
        ColoredGraph { r, d, edges: Vec::new() }
    }

    /// λ^j = (r·d_j − e_j, e_j) with e_j the number of color-j edges.
    pub fn shape(&self) -> NPartition {
        NPartition::new(
            self.d
                .iter()
                .enumerate()
                .map(|(j, &dj)| {
                    let e = self.edges.iter().filter(|x| x.color == j).count();
                    Partition::from_unsorted(vec![self.r * dj - e, e])
                })
                .collect(),
        )
    }

    pub fn to_tabloid(&self) -> Result<TabloidFilling> {
        let mut big = vec![Vec::new(); self.d.len()];
        for e in &self.edges {
            big[e.color].push(vec![e.u, e.v]);
        }
        TabloidFilling::from_big_columns(&self.d, self.r, big)
    }

    /// Size-two columns become edges, top to bottom.
    pub fn from_tabloid(f: &TabloidFilling) -> Result<Self> {
        let mut edges = Vec::new();
        for j in 0..f.n() {
            for c in f.columns(j) {
                match c.len() {
                    1 => {}
                    2 => edges.push(Edge { u: c[0], v: c[1], color: j }),
                    k => return Err(Error::Invalid(format!("factor {} has a column of size {k}; not a graph", j + 1))),
                }
            }
        }
        ColoredGraph::new(f.r, f.d.clone(), edges)
    }

    pub fn reversed(&self) -> Self {
        let edges = self.edges.iter().map(|e| Edge { u: e.v, v: e.u, color: e.color }).collect();
        ColoredGraph { edges, ..self.clone() }
    }

    fn adjacency(&self) -> Vec<BTreeSet<u8>> {
        let mut adj = vec![BTreeSet::new(); self.r + 1];
        for e in &self.edges {
            adj[e.u as usize].insert(e.v);
            adj[e.v as usize].insert(e.u);
        }
        adj
    }

    /// Connected components with a 2-coloring of each, when one exists.
    fn components(&self) -> (Vec<Vec<u8>>, Vec<u8>, bool) {
        let adj = self.adjacency();
        let mut side = vec![u8::MAX; self.r + 1];
        let mut comps = Vec::new();
        let mut bipartite = true;
        for s in 1..=self.r {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s as u8];
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in &adj[x as usize] {
                    if side[y as usize] == u8::MAX {
                        side[y as usize] = 1 - side[x as usize];
                        stack.push(y);
                    } else if side[y as usize] == side[x as usize] {
                        bipartite = false;
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        (comps, side, bipartite)
    }

    /// The bipartition (A, B), |A| ≥ |B|, of the big component of an MCB graph.
    pub fn mcb_classes(&self) -> Option<(Vec<u8>, Vec<u8>)> {
        let (comps, side, bipartite) = self.components();
        if !bipartite {
            return None;
        }
        let nontrivial: Vec<&Vec<u8>> = comps.iter().filter(|c| c.len() > 1).collect();
        let comp: Vec<u8> = match nontrivial.len() {
            0 => vec![1],
            1 => {
                let c = nontrivial[0];
                let edges_in = self.edges.len();
                // connected spanning, or a tree plus isolated nodes
                if c.len() != self.r && edges_in != c.len() - 1 {
                    return None;
                }
                c.clone()
            }
            _ => return None,
        };
        let (mut x, mut y): (Vec<u8>, Vec<u8>) = comp.iter().partition(|&&v| side[v as usize] == side[comp[0] as usize]);
        if x.len() < y.len() || (x.len() == y.len() && y < x) {
            std::mem::swap(&mut x, &mut y);
        }
        // with |A| = |B| the lexicographically smaller class is B, the head set
        Some((x, y))
    }

    pub fn classify(&self) -> Classification {
        let adj = self.adjacency();
        let has_triangle = (1..=self.r as u8)
            .tuple_combinations()
            .any(|(a, b, c)| adj[a as usize].contains(&b) && adj[b as usize].contains(&c) && adj[a as usize].contains(&c));
        let (_, _, bipartite) = self.components();
        Classification {
            rich: self.edges.len() > self.r,
            has_triangle,
            has_odd_cycle: !bipartite,
            mcb: self.mcb_classes().map(|(a, b)| (a.len(), b.len())),
        }
    }

    /// Every edge pointed into the smaller class B; `None` if not MCB.
    pub fn canonical_orientation(&self) -> Option<ColoredGraph> {
        let (_, b) = self.mcb_classes()?;
        let edges = self
            .edges
            .iter()
            .map(|e| if b.contains(&e.v) { *e } else { Edge { u: e.v, v: e.u, color: e.color } })
            .collect();
        Some(ColoredGraph { edges, ..self.clone() })
    }

    /// Sorted edge list minimized over all vertex relabelings.
    pub fn canonical_form(&self, oriented: bool) -> Vec<Edge> {
        let mut best: Option<Vec<Edge>> = None;
        for p in (1..=self.r as u8).permutations(self.r) {
            let mut es: Vec<Edge> = self
                .edges
                .iter()
                .map(|e| {
                    let (u, v) = (p[e.u as usize - 1], p[e.v as usize - 1]);
                    let (u, v) = if !oriented && u > v { (v, u) } else { (u, v) };
                    Edge { u, v, color: e.color }
                })
                .collect();
            es.sort();
            if best.as_ref().is_none_or(|b| es < *b) {
                best = Some(es);
            }
        }
        best.unwrap_or_default()
    }

    pub fn isomorphic(&self, other: &ColoredGraph, oriented: bool) -> bool {
        self.r == other.r && self.d == other.d && self.canonical_form(oriented) == other.canonical_form(oriented)
    }
}

/// Every loopless admissible graph on r vertices with edges oriented from the
/// smaller vertex, optionally one per isomorphism class. (Loops give repeated
/// column entries, so their covariants vanish.)
pub fn admissible_graphs(r: usize, d: &[usize], up_to_iso: bool) -> Vec<ColoredGraph> {
    let pairs: Vec<(u8, u8)> = (1..=r as u8).tuple_combinations().collect();
    let per_color: Vec<Vec<Vec<Edge>>> = d
        .iter()
        .enumerate()
        .map(|(j, &dj)| {
            let mut out = Vec::new();
            let mut deg = vec![0usize; r + 1];
            let mut cur = Vec::new();
            fn go(k: usize, pairs: &[(u8, u8)], dj: usize, j: usize, deg: &mut [usize], cur: &mut Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
                if k == pairs.len() {
                    out.push(cur.clone());
                    return;
                }
                let (u, v) = pairs[k];
                let mut added = 0;
                loop {
                    go(k + 1, pairs, dj, j, deg, cur, out);
                    if deg[u as usize] == dj || deg[v as usize] == dj {
                        break;
                    }
                    deg[u as usize] += 1;
                    deg[v as usize] += 1;
                    cur.push(Edge { u, v, color: j });
                    added += 1;
                }
                for _ in 0..added {
                    cur.pop();
                }
                deg[u as usize] -= added;
                deg[v as usize] -= added;
            }
            go(0, &pairs, dj, j, &mut deg, &mut cur, &mut out);
            out
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for combo in per_color.iter().map(|v| v.iter()).multi_cartesian_product() {
        let edges: Vec<Edge> = combo.into_iter().flatten().copied().collect();
        let g = ColoredGraph { r, d: d.to_vec(), edges };
        if up_to_iso && !seen.insert(g.canonical_form(false)) {
            continue;
        }
        out.push(g);
    }
    if d.is_empty() {
        out.push(ColoredGraph::edgeless(r, Vec::new()));
    }
    out
}

/// Whether an MCB graph of type (a, b) and shape λ exists on r vertices:
/// b ≥ f_λ and e_λ ≥ 2f_λ − 1, together with a ≥ b, a + b ≤ r, and the
/// component being spanning (e ≥ a + b − 1 = r − 1) or a tree (e = a + b − 1).
pub fn mcb_exists(lambda: &NPartition, ab: (usize, usize), d: &[usize], r: usize) -> bool {
    let (a, b) = ab;
    if lambda.max_rows() > 2 || lambda.check_degree(r, d).is_err() {
        return false;
    }
    let (e, f) = (lambda.e(), lambda.f(d));
    let structural = a + b == e + 1 || (a + b == r && e + 1 >= r);
    a >= b && a + b <= r && a + b >= 1 && b >= f && e + 1 >= 2 * f && structural
}

/// The tabloid whose size-two columns are (1,2),(3,4),…,(2m−1,2m) twice and
/// (1,2m+1) when e_λ is odd, filled into the factors left to right, together
/// with the grade a = (r − Σ_{j>1} λ^j_2, λ^2_2, …, λ^n_2).
pub fn witness_tabloid(lambda: &NPartition, r: usize, d: &[usize]) -> Result<(TabloidFilling, Vec<usize>)> {
    lambda.check_degree(r, d)?;
    let (e, f) = (lambda.e(), lambda.f(d));
    if lambda.max_rows() > 2 || 2 * f > e || e > r {
        return Err(Error::Invalid(format!("witness needs two-row λ with 2f ≤ e ≤ r, got e = {e}, f = {f}, r = {r}")));
    }
    let m = e / 2;
    let mut cols: Vec<Vec<u8>> = Vec::new();
    for _ in 0..2 {
        cols.extend((0..m).map(|i| vec![2 * i as u8 + 1, 2 * i as u8 + 2]));
    }
    if e % 2 == 1 {
        cols.push(vec![1, 2 * m as u8 + 1]);
    }
    let mut it = cols.into_iter();
    let big: Vec<Vec<Vec<u8>>> =
        lambda.components().iter().map(|p| it.by_ref().take(p.part(1)).collect()).collect();
    let t = TabloidFilling::from_big_columns(d, r, big)?;
    let rest: usize = lambda.components().iter().skip(1).map(|p| p.part(1)).sum();
    let mut a = vec![r - rest];
    a.extend(lambda.components().iter().skip(1).map(|p| p.part(1)));
    Ok((t, a))
}
