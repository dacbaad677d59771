//! Minimal generators of the generic ideal in degrees 2, 3 and 4, as tabloids.

use crate::error::{Error, Result};
use crate::generic::TabloidFilling;
use crate::symfun::NPartition;
use itertools::Itertools;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cond {
    Any,
    AtLeast(usize),
    Exactly(usize),
}

impl Cond {
    fn holds(self, d: usize) -> bool {
        match self {
            Cond::Any => true,
            Cond::AtLeast(k) => d >= k,
            Cond::Exactly(k) => d == k,
        }
    }
}

/// One factor of a display: rows of the columns of size > 1, and the
/// condition on the d of the factor it lands in.
type Role = (&'static str, Cond);

struct Display {
    family: &'static str,
    roles: &'static [Role],
}

use Cond::*;

const DEGREE3: &[Display] = &[
    Display { family: "two3", roles: &[("11/22/33", AtLeast(2))] },
    Display { family: "two3", roles: &[("1/2/3", Any), ("1/2/3", Any)] },
    Display { family: "one3two2", roles: &[("11/22/3", AtLeast(2)), ("1/3", Any)] },
    Display { family: "one3two2", roles: &[("1/2/3", Any), ("1/2", Any), ("1/3", Any)] },
    Display { family: "one3three2", roles: &[("112/233", Exactly(2)), ("1/2/3", Any)] },
    Display { family: "one3three2", roles: &[("1112/2233/3", Exactly(3))] },
    Display { family: "four2grps", roles: &[("11/23", Any), ("11/23", Any)] },
    Display { family: "four2grps", roles: &[("11/23", Any), ("1/2", Any), ("1/3", Any)] },
    Display { family: "four2sings", roles: &[("1/2", Any), ("1/3", Any), ("1/2", Any), ("1/3", Any)] },
    Display { family: "four2sings", roles: &[("1/2", Any), ("1/3", Any), ("1/3", Any), ("1/2", Any)] },
    Display { family: "five2", roles: &[("1121/2332", Exactly(3)), ("1/3", Any)] },
    Display { family: "five2", roles: &[("112/233", Exactly(2)), ("1/2", Any), ("1/3", Any)] },
    Display { family: "six2", roles: &[("112/233", Exactly(2)), ("112/233", Exactly(2))] },
    Display { family: "six2", roles: &[("112112/233233", Exactly(4))] },
];

const DEGREE4: &[Display] = &[
    Display { family: "quartic3", roles: &[("111223/233444", Exactly(3))] },
    Display { family: "quartic21", roles: &[("1122/3344", Exactly(2)), ("13/24", Exactly(1))] },
    Display { family: "quartic111", roles: &[("12/34", Exactly(1)), ("12/34", Exactly(1)), ("13/24", Exactly(1))] },
];

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub shape: NPartition,
    pub family: String,
    pub fillings: Vec<TabloidFilling>,
}

impl CatalogEntry {
    pub fn multiplicity(&self) -> usize {
        self.fillings.len()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Catalog {
    pub degree: usize,
    /// The format sorted decreasingly; every tabloid refers to it.
    pub d: Vec<usize>,
    /// `d[k]` is the caller's factor `perm[k]`.
    pub perm: Vec<usize>,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn generator_count(&self) -> usize {
        self.entries.iter().map(CatalogEntry::multiplicity).sum()
    }
}

fn parse_columns(s: &str) -> Vec<Vec<u8>> {
    let rows: Vec<Vec<u8>> = s.split('/').map(|r| r.bytes().map(|b| b - b'0').collect()).collect();
    let w = rows[0].len();
    (0..w).map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect()).collect()
}

fn profile(s: &str) -> Vec<usize> {
    parse_columns(s).iter().map(Vec::len).collect()
}

fn instantiate(display: &Display, d: &[usize], r: usize) -> Vec<TabloidFilling> {
    let n = d.len();
    let k = display.roles.len();
    let mut out = Vec::new();
    for assign in (0..n).permutations(k) {
        if display.roles.iter().zip(&assign).any(|((_, c), &j)| !c.holds(d[j])) {
            continue;
        }
        // interchangeable roles are placed in increasing factor order
        let ordered = (0..k).tuple_combinations().all(|(x, y)| {
            let (rx, ry) = (&display.roles[x], &display.roles[y]);
            rx.1 != ry.1 || profile(rx.0) != profile(ry.0) || assign[x] < assign[y]
        });
        if !ordered {
            continue;
        }
        let mut big = vec![Vec::new(); n];
        for ((s, _), &j) in display.roles.iter().zip(&assign) {
            big[j] = parse_columns(s);
        }
        if let Ok(f) = TabloidFilling::from_big_columns(d, r, big) {
            out.push(f);
        }
    }
    out
}

/// The generators of degree 2, 3 or 4 for format `d`, up to the tabloid
/// equivalences, grouped by shape.
pub fn generators_catalog(d: &[usize], degree: usize) -> Result<Catalog> {
    if d.is_empty() || d.contains(&0) {
        return Err(Error::Invalid(format!("format {d:?} must be nonempty and positive")));
    }
    let mut perm: Vec<usize> = (0..d.len()).collect();
    perm.sort_by_key(|&j| (std::cmp::Reverse(d[j]), j));
    let ds: Vec<usize> = perm.iter().map(|&j| d[j]).collect();
    let mut found: Vec<(String, TabloidFilling)> = Vec::new();
    match degree {
        2 => {
            for es in ds.iter().map(|&dj| 0..=dj).multi_cartesian_product() {
                let e: usize = es.iter().sum();
                if e > 2 && e % 2 == 0 {
                    let big = es.iter().map(|&k| vec![vec![1, 2]; k]).collect();
                    found.push(("rich2".into(), TabloidFilling::from_big_columns(&ds, 2, big)?));
                }
            }
        }
        3 | 4 => {
            let displays = if degree == 3 { DEGREE3 } else { DEGREE4 };
            for disp in displays {
                for f in instantiate(disp, &ds, degree) {
                    found.push((disp.family.to_string(), f));
                }
            }
        }
        _ => return Err(Error::Invalid(format!("degree {degree} is not one of 2, 3, 4"))),
    }
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut keys: Vec<(NPartition, Vec<Vec<Vec<u8>>>)> = Vec::new();
    for (family, f) in found {
        let key = (f.shape(), f.canonical_key(false));
        if keys.contains(&key) {
            continue;
        }
        keys.push(key);
        match entries.iter_mut().find(|e| e.shape == f.shape()) {
            Some(e) => e.fillings.push(f),
            None => entries.push(CatalogEntry { shape: f.shape(), family, fillings: vec![f] }),
        }
    }
    entries.sort_by(|a, b| b.shape.cmp(&a.shape));
    Ok(Catalog { degree, d: ds, perm, entries })
}
