use std::collections::BTreeSet;
use tangential::error::Error;
use tangential::exactalg::{int, Rational};
use tangential::generic::*;
use tangential::graphs::*;
use tangential::symfun::NPartition;

fn e(u: u8, v: u8, c: usize) -> Edge {
    Edge { u, v, color: c - 1 }
}

fn np(parts: &[&[usize]]) -> NPartition {
    NPartition::from_parts(parts).unwrap()
}

#[test]
fn mcb_example_graph() {
    let f = TabloidFilling::parse(&[1, 1, 1], 7, "35167/24 x 312756/4 x 15374/26").unwrap();
    let g = ColoredGraph::from_tabloid(&f).unwrap();
    assert_eq!(g.shape(), np(&[&[5, 2], &[6, 1], &[5, 2]]));
    let c = g.classify();
    assert_eq!(c.mcb, Some((3, 3)));
    assert!(!c.rich && !c.has_triangle && !c.has_odd_cycle);
    // already canonically oriented: every edge ends in {2, 4, 6}
    assert_eq!(g.canonical_orientation().unwrap(), g);
    assert_eq!(g.reversed().classify().mcb, Some((3, 3)));
    assert!(symmetrize(&f).unwrap().is_zero());
}

#[test]
fn small_classifications() {
    let rich = ColoredGraph::new(3, vec![2, 2], vec![e(1, 2, 1), e(2, 3, 1), e(1, 3, 2), e(1, 2, 2)]).unwrap();
    assert!(rich.classify().rich);
    let tri = ColoredGraph::new(3, vec![1, 1, 1], vec![e(1, 2, 1), e(2, 3, 2), e(3, 1, 3)]).unwrap();
    let c = tri.classify();
    assert!(c.has_triangle && c.has_odd_cycle && !c.rich && c.mcb.is_none());
    let empty = ColoredGraph::edgeless(3, vec![2]);
    assert_eq!(empty.classify().mcb, Some((1, 0)));
    let path = ColoredGraph::new(4, vec![1, 1], vec![e(1, 2, 1), e(2, 3, 2)]).unwrap();
    assert_eq!(path.classify().mcb, Some((2, 1)));
    let two_components = ColoredGraph::new(4, vec![1], vec![e(1, 2, 1), e(3, 4, 1)]).unwrap();
    assert_eq!(two_components.classify().mcb, None);
}

#[test]
fn inadmissible_graph_names_vertex_and_color() {
    let err = ColoredGraph::new(2, vec![2], vec![e(1, 2, 1); 3]).unwrap_err();
    assert!(matches!(err, Error::Inadmissible { vertex: 1, color: 1, count: 3, limit: 2 }), "{err:?}");
}

#[test]
fn graph_and_tabloid_correspond() {
    let g = ColoredGraph::new(3, vec![1, 1, 2], vec![e(1, 2, 1), e(1, 3, 2), e(2, 2, 3), e(3, 1, 3)]).unwrap();
    let f = TabloidFilling::parse(&[1, 1, 2], 3, "13/2 x 12/3 x 2313/21").unwrap();
    assert_eq!(g.to_tabloid().unwrap().canonical_key(true), f.canonical_key(true));
    assert!(ColoredGraph::from_tabloid(&f).unwrap().isomorphic(&g, true));
    assert!(g.classify().has_odd_cycle);

    let empty = ColoredGraph::edgeless(2, vec![1]);
    assert_eq!(empty.to_tabloid().unwrap().shape(), np(&[&[2]]));
    let one = ColoredGraph::new(2, vec![1], vec![e(1, 2, 1)]).unwrap();
    assert_eq!(one.to_tabloid().unwrap().columns(0), vec![vec![1, 2]]);
    let three_rows = TabloidFilling::parse(&[1], 3, "1/2/3").unwrap();
    assert!(ColoredGraph::from_tabloid(&three_rows).is_err());
}

#[test]
fn round_trip_over_all_small_graphs() {
    for d in [vec![2usize, 1], vec![1, 1, 1]] {
        for g in admissible_graphs(4, &d, false) {
            let back = ColoredGraph::from_tabloid(&g.to_tabloid().unwrap()).unwrap();
            assert!(back.isomorphic(&g, true));
            assert_eq!(back.shape(), g.shape());
        }
    }
}

#[test]
fn reversing_an_edge_flips_the_covariant() {
    for d in [vec![2usize], vec![1, 1], vec![2, 1], vec![1, 1, 1]] {
        for r in 2..=3 {
            for g in admissible_graphs(r, &d, true) {
                assert_eq!(g.classify().mcb, g.reversed().classify().mcb);
                let x = symmetrize(&g.to_tabloid().unwrap()).unwrap();
                let y = symmetrize(&g.reversed().to_tabloid().unwrap()).unwrap();
                let sign = if g.edges.len() % 2 == 0 { 1 } else { -1 };
                assert_eq!(y.terms, x.terms.scaled(&int(sign)), "{}", to_dsl(&g));
            }
        }
    }
}

#[test]
fn mcb_existence_examples() {
    let d = [1usize, 1];
    assert!(mcb_exists(&np(&[&[3], &[3]]), (1, 0), &d, 3));
    // f = 3 with d = (1): three edges of one color need b ≥ 3
    let lam = np(&[&[3, 3]]);
    assert!(!mcb_exists(&lam, (4, 2), &[1], 6));
    // e = 2f − 2: two parallel classes of one color
    assert!(!mcb_exists(&np(&[&[2, 2]]), (2, 2), &[1], 4));
}

#[test]
fn mcb_existence_matches_enumeration() {
    for d in [vec![1usize], vec![2], vec![1, 1], vec![2, 1], vec![2, 2], vec![1, 1, 1], vec![2, 1, 1]] {
        for r in 1..=5 {
            let mut realized = BTreeSet::new();
            for g in admissible_graphs(r, &d, false) {
                if let Some(t) = g.classify().mcb {
                    realized.insert((g.shape(), t));
                }
            }
            for lam in NPartition::all(r, &d, 2) {
                for a in 0..=r {
                    for b in 0..=a.min(r - a) {
                        let expected = realized.contains(&(lam.clone(), (a, b)));
                        assert_eq!(mcb_exists(&lam, (a, b), &d, r), expected, "d={d:?} r={r} {lam} ({a},{b})");
                    }
                }
            }
        }
    }
}

#[test]
fn odd_balanced_mcb_graphs_reduce_to_triangles() {
    // Exactly zero in almost every case; otherwise a combination of
    // same-shape graphs containing a triangle.
    let mut exact_zero = 0;
    let mut via_triangles = 0;
    for d in [vec![1usize], vec![2], vec![3], vec![1, 1], vec![2, 1], vec![1, 1, 1], vec![2, 2]] {
        for r in 2..=4 {
            let all = admissible_graphs(r, &d, false);
            for g in admissible_graphs(r, &d, true) {
                let Some((a, b)) = g.classify().mcb else { continue };
                if a != b || g.edges.len() % 2 == 0 {
                    continue;
                }
                let cov = symmetrize(&g.to_tabloid().unwrap()).unwrap();
                if cov.is_zero() {
                    exact_zero += 1;
                    continue;
                }
                let tri: Vec<Covariant> = all
                    .iter()
                    .filter(|h| h.shape() == g.shape() && h.classify().has_triangle)
                    .map(|h| symmetrize(&h.to_tabloid().unwrap()).unwrap())
                    .collect();
                assert!(covariant_in_span(&cov, &tri).unwrap(), "{}", to_dsl(&g));
                via_triangles += 1;
            }
        }
    }
    assert!(exact_zero > 50);
    assert_eq!(via_triangles, 8);
}

#[test]
fn rich_graphs_lie_in_the_kernel() {
    for d in [vec![1usize], vec![2], vec![3], vec![1, 1], vec![2, 1], vec![1, 1, 1], vec![2, 2]] {
        for r in 2..=4 {
            for g in admissible_graphs(r, &d, true).into_iter().filter(|g| g.classify().rich) {
                let f = g.to_tabloid().unwrap();
                for a in compositions(r, d.len()) {
                    assert!(pi_on_tabloid(&f, &a).unwrap().is_zero(), "{} {a:?}", to_dsl(&g));
                }
            }
        }
    }
}

fn witness_ratio(lam: &NPartition, r: usize, d: &[usize]) -> Option<Rational> {
    let (t, a) = witness_tabloid(lam, r, d).unwrap();
    let image = pi_on_tabloid(&t, &a).unwrap();
    let target = target_covariant(&TargetFilling::ones_then_twos(&t.shape(), &a).unwrap()).unwrap();
    image.ratio_to(&target)
}

#[test]
fn witness_tabloid_examples() {
    let lam = np(&[&[6, 2], &[12, 4], &[7, 1]]);
    let (t, a) = witness_tabloid(&lam, 8, &[1, 2, 1]).unwrap();
    let expected = TabloidFilling::parse(&[1, 2, 1], 8, "135678/24 x 513512347788/6246 x 1234568/7").unwrap();
    assert_eq!(t.canonical_key(true), expected.canonical_key(true));
    assert_eq!(a, vec![3, 4, 1]);
    assert_eq!(witness_ratio(&lam, 8, &[1, 2, 1]), Some(int(-8)));

    let flat = np(&[&[6]]);
    let (t, _) = witness_tabloid(&flat, 3, &[2]).unwrap();
    assert!(t.columns(0).iter().all(|c| c.len() == 1));

    let lam = np(&[&[1, 1], &[1, 1], &[2]]);
    let (t, _) = witness_tabloid(&lam, 2, &[1, 1, 1]).unwrap();
    assert_eq!((t.columns(0), t.columns(1)), (vec![vec![1, 2]], vec![vec![1, 2]]));
    assert!(witness_ratio(&lam, 2, &[1, 1, 1]).is_some());

    assert!(witness_tabloid(&np(&[&[2, 2]]), 4, &[1]).is_err());
}

#[test]
fn witness_scalar_law() {
    let cases: Vec<(Vec<usize>, usize, Vec<usize>)> = vec![
        (vec![1, 2, 1], 8, vec![2, 4, 1]),
        (vec![1, 1, 1], 2, vec![1, 1, 0]),
        (vec![2], 3, vec![2]),
        (vec![3], 4, vec![3]),
        (vec![1, 1], 4, vec![2, 2]),
        (vec![2, 1], 4, vec![2, 1]),
        (vec![1, 1, 1], 4, vec![1, 1, 1]),
        (vec![2, 2], 5, vec![2, 2]),
        (vec![2], 4, vec![0]),
        (vec![1, 2], 6, vec![2, 3]),
        (vec![2, 1, 1], 5, vec![1, 2, 2]),
    ];
    for (d, r, twos) in cases {
        let comps: Vec<Vec<usize>> = d.iter().zip(&twos).map(|(&dj, &t)| vec![r * dj - t, t]).collect();
        let lam = NPartition::new(comps.into_iter().map(tangential::symfun::Partition::from_unsorted).collect());
        let (e, m) = (lam.e(), lam.e() / 2);
        let expected = int(2i64.pow(m as u32) * (-1i64).pow(m as u32) * (d[0] as i64).pow((r - e) as u32));
        assert_eq!(witness_ratio(&lam, r, &d), Some(expected), "d={d:?} r={r} {lam}");
    }
}

fn keys(d: &[usize], r: usize, texts: &[&str]) -> BTreeSet<(NPartition, Vec<Vec<Vec<u8>>>)> {
    texts
        .iter()
        .map(|t| {
            let f = TabloidFilling::parse(d, r, t).unwrap();
            (f.shape(), f.canonical_key(false))
        })
        .collect()
}

fn catalog_keys(c: &Catalog) -> BTreeSet<(NPartition, Vec<Vec<Vec<u8>>>)> {
    c.entries.iter().flat_map(|e| e.fillings.iter().map(|f| (f.shape(), f.canonical_key(false)))).collect()
}

fn check(d: &[usize], degree: usize, texts: &[&str]) {
    let c = generators_catalog(d, degree).unwrap();
    assert_eq!(catalog_keys(&c), keys(d, degree, texts), "d={d:?} degree {degree}");
    assert_eq!(c.generator_count(), texts.len(), "d={d:?} degree {degree}");
}

fn place(n: usize, parts: &[(usize, &str)]) -> String {
    let mut v = vec![""; n];
    for &(j, s) in parts {
        v[j] = s;
    }
    v.join(" x ")
}

#[test]
fn catalogs_for_one_factor() {
    check(&[3], 2, &[]);
    check(&[3], 3, &["11/22/33", "1112/2233/3"]);
    check(&[3], 4, &["111223/233444"]);
    check(&[4], 2, &["1111/2222"]);
    check(&[4], 3, &["11/22/33", "112112/233233"]);
    check(&[4], 4, &[]);
    check(&[2], 2, &[]);
    check(&[2], 4, &[]);
}

#[test]
fn catalogs_for_two_factors() {
    check(&[2, 1], 2, &[]);
    check(&[2, 1], 3, &["11/22/33 x ", "1/2/3 x 1/2/3", "11/22/3 x 1/3", "112/233 x 1/2/3"]);
    check(&[2, 1], 4, &["1122/3344 x 13/24"]);
    check(&[2, 2], 2, &["11/22 x 11/22"]);
    check(
        &[2, 2],
        3,
        &[
            "11/22/33 x ",
            " x 11/22/33",
            "1/2/3 x 1/2/3",
            "11/22/3 x 1/3",
            "1/3 x 11/22/3",
            "112/233 x 1/2/3",
            "1/2/3 x 112/233",
            "11/23 x 11/23",
            "112/233 x 112/233",
        ],
    );
    check(&[2, 2], 4, &[]);
    // matrices: only the 3×3 minors
    check(&[1, 1], 2, &[]);
    check(&[1, 1], 3, &["1/2/3 x 1/2/3"]);
    check(&[1, 1], 4, &[]);
}

#[test]
fn catalogs_for_three_and_four_factors() {
    check(&[1, 1, 1], 2, &[]);
    check(
        &[1, 1, 1],
        3,
        &["1/2/3 x 1/2/3 x ", "1/2/3 x x 1/2/3", " x 1/2/3 x 1/2/3", "1/2/3 x 1/2 x 1/3", "1/2 x 1/2/3 x 1/3", "1/2 x 1/3 x 1/2/3"],
    );
    check(&[1, 1, 1], 4, &["12/34 x 12/34 x 13/24"]);

    let n = 4;
    check(&[1, 1, 1, 1], 2, &["1/2 x 1/2 x 1/2 x 1/2"]);
    let mut deg3 = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            deg3.push(place(n, &[(i, "1/2/3"), (j, "1/2/3")]));
        }
    }
    for k in 0..n {
        let others: Vec<usize> = (0..n).filter(|&x| x != k).collect();
        for (x, &i) in others.iter().enumerate() {
            for &j in &others[x + 1..] {
                deg3.push(place(n, &[(k, "1/2/3"), (i, "1/2"), (j, "1/3")]));
            }
        }
    }
    deg3.push("1/2 x 1/3 x 1/2 x 1/3".into());
    deg3.push("1/2 x 1/3 x 1/3 x 1/2".into());
    check(&[1, 1, 1, 1], 3, &deg3.iter().map(String::as_str).collect::<Vec<_>>());
    let mut deg4 = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                deg4.push(place(n, &[(i, "12/34"), (j, "12/34"), (k, "13/24")]));
            }
        }
    }
    check(&[1, 1, 1, 1], 4, &deg4.iter().map(String::as_str).collect::<Vec<_>>());
}

#[test]
fn four_hook_shape_has_two_generators() {
    let c = generators_catalog(&[1, 1, 1, 1], 3).unwrap();
    let hooks = np(&[&[2, 1], &[2, 1], &[2, 1], &[2, 1]]);
    for entry in &c.entries {
        let expected = if entry.shape == hooks { 2 } else { 1 };
        assert_eq!(entry.multiplicity(), expected, "{}", entry.shape);
    }
    assert!(c.entries.iter().any(|e| e.shape == hooks));
}

#[test]
fn quartic_gate() {
    let has = |d: &[usize]| generators_catalog(d, 4).unwrap().generator_count() > 0;
    assert!(has(&[3]) && has(&[2, 1]) && has(&[1, 1, 1]) && has(&[3, 2]) && has(&[1, 2, 5]));
    assert!(!has(&[2]) && !has(&[4]) && !has(&[2, 2]) && !has(&[1, 1]) && !has(&[5, 4]));
}

#[test]
fn catalog_normalizes_the_format() {
    let c = generators_catalog(&[1, 2], 4).unwrap();
    assert_eq!(c.d, vec![2, 1]);
    assert_eq!(c.perm, vec![1, 0]);
    assert!(generators_catalog(&[1], 1).is_err());
    assert!(generators_catalog(&[1], 5).is_err());
}

#[test]
fn catalog_tabloids_are_nonzero_kernel_elements() {
    for d in [vec![3usize], vec![4], vec![2, 1], vec![1, 1, 1], vec![2, 2], vec![1, 1, 1, 1]] {
        for degree in 2..=4 {
            for entry in generators_catalog(&d, degree).unwrap().entries {
                for f in &entry.fillings {
                    if f.shape().max_rows() <= 2 {
                        let g = ColoredGraph::from_tabloid(f).unwrap();
                        assert_eq!(g.shape(), f.shape());
                    }
                    assert!(!symmetrize(f).unwrap().is_zero(), "{f}");
                    for a in compositions(degree, d.len()) {
                        assert!(pi_on_tabloid(f, &a).unwrap().is_zero(), "{f} {a:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn dsl_examples() {
    let g = parse_graph("r=2; 1-2:c1; 1-2:c1;", &[2]).unwrap();
    assert_eq!(g.edges, vec![e(1, 2, 1), e(1, 2, 1)]);
    let t = parse_graph("r=3;\n 1-2:c1;\n 2-3:c2;\n 3-1:c3;\n", &[1, 1, 1]).unwrap();
    assert!(t.classify().has_triangle);
    let err = parse_graph("r=2; 1-2:c1; 1-2:c1; 1-2:c1;", &[2]).unwrap_err();
    assert!(matches!(err, Error::Inadmissible { count: 3, limit: 2, .. }), "{err:?}");
    assert_eq!(parse_graph(&to_dsl(&t), &[1, 1, 1]).unwrap(), t);
}

#[test]
fn dsl_reports_positions() {
    let pos = |text: &str| match parse_graph(text, &[1, 1]) {
        Err(Error::Syntax { line, col, .. }) => (line, col),
        other => panic!("{other:?}"),
    };
    assert_eq!(pos("r=3;\n1-2:c1;\n2-x:c2;"), (3, 3));
    assert_eq!(pos("r=3; 1-2:c3;"), (1, 11));
    assert_eq!(pos("r=3; 1-4:c1;"), (1, 6));
    assert_eq!(pos("s=3;"), (1, 1));
    assert_eq!(pos("r=3; 1-2:c1"), (1, 12));
}

#[test]
fn canonical_form_identifies_relabelings() {
    let g = ColoredGraph::new(4, vec![1, 1], vec![e(1, 2, 1), e(2, 3, 2), e(3, 4, 1)]).unwrap();
    let h = ColoredGraph::new(4, vec![1, 1], vec![e(4, 1, 1), e(1, 3, 2), e(3, 2, 1)]).unwrap();
    assert!(g.isomorphic(&h, true));
    let k = ColoredGraph::new(4, vec![1, 1], vec![e(1, 2, 2), e(2, 3, 1), e(3, 4, 2)]).unwrap();
    assert!(!g.isomorphic(&k, false));
}
