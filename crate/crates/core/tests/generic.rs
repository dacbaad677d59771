use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use tangential::exactalg::{int, rat};
use tangential::generic::*;
use tangential::symfun::NPartition;

fn shape(c: &[&[usize]]) -> NPartition {
    NPartition::from_parts(c).unwrap()
}

fn random_block<R: Rng>(d: &[usize], r: usize, offset: u32, rng: &mut R) -> Block {
    let mut rows = vec![vec![Vec::new(); d.len()]; r];
    for (j, &dj) in d.iter().enumerate() {
        let mut labels: Vec<Label> = (1..=(r * dj) as u32).map(|l| l + offset).collect();
        labels.shuffle(rng);
        for (i, row) in rows.iter_mut().enumerate() {
            row[j] = labels[i * dj..(i + 1) * dj].to_vec();
        }
    }
    Block::new(rows)
}

fn tb(top: &[&[Label]], bottom: &[&[Label]]) -> TargetBlock {
    TargetBlock::new(top.iter().map(|s| s.to_vec()).collect(), bottom.iter().map(|s| s.to_vec()).collect())
}

#[test]
fn unit_and_products() {
    let z = FormalSum::single(Block::new(vec![vec![vec![1, 2], vec![1]]]));
    let one = FormalSum::single(Block::unit());
    assert_eq!(multiply(&z, &one).unwrap(), z);
    let w = FormalSum::single(Block::new(vec![vec![vec![3, 4], vec![2]]]));
    let zw = multiply(&z, &w).unwrap();
    assert_eq!(zw, FormalSum::single(Block::new(vec![vec![vec![1, 2], vec![1]], vec![vec![3, 4], vec![2]]])));
    assert!(multiply(&z, &z).is_err());

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let x = FormalSum::single(random_block(&[2, 1], 2, 0, &mut rng));
        let y = FormalSum::single(random_block(&[2, 1], 1, 10, &mut rng));
        assert_eq!(multiply(&x, &y).unwrap(), multiply(&y, &x).unwrap());
    }
}

#[test]
fn segre_block_moves_one_index_per_row() {
    // Indices repeat in this monomial, so give every occurrence its own label
    // and read indices back afterwards.
    let idx = [[1, 1, 2, 3], [1, 2, 1, 2], [2, 3, 2, 1]];
    let block = Block::new(
        (0..3).map(|i| (0..4).map(|j| vec![(10 * i + j) as Label]).collect()).collect(),
    );
    let index_of = |j: usize, l: Label| -> Label { idx[(l / 10) as usize][j] };
    let image = pi_generic(&FormalSum::single(block), &[2, 0, 0, 1]).unwrap();
    let mut concrete: FormalSum<TargetBlock> = FormalSum::zero();
    for (t, c) in image.iter() {
        concrete.add_term(t.relabel(index_of), c.clone());
    }
    let mut expected = FormalSum::zero();
    for t in [
        tb(&[&[2], &[1, 2, 3], &[1, 2, 2], &[2, 3]], &[&[1, 1], &[], &[], &[1]]),
        tb(&[&[1], &[1, 2, 3], &[1, 2, 2], &[1, 3]], &[&[1, 2], &[], &[], &[2]]),
        tb(&[&[1], &[1, 2, 3], &[1, 2, 2], &[1, 2]], &[&[1, 2], &[], &[], &[3]]),
    ] {
        expected.add_term(t, int(1));
    }
    assert_eq!(concrete, expected);
}

#[test]
fn generic_labels_give_six_targets() {
    let block = Block::new(vec![
        vec![vec![1], vec![1], vec![3, 6]],
        vec![vec![3], vec![2], vec![1, 5]],
        vec![vec![2], vec![3], vec![2, 4]],
    ]);
    let image = pi_generic(&FormalSum::single(block), &[2, 0, 1]).unwrap();
    let mut expected = FormalSum::zero();
    for t in [
        tb(&[&[2], &[1, 2, 3], &[1, 2, 3, 5, 6]], &[&[1, 3], &[], &[4]]),
        tb(&[&[2], &[1, 2, 3], &[1, 3, 4, 5, 6]], &[&[1, 3], &[], &[2]]),
        tb(&[&[3], &[1, 2, 3], &[1, 2, 3, 4, 6]], &[&[1, 2], &[], &[5]]),
        tb(&[&[3], &[1, 2, 3], &[2, 3, 4, 5, 6]], &[&[1, 2], &[], &[1]]),
        tb(&[&[1], &[1, 2, 3], &[1, 2, 3, 4, 5]], &[&[2, 3], &[], &[6]]),
        tb(&[&[1], &[1, 2, 3], &[1, 2, 4, 5, 6]], &[&[2, 3], &[], &[3]]),
    ] {
        expected.add_term(t, int(1));
    }
    assert_eq!(image, expected);
}

#[test]
fn veronese_linear_form_has_one_target_per_label() {
    let image = pi_generic(&FormalSum::single(Block::new(vec![vec![vec![1, 2, 3, 4]]])), &[1]).unwrap();
    assert_eq!(image.len(), 4);
    assert!(image.iter().all(|(t, c)| t.bottom[0].len() == 1 && *c == int(1)));
    assert!(pi_generic(&FormalSum::single(Block::new(vec![vec![vec![1, 2]]])), &[2]).is_err());
}

#[test]
fn canonical_form_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let b = random_block(&[2, 1, 3], 3, 0, &mut rng);
        assert_eq!(b.canonical().canonical(), b.canonical());
        b.validate(&[2, 1, 3]).unwrap();
    }
}

fn pi_of_product(x: &FormalSum<Block>, rx: usize, y: &FormalSum<Block>, a: &[usize]) -> FormalSum<TargetBlock> {
    let mut out = FormalSum::zero();
    for ax in compositions(rx, a.len()) {
        if ax.iter().zip(a).any(|(p, q)| p > q) {
            continue;
        }
        let ay: Vec<usize> = a.iter().zip(&ax).map(|(p, q)| p - q).collect();
        out.add(&multiply_targets(&pi_generic(x, &ax).unwrap(), &pi_generic(y, &ay).unwrap()));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pi_is_an_algebra_map(seed in any::<u64>(), rx in 1usize..3, ry in 1usize..3, which in 0usize..3) {
        let d: &[usize] = [&[1usize, 1][..], &[2][..], &[2, 1][..]][which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = FormalSum::single(random_block(d, rx, 0, &mut rng));
        let y = FormalSum::single(random_block(d, ry, 100, &mut rng));
        let xy = multiply(&x, &y).unwrap();
        for a in compositions(rx + ry, d.len()) {
            prop_assert_eq!(pi_generic(&xy, &a).unwrap(), pi_of_product(&x, rx, &y, &a));
        }
    }

    #[test]
    fn pi_commutes_with_relabeling(seed in any::<u64>(), r in 1usize..4) {
        let d = [2usize, 1];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = FormalSum::single(random_block(&d, r, 0, &mut rng));
        let perms: Vec<Vec<Label>> = d.iter().map(|&dj| {
            let mut p: Vec<Label> = (1..=(r * dj) as Label).map(|l| l + 50).collect();
            p.shuffle(&mut rng);
            p
        }).collect();
        let sigma = |j: usize, l: Label| perms[j][l as usize - 1];
        let sx = x.map_keys(|b| b.relabel(sigma));
        for a in compositions(r, 2) {
            let lhs = pi_generic(&sx, &a).unwrap();
            let rhs = pi_generic(&x, &a).unwrap().map_keys(|t| t.relabel(sigma));
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn small_symmetrizers() {
    let single_column = TabloidFilling::parse(&[1], 2, "1/2").unwrap();
    assert!(symmetrize(&single_column).unwrap().is_zero());
    let one_row = TabloidFilling::parse(&[1], 2, "12").unwrap();
    let t = Tableau::canonical(&one_row.shape());
    let labeled = symmetrize(&one_row).unwrap().expand(&t).unwrap();
    assert_eq!(labeled, FormalSum::single(Block::new(vec![vec![vec![1]], vec![vec![2]]])).scaled(&int(2)));
}

fn random_shapes() -> Vec<(Vec<usize>, usize, NPartition)> {
    vec![
        (vec![2], 3, shape(&[&[4, 2]])),
        (vec![2], 3, shape(&[&[3, 3]])),
        (vec![1, 1, 1], 3, shape(&[&[2, 1], &[2, 1], &[2, 1]])),
        (vec![2, 1], 3, shape(&[&[3, 3], &[2, 1]])),
        (vec![1, 1], 4, shape(&[&[2, 2], &[2, 1, 1]])),
        (vec![3], 2, shape(&[&[4, 2]])),
        (vec![1, 1, 1], 4, shape(&[&[2, 2], &[2, 2], &[3, 1]])),
    ]
}

#[test]
fn compressed_symmetrizer_matches_labeled_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (d, r, sh) in random_shapes() {
        let t = Tableau::canonical(&sh);
        for _ in 0..4 {
            let f = TabloidFilling::random(&d, r, &sh, &mut rng).unwrap();
            let labeled = symmetrize_labeled(&f, &t, SymmetrizerOrder::ColumnsFirst).unwrap();
            assert_eq!(symmetrize(&f).unwrap().expand(&t).unwrap(), labeled, "{f}");
        }
    }
}

#[test]
fn rows_first_order_breaks_the_column_sign_rule() {
    // The other composition order is not antisymmetric in a column at a
    // fixed tableau, which is why the columns act first.
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut broken = 0;
    for (d, r, sh) in random_shapes().into_iter().filter(|(_, r, _)| *r <= 3) {
        let t = Tableau::canonical(&sh);
        for _ in 0..5 {
            let Relation::ColumnSwap { filling, factor, column, .. } = Relation::random(0, &d, r, &sh, &mut rng).unwrap() else {
                unreachable!()
            };
            let mut cols: Vec<Vec<Vec<u8>>> = (0..filling.n()).map(|j| filling.columns(j)).collect();
            cols[factor][column].swap(0, 1);
            let swapped = filling.with_columns(cols).unwrap();
            for order in [SymmetrizerOrder::ColumnsFirst, SymmetrizerOrder::RowsFirst] {
                let x = symmetrize_labeled(&filling, &t, order).unwrap();
                let y = symmetrize_labeled(&swapped, &t, order).unwrap();
                let antisymmetric = y == x.scaled(&int(-1));
                match order {
                    SymmetrizerOrder::ColumnsFirst => assert!(antisymmetric, "{filling}"),
                    SymmetrizerOrder::RowsFirst => broken += usize::from(!antisymmetric),
                }
            }
        }
    }
    assert!(broken > 0);
}

#[test]
fn straightening_identities_hold() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut counts = [0usize; 4];
    for (d, r, sh) in random_shapes() {
        for kind in 0..4u8 {
            for _ in 0..10 {
                let Ok(rel) = Relation::random(kind, &d, r, &sh, &mut rng) else { break };
                assert!(straighten_check(&rel).unwrap(), "{rel:?}");
                counts[kind as usize] += 1;
            }
        }
    }
    assert!(counts.iter().all(|&c| c >= 20), "{counts:?}");
}

#[test]
fn repeated_entry_vanishes_and_malformed_relations_error() {
    let f = TabloidFilling::parse(&[2], 2, "12/12").unwrap();
    assert!(straighten_check(&Relation::RepeatedEntry { filling: f.clone() }).unwrap());
    let ok = TabloidFilling::parse(&[2], 2, "11/22").unwrap();
    assert!(straighten_check(&Relation::RepeatedEntry { filling: ok.clone() }).is_err());
    assert!(straighten_check(&Relation::ColumnSwap { filling: ok.clone(), factor: 0, column: 0, i: 0, k: 0 }).is_err());
    assert!(straighten_check(&Relation::Shuffle { filling: ok, factor: 0, c1: 0, c2: 0 }).is_err());
}

#[test]
fn tabloid_equivalences_preserve_the_covariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for (d, r, sh) in random_shapes().into_iter().filter(|(_, r, _)| *r <= 3) {
        for _ in 0..4 {
            let f = TabloidFilling::random(&d, r, &sh, &mut rng).unwrap();
            let base = symmetrize(&f).unwrap();
            let mut sigma: Vec<u8> = (1..=r as u8).collect();
            sigma.shuffle(&mut rng);
            assert_eq!(symmetrize(&f.relabel(&sigma)).unwrap(), base);
            let mut cols: Vec<Vec<Vec<u8>>> = (0..f.n()).map(|j| f.columns(j)).collect();
            for c in cols.iter_mut() {
                c.reverse();
                c.sort_by_key(|col| std::cmp::Reverse(col.len()));
            }
            assert_eq!(symmetrize(&f.with_columns(cols).unwrap()).unwrap(), base);
        }
    }
}

#[test]
fn three_row_components_lie_in_the_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let cases = [
        (vec![2usize], 3usize, shape(&[&[2, 2, 2]])),
        (vec![1, 1], 3, shape(&[&[1, 1, 1], &[2, 1]])),
        (vec![1, 1, 1], 3, shape(&[&[1, 1, 1], &[2, 1], &[3]])),
        (vec![3], 3, shape(&[&[5, 2, 2]])),
        (vec![2, 1], 4, shape(&[&[4, 2, 2], &[2, 1, 1]])),
    ];
    for (d, r, sh) in cases {
        for _ in 0..3 {
            let f = TabloidFilling::random(&d, r, &sh, &mut rng).unwrap();
            for a in compositions(r, d.len()) {
                assert!(pi_on_tabloid(&f, &a).unwrap().is_zero(), "{f} {a:?}");
            }
        }
    }
}

#[test]
fn triangles_vanish() {
    // every coloring of the three edges of a triangle that a format allows
    let mut seen = 0;
    for d in [vec![1usize, 1, 1], vec![2, 1], vec![2], vec![3], vec![2, 2]] {
        let n = d.len();
        for colors in itertools::Itertools::multi_cartesian_product((0..3).map(|_| 0..n)) {
            let mut big = vec![Vec::new(); n];
            for (e, &c) in [[1u8, 2], [2, 3], [3, 1]].iter().zip(&colors) {
                big[c].push(e.to_vec());
            }
            let Ok(f) = TabloidFilling::from_big_columns(&d, 3, big) else { continue };
            assert!(symmetrize(&f).unwrap().is_zero(), "{f}");
            seen += 1;
        }
    }
    assert!(seen > 10);
}

#[test]
fn witness_tabloid_value() {
    let f = TabloidFilling::parse(&[1, 2, 1], 8, "135678/24 x 513512347788/6246 x 1234568/7").unwrap();
    let a = [3, 4, 1];
    let image = pi_on_tabloid(&f, &a).unwrap();
    let target = target_covariant(&TargetFilling::ones_then_twos(&f.shape(), &a).unwrap()).unwrap();
    assert_eq!(image.ratio_to(&target), Some(int(-8)));
}

#[test]
fn pi_on_tabloid_agrees_with_labeled_route() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for (d, r, sh) in random_shapes().into_iter().filter(|(_, r, _)| *r <= 3) {
        let t = Tableau::canonical(&sh);
        let row_of = t.row_of();
        for _ in 0..3 {
            let f = TabloidFilling::random(&d, r, &sh, &mut rng).unwrap();
            let labeled = symmetrize(&f).unwrap().expand(&t).unwrap();
            for a in compositions(r, d.len()) {
                let full = pi_generic(&labeled, &a).unwrap();
                let fast = pi_on_tabloid(&f, &a).unwrap();
                // compress the labeled image to orbit keys and compare coefficients
                let mut keys = BTreeSet::new();
                for (tb, c) in full.iter() {
                    let key: TargetPattern = tb
                        .top
                        .iter()
                        .zip(&tb.bottom)
                        .enumerate()
                        .map(|(j, (x, y))| {
                            let m = |s: &Vec<Label>| {
                                let mut v: Vec<u8> = s.iter().map(|l| row_of[j][l]).collect();
                                v.sort();
                                v
                            };
                            (m(x), m(y))
                        })
                        .collect();
                    assert_eq!(fast.terms.get(&key), *c, "{f} {a:?}");
                    keys.insert(key);
                }
                assert_eq!(keys.len(), fast.terms.len());
            }
        }
    }
}

#[test]
fn formal_sums_serialize_with_text_coefficients() {
    let mut s = FormalSum::zero();
    s.add_term(Block::new(vec![vec![vec![1]]]), rat(3, 2));
    let json = serde_json::to_string(&s).unwrap();
    assert!(json.contains("\"3/2\""), "{json}");
}

fn target(a: &[usize], text: &str) -> TargetCovariant {
    let rows = text
        .split('x')
        .map(|f| f.trim().split('/').map(|row| row.bytes().map(|b| b - b'0').collect()).collect())
        .collect();
    target_covariant(&TargetFilling::new(a.to_vec(), rows).unwrap()).unwrap()
}

#[test]
fn tabloid_image_is_the_six_listed_target_tabloids() {
    let f = TabloidFilling::parse(&[1, 1, 2], 3, "13/2 x 12/3 x 2313/21").unwrap();
    let t = Tableau::canonical(&f.shape());
    let m = Block::new(vec![
        vec![vec![1], vec![1], vec![3, 6]],
        vec![vec![3], vec![2], vec![1, 5]],
        vec![vec![2], vec![3], vec![2, 4]],
    ]);
    assert_eq!(tabloid_block(&f, &t), m);

    let a = [2, 0, 1];
    let mut sum = FormalSum::zero();
    for text in [
        "21/2 x 11/1 x 1112/11",
        "21/2 x 11/1 x 1211/11",
        "22/1 x 11/1 x 1111/21",
        "22/1 x 11/1 x 2111/11",
        "12/2 x 11/1 x 1111/12",
        "12/2 x 11/1 x 1121/11",
    ] {
        sum.add(&target(&a, text).terms);
    }
    assert_eq!(pi_on_tabloid(&f, &a).unwrap().terms, sum);
}
