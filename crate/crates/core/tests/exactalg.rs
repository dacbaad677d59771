use num_traits::Zero;
use proptest::prelude::*;
use tangential::exactalg::*;

fn m(rows: &[&[i64]]) -> SparseMatrix {
    let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    SparseMatrix::from_dense(&dense).unwrap()
}

fn check_kernel(a: &SparseMatrix) -> (usize, Vec<Vec<Rational>>) {
    let (rank, ker) = rank_and_kernel(a);
    assert_eq!(rank + ker.len(), a.cols());
    for k in &ker {
        assert!(a.mul_vec(k).unwrap().iter().all(Zero::is_zero));
    }
    if !ker.is_empty() {
        assert_eq!(rank_and_kernel(&SparseMatrix::from_dense(&ker).unwrap()).0, ker.len());
    }
    (rank, ker)
}

#[test]
fn small_cases() {
    assert_eq!(check_kernel(&m(&[&[1, 0], &[0, 1]])).0, 2);
    let (r, k) = check_kernel(&m(&[&[1, 2], &[2, 4]]));
    assert_eq!(r, 1);
    assert_eq!(k.len(), 1);
    // proportional to (2,-1)
    assert_eq!(&k[0][0] / &k[0][1], rat(-2, 1));
    let (r, k) = check_kernel(&SparseMatrix::zeros(3, 3));
    assert_eq!((r, k.len()), (0, 3));
    let (r, k) = check_kernel(&SparseMatrix::zeros(0, 2));
    assert_eq!((r, k.len()), (0, 2));
}

#[test]
fn span_membership() {
    let e = |i: usize, n: usize| (0..n).map(|j| int(i64::from(i == j))).collect::<Vec<_>>();
    assert!(in_span(&[int(0), int(0)], &[e(0, 2)]).unwrap());
    assert!(!in_span(&e(0, 2), &[e(1, 2)]).unwrap());
    assert!(in_span(&[int(1), int(1)], &[e(0, 2), e(1, 2)]).unwrap());
    assert!(!in_span(&[int(1)], &[]).unwrap());
    assert!(in_span(&[int(1)], &[e(0, 2)]).is_err());
}

#[test]
fn rational_text_forms() {
    assert_eq!(parse_rat("6/-4").unwrap(), rat(-3, 2));
    assert_eq!(fmt_rat(&rat(6, -4)), "-3/2");
    assert_eq!(fmt_rat(&int(0)), "0/1");
    assert!(parse_rat("1/0").is_err());
    assert!(parse_rat("x").is_err());
}

#[test]
fn dump_round_trip() {
    let a = SparseMatrix::from_triplets(3, 4, vec![(0, 1, rat(1, 2)), (2, 3, int(-7)), (0, 1, rat(1, 2))]).unwrap();
    let mut buf = Vec::new();
    a.write_dump(&mut buf).unwrap();
    assert_eq!(String::from_utf8(buf.clone()).unwrap(), "3 4 2\n0 1 1/1\n2 3 -7/1\n");
    assert_eq!(SparseMatrix::read_dump(&buf[..]).unwrap(), a);
    assert!(SparseMatrix::read_dump(&b"2 2 1\n"[..]).is_err());
    assert!(SparseMatrix::from_triplets(1, 1, vec![(1, 0, int(1))]).is_err());
}

#[test]
fn column_assembly_order_is_irrelevant() {
    let cols = vec![vec![(0, int(1)), (2, int(3))], vec![], vec![(1, int(5)), (0, int(-1))]];
    let mut rev: Vec<Vec<(usize, Rational)>> = cols.clone();
    for c in rev.iter_mut() {
        c.reverse();
    }
    assert_eq!(SparseMatrix::from_columns(3, cols).unwrap(), SparseMatrix::from_columns(3, rev).unwrap());
}

fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<(i64, i64)>>> {
    // sparse-ish entries with small numerators and denominators
    proptest::collection::vec(
        proptest::collection::vec(prop_oneof![3 => Just((0i64, 1i64)), 2 => (-9i64..=9, 1i64..=5)], cols),
        rows,
    )
}

fn build(v: &[Vec<(i64, i64)>]) -> SparseMatrix {
    let dense: Vec<Vec<Rational>> = v.iter().map(|r| r.iter().map(|&(a, b)| rat(a, b)).collect()).collect();
    SparseMatrix::from_dense(&dense).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn fraction_free_matches_naive(v in arb_matrix(10, 10)) {
        let a = build(&v);
        prop_assert_eq!(rank(&a), rank_naive(&a));
        check_kernel(&a);
    }

    #[test]
    fn rank_invariant_under_permutation_and_scaling(v in arb_matrix(6, 8), seed in any::<u64>()) {
        let a = build(&v);
        let mut rows: Vec<usize> = (0..6).collect();
        let mut cols: Vec<usize> = (0..8).collect();
        let mut s = seed;
        let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); (s >> 33) as usize };
        for i in (1..rows.len()).rev() { let j = next() % (i + 1); rows.swap(i, j); }
        for i in (1..cols.len()).rev() { let j = next() % (i + 1); cols.swap(i, j); }
        let scaled: Vec<Vec<Rational>> = rows
            .iter()
            .enumerate()
            .map(|(k, &i)| cols.iter().map(|&j| a.get(i, j) * rat(k as i64 + 2, 3)).collect())
            .collect();
        prop_assert_eq!(rank(&a), rank(&SparseMatrix::from_dense(&scaled).unwrap()));
    }

    #[test]
    fn kernel_rows_of_wide_matrices(v in arb_matrix(4, 9)) {
        check_kernel(&build(&v));
    }
}
