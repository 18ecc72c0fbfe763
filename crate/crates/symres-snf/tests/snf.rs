use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use symres_snf::*;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

// determinant by cofactor expansion; fine for the tiny sizes used here
fn det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
            .collect();
        let term = BigInt::from(m[0][j]) * det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

// invariant factors via determinantal divisors: d1...dk = gcd of all k x k minors
fn factors_by_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut divisors = vec![BigInt::from(1)];
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

#[test]
fn diagonal_two_three() {
    let m = IntMatrix::from_dense(&[vec![2, 0], vec![0, 3]]);
    assert_eq!(invariant_factors(&m).factors, big(&[1, 6]));
}

#[test]
fn zero_matrix_has_no_factors() {
    let m = IntMatrix::zeros(3, 4);
    assert_eq!(invariant_factors(&m).rank(), 0);
    assert_eq!(snf_with_witnesses(&m).diag.len(), 0);
}

#[test]
fn two_by_two_against_minors() {
    let rows = vec![vec![2, 4], vec![6, 8]];
    let oracle = factors_by_minors(&rows);
    assert_eq!(oracle, big(&[2, 4]));
    let m = IntMatrix::from_dense(&rows);
    assert_eq!(invariant_factors(&m).factors, oracle);
    let s = snf_with_witnesses(&m);
    assert_eq!(s.diag, oracle);
    assert!(check_witnesses(&m, &s));
}

#[test]
fn no_unit_entry_anywhere() {
    let rows = vec![vec![4, 6, 10, 0], vec![6, 9, 15, 12], vec![10, 15, 26, 8]];
    let oracle = factors_by_minors(&rows);
    let m = IntMatrix::from_dense(&rows);
    assert_eq!(invariant_factors(&m).factors, oracle);
    let s = snf_with_witnesses(&m);
    assert_eq!(s.diag, oracle);
    assert!(check_witnesses(&m, &s));
}

#[test]
fn homology_of_circle_and_rp2() {
    // cellular chains of RP^2: Z <-0- Z <-2- Z
    let d1 = IntMatrix::from_dense(&[vec![0]]);
    let d2 = IntMatrix::from_dense(&[vec![2]]);
    assert_eq!(homology_at(&d1, &d2), AbelianGroupInfo::new(0, vec![2]));
    let d3 = IntMatrix::zeros(1, 0);
    assert_eq!(homology_at(&d2, &d3), AbelianGroupInfo::trivial());
    let hb = homology_basis(&d1, &d2);
    assert_eq!(hb.generators.len(), 1);
    assert_eq!(hb.class_order(&big(&[1]), &d1), Some(BigInt::from(2)));
    assert_eq!(hb.class_order(&big(&[2]), &d1), Some(BigInt::from(1)));
}

#[test]
fn cyclic_orders_regroup() {
    let g = AbelianGroupInfo::from_cyclic_orders(0, &[2, 2, 3, 4]);
    assert_eq!(g.torsion, vec![2, 2, 12]);
    assert_eq!(g.to_string(), "(Z/2)^2 + Z/12");
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -4i64..5], c), r)
    })
}

proptest! {
    #[test]
    fn sparse_dense_and_minors_agree(rows in small_matrix()) {
        let m = IntMatrix::from_dense(&rows);
        let sparse = invariant_factors(&m).factors;
        let dense = snf_with_witnesses(&m);
        prop_assert_eq!(&sparse, &dense.diag);
        prop_assert_eq!(&sparse, &factors_by_minors(&rows));
        prop_assert!(check_witnesses(&m, &dense));
        for w in sparse.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert!(sparse.iter().all(|d| d.is_positive()));
    }

    #[test]
    fn transpose_preserves_factors(rows in small_matrix()) {
        let m = IntMatrix::from_dense(&rows);
        prop_assert_eq!(invariant_factors(&m), invariant_factors(&m.transpose()));
    }

    #[test]
    fn kernel_generators_are_cycles(rows in small_matrix()) {
        let d = IntMatrix::from_dense(&rows);
        let next = IntMatrix::zeros(d.cols(), 0);
        let hb = homology_basis(&d, &next);
        prop_assert_eq!(hb.info.free_rank, d.cols() - invariant_factors(&d).rank());
        for g in &hb.generators {
            prop_assert!(d.apply(g).iter().all(|v| v.is_zero()));
        }
    }
}
