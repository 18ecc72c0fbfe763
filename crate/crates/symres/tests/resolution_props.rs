use proptest::prelude::*;
use symres::chain_maps::{phi, psi_chain, verify_chain_maps_upto};
use symres::exactness::{cell_count_formula, d_squared_failures, verify_p_exactness};
use symres::pcomplex::parse_pchain;
use symres::prism::{prism_cell, verify_prism, ConsecutiveCycle};
use symres::product::verify_product;
use symres::resolution::FreeComplex;
use symres::{boundary_chain, boundary_p, enumerate_p_cells, Chain, GroupRingElem, PCell, Perm};

#[test]
fn d_squared_vanishes() {
    for n in 2..=8 {
        assert!(d_squared_failures(n).unwrap().is_empty(), "n = {n}");
        assert!(FreeComplex::p_complex(n, 3).unwrap().d_squared_zero());
    }
}

#[test]
fn cell_counts_match_closed_forms() {
    for n in 1..=12 {
        for d in 0..=3 {
            assert_eq!(cell_count_formula(n, d), enumerate_p_cells(n, d).len(), "n = {n}, dim = {d}");
        }
    }
}

#[test]
fn exact_in_low_degrees() {
    for n in 2..=4 {
        let r = verify_p_exactness(n, false).unwrap();
        assert!(r.exact(), "{r:?}");
        assert_eq!(r.rank_d1, symres::expand::factorial(n) - 1);
    }
    assert!(verify_p_exactness(6, false).is_err());
}

#[test]
fn cell_labels_roundtrip() {
    for d in 0..=3 {
        for c in enumerate_p_cells(7, d) {
            assert_eq!(c.to_string().parse::<PCell>().unwrap(), c);
        }
    }
    assert!("c38(1)".parse::<PCell>().is_err());
    assert!("d(1)".parse::<PCell>().is_err());
    assert!(boundary_p(PCell::D(1, 2), 5).is_err());
}

#[test]
fn parse_pchain_examples() {
    let n = 6;
    let x = parse_pchain(n, "(1 + s3) c37(1) - c32(3,1) + s2 s1 c32(1,3) + 2 c34(1,4)").unwrap();
    let mut y = Chain::zero(n);
    y.add_term(PCell::C37(1), &GroupRingElem::parse(n, "1 + s3").unwrap());
    y.add_term(PCell::C32(3, 1), &GroupRingElem::scalar(n, -1));
    y.add_term(PCell::C32(1, 3), &GroupRingElem::word(n, &[2, 1]));
    y.add_term(PCell::C34(1, 4), &GroupRingElem::scalar(n, 2));
    assert_eq!(x, y);
    assert!(parse_pchain(n, "c31(1) +").is_err());
    assert!(parse_pchain(n, "c32(1,2)").is_err());
    assert!(parse_pchain(n, "e1 e2").is_err());
}

#[test]
fn chain_maps_small() {
    for n in 2..=5 {
        let r = verify_chain_maps_upto(n, 3).unwrap();
        assert!(r.ok(), "n = {n}: {:?}", r.failures.first());
    }
}

#[test]
fn psi_phi_identity_in_degree_two() {
    for n in 3..=6 {
        for c in enumerate_p_cells(n, 2) {
            let back = psi_chain(&phi(c, n).unwrap(), n).unwrap();
            assert_eq!(back, Chain::cell(n, c), "{c}");
        }
    }
}

#[test]
fn prism_identity() {
    for n in 3..=6 {
        let r = verify_prism(n).unwrap();
        assert!(r.ok(), "n = {n}: {:?}", r.failures);
        assert!(r.checked > 0);
    }
}

#[test]
fn prism_on_base_cell_is_a_ramp_of_edges() {
    let n = 5;
    let a = ConsecutiveCycle::new(2, 5).unwrap();
    let (p, moved) = prism_cell(a, PCell::Base, n).unwrap();
    assert_eq!(moved, PCell::Base);
    assert_eq!(boundary_chain(&p, n), Chain::term(PCell::Base, &a.element(n) - &GroupRingElem::one(n)));
    assert!(ConsecutiveCycle::new(3, 3).is_err());
    assert!(prism_cell(ConsecutiveCycle::new(2, 4).unwrap(), PCell::E(1), n).is_err());
}

#[test]
fn product_resolutions() {
    for (a, b) in [(1, 1), (2, 2), (3, 2), (4, 2), (3, 3), (4, 4)] {
        let r = verify_product(a, b).unwrap();
        assert!(r.ok(), "{a} x {b}: {r:?}");
    }
}

fn pchain(n: usize) -> impl Strategy<Value = Chain<PCell>> {
    let cells = enumerate_p_cells(n, 2);
    let nf: usize = (1..=n).product();
    prop::collection::vec((0..cells.len(), 0..nf, -3i64..=3), 0..5).prop_map(move |terms| {
        let mut x = Chain::zero(n);
        for (c, g, k) in terms {
            x.add_mono(cells[c], Perm::lex_unrank(n, g), k);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn display_parse_roundtrip(x in pchain(5)) {
        prop_assert_eq!(parse_pchain(5, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn boundary_is_equivariant(x in pchain(5), g in 0..120usize) {
        let g = Perm::lex_unrank(5, g);
        prop_assert_eq!(boundary_chain(&x.left_mul_perm(&g), 5), boundary_chain(&x, 5).left_mul_perm(&g));
        prop_assert!(boundary_chain(&boundary_chain(&x, 5), 5).is_zero());
    }
}
