use symres::d8::{chi, d8_suite, delta_chi, transfer_check, D8Elem};
use symres::h3::{h3_certificates, h3_via_q, prism_cycle, xhomology_check};
use symres::pcomplex::parse_pchain;
use symres::prism::ConsecutiveCycle;
use symres::{boundary_chain, Perm};
use symres_snf::AbelianGroupInfo;

#[test]
fn d8_embedding_is_a_homomorphism() {
    for n in [4, 6] {
        for x in D8Elem::all() {
            for y in D8Elem::all() {
                assert_eq!((x * y).to_perm(n), x.to_perm(n).compose(&y.to_perm(n)));
            }
            assert_eq!(D8Elem::from_perm(&x.to_perm(n)), Some(x));
        }
    }
    let images: std::collections::HashSet<Perm> = D8Elem::all().into_iter().map(|x| x.to_perm(4)).collect();
    assert_eq!(images.len(), 8);
    assert_eq!(D8Elem::from_perm(&Perm::s(4, 1)), None);
}

#[test]
fn chi_is_a_cocycle() {
    let all = D8Elem::all();
    for &a in &all {
        for &b in &all {
            for &c in &all {
                for &d in &all {
                    assert_eq!(delta_chi([a, b, c, d]), 0);
                }
            }
        }
    }
    let r = D8Elem::R;
    assert_eq!(chi([r, r * r * r, r]), 1);
}

#[test]
fn d8_suite_holds() {
    let r = d8_suite().unwrap();
    assert!(r.ok(), "{r:?}");
    assert_eq!(r.chi_on_c, 1);
    assert!(r.h3.torsion.iter().any(|d| d % 4 == 0));
}

#[test]
fn transfer_is_a_unit() {
    for n in 4..=7 {
        let t = transfer_check(n).unwrap();
        assert!(t.is_unit(), "n = {n}: {}", t.value);
        assert!(t.orbit_pattern_holds(), "n = {n}");
    }
    assert!(transfer_check(3).is_err());
}

#[test]
fn h3_small_groups() {
    assert_eq!(h3_via_q(3, false).unwrap(), AbelianGroupInfo::new(0, vec![6]));
    assert_eq!(h3_via_q(5, false).unwrap(), AbelianGroupInfo::new(0, vec![2, 12]));
    assert!(h3_via_q(7, false).is_err());
}

#[test]
fn square_class_is_a_prism_boundary() {
    let n = 6;
    let z = parse_pchain(n, "c34(1,5)").unwrap();
    let w = prism_cycle(ConsecutiveCycle::new(4, 6).unwrap(), &z).unwrap();
    assert!(boundary_chain(&w, n).is_zero());
}

#[test]
fn displayed_xhomology_list_contains_non_cycles() {
    let printed = xhomology_check(6, true).unwrap();
    assert!(!printed.non_cycles.is_empty());
    let corrected = xhomology_check(6, false).unwrap();
    assert!(corrected.spans_kernel(), "{corrected:?}");
}

#[test]
fn certificates_hold_at_six() {
    let c = h3_certificates(6).unwrap();
    assert!(c.ok(), "{c:?}");
    assert!(!c.printed_failures.is_empty());
    assert!(h3_certificates(5).is_err());
}
