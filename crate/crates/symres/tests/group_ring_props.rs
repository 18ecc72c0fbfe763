use proptest::prelude::*;
use symres::perm::Perm;
use symres::{GroupRingElem, RingSpec};

const N: usize = 4;

fn perm() -> impl Strategy<Value = Perm> {
    (0..24usize).prop_map(|r| Perm::lex_unrank(N, r))
}

fn elem() -> impl Strategy<Value = GroupRingElem> {
    prop::collection::vec((perm(), -5i64..=5), 0..6).prop_map(|terms| {
        let mut x = GroupRingElem::zero(N);
        for (p, c) in terms {
            x.add_term(p, c);
        }
        x
    })
}

#[test]
fn ring_mismatch_is_an_error() {
    let a = GroupRingElem::one(3);
    let b = GroupRingElem::one(4);
    assert!(a.try_mul(&b).is_err());
    let c = GroupRingElem::one(3).with_ring(RingSpec::zmod(2));
    assert!(a.try_add(&c).is_err());
}

#[test]
fn parse_examples() {
    let x = GroupRingElem::parse(3, "1 - s1 + 2 s2 s1").unwrap();
    assert_eq!(x.augmentation(), 2);
    assert_eq!(x.coeff(&Perm::s(3, 1)), -1);
    let y = GroupRingElem::parse(3, "s1 s1").unwrap();
    assert_eq!(y, GroupRingElem::one(3));
    assert!(GroupRingElem::parse(3, "s3").is_err());
}

#[test]
fn coefficients_reduce_mod_m() {
    let z4 = RingSpec::zmod(4);
    let x = GroupRingElem::scalar(3, 3).with_ring(z4);
    let y = &x + &x;
    assert_eq!(y.augmentation(), 2);
    assert!((&y + &y).is_zero());
}

#[test]
fn perm_conventions() {
    let a = Perm::from_images(&[2, 3, 1]).unwrap();
    let b = Perm::s(3, 1);
    assert_eq!(a.compose(&b).apply(1), a.apply(b.apply(1)));
    assert_eq!(Perm::all(4).len(), 24);
    for (i, p) in Perm::all(4).iter().enumerate() {
        assert_eq!(p.lex_rank(), i);
    }
    assert!(Perm::from_images(&[1, 1, 2]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multiplication_is_associative(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributive(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn augmentation_is_a_ring_map(a in elem(), b in elem()) {
        prop_assert_eq!((&a * &b).augmentation(), a.augmentation() * b.augmentation());
        prop_assert_eq!((&a + &b).augmentation(), a.augmentation() + b.augmentation());
    }

    #[test]
    fn conjugate_reverses_products(a in elem(), b in elem()) {
        prop_assert_eq!((&a * &b).conjugate(), &b.conjugate() * &a.conjugate());
    }

    #[test]
    fn display_parse_roundtrip(a in elem()) {
        prop_assert_eq!(GroupRingElem::parse(N, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn subtraction_inverts_addition(a in elem(), b in elem()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn sign_is_multiplicative(p in perm(), q in perm()) {
        prop_assert_eq!(p.compose(&q).sign(), p.sign() * q.sign());
        prop_assert!(p.compose(&p.inverse()).is_identity());
    }
}
