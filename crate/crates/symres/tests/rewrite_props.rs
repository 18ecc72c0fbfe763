use std::collections::HashSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symres::perm::Perm;
use symres::rewrite::{
    all_redexes, apply_redex, complexity_vector, enumerate_normal_forms, is_irreducible, is_ramp_product, normal_form_perm,
    normal_form_word, reduce_step, reduce_strategy, reduce_with, word_to_perm, Letter, Word, DEFAULT_NF_BOUND,
};
use symres::rewrite::Strategy as Order;

fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(|v| {
        Word::new(v.into_iter().map(|(i, inv)| if inv { Letter::inv(i) } else { Letter::s(i) }).collect())
    })
}

fn sized_word() -> impl Strategy<Value = (usize, Word)> {
    (2usize..=8).prop_flat_map(|n| (Just(n), word_strategy(n, 30)))
}

#[test]
fn nf_example() {
    let w: Word = "s2 s1 s2".parse().unwrap();
    assert_eq!(normal_form_word(&w).to_string(), "s1 s2 s1");
}

#[test]
fn normal_forms_biject_small() {
    for n in 1..=6 {
        let forms = enumerate_normal_forms(n, DEFAULT_NF_BOUND).unwrap();
        let perms: HashSet<Perm> = forms.iter().map(|f| f.perm(n).unwrap()).collect();
        assert_eq!(forms.len(), (1..=n).product::<usize>());
        assert_eq!(perms.len(), forms.len());
        for f in &forms {
            assert!(is_irreducible(&f.word()), "{f} is reducible");
            assert_eq!(normal_form_perm(&f.perm(n).unwrap()), *f);
        }
    }
}

#[test]
fn enumeration_bound_enforced() {
    assert!(enumerate_normal_forms(9, DEFAULT_NF_BOUND).is_err());
}

#[test]
fn irreducible_iff_ramp_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3000 {
        let n = rng.gen_range(2..=6);
        let len = rng.gen_range(0..=8);
        let idx: Vec<usize> = (0..len).map(|_| rng.gen_range(1..n)).collect();
        let w = Word::from_indices(&idx);
        assert_eq!(is_irreducible(&w), is_ramp_product(&w), "{w}");
    }
}

#[test]
fn parse_rejects_garbage() {
    assert!("s0".parse::<Word>().is_err());
    assert!("t1".parse::<Word>().is_err());
    assert!("s".parse::<Word>().is_err());
    let w: Word = "s3".parse().unwrap();
    assert!(w.check_range(3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn complexity_strictly_decreases((n, w) in sized_word()) {
        let mut cur = w;
        while let Some((next, _)) = reduce_step(&cur) {
            prop_assert!(complexity_vector(&next, n) < complexity_vector(&cur, n), "{cur} -> {next}");
            cur = next;
        }
    }

    #[test]
    fn strategies_agree((n, w) in sized_word(), seed in any::<u64>()) {
        let a = reduce_strategy(&w, Order::Leftmost);
        let b = reduce_strategy(&w, Order::Rightmost);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = reduce_with(&w, |k| rng.gen_range(0..k));
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
        prop_assert_eq!(word_to_perm(&a, n).unwrap(), word_to_perm(&w, n).unwrap());
    }

    #[test]
    fn every_redex_preserves_the_element((n, w) in sized_word()) {
        let p = word_to_perm(&w, n).unwrap();
        for r in all_redexes(&w) {
            prop_assert_eq!(word_to_perm(&apply_redex(&w, r), n).unwrap(), p);
        }
    }

    #[test]
    fn normal_form_of_word_matches_perm((n, w) in sized_word()) {
        let nf = normal_form_word(&w);
        prop_assert_eq!(nf.clone(), normal_form_perm(&word_to_perm(&w, n).unwrap()));
        prop_assert!(is_irreducible(&nf.word()));
    }

    #[test]
    fn display_parse_roundtrip((_n, w) in sized_word()) {
        let back: Word = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }
}
