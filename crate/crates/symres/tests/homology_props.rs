use num_bigint::BigInt;
use proptest::prelude::*;
use symres::cocycles::{beta_hat0, build_cocycle, coboundary, klein_complex, pairing, verify_cocycle, Cochain, CocycleKind};
use symres::homology::{cohomology, homology, tensor_vector, Setup, Direction};
use symres::module::{CoefficientModule, ModuleElem};
use symres::resolution::FreeComplex;
use symres::RingSpec;
use symres_snf::AbelianGroupInfo;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn orders(h: &AbelianGroupInfo) -> Vec<u64> {
    let mut v = vec![0; h.free_rank];
    v.extend(&h.torsion);
    v
}

/// A ⊗ Z/m, equivalently Hom(A, Z/m), for finitely generated A.
fn tensor(h: &AbelianGroupInfo, m: u64) -> Vec<u64> {
    orders(h).into_iter().map(|d| gcd(d, m)).collect()
}

/// Tor(A, Z/m) = Ext(A, Z/m).
fn tor(h: &AbelianGroupInfo, m: u64) -> Vec<u64> {
    h.torsion.iter().map(|&d| gcd(d, m)).collect()
}

fn module(spec: &str, n: usize, ring: RingSpec) -> CoefficientModule {
    match spec {
        "trivial" => CoefficientModule::trivial(n, ring),
        k => CoefficientModule::permutation(n, k.parse().unwrap(), ring).unwrap(),
    }
}

#[test]
fn universal_coefficients() {
    for (n, spec) in [(4, "trivial"), (5, "trivial"), (6, "trivial"), (5, "2"), (6, "2"), (6, "3")] {
        let cx = FreeComplex::p_complex(n, 3).unwrap();
        let hz: Vec<AbelianGroupInfo> =
            (0..=2).map(|k| homology(&cx, &module(spec, n, RingSpec::Z), k, false).unwrap().info()).collect();
        for m in [2u64, 4] {
            let mm = module(spec, n, RingSpec::zmod(m));
            for k in 1..=2 {
                let mut expect = tensor(&hz[k], m);
                expect.extend(tor(&hz[k - 1], m));
                let got = homology(&cx, &mm, k, false).unwrap().info();
                assert_eq!(got, AbelianGroupInfo::from_cyclic_orders(0, &expect), "H_{k}(S_{n}; {spec} mod {m})");
                let mut expect = tensor(&hz[k], m);
                expect.extend(tor(&hz[k - 1], m));
                let got = cohomology(&cx, &mm, k, false).unwrap().info();
                assert_eq!(got, AbelianGroupInfo::from_cyclic_orders(0, &expect), "H^{k}(S_{n}; {spec} mod {m})");
            }
        }
    }
}

#[test]
fn integral_cohomology_is_dual() {
    for n in 4..=6 {
        let cx = FreeComplex::p_complex(n, 3).unwrap();
        let t = CoefficientModule::trivial(n, RingSpec::Z);
        let h1 = homology(&cx, &t, 1, false).unwrap().info();
        let c2 = cohomology(&cx, &t, 2, false).unwrap().info();
        assert_eq!(c2.torsion, h1.torsion);
        assert_eq!(cohomology(&cx, &t, 1, false).unwrap().info(), AbelianGroupInfo::trivial());
    }
}

#[test]
fn low_degree_goldens() {
    let cx = FreeComplex::p_complex(3, 3).unwrap();
    let t = CoefficientModule::trivial(3, RingSpec::Z);
    assert_eq!(homology(&cx, &t, 0, false).unwrap().info(), AbelianGroupInfo::new(1, vec![]));
    assert_eq!(homology(&cx, &t, 1, false).unwrap().info(), AbelianGroupInfo::elementary(2, 1));
    assert_eq!(homology(&cx, &t, 2, false).unwrap().info(), AbelianGroupInfo::trivial());
    let cx = FreeComplex::p_complex(5, 3).unwrap();
    let t = CoefficientModule::trivial(5, RingSpec::Z);
    let h2 = homology(&cx, &t, 2, true).unwrap();
    assert_eq!(h2.info(), AbelianGroupInfo::elementary(2, 1));
    assert!(homology(&cx, &t, 3, false).is_err());
}

#[test]
fn klein_four_homology() {
    let kc = klein_complex(4);
    assert!(kc.d_squared_zero());
    let t = CoefficientModule::trivial(4, RingSpec::Z);
    let h: Vec<AbelianGroupInfo> = (1..=3).map(|k| homology(&kc, &t, k, false).unwrap().info()).collect();
    assert_eq!(h[0], AbelianGroupInfo::elementary(2, 2));
    assert_eq!(h[1], AbelianGroupInfo::elementary(2, 1));
    assert_eq!(h[2], AbelianGroupInfo::elementary(2, 3));
    let f = beta_hat0(&kc, 1, RingSpec::zmod(2)).unwrap();
    assert!(verify_cocycle(&kc, &f).unwrap());
}

#[test]
fn perturbed_beta0_over_z4_is_not_a_cocycle() {
    let n = 6;
    let cx = FreeComplex::p_complex(n, 3).unwrap();
    let ring = RingSpec::zmod(4);
    let good = build_cocycle(&cx, CocycleKind::Beta0, 2, 1, ring).unwrap();
    assert!(verify_cocycle(&cx, &good).unwrap());
    assert!(build_cocycle(&cx, CocycleKind::Beta0, 1, 1, ring).is_err());
    let m = CoefficientModule::trivial(n, ring);
    let bad = Cochain::from_fn(&cx, 2, &m, |l| Ok(if l.starts_with("d(") { m.sum_where(1, |_| true) } else { m.zero() })).unwrap();
    assert!(!verify_cocycle(&cx, &bad).unwrap());
}

#[test]
fn h2_generator_pairs_with_beta0() {
    let n = 6;
    let cx = FreeComplex::p_complex(n, 3).unwrap();
    let ring = RingSpec::zmod(2);
    let f = build_cocycle(&cx, CocycleKind::Beta0, 1, 1, ring).unwrap();
    let m = CoefficientModule::trivial(n, ring);
    let z = tensor_vector(&cx, &m, 2, &[("d(1,3)", 0, 1)]).unwrap();
    assert_eq!(pairing(&f, &z).unwrap(), 1);
    let setup = Setup::new(&cx, &CoefficientModule::trivial(n, RingSpec::Z), 2, Direction::Homology).unwrap();
    let basis = setup.basis();
    assert_eq!(setup.class_order(&basis, &z), Some(2));
}

fn random_cochain(cx: &FreeComplex, dim: usize, m: &CoefficientModule, seed: &[i64]) -> Cochain {
    let dm = m.dim();
    let ring = m.ring();
    let values = (0..cx.rank(dim))
        .map(|g| ModuleElem { ring, coords: (0..dm).map(|b| ring.normalize(seed[(g * dm + b) % seed.len()])).collect() })
        .collect();
    Cochain { dim, module: m.clone(), values }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn coboundary_is_adjoint_to_boundary(
        f_seed in prop::collection::vec(0i64..4, 1..40),
        z_seed in prop::collection::vec(-3i64..=3, 1..40),
        k in 1usize..=3,
        dim in 1usize..=2,
    ) {
        let n = 6;
        let cx = FreeComplex::p_complex(n, 3).unwrap();
        let m = CoefficientModule::permutation(n, k, RingSpec::zmod(4)).unwrap();
        let f = random_cochain(&cx, dim, &m, &f_seed);
        let dm = m.dim();
        let len = cx.rank(dim + 1) * dm;
        let z: Vec<BigInt> = (0..len).map(|i| BigInt::from(z_seed[i % z_seed.len()] * ((i % 7) as i64 - 3))).collect();
        let df = random_cochain(&cx, dim + 1, &m, &[0]);
        let df_vec = coboundary(&cx, &f).unwrap();
        let df = Cochain {
            values: df.values.iter().enumerate().map(|(g, v)| ModuleElem {
                ring: v.ring,
                coords: (0..dm).map(|b| i64::try_from(&df_vec[g * dm + b]).unwrap()).collect(),
            }).collect(),
            ..df
        };
        let dz = cx.coinvariants(&m).map(dim as i64 + 1).apply(&z);
        prop_assert_eq!(pairing(&df, &z).unwrap(), pairing(&f, &dz).unwrap());
    }
}
