use std::collections::{BTreeMap, HashSet};
use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symres::chain_maps::{verify_chain_maps, verify_chain_maps_upto};
use symres::cocycles::{build_cocycle, verify_cocycle, CocycleKind};
use symres::d8::{d8_suite, transfer_check};
use symres::exactness::{d_squared_failures, verify_p_exactness};
use symres::h3::{h3_bar_oracle, h3_certificates, h3_via_q};
use symres::homology::{cohomology, homology, tensor_vector, Direction, Setup};
use symres::module::CoefficientModule;
use symres::perm::Perm;
use symres::qformulas::{crosscheck_boundary_formulas, CLASS_ORDER};
use symres::resolution::FreeComplex;
use symres::rewrite::{
    complexity_vector, enumerate_normal_forms, reduce_step, reduce_strategy, reduce_with, Letter, Strategy, Word,
    DEFAULT_NF_BOUND,
};
use symres::twisted::{expected_stabilizer, mk_pairing, shapiro_crosscheck};
use symres::RingSpec;
use symres_snf::AbelianGroupInfo;

/// Criteria that cannot pass as stated, with the reason printed next to the FAIL line.
const UNATTAINABLE: [(u32, &str); 1] = [(
    5,
    "two closed-form classes (cb, bb) disagree with the algorithmic boundary as printed; \
     all cells agree after the corrections in FORMULA_CORRECTIONS.md",
)];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within(t: Instant, limit: Duration) -> bool {
    t.elapsed() <= limit
}

fn c1_normal_forms() -> Outcome {
    let t = Instant::now();
    let mut ok = true;
    for n in 2..=7 {
        let forms = enumerate_normal_forms(n, DEFAULT_NF_BOUND).unwrap();
        let perms: HashSet<Perm> = forms.iter().map(|f| f.perm(n).unwrap()).collect();
        ok &= forms.len() == (1..=n).product::<usize>() && perms.len() == forms.len();
        ok &= Perm::all(n).iter().all(|p| perms.contains(p));
    }
    let e = t.elapsed();
    outcome(ok && within(t, Duration::from_secs(10)), format!("n = 2..7 bijective ({e:.2?})"))
}

fn c2_rewriting() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20_260_101);
    let mut bad = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=8);
        let len = rng.gen_range(0..=30);
        let letters: Vec<Letter> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..n);
                if rng.gen_bool(0.2) {
                    Letter::inv(i)
                } else {
                    Letter::s(i)
                }
            })
            .collect();
        let w = Word::new(letters);
        let mut cur = w.clone();
        while let Some((next, _)) = reduce_step(&cur) {
            if complexity_vector(&next, n) >= complexity_vector(&cur, n) {
                bad += 1;
            }
            cur = next;
        }
        let seed: u64 = rng.gen();
        let mut r2 = ChaCha8Rng::seed_from_u64(seed);
        let a = reduce_strategy(&w, Strategy::Rightmost);
        let b = reduce_with(&w, |k| r2.gen_range(0..k));
        if a != cur || b != cur {
            bad += 1;
        }
    }
    let e = t.elapsed();
    outcome(bad == 0 && within(t, Duration::from_secs(30)), format!("10000 words, {bad} violations ({e:.2?})"))
}

fn c3_d_squared() -> Outcome {
    let t = Instant::now();
    let bad: usize = (3..=8).map(|n| d_squared_failures(n).unwrap().len()).sum();
    let e = t.elapsed();
    outcome(bad == 0 && within(t, Duration::from_secs(10)), format!("n = 3..8, {bad} nonzero ({e:.2?})"))
}

fn c4_exactness() -> Outcome {
    let t = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 3..=5 {
        let r = verify_p_exactness(n, false).unwrap();
        ok &= r.exact();
        parts.push(format!("n={n}: {}", if r.exact() { "exact" } else { "not exact" }));
    }
    let e = t.elapsed();
    outcome(ok && within(t, Duration::from_secs(300)), format!("{} ({e:.2?})", parts.join(", ")))
}

fn c5_q_boundaries() -> Outcome {
    let t = Instant::now();
    let mut corrected = true;
    let mut totals: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for n in 4..=7 {
        let r = crosscheck_boundary_formulas(n).unwrap();
        corrected &= r.all_match_corrected();
        for c in &r.classes {
            let e = totals.entry(CLASS_ORDER.iter().find(|k| **k == c.class).unwrap()).or_default();
            e.0 += c.cells;
            e.1 += c.printed_matches;
        }
    }
    let printed = totals.values().filter(|(cells, ok)| *cells > 0 && cells == ok).count();
    let failing: Vec<&str> = CLASS_ORDER.iter().copied().filter(|k| totals[k].0 != totals[k].1).collect();
    let e = t.elapsed();
    let pass = corrected && printed >= 8 && within(t, Duration::from_secs(60));
    outcome(
        pass,
        format!(
            "all cells match corrected tables: {corrected}; classes matching as printed: {printed}/9 \
             (target >= 8; differing: {}) ({e:.2?})",
            failing.join(", ")
        ),
    )
}

fn c6_chain_maps() -> Outcome {
    let t = Instant::now();
    let mut bad = 0;
    let mut psi3 = 0;
    for n in 4..=6 {
        let r = verify_chain_maps(n).unwrap();
        bad += r.failures.len();
        psi3 += r.psi_cells_checked;
    }
    for n in 2..=8 {
        bad += verify_chain_maps_upto(n, 2).unwrap().failures.len();
    }
    let e = t.elapsed();
    outcome(
        bad == 0 && within(t, Duration::from_secs(120)),
        format!("psi on {psi3} cells (n = 4..6), phi and psi2 phi2 = id for n <= 8, {bad} failures ({e:.2?})"),
    )
}

fn c7_untwisted() -> Outcome {
    let t = Instant::now();
    let mut ok = true;
    for n in 4..=8 {
        let cx = FreeComplex::p_complex(n, 3).unwrap();
        let z = CoefficientModule::trivial(n, RingSpec::Z);
        for (deg, rep) in [(1, "e1"), (2, "d(1,3)")] {
            ok &= homology(&cx, &z, deg, false).unwrap().info() == AbelianGroupInfo::elementary(2, 1);
            let setup = Setup::new(&cx, &z, deg, Direction::Homology).unwrap();
            let v = tensor_vector(&cx, &z, deg, &[(rep, 0, 1)]).unwrap();
            ok &= setup.class_order(&setup.basis(), &v) == Some(2);
        }
    }
    let e = t.elapsed();
    outcome(ok && within(t, Duration::from_secs(60)), format!("n = 4..8, H1 = H2 = Z/2 generated by e1, d(1,3) ({e:.2?})"))
}

fn c8_twisted() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut check = |what: String, got: AbelianGroupInfo, want: AbelianGroupInfo| {
        if got != want {
            bad.push(format!("{what}: {got} != {want}"));
        }
    };
    for n in 4..=8 {
        let cx = FreeComplex::p_complex(n, 3).unwrap();
        for k in 2..=n / 2 {
            let m = CoefficientModule::permutation(n, k, RingSpec::Z).unwrap();
            check(format!("H1(S{n};M{k})"), homology(&cx, &m, 1, false).unwrap().info(), AbelianGroupInfo::elementary(2, 2));
            if k >= 4 {
                check(format!("H2(S{n};M{k})"), homology(&cx, &m, 2, false).unwrap().info(), AbelianGroupInfo::elementary(2, 3));
                check(format!("H^2(S{n};M{k})"), cohomology(&cx, &m, 2, false).unwrap().info(), AbelianGroupInfo::elementary(2, 2));
            }
        }
    }
    let cx = FreeComplex::p_complex(8, 3).unwrap();
    let m = CoefficientModule::permutation(8, 4, RingSpec::zmod(4)).unwrap();
    check("H2(S8;M4 over Z/4)".into(), homology(&cx, &m, 2, false).unwrap().info(), AbelianGroupInfo::elementary(2, 5));
    check("H^2(S8;M4 over Z/4)".into(), cohomology(&cx, &m, 2, false).unwrap().info(), AbelianGroupInfo::elementary(2, 5));
    for (n, k) in [(2, 1), (3, 1), (4, 1), (4, 2), (5, 2), (6, 2)] {
        let cx = FreeComplex::p_complex(n, 3).unwrap();
        for ring in [RingSpec::Z, RingSpec::zmod(4)] {
            let m = CoefficientModule::permutation(n, k, ring).unwrap();
            for deg in 1..=2 {
                for dir in [Direction::Homology, Direction::Cohomology] {
                    let got = match dir {
                        Direction::Homology => homology(&cx, &m, deg, false),
                        Direction::Cohomology => cohomology(&cx, &m, deg, false),
                    }
                    .unwrap()
                    .info();
                    let want = expected_stabilizer(n, k, ring, deg, dir).unwrap();
                    check(format!("{dir:?} {deg} (S{n};M{k} over {})", ring.name()), got, want);
                }
            }
        }
    }
    let e = t.elapsed();
    let pass = bad.is_empty() && within(t, Duration::from_secs(600));
    outcome(pass, format!("{} mismatches{} ({e:.2?})", bad.len(), if bad.is_empty() { String::new() } else { format!(": {}", bad.join("; ")) }))
}

fn c9_shapiro() -> Outcome {
    let t = Instant::now();
    let mut rows = 0;
    let mut bad = 0;
    for n in 2..=8 {
        for k in 1..=(n / 2).min(4) {
            for ring in [RingSpec::Z, RingSpec::zmod(4)] {
                for r in shapiro_crosscheck(n, k, ring).unwrap() {
                    rows += 1;
                    bad += (!r.agrees()) as usize;
                }
            }
        }
    }
    outcome(bad == 0, format!("{rows} comparisons, {bad} disagreements ({:.2?})", t.elapsed()))
}

fn c10_cocycles() -> Outcome {
    let t = Instant::now();
    let mut checked = 0;
    let mut bad = 0;
    let mut pairings = 0;
    let mut degenerate = 0;
    for n in 2..=8 {
        let cx = FreeComplex::p_complex(n, 3).unwrap();
        for m in [2u64, 4] {
            let ring = RingSpec::zmod(m);
            for kind in CocycleKind::ALL {
                let ks: Vec<usize> = if kind.twisted() { (kind.min_k()..=4).filter(|k| 2 * k <= n).collect() } else { vec![1] };
                let rs: Vec<i64> = if kind.needs_two_torsion() { vec![m as i64 / 2] } else { (1..m as i64).collect() };
                for &k in &ks {
                    for &r in &rs {
                        let f = build_cocycle(&cx, kind, r, k, ring).unwrap();
                        checked += 1;
                        bad += (!verify_cocycle(&cx, &f).unwrap()) as usize;
                    }
                }
            }
            for k in 1..=(n / 2).min(4) {
                for deg in 1..=2 {
                    let p = mk_pairing(&cx, k, ring, deg, false).unwrap();
                    pairings += 1;
                    degenerate += (!p.nondegenerate()) as usize;
                }
            }
        }
    }
    let e = t.elapsed();
    outcome(
        bad == 0 && degenerate == 0 && within(t, Duration::from_secs(120)),
        format!("{checked} cochains ({bad} not cocycles), {pairings} pairing matrices ({degenerate} degenerate) ({e:.2?})"),
    )
}

fn c11_h3() -> Outcome {
    let t = Instant::now();
    let h6 = h3_via_q(6, false).unwrap();
    let six = h6 == AbelianGroupInfo::new(0, vec![2, 2, 12]);
    let mut oracle = true;
    for n in [3, 4] {
        oracle &= h3_via_q(n, false).unwrap() == h3_bar_oracle(n, false).unwrap();
    }
    let certs = h3_certificates(6).unwrap().ok();
    let e = t.elapsed();
    outcome(
        six && oracle && certs && within(t, Duration::from_secs(1800)),
        format!("H3(S6) = {h6}; n = 3, 4 agree with bar oracle: {oracle}; certificates verify: {certs} ({e:.2?})"),
    )
}

fn c12_d8() -> Outcome {
    let t = Instant::now();
    let r = d8_suite().unwrap();
    let four = r.h3.torsion.iter().any(|d| d % 4 == 0);
    let tr = transfer_check(6).unwrap();
    let e = t.elapsed();
    let pass = r.ok() && r.tuples == 2401 && r.cocycle_failures == 0 && r.chi_on_c == 1 && four && tr.is_unit();
    outcome(
        pass && within(t, Duration::from_secs(120)),
        format!(
            "{} tuples ({} failures), chi(c) = {}, H3(D8) = {}, transfer(6) = {} mod 4 ({e:.2?})",
            r.tuples, r.cocycle_failures, r.chi_on_c, r.h3, tr.value
        ),
    )
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        (1, "normal-form bijectivity", c1_normal_forms),
        (2, "termination and confluence", c2_rewriting),
        (3, "d^2 = 0 in P", c3_d_squared),
        (4, "exactness of P in degrees 0..2", c4_exactness),
        (5, "Q-boundary closed forms", c5_q_boundaries),
        (6, "chain-map battery", c6_chain_maps),
        (7, "untwisted goldens", c7_untwisted),
        (8, "twisted goldens", c8_twisted),
        (9, "Shapiro cross-check", c9_shapiro),
        (10, "cocycle suite", c10_cocycles),
        (11, "H3 of S6 and certificates", c11_h3),
        (12, "D8 suite and transfer", c12_d8),
    ];
    let mut unexpected = Vec::new();
    let mut out = std::io::stdout();
    for (id, name, run) in criteria {
        let o = run();
        let known = UNATTAINABLE.iter().find(|(k, _)| *k == id);
        writeln!(out, "criterion {id:>2} {}: {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail).unwrap();
        if let (false, Some((_, why))) = (o.pass, known) {
            writeln!(out, "             unattainable as stated: {why}").unwrap();
        }
        if o.pass == known.is_some() {
            unexpected.push(id);
        }
    }
    assert!(unexpected.is_empty(), "criteria with unexpected outcome: {unexpected:?}");
}
