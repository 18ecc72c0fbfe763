//! Homology and cohomology of S_n with coefficients in the permutation modules M^k:
//! closed-form expected values, explicit generators, and the Shapiro cross-check.

use num_bigint::BigInt;
use serde::Serialize;
use symres_snf::AbelianGroupInfo;

use crate::cocycles::{build_cocycle, pairing, CocycleKind};
use crate::error::{Error, Result};
use crate::group_ring::RingSpec;
use crate::homology::{cohomology, homology, tensor_vector, Direction, Setup};
use crate::module::CoefficientModule;
use crate::product::product_resolution;
use crate::resolution::FreeComplex;

/// Invariant factors of R[2] and R/2R for R = Z or Z/m.
fn two_torsion(ring: RingSpec) -> (Vec<u64>, Vec<u64>) {
    match ring.modulus {
        0 => (vec![], vec![2]),
        m if m % 2 == 0 => (vec![2], vec![2]),
        _ => (vec![], vec![]),
    }
}

fn assemble(ring: RingSpec, a2: usize, q: usize) -> AbelianGroupInfo {
    let (t, c) = two_torsion(ring);
    let mut f = Vec::new();
    for _ in 0..a2 {
        f.extend(&t);
    }
    for _ in 0..q {
        f.extend(&c);
    }
    AbelianGroupInfo::new(0, f)
}

/// Closed-form H_i or H^i (i = 1, 2) of S_{n-k} × S_k with untwisted coefficients R,
/// as (#R[2] summands, #R/2R summands).
pub fn expected_stabilizer_counts(n: usize, k: usize, deg: usize, dir: Direction) -> Result<(usize, usize)> {
    if k == 0 || 2 * k > n {
        return Err(Error::Param(format!("need 1 <= k <= n/2, got n = {n}, k = {k}")));
    }
    let m = n - k;
    let small = |x: usize| x == 2 || x == 3;
    let counts = match (deg, dir) {
        (1, Direction::Homology) => match (n, k) {
            (2, 1) => (0, 0),
            _ if k == 1 => (0, 1),
            _ => (0, 2),
        },
        (1, Direction::Cohomology) => match (n, k) {
            (2, 1) => (0, 0),
            _ if k == 1 => (1, 0),
            _ => (2, 0),
        },
        (2, _) => {
            let (t, q) = if (n, k) == (2, 1) {
                (0, 0)
            } else if k == 1 && small(m) {
                (1, 0)
            } else if small(k) && small(m) {
                (2, 1)
            } else if k == 1 {
                (1, 1)
            } else if small(k) {
                (2, 2)
            } else {
                (2, 3)
            };
            // homology: R[2]^t ⊕ (R/2R)^q; cohomology swaps the roles
            match dir {
                Direction::Homology => (t, q),
                Direction::Cohomology => (q, t),
            }
        }
        _ => return Err(Error::Unsupported(format!("closed form in degree {deg}"))),
    };
    Ok(counts)
}

pub fn expected_stabilizer(n: usize, k: usize, ring: RingSpec, deg: usize, dir: Direction) -> Result<AbelianGroupInfo> {
    let (a2, q) = expected_stabilizer_counts(n, k, deg, dir)?;
    Ok(assemble(ring, a2, q))
}

/// Explicit classes for H^1 / H^2 of S_n with M^k coefficients, with their parameters.
pub fn mk_cocycle_list(n: usize, k: usize, deg: usize) -> Vec<CocycleKind> {
    use CocycleKind::*;
    let m = n - k;
    let mut out = Vec::new();
    match deg {
        1 => {
            if m >= 2 || k >= 2 {
                out.push(Kappa);
            }
            if k >= 2 {
                out.push(KappaHat);
            }
        }
        2 => {
            if m >= 2 {
                out.push(Alpha);
            }
            if k >= 2 {
                out.push(AlphaHat);
            }
            if m >= 4 {
                out.push(Beta);
            }
            if k >= 2 {
                out.push(BetaHat);
            }
            if k >= 4 {
                out.push(BetaTilde);
            }
        }
        _ => {}
    }
    out
}

/// A named homology generator: Σ coeff · cell ⊗ v_T, with coefficient class in R[2] or R/2R.
#[derive(Clone, Debug, Serialize)]
pub struct MkGenerator {
    pub name: String,
    pub cells: Vec<(String, i64)>,
    pub two_torsion_coefficient: bool,
}

/// Generators of H_1 / H_2 of S_n with M^k coefficients. `printed` merges the two
/// d-summands under one coefficient, as in the displayed isomorphism.
pub fn mk_generators(n: usize, k: usize, deg: usize, printed: bool) -> Vec<MkGenerator> {
    let m = n - k;
    let g = |name: String, cells: Vec<(String, i64)>, t: bool| MkGenerator { name, cells, two_torsion_coefficient: t };
    let mut out = Vec::new();
    match deg {
        1 => {
            if m >= 2 {
                out.push(g("e1".into(), vec![("e1".into(), 1)], false));
            }
            if k >= 2 {
                out.push(g(format!("e{}", m + 1), vec![(format!("e{}", m + 1), 1)], false));
            }
        }
        2 => {
            if m >= 2 {
                out.push(g("c1".into(), vec![("c1".into(), 1)], true));
            }
            if k >= 2 {
                out.push(g(format!("c{}", m + 1), vec![(format!("c{}", m + 1), 1)], true));
            }
            if m >= 4 {
                out.push(g("d(1,3)".into(), vec![("d(1,3)".into(), 1)], false));
            }
            let cross = format!("d(1,{})", m + 1);
            let upper = format!("d({},{})", m + 1, m + 3);
            if printed && k >= 4 {
                out.push(g(format!("{cross}+{upper}"), vec![(cross, 1), (upper, 1)], false));
            } else {
                if k >= 2 {
                    out.push(g(cross.clone(), vec![(cross, 1)], false));
                }
                if k >= 4 {
                    out.push(g(upper.clone(), vec![(upper, 1)], false));
                }
            }
        }
        _ => {}
    }
    out
}

/// Rank over F_2 of a 0/1 matrix.
pub fn rank_f2(rows: &[Vec<u8>]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        if let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) {
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && m[r][c] == 1 {
                    let pivot = m[rank].clone();
                    for (x, y) in m[r].iter_mut().zip(pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingReport {
    pub n: usize,
    pub k: usize,
    pub ring: String,
    pub degree: usize,
    pub cocycles: Vec<String>,
    pub generators: Vec<String>,
    /// Pairing values in the coefficient ring, rows = cocycles.
    pub matrix: Vec<Vec<i64>>,
    pub all_cocycles: bool,
    pub all_cycles: bool,
    /// Rank over F_2 after dividing by the order-2 element of the ring.
    pub rank: usize,
    pub group_rank: usize,
}

impl PairingReport {
    pub fn nondegenerate(&self) -> bool {
        self.all_cocycles
            && self.all_cycles
            && self.rank == self.group_rank
            && self.cocycles.len() == self.group_rank
            && self.generators.len() == self.group_rank
    }
}

/// Evaluates the explicit cocycles on the explicit cycle generators in degree 1 or 2.
pub fn mk_pairing(cx: &FreeComplex, k: usize, ring: RingSpec, deg: usize, printed: bool) -> Result<PairingReport> {
    let n = cx.n;
    let modulus = ring.modulus as i64;
    if modulus == 0 || modulus % 2 != 0 {
        return Err(Error::Param(format!("pairing check needs an even modulus, got {}", ring.name())));
    }
    let half = modulus / 2;
    let module = CoefficientModule::permutation(n, k, ring)?;
    let t: Vec<usize> = (n - k + 1..=n).collect();
    let vt = module.subset_index(&t).expect("T is a k-subset");
    let setup = Setup::new(cx, &module, deg, Direction::Homology)?;
    let group = setup.info();
    let mut cocycles = Vec::new();
    let mut all_cocycles = true;
    for kind in mk_cocycle_list(n, k, deg) {
        let r = if kind.needs_two_torsion() { half } else { 1 };
        let f = build_cocycle(cx, kind, r, k, ring)?;
        all_cocycles &= crate::cocycles::verify_cocycle(cx, &f)?;
        cocycles.push((kind, f));
    }
    let mut gens = Vec::new();
    let mut all_cycles = true;
    for g in mk_generators(n, k, deg, printed) {
        let c = if g.two_torsion_coefficient { half } else { 1 };
        let terms: Vec<(&str, usize, i64)> = g.cells.iter().map(|(l, a)| (l.as_str(), vt, a * c)).collect();
        let v: Vec<BigInt> = tensor_vector(cx, &module, deg, &terms)?;
        all_cycles &= setup.lift(&v).is_some();
        gens.push((g.name, v));
    }
    let mut matrix = Vec::new();
    let mut bits = Vec::new();
    for (_, f) in &cocycles {
        let row: Vec<i64> = gens.iter().map(|(_, z)| pairing(f, z)).collect::<Result<_>>()?;
        bits.push(row.iter().map(|&x| if x == half { 1 } else { 0 }).collect());
        matrix.push(row);
    }
    Ok(PairingReport {
        n,
        k,
        ring: ring.name(),
        degree: deg,
        cocycles: cocycles.iter().map(|(c, _)| c.to_string()).collect(),
        generators: gens.into_iter().map(|(g, _)| g).collect(),
        rank: rank_f2(&bits),
        group_rank: group.torsion.len() + group.free_rank,
        matrix,
        all_cocycles,
        all_cycles,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapiroRow {
    pub n: usize,
    pub k: usize,
    pub ring: String,
    pub degree: usize,
    pub direction: Direction,
    pub twisted: Vec<u64>,
    pub young: Vec<u64>,
    pub expected: Vec<u64>,
}

impl ShapiroRow {
    pub fn agrees(&self) -> bool {
        self.twisted == self.young && self.young == self.expected
    }
}

fn factors(info: &AbelianGroupInfo) -> Vec<u64> {
    let mut v = vec![0; info.free_rank];
    v.extend(&info.torsion);
    v
}

/// H_i(S_n; M^k) against H_i(S_{n-k} × S_k; R) from the product resolution and the closed form, i = 1, 2.
pub fn shapiro_crosscheck(n: usize, k: usize, ring: RingSpec) -> Result<Vec<ShapiroRow>> {
    if k == 0 || 2 * k > n {
        return Err(Error::Param(format!("need 1 <= k <= n/2, got n = {n}, k = {k}")));
    }
    let p = FreeComplex::p_complex(n, 3)?;
    let y = product_resolution(n - k, k, 3)?;
    let mk = CoefficientModule::permutation(n, k, ring)?;
    let triv = CoefficientModule::trivial(n, ring);
    let mut rows = Vec::new();
    for dir in [Direction::Homology, Direction::Cohomology] {
        for deg in 1..=2 {
            let (a, b) = match dir {
                Direction::Homology => (homology(&p, &mk, deg, false)?, homology(&y, &triv, deg, false)?),
                Direction::Cohomology => (cohomology(&p, &mk, deg, false)?, cohomology(&y, &triv, deg, false)?),
            };
            rows.push(ShapiroRow {
                n,
                k,
                ring: ring.name(),
                degree: deg,
                direction: dir,
                twisted: factors(&a.info()),
                young: factors(&b.info()),
                expected: factors(&expected_stabilizer(n, k, ring, deg, dir)?),
            });
        }
    }
    Ok(rows)
}
