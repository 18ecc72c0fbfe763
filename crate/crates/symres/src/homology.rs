//! Homology and cohomology of free complexes with coefficients, via Smith normal form.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use symres_snf::{AbelianGroupInfo, HomologyBasis, IntComplex};

use crate::error::{Error, Result};
use crate::module::CoefficientModule;
use crate::resolution::{tensor_label, FreeComplex};

/// Largest `rows × cols` for which representatives are computed densely.
pub const DENSE_LIMIT: usize = 4_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Homology,
    Cohomology,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representative {
    /// Order of the class; 0 for infinite order.
    pub order: u64,
    pub chain: String,
}

/// Result record shared with the command line JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub group: String,
    pub module: String,
    pub degree: usize,
    pub direction: Direction,
    pub free_rank: usize,
    pub invariant_factors: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<Representative>>,
}

impl HomologyResult {
    pub fn info(&self) -> AbelianGroupInfo {
        AbelianGroupInfo::new(self.free_rank, self.invariant_factors.clone())
    }
}

/// The integer complex whose homology in degree `deg` is the requested group:
/// coinvariants (degree k) or Hom (degree -k), coned off by m for Z/m.
pub struct Setup {
    pub base: IntComplex,
    pub complex: IntComplex,
    pub deg: i64,
    pub modulus: i64,
}

impl Setup {
    pub fn new(cx: &FreeComplex, m: &CoefficientModule, k: usize, dir: Direction) -> Result<Setup> {
        if k + 1 > cx.top() {
            return Err(Error::BoundExceeded { what: "degree", value: k, bound: cx.top().saturating_sub(1) });
        }
        let (base, deg) = match dir {
            Direction::Homology => (cx.coinvariants(m), k as i64),
            Direction::Cohomology => (cx.hom_complex(m), -(k as i64)),
        };
        let modulus = m.ring().modulus as i64;
        let complex = if modulus == 0 { base.clone() } else { base.cone(modulus) };
        Ok(Setup { base, complex, deg, modulus })
    }

    pub fn info(&self) -> AbelianGroupInfo {
        self.complex.homology(self.deg)
    }

    pub fn dense_ok(&self) -> bool {
        let c = self.complex.dim(self.deg);
        c * (self.complex.dim(self.deg - 1) + self.complex.dim(self.deg + 1)) <= DENSE_LIMIT
    }

    pub fn basis(&self) -> HomologyBasis {
        self.complex.homology_basis(self.deg)
    }

    /// Embeds a cycle of the base complex (reduced mod m) into the cone.
    pub fn lift(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        if self.modulus == 0 {
            return Some(x.to_vec());
        }
        let m = BigInt::from(self.modulus);
        let dx = self.base.map(self.deg).apply(x);
        let mut out = x.to_vec();
        for v in dx {
            if !(&v % &m).is_zero() {
                return None;
            }
            out.push(-(v / &m));
        }
        Some(out)
    }

    /// Order of the class of a base-complex cycle, 0 if infinite; `None` if not a cycle.
    pub fn class_order(&self, basis: &HomologyBasis, x: &[BigInt]) -> Option<u64> {
        let y = self.lift(x)?;
        basis.class_order(&y, &self.complex.map(self.deg)).map(|o| o.to_u64().expect("small order"))
    }

    /// Coordinates of a base-complex cycle along the basis generators.
    pub fn coordinates(&self, basis: &HomologyBasis, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let y = self.lift(x)?;
        basis.coordinates(&y, &self.complex.map(self.deg))
    }

    /// Projects a generator to the base complex, reduced mod m.
    pub fn project(&self, v: &[BigInt]) -> Vec<BigInt> {
        let len = self.base.dim(self.deg);
        let m = BigInt::from(self.modulus);
        v[..len]
            .iter()
            .map(|x| if self.modulus == 0 { x.clone() } else { ((x % &m) + &m) % &m })
            .collect()
    }
}

fn describe(cx: &FreeComplex, m: &CoefficientModule, k: usize, v: &[BigInt]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("{c}*{}", tensor_label(cx, m, k, i)))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn compute(cx: &FreeComplex, m: &CoefficientModule, k: usize, dir: Direction, reps: bool) -> Result<HomologyResult> {
    let setup = Setup::new(cx, m, k, dir)?;
    let (info, representatives) = if reps && setup.dense_ok() {
        let basis = setup.basis();
        let r = basis
            .generators
            .iter()
            .zip(&basis.orders)
            .map(|(g, o)| Representative {
                order: o.to_u64().unwrap_or(0),
                chain: describe(cx, m, k, &setup.project(g)),
            })
            .collect();
        (basis.info.clone(), Some(r))
    } else {
        (setup.info(), None)
    };
    Ok(HomologyResult {
        group: cx.group.clone(),
        module: m.descriptor(),
        degree: k,
        direction: dir,
        free_rank: info.free_rank,
        invariant_factors: info.torsion,
        representatives,
    })
}

/// H_k(G; M) from the coinvariants of a resolution (valid for k < top).
pub fn homology(cx: &FreeComplex, m: &CoefficientModule, k: usize, reps: bool) -> Result<HomologyResult> {
    compute(cx, m, k, Direction::Homology, reps)
}

/// H^k(G; M) from the Hom complex of a resolution (valid for k < top).
pub fn cohomology(cx: &FreeComplex, m: &CoefficientModule, k: usize, reps: bool) -> Result<HomologyResult> {
    compute(cx, m, k, Direction::Cohomology, reps)
}

/// Coordinate vector of `Σ coeff · gen ⊗ b` in the coinvariant (or cochain) basis of degree k.
pub fn tensor_vector(cx: &FreeComplex, m: &CoefficientModule, k: usize, terms: &[(&str, usize, i64)]) -> Result<Vec<BigInt>> {
    let dm = m.dim();
    let mut v = vec![BigInt::zero(); cx.rank(k) * dm];
    for &(gen, b, c) in terms {
        let j = cx.index_of(k, gen).ok_or_else(|| Error::InvalidCell(format!("{gen} in degree {k}")))?;
        v[j * dm + b] += c;
    }
    Ok(v)
}

/// Writes result rows as CSV.
pub fn write_csv<W: std::io::Write>(out: W, rows: &[HomologyResult]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["group", "module", "direction", "degree", "free_rank", "invariant_factors"])
        .map_err(|e| Error::Io(e.to_string()))?;
    for r in rows {
        let f: Vec<String> = r.invariant_factors.iter().map(|d| d.to_string()).collect();
        let dir = match r.direction {
            Direction::Homology => "homology",
            Direction::Cohomology => "cohomology",
        };
        w.write_record([&r.group, &r.module, dir, &r.degree.to_string(), &r.free_rank.to_string(), &f.join(" ")])
            .map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))?;
    Ok(())
}
