use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::dense::{dense_snf, mat_mul, DenseMat};
use crate::matrix::IntMatrix;
use crate::{invariant_factors, SnfFactors};

/// A finitely generated abelian group Z^r ⊕ Z/d1 ⊕ ... with d1 | d2 | ...
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct AbelianGroupInfo {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroupInfo {
    pub fn new(free_rank: usize, mut torsion: Vec<u64>) -> Self {
        torsion.retain(|&d| d != 1);
        torsion.sort_unstable();
        AbelianGroupInfo { free_rank, torsion }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn elementary(p: u64, count: usize) -> Self {
        Self::new(0, vec![p; count])
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().map(|&d| BigInt::from(d)).product()
    }

    /// Rebuilds the invariant factor form from an arbitrary list of cyclic orders.
    pub fn from_cyclic_orders(free_rank: usize, orders: &[u64]) -> Self {
        let mut primes: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
        for &d in orders {
            let mut d = d;
            let mut p = 2;
            while d > 1 {
                if d % p == 0 {
                    let mut q = 1;
                    while d % p == 0 {
                        d /= p;
                        q *= p;
                    }
                    primes.entry(p).or_default().push(q);
                }
                p += 1;
            }
        }
        let len = primes.values().map(|v| v.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for mut powers in primes.into_values() {
            powers.sort_unstable();
            let off = len - powers.len();
            for (i, q) in powers.into_iter().enumerate() {
                factors[off + i] *= q;
            }
        }
        Self::new(free_rank, factors)
    }
}

impl fmt::Display for AbelianGroupInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && self.torsion[j] == d {
                j += 1;
            }
            if j - i == 1 {
                parts.push(format!("Z/{d}"));
            } else {
                parts.push(format!("(Z/{d})^{}", j - i));
            }
            i = j;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn to_u64(d: &BigInt) -> u64 {
    d.to_u64().expect("invariant factor does not fit in 64 bits")
}

/// Homology at the middle of C_{k+1} --d_next--> C_k --d--> C_{k-1}.
pub fn homology_at(d: &IntMatrix, d_next: &IntMatrix) -> AbelianGroupInfo {
    assert_eq!(d.cols(), d_next.rows(), "composable boundary maps expected");
    let a = invariant_factors(d);
    let b = invariant_factors(d_next);
    homology_from_factors(d.cols(), &a, &b)
}

pub fn homology_from_factors(dim: usize, a: &SnfFactors, b: &SnfFactors) -> AbelianGroupInfo {
    let free = dim - a.rank() - b.rank();
    let torsion = b.factors.iter().filter(|x| !x.is_one()).map(to_u64).collect();
    AbelianGroupInfo::new(free, torsion)
}

/// Homology with explicit generating cycles.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    pub info: AbelianGroupInfo,
    /// Generating cycles, one per cyclic summand (torsion summands first, in
    /// increasing order, then free summands).
    pub generators: Vec<Vec<BigInt>>,
    /// Order of each generator; zero for free generators.
    pub orders: Vec<BigInt>,
    // kernel basis coordinates: x = kernel * y, y = kernel_inv * x (rows r.. of v_inv)
    kernel_inv: DenseMat,
    // change of basis inside the kernel lattice
    u2: DenseMat,
    skip: usize,
}

impl HomologyBasis {
    /// Coordinates of a cycle along the generators; torsion coordinates are reduced
    /// modulo the generator order. Returns `None` if `x` is not a cycle.
    pub fn coordinates(&self, x: &[BigInt], d: &IntMatrix) -> Option<Vec<BigInt>> {
        if d.apply(x).iter().any(|v| !v.is_zero()) {
            return None;
        }
        let y: Vec<BigInt> = self
            .kernel_inv
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect();
        let z: Vec<BigInt> = self.u2.iter().map(|row| row.iter().zip(&y).map(|(a, b)| a * b).sum()).collect();
        Some(
            z.into_iter()
                .skip(self.skip)
                .zip(&self.orders)
                .map(|(c, o)| if o.is_zero() { c } else { c.mod_floor(o) })
                .collect(),
        )
    }

    /// Order of the class of the cycle `x`, zero if it has infinite order.
    pub fn class_order(&self, x: &[BigInt], d: &IntMatrix) -> Option<BigInt> {
        let c = self.coordinates(x, d)?;
        let mut ord = BigInt::one();
        for (ci, o) in c.iter().zip(&self.orders) {
            if ci.is_zero() {
                continue;
            }
            if o.is_zero() {
                return Some(BigInt::zero());
            }
            ord = ord.lcm(&(o / ci.gcd(o)));
        }
        Some(ord)
    }
}

/// Homology at C_k together with generating cycles. Uses dense transforms, so it
/// is intended for complexes of moderate size.
pub fn homology_basis(d: &IntMatrix, d_next: &IntMatrix) -> HomologyBasis {
    assert_eq!(d.cols(), d_next.rows());
    let n = d.cols();
    let s1 = dense_snf(d.to_dense(), n, true);
    let r = s1.diag.len();
    let v = s1.v.unwrap();
    let v_inv = s1.v_inv.unwrap();
    // kernel basis: columns r.. of v
    let kdim = n - r;
    let kernel: DenseMat = (0..n).map(|i| v[i][r..].to_vec()).collect();
    let kernel_inv: DenseMat = v_inv[r..].to_vec();
    // boundaries in kernel coordinates
    let b = if d_next.cols() == 0 { vec![vec![]; kdim] } else { mat_mul(&kernel_inv, &d_next.to_dense()) };
    let s2 = dense_snf(b, d_next.cols(), true);
    let u2 = s2.u.unwrap();
    let u2_inv = s2.u_inv.unwrap();
    let gens_all: DenseMat = if kdim == 0 { vec![] } else { mat_mul(&kernel, &u2_inv) };
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    let mut skip = 0;
    for j in 0..kdim {
        let o = s2.diag.get(j).cloned().unwrap_or_else(BigInt::zero);
        if o.is_one() {
            skip += 1;
            continue;
        }
        generators.push(gens_all.iter().map(|row| row[j].clone()).collect());
        orders.push(o);
    }
    let free = orders.iter().filter(|o| o.is_zero()).count();
    let torsion = orders.iter().filter(|o| !o.is_zero()).map(to_u64).collect();
    HomologyBasis { info: AbelianGroupInfo::new(free, torsion), generators, orders, kernel_inv, u2, skip }
}
