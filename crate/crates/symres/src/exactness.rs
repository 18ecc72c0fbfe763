//! Checks on P_* itself: ∂∂ = 0 on generators, exactness of the expanded augmented
//! complex in low degrees, and closed-form cell counts.

use serde::Serialize;
use symres_snf::{AbelianGroupInfo, IntComplex, IntMatrix};

use crate::error::{Error, Result};
use crate::expand::{expand_map, factorial};
use crate::pcomplex::{boundary_chain, boundary_p, enumerate_p_cells, PCell};

/// Largest n for the expanded exactness check without an explicit override.
pub const EXACTNESS_LIMIT: usize = 5;

/// Cells whose ∂∂ is not the zero chain.
pub fn d_squared_failures(n: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for d in 2..=3 {
        for c in enumerate_p_cells(n, d) {
            let dd = boundary_chain(&boundary_p(c, n)?, n);
            if !dd.is_zero() {
                out.push(format!("{c}: {dd}"));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactnessReport {
    pub n: usize,
    pub d2_zero: bool,
    /// Homology of the augmented expanded complex in degrees 0, 1, 2.
    pub homology_deg_0_1_2: [AbelianGroupInfo; 3],
    pub rank_d1: usize,
}

impl ExactnessReport {
    pub fn exact(&self) -> bool {
        self.d2_zero && self.homology_deg_0_1_2.iter().all(|h| h.is_trivial())
    }
}

/// Expands P_* to free abelian groups with basis g·cell, augments P_0 → Z, and computes
/// the homology in degrees 0..2.
pub fn verify_p_exactness(n: usize, allow_large: bool) -> Result<ExactnessReport> {
    if n > EXACTNESS_LIMIT && !allow_large {
        return Err(Error::BoundExceeded { what: "n for expanded exactness", value: n, bound: EXACTNESS_LIMIT });
    }
    if n < 2 {
        return Err(Error::Param(format!("exactness check needs n >= 2, got {n}")));
    }
    let nf = factorial(n);
    let cells: Vec<Vec<PCell>> = (0..=3).map(|d| enumerate_p_cells(n, d)).collect();
    let mut cx = IntComplex::new();
    cx.set_dim(-1, 1);
    cx.set_map(0, IntMatrix::from_triplets(1, nf, (0..nf).map(|j| (0, j, 1))));
    for d in 1..=3 {
        let m = expand_map(n, &cells[d], &cells[d - 1], |c| boundary_p(*c, n).expect("enumerated cells are valid"));
        cx.set_map(d as i64, m);
    }
    let homology = [cx.homology(0), cx.homology(1), cx.homology(2)];
    let rank_d1 = symres_snf::invariant_factors(&cx.map(1)).rank();
    Ok(ExactnessReport { n, d2_zero: d_squared_failures(n)?.is_empty(), homology_deg_0_1_2: homology, rank_d1 })
}

fn choose(n: i64, k: i64) -> i64 {
    if n < k || k < 0 {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of generators of P_dim for S_n, from closed forms (m = n − 1).
pub fn cell_count_formula(n: usize, dim: usize) -> usize {
    let m = n as i64 - 1;
    let pos = |x: i64| x.max(0);
    let count = match dim {
        0 => 1,
        1 => pos(m),
        2 => pos(m) + pos(m - 1) + choose(m - 1, 2),
        3 => {
            let c32 = pos(m - 1) * pos(m - 2);
            let c34 = pos(m - 2) * pos(m - 3);
            pos(m) + c32 + choose(m - 2, 3) + c34 + 2 * pos(m - 1) + pos(m - 2)
        }
        _ => 0,
    };
    count as usize
}
