//! Exact integer linear algebra: sparse matrices, Smith normal form with optional
//! unimodular witnesses, and homology of integer chain complexes.

mod complex;
mod dense;
mod intcx;
mod matrix;
mod sparse;

use num_bigint::BigInt;
use num_traits::Zero;

pub use complex::{homology_at, homology_basis, homology_from_factors, AbelianGroupInfo, HomologyBasis};
pub use dense::{dense_snf, identity, mat_mul, DenseMat, DenseSnf};
pub use intcx::IntComplex;
pub use matrix::IntMatrix;

/// Nonzero diagonal of the Smith normal form, d1 | d2 | ... | d_rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfFactors {
    pub factors: Vec<BigInt>,
}

impl SnfFactors {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors different from one.
    pub fn nontrivial(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| **d != BigInt::from(1)).cloned().collect()
    }
}

/// Invariant factors of an integer matrix.
pub fn invariant_factors(m: &IntMatrix) -> SnfFactors {
    SnfFactors { factors: sparse::sparse_factors(m) }
}

/// Smith normal form with witnesses `u * m * v = diag`; dense, for small inputs.
pub fn snf_with_witnesses(m: &IntMatrix) -> DenseSnf {
    dense_snf(m.to_dense(), m.cols(), true)
}

/// Checks the witness identity `u * m * v = diag(d)`.
pub fn check_witnesses(m: &IntMatrix, s: &DenseSnf) -> bool {
    let (Some(u), Some(v)) = (&s.u, &s.v) else { return false };
    let prod = mat_mul(&mat_mul(u, &m.to_dense()), v);
    for (i, row) in prod.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let want = if i == j && i < s.diag.len() { s.diag[i].clone() } else { BigInt::zero() };
            if *x != want {
                return false;
            }
        }
    }
    let (Some(ui), Some(vi)) = (&s.u_inv, &s.v_inv) else { return false };
    mat_mul(u, ui) == identity(m.rows()) && mat_mul(v, vi) == identity(m.cols())
}

/// Integer solution of `m * x = b`, if one exists.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let s = snf_with_witnesses(m);
    let (u, v) = (s.u.as_ref()?, s.v.as_ref()?);
    let ub: Vec<BigInt> = u.iter().map(|row| row.iter().zip(b).map(|(a, c)| a * c).sum()).collect();
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, c) in ub.iter().enumerate() {
        match s.diag.get(i) {
            Some(d) if !d.is_zero() => {
                if !(c % d).is_zero() {
                    return None;
                }
                y[i] = c / d;
            }
            _ if !c.is_zero() => return None,
            _ => {}
        }
    }
    Some(v.iter().map(|row| row.iter().zip(&y).map(|(a, c)| a * c).sum()).collect())
}
