use std::collections::BTreeMap;

use crate::complex::{homology_at, homology_basis, AbelianGroupInfo, HomologyBasis};
use crate::matrix::IntMatrix;

/// A bounded chain complex of free abelian groups, `d(k): C_k -> C_{k-1}`.
/// Degrees may be negative; cochain complexes are stored with `C_{-k} = C^k`.
#[derive(Clone, Debug, Default)]
pub struct IntComplex {
    dims: BTreeMap<i64, usize>,
    maps: BTreeMap<i64, IntMatrix>,
}

impl IntComplex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_dim(&mut self, k: i64, rank: usize) {
        self.dims.insert(k, rank);
    }

    /// Sets `d(k)`; also records the ranks of `C_k` and `C_{k-1}`.
    pub fn set_map(&mut self, k: i64, m: IntMatrix) {
        for (deg, r) in [(k, m.cols()), (k - 1, m.rows())] {
            let old = self.dims.insert(deg, r);
            assert!(old.is_none_or(|o| o == r), "rank of C_{deg} changed");
        }
        self.maps.insert(k, m);
    }

    pub fn dim(&self, k: i64) -> usize {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    pub fn map(&self, k: i64) -> IntMatrix {
        self.maps.get(&k).cloned().unwrap_or_else(|| IntMatrix::zeros(self.dim(k - 1), self.dim(k)))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.dims.keys().copied()
    }

    pub fn homology(&self, k: i64) -> AbelianGroupInfo {
        homology_at(&self.map(k), &self.map(k + 1))
    }

    /// Homology with generating cycles (dense; moderate sizes only).
    pub fn homology_basis(&self, k: i64) -> HomologyBasis {
        homology_basis(&self.map(k), &self.map(k + 1))
    }

    /// Whether every composite d(k-1) d(k) vanishes.
    pub fn is_complex(&self) -> bool {
        self.maps.keys().all(|&k| self.map(k - 1).mul(&self.map(k)).is_zero())
    }

    /// Mapping cone of multiplication by m: `C_k ⊕ C_{k-1}`, `(x, y) -> (dx + m y, -dy)`.
    /// For a complex of free groups its homology is that of `C ⊗ Z/m`.
    pub fn cone(&self, m: i64) -> IntComplex {
        let mut out = IntComplex::new();
        let lo = self.dims.keys().next().copied().unwrap_or(0);
        let hi = self.dims.keys().last().copied().unwrap_or(0) + 1;
        for k in lo..=hi {
            let a = self.map(k);
            let b = IntMatrix::identity(self.dim(k - 1)).scaled(m);
            let c = IntMatrix::zeros(self.dim(k - 2), self.dim(k));
            let d = self.map(k - 1).scaled(-1);
            out.set_map(k, IntMatrix::block(&a, &b, &c, &d));
        }
        out
    }

    /// The dual cochain complex, stored with `C_{-k} = Hom(C_k, Z)`.
    pub fn dual(&self) -> IntComplex {
        let mut out = IntComplex::new();
        for (&k, &r) in &self.dims {
            out.set_dim(-k, r);
        }
        for (&k, m) in &self.maps {
            out.set_map(1 - k, m.transpose());
        }
        out
    }

    /// Splits a cone vector of degree k into its `C_k` and `C_{k-1}` parts.
    pub fn split_cone_vector<'a, T>(&self, k: i64, v: &'a [T]) -> (&'a [T], &'a [T]) {
        v.split_at(self.dim(k))
    }
}
