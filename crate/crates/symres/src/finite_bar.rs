//! Finite permutation groups by multiplication table, and their truncated normalized
//! bar complexes with trivial integer coefficients.

use std::collections::{HashMap, VecDeque};

use symres_snf::{AbelianGroupInfo, IntComplex, IntMatrix};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Largest number of top-dimensional bar cells built without an explicit override.
pub const BAR_CELL_LIMIT: usize = 2_000_000;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    elems: Vec<Perm>,
    index: HashMap<Perm, usize>,
    table: Vec<u32>,
}

impl FiniteGroup {
    /// Closure of the generators under composition; element 0 is the identity.
    pub fn generated_by(n: usize, gens: &[Perm]) -> Self {
        let id = Perm::identity(n);
        let mut elems = vec![id];
        let mut index = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.compose(g);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(y) {
                    e.insert(elems.len());
                    elems.push(y);
                    queue.push_back(y);
                }
            }
        }
        let m = elems.len();
        let mut table = vec![0u32; m * m];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                table[i * m + j] = index[&a.compose(b)] as u32;
            }
        }
        FiniteGroup { elems, index, table }
    }

    pub fn symmetric(n: usize) -> Self {
        let gens: Vec<Perm> = (1..n).map(|i| Perm::s(n, i)).collect();
        Self::generated_by(n, &gens)
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elem(&self, i: usize) -> &Perm {
        &self.elems[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }
}

/// Number of normalized t-cells, (|G| - 1)^t.
pub fn bar_cell_count(g: &FiniteGroup, t: usize) -> usize {
    (g.order() - 1).pow(t as u32)
}

/// Nonidentity entries of a t-cell, from its index (entries are group indices ≥ 1).
pub fn bar_cell(g: &FiniteGroup, t: usize, mut idx: usize) -> Vec<usize> {
    let b = g.order() - 1;
    let mut out = vec![0; t];
    for slot in out.iter_mut().rev() {
        *slot = idx % b + 1;
        idx /= b;
    }
    out
}

pub fn bar_index(g: &FiniteGroup, cell: &[usize]) -> usize {
    let b = g.order() - 1;
    cell.iter().fold(0, |acc, &x| acc * b + (x - 1))
}

/// ∂_t of the normalized bar complex with trivial coefficients.
pub fn bar_boundary_matrix(g: &FiniteGroup, t: usize) -> IntMatrix {
    let rows = if t == 0 { 0 } else { bar_cell_count(g, t - 1) };
    let cols = bar_cell_count(g, t);
    let mut trip = Vec::with_capacity(cols * (t + 1));
    let mut face = Vec::with_capacity(t);
    for j in 0..cols {
        let cell = bar_cell(g, t, j);
        for i in 0..=t {
            face.clear();
            if i == 0 {
                face.extend_from_slice(&cell[1..]);
            } else if i == t {
                face.extend_from_slice(&cell[..t - 1]);
            } else {
                let p = g.mul(cell[i - 1], cell[i]);
                if p == 0 {
                    continue;
                }
                face.extend_from_slice(&cell[..i - 1]);
                face.push(p);
                face.extend_from_slice(&cell[i + 1..]);
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            trip.push((bar_index(g, &face), j, sign));
        }
    }
    IntMatrix::from_triplets(rows, cols, trip)
}

/// The normalized bar complex in degrees 0..=top.
pub fn bar_complex(g: &FiniteGroup, top: usize, allow_large: bool) -> Result<IntComplex> {
    let size = bar_cell_count(g, top);
    if size > BAR_CELL_LIMIT && !allow_large {
        return Err(Error::BoundExceeded { what: "bar cells", value: size, bound: BAR_CELL_LIMIT });
    }
    let mut cx = IntComplex::new();
    cx.set_dim(0, 1);
    for t in 1..=top {
        cx.set_map(t as i64, bar_boundary_matrix(g, t));
    }
    Ok(cx)
}

/// H_k(G; Z) from the bar complex truncated at degree k + 1.
pub fn bar_homology(g: &FiniteGroup, k: usize, allow_large: bool) -> Result<AbelianGroupInfo> {
    Ok(bar_complex(g, k + 1, allow_large)?.homology(k as i64))
}
