//! Finitely generated free Z[G]-complexes, G ≤ S_n, and their coinvariant and
//! Hom complexes with permutation-basis coefficients.

use std::collections::HashMap;
use std::fmt::Display;
use std::hash::Hash;

use serde::Serialize;
use symres_snf::{IntComplex, IntMatrix};

use crate::bar::{enumerate_essential, QRewriter};
use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::module::CoefficientModule;
use crate::pcomplex::{boundary_p, enumerate_p_cells};
use crate::perm::Perm;

/// One term `coeff * g * gen` of a boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub gen: usize,
    pub g: Perm,
    pub coeff: i64,
}

/// Generators in degrees 0..=top with equivariant boundaries.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    pub group: String,
    pub n: usize,
    pub labels: Vec<Vec<String>>,
    pub boundaries: Vec<Vec<Vec<Term>>>,
}

impl FreeComplex {
    /// Builds from cell lists per degree and a boundary function on cells.
    pub fn from_cells<C>(n: usize, cells: Vec<Vec<C>>, mut boundary: impl FnMut(&C) -> Chain<C>) -> Result<Self>
    where
        C: Ord + Clone + Hash + Display,
    {
        let mut labels = Vec::new();
        let mut boundaries = Vec::new();
        for (k, list) in cells.iter().enumerate() {
            labels.push(list.iter().map(|c| c.to_string()).collect());
            if k == 0 {
                boundaries.push(vec![vec![]; list.len()]);
                continue;
            }
            let idx: HashMap<&C, usize> = cells[k - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
            let mut col = Vec::with_capacity(list.len());
            for c in list {
                let mut terms = Vec::new();
                for (face, a) in boundary(c).terms() {
                    let gen = *idx.get(face).ok_or_else(|| Error::InvalidCell(format!("{face} in boundary of {c}")))?;
                    for (g, coeff) in a.terms() {
                        terms.push(Term { gen, g: *g, coeff });
                    }
                }
                col.push(terms);
            }
            boundaries.push(col);
        }
        Ok(FreeComplex { group: format!("S_{n}"), n, labels, boundaries })
    }

    /// The complex P_* for S_n in degrees 0..=top (top ≤ 3).
    pub fn p_complex(n: usize, top: usize) -> Result<Self> {
        if top > 3 {
            return Err(Error::Unsupported(format!("P_* has no cells in degree {top}")));
        }
        let cells = (0..=top).map(|d| enumerate_p_cells(n, d)).collect();
        Self::from_cells(n, cells, |c| boundary_p(*c, n).expect("enumerated cells are valid"))
    }

    /// The quotient complex Q_* for S_n in degrees 0..=top.
    pub fn q_complex(n: usize, top: usize, q: &mut QRewriter) -> Result<Self> {
        let cells = (0..=top).map(|t| enumerate_essential(n, t)).collect();
        Self::from_cells(n, cells, |c| q.boundary_q(c))
    }

    pub fn with_group_name(mut self, name: impl Into<String>) -> Self {
        self.group = name.into();
        self
    }

    pub fn top(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn rank(&self, k: usize) -> usize {
        self.labels.get(k).map_or(0, |l| l.len())
    }

    pub fn index_of(&self, k: usize, label: &str) -> Option<usize> {
        self.labels.get(k)?.iter().position(|l| l == label)
    }

    /// Coinvariants `C_* ⊗_G M` over Z: basis (generator, module basis vector),
    /// `g·p ⊗ m ~ p ⊗ g⁻¹·m`.
    pub fn coinvariants(&self, m: &CoefficientModule) -> IntComplex {
        let dm = m.dim();
        let mut out = IntComplex::new();
        out.set_dim(0, self.rank(0) * dm);
        for k in 1..=self.top() {
            let mut trip = Vec::new();
            for (j, terms) in self.boundaries[k].iter().enumerate() {
                for t in terms {
                    let ginv = t.g.inverse();
                    for b in 0..dm {
                        trip.push((t.gen * dm + m.act(&ginv, b), j * dm + b, t.coeff));
                    }
                }
            }
            out.set_map(k as i64, IntMatrix::from_triplets(self.rank(k - 1) * dm, self.rank(k) * dm, trip));
        }
        out
    }

    /// `Hom_G(C_*, M)` over Z, stored with `C_{-k} = Hom(C_k, M)`; a cochain is
    /// the tuple of its values on generators, `(δf)(x) = f(∂x)`.
    pub fn hom_complex(&self, m: &CoefficientModule) -> IntComplex {
        let dm = m.dim();
        let mut out = IntComplex::new();
        out.set_dim(0, self.rank(0) * dm);
        for k in 1..=self.top() {
            let mut trip = Vec::new();
            for (j, terms) in self.boundaries[k].iter().enumerate() {
                for t in terms {
                    for b in 0..dm {
                        trip.push((j * dm + m.act(&t.g, b), t.gen * dm + b, t.coeff));
                    }
                }
            }
            out.set_map(1 - k as i64, IntMatrix::from_triplets(self.rank(k) * dm, self.rank(k - 1) * dm, trip));
        }
        out
    }

    /// Checks ∂∂ = 0 on generators as group-ring identities.
    pub fn d_squared_zero(&self) -> bool {
        for k in 2..=self.top() {
            for terms in &self.boundaries[k] {
                let mut acc: HashMap<(usize, Perm), i64> = HashMap::new();
                for t in terms {
                    for u in &self.boundaries[k - 1][t.gen] {
                        *acc.entry((u.gen, t.g.compose(&u.g))).or_default() += t.coeff * u.coeff;
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExportTerm {
    pub cell: String,
    pub perm: Vec<usize>,
    pub coeff: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExportCell {
    pub label: String,
    pub boundary: Vec<ExportTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExportDim {
    pub dim: usize,
    pub cells: Vec<ExportCell>,
}

/// Cells in canonical order with boundary term lists `coeff * perm * cell`.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexExport {
    pub group: String,
    pub n: usize,
    pub dims: Vec<ExportDim>,
}

impl FreeComplex {
    pub fn export(&self) -> ComplexExport {
        let dims = (0..=self.top())
            .map(|k| ExportDim {
                dim: k,
                cells: self.labels[k]
                    .iter()
                    .zip(&self.boundaries[k])
                    .map(|(label, terms)| ExportCell {
                        label: label.clone(),
                        boundary: terms
                            .iter()
                            .map(|t| ExportTerm { cell: self.labels[k - 1][t.gen].clone(), perm: t.g.images(), coeff: t.coeff })
                            .collect(),
                    })
                    .collect(),
            })
            .collect();
        ComplexExport { group: self.group.clone(), n: self.n, dims }
    }
}

/// Label of the coinvariant basis vector `gen ⊗ b`.
pub fn tensor_label(cx: &FreeComplex, m: &CoefficientModule, k: usize, index: usize) -> String {
    let dm = m.dim();
    let gen = &cx.labels[k][index / dm];
    if dm == 1 {
        gen.clone()
    } else {
        format!("{gen}⊗{}", m.label(index % dm))
    }
}
