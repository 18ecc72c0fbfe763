//! Tensor products P^a ⊗ P^b as resolutions for the Young subgroups S_a × S_b ≤ S_{a+b},
//! with the comparison map into P_* for S_{a+b}.

use std::fmt;

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::pcomplex::{boundary_p, enumerate_p_cells, PCell, PChain};
use crate::resolution::FreeComplex;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TensorCell(pub PCell, pub PCell);

impl TensorCell {
    pub fn dim(&self) -> usize {
        self.0.dim() + self.1.dim()
    }
}

impl fmt::Display for TensorCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.0, self.1)
    }
}

pub type TensorChain = Chain<TensorCell>;

/// Generators of degree d, ordered by the degree of the left factor, descending.
pub fn tensor_cells(a: usize, b: usize, d: usize) -> Vec<TensorCell> {
    let mut out = Vec::new();
    for p in (0..=d.min(3)).rev() {
        let q = d - p;
        if q > 3 {
            continue;
        }
        for x in enumerate_p_cells(a, p) {
            for y in enumerate_p_cells(b, q) {
                out.push(TensorCell(x, y));
            }
        }
    }
    out
}

/// ∂(x ⊗ y) = ∂x ⊗ y + (-1)^|x| x ⊗ ∂y, with S_a acting on 1..a and S_b on a+1..a+b.
pub fn boundary_tensor(cell: TensorCell, a: usize, b: usize) -> Result<TensorChain> {
    let n = a + b;
    let TensorCell(x, y) = cell;
    let mut out = Chain::zero(n);
    if x.dim() > 0 {
        for (x1, g) in boundary_p(x, a)?.terms() {
            out.add_term(TensorCell(*x1, y), &g.map_perms(n, |p| p.extend(n)));
        }
    }
    if y.dim() > 0 {
        let sign = if x.dim() % 2 == 0 { 1 } else { -1 };
        for (y1, h) in boundary_p(y, b)?.terms() {
            out.add_term(TensorCell(x, *y1), &h.map_perms(n, |p| p.shifted(a, n)).scale(sign));
        }
    }
    Ok(out)
}

/// P^a ⊗ P^b in degrees 0..=top as a free complex over S_a × S_b.
pub fn product_resolution(a: usize, b: usize, top: usize) -> Result<FreeComplex> {
    let n = a + b;
    if top > 3 || a == 0 || b == 0 {
        return Err(Error::Unsupported(format!("product resolution for S_{a} x S_{b} up to degree {top}")));
    }
    let cells = (0..=top).map(|d| tensor_cells(a, b, d)).collect();
    let cx = FreeComplex::from_cells(n, cells, |c| boundary_tensor(*c, a, b).expect("enumerated cells are valid"))?;
    Ok(cx.with_group_name(format!("S_{a} x S_{b}")))
}

fn shift_cell(c: PCell, a: usize) -> PCell {
    let idx: Vec<u8> = c.indices().iter().map(|i| i + a as u8).collect();
    c.with_indices(&idx)
}

/// The comparison map f: P^a ⊗ P^b → P_* in degrees 0..=2.
pub fn product_f(cell: TensorCell, a: usize, b: usize) -> Result<PChain> {
    let n = a + b;
    let TensorCell(x, y) = cell;
    let out = match (x, y) {
        (PCell::Base, PCell::Base) => Chain::cell(n, PCell::Base),
        (x, PCell::Base) if x.dim() <= 2 => Chain::cell(n, x),
        (PCell::Base, y) if y.dim() <= 2 => Chain::cell(n, shift_cell(y, a)),
        (PCell::E(i), PCell::E(j)) => Chain::cell(n, PCell::d(i as usize, a + j as usize)).scale(-1),
        _ => return Err(Error::Unsupported(format!("comparison map on {cell}"))),
    };
    Ok(out)
}

pub fn product_f_chain(x: &TensorChain, a: usize, b: usize) -> Result<PChain> {
    let mut out = Chain::zero(a + b);
    for (c, g) in x.terms() {
        out.add_scaled(g, &product_f(*c, a, b)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Default)]
pub struct ProductReport {
    pub cells_checked: usize,
    pub d_squared_failures: Vec<String>,
    pub chain_map_failures: Vec<String>,
}

impl ProductReport {
    pub fn ok(&self) -> bool {
        self.d_squared_failures.is_empty() && self.chain_map_failures.is_empty()
    }
}

/// Checks ∂∂ = 0 through degree 3 and f∂ = ∂f on every cell of degree 1 and 2.
pub fn verify_product(a: usize, b: usize) -> Result<ProductReport> {
    let n = a + b;
    let mut rep = ProductReport::default();
    for d in 1..=3 {
        for c in tensor_cells(a, b, d) {
            rep.cells_checked += 1;
            let bd = boundary_tensor(c, a, b)?;
            if d >= 2 {
                let mut dd = Chain::zero(n);
                for (c1, g) in bd.terms() {
                    dd.add_scaled(g, &boundary_tensor(*c1, a, b)?);
                }
                if !dd.is_zero() {
                    rep.d_squared_failures.push(format!("{c}: {dd}"));
                }
            }
            if d <= 2 {
                let lhs = product_f_chain(&bd, a, b)?;
                let mut rhs = Chain::zero(n);
                for (p, g) in product_f(c, a, b)?.terms() {
                    rhs.add_scaled(g, &boundary_p(*p, n)?);
                }
                let diff = lhs.sub(&rhs);
                if !diff.is_zero() {
                    rep.chain_map_failures.push(format!("{c}: {diff}"));
                }
            }
        }
    }
    Ok(rep)
}
