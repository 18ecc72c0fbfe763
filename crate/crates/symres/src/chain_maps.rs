//! Chain maps ψ: Q_* → P_* (degrees 0..3) and φ: P_* → Q_* (degrees 0..2).

use serde::Serialize;

use crate::bar::{enumerate_essential, essential_type, BarChain, BarSimplex, PairType, QRewriter};
use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::group_ring::GroupRingElem;
use crate::pcomplex::{boundary_chain, boundary_p, enumerate_p_cells, PCell, PChain};
use crate::qformulas::{class_label, Table};
use crate::rewrite::nf_indices;

/// Accumulates a P-chain from integer-indexed cells, remembering illegal labels.
pub(crate) struct PBuilder {
    n: usize,
    pub(crate) out: PChain,
    pub(crate) invalid: Vec<String>,
}

impl PBuilder {
    pub(crate) fn new(n: usize) -> Self {
        PBuilder { n, out: Chain::zero(n), invalid: Vec::new() }
    }

    /// ρ(a, b) = s_a s_{a+1} ... s_b, the identity when b < a.
    pub(crate) fn r(&self, a: i64, b: i64) -> GroupRingElem {
        if b < a {
            return GroupRingElem::one(self.n);
        }
        GroupRingElem::ramp(self.n, a as usize, b as usize)
    }

    pub(crate) fn s(&self, a: i64) -> GroupRingElem {
        GroupRingElem::s(self.n, a as usize)
    }

    pub(crate) fn one(&self) -> GroupRingElem {
        GroupRingElem::one(self.n)
    }

    pub(crate) fn add(&mut self, a: &GroupRingElem, kind: &str, idx: &[i64]) {
        let label = format!("{kind}{idx:?}");
        if idx.iter().any(|&x| !(1..=255).contains(&x)) {
            self.invalid.push(label);
            return;
        }
        let u: Vec<u8> = idx.iter().map(|&x| x as u8).collect();
        let cell = match (kind, u.as_slice()) {
            ("*", []) => PCell::Base,
            ("e", &[i]) => PCell::E(i),
            ("c", &[i]) => PCell::C(i),
            ("b", &[i]) => PCell::B(i),
            ("d", &[i, j]) => PCell::D(i, j),
            ("c31", &[i]) => PCell::C31(i),
            ("c32", &[i, j]) => PCell::C32(i, j),
            ("c33", &[i, j, k]) => PCell::C33(i, j, k),
            ("c34", &[i, j]) => PCell::C34(i, j),
            ("c35", &[i]) => PCell::C35(i),
            ("c36", &[i]) => PCell::C36(i),
            ("c37", &[i]) => PCell::C37(i),
            _ => panic!("unknown cell kind {kind}"),
        };
        if !cell.is_valid(self.n) {
            self.invalid.push(label);
            return;
        }
        self.out.add_term(cell, a);
    }
}

fn ints(p: &crate::perm::Perm) -> i64 {
    nf_indices(p)[0] as i64
}

/// ψ in degrees 0, 1 and 2.
pub fn psi(sigma: &BarSimplex, n: usize) -> Result<PChain> {
    let types = essential_type(sigma).ok_or_else(|| Error::NotEssential(sigma.to_string()))?;
    let e = sigma.entries();
    let mut b = PBuilder::new(n);
    let one = b.one();
    match e.len() {
        0 => b.add(&one, "*", &[]),
        1 => b.add(&one, "e", &[ints(&e[0])]),
        2 => match types[0] {
            PairType::S => b.add(&one, "c", &[ints(&e[0])]),
            PairType::C => b.add(&-&one, "d", &[ints(&e[0]), ints(&e[1])]),
            PairType::B => {
                let (j, i) = (ints(&e[0]), ints(&e[1]));
                for l in i..=j - 2 {
                    b.add(&b.r(i, l - 1), "d", &[l, j]);
                }
                b.add(&b.r(i, j - 2), "b", &[j - 1]);
            }
        },
        3 => return psi3(sigma, n, Table::Corrected),
        _ => return Err(Error::Unsupported(format!("ψ in degree {}", e.len()))),
    }
    Ok(b.out)
}

/// The filling ψ3(σ), with any labels that are not generators of P_3.
pub fn psi3_detailed(sigma: &BarSimplex, n: usize, table: Table) -> Result<(PChain, Vec<String>)> {
    let types = essential_type(sigma).filter(|t| t.len() == 2).ok_or_else(|| Error::NotEssential(sigma.to_string()))?;
    let e = sigma.entries();
    let mut b = PBuilder::new(n);
    let one = b.one();
    use PairType::*;
    match (types[0], types[1]) {
        (S, S) => b.add(&one, "c31", &[ints(&e[0])]),
        (S, C) => b.add(&one, "c32", &[ints(&e[0]), ints(&e[2])]),
        (S, B) => {
            let (j, i) = (ints(&e[0]), ints(&e[2]));
            b.add(&b.r(i, j - 2), "c35", &[j - 1]);
            for l in i..=j - 2 {
                b.add(&b.r(i, l - 1), "c32", &[j, l]);
            }
        }
        (C, S) => b.add(&one, "c32", &[ints(&e[1]), ints(&e[0])]),
        (C, C) => b.add(&-&one, "c33", &[ints(&e[0]), ints(&e[1]), ints(&e[2])]),
        (C, B) => {
            let (i, j, k) = (ints(&e[0]), ints(&e[1]), ints(&e[2]));
            if i < k - 1 {
                for l in 0..=j - k - 2 {
                    b.add(&b.r(k, k + l - 1), "c33", &[i, k + l, j]);
                }
                b.add(&b.r(k, j - 2), "c34", &[j - 1, i]);
            } else if i == k {
                b.add(&-&one, "c32", &[k, j]);
            } else if i > k {
                let sign = if table == Table::Corrected { -1 } else { 1 };
                for l in k..=i - 2 {
                    b.add(&b.r(k, l - 1).scale(sign), "c33", &[l, i, j]);
                }
                b.add(&-b.r(k, i - 2), "c34", &[i - 1, j]);
                for l in i + 1..=j - 2 {
                    b.add(&b.r(k, l - 1), "c33", &[i - 1, l, j]);
                }
                b.add(&b.r(k, j - 2), "c34", &[j - 1, i - 1]);
            }
        }
        (B, S) => {
            let (j, i) = (ints(&e[0]), ints(&e[1]));
            b.add(&b.r(i, j - 2), "c36", &[j - 1]);
            b.add(&-b.r(i, j - 1), "c35", &[j - 1]);
        }
        (B, C) => {
            let (i, k, j) = (ints(&e[0]), ints(&e[1]), ints(&e[2]));
            for l in 0..=i - k - 2 {
                b.add(&b.r(k, k + l - 1), "c33", &[k + l, i, j]);
            }
            b.add(&b.r(k, i - 2), "c34", &[i - 1, j]);
        }
        (B, B) => {
            let (j, i, k) = (ints(&e[0]), ints(&e[1]), ints(&e[2]));
            if k < i {
                bb_first(&mut b, i, j, k, table);
            } else if k + 1 < j {
                bb_second(&mut b, i, j, k, table);
            } else {
                for t in 0..=j - i - 2 {
                    b.add(&-b.r(i, i + t - 1), "c32", &[j, i + t]);
                }
                b.add(&-b.r(i, j - 2), "c31", &[j]);
                b.add(&-b.r(i, j - 1), "c36", &[j - 1]);
                if table == Table::Corrected {
                    let rho = b.r(i, j - 2);
                    let sj_sj1 = &b.s(j) * &b.s(j - 1);
                    b.add(&-&rho, "c31", &[j - 1]);
                    b.add(&(&rho * &(&b.one() + &sj_sj1)), "c31", &[j]);
                    b.add(&(&rho * &(&sj_sj1 - &b.s(j - 1))), "c35", &[j - 1]);
                    b.add(&(&rho * &(&b.one() - &b.s(j))), "c36", &[j - 1]);
                }
            }
        }
    }
    Ok((b.out, b.invalid))
}

// k < i < j
fn bb_first(b: &mut PBuilder, i: i64, j: i64, k: i64, _table: Table) {
    let p = &b.r(i, j - 2) * &b.r(k, j - 3);
    b.add(&p, "c37", &[j - 2]);
    for l in 0..=j - k - 3 {
        let p = &b.r(i, j - 2) * &b.r(k, k + l - 1);
        b.add(&p, "c34", &[j - 1, k + l]);
    }
    for l in 0..=j - i - 2 {
        let p = &b.r(k, j - 2) * &b.r(i - 1, i - 2 + l);
        b.add(&-p, "c34", &[j - 1, i - 1 + l]);
    }
    for l in 0..=j - i - 2 {
        for m in 0..=i - k - 2 {
            let p = &b.r(i, i - 1 + l) * &b.r(k, k - 1 + m);
            b.add(&p, "c33", &[k + m, i + l, j]);
        }
    }
    for l in 0..=j - i - 2 {
        let p = &b.r(i, i - 1 + l) * &b.r(k, i - 2 + l);
        b.add(&p, "c34", &[i - 1 + l, j]);
    }
    for l in 1..=j - i - 2 {
        for m in (i - k - 1)..=(i - k + l - 2) {
            let p = &b.r(i, i - 1 + l) * &b.r(k, k - 1 + m);
            b.add(&p, "c33", &[k + m, i + l, j]);
        }
    }
    for l in 0..=j - i - 3 {
        for m in (i - k + l + 1)..=(j - k - 2) {
            let p = &b.r(i, i - 1 + l) * &b.r(k, k - 1 + m);
            b.add(&-p, "c33", &[i + l - 1, k + m, j]);
        }
    }
}

// i <= k, j - k >= 2
fn bb_second(b: &mut PBuilder, i: i64, j: i64, k: i64, table: Table) {
    let p = &b.r(i, j - 2) * &b.r(k, j - 3);
    b.add(&p, "c37", &[j - 2]);
    for l in 0..=j - k - 3 {
        let p = &b.r(i, j - 2) * &b.r(k, k + l - 1);
        b.add(&p, "c34", &[j - 1, k + l]);
    }
    for l in 0..=j - i - 3 {
        let p = &b.r(k + 1, j - 2) * &b.r(i, i - 1 + l);
        b.add(&-p, "c34", &[j - 1, i + l]);
    }
    let sign = if table == Table::Corrected { -1 } else { 1 };
    for l in 0..=k - i - 1 {
        for m in 1..=j - k - 2 {
            let p = &b.r(i, i - 1 + l) * &b.r(k + 1, k - 1 + m);
            b.add(&p.scale(sign), "c33", &[i + l, k + m, j]);
        }
    }
    b.add(&b.r(i, k - 1), "c32", &[k, j]);
    for l in 0..=j - k - 3 {
        let p = &b.r(i, k + l) * &b.r(k, k - 1 + l);
        b.add(&p, "c34", &[k + l, j]);
    }
    for l in (k - i + 2)..=(j - i - 2) {
        for m in 0..=(l - k + i - 2) {
            let p = &b.r(i, i - 1 + l) * &b.r(k, k - 1 + m);
            b.add(&p, "c33", &[k + m, i + l, j]);
        }
    }
    for l in (k - i)..=(j - i - 4) {
        for m in (i + l - k + 2)..=(j - k - 2) {
            let p = &b.r(i, i + l) * &b.r(k, k - 1 + m);
            b.add(&-p, "c33", &[i + l, k + m, j]);
        }
    }
}

/// ψ3(σ); fails if the filling names a label that is not a generator.
pub fn psi3(sigma: &BarSimplex, n: usize, table: Table) -> Result<PChain> {
    let (c, invalid) = psi3_detailed(sigma, n, table)?;
    if let Some(bad) = invalid.first() {
        return Err(Error::InvalidCell(bad.clone()));
    }
    Ok(c)
}

/// φ in degrees 0, 1 and 2.
pub fn phi(cell: PCell, n: usize) -> Result<BarChain> {
    if !cell.is_valid(n) {
        return Err(Error::InvalidCell(cell.to_string()));
    }
    let simplex = |w: &[&[usize]]| BarSimplex::from_words(n, w).expect("nondegenerate");
    let c = match cell {
        PCell::Base => Chain::cell(n, BarSimplex(vec![])),
        PCell::E(i) => Chain::cell(n, simplex(&[&[i as usize]])),
        PCell::C(i) => Chain::cell(n, simplex(&[&[i as usize], &[i as usize]])),
        PCell::B(i) => {
            let i = i as usize;
            Chain::cell(n, simplex(&[&[i + 1], &[i, i + 1]]))
        }
        PCell::D(i, j) => Chain::cell(n, simplex(&[&[i as usize], &[j as usize]])).scale(-1),
        _ => return Err(Error::Unsupported("φ is defined in degrees 0..2 only".into())),
    };
    Ok(c)
}

/// ψ extended linearly to a Q-chain.
pub fn psi_chain(x: &BarChain, n: usize) -> Result<PChain> {
    let mut out = Chain::zero(n);
    for (c, a) in x.terms() {
        out.add_scaled(a, &psi(c, n)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct MapFailure {
    pub check: String,
    pub cell: String,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainMapReport {
    pub n: usize,
    pub psi_cells_checked: usize,
    pub phi_cells_checked: usize,
    pub failures: Vec<MapFailure>,
}

impl ChainMapReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Residual ∂ψ3(σ) − ψ2(∂σ) for one essential 3-cell, or the illegal labels in the filling.
pub fn psi3_residual(sigma: &BarSimplex, n: usize, table: Table, q: &mut QRewriter) -> Result<PChain> {
    let (fill, invalid) = psi3_detailed(sigma, n, table)?;
    if let Some(bad) = invalid.first() {
        return Err(Error::InvalidCell(bad.clone()));
    }
    let lhs = boundary_chain(&fill, n);
    let rhs = psi_chain(&q.boundary_q(sigma), n)?;
    Ok(lhs.sub(&rhs))
}

/// Checks ψ in degrees 1..max_psi_dim, φ in degrees 1..2 and ψ2∘φ2 = id.
pub fn verify_chain_maps_upto(n: usize, max_psi_dim: usize) -> Result<ChainMapReport> {
    if n > 8 {
        return Err(Error::BoundExceeded { what: "n", value: n, bound: 8 });
    }
    let mut q = QRewriter::new(n);
    let mut failures = Vec::new();
    let mut psi_cells = 0;
    for t in 1..=max_psi_dim.min(3) {
        for sigma in enumerate_essential(n, t) {
            psi_cells += 1;
            let residual = if t == 3 {
                psi3_residual(&sigma, n, Table::Corrected, &mut q)
            } else {
                psi(&sigma, n).and_then(|x| {
                    let lhs = boundary_chain(&x, n);
                    Ok(lhs.sub(&psi_chain(&q.boundary_q(&sigma), n)?))
                })
            };
            match residual {
                Ok(r) if r.is_zero() => {}
                Ok(r) => failures.push(MapFailure {
                    check: format!("psi{t}"),
                    cell: sigma.to_string(),
                    residual: r.to_string(),
                }),
                Err(e) => failures.push(MapFailure {
                    check: format!("psi{t}"),
                    cell: sigma.to_string(),
                    residual: e.to_string(),
                }),
            }
        }
    }
    let mut phi_cells = 0;
    for dim in 1..=2 {
        for cell in enumerate_p_cells(n, dim) {
            phi_cells += 1;
            let image = phi(cell, n)?;
            let lhs = q.q_chain(&image.map(n, |s| s.boundary(n)));
            let rhs = boundary_p(cell, n)?.map(n, |c| phi(*c, n).expect("φ defined"));
            let r = lhs.sub(&rhs);
            if !r.is_zero() {
                failures.push(MapFailure { check: "phi".into(), cell: cell.to_string(), residual: r.to_string() });
            }
            if dim == 2 {
                let back = psi_chain(&image, n)?;
                let r = back.sub(&Chain::cell(n, cell));
                if !r.is_zero() {
                    failures.push(MapFailure { check: "psi2∘phi2".into(), cell: cell.to_string(), residual: r.to_string() });
                }
            }
        }
    }
    Ok(ChainMapReport { n, psi_cells_checked: psi_cells, phi_cells_checked: phi_cells, failures })
}

pub fn verify_chain_maps(n: usize) -> Result<ChainMapReport> {
    verify_chain_maps_upto(n, 3)
}

/// Per-class summary of the printed fillings against the boundary identity.
pub fn psi3_printed_summary(n: usize) -> Result<Vec<(String, usize, usize)>> {
    let mut q = QRewriter::new(n);
    let mut out: Vec<(String, usize, usize)> = Vec::new();
    for sigma in enumerate_essential(n, 3) {
        let class = class_label(&essential_type(&sigma).expect("essential"));
        let good = matches!(psi3_residual(&sigma, n, Table::Printed, &mut q), Ok(r) if r.is_zero());
        match out.iter_mut().find(|(c, _, _)| *c == class) {
            Some(e) => {
                e.1 += 1;
                e.2 += good as usize;
            }
            None => out.push((class, 1, good as usize)),
        }
    }
    Ok(out)
}
