//! The partial prism operator Π(α, ·) on P_* in degrees 0..2, for consecutive cycles
//! α = (i, i+1, ..., j), with ∂Π(α, c) = α·c' − c − Π(α, ∂c).

use std::fmt;

use serde::Serialize;

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::group_ring::GroupRingElem;
use crate::pcomplex::{boundary_chain, boundary_p, enumerate_p_cells, PCell, PChain};

/// The cycle (i, i+1, ..., j), acting as the group element s_i s_{i+1} ... s_{j-1}.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ConsecutiveCycle {
    pub i: usize,
    pub j: usize,
}

impl ConsecutiveCycle {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || j <= i {
            return Err(Error::Param(format!("not a consecutive cycle: ({i}..{j})")));
        }
        Ok(ConsecutiveCycle { i, j })
    }

    pub fn element(&self, n: usize) -> GroupRingElem {
        GroupRingElem::ramp(n, self.i, self.j - 1)
    }

    /// Subscript map of the reindexing c_I ↦ c_{α·I}.
    pub fn reindex(&self, k: u8) -> u8 {
        let k = k as usize;
        if self.i < k && k < self.j {
            (k - 1) as u8
        } else {
            k as u8
        }
    }

    pub fn reindex_cell(&self, c: PCell) -> PCell {
        let idx: Vec<u8> = c.indices().iter().map(|&k| self.reindex(k)).collect();
        c.with_indices(&idx)
    }
}

impl fmt::Display for ConsecutiveCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = (self.i..=self.j).map(|k| k.to_string()).collect();
        write!(f, "({})", v.join(" "))
    }
}

fn cell(n: usize, c: PCell, k: i64) -> Option<PChain> {
    c.is_valid(n).then(|| Chain::cell(n, c).scale(k))
}

/// Π(s_l, c) when s_l moves no 1-cell of c.
fn elementary(n: usize, c: PCell, l: u8) -> Option<PChain> {
    use PCell::*;
    let far = |k: u8| (l as i64 - k as i64).abs() >= 2;
    match c {
        Base => cell(n, E(l), 1),
        E(k) if far(k) => {
            if l < k {
                cell(n, D(l, k), -1)
            } else {
                cell(n, D(k, l), 1)
            }
        }
        C(k) if far(k) => cell(n, C32(k, l), 1),
        D(a, b) if far(a) && far(b) => {
            if l < a {
                cell(n, C33(l, a, b), 1)
            } else if l < b {
                cell(n, C33(a, l, b), -1)
            } else {
                cell(n, C33(a, b, l), 1)
            }
        }
        B(k) if l + 1 < k || l > k + 2 => cell(n, C34(k, l), 1),
        _ => None,
    }
}

/// Π over the block s_l ... s_{l+len-1} that carries a 1-cell index l+1 down to l.
fn block(n: usize, c: PCell, l: u8) -> Option<(usize, PChain, PCell)> {
    use PCell::*;
    let out = match c {
        E(k) if k == l + 1 => (2, cell(n, B(l), -1)?, E(l)),
        C(k) if k == l + 1 => (2, cell(n, C35(l), 1)?, C(l)),
        D(a, b) if a == l + 1 => (2, cell(n, C34(l, b), 1)?, D(l, b)),
        D(a, b) if b == l + 1 => (2, cell(n, C34(l, a), -1)?, D(a, l)),
        B(k) if k == l + 1 => (3, cell(n, C37(l), 1)?, B(l)),
        _ => return None,
    };
    out.2.is_valid(n).then_some(out)
}

/// Π(α, c) for a basis cell c of dimension ≤ 2, with the reindexed cell c_{α·I}.
pub fn prism_cell(alpha: ConsecutiveCycle, c: PCell, n: usize) -> Result<(PChain, PCell)> {
    let inadmissible = || Error::Param(format!("prism undefined for {alpha} on {c} (n = {n})"));
    if c.dim() > 2 || !c.is_valid(n) || alpha.j > n {
        return Err(inadmissible());
    }
    let mut out = Chain::zero(n);
    let mut g = GroupRingElem::one(n);
    let mut cur = c;
    let mut l = alpha.i;
    while l < alpha.j {
        let (len, piece, next) = match elementary(n, cur, l as u8) {
            Some(p) => (1, p, cur),
            None => block(n, cur, l as u8).ok_or_else(inadmissible)?,
        };
        if l + len > alpha.j {
            return Err(inadmissible());
        }
        out.add_scaled(&g, &piece);
        g = &g * &GroupRingElem::ramp(n, l, l + len - 1);
        cur = next;
        l += len;
    }
    Ok((out, cur))
}

/// Π(α, x), extended Z[S_n]-linearly.
pub fn prism(alpha: ConsecutiveCycle, x: &PChain) -> Result<PChain> {
    let n = x.n();
    let mut out = Chain::zero(n);
    for (c, a) in x.terms() {
        out.add_scaled(a, &prism_cell(alpha, *c, n)?.0);
    }
    Ok(out)
}

/// α·c' − c − Π(α, ∂c) − ∂Π(α, c), zero when the prism identity holds.
pub fn prism_defect(alpha: ConsecutiveCycle, c: PCell, n: usize) -> Result<PChain> {
    let (p, moved) = prism_cell(alpha, c, n)?;
    if moved != alpha.reindex_cell(c) {
        return Err(Error::Unsupported(format!("{alpha} moves {c} to {moved}, not {}", alpha.reindex_cell(c))));
    }
    let mut lhs = Chain::term(moved, alpha.element(n));
    lhs.add_chain(&Chain::cell(n, c).scale(-1));
    lhs.add_chain(&prism(alpha, &boundary_p(c, n)?)?.scale(-1));
    Ok(lhs.sub(&boundary_chain(&p, n)))
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PrismReport {
    pub n: usize,
    pub checked: usize,
    pub undefined: usize,
    pub failures: Vec<String>,
}

impl PrismReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the prism identity for every consecutive cycle and every cell of dimension ≤ 2
/// on which Π is defined.
pub fn verify_prism(n: usize) -> Result<PrismReport> {
    let mut rep = PrismReport { n, ..Default::default() };
    for i in 1..n {
        for j in i + 1..=n {
            let alpha = ConsecutiveCycle::new(i, j)?;
            for d in 0..=2 {
                for c in enumerate_p_cells(n, d) {
                    if prism_cell(alpha, c, n).is_err() || prism(alpha, &boundary_p(c, n)?).is_err() {
                        rep.undefined += 1;
                        continue;
                    }
                    rep.checked += 1;
                    match prism_defect(alpha, c, n) {
                        Ok(r) if r.is_zero() => {}
                        Ok(r) => rep.failures.push(format!("{alpha} on {c}: {r}")),
                        Err(e) => rep.failures.push(e.to_string()),
                    }
                }
            }
        }
    }
    Ok(rep)
}
