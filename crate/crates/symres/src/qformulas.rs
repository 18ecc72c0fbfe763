//! Closed-form boundaries of the nine classes of essential 3-cells, compared
//! against the algorithmic boundary in Q_*.

use serde::Serialize;

use crate::bar::{enumerate_essential, essential_type, BarChain, BarSimplex, PairType, QRewriter};
use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::group_ring::GroupRingElem;
use crate::rewrite::nf_indices;

/// Which version of the closed-form tables to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Table {
    /// Formulas exactly as stated.
    Printed,
    /// With the index corrections listed in FORMULA_CORRECTIONS.md applied.
    Corrected,
}

/// Class label of an essential 3-cell such as "bb" or "cs".
pub fn class_label(types: &[PairType]) -> String {
    types.iter().map(|t| t.to_string()).collect()
}

struct Builder {
    n: usize,
    out: BarChain,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { n, out: Chain::zero(n) }
    }

    fn one(&self) -> GroupRingElem {
        GroupRingElem::one(self.n)
    }

    fn s(&self, i: usize) -> GroupRingElem {
        GroupRingElem::s(self.n, i)
    }

    fn r(&self, i: usize, j: usize) -> GroupRingElem {
        GroupRingElem::ramp(self.n, i, j)
    }

    // cells whose indices leave 1..n-1 are dropped
    fn add(&mut self, a: &GroupRingElem, words: &[Vec<usize>]) {
        if words.iter().flatten().any(|&x| x == 0 || x >= self.n) {
            return;
        }
        let w: Vec<&[usize]> = words.iter().map(|v| v.as_slice()).collect();
        if let Some(c) = BarSimplex::from_words(self.n, &w) {
            self.out.add_term(c, a);
        }
    }
}

fn g(i: usize) -> Vec<usize> {
    vec![i]
}

fn ramp(i: usize, j: usize) -> Vec<usize> {
    (i..=j).collect()
}

fn first(p: &crate::perm::Perm) -> usize {
    nf_indices(p)[0] as usize
}

/// The closed-form value of ∂[a|b|c] for an essential 3-cell.
pub fn closed_form_boundary(cell: &BarSimplex, n: usize, table: Table) -> Result<BarChain> {
    let types = essential_type(cell).filter(|t| t.len() == 2).ok_or_else(|| Error::NotEssential(cell.to_string()))?;
    let e = cell.entries();
    let mut b = Builder::new(n);
    let one = b.one();
    use PairType::*;
    match (types[0], types[1]) {
        (S, S) => {
            let i = first(&e[0]);
            b.add(&(b.s(i) - &one), &[g(i), g(i)]);
        }
        (S, C) => {
            let (i, j) = (first(&e[0]), first(&e[2]));
            b.add(&(b.s(i) + &one), &[g(i), g(j)]);
            b.add(&(b.s(j) - &one), &[g(i), g(i)]);
        }
        (S, B) => {
            let (j, i) = (first(&e[0]), first(&e[2]));
            b.add(&(b.s(j) + &one), &[g(j), ramp(i, j)]);
            b.add(&b.r(i, j), &[g(j - 1), g(j - 1)]);
            b.add(&-&one, &[g(j), g(j)]);
        }
        (C, S) => {
            let (i, j) = (first(&e[0]), first(&e[1]));
            b.add(&(b.s(i) - &one), &[g(j), g(j)]);
            b.add(&-(b.s(j) + &one), &[g(i), g(j)]);
        }
        (C, C) => {
            let (i, j, k) = (first(&e[0]), first(&e[1]), first(&e[2]));
            b.add(&(b.s(i) - &one), &[g(j), g(k)]);
            b.add(&-(b.s(j) - &one), &[g(i), g(k)]);
            b.add(&(b.s(k) - &one), &[g(i), g(j)]);
        }
        (C, B) => {
            let (i, j, k) = (first(&e[0]), first(&e[1]), first(&e[2]));
            let sj1 = &one - &b.s(j);
            if i + 1 < k {
                b.add(&(b.s(i) - &one), &[g(j), ramp(k, j)]);
                b.add(&-&one, &[g(i), g(j)]);
                b.add(&b.r(k, j), &[g(i), g(j - 1)]);
                for l in 0..=j - k {
                    b.add(&(&sj1 * &b.r(k, k + l - 1)), &[g(i), g(k + l)]);
                }
            } else if i + 1 == k {
                b.add(&b.s(k - 1), &[g(j), ramp(k, j)]);
                b.add(&-&one, &[g(j), ramp(k - 1, j)]);
                b.add(&-&one, &[g(k - 1), g(j)]);
            } else if i == k {
                b.add(&b.s(k), &[g(j), ramp(k, j)]);
                b.add(&sj1, &[g(k), g(k)]);
                b.add(&-&one, &[g(j), ramp(k + 1, j)]);
                b.add(&-&one, &[g(k), g(j)]);
            } else {
                b.add(&(b.s(i) - &one), &[g(j), ramp(k, j)]);
                b.add(&sj1, &[g(i), ramp(k, i)]);
                match table {
                    Table::Printed => b.add(&b.r(k, i), &[g(i - 1), g(j - 1)]),
                    Table::Corrected => {
                        b.add(&b.r(k, j), &[g(i - 1), g(j - 1)]);
                        b.add(&-&one, &[g(i), g(j)]);
                    }
                }
                let pre = &sj1 * &b.r(k, i);
                for l in 0..j - i {
                    b.add(&(&pre * &b.r(i + 1, i + l)), &[g(i - 1), g(i + 1 + l)]);
                }
            }
        }
        (B, S) => {
            let (j, i) = (first(&e[0]), first(&e[1]));
            b.add(&(&b.s(j) * &b.r(i, j - 1)), &[g(j), g(j)]);
            b.add(&-b.r(i, j - 1), &[g(j), ramp(j - 1, j)]);
            for k in (i - 1)..j.saturating_sub(2) {
                b.add(&-b.r(i, k), &[g(k + 1), g(j)]);
            }
            b.add(&-&one, &[g(j), ramp(i, j)]);
            if j >= 2 {
                b.add(&-b.r(i, j - 2), &[g(j - 1), g(j - 1)]);
            }
        }
        (B, C) => {
            let (i, k, j) = (first(&e[0]), first(&e[1]), first(&e[2]));
            b.add(&one, &[g(i), g(j)]);
            b.add(&(b.s(j) - &one), &[g(i), ramp(k, i)]);
            b.add(&-b.r(k, i), &[g(i - 1), g(j)]);
            for l in 0..=i - k {
                b.add(&(&(b.s(i) - &one) * &b.r(k, k + l - 1)), &[g(k + l), g(j)]);
            }
        }
        (B, B) => {
            let (j, i, k) = (first(&e[0]), first(&e[1]), first(&e[2]));
            let sj = b.s(j) - &one;
            if i > k {
                b.add(&one, &[g(j), ramp(k, j)]);
                b.add(&b.r(k, j), &[g(j - 1), ramp(i - 1, j - 1)]);
                b.add(&-b.r(i, j), &[g(j - 1), ramp(k, j - 1)]);
                let c = match table {
                    Table::Printed => b.r(k, j - 1),
                    Table::Corrected => &b.r(i, j) * &b.r(k, j - 1),
                };
                b.add(&-c, &[g(j - 2), g(j)]);
                b.add(&-&one, &[g(j), ramp(i, j)]);
                for l in 0..=j - i {
                    b.add(&(&sj * &b.r(i, i + l - 1)), &[g(i + l), ramp(k, i + l)]);
                }
                // the printed upper bound of this sum refers to its own index;
                // its inner sum is empty once l reaches j - i
                for l in 0..=j - i {
                    let pre = &(&sj * &b.r(i, i + l - 1)) * &b.r(k, i + l);
                    for t in 1..=(j - i - l) {
                        b.add(&(&pre * &b.r(i + l + 1, i + l + t - 1)), &[g(i + l - 1), g(i + l + t)]);
                    }
                }
            } else {
                b.add(&one, &[g(j), ramp(k + 1, j)]);
                if table == Table::Printed || k + 1 < j {
                    b.add(&b.r(k + 1, j), &[g(j - 1), ramp(i, j - 1)]);
                }
                b.add(&-b.r(i, j), &[g(j - 1), ramp(k, j - 1)]);
                b.add(&-(&b.r(i, j) * &b.r(k, j - 1)), &[g(j - 2), g(j)]);
                b.add(&-&one, &[g(j), ramp(i, j)]);
                for l in (k - i)..=(j - i) {
                    let pre = match table {
                        Table::Printed => b.r(i, i + l),
                        Table::Corrected => b.r(i, i + l - 1),
                    };
                    b.add(&(&sj * &pre), &[g(i + l), ramp(k, i + l)]);
                }
                for l in 0..(k - i) {
                    let pre = &sj * &b.r(i, i + l - 1);
                    for t in 1..=(j - k) {
                        b.add(&(&pre * &b.r(k + 1, k + t - 1)), &[g(i + l), g(k + t)]);
                    }
                }
                for l in (k - i + 1)..=(j - i) {
                    let pre = &(&sj * &b.r(i, i + l - 1)) * &b.r(k, i + l);
                    for t in 1..=(j - i - l) {
                        b.add(&(&pre * &b.r(i + l + 1, i + l + t - 1)), &[g(i + l - 1), g(i + l + t)]);
                    }
                }
                if table == Table::Corrected && k + 1 == j {
                    // ρ(k, j-1) = s_{j-1}: several faces land on shorter collapsible cells
                    b.add(&-b.r(i, j - 1), &[g(j), g(j)]);
                    b.add(&b.r(i, j - 1), &[g(j), ramp(j - 1, j)]);
                    b.add(&b.r(i, j - 2), &[g(j - 1), g(j - 1)]);
                    for m in (i - 1)..j.saturating_sub(2) {
                        b.add(&b.r(i, m), &[g(m + 1), g(j)]);
                    }
                    b.add(&(&b.r(i, j) * &b.s(j - 1)), &[g(j - 2), g(j)]);
                }
            }
        }
    }
    Ok(b.out)
}

#[derive(Clone, Debug, Serialize)]
pub struct CellCheck {
    pub cell: String,
    pub class: String,
    pub matches_printed: bool,
    pub matches_corrected: bool,
    /// algorithmic minus printed, when they differ
    pub difference: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassSummary {
    pub class: String,
    pub cells: usize,
    pub printed_matches: usize,
    pub corrected_matches: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub n: usize,
    pub cells: Vec<CellCheck>,
    pub classes: Vec<ClassSummary>,
}

impl CrosscheckReport {
    /// Classes with at least one cell where every cell matches the printed table.
    pub fn classes_matching_printed(&self) -> usize {
        self.classes.iter().filter(|c| c.cells > 0 && c.printed_matches == c.cells).count()
    }

    pub fn all_match_corrected(&self) -> bool {
        self.cells.iter().all(|c| c.matches_corrected)
    }
}

pub const CLASS_ORDER: [&str; 9] = ["ss", "sc", "sb", "cs", "cc", "cb", "bs", "bc", "bb"];

/// Compares the algorithmic boundary of every essential 3-cell with the closed forms.
pub fn crosscheck_boundary_formulas(n: usize) -> Result<CrosscheckReport> {
    if n > 8 {
        return Err(Error::BoundExceeded { what: "n", value: n, bound: 8 });
    }
    let mut q = QRewriter::new(n);
    let mut cells = Vec::new();
    for c in enumerate_essential(n, 3) {
        let class = class_label(&essential_type(&c).expect("essential"));
        let alg = q.boundary_q(&c);
        let printed = closed_form_boundary(&c, n, Table::Printed)?;
        let corrected = closed_form_boundary(&c, n, Table::Corrected)?;
        let diff = alg.sub(&printed);
        cells.push(CellCheck {
            cell: c.to_string(),
            class,
            matches_printed: diff.is_zero(),
            matches_corrected: alg == corrected,
            difference: if diff.is_zero() { None } else { Some(diff.to_string()) },
        });
    }
    let classes = CLASS_ORDER
        .iter()
        .map(|&k| {
            let of: Vec<&CellCheck> = cells.iter().filter(|c| c.class == k).collect();
            ClassSummary {
                class: k.to_string(),
                cells: of.len(),
                printed_matches: of.iter().filter(|c| c.matches_printed).count(),
                corrected_matches: of.iter().filter(|c| c.matches_corrected).count(),
            }
        })
        .collect();
    Ok(CrosscheckReport { n, cells, classes })
}
