//! The dihedral group D8 ≤ S_n, the carry cocycle χ ∈ C^3(D8; Z/4), and the transfer
//! argument producing an element of order 4 in H_3(S_n).

use std::collections::HashMap;
use std::ops::Mul;

use serde::Serialize;
use symres_snf::AbelianGroupInfo;

use crate::error::{Error, Result};
use crate::finite_bar::{bar_homology, FiniteGroup};
use crate::perm::Perm;

/// r^a s^b with 0 ≤ a < 4 and 0 ≤ b < 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct D8Elem {
    pub a: u8,
    pub b: u8,
}

impl D8Elem {
    pub const ONE: D8Elem = D8Elem { a: 0, b: 0 };
    pub const R: D8Elem = D8Elem { a: 1, b: 0 };

    pub fn new(a: i64, b: i64) -> Self {
        D8Elem { a: a.rem_euclid(4) as u8, b: b.rem_euclid(2) as u8 }
    }

    pub fn all() -> Vec<D8Elem> {
        (0..2).flat_map(|b| (0..4).map(move |a| D8Elem::new(a, b))).collect()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    /// The image under r ↦ (1 2 3 4), s ↦ (2 4) in S_n.
    pub fn to_perm(self, n: usize) -> Perm {
        let mut p = Perm::identity(n);
        for _ in 0..self.a {
            p = p.compose(&rotation(n));
        }
        if self.b == 1 {
            p = p.compose(&reflection(n));
        }
        p
    }

    /// The element acting on {1, 2, 3, 4} as p does, if there is one.
    pub fn from_perm(p: &Perm) -> Option<D8Elem> {
        let head = p.restrict(4)?;
        D8Elem::all().into_iter().find(|e| e.to_perm(4) == head)
    }
}

impl Mul for D8Elem {
    type Output = D8Elem;

    /// r^{a1} s^{b1} r^{a2} s^{b2} = r^{a1 + (-1)^{b1} a2} s^{b1 + b2}.
    fn mul(self, o: D8Elem) -> D8Elem {
        let sign = if self.b == 0 { 1 } else { -1 };
        D8Elem::new(self.a as i64 + sign * o.a as i64, (self.b + o.b) as i64)
    }
}

pub fn rotation(n: usize) -> Perm {
    let mut img: Vec<usize> = (1..=n).collect();
    img[..4].copy_from_slice(&[2, 3, 4, 1]);
    Perm::from_images(&img).expect("n >= 4")
}

pub fn reflection(n: usize) -> Perm {
    let mut img: Vec<usize> = (1..=n).collect();
    img[..4].copy_from_slice(&[1, 4, 3, 2]);
    Perm::from_images(&img).expect("n >= 4")
}

/// χ([x1|x2|x3]) in Z/4: (-1)^{b1+b2} a1 when a2 + (-1)^{b2} a3 carries out of {0,..,3}, else 0.
pub fn chi(x: [D8Elem; 3]) -> i64 {
    let [x1, x2, x3] = x;
    let s2 = if x2.b == 0 { 1 } else { -1 };
    let t = x2.a as i64 + s2 * x3.a as i64;
    if (0..4).contains(&t) {
        return 0;
    }
    let s = if (x1.b + x2.b) % 2 == 0 { 1 } else { -1 };
    (s * x1.a as i64).rem_euclid(4)
}

/// δχ([g1|g2|g3|g4]) in Z/4, with trivial action.
pub fn delta_chi(g: [D8Elem; 4]) -> i64 {
    let [g1, g2, g3, g4] = g;
    (chi([g2, g3, g4]) - chi([g1 * g2, g3, g4]) + chi([g1, g2 * g3, g4]) - chi([g1, g2, g3 * g4])
        + chi([g1, g2, g3]))
    .rem_euclid(4)
}

fn sgn(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn carries(x: i64) -> bool {
    x.div_euclid(4) != 0
}

/// The four trigger columns for (a2, b2, a3, b3, a4), normalized by (-1)^{b2} a1.
pub fn trigger_row(a2: i64, b2: i64, a3: i64, b3: i64, a4: i64) -> [i64; 4] {
    let pick = |c: bool, v: i64| if c { v } else { 0 };
    [
        pick(carries(a3 + sgn(b3) * a4), sgn(1 + b2 + b3)),
        pick(carries((a2 + sgn(b2) * a3).rem_euclid(4) + sgn(b2 + b3) * a4), sgn(b2 + b3)),
        pick(carries(a2 + sgn(b2) * (a3 + sgn(b3) * a4).rem_euclid(4)), sgn(1 + b2)),
        pick(carries(a2 + sgn(b2) * a3), sgn(b2)),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct D8Report {
    pub table_rows: usize,
    pub table_rows_nonzero: usize,
    pub tuples: usize,
    pub cocycle_failures: usize,
    pub c_is_cycle: bool,
    /// ∂c = (r − 1)([r|r] + [r²|r] + [r³|r]) upstairs.
    pub c_boundary_matches: bool,
    pub chi_on_c: i64,
    pub chi_terms: [i64; 3],
    pub h3: AbelianGroupInfo,
}

impl D8Report {
    pub fn ok(&self) -> bool {
        self.table_rows_nonzero == 0
            && self.cocycle_failures == 0
            && self.tuples == 2401
            && self.c_is_cycle
            && self.c_boundary_matches
            && self.chi_on_c == 1
            && self.h3.torsion.iter().any(|d| d % 4 == 0)
    }
}

type BarTerm = (D8Elem, Vec<D8Elem>);

/// Boundary of g[x1|...|xk] in the normalized bar resolution, as a map to coefficients.
fn bar_boundary(g: D8Elem, x: &[D8Elem], out: &mut HashMap<BarTerm, i64>, coeff: i64) {
    let k = x.len();
    let mut add = |h: D8Elem, y: Vec<D8Elem>, c: i64| {
        if y.iter().any(|e| e.is_one()) {
            return;
        }
        *out.entry((h, y)).or_insert(0) += c;
    };
    add(g * x[0], x[1..].to_vec(), coeff);
    for i in 1..k {
        let mut y = x[..i - 1].to_vec();
        y.push(x[i - 1] * x[i]);
        y.extend_from_slice(&x[i + 1..]);
        add(g, y, coeff * sgn(i as i64));
    }
    add(g, x[..k - 1].to_vec(), coeff * sgn(k as i64));
}

fn the_cycle() -> [[D8Elem; 3]; 3] {
    let r = |a| D8Elem::new(a, 0);
    [[r(1), r(1), r(1)], [r(1), r(2), r(1)], [r(1), r(3), r(1)]]
}

/// The D8 checks: χ is a cocycle, c is a cycle with χ(c) = 1, and H_3(D8) has 4-torsion.
pub fn d8_suite() -> Result<D8Report> {
    let mut table_rows = 0;
    let mut table_rows_nonzero = 0;
    for a2 in 0..4 {
        for b2 in 0..2 {
            for a3 in 0..4 {
                for b3 in 0..2 {
                    for a4 in 0..4 {
                        table_rows += 1;
                        if trigger_row(a2, b2, a3, b3, a4).iter().sum::<i64>() != 0 {
                            table_rows_nonzero += 1;
                        }
                    }
                }
            }
        }
    }
    let nontrivial: Vec<D8Elem> = D8Elem::all().into_iter().filter(|e| !e.is_one()).collect();
    let mut tuples = 0;
    let mut cocycle_failures = 0;
    for &g1 in &nontrivial {
        for &g2 in &nontrivial {
            for &g3 in &nontrivial {
                for &g4 in &nontrivial {
                    tuples += 1;
                    if delta_chi([g1, g2, g3, g4]) != 0 {
                        cocycle_failures += 1;
                    }
                }
            }
        }
    }
    let mut bd = HashMap::new();
    for x in the_cycle() {
        bar_boundary(D8Elem::ONE, &x, &mut bd, 1);
    }
    bd.retain(|_, v| *v != 0);
    let mut want = HashMap::new();
    for a in 1..4 {
        let y = vec![D8Elem::new(a, 0), D8Elem::R];
        *want.entry((D8Elem::R, y.clone())).or_insert(0) += 1;
        *want.entry((D8Elem::ONE, y)).or_insert(0) -= 1;
    }
    let mut coinv: HashMap<Vec<D8Elem>, i64> = HashMap::new();
    for ((_, y), v) in &bd {
        *coinv.entry(y.clone()).or_insert(0) += v;
    }
    let chi_terms = the_cycle().map(chi);
    let gens = [D8Elem::R.to_perm(4), D8Elem::new(0, 1).to_perm(4)];
    let h3 = bar_homology(&FiniteGroup::generated_by(4, &gens), 3, false)?;
    Ok(D8Report {
        table_rows,
        table_rows_nonzero,
        tuples,
        cocycle_failures,
        c_is_cycle: coinv.values().all(|v| *v == 0),
        c_boundary_matches: bd == want,
        chi_on_c: chi_terms.iter().sum::<i64>().rem_euclid(4),
        chi_terms,
        h3,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitBlock {
    pub size: usize,
    pub representatives: Vec<String>,
    pub contribution: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferReport {
    pub n: usize,
    pub cosets: usize,
    /// χ(π_1 tr ι_* c) in Z/4.
    pub value: i64,
    pub identity_contribution: i64,
    pub orbits: Vec<OrbitBlock>,
}

impl TransferReport {
    pub fn is_unit(&self) -> bool {
        self.value == 1 || self.value == 3
    }

    /// The orbit-by-orbit pattern of the argument: the identity coset gives 1, other fixed
    /// cosets give 0, orbits of size 2 give an even value, orbits of size 4 give 0.
    pub fn orbit_pattern_holds(&self) -> bool {
        self.identity_contribution == 1
            && self.orbits.iter().all(|o| match o.size {
                1 => o.contribution == 0 || o.representatives.iter().any(|r| r == "identity"),
                2 => o.contribution % 2 == 0,
                _ => o.contribution == 0,
            })
    }
}

/// Evaluates χ on the projection of the transfer of ι_*c to H = D8 × S_{n-4}, using the
/// retraction ρ(g) = g · rep(Hg)^{-1} with lexicographically minimal coset representatives.
pub fn transfer_check(n: usize) -> Result<TransferReport> {
    if !(4..=9).contains(&n) {
        return Err(Error::Param(format!("transfer check needs 4 <= n <= 9, got {n}")));
    }
    let mut gens = vec![rotation(n), reflection(n)];
    gens.extend((5..n).map(|i| Perm::s(n, i)));
    let h = FiniteGroup::generated_by(n, &gens);
    let mut rep: HashMap<Perm, Perm> = HashMap::new();
    let mut reps = Vec::new();
    for g in Perm::all(n) {
        if rep.contains_key(&g) {
            continue;
        }
        for k in 0..h.order() {
            rep.insert(h.elem(k).compose(&g), g);
        }
        reps.push(g);
    }
    let rho = |g: &Perm| g.compose(&rep[g].inverse());
    let project = |g: &Perm| D8Elem::from_perm(&rho(g)).expect("ρ lands in D8 × S_{n-4}");
    let evaluate = |g: &Perm| -> i64 {
        let mut total = 0;
        for x in the_cycle() {
            let mut y = vec![*g];
            for e in x {
                let last = *y.last().expect("nonempty");
                y.push(last.compose(&e.to_perm(n)));
            }
            let p: Vec<D8Elem> = y.iter().map(project).collect();
            let inv = |e: D8Elem| D8Elem::all().into_iter().find(|f| (*f * e).is_one()).expect("group");
            let cell = [inv(p[0]) * p[1], inv(p[1]) * p[2], inv(p[2]) * p[3]];
            total += chi(cell);
        }
        total.rem_euclid(4)
    };
    let r = rotation(n);
    let mut seen: HashMap<Perm, bool> = HashMap::new();
    let mut orbits = Vec::new();
    let mut value = 0;
    for g in &reps {
        value += evaluate(g);
        if seen.contains_key(g) {
            continue;
        }
        let mut members = vec![*g];
        let mut cur = rep[&g.compose(&r)];
        while cur != *g {
            members.push(cur);
            cur = rep[&cur.compose(&r)];
        }
        for m in &members {
            seen.insert(*m, true);
        }
        let contribution = members.iter().map(evaluate).sum::<i64>().rem_euclid(4);
        let name = |p: &Perm| if p.is_identity() { "identity".to_string() } else { p.to_string() };
        orbits.push(OrbitBlock { size: members.len(), representatives: members.iter().map(name).collect(), contribution });
    }
    Ok(TransferReport {
        n,
        cosets: reps.len(),
        value: value.rem_euclid(4),
        identity_contribution: evaluate(&Perm::identity(n)),
        orbits,
    })
}
