//! Normalized bar resolution cells, Brown's collapsing scheme for the S_n rewriting
//! system, and boundaries in the quotient complex Q_*.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::group_ring::GroupRingElem;
use crate::perm::Perm;
use crate::rewrite::{normal_form_perm, nf_indices, word_to_perm, Word};

/// A cell [g1|...|gt] of the normalized bar resolution; no entry is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarSimplex(pub Vec<Perm>);

pub type BarChain = Chain<BarSimplex>;

impl BarSimplex {
    pub fn new(entries: Vec<Perm>) -> Option<BarSimplex> {
        if entries.iter().any(|p| p.is_identity()) {
            None
        } else {
            Some(BarSimplex(entries))
        }
    }

    /// Builds from generator-index words, e.g. `&[&[1], &[2, 1]]` for [s1|s2 s1].
    pub fn from_words(n: usize, words: &[&[usize]]) -> Option<BarSimplex> {
        let entries = words.iter().map(|w| word_to_perm(&Word::from_indices(w), n).expect("index in range")).collect();
        BarSimplex::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Perm] {
        &self.0
    }

    /// The j-th face with its group coefficient (d_0 carries g1); `None` if degenerate.
    pub fn face(&self, j: usize, n: usize) -> Option<(Perm, BarSimplex)> {
        let t = self.0.len();
        assert!(j <= t);
        if j == 0 {
            return Some((self.0[0], BarSimplex(self.0[1..].to_vec())));
        }
        if j == t {
            return Some((Perm::identity(n), BarSimplex(self.0[..t - 1].to_vec())));
        }
        let mut e = self.0[..j - 1].to_vec();
        let prod = self.0[j - 1].compose(&self.0[j]);
        if prod.is_identity() {
            return None;
        }
        e.push(prod);
        e.extend_from_slice(&self.0[j + 1..]);
        Some((Perm::identity(n), BarSimplex(e)))
    }

    /// Bar differential sum (-1)^j d_j, degenerate faces dropped.
    pub fn boundary(&self, n: usize) -> BarChain {
        let mut out = Chain::zero(n);
        if self.0.is_empty() {
            return out;
        }
        for j in 0..=self.0.len() {
            if let Some((g, f)) = self.face(j, n) {
                out.add_mono(f, g, if j % 2 == 0 { 1 } else { -1 });
            }
        }
        out
    }
}

impl fmt::Display for BarSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| normal_form_perm(p).word().to_string()).collect();
        write!(f, "[{}]", parts.join("|"))
    }
}

impl fmt::Debug for BarSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Classification {
    Essential,
    Collapsible,
    Redundant,
}

/// Which rule completes an essential pair: square (R1), commuting (R2) or braid (R3).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum PairType {
    S,
    C,
    B,
}

impl fmt::Display for PairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PairType::S => "s",
            PairType::C => "c",
            PairType::B => "b",
        };
        write!(f, "{s}")
    }
}

/// Rule whose left-hand side ends at position e of w, if any.
fn lhs_ending_at(w: &[u8], e: usize) -> Option<PairType> {
    if e == 0 {
        return None;
    }
    let (a, b) = (w[e - 1], w[e]);
    if a == b {
        return Some(PairType::S);
    }
    if a + 1 < b {
        return Some(PairType::C);
    }
    // s_j s_i s_{i+1} ... s_j
    let mut t = e;
    while t > 0 && w[t - 1] + 1 == w[t] {
        t -= 1;
    }
    if t < e && t >= 1 && w[t - 1] == b {
        return Some(PairType::B);
    }
    None
}

/// Length of the shortest reducible prefix of a positive word, with the rule.
fn min_reducible_prefix(w: &[u8], from: usize) -> Option<(usize, PairType)> {
    (from.max(1)..w.len()).find_map(|e| lhs_ending_at(w, e).map(|r| (e + 1, r)))
}

enum PairStatus {
    Essential(PairType),
    Irreducible,
    // shortest reducible prefix ends inside the second entry at this length
    ProperPrefix(usize),
}

fn pair_status(a: &[u8], b: &[u8]) -> PairStatus {
    let mut w = a.to_vec();
    w.extend_from_slice(b);
    match min_reducible_prefix(&w, a.len()) {
        None => PairStatus::Irreducible,
        Some((l, r)) if l == w.len() => PairStatus::Essential(r),
        Some((l, _)) => PairStatus::ProperPrefix(l - a.len()),
    }
}

fn is_generator(p: &Perm) -> bool {
    nf_indices(p).len() == 1
}

/// Classification of a bar cell per the collapsing scheme.
pub fn classify_simplex(tau: &BarSimplex) -> Classification {
    if tau.0.is_empty() {
        return Classification::Essential;
    }
    if !is_generator(&tau.0[0]) {
        return Classification::Redundant;
    }
    let words: Vec<Vec<u8>> = tau.0.iter().map(nf_indices).collect();
    for p in 0..words.len() - 1 {
        match pair_status(&words[p], &words[p + 1]) {
            PairStatus::Essential(_) => continue,
            PairStatus::Irreducible => return Classification::Collapsible,
            PairStatus::ProperPrefix(_) => return Classification::Redundant,
        }
    }
    Classification::Essential
}

/// Pair types of an essential cell.
pub fn essential_type(tau: &BarSimplex) -> Option<Vec<PairType>> {
    if tau.0.is_empty() {
        return Some(vec![]);
    }
    if !is_generator(&tau.0[0]) {
        return None;
    }
    let words: Vec<Vec<u8>> = tau.0.iter().map(nf_indices).collect();
    let mut out = Vec::new();
    for p in 0..words.len() - 1 {
        match pair_status(&words[p], &words[p + 1]) {
            PairStatus::Essential(r) => out.push(r),
            _ => return None,
        }
    }
    Some(out)
}

fn perm_of(n: usize, idx: &[u8]) -> Perm {
    let mut p = Perm::identity(n);
    for &i in idx {
        p = p.compose(&Perm::s(n, i as usize));
    }
    p
}

/// The collapsible cell c(tau) and the index of the face of c(tau) equal to tau.
pub fn collapse_with_face(tau: &BarSimplex, n: usize) -> Result<(BarSimplex, usize)> {
    if classify_simplex(tau) != Classification::Redundant {
        return Err(Error::NotRedundant(tau.to_string()));
    }
    let words: Vec<Vec<u8>> = tau.0.iter().map(nf_indices).collect();
    if words[0].len() != 1 {
        let s = perm_of(n, &words[0][..1]);
        let rest = perm_of(n, &words[0][1..]);
        let mut e = vec![s, rest];
        e.extend_from_slice(&tau.0[1..]);
        return Ok((BarSimplex(e), 1));
    }
    for p in 0..words.len() - 1 {
        if let PairStatus::ProperPrefix(l) = pair_status(&words[p], &words[p + 1]) {
            let g1 = perm_of(n, &words[p + 1][..l]);
            let g2 = perm_of(n, &words[p + 1][l..]);
            let mut e = tau.0[..=p].to_vec();
            e.push(g1);
            e.push(g2);
            e.extend_from_slice(&tau.0[p + 2..]);
            return Ok((BarSimplex(e), p + 2));
        }
    }
    unreachable!("redundant cell without a failing pair")
}

pub fn collapse_of(tau: &BarSimplex, n: usize) -> Result<BarSimplex> {
    collapse_with_face(tau, n).map(|(c, _)| c)
}

/// The retraction q onto Q_*, memoized per cell.
pub struct QRewriter {
    n: usize,
    fast_paths: bool,
    memo: HashMap<BarSimplex, BarChain>,
    active: HashSet<BarSimplex>,
}

impl QRewriter {
    pub fn new(n: usize) -> Self {
        QRewriter { n, fast_paths: true, memo: HashMap::new(), active: HashSet::new() }
    }

    /// A rewriter that uses only the collapsing function, no shortcut lemmas.
    pub fn plain(n: usize) -> Self {
        QRewriter { fast_paths: false, ..Self::new(n) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn memo_size(&self) -> usize {
        self.memo.len()
    }

    /// q applied to a chain; the result is supported on essential cells.
    pub fn q_chain(&mut self, x: &BarChain) -> BarChain {
        let mut out = Chain::zero(self.n);
        for (c, a) in x.terms() {
            let qc = self.q(c);
            out.add_scaled(a, &qc);
        }
        out
    }

    pub fn q(&mut self, tau: &BarSimplex) -> BarChain {
        if let Some(r) = self.memo.get(tau) {
            return r.clone();
        }
        if !self.active.insert(tau.clone()) {
            panic!("q-rewriting revisited {tau}: the collapsing scheme is not well founded");
        }
        let r = self.compute(tau);
        self.active.remove(tau);
        self.memo.insert(tau.clone(), r.clone());
        r
    }

    fn compute(&mut self, tau: &BarSimplex) -> BarChain {
        let n = self.n;
        if self.fast_paths {
            if let Some(r) = self.fast(tau) {
                return r;
            }
        }
        match classify_simplex(tau) {
            Classification::Essential => Chain::cell(n, tau.clone()),
            Classification::Collapsible => Chain::zero(n),
            Classification::Redundant => {
                let (c, i) = collapse_with_face(tau, n).expect("redundant");
                // 0 = (-1)^i tau + sum_{j != i} (-1)^j d_j c
                let mut out = Chain::zero(n);
                let outer = if i % 2 == 0 { -1 } else { 1 };
                for j in 0..=c.dim() {
                    if j == i {
                        continue;
                    }
                    if let Some((g, f)) = c.face(j, n) {
                        let sign = outer * if j % 2 == 0 { 1 } else { -1 };
                        let qf = self.q(&f);
                        out.add_scaled(&GroupRingElem::monomial(g, sign), &qf);
                    }
                }
                out
            }
        }
    }

    // shortcut lemmas: irreducible leading pair, and [wu|v|...] with uv a rule
    fn fast(&mut self, tau: &BarSimplex) -> Option<BarChain> {
        let n = self.n;
        if tau.dim() < 2 {
            return None;
        }
        let w1 = nf_indices(&tau.0[0]);
        let w2 = nf_indices(&tau.0[1]);
        if let PairStatus::Irreducible = pair_status(&w1, &w2) {
            return Some(Chain::zero(n));
        }
        if w1.len() < 2 {
            return None;
        }
        // split w1 = w u with u v exactly a rule left-hand side
        for k in 1..w1.len() {
            let (w, u) = w1.split_at(k);
            let mut uv = u.to_vec();
            uv.extend_from_slice(&w2);
            let exact = match min_reducible_prefix(&uv, 0) {
                Some((l, _)) => l == uv.len() && is_whole_lhs(&uv),
                None => false,
            };
            if !exact {
                continue;
            }
            let rest = &tau.0[2..];
            let r = perm_of(n, &uv);
            let mut out = Chain::zero(n);
            let mut first = vec![perm_of(n, u), tau.0[1]];
            first.extend_from_slice(rest);
            let qa = self.q(&BarSimplex(first));
            out.add_scaled(&GroupRingElem::from_perm(perm_of(n, w)), &qa);
            for j in 0..k {
                let prefix = perm_of(n, &w[..j]);
                let s = perm_of(n, &w[j..j + 1]);
                let tail = perm_of(n, &w[j + 1..]).compose(&r);
                if tail.is_identity() {
                    continue;
                }
                let mut e = vec![s, tail];
                e.extend_from_slice(rest);
                let qb = self.q(&BarSimplex(e));
                out.add_scaled(&GroupRingElem::from_perm(prefix), &qb);
            }
            return Some(out);
        }
        None
    }

    /// Boundary in Q_*: q of the bar boundary.
    pub fn boundary_q(&mut self, sigma: &BarSimplex) -> BarChain {
        let b = sigma.boundary(self.n);
        self.q_chain(&b)
    }
}

// whole word is one rule left-hand side (not merely ending in one)
fn is_whole_lhs(w: &[u8]) -> bool {
    match w.len() {
        0 | 1 => false,
        2 => w[0] == w[1] || w[0] + 1 < w[1],
        _ => {
            let j = w[0];
            let i = w[1];
            i < j && w.len() == (j - i) as usize + 2 && (0..=(j - i) as usize).all(|t| w[1 + t] == i + t as u8)
        }
    }
}

/// Essential t-cells for S_n in canonical order.
pub fn enumerate_essential(n: usize, t: usize) -> Vec<BarSimplex> {
    if t == 0 {
        return vec![BarSimplex(vec![])];
    }
    let mut cells: Vec<Vec<Vec<u8>>> = (1..n).map(|i| vec![vec![i as u8]]).collect();
    for _ in 1..t {
        let mut next = Vec::new();
        for cell in &cells {
            let last = cell.last().unwrap();
            for v in essential_successors(n, last) {
                let mut c = cell.clone();
                c.push(v);
                next.push(c);
            }
        }
        cells = next;
    }
    let mut out: Vec<BarSimplex> =
        cells.into_iter().map(|c| BarSimplex(c.iter().map(|w| perm_of(n, w)).collect())).collect();
    out.sort();
    out
}

/// Normal-form words v with [.., w | v] an essential pair.
fn essential_successors(n: usize, w: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u8>> = vec![vec![]];
    while let Some(v) = stack.pop() {
        for x in 1..n as u8 {
            let mut vx = v.clone();
            vx.push(x);
            if min_reducible_prefix(&vx, 0).is_some() {
                continue;
            }
            let mut full = w.to_vec();
            full.extend_from_slice(&vx);
            let e = full.len() - 1;
            if lhs_ending_at(&full, e).is_some() {
                out.push(vx);
            } else {
                stack.push(vx);
            }
        }
    }
    out
}

/// Convenience for the ramp rho(i, j) as a permutation (identity if j < i).
pub fn ramp_perm(n: usize, i: usize, j: usize) -> Perm {
    if j < i {
        return Perm::identity(n);
    }
    perm_of(n, &(i as u8..=j as u8).collect::<Vec<_>>())
}

pub fn gen_perm(n: usize, i: usize) -> Perm {
    Perm::s(n, i)
}

/// Product of generator indices as a permutation.
pub fn word_perm(n: usize, idx: &[usize]) -> Perm {
    let v: Vec<u8> = idx.iter().map(|&i| i as u8).collect();
    perm_of(n, &v)
}
