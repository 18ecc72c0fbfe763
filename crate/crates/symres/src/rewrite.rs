//! Words in the Coxeter generators of S_n, the rules R0-R3 and ramp normal forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Letter {
    pub index: u8,
    pub inverse: bool,
}

impl Letter {
    pub fn s(i: usize) -> Letter {
        Letter { index: i as u8, inverse: false }
    }

    pub fn inv(i: usize) -> Letter {
        Letter { index: i as u8, inverse: true }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn empty() -> Word {
        Word::default()
    }

    /// Positive word from generator indices.
    pub fn from_indices(idx: &[usize]) -> Word {
        Word { letters: idx.iter().map(|&i| Letter::s(i)).collect() }
    }

    pub fn ramp(i: usize, j: usize) -> Word {
        Word::from_indices(&(i..=j).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Indices of a positive word; `None` if some letter is inverted.
    pub fn indices(&self) -> Option<Vec<usize>> {
        self.letters.iter().map(|l| (!l.inverse).then_some(l.index as usize)).collect()
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        for l in &self.letters {
            if l.index == 0 || l.index as usize >= n {
                return Err(Error::IndexOutOfRange { index: l.index as usize, n });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| format!("s{}{}", l.index, if l.inverse { "'" } else { "" }))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let mut letters = Vec::new();
        let t = s.trim();
        if t.is_empty() || t == "1" {
            return Ok(Word::empty());
        }
        for tok in t.split(|c: char| c.is_whitespace() || c == ',' || c == '*') {
            if tok.is_empty() {
                continue;
            }
            let (body, inverse) = match tok.strip_suffix('\'') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let num = body
                .strip_prefix('s')
                .ok_or_else(|| Error::Parse(format!("bad letter {tok:?}")))?
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
            if num == 0 || num > 255 {
                return Err(Error::Parse(format!("bad letter {tok:?}")));
            }
            letters.push(Letter { index: num as u8, inverse });
        }
        Ok(Word { letters })
    }
}

/// Evaluates a word in S_n: the product s_{w1} s_{w2} ... in word order.
pub fn word_to_perm(w: &Word, n: usize) -> Result<Perm> {
    w.check_range(n)?;
    let mut p = Perm::identity(n);
    for l in &w.letters {
        p = p.compose(&Perm::s(n, l.index as usize));
    }
    Ok(p)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Rule {
    R0,
    R1,
    R2,
    R3,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::R0 => "R0",
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
        };
        write!(f, "{s}")
    }
}

/// A redex: a rule applicable to the factor starting at `pos` of length `len`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Redex {
    pub pos: usize,
    pub len: usize,
    pub rule: Rule,
}

fn pos_index(w: &[Letter], p: usize) -> Option<usize> {
    w.get(p).filter(|l| !l.inverse).map(|l| l.index as usize)
}

/// Redexes starting at position p, in priority order R0 > R1 > R2 > R3.
fn redexes_at(w: &[Letter], p: usize) -> Vec<Redex> {
    let mut out = Vec::new();
    if w[p].inverse {
        out.push(Redex { pos: p, len: 1, rule: Rule::R0 });
        return out;
    }
    let a = w[p].index as usize;
    let Some(b) = pos_index(w, p + 1) else { return out };
    if a == b {
        out.push(Redex { pos: p, len: 2, rule: Rule::R1 });
    }
    if a + 1 < b {
        out.push(Redex { pos: p, len: 2, rule: Rule::R2 });
    }
    if b < a {
        // s_a s_b s_{b+1} ... s_a
        let len = a - b + 2;
        if (0..=a - b).all(|t| pos_index(w, p + 1 + t) == Some(b + t)) {
            out.push(Redex { pos: p, len, rule: Rule::R3 });
        }
    }
    out
}

/// All redexes of a word, sorted by position and rule priority.
pub fn all_redexes(w: &Word) -> Vec<Redex> {
    (0..w.letters.len()).flat_map(|p| redexes_at(&w.letters, p)).collect()
}

/// Rewrites the factor described by the redex.
pub fn apply_redex(w: &Word, r: Redex) -> Word {
    let l = &w.letters;
    let mut out: Vec<Letter> = l[..r.pos].to_vec();
    match r.rule {
        Rule::R0 => out.push(Letter::s(l[r.pos].index as usize)),
        Rule::R1 => {}
        Rule::R2 => {
            out.push(l[r.pos + 1]);
            out.push(l[r.pos]);
        }
        Rule::R3 => {
            let j = l[r.pos].index as usize;
            out.extend_from_slice(&l[r.pos + 1..r.pos + r.len]);
            out.push(Letter::s(j - 1));
        }
    }
    out.extend_from_slice(&l[r.pos + r.len..]);
    Word { letters: out }
}

/// One rewriting step at the leftmost redex (priority R0 > R1 > R2 > R3).
pub fn reduce_step(w: &Word) -> Option<(Word, Rule)> {
    for p in 0..w.letters.len() {
        if let Some(r) = redexes_at(&w.letters, p).into_iter().next() {
            return Some((apply_redex(w, r), r.rule));
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

fn step_limit(w: &Word) -> usize {
    // C(w) bounds the chain length; this is a generous guard
    let l = w.len() + 2;
    l * l * l + 64
}

/// Reduces to the irreducible word, choosing a redex with `choose(count)`.
pub fn reduce_with(w: &Word, mut choose: impl FnMut(usize) -> usize) -> Word {
    let mut cur = w.clone();
    let limit = step_limit(w);
    for _ in 0..limit {
        let rs = all_redexes(&cur);
        if rs.is_empty() {
            return cur;
        }
        let k = choose(rs.len());
        cur = apply_redex(&cur, rs[k]);
    }
    panic!("rewriting of {w} did not terminate within {limit} steps");
}

pub fn reduce_strategy(w: &Word, s: Strategy) -> Word {
    match s {
        Strategy::Leftmost => reduce_with(w, |_| 0),
        Strategy::Rightmost => {
            // last position, highest-priority rule at that position
            let mut cur = w.clone();
            let limit = step_limit(w);
            for _ in 0..limit {
                let rs = all_redexes(&cur);
                let Some(last) = rs.last() else { return cur };
                let r = *rs.iter().find(|r| r.pos == last.pos).unwrap();
                cur = apply_redex(&cur, r);
            }
            panic!("rewriting of {w} did not terminate within {limit} steps");
        }
    }
}

/// Rule-scan irreducibility.
pub fn is_irreducible(w: &Word) -> bool {
    (0..w.letters.len()).all(|p| redexes_at(&w.letters, p).is_empty())
}

/// The ramp rho(j, k) = s_j s_{j+1} ... s_k.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Ramp {
    pub j: u8,
    pub k: u8,
}

impl Ramp {
    pub fn new(j: usize, k: usize) -> Ramp {
        assert!(j >= 1 && j <= k);
        Ramp { j: j as u8, k: k as u8 }
    }

    pub fn word(&self) -> Word {
        Word::ramp(self.j as usize, self.k as usize)
    }
}

/// Product of ramps with strictly decreasing peaks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct NormalForm {
    pub ramps: Vec<Ramp>,
}

impl NormalForm {
    pub fn word(&self) -> Word {
        let mut letters = Vec::new();
        for r in &self.ramps {
            letters.extend(r.word().letters);
        }
        Word { letters }
    }

    pub fn perm(&self, n: usize) -> Result<Perm> {
        word_to_perm(&self.word(), n)
    }

    /// Parses a word as a decreasing-peak ramp product.
    pub fn parse(w: &Word) -> Option<NormalForm> {
        let idx = w.indices()?;
        let mut ramps: Vec<Ramp> = Vec::new();
        let mut p = 0;
        while p < idx.len() {
            let start = idx[p];
            let mut q = p;
            while q + 1 < idx.len() && idx[q + 1] == idx[q] + 1 {
                q += 1;
            }
            let peak = idx[q];
            if let Some(prev) = ramps.last() {
                if (prev.k as usize) <= peak {
                    return None;
                }
            }
            ramps.push(Ramp::new(start, peak));
            p = q + 1;
        }
        Some(NormalForm { ramps })
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.word(), f)
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.word(), f)
    }
}

/// Irreducibility by the ramp characterization.
pub fn is_ramp_product(w: &Word) -> bool {
    NormalForm::parse(w).is_some()
}

/// Normal form of a word by rewriting to a fixed point (leftmost strategy).
pub fn normal_form_word(w: &Word) -> NormalForm {
    let r = reduce_strategy(w, Strategy::Leftmost);
    NormalForm::parse(&r).unwrap_or_else(|| panic!("irreducible word {r} is not a ramp product"))
}

/// Normal form of a permutation, read off directly: the first ramp rho(j, k) has
/// k + 1 the largest moved point and j its image.
pub fn normal_form_perm(p: &Perm) -> NormalForm {
    let n = p.n();
    let mut cur = *p;
    let mut ramps = Vec::new();
    while let Some(m) = (1..=n).rev().find(|&x| cur.apply(x) != x) {
        let j = cur.apply(m);
        let k = m - 1;
        let r = Ramp::new(j, k);
        let rp = word_to_perm(&r.word(), n).expect("ramp in range");
        cur = rp.inverse().compose(&cur);
        ramps.push(r);
    }
    NormalForm { ramps }
}

/// Normal-form letters of a permutation (positive generator indices).
pub fn nf_indices(p: &Perm) -> Vec<u8> {
    let mut out = Vec::new();
    for r in normal_form_perm(p).ramps {
        out.extend(r.j..=r.k);
    }
    out
}

/// C(w): inverse letters, counts of s_{n-1} .. s_1, then ascending position pairs.
pub fn complexity_vector(w: &Word, n: usize) -> Vec<usize> {
    let mut c = vec![0usize; n + 1];
    c[0] = w.letters.iter().filter(|l| l.inverse).count();
    for l in &w.letters {
        let i = l.index as usize;
        assert!(i >= 1 && i < n, "letter s{i} out of range for n = {n}");
        c[n - i] += 1;
    }
    let idx: Vec<u8> = w.letters.iter().map(|l| l.index).collect();
    let mut asc = 0;
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if idx[a] < idx[b] {
                asc += 1;
            }
        }
    }
    c[n] = asc;
    c
}

pub const DEFAULT_NF_BOUND: usize = 8;

/// All decreasing-peak ramp products for S_n.
pub fn enumerate_normal_forms(n: usize, bound: usize) -> Result<Vec<NormalForm>> {
    if n > bound {
        return Err(Error::BoundExceeded { what: "n", value: n, bound });
    }
    let mut out = vec![NormalForm::default()];
    // peaks are added from high to low
    for k in (1..n).rev() {
        let mut next = Vec::with_capacity(out.len() * (k + 1));
        for nf in &out {
            next.push(nf.clone());
            for j in 1..=k {
                let mut r = nf.clone();
                r.ramps.push(Ramp::new(j, k));
                next.push(r);
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}
