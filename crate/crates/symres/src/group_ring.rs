//! Exact arithmetic in R[S_n] for R = Z or Z/m.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::rewrite::{word_to_perm, Word};

/// Coefficient ring: modulus 0 is Z, modulus m >= 2 is Z/m.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RingSpec {
    pub modulus: u64,
}

impl RingSpec {
    pub const Z: RingSpec = RingSpec { modulus: 0 };

    pub fn zmod(m: u64) -> RingSpec {
        assert!(m >= 2, "Z/m needs m >= 2");
        RingSpec { modulus: m }
    }

    pub fn normalize(&self, x: i64) -> i64 {
        if self.modulus == 0 {
            x
        } else {
            x.rem_euclid(self.modulus as i64)
        }
    }

    pub fn name(&self) -> String {
        if self.modulus == 0 {
            "Z".into()
        } else {
            format!("Z/{}", self.modulus)
        }
    }
}

fn add_c(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("group ring coefficient overflow")
}

fn mul_c(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("group ring coefficient overflow")
}

/// A finite R-linear combination of permutations, no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElem {
    n: u8,
    ring: RingSpec,
    terms: BTreeMap<Perm, i64>,
}

impl GroupRingElem {
    pub fn zero(n: usize) -> Self {
        Self::zero_in(n, RingSpec::Z)
    }

    pub fn zero_in(n: usize, ring: RingSpec) -> Self {
        GroupRingElem { n: n as u8, ring, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_perm(Perm::identity(n))
    }

    pub fn from_perm(p: Perm) -> Self {
        Self::monomial(p, 1)
    }

    pub fn monomial(p: Perm, c: i64) -> Self {
        let mut e = Self::zero(p.n());
        e.add_term(p, c);
        e
    }

    pub fn scalar(n: usize, c: i64) -> Self {
        Self::monomial(Perm::identity(n), c)
    }

    /// The single group element given by a word.
    pub fn from_word(w: &Word, n: usize) -> Result<Self> {
        Ok(Self::from_perm(word_to_perm(w, n)?))
    }

    /// The generator s_i.
    pub fn s(n: usize, i: usize) -> Self {
        Self::from_perm(Perm::s(n, i))
    }

    /// Product of generators s_{i1} s_{i2} ... (empty list gives 1).
    pub fn word(n: usize, idx: &[usize]) -> Self {
        Self::from_perm(word_to_perm(&Word::from_indices(idx), n).expect("generator index in range"))
    }

    pub fn ramp(n: usize, i: usize, j: usize) -> Self {
        if j < i {
            return Self::one(n);
        }
        Self::word(n, &(i..=j).collect::<Vec<_>>())
    }

    /// Parses expressions like `1 - s1 + 2 s2 s1 - s1'`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let mut out = Self::zero(n);
        let cleaned = s.replace('-', " - ").replace('+', " + ");
        let mut sign = 1i64;
        let mut coeff: Option<i64> = None;
        let mut word = String::new();
        let flush = |sign: i64, coeff: &mut Option<i64>, word: &mut String, out: &mut GroupRingElem| -> Result<bool> {
            if coeff.is_none() && word.trim().is_empty() {
                return Ok(false);
            }
            let w: Word = word.parse()?;
            let p = word_to_perm(&w, n)?;
            out.add_term(p, sign * coeff.unwrap_or(1));
            *coeff = None;
            word.clear();
            Ok(true)
        };
        for tok in cleaned.split_whitespace() {
            match tok {
                "+" | "-" => {
                    flush(sign, &mut coeff, &mut word, &mut out)?;
                    sign = if tok == "-" { -1 } else { 1 };
                }
                t if t.chars().all(|c| c.is_ascii_digit()) => {
                    if !word.trim().is_empty() || coeff.is_some() {
                        return Err(Error::Parse(format!("unexpected number {t:?} in {s:?}")));
                    }
                    coeff = Some(t.parse().map_err(|_| Error::Parse(t.into()))?);
                }
                t => {
                    word.push(' ');
                    word.push_str(t);
                }
            }
        }
        flush(sign, &mut coeff, &mut word, &mut out)?;
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn with_ring(&self, ring: RingSpec) -> Self {
        let mut e = Self::zero_in(self.n(), ring);
        for (p, &c) in &self.terms {
            e.add_term(*p, c);
        }
        e
    }

    pub fn add_term(&mut self, p: Perm, c: i64) {
        debug_assert_eq!(p.n(), self.n());
        let c = self.ring.normalize(c);
        if c == 0 {
            return;
        }
        let ring = self.ring;
        let e = self.terms.entry(p).or_insert(0);
        *e = ring.normalize(add_c(*e, c));
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn coeff(&self, p: &Perm) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients.
    pub fn augmentation(&self) -> i64 {
        self.ring.normalize(self.terms.values().fold(0, |a, &c| add_c(a, c)))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RingMismatch(format!("S_{} vs S_{}", self.n, other.n)));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring.name(), other.ring.name())));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, &c) in &other.terms {
            out.add_term(*p, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(-1))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero_in(self.n(), self.ring);
        for (p, &a) in &self.terms {
            for (q, &b) in &other.terms {
                out.add_term(p.compose(q), mul_c(a, b));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero_in(self.n(), self.ring);
        for (p, &c) in &self.terms {
            out.add_term(*p, mul_c(c, k));
        }
        out
    }

    /// g * self
    pub fn left_mul_perm(&self, g: &Perm) -> Self {
        let mut out = Self::zero_in(self.n(), self.ring);
        for (p, &c) in &self.terms {
            out.add_term(g.compose(p), c);
        }
        out
    }

    /// self * g
    pub fn right_mul_perm(&self, g: &Perm) -> Self {
        let mut out = Self::zero_in(self.n(), self.ring);
        for (p, &c) in &self.terms {
            out.add_term(p.compose(g), c);
        }
        out
    }

    /// Applies a map on group elements termwise (e.g. an embedding of groups).
    pub fn map_perms(&self, m: usize, f: impl Fn(&Perm) -> Perm) -> Self {
        let mut out = Self::zero_in(m, self.ring);
        for (p, &c) in &self.terms {
            out.add_term(f(p), c);
        }
        out
    }

    /// The antipode sum c_g g^{-1}.
    pub fn conjugate(&self) -> Self {
        self.map_perms(self.n(), |p| p.inverse())
    }

    /// Term list in canonical order, as `coeff * [perm]` strings.
    pub fn term_strings(&self) -> Vec<String> {
        self.terms.iter().map(|(p, c)| format!("{c} * {p}")).collect()
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, &c)| {
                let w = crate::rewrite::normal_form_perm(p).word();
                if p.is_identity() {
                    format!("{c}")
                } else if c == 1 {
                    format!("{w}")
                } else if c == -1 {
                    format!("-{w}")
                } else {
                    format!("{c} {w}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GroupRingElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.term_strings().serialize(s)
    }
}

impl Add for &GroupRingElem {
    type Output = GroupRingElem;
    fn add(self, rhs: &GroupRingElem) -> GroupRingElem {
        self.try_add(rhs).expect("group ring mismatch")
    }
}

impl Sub for &GroupRingElem {
    type Output = GroupRingElem;
    fn sub(self, rhs: &GroupRingElem) -> GroupRingElem {
        self.try_sub(rhs).expect("group ring mismatch")
    }
}

impl Mul for &GroupRingElem {
    type Output = GroupRingElem;
    fn mul(self, rhs: &GroupRingElem) -> GroupRingElem {
        self.try_mul(rhs).expect("group ring mismatch")
    }
}

impl Neg for &GroupRingElem {
    type Output = GroupRingElem;
    fn neg(self) -> GroupRingElem {
        self.scale(-1)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for GroupRingElem {
            type Output = GroupRingElem;
            fn $m(self, rhs: GroupRingElem) -> GroupRingElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GroupRingElem> for GroupRingElem {
            type Output = GroupRingElem;
            fn $m(self, rhs: &GroupRingElem) -> GroupRingElem {
                (&self).$m(rhs)
            }
        }
        impl $tr<GroupRingElem> for &GroupRingElem {
            type Output = GroupRingElem;
            fn $m(self, rhs: GroupRingElem) -> GroupRingElem {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for GroupRingElem {
    type Output = GroupRingElem;
    fn neg(self) -> GroupRingElem {
        self.scale(-1)
    }
}
