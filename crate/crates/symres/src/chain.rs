//! Formal Z[S_n]-combinations of cells.

use std::collections::BTreeMap;
use std::fmt;

use crate::group_ring::GroupRingElem;
use crate::perm::Perm;

#[derive(Clone, PartialEq, Eq)]
pub struct Chain<C: Ord> {
    n: u8,
    terms: BTreeMap<C, GroupRingElem>,
}

impl<C: Ord + Clone> Chain<C> {
    pub fn zero(n: usize) -> Self {
        Chain { n: n as u8, terms: BTreeMap::new() }
    }

    pub fn cell(n: usize, c: C) -> Self {
        Self::term(c, GroupRingElem::one(n))
    }

    pub fn term(c: C, a: GroupRingElem) -> Self {
        let mut out = Self::zero(a.n());
        out.add_term(c, &a);
        out
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn add_term(&mut self, c: C, a: &GroupRingElem) {
        if a.is_zero() {
            return;
        }
        match self.terms.get_mut(&c) {
            Some(e) => {
                *e = &*e + a;
                if e.is_zero() {
                    self.terms.remove(&c);
                }
            }
            None => {
                self.terms.insert(c, a.clone());
            }
        }
    }

    /// Adds k * g * c.
    pub fn add_mono(&mut self, c: C, g: Perm, k: i64) {
        self.add_term(c, &GroupRingElem::monomial(g, k));
    }

    pub fn add_chain(&mut self, other: &Chain<C>) {
        for (c, a) in &other.terms {
            self.add_term(c.clone(), a);
        }
    }

    /// self += a * other
    pub fn add_scaled(&mut self, a: &GroupRingElem, other: &Chain<C>) {
        for (c, b) in &other.terms {
            self.add_term(c.clone(), &(a * b));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&C, &GroupRingElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, c: &C) -> GroupRingElem {
        self.terms.get(c).cloned().unwrap_or_else(|| GroupRingElem::zero(self.n()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn left_mul(&self, a: &GroupRingElem) -> Self {
        let mut out = Self::zero(self.n());
        out.add_scaled(a, self);
        out
    }

    pub fn left_mul_perm(&self, g: &Perm) -> Self {
        Chain {
            n: self.n,
            terms: self.terms.iter().map(|(c, a)| (c.clone(), a.left_mul_perm(g))).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.n());
        for (c, a) in &self.terms {
            out.add_term(c.clone(), &a.scale(k));
        }
        out
    }

    /// Extends a map on cells Z[S_n]-linearly.
    pub fn map<D: Ord + Clone>(&self, m: usize, mut f: impl FnMut(&C) -> Chain<D>) -> Chain<D> {
        let mut out = Chain::zero(m);
        for (c, a) in &self.terms {
            out.add_scaled(a, &f(c));
        }
        out
    }

    pub fn sub(&self, other: &Chain<C>) -> Self {
        let mut out = self.clone();
        out.add_chain(&other.scale(-1));
        out
    }

    pub fn add(&self, other: &Chain<C>) -> Self {
        let mut out = self.clone();
        out.add_chain(other);
        out
    }

    /// Coefficients after applying the augmentation Z[S_n] -> Z.
    pub fn augmented(&self) -> BTreeMap<C, i64> {
        self.terms
            .iter()
            .map(|(c, a)| (c.clone(), a.augmentation()))
            .filter(|(_, v)| *v != 0)
            .collect()
    }
}

impl<C: Ord + Clone + fmt::Display> fmt::Display for Chain<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(c, a)| format!("({a}){c}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Ord + Clone + fmt::Display> fmt::Debug for Chain<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
