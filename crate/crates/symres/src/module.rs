//! Coefficient modules with a permutation basis: trivial modules, the two-row
//! permutation modules M^k, and modules given by an explicit action table.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group_ring::{GroupRingElem, RingSpec};
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ModuleKind {
    Trivial,
    /// Free module on the k-subsets of {1..n}.
    Permutation(usize),
    /// Explicit action on a finite basis.
    External(String),
}

/// A module over R[G], G ≤ S_n, whose group acts by permuting a basis.
#[derive(Clone, Debug)]
pub struct CoefficientModule {
    n: usize,
    ring: RingSpec,
    kind: ModuleKind,
    labels: Vec<String>,
    subsets: Vec<u32>,
    subset_index: HashMap<u32, usize>,
    table: HashMap<Perm, Vec<usize>>,
}

impl CoefficientModule {
    pub fn trivial(n: usize, ring: RingSpec) -> Self {
        CoefficientModule {
            n,
            ring,
            kind: ModuleKind::Trivial,
            labels: vec!["1".into()],
            subsets: vec![],
            subset_index: HashMap::new(),
            table: HashMap::new(),
        }
    }

    /// M^k: basis v_S for k-subsets S, in increasing lexicographic order of S.
    pub fn permutation(n: usize, k: usize, ring: RingSpec) -> Result<Self> {
        if k > n || n > 31 {
            return Err(Error::Param(format!("no permutation module M^{k} for n = {n}")));
        }
        let mut subsets: Vec<u32> = (0u32..1 << n).filter(|m| m.count_ones() as usize == k).collect();
        subsets.sort_by_key(|m| subset_elems(*m));
        let subset_index = subsets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let labels = subsets.iter().map(|&m| subset_label(m)).collect();
        Ok(CoefficientModule {
            n,
            ring,
            kind: ModuleKind::Permutation(k),
            labels,
            subsets,
            subset_index,
            table: HashMap::new(),
        })
    }

    /// A module given by the images `table[g][i]` of each basis element.
    pub fn external(n: usize, ring: RingSpec, name: &str, labels: Vec<String>, table: HashMap<Perm, Vec<usize>>) -> Result<Self> {
        let d = labels.len();
        for (g, row) in &table {
            let mut seen = vec![false; d];
            if row.len() != d || row.iter().any(|&j| j >= d || std::mem::replace(&mut seen[j], true)) {
                return Err(Error::Param(format!("action of {g} is not a permutation of the basis")));
            }
        }
        Ok(CoefficientModule {
            n,
            ring,
            kind: ModuleKind::External(name.into()),
            labels,
            subsets: vec![],
            subset_index: HashMap::new(),
            table,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn kind(&self) -> &ModuleKind {
        &self.kind
    }

    pub fn with_ring(&self, ring: RingSpec) -> Self {
        CoefficientModule { ring, ..self.clone() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn descriptor(&self) -> String {
        match &self.kind {
            ModuleKind::Trivial => format!("trivial {}", self.ring.name()),
            ModuleKind::Permutation(k) => format!("M^{k} over {}", self.ring.name()),
            ModuleKind::External(name) => format!("{name} over {}", self.ring.name()),
        }
    }

    /// Basis index of `g · b_i`.
    pub fn act(&self, g: &Perm, i: usize) -> usize {
        match &self.kind {
            ModuleKind::Trivial => i,
            ModuleKind::Permutation(_) => {
                let s = self.subsets[i];
                let mut t = 0u32;
                for x in 0..self.n {
                    if s >> x & 1 == 1 {
                        t |= 1 << (g.apply(x + 1) - 1);
                    }
                }
                self.subset_index[&t]
            }
            ModuleKind::External(_) => {
                if g.is_identity() {
                    i
                } else {
                    self.table.get(g).unwrap_or_else(|| panic!("no action recorded for {g}"))[i]
                }
            }
        }
    }

    /// Index of the basis vector v_S; elements of S are 1-based.
    pub fn subset_index(&self, s: &[usize]) -> Option<usize> {
        let m = s.iter().fold(0u32, |m, &x| m | 1 << (x - 1));
        self.subset_index.get(&m).copied()
    }

    /// Elements (1-based) of the subset behind basis vector i.
    pub fn subset(&self, i: usize) -> Vec<usize> {
        subset_elems(self.subsets[i])
    }

    pub fn zero(&self) -> ModuleElem {
        ModuleElem { ring: self.ring, coords: vec![0; self.dim()] }
    }

    pub fn basis_vector(&self, i: usize, r: i64) -> ModuleElem {
        let mut v = self.zero();
        v.coords[i] = self.ring.normalize(r);
        v
    }

    /// r · Σ v_S over the basis vectors selected by `pred`.
    pub fn sum_where(&self, r: i64, pred: impl Fn(usize) -> bool) -> ModuleElem {
        let mut v = self.zero();
        for i in 0..self.dim() {
            if pred(i) {
                v.coords[i] = self.ring.normalize(r);
            }
        }
        v
    }
}

fn subset_elems(m: u32) -> Vec<usize> {
    (0..32).filter(|x| m >> x & 1 == 1).map(|x| x + 1).collect()
}

fn subset_label(m: u32) -> String {
    let parts: Vec<String> = subset_elems(m).iter().map(|x| x.to_string()).collect();
    format!("v{{{}}}", parts.join(","))
}

/// An element of a coefficient module in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ModuleElem {
    pub ring: RingSpec,
    pub coords: Vec<i64>,
}

impl ModuleElem {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &ModuleElem) -> ModuleElem {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| self.ring.normalize(a + b)).collect();
        ModuleElem { ring: self.ring, coords }
    }

    pub fn scale(&self, k: i64) -> ModuleElem {
        ModuleElem { ring: self.ring, coords: self.coords.iter().map(|a| self.ring.normalize(a * k)).collect() }
    }

    /// The standard bilinear form Σ a_i b_i, for which the permutation action is orthogonal.
    pub fn dot(&self, other: &ModuleElem) -> i64 {
        self.ring.normalize(self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum())
    }
}

impl fmt::Display for ModuleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.coords.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, c)| format!("{c}*b{i}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Σ_g a_g (g · v).
pub fn gr_apply(a: &GroupRingElem, m: &CoefficientModule, v: &ModuleElem) -> Result<ModuleElem> {
    if a.ring() != v.ring || v.ring != m.ring() {
        return Err(Error::RingMismatch(format!("{} acting on {}", a.ring().name(), v.ring.name())));
    }
    if a.n() != m.n() || v.coords.len() != m.dim() {
        return Err(Error::RingMismatch(format!("S_{} acting on a module for S_{}", a.n(), m.n())));
    }
    let mut out = m.zero();
    for (g, c) in a.terms() {
        for (i, &x) in v.coords.iter().enumerate() {
            if x != 0 {
                let j = m.act(g, i);
                out.coords[j] = m.ring().normalize(out.coords[j] + c * x);
            }
        }
    }
    Ok(out)
}
