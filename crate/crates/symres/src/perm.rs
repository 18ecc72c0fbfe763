use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_N: usize = 16;

/// A permutation of {1..n} in one-line notation.
///
/// Composition follows functions: `a.compose(&b)` is `x -> a(b(x))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_N],
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        assert!(n <= MAX_N, "n = {n} exceeds {MAX_N}");
        let mut img = [0u8; MAX_N];
        for (i, x) in img.iter_mut().enumerate() {
            *x = i as u8;
        }
        Perm { n: n as u8, img }
    }

    /// Builds from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        if n > MAX_N {
            return Err(Error::NotAPermutation(format!("{images:?} is longer than {MAX_N}")));
        }
        let mut p = Perm::identity(n);
        let mut seen = [false; MAX_N];
        for (i, &x) in images.iter().enumerate() {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x - 1] = true;
            p.img[i] = (x - 1) as u8;
        }
        Ok(p)
    }

    /// The adjacent transposition s_i = (i, i+1).
    pub fn s(n: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < n, "s_{i} undefined for n = {n}");
        let mut p = Perm::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Image of the 1-based point x.
    pub fn apply(&self, x: usize) -> usize {
        self.img[x - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.img[..self.n()].iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|i| self.img[i] as usize == i)
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.n, other.n);
        let mut img = self.img;
        for i in 0..self.n() {
            img[i] = self.img[other.img[i] as usize];
        }
        Perm { n: self.n, img }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = self.img;
        for i in 0..self.n() {
            img[self.img[i] as usize] = i as u8;
        }
        Perm { n: self.n, img }
    }

    /// Same permutation viewed in S_m for m >= n (fixing the extra points).
    pub fn extend(&self, m: usize) -> Perm {
        assert!(m >= self.n() && m <= MAX_N);
        let mut p = *self;
        p.n = m as u8;
        p
    }

    /// Conjugates the points by a shift: the result acts on {1..m} moving only
    /// points in offset+1..offset+n like `self` moves 1..n.
    pub fn shifted(&self, offset: usize, m: usize) -> Perm {
        assert!(offset + self.n() <= m);
        let mut p = Perm::identity(m);
        for i in 0..self.n() {
            p.img[offset + i] = (self.img[i] as usize + offset) as u8;
        }
        p
    }

    /// Restricts a permutation that preserves {1..k} to S_k.
    pub fn restrict(&self, k: usize) -> Option<Perm> {
        let mut p = Perm::identity(k);
        for i in 0..k {
            if self.img[i] as usize >= k {
                return None;
            }
            p.img[i] = self.img[i];
        }
        Some(p)
    }

    /// Sign (+1 or -1).
    pub fn sign(&self) -> i64 {
        let mut seen = [false; MAX_N];
        let mut s = 1;
        for i in 0..self.n() {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.img[j] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                s = -s;
            }
        }
        s
    }

    /// Position in the lexicographic order of `Perm::all(n)`.
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        for i in 0..n {
            let smaller = (i + 1..n).filter(|&j| self.img[j] < self.img[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    /// Inverse of `lex_rank`.
    pub fn lex_unrank(n: usize, mut rank: usize) -> Perm {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<usize> = (1..=n).collect();
        let images: Vec<usize> = digits.iter().map(|&d| pool.remove(d)).collect();
        Perm::from_images(&images).unwrap()
    }

    /// All permutations of {1..n}, in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Perm::from_images(&cur).unwrap());
            // next permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] around permutation, got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Perm::identity(0));
        }
        let images = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad image {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(&images)
    }
}
