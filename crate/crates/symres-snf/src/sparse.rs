use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dense::dense_snf;
use crate::matrix::IntMatrix;

/// Coefficient arithmetic used by the elimination. `None` signals overflow.
pub(crate) trait Coef: Clone {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// a - f * b
    fn mul_sub(a: &Self, f: &Self, b: &Self) -> Option<Self>;
    fn mul(a: &Self, b: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    /// a / b when b divides a.
    fn div_exact(a: &Self, b: &Self) -> Option<Self>;
    /// |a| when it is small enough to serve as a non-unit pivot.
    fn small_abs(&self) -> Option<u64>;
}

impl Coef for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn mul_sub(a: &Self, f: &Self, b: &Self) -> Option<Self> {
        a.checked_sub(f.checked_mul(*b)?)
    }
    fn mul(a: &Self, b: &Self) -> Option<Self> {
        a.checked_mul(*b)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn div_exact(a: &Self, b: &Self) -> Option<Self> {
        if *b != 0 && a % b == 0 {
            a.checked_div(*b)
        } else {
            None
        }
    }
    fn small_abs(&self) -> Option<u64> {
        Some(self.unsigned_abs()).filter(|&v| v <= SMALL_PIVOT)
    }
}

impl Coef for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn mul_sub(a: &Self, f: &Self, b: &Self) -> Option<Self> {
        Some(a - f * b)
    }
    fn mul(a: &Self, b: &Self) -> Option<Self> {
        Some(a * b)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn div_exact(a: &Self, b: &Self) -> Option<Self> {
        if !Zero::is_zero(b) && Zero::is_zero(&(a % b)) {
            Some(a / b)
        } else {
            None
        }
    }
    fn small_abs(&self) -> Option<u64> {
        self.abs().to_u64().filter(|&v| v <= SMALL_PIVOT)
    }
}

const SMALL_PIVOT: u64 = 1 << 20;

/// Outcome of the sparse phase: number of unit pivots, the non-unit pivots and the leftover block.
pub(crate) struct Reduced {
    pub pivots: usize,
    pub extra: Vec<BigInt>,
    pub rest: Vec<Vec<BigInt>>,
    pub rest_cols: usize,
}

struct Elim<T> {
    rows: Vec<Vec<(usize, T)>>,
    row_alive: Vec<bool>,
    col_rows: Vec<Vec<usize>>,
    col_count: Vec<usize>,
    col_alive: Vec<bool>,
}

impl<T: Coef> Elim<T> {
    fn new(m: &IntMatrix) -> Self {
        let rows: Vec<Vec<(usize, T)>> = (0..m.rows())
            .map(|r| m.row(r).iter().map(|&(c, v)| (c, T::from_i64(v))).collect())
            .collect();
        let mut col_rows = vec![Vec::new(); m.cols()];
        let mut col_count = vec![0; m.cols()];
        for (r, row) in rows.iter().enumerate() {
            for (c, _) in row {
                col_rows[*c].push(r);
                col_count[*c] += 1;
            }
        }
        Elim {
            row_alive: vec![true; rows.len()],
            rows,
            col_rows,
            col_count,
            col_alive: vec![true; m.cols()],
        }
    }

    fn entry(&self, r: usize, c: usize) -> Option<&T> {
        let row = &self.rows[r];
        row.binary_search_by_key(&c, |(j, _)| *j).ok().map(|p| &row[p].1)
    }

    // live rows holding a nonzero entry in column c (deduplicated)
    fn rows_of(&mut self, c: usize) -> Vec<usize> {
        let mut list = std::mem::take(&mut self.col_rows[c]);
        list.sort_unstable();
        list.dedup();
        list.retain(|&r| self.row_alive[r] && self.entry(r, c).is_some());
        self.col_rows[c] = list.clone();
        list
    }

    // row r -= f * row p
    fn row_update(&mut self, r: usize, f: &T, p: usize) -> Option<()> {
        let a = std::mem::take(&mut self.rows[r]);
        let b = &self.rows[p];
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
            let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
            if ca < cb {
                out.push(a[i].clone());
                i += 1;
            } else if cb < ca {
                if self.col_alive[cb] {
                    let v = T::mul(f, &b[j].1)?.neg()?;
                    out.push((cb, v));
                    self.col_rows[cb].push(r);
                    self.col_count[cb] += 1;
                }
                j += 1;
            } else {
                let v = T::mul_sub(&a[i].1, f, &b[j].1)?;
                if v.is_zero() {
                    self.col_count[ca] -= 1;
                } else {
                    out.push((ca, v));
                }
                i += 1;
                j += 1;
            }
        }
        self.rows[r] = out;
        Some(())
    }

    // pv must divide every entry of its row and column
    fn pivot(&mut self, p: usize, c: usize) -> Option<()> {
        let pv = self.entry(p, c).unwrap().clone();
        for r in self.rows_of(c) {
            if r == p {
                continue;
            }
            let a = self.entry(r, c).unwrap().clone();
            let f = T::div_exact(&a, &pv)?;
            self.row_update(r, &f, p)?;
        }
        self.row_alive[p] = false;
        for (j, _) in std::mem::take(&mut self.rows[p]) {
            self.col_count[j] -= 1;
        }
        self.col_alive[c] = false;
        self.col_count[c] = 0;
        Some(())
    }

    fn unit_pass(&mut self, pivots: &mut usize) -> Option<bool> {
        let ncols = self.col_count.len();
        let mut progress = false;
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..ncols)
            .filter(|&c| self.col_alive[c] && self.col_count[c] > 0)
            .map(|c| Reverse((self.col_count[c], c)))
            .collect();
        while let Some(Reverse((cnt, c))) = heap.pop() {
            if !self.col_alive[c] || self.col_count[c] == 0 {
                continue;
            }
            if self.col_count[c] != cnt {
                heap.push(Reverse((self.col_count[c], c)));
                continue;
            }
            let mut best: Option<(usize, usize)> = None;
            for r in self.rows_of(c) {
                if self.entry(r, c).unwrap().is_unit() {
                    let len = self.rows[r].len();
                    if best.is_none_or(|(_, l)| len < l) {
                        best = Some((r, len));
                    }
                }
            }
            if let Some((p, _)) = best {
                self.pivot(p, c)?;
                *pivots += 1;
                progress = true;
            }
        }
        Some(progress)
    }

    // smallest entry of column c that divides its whole row and column
    fn divisor_pivot(&mut self, c: usize) -> Option<usize> {
        let rows = self.rows_of(c);
        let mut best: Option<(u64, usize)> = None;
        for &r in &rows {
            if let Some(v) = self.entry(r, c).unwrap().small_abs() {
                if best.is_none_or(|(b, _)| v < b) {
                    best = Some((v, r));
                }
            }
        }
        let (_, p) = best?;
        let pv = self.entry(p, c).unwrap().clone();
        let divides = |x: &T| T::div_exact(x, &pv).is_some();
        if rows.iter().all(|&r| divides(self.entry(r, c).unwrap())) && self.rows[p].iter().all(|(_, v)| divides(v)) {
            Some(p)
        } else {
            None
        }
    }

    fn run(mut self) -> Option<Reduced> {
        let ncols = self.col_count.len();
        let mut pivots = 0;
        let mut extra = Vec::new();
        loop {
            let mut progress = self.unit_pass(&mut pivots)?;
            if !progress {
                for c in 0..ncols {
                    if !self.col_alive[c] || self.col_count[c] == 0 {
                        continue;
                    }
                    if let Some(p) = self.divisor_pivot(c) {
                        extra.push(self.entry(p, c).unwrap().to_big());
                        self.pivot(p, c)?;
                        progress = true;
                    }
                }
            }
            if !progress {
                break;
            }
        }
        let live_rows: Vec<usize> = (0..self.rows.len())
            .filter(|&r| self.row_alive[r] && !self.rows[r].is_empty())
            .collect();
        let mut col_index = vec![usize::MAX; ncols];
        let mut rest_cols = 0;
        for &r in &live_rows {
            for (c, _) in &self.rows[r] {
                if col_index[*c] == usize::MAX {
                    col_index[*c] = rest_cols;
                    rest_cols += 1;
                }
            }
        }
        let rest = live_rows
            .iter()
            .map(|&r| {
                let mut dense = vec![BigInt::zero(); rest_cols];
                for (c, v) in &self.rows[r] {
                    dense[col_index[*c]] = v.to_big();
                }
                dense
            })
            .collect();
        Some(Reduced { pivots, extra, rest, rest_cols })
    }
}

/// Unit-pivot sparse elimination followed by a dense finish on the leftover block.
pub(crate) fn sparse_factors(m: &IntMatrix) -> Vec<BigInt> {
    let red = match Elim::<i64>::new(m).run() {
        Some(r) => r,
        None => Elim::<BigInt>::new(m).run().expect("big integer elimination cannot overflow"),
    };
    let mut out = vec![BigInt::one(); red.pivots];
    let snf = dense_snf(red.rest, red.rest_cols, false);
    if red.extra.is_empty() {
        out.extend(snf.diag);
    } else {
        out.extend(diagonal_chain(red.extra.into_iter().chain(snf.diag).collect()));
    }
    out
}

/// Invariant factors of a diagonal matrix with nonzero entries.
pub(crate) fn diagonal_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for x in d.iter_mut() {
        *x = x.abs();
    }
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}
