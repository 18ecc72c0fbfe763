use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type DenseMat = Vec<Vec<BigInt>>;

/// Result of a dense Smith normal form computation.
///
/// When transforms are tracked, `u * a * v` is the diagonal matrix with `diag`
/// on its leading diagonal, and `u_inv`, `v_inv` are the inverses of `u`, `v`.
#[derive(Clone, Debug)]
pub struct DenseSnf {
    pub diag: Vec<BigInt>,
    pub u: Option<DenseMat>,
    pub u_inv: Option<DenseMat>,
    pub v: Option<DenseMat>,
    pub v_inv: Option<DenseMat>,
}

pub fn identity(n: usize) -> DenseMat {
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    m
}

pub fn mat_mul(a: &DenseMat, b: &DenseMat) -> DenseMat {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![BigInt::zero(); n];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b[k].iter().enumerate() {
                    if !y.is_zero() {
                        out[j] += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

struct Calc {
    a: DenseMat,
    m: usize,
    n: usize,
    track: bool,
    u: DenseMat,
    u_inv: DenseMat,
    v: DenseMat,
    v_inv: DenseMat,
}

impl Calc {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if self.track {
            self.u.swap(i, j);
            for row in self.u_inv.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if self.track {
            for row in self.v.iter_mut() {
                row.swap(i, j);
            }
            self.v_inv.swap(i, j);
        }
    }

    // row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let (ri, rt) = two_rows(&mut self.a, i, t);
        axpy(ri, rt, q);
        if self.track {
            let (ui, ut) = two_rows(&mut self.u, i, t);
            axpy(ui, ut, q);
            for row in self.u_inv.iter_mut() {
                let add = &row[i] * q;
                row[t] += add;
            }
        }
    }

    // col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for row in self.a.iter_mut() {
            let sub = &row[t] * q;
            row[j] -= sub;
        }
        if self.track {
            for row in self.v.iter_mut() {
                let sub = &row[t] * q;
                row[j] -= sub;
            }
            let (vt, vj) = two_rows(&mut self.v_inv, t, j);
            let neg = -q;
            axpy(vt, vj, &neg);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -&*x;
        }
        if self.track {
            for x in self.u[i].iter_mut() {
                *x = -&*x;
            }
            for row in self.u_inv.iter_mut() {
                row[i] = -&row[i];
            }
        }
    }

    fn min_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => x.abs() < self.a[bi][bj].abs(),
                };
                if better {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) -> Vec<BigInt> {
        let mut diag = Vec::new();
        let lim = self.m.min(self.n);
        let mut t = 0;
        while t < lim {
            let Some((pi, pj)) = self.min_nonzero(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.a[t][t].clone();
                let mut clean = true;
                for i in t + 1..self.m {
                    if !self.a[i][t].is_zero() {
                        let q = self.a[i][t].div_floor(&p);
                        self.row_sub(i, t, &q);
                        if !self.a[i][t].is_zero() {
                            clean = false;
                        }
                    }
                }
                for j in t + 1..self.n {
                    if !self.a[t][j].is_zero() {
                        let q = self.a[t][j].div_floor(&p);
                        self.col_sub(j, t, &q);
                        if !self.a[t][j].is_zero() {
                            clean = false;
                        }
                    }
                }
                if !clean {
                    // move the smallest leftover in row/column t into the pivot
                    let mut best: Option<(usize, bool)> = None;
                    let mut bv = self.a[t][t].abs();
                    for i in t + 1..self.m {
                        let x = self.a[i][t].abs();
                        if !x.is_zero() && x < bv {
                            bv = x;
                            best = Some((i, true));
                        }
                    }
                    for j in t + 1..self.n {
                        let x = self.a[t][j].abs();
                        if !x.is_zero() && x < bv {
                            bv = x;
                            best = Some((j, false));
                        }
                    }
                    match best {
                        Some((i, true)) => self.swap_rows(t, i),
                        Some((j, false)) => self.swap_cols(t, j),
                        None => {}
                    }
                    continue;
                }
                // divisibility of the remaining block by the pivot
                let mut bad = None;
                'outer: for i in t + 1..self.m {
                    for j in t + 1..self.n {
                        if !self.a[i][j].is_zero() && !self.a[i][j].is_multiple_of(&p) {
                            bad = Some(i);
                            break 'outer;
                        }
                    }
                }
                match bad {
                    Some(i) => {
                        let minus_one = -BigInt::one();
                        self.row_sub(t, i, &minus_one);
                    }
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            diag.push(self.a[t][t].clone());
            t += 1;
        }
        diag
    }
}

fn two_rows(m: &mut DenseMat, i: usize, t: usize) -> (&mut Vec<BigInt>, &Vec<BigInt>) {
    assert_ne!(i, t);
    if i < t {
        let (lo, hi) = m.split_at_mut(t);
        (&mut lo[i], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(i);
        (&mut hi[0], &lo[t])
    }
}

// x -= q * y
fn axpy(x: &mut [BigInt], y: &[BigInt], q: &BigInt) {
    for (a, b) in x.iter_mut().zip(y) {
        if !b.is_zero() {
            *a -= q * b;
        }
    }
}

/// Smith normal form of a dense integer matrix.
pub fn dense_snf(a: DenseMat, cols: usize, track: bool) -> DenseSnf {
    let m = a.len();
    let n = cols;
    let (u, u_inv, v, v_inv) = if track {
        (identity(m), identity(m), identity(n), identity(n))
    } else {
        (vec![], vec![], vec![], vec![])
    };
    let mut calc = Calc { a, m, n, track, u, u_inv, v, v_inv };
    let diag = calc.run();
    if track {
        DenseSnf {
            diag,
            u: Some(calc.u),
            u_inv: Some(calc.u_inv),
            v: Some(calc.v),
            v_inv: Some(calc.v_inv),
        }
    } else {
        DenseSnf { diag, u: None, u_inv: None, v: None, v_inv: None }
    }
}
