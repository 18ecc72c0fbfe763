use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

/// Sparse integer matrix stored row by row, each row sorted by column.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    /// Builds a matrix from (row, col, value) triplets. Repeated positions are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut acc: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            if v != 0 {
                let e = acc[r].entry(c).or_insert(0);
                *e = e.checked_add(v).expect("matrix entry overflow");
            }
        }
        let data = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|&(_, v)| v != 0).collect())
            .collect();
        IntMatrix { rows, cols, data }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        let trip = rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, v)));
        Self::from_triplets(nr, nc, trip)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn row(&self, r: usize) -> &[(usize, i64)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        match self.data[r].binary_search_by_key(&c, |&(j, _)| j) {
            Ok(p) => self.data[r][p].1,
            Err(_) => 0,
        }
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |&(j, v)| (i, j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(self.cols, self.rows, self.triplets().map(|(i, j, v)| (j, i, v)))
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut trip = Vec::new();
        for (i, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(k, a) in row {
                for &(j, b) in &other.data[k] {
                    let e = acc.entry(j).or_insert(0);
                    *e = e.checked_add(a.checked_mul(b).expect("overflow")).expect("overflow");
                }
            }
            trip.extend(acc.into_iter().map(|(j, v)| (i, j, v)));
        }
        IntMatrix::from_triplets(self.rows, other.cols, trip)
    }

    pub fn scaled(&self, k: i64) -> IntMatrix {
        IntMatrix::from_triplets(self.rows, self.cols, self.triplets().map(|(i, j, v)| (i, j, v * k)))
    }

    /// Block matrix [[a, b], [c, d]]; blocks must have compatible shapes.
    pub fn block(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, d: &IntMatrix) -> IntMatrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let (r0, c0) = (a.rows, a.cols);
        let trip = a
            .triplets()
            .chain(b.triplets().map(|(i, j, v)| (i, j + c0, v)))
            .chain(c.triplets().map(|(i, j, v)| (i + r0, j, v)))
            .chain(d.triplets().map(|(i, j, v)| (i + r0, j + c0, v)));
        IntMatrix::from_triplets(a.rows + c.rows, a.cols + b.cols, trip)
    }

    pub fn identity(n: usize) -> IntMatrix {
        IntMatrix::from_triplets(n, n, (0..n).map(|i| (i, i, 1)))
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols);
        self.data
            .iter()
            .map(|row| row.iter().map(|&(j, v)| BigInt::from(v) * &x[j]).sum())
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::from(0); self.cols]; self.rows];
        for (i, j, v) in self.triplets() {
            out[i][j] = BigInt::from(v);
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} ({} nonzero)", self.rows, self.cols, self.nnz())?;
        if self.rows <= 12 && self.cols <= 12 {
            for i in 0..self.rows {
                let line: Vec<String> = (0..self.cols).map(|j| format!("{:>3}", self.get(i, j))).collect();
                writeln!(f, "  [{}]", line.join(" "))?;
            }
        }
        Ok(())
    }
}
