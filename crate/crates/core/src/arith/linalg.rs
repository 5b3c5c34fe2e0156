//! Dense Gaussian elimination over Q.

use num_traits::{One, Zero};

use super::surd::Surd;
use super::Q;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Vec<Q>>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![vec![Q::zero(); cols]; rows] }
    }

    pub fn from_rows(cols: usize, data: Vec<Vec<Q>>) -> Self {
        debug_assert!(data.iter().all(|r| r.len() == cols));
        QMatrix { rows: data.len(), cols, data }
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r][c] = v;
    }

    pub fn push_row(&mut self, row: Vec<Q>) {
        assert_eq!(row.len(), self.cols);
        self.data.push(row);
        self.rows += 1;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r]
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = Q::one() / &self.data[r][c];
            let nz: Vec<usize> = (c..self.cols).filter(|&j| !self.data[r][j].is_zero()).collect();
            for &j in &nz {
                self.data[r][j] *= &inv;
            }
            let pivot_row: Vec<(usize, Q)> = nz.iter().map(|&j| (j, self.data[r][j].clone())).collect();
            for i in 0..self.rows {
                if i == r || self.data[i][c].is_zero() {
                    continue;
                }
                let f = self.data[i][c].clone();
                for (j, v) in &pivot_row {
                    let d = &f * v;
                    self.data[i][*j] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel, one vector per free column. Each vector has
    /// a 1 at its free column and zeros at the other free columns.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut out = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -m.data[row][free].clone();
            }
            out.push(v);
        }
        out
    }
}

/// Rank of a list of vectors (as rows).
pub fn rank_of(vectors: &[Vec<Q>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix::from_rows(vectors[0].len(), vectors.to_vec()).rank()
}

/// Rank of a matrix with entries in a multi-quadratic field.
pub fn surd_rank(rows: &[Vec<Surd>]) -> Result<usize> {
    let mut m: Vec<Vec<Surd>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if r >= m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv()?;
        let pivot: Vec<Surd> = m[r].iter().map(|v| v * &inv).collect();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                if !pivot[j].is_zero() {
                    m[i][j] = &m[i][j] - &(&f * &pivot[j]);
                }
            }
        }
        m[r] = pivot;
        r += 1;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows[0].len(), rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ker = a.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for r in 0..a.rows {
                let dot: Q = a.row(r).iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert!(a.kernel().is_empty());
        assert_eq!(rank_of(&[vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
    }

    #[test]
    fn rank_over_quadratic_field() {
        let r2 = Surd::sqrt(&q(2)).unwrap();
        let one = Surd::rational(q(1));
        let two = Surd::rational(q(2));
        // rows (1, √2) and (√2, 2) are proportional over Q(√2)
        assert_eq!(surd_rank(&[vec![one.clone(), r2.clone()], vec![r2.clone(), two.clone()]]).unwrap(), 1);
        assert_eq!(surd_rank(&[vec![one.clone(), r2.clone()], vec![r2, one]]).unwrap(), 2);
    }
}
