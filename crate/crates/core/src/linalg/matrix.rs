use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: alloc::vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Gauss-Jordan elimination. Pivot search takes the first column with a
    /// nonzero entry at or below the current row, and within it the smallest
    /// row index.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip().unwrap();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&f * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            reduced: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + &(a * other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.debug_list().entries(self.row(r)).finish()?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proportional_rows_have_rank_one() {
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, alloc::vec![0]);
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::zeros(2, 5).rank(), 0);
    }

    #[test]
    fn rref_is_idempotent_on_example() {
        let m = Matrix::from_i64(&[&[0, 2, 4, 1], &[1, 1, 1, 1], &[1, 3, 5, 2]]).unwrap();
        let once = m.rref().reduced;
        assert_eq!(once.rref().reduced, once);
    }
}
