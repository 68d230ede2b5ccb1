//! Dense integer matrices with the row and column operations used by the
//! lattice algorithms.
//!
//! Everything here is arbitrary-precision; the algorithms that need to stay
//! fraction-free (Smith reduction, echelon kernels, Bareiss determinants) do
//! so on top of these primitives.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A dense `rows x cols` matrix over the integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        IntMat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Naive matrix product; sizes here never justify anything cleverer.
    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = &self[(i, k)];
                if lik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = lik * &other[(k, j)];
                    out[(i, j)] += v;
                }
            }
        }
        out
    }

    /// Congruence transform `t * self * t^T`.
    pub fn congruence(&self, t: &IntMat) -> IntMat {
        t.mul(self).mul(&t.transpose())
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.rows {
            self.data.swap(k * self.cols + i, k * self.cols + j);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let v = -core::mem::take(&mut self[(i, k)]);
            self[(i, k)] = v;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for k in 0..self.rows {
            let v = -core::mem::take(&mut self[(k, j)]);
            self[(k, j)] = v;
        }
    }

    /// `row[i] += q * row[j]`, `i != j`.
    pub fn add_row_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        assert_ne!(i, j);
        if q.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let v = q * &self[(j, k)];
            self[(i, k)] += v;
        }
    }

    /// `col[i] += q * col[j]`, `i != j`.
    pub fn add_col_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        assert_ne!(i, j);
        if q.is_zero() {
            return;
        }
        for k in 0..self.rows {
            let v = q * &self[(k, j)];
            self[(k, i)] += v;
        }
    }

    /// Stacks `self` on top of `other` (column counts must agree).
    pub fn vstack(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        IntMat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Maximum absolute value of an entry (zero for empty matrices).
    pub fn max_abs(&self) -> BigInt {
        let mut best = BigInt::zero();
        for v in &self.data {
            let a = v.abs();
            if a > best {
                best = a;
            }
        }
        best
    }
}

impl Index<(usize, usize)> for IntMat {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_and_transpose() {
        let a = IntMat::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let b = IntMat::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), IntMat::from_i64_rows(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), IntMat::from_i64_rows(&[&[1, 3], &[2, 4]]));
        let id = IntMat::identity(2);
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.mul(&a), a);
    }

    #[test]
    fn row_and_col_ops() {
        let mut m = IntMat::from_i64_rows(&[&[1, 2], &[3, 4]]);
        m.add_row_multiple(1, 0, &BigInt::from(-3));
        assert_eq!(m, IntMat::from_i64_rows(&[&[1, 2], &[0, -2]]));
        m.add_col_multiple(1, 0, &BigInt::from(-2));
        assert_eq!(m, IntMat::from_i64_rows(&[&[1, 0], &[0, -2]]));
        m.swap_rows(0, 1);
        m.negate_row(0);
        assert_eq!(m, IntMat::from_i64_rows(&[&[0, 2], &[1, 0]]));
        m.swap_cols(0, 1);
        assert_eq!(m, IntMat::from_i64_rows(&[&[2, 0], &[0, 1]]));
    }

    #[test]
    fn congruence_matches_explicit_product() {
        let g = IntMat::from_i64_rows(&[&[-2, 1], &[1, -2]]);
        let t = IntMat::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let expect = t.mul(&g).mul(&t.transpose());
        assert_eq!(g.congruence(&t), expect);
    }

    #[test]
    fn symmetry_check() {
        assert!(IntMat::from_i64_rows(&[&[-2, 1], &[1, -2]]).is_symmetric());
        assert!(!IntMat::from_i64_rows(&[&[0, 1], &[2, 0]]).is_symmetric());
        assert!(!IntMat::from_i64_rows(&[&[0, 1, 2], &[2, 0, 1]]).is_symmetric());
    }
}
