use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn diagonal<I, T>(entries: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let entries: Vec<BigInt> = entries.into_iter().map(Into::into).collect();
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    /// An empty row list gives the 0x0 matrix.
    pub fn from_rows<R, T>(rows: &[R]) -> Result<Self>
    where
        R: AsRef<[T]>,
        T: Clone + Into<BigInt>,
    {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != ncols {
                return Err(Error::RaggedMatrix {
                    row: i,
                    len: row.len(),
                    expected: ncols,
                });
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
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

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Block diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(bareiss_determinant(self.to_rows()))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor * row[source]`
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self[(source, j)].clone();
            if !s.is_zero() {
                self[(target, j)] += factor * s;
            }
        }
    }

    /// `col[target] += factor * col[source]`
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = self[(i, source)].clone();
            if !s.is_zero() {
                self[(i, target)] += factor * s;
            }
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = -v;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = -v;
        }
    }
}

/// Bareiss elimination on a square matrix given as rows.
pub(crate) fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Symmetric square integer matrix. Symmetry is checked on construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntSymMatrix(IntMatrix);

impl IntSymMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if let Some((row, col)) = m.first_asymmetry() {
            return Err(Error::AsymmetricMatrix { row, col });
        }
        Ok(IntSymMatrix(m))
    }

    pub fn from_rows<R, T>(rows: &[R]) -> Result<Self>
    where
        R: AsRef<[T]>,
        T: Clone + Into<BigInt>,
    {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    /// The 0x0 matrix.
    pub fn empty() -> Self {
        IntSymMatrix(IntMatrix::zeros(0, 0))
    }

    pub fn zeros(n: usize) -> Self {
        IntSymMatrix(IntMatrix::zeros(n, n))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn diagonal(&self) -> impl Iterator<Item = &BigInt> + '_ {
        (0..self.dim()).map(move |i| &self.0[(i, i)])
    }

    pub fn direct_sum(&self, other: &IntSymMatrix) -> IntSymMatrix {
        IntSymMatrix(self.0.direct_sum(&other.0))
    }

    pub fn neg(&self) -> IntSymMatrix {
        IntSymMatrix(self.0.neg())
    }

    /// `gᵀ · self · g`; always symmetric.
    pub fn congruent(&self, g: &IntMatrix) -> Result<IntSymMatrix> {
        let m = g.transpose().mul(&self.0)?.mul(g)?;
        Ok(IntSymMatrix(m))
    }
}

impl Index<(usize, usize)> for IntSymMatrix {
    type Output = BigInt;

    fn index(&self, idx: (usize, usize)) -> &BigInt {
        &self.0[idx]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_construction() {
        assert!(IntSymMatrix::from_rows(&[[1, 2], [2, 3]]).is_ok());
        assert_eq!(
            IntSymMatrix::from_rows(&[[1, 2], [3, 4]]),
            Err(Error::AsymmetricMatrix { row: 0, col: 1 })
        );
        let ragged: Vec<Vec<i32>> = vec![vec![1, 2], vec![3]];
        assert!(matches!(
            IntMatrix::from_rows(&ragged),
            Err(Error::RaggedMatrix { row: 1, .. })
        ));
        assert_eq!(IntSymMatrix::empty().dim(), 0);
    }

    #[test]
    fn determinants() {
        let m = IntMatrix::from_rows(&[[2, 1], [1, 2]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(3));
        let m = IntMatrix::from_rows(&[[0, 1, 2], [1, 0, 3], [4, -3, 8]]).unwrap();
        assert_eq!(m.determinant().unwrap(), BigInt::from(-2));
        assert_eq!(IntMatrix::zeros(0, 0).determinant().unwrap(), BigInt::one());
        assert_eq!(IntMatrix::zeros(2, 2).determinant().unwrap(), BigInt::zero());
    }

    #[test]
    fn product_and_sum() {
        let a = IntMatrix::from_rows(&[[1, 2], [3, 4]]).unwrap();
        let b = IntMatrix::identity(2);
        assert_eq!(a.mul(&b).unwrap(), a);
        let s = a.direct_sum(&IntMatrix::diagonal([5]));
        assert_eq!(s.rows(), 3);
        assert_eq!(s[(2, 2)], BigInt::from(5));
        assert!(a.mul(&IntMatrix::identity(3)).is_err());
    }
}
