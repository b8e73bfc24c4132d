use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::matrix::IntSymMatrix;

/// Number of positive, negative and zero entries in a diagonal form
/// congruent to a symmetric matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Sylvester inertia via symmetric Gaussian elimination over ℚ.
///
/// Each step applies the same elementary operation to rows and columns, so
/// the working matrix stays congruent to the input. A zero diagonal with a
/// nonzero off-diagonal entry `a_ij` is repaired by adding row/column `j` to
/// `i`, which leaves `2·a_ij` on the diagonal.
pub fn inertia(a: &IntSymMatrix) -> Inertia {
    let n = a.dim();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(a[(i, j)].clone()))
                .collect()
        })
        .collect();
    let mut out = Inertia::default();
    let mut k = 0;
    while k < n {
        let pivot = (k..n).find(|&i| !m[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let off = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !m[i][j].is_zero());
                let Some((i, j)) = off else {
                    out.zero += n - k;
                    break;
                };
                // row_i += row_j; col_i += col_j
                let row_j = m[j].clone();
                for (x, v) in m[i].iter_mut().zip(row_j) {
                    *x += v;
                }
                for row in m.iter_mut() {
                    let v = row[j].clone();
                    row[i] += v;
                }
                i
            }
        };
        m.swap(k, p);
        for row in m.iter_mut() {
            row.swap(k, p);
        }
        let d = m[k][k].clone();
        if d.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let f = &row[k] / &d;
            for (x, p) in row[k..].iter_mut().zip(&pivot_row[k..]) {
                *x -= &f * p;
            }
        }
        // columns mirror the row operations; only the trailing block matters
        for x in &mut m[k][k + 1..] {
            *x = BigRational::zero();
        }
        k += 1;
    }
    out
}

/// Signature of the real symmetric form, computed exactly.
pub fn signature(a: &IntSymMatrix) -> i64 {
    inertia(a).signature()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlinalg::matrix::IntMatrix;
    use num_bigint::BigInt;

    fn sig(rows: &[&[i64]]) -> i64 {
        signature(&IntSymMatrix::from_rows(rows).unwrap())
    }

    /// E8 Cartan matrix: even, unimodular, positive definite.
    fn e8() -> IntSymMatrix {
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
        let mut m = IntMatrix::identity(8);
        for i in 0..8 {
            m[(i, i)] = BigInt::from(2);
        }
        for (i, j) in edges {
            m[(i, j)] = BigInt::from(-1);
            m[(j, i)] = BigInt::from(-1);
        }
        IntSymMatrix::new(m).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(sig(&[&[1, 0], &[0, -1]]), 0);
        // eigenvalues 1 and 3
        assert_eq!(sig(&[&[2, 1], &[1, 2]]), 2);
        assert_eq!(signature(&e8()), 8);
        assert_eq!(signature(&IntSymMatrix::empty()), 0);
    }

    #[test]
    fn zero_diagonal_needs_off_diagonal_pivot() {
        assert_eq!(sig(&[&[0, 1], &[1, 0]]), 0);
        assert_eq!(sig(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]), 0);
        let i = inertia(&IntSymMatrix::from_rows(&[[0, 2, 0], [2, 0, 0], [0, 0, 0]]).unwrap());
        assert_eq!(
            i,
            Inertia {
                positive: 1,
                negative: 1,
                zero: 1
            }
        );
        assert_eq!(sig(&[&[1, 1], &[1, 1]]), 1);
        assert_eq!(sig(&[&[-2]]), -1);
    }

    #[test]
    fn e8_is_unimodular() {
        assert_eq!(e8().as_matrix().determinant().unwrap(), BigInt::from(1));
    }
}
