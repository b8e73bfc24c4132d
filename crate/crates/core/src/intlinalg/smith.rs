//! Smith normal form over the integers.
//!
//! For an m×n matrix `A` this finds unimodular `U` (m×m) and `V` (n×n) with
//! `U·A·V = S` diagonal, `S[i][i] = dᵢ ≥ 0` and `dᵢ | dᵢ₊₁`, zeros last.
//! The inverse of `U` is tracked alongside it: column `i` of `U⁻¹` is the
//! image in `ℤᵐ` of the `i`-th cyclic generator of `coker A`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub s: IntMatrix,
    /// `min(m, n)` diagonal entries of `s`, a divisibility chain with zeros last.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    /// Rank of the source matrix.
    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| !d.is_zero()).count()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    /// row[target] += k·row[source]
    fn add_row(&mut self, target: usize, source: usize, k: &BigInt) {
        self.a.add_row_multiple(target, source, k);
        self.u.add_row_multiple(target, source, k);
        // U⁻¹ picks up the inverse elementary matrix on the right.
        self.u_inv.add_col_multiple(source, target, &-k);
    }

    fn add_col(&mut self, target: usize, source: usize, k: &BigInt) {
        self.a.add_col_multiple(target, source, k);
        self.v.add_col_multiple(target, source, k);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Position of the nonzero entry of least absolute value in the
    /// trailing block starting at (t, t).
    fn smallest_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let mag = x.abs();
                if best.as_ref().is_none_or(|(_, b)| mag < *b) {
                    let done = mag.is_one();
                    best = Some(((i, j), mag));
                    if done {
                        return best.map(|(p, _)| p);
                    }
                }
            }
        }
        best.map(|(p, _)| p)
    }

    /// One elimination pass on row and column `t` with quotients rounded to
    /// the nearest integer. Returns whether the cross is now clear.
    fn reduce_cross(&mut self, t: usize) -> bool {
        let mut clear = true;
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = nearest_quotient(&self.a[(i, t)], &self.a[(t, t)]);
            self.add_row(i, t, &-q);
            clear &= self.a[(i, t)].is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = nearest_quotient(&self.a[(t, j)], &self.a[(t, t)]);
            self.add_col(j, t, &-q);
            clear &= self.a[(t, j)].is_zero();
        }
        clear
    }

    /// Finds an entry in the trailing block not divisible by the pivot.
    fn non_divisible(&self, t: usize) -> Option<usize> {
        let p = &self.a[(t, t)];
        for i in t + 1..self.a.rows() {
            for j in t + 1..self.a.cols() {
                if !self.a[(i, j)].is_multiple_of(p) {
                    return Some(i);
                }
            }
        }
        None
    }
}

/// `q` with `|a − q·p| ≤ |p|/2`.
fn nearest_quotient(a: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(p);
    if (&r * 2u8).abs() > p.abs() {
        q + 1
    } else {
        q
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut r = Reducer {
        a: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
    };

    for t in 0..m.min(n) {
        // Every pass either clears the cross or leaves a remainder smaller
        // than the pivot, so the minimal entry strictly shrinks.
        while let Some((pi, pj)) = r.smallest_pivot(t) {
            r.swap_rows(t, pi);
            r.swap_cols(t, pj);
            if !r.reduce_cross(t) {
                continue;
            }
            match r.non_divisible(t) {
                Some(i) => r.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if r.a[(t, t)].is_zero() {
            break;
        }
        if r.a[(t, t)].sign() == Sign::Minus {
            r.negate_row(t);
        }
    }

    let invariant_factors = (0..m.min(n)).map(|i| r.a[(i, i)].clone()).collect();
    SmithDecomposition {
        u: r.u,
        u_inv: r.u_inv,
        v: r.v,
        s: r.a,
        invariant_factors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factors(rows: &[&[i64]]) -> Vec<i64> {
        let m = IntMatrix::from_rows(rows).unwrap();
        smith_normal_form(&m)
            .invariant_factors
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    fn check_decomposition(a: &IntMatrix, d: &SmithDecomposition) {
        assert_eq!(d.u.mul(a).unwrap().mul(&d.v).unwrap(), d.s);
        assert_eq!(d.u.mul(&d.u_inv).unwrap(), IntMatrix::identity(a.rows()));
        assert_eq!(d.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(d.v.determinant().unwrap().abs(), BigInt::one());
        for i in 0..d.s.rows() {
            for j in 0..d.s.cols() {
                if i != j {
                    assert!(d.s[(i, j)].is_zero());
                }
            }
        }
        let f = &d.invariant_factors;
        for w in f.windows(2) {
            assert!(!w[0].is_negative() && !w[1].is_negative());
            if !w[1].is_zero() {
                assert!(!w[0].is_zero());
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn spec_examples() {
        assert_eq!(factors(&[&[2]]), vec![2]);
        // exhaustive reduction by hand: swap columns, then already diagonal
        assert_eq!(factors(&[&[0, 2], &[2, 0]]), vec![2, 2]);
        assert!(factors(&[]).is_empty());
        // gcd(4,6) = 2, lcm(4,6) = 12
        assert_eq!(factors(&[&[4, 0], &[0, 6]]), vec![2, 12]);
        assert_eq!(factors(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), vec![1, 1, 1]);
        assert_eq!(factors(&[&[0, 0], &[0, 0]]), vec![0, 0]);
        assert_eq!(factors(&[&[-3]]), vec![3]);
    }

    #[test]
    fn rectangular_and_zero_rank() {
        assert_eq!(factors(&[&[2, 4, 6]]), vec![2]);
        assert_eq!(factors(&[&[2], &[3]]), vec![1]);
        assert_eq!(factors(&[&[0, 0, 0], &[0, 0, 5]]), vec![5, 0]);
        let a = IntMatrix::from_rows(&[[6, 4, 2], [3, 9, 12]]).unwrap();
        check_decomposition(&a, &smith_normal_form(&a));
    }

    #[test]
    fn large_entries_stay_exact() {
        let big = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let a = IntMatrix::diagonal([big.clone() * 2, big.clone() * 3]);
        let d = smith_normal_form(&a);
        check_decomposition(&a, &d);
        assert_eq!(d.invariant_factors, vec![big.clone(), big * 6]);
    }

    fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
        (0usize..=6, 0usize..=6).prop_flat_map(|(m, n)| {
            proptest::collection::vec(-9i64..=9, m * n).prop_map(move |v| {
                IntMatrix::from_fn(m, n, |i, j| BigInt::from(v[i * n + j]))
            })
        })
    }

    proptest! {
        #[test]
        fn decomposition_is_sound(a in matrix_strategy()) {
            let d = smith_normal_form(&a);
            check_decomposition(&a, &d);
        }

        #[test]
        fn cokernel_invariant_under_unimodular_change(
            a in matrix_strategy(),
            ops in proptest::collection::vec((0usize..6, 0usize..6, -3i64..=3), 0..12),
        ) {
            let (m, n) = (a.rows(), a.cols());
            let mut p = IntMatrix::identity(m);
            let mut q = IntMatrix::identity(n);
            for &(i, j, k) in &ops {
                if m > 1 && i % m != j % m {
                    p.add_row_multiple(i % m, j % m, &BigInt::from(k));
                }
                if n > 1 && i % n != j % n {
                    q.add_col_multiple(j % n, i % n, &BigInt::from(k));
                }
            }
            let b = p.mul(&a).unwrap().mul(&q).unwrap();
            prop_assert_eq!(
                smith_normal_form(&a).invariant_factors,
                smith_normal_form(&b).invariant_factors
            );
        }
    }
}
