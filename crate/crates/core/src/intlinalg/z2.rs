//! Linear algebra over ℤ/2 on bit-packed rows.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector over ℤ/2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Z2Vector {
    pub fn zeros(len: usize) -> Self {
        Z2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Parses a string of `0`/`1` characters, coordinate 0 first.
    pub fn parse(s: &str) -> Option<Self> {
        let bits: Option<Vec<bool>> = s
            .chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect();
        bits.map(Self::from_bits)
    }

    /// The vector whose coordinate `j` is bit `len-1-j` of `k`, so that
    /// `k = 0, 1, 2, …` enumerates ℤ₂ⁿ in lexicographic order.
    pub fn from_index(len: usize, k: u64) -> Self {
        Self::from_bits((0..len).map(|j| k.checked_shr((len - 1 - j) as u32).unwrap_or(0) & 1 == 1))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if b {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn xor_assign(&mut self, other: &Z2Vector) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Z2Vector) -> Z2Vector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn dot(&self, other: &Z2Vector) -> bool {
        assert_eq!(self.len, other.len);
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }
}

impl fmt::Display for Z2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z2[{self}]")
    }
}

/// Matrix over ℤ/2 stored as one bit vector per row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Z2Matrix {
    rows: Vec<Z2Vector>,
    cols: usize,
}

impl Z2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Z2Matrix {
            rows: vec![Z2Vector::zeros(cols); rows],
            cols,
        }
    }

    pub fn from_rows(rows: Vec<Z2Vector>, cols: usize) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: r.len(),
            });
        }
        Ok(Z2Matrix { rows, cols })
    }

    /// Reduction mod 2 of an integer matrix.
    pub fn reduce(m: &crate::intlinalg::IntMatrix) -> Self {
        let rows = (0..m.rows())
            .map(|i| Z2Vector::from_bits(m.row(i).iter().map(BigInt::is_odd)))
            .collect();
        Z2Matrix {
            rows,
            cols: m.cols(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.rows[i].set(j, b)
    }

    pub fn row(&self, i: usize) -> &Z2Vector {
        &self.rows[i]
    }

    pub fn mul_vec(&self, x: &Z2Vector) -> Result<Z2Vector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok(Z2Vector::from_bits(self.rows.iter().map(|r| r.dot(x))))
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        eliminate(&mut rows, self.cols).len()
    }
}

/// Reduces `rows` to reduced row echelon form in place and returns the
/// pivot column of each leading row.
fn eliminate(rows: &mut [Z2Vector], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Solution set of `M·x = b` over ℤ/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mod2Solution {
    pub particular: Z2Vector,
    pub kernel_basis: Vec<Z2Vector>,
}

impl Mod2Solution {
    /// log₂ of the number of solutions.
    pub fn dimension(&self) -> usize {
        self.kernel_basis.len()
    }

    /// All `2^dim ker` solutions, `particular` first.
    pub fn enumerate(&self) -> Vec<Z2Vector> {
        let k = self.kernel_basis.len();
        assert!(k < 32, "refusing to enumerate 2^{k} solutions");
        (0u64..1 << k)
            .map(|mask| {
                let mut x = self.particular.clone();
                for (i, v) in self.kernel_basis.iter().enumerate() {
                    if (mask >> i) & 1 == 1 {
                        x.xor_assign(v);
                    }
                }
                x
            })
            .collect()
    }
}

/// Solves `m·x = b` over ℤ/2. Free variables are set to zero in the
/// particular solution; the kernel basis has one vector per free column.
pub fn solve_mod2(m: &Z2Matrix, b: &Z2Vector) -> Result<Mod2Solution> {
    if b.len() != m.nrows() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            got: b.len(),
        });
    }
    let n = m.ncols();
    // augmented rows [m | b]
    let mut aug: Vec<Z2Vector> = (0..m.nrows())
        .map(|i| Z2Vector::from_bits(m.row(i).bits().chain(std::iter::once(b.get(i)))))
        .collect();
    let pivots = eliminate(&mut aug, n + 1);
    if pivots.last() == Some(&n) {
        return Err(Error::NoSolution);
    }

    let mut particular = Z2Vector::zeros(n);
    for (r, &c) in pivots.iter().enumerate() {
        particular.set(c, aug[r].get(n));
    }

    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let kernel_basis = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = Z2Vector::zeros(n);
            v.set(f, true);
            for (r, &c) in pivots.iter().enumerate() {
                if aug[r].get(f) {
                    v.set(c, true);
                }
            }
            v
        })
        .collect();

    Ok(Mod2Solution {
        particular,
        kernel_basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&str]) -> Z2Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Z2Matrix::from_rows(rows.iter().map(|r| Z2Vector::parse(r).unwrap()).collect(), cols)
            .unwrap()
    }

    fn v(s: &str) -> Z2Vector {
        Z2Vector::parse(s).unwrap()
    }

    #[test]
    fn spec_examples() {
        let s = solve_mod2(&mat(&["0"]), &v("0")).unwrap();
        assert_eq!(s.particular, v("0"));
        assert_eq!(s.kernel_basis, vec![v("1")]);

        let s = solve_mod2(&mat(&["1"]), &v("1")).unwrap();
        assert_eq!(s.particular, v("1"));
        assert!(s.kernel_basis.is_empty());

        let s = solve_mod2(&mat(&["11", "11"]), &v("11")).unwrap();
        assert_eq!(s.particular, v("10"));
        assert_eq!(s.kernel_basis, vec![v("11")]);
    }

    #[test]
    fn inconsistent_system() {
        assert_eq!(solve_mod2(&mat(&["0"]), &v("1")), Err(Error::NoSolution));
        assert_eq!(solve_mod2(&mat(&["11", "11"]), &v("10")), Err(Error::NoSolution));
        assert!(matches!(
            solve_mod2(&mat(&["1"]), &v("11")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn vector_basics() {
        let a = v("1011");
        assert_eq!(a.to_string(), "1011");
        assert_eq!(a.weight(), 3);
        assert!(!a.dot(&v("1001")));
        assert_eq!(a.xor(&v("0011")), v("1000"));
        assert_eq!(Z2Vector::from_index(2, 1), v("01"));
        assert_eq!(Z2Vector::from_index(0, 0), Z2Vector::zeros(0));
        let long = Z2Vector::from_index(70, 0).xor(&Z2Vector::from_bits((0..70).map(|i| i == 69)));
        assert!(long.get(69) && long.weight() == 1);
    }

    fn system() -> impl Strategy<Value = (Z2Matrix, Z2Vector)> {
        (0usize..=6, 0usize..=10).prop_flat_map(|(r, c)| {
            (
                proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r),
                proptest::collection::vec(any::<bool>(), r),
            )
                .prop_map(move |(rows, b)| {
                    let rows = rows.into_iter().map(Z2Vector::from_bits).collect();
                    (Z2Matrix::from_rows(rows, c).unwrap(), Z2Vector::from_bits(b))
                })
        })
    }

    proptest! {
        #[test]
        fn solutions_match_exhaustive_search((m, b) in system()) {
            let n = m.ncols();
            let brute: Vec<Z2Vector> = (0u64..1 << n)
                .map(|k| Z2Vector::from_index(n, k))
                .filter(|x| m.mul_vec(x).unwrap() == b)
                .collect();
            match solve_mod2(&m, &b) {
                Ok(sol) => {
                    let all = sol.enumerate();
                    prop_assert_eq!(all.len(), brute.len());
                    for x in &all {
                        prop_assert_eq!(&m.mul_vec(x).unwrap(), &b);
                    }
                    prop_assert_eq!(sol.dimension(), n - m.rank());
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::NoSolution);
                    prop_assert!(brute.is_empty());
                }
            }
        }
    }
}
