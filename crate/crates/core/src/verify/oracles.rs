//! Independent cross-checks for the exact linear algebra, run as
//! randomised sweeps.
//!
//! * Smith normal form is compared against invariant factors computed from
//!   determinantal divisors (`Dₖ = gcd` of all k×k minors, `sₖ = Dₖ/Dₖ₋₁`).
//! * The congruence-diagonalisation signature is compared against a count
//!   of positive and negative roots of the characteristic polynomial, which
//!   is exact by Descartes' rule because a symmetric matrix has only real
//!   eigenvalues.
//! * The parity lemma is checked directly: an even symmetric nonsingular
//!   matrix has size congruent mod 2 to the number of even invariant
//!   factors of its cokernel.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::intlinalg::{
    bareiss_determinant, signature, smith_normal_form, IntMatrix, IntSymMatrix,
};
use crate::surgery::profile_from_factors;
use crate::sweep::{run_trials, Execution};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleFailure {
    pub trial: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub name: String,
    pub seed: u64,
    pub trials: u64,
    pub passed: u64,
    pub failures: Vec<OracleFailure>,
}

impl OracleReport {
    fn from_failures(name: &str, seed: u64, trials: u64, failures: Vec<(u64, String)>) -> Self {
        OracleReport {
            name: name.to_string(),
            seed,
            trials,
            passed: trials - failures.len() as u64,
            failures: failures
                .into_iter()
                .map(|(trial, detail)| OracleFailure { trial, detail })
                .collect(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.ok() { "✓" } else { "✗" };
        write!(f, "{}: {}/{} {mark}", self.name, self.passed, self.trials)?;
        for fail in self.failures.iter().take(5) {
            write!(f, "\n  trial {}: {}", fail.trial, fail.detail)?;
        }
        Ok(())
    }
}

/// Sweep parameters shared by the oracle runs.
#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub trials: u64,
    pub max_dim: usize,
    pub seed: u64,
    pub exec: Execution,
}

impl SweepConfig {
    pub fn new(trials: u64, max_dim: usize, seed: u64) -> Self {
        SweepConfig {
            trials,
            max_dim,
            seed,
            exec: Execution::default(),
        }
    }

    pub fn with_exec(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }
}

// ---------------------------------------------------------------------------
// random instances

/// Random symmetric matrix of size `1..=max_dim`, entries uniform in `[-5, 5]`.
pub fn random_symmetric<R: Rng>(rng: &mut R, max_dim: usize) -> IntSymMatrix {
    let n = rng.random_range(1..=max_dim.max(1));
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = BigInt::from(rng.random_range(-5i64..=5));
            m[(j, i)] = v.clone();
            m[(i, j)] = v;
        }
    }
    IntSymMatrix::new(m).expect("constructed symmetric")
}

/// Random even symmetric nonsingular matrix: entries in `[-5, 5]`, diagonal
/// drawn from the even values of that range, redrawn until `det ≠ 0`.
pub fn random_even_nonsingular<R: Rng>(rng: &mut R, max_dim: usize) -> IntSymMatrix {
    loop {
        let n = rng.random_range(1..=max_dim.max(1));
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(2 * rng.random_range(-2i64..=2));
            for j in i + 1..n {
                let v = BigInt::from(rng.random_range(-5i64..=5));
                m[(j, i)] = v.clone();
                m[(i, j)] = v;
            }
        }
        if !bareiss_determinant(m.to_rows()).is_zero() {
            return IntSymMatrix::new(m).expect("constructed symmetric");
        }
    }
}

/// Random (possibly rectangular) matrix with both sides in `1..=max_dim`
/// and entries uniform in `[-9, 9]`.
pub fn random_matrix<R: Rng>(rng: &mut R, max_dim: usize) -> IntMatrix {
    let rows = rng.random_range(1..=max_dim.max(1));
    let cols = rng.random_range(1..=max_dim.max(1));
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.random_range(-9i64..=9)))
}

// ---------------------------------------------------------------------------
// independent reference computations

/// Invariant factors from determinantal divisors. Exponential in the size;
/// meant for matrices up to about 7×7.
pub fn invariant_factors_by_minors(a: &IntMatrix) -> Vec<BigInt> {
    let (m, n) = (a.rows(), a.cols());
    let r = m.min(n);
    let mut factors = Vec::with_capacity(r);
    let mut prev = BigInt::one();
    for k in 1..=r {
        let mut g = BigInt::zero();
        'minors: for rows in (0..m).combinations(k) {
            for cols in (0..n).combinations(k) {
                let minor = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| a[(i, j)].clone()).collect())
                    .collect();
                g = g.gcd(&bareiss_determinant(minor));
                if g.is_one() {
                    break 'minors;
                }
            }
        }
        if g.is_zero() {
            factors.resize(r, BigInt::zero());
            return factors;
        }
        factors.push(&g / &prev);
        prev = g;
    }
    factors
}

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier, lowest
/// degree first. All divisions are exact.
pub fn characteristic_polynomial(a: &IntMatrix) -> Vec<BigInt> {
    let n = a.rows();
    assert!(a.is_square());
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = IntMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = a.mul(&m).expect("square");
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        let am = a.mul(&next).expect("square");
        let trace: BigInt = (0..n).map(|i| am[(i, i)].clone()).sum();
        coeffs[n - k] = -(trace / BigInt::from(k));
        m = next;
    }
    coeffs
}

fn sign_changes<'a>(coeffs: impl Iterator<Item = &'a BigInt>) -> usize {
    let signs: Vec<bool> = coeffs.filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Signature from root signs of the characteristic polynomial.
pub fn signature_by_root_signs(a: &IntSymMatrix) -> i64 {
    let p = characteristic_polynomial(a.as_matrix());
    let positive = sign_changes(p.iter());
    let flipped: Vec<BigInt> = p
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    let negative = sign_changes(flipped.iter());
    positive as i64 - negative as i64
}

// ---------------------------------------------------------------------------
// sweeps

/// `(size, α)` for an even symmetric nonsingular matrix, or a description
/// of the counterexample when the sizes disagree mod 2.
pub fn parity_lemma_holds(q: &IntSymMatrix) -> Result<(usize, usize), String> {
    let h = profile_from_factors(&smith_normal_form(q.as_matrix()).invariant_factors);
    let size = q.dim();
    if (size + h.alpha).is_multiple_of(2) {
        Ok((size, h.alpha))
    } else {
        Err(format!("{:?}: size {size}, alpha {}", q.as_matrix(), h.alpha))
    }
}

pub fn oracle_parity_lemma(cfg: SweepConfig) -> OracleReport {
    let failures = run_trials(cfg.trials, cfg.seed, cfg.exec, |rng| {
        let q = random_even_nonsingular(rng, cfg.max_dim);
        parity_lemma_holds(&q).err()
    });
    OracleReport::from_failures("parity lemma", cfg.seed, cfg.trials, failures)
}

pub fn oracle_snf(cfg: SweepConfig) -> OracleReport {
    let failures = run_trials(cfg.trials, cfg.seed, cfg.exec, |rng| {
        let a = random_matrix(rng, cfg.max_dim);
        let d = smith_normal_form(&a);
        let expected = invariant_factors_by_minors(&a);
        let reconstructs = d
            .u
            .mul(&a)
            .and_then(|ua| ua.mul(&d.v))
            .is_ok_and(|s| s == d.s);
        if d.invariant_factors != expected || !reconstructs {
            Some(format!(
                "{a:?}: smith {:?}, minors {:?}, U·A·V = S: {reconstructs}",
                d.invariant_factors, expected
            ))
        } else {
            None
        }
    });
    OracleReport::from_failures("SNF", cfg.seed, cfg.trials, failures)
}

pub fn oracle_signature(cfg: SweepConfig) -> OracleReport {
    let failures = run_trials(cfg.trials, cfg.seed, cfg.exec, |rng| {
        let q = random_symmetric(rng, cfg.max_dim);
        let (got, expected) = (signature(&q), signature_by_root_signs(&q));
        (got != expected).then(|| {
            format!(
                "{:?}: congruence {got}, root signs {expected}",
                q.as_matrix()
            )
        })
    });
    OracleReport::from_failures("signature", cfg.seed, cfg.trials, failures)
}
