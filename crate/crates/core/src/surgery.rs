//! Closed 3-manifolds as integral surgery on framed links.
//!
//! The linking matrix `Q` presents `H₁(M;ℤ) = coker Q`, which Poincaré
//! duality identifies with `H²(M;ℤ)`. Its Smith normal form gives the Betti
//! number, the torsion invariant factors, and `α(M) = dim τH₁ ⊗ ℤ₂`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlinalg::{signature, smith_normal_form, IntSymMatrix, SmithDecomposition, Z2Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryPresentation {
    pub name: String,
    pub q: IntSymMatrix,
}

impl SurgeryPresentation {
    pub fn new(name: impl Into<String>, q: IntSymMatrix) -> Self {
        SurgeryPresentation {
            name: name.into(),
            q,
        }
    }

    /// Number of link components.
    pub fn components(&self) -> usize {
        self.q.dim()
    }

    pub fn smith(&self) -> SmithDecomposition {
        smith_normal_form(self.q.as_matrix())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub betti1: usize,
    /// Invariant factors `≥ 2` of the torsion subgroup of H₁, as a divisibility chain.
    #[serde(with = "crate::cli::json_int::vec")]
    pub torsion_factors: Vec<BigInt>,
    pub alpha: usize,
    pub gamma2_rank: usize,
}

impl HomologyProfile {
    /// `|Γ₂(M)| = 2^α`.
    pub fn gamma2_order(&self) -> BigInt {
        BigInt::one() << self.alpha
    }

    /// `dim H¹(M;ℤ₂)`, which is also log₂ of the number of spin structures.
    pub fn h1_z2_dim(&self) -> usize {
        self.betti1 + self.alpha
    }

    pub fn spin_structure_count(&self) -> BigInt {
        BigInt::one() << self.h1_z2_dim()
    }

    pub fn zero(&self) -> Gamma2Element {
        Gamma2Element::zero(self.alpha)
    }
}

pub fn homology_profile(p: &SurgeryPresentation) -> HomologyProfile {
    profile_from_factors(&p.smith().invariant_factors)
}

pub(crate) fn profile_from_factors(factors: &[BigInt]) -> HomologyProfile {
    let betti1 = factors.iter().filter(|d| d.is_zero()).count();
    let torsion_factors: Vec<BigInt> = factors
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    let alpha = torsion_factors.iter().filter(|d| d.is_even()).count();
    HomologyProfile {
        betti1,
        torsion_factors,
        alpha,
        gamma2_rank: alpha,
    }
}

/// Signature of the 4-manifold obtained by attaching 2-handles along the link.
pub fn signature_of_trace(p: &SurgeryPresentation) -> i64 {
    signature(&p.q)
}

/// Whether every framing is even, i.e. the trace 4-manifold is spin.
pub fn is_even_presentation(p: &SurgeryPresentation) -> bool {
    p.q.diagonal().all(BigInt::is_even)
}

/// An element of `Γ₂(M) ⊂ H²(M;ℤ)`, in coordinates with respect to the
/// order-two elements `(dᵢ/2)·gᵢ` for the even torsion factors `dᵢ`, taken
/// in Smith order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gamma2Element(Z2Vector);

impl Gamma2Element {
    pub fn zero(alpha: usize) -> Self {
        Gamma2Element(Z2Vector::zeros(alpha))
    }

    pub fn from_coords(coords: Z2Vector) -> Self {
        Gamma2Element(coords)
    }

    pub fn coords(&self) -> &Z2Vector {
        &self.0
    }

    pub fn alpha(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Gamma2Element) -> Gamma2Element {
        Gamma2Element(self.0.xor(&other.0))
    }

    /// Parses a coordinate string of length `alpha`. The string `"0"` always
    /// denotes the identity, so the trivial group can be addressed too.
    pub fn parse(s: &str, alpha: usize) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero(alpha));
        }
        match Z2Vector::parse(s) {
            Some(v) if v.len() == alpha => Ok(Gamma2Element(v)),
            _ => Err(Error::InvalidCoords {
                coords: s.to_string(),
                alpha,
            }),
        }
    }
}

impl fmt::Display for Gamma2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("0")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Debug for Gamma2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Γ₂({self})")
    }
}

/// All `2^α` elements of Γ₂, the identity first.
pub fn gamma2_elements(h: &HomologyProfile) -> Vec<Gamma2Element> {
    assert!(h.alpha < 32, "Γ₂ of rank {} is too large to list", h.alpha);
    (0u64..1 << h.alpha)
        .map(|k| Gamma2Element(Z2Vector::from_index(h.alpha, k)))
        .collect()
}
