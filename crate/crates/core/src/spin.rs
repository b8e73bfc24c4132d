//! Spin structures as characteristic sublinks, and the Wu coset map.
//!
//! A spin structure on the surgered manifold is a sublink `c ∈ ℤ₂ⁿ` with
//! `Q·c ≡ diag(Q) (mod 2)`. Differences of two such vectors lie in
//! `ker(Q mod 2) = Hom(H₁(M), ℤ₂) = H¹(M;ℤ₂)`. Restricting a homomorphism to
//! the even-order cyclic summands of `coker Q` kills exactly the reductions
//! of integral classes, which realises `H¹(M;ℤ₂)/ρ(H¹(M;ℤ)) ≅ Γ₂(M)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::intlinalg::{solve_mod2, Mod2Solution, Z2Matrix, Z2Vector};
use crate::surgery::{Gamma2Element, SurgeryPresentation};

/// Characteristic sublink indicator, one bit per link component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinStructure(pub Z2Vector);

impl SpinStructure {
    pub fn parse(s: &str) -> Option<Self> {
        Z2Vector::parse(s).map(SpinStructure)
    }
}

impl std::fmt::Display for SpinStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Value of the Wu invariant determined by a pair of spin structures.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WuCoset {
    pub value: Gamma2Element,
}

fn characteristic_system(p: &SurgeryPresentation) -> (Z2Matrix, Z2Vector) {
    let q = Z2Matrix::reduce(p.q.as_matrix());
    let diag = Z2Vector::from_bits(p.q.diagonal().map(BigInt::is_odd));
    (q, diag)
}

/// Particular characteristic sublink plus a basis of `ker(Q mod 2)`.
pub fn spin_solution_space(p: &SurgeryPresentation) -> Mod2Solution {
    let (q, diag) = characteristic_system(p);
    // The diagonal of a symmetric form over ℤ₂ is always in its image
    // (x ↦ xᵀQx is linear mod 2), so this cannot fail.
    solve_mod2(&q, &diag).expect("characteristic equation is always solvable")
}

pub fn spin_structures(p: &SurgeryPresentation) -> Vec<SpinStructure> {
    spin_solution_space(p)
        .enumerate()
        .into_iter()
        .map(SpinStructure)
        .collect()
}

pub fn is_spin_structure(p: &SurgeryPresentation, s: &SpinStructure) -> bool {
    let (q, diag) = characteristic_system(p);
    q.mul_vec(&s.0).is_ok_and(|v| v == diag)
}

/// The homomorphism `ker(Q mod 2) → Γ₂` in Smith coordinates.
///
/// Column `i` of `U⁻¹` represents the generator `gᵢ` of `coker Q`, so a
/// difference vector `d` evaluates on `gᵢ` as `d·U⁻¹[:, i] mod 2`. The
/// coordinates kept are those of the even torsion factors.
#[derive(Clone, Debug)]
pub struct WuMap {
    alpha: usize,
    generators: Vec<Z2Vector>,
}

impl WuMap {
    pub fn new(p: &SurgeryPresentation) -> Self {
        let snf = p.smith();
        let n = p.components();
        let generators: Vec<Z2Vector> = snf
            .invariant_factors
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero() && d.is_even())
            .map(|(i, _)| Z2Vector::from_bits((0..n).map(|r| snf.u_inv[(r, i)].is_odd())))
            .collect();
        WuMap {
            alpha: generators.len(),
            generators,
        }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// Image of a class of `H¹(M;ℤ₂)` given as a vector in `ker(Q mod 2)`.
    pub fn apply(&self, difference: &Z2Vector) -> Gamma2Element {
        Gamma2Element::from_coords(Z2Vector::from_bits(
            self.generators.iter().map(|g| g.dot(difference)),
        ))
    }
}

pub fn wu_coset_of_difference(
    p: &SurgeryPresentation,
    s1: &SpinStructure,
    s2: &SpinStructure,
) -> Result<WuCoset> {
    for s in [s1, s2] {
        if !is_spin_structure(p, s) {
            return Err(Error::InvalidSpinStructure(s.to_string()));
        }
    }
    Ok(WuCoset {
        value: WuMap::new(p).apply(&s1.0.xor(&s2.0)),
    })
}
