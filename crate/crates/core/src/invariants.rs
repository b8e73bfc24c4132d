//! Smale invariant formulae and the integer invariant `i` of immersions
//! `M³ → ℝ⁵` with trivial normal bundle.
//!
//! Seifert data is plain bookkeeping: signatures, algebraic cusp and triple
//! point counts and linking numbers supplied by the caller. Every formula
//! here halves an integer numerator; an odd numerator means the data cannot
//! come from a genuine filling and is reported as [`Error::Parity`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surgery::{Gamma2Element, HomologyProfile};

/// A compact oriented 4-manifold bounding the immersion, mapped generically
/// to ℝ⁵.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertFillingR5 {
    pub sigma: i64,
    pub cusps_algebraic: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cusps_per_component: Option<Vec<i64>>,
}

impl SeifertFillingR5 {
    pub fn new(sigma: i64, cusps_algebraic: i64) -> Self {
        SeifertFillingR5 {
            sigma,
            cusps_algebraic,
            cusps_per_component: None,
        }
    }

    pub fn with_components(sigma: i64, cusps: Vec<i64>) -> Self {
        SeifertFillingR5 {
            sigma,
            cusps_algebraic: cusps.iter().sum(),
            cusps_per_component: Some(cusps),
        }
    }

    /// Per-component counts, when present, must add up to the total.
    pub fn validate(&self) -> Result<()> {
        check_component_sum(self.cusps_algebraic, self.cusps_per_component.as_deref())
    }
}

pub(crate) fn check_component_sum(total: i64, parts: Option<&[i64]>) -> Result<()> {
    if let Some(parts) = parts {
        let sum: i128 = parts.iter().map(|&c| c as i128).sum();
        if sum != total as i128 {
            return Err(Error::HypothesisViolated(format!(
                "per-component cusp counts sum to {sum}, but the algebraic total is {total}"
            )));
        }
    }
    Ok(())
}

/// A bounding 4-manifold mapped generically to the half space ℝ⁶₊.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertFillingR6 {
    pub sigma: i64,
    pub triple_points: i64,
    pub singular_linking: i64,
}

/// Linking number `L(F)` of the image with its pushed-off double curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImmersionDoubleData {
    pub big_l: i64,
}

/// An element of `Imm[S³, ℝ⁵] ≅ π₃(V₅,₃) ≅ ℤ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SmaleClass {
    pub omega: i64,
}

impl SmaleClass {
    pub fn new(omega: i64) -> Self {
        SmaleClass { omega }
    }

    /// Connected sum of two immersions of the sphere.
    pub fn sum(self, other: SmaleClass) -> Result<SmaleClass> {
        self.omega
            .checked_add(other.omega)
            .map(SmaleClass::new)
            .ok_or(Error::Overflow("Smale invariant of a connected sum"))
    }
}

/// Complete regular homotopy invariant `(c, i) ∈ Γ₂(M) × ℤ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegHomotopyClass {
    pub wu: Gamma2Element,
    pub i: i64,
}

impl RegHomotopyClass {
    pub fn new(wu: Gamma2Element, i: i64) -> Self {
        RegHomotopyClass { wu, i }
    }
}

impl std::fmt::Display for RegHomotopyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.wu, self.i)
    }
}

/// `numerator / 2` when exact.
fn half(numerator: i128, what: &str) -> Result<i64> {
    if numerator % 2 != 0 {
        return Err(Error::Parity {
            what: what.to_string(),
            numerator,
        });
    }
    i64::try_from(numerator / 2).map_err(|_| Error::Overflow("half-integer formula"))
}

fn wide(x: i64) -> i128 {
    x as i128
}

/// `Ω = (3σ + #Σ¹¹) / 2`.
pub fn smale_via_seifert_r5(s: &SeifertFillingR5) -> Result<SmaleClass> {
    let num = 3 * wide(s.sigma) + wide(s.cusps_algebraic);
    half(num, "Smale invariant from an R5 filling").map(SmaleClass::new)
}

/// `Ω = (3σ + 3t − 3l + L) / 2`.
pub fn smale_via_seifert_r6(s: &SeifertFillingR6, d: &ImmersionDoubleData) -> Result<SmaleClass> {
    let num = 3 * (wide(s.sigma) + wide(s.triple_points) - wide(s.singular_linking))
        + wide(d.big_l);
    half(num, "Smale invariant from an R6 filling").map(SmaleClass::new)
}

/// `i_a = 3/2·(σ − α) + #Σ¹¹/2`.
pub fn i_a(s: &SeifertFillingR5, h: &HomologyProfile) -> Result<i64> {
    let alpha = wide(h.alpha as i64);
    let num = 3 * (wide(s.sigma) - alpha) + wide(s.cusps_algebraic);
    half(num, "i_a")
}

/// `i_b = 3/2·(σ − α) + (3t − 3l + L)/2`.
pub fn i_b(s: &SeifertFillingR6, d: &ImmersionDoubleData, h: &HomologyProfile) -> Result<i64> {
    let alpha = wide(h.alpha as i64);
    let num = 3 * (wide(s.sigma) - alpha + wide(s.triple_points) - wide(s.singular_linking))
        + wide(d.big_l);
    half(num, "i_b")
}

/// Whether an R5 and an R6 filling can bound the same immersion, i.e.
/// `i_a = i_b`. For equal signatures this reads `#Σ¹¹ = 3t − 3l + L`.
pub fn fillings_coincide(
    r5: &SeifertFillingR5,
    r6: &SeifertFillingR6,
    d: &ImmersionDoubleData,
) -> bool {
    let lhs = 3 * wide(r5.sigma) + wide(r5.cusps_algebraic);
    let rhs = 3 * (wide(r6.sigma) + wide(r6.triple_points) - wide(r6.singular_linking))
        + wide(d.big_l);
    lhs == rhs
}

/// `(c, i) ♯ Ω = (c, i + Ω)`.
pub fn connected_sum_act(f: &RegHomotopyClass, g: SmaleClass) -> Result<RegHomotopyClass> {
    let i = f
        .i
        .checked_add(g.omega)
        .ok_or(Error::Overflow("connected sum action"))?;
    Ok(RegHomotopyClass::new(f.wu.clone(), i))
}

/// The unique sphere immersion `h` with `f0 ♯ h ∼ target`.
pub fn solve_for_summand(f0: &RegHomotopyClass, target: &RegHomotopyClass) -> Result<SmaleClass> {
    if f0.wu != target.wu {
        return Err(Error::WuMismatch {
            source_wu: f0.wu.to_string(),
            target_wu: target.wu.to_string(),
        });
    }
    target
        .i
        .checked_sub(f0.i)
        .map(SmaleClass::new)
        .ok_or(Error::Overflow("summand"))
}

/// Change of `L` along a regular homotopy: `L_before = L_after + 3·t(track)`.
pub fn track_correction(l_before: i64, l_after: i64, triple_points_of_track: i64) -> bool {
    wide(l_before) == wide(l_after) + 3 * wide(triple_points_of_track)
}
