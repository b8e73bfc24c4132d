//! Arithmetic identities satisfied by generic maps of 4-manifolds.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{check_component_sum, ImmersionDoubleData, SeifertFillingR5, SeifertFillingR6};

/// A generic map of a closed oriented 4-manifold into ℝ⁵.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedMapRecordR5 {
    pub sigma: i64,
    pub cusps_algebraic: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cusps_per_component: Option<Vec<i64>>,
    #[serde(default)]
    pub is_spin: bool,
}

impl ClosedMapRecordR5 {
    pub fn new(sigma: i64, cusps_algebraic: i64) -> Self {
        ClosedMapRecordR5 {
            sigma,
            cusps_algebraic,
            cusps_per_component: None,
            is_spin: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_component_sum(self.cusps_algebraic, self.cusps_per_component.as_deref())
    }
}

/// A generic map of a closed oriented 4-manifold into ℝ⁶.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedMapRecordR6 {
    pub sigma: i64,
    pub triple_points: i64,
    pub singular_linking: i64,
}

/// Cusp counts on the two sides of a separating 3-manifold inside a closed
/// spin 4-manifold. The geometric hypotheses are carried as declared flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRecord {
    pub part_cusps: (i64, i64),
    #[serde(default = "yes")]
    pub ambient_spin: bool,
    #[serde(default = "yes")]
    pub null_homologous: bool,
    #[serde(default = "yes")]
    pub disjoint_from_double_points: bool,
}

fn yes() -> bool {
    true
}

impl PartitionRecord {
    pub fn new(a: i64, b: i64) -> Self {
        PartitionRecord {
            part_cusps: (a, b),
            ambient_spin: true,
            null_homologous: true,
            disjoint_from_double_points: true,
        }
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.ambient_spin && self.null_homologous && self.disjoint_from_double_points
    }

    pub fn total(&self) -> i64 {
        self.part_cusps.0 + self.part_cusps.1
    }
}

/// `#Σ¹¹ + 3σ = 0` for closed 4-manifolds mapped to ℝ⁵.
pub fn check_closed_r5(r: &ClosedMapRecordR5) -> bool {
    r.cusps_algebraic as i128 + 3 * r.sigma as i128 == 0
}

/// `σ − l + t = 0` for closed 4-manifolds mapped to ℝ⁶.
pub fn check_closed_r6(r: &ClosedMapRecordR6) -> bool {
    r.sigma as i128 - r.singular_linking as i128 + r.triple_points as i128 == 0
}

/// `#Σ¹¹ ≡ L (mod 3)`.
pub fn check_cusp_residue(filling: &SeifertFillingR5, d: &ImmersionDoubleData) -> bool {
    (filling.cusps_algebraic as i128 - d.big_l as i128).rem_euclid(3) == 0
}

/// Every singular surface component of a spin 4-manifold carries an even
/// number of cusps.
pub fn check_spin_even_components(r: &ClosedMapRecordR5) -> Result<bool> {
    if !r.is_spin {
        return Err(Error::HypothesisViolated("record is not declared spin".into()));
    }
    let parts = r
        .cusps_per_component
        .as_ref()
        .ok_or_else(|| Error::MissingData("cusps_per_component".into()))?;
    Ok(parts.iter().all(|c| c % 2 == 0))
}

/// Both sides of the partition carry a multiple of 6 cusps.
pub fn check_partition_divisibility(p: &PartitionRecord) -> bool {
    p.part_cusps.0 % 6 == 0 && p.part_cusps.1 % 6 == 0
}

/// Regularly homotopic embeddings have Seifert surfaces of equal signature.
pub fn check_equal_signatures_if_reg_homotopic(s1: i64, s2: i64) -> bool {
    s1 == s2
}

/// The closed record obtained by gluing two R5 fillings of the same
/// immersion along their common boundary, `W₁ ∪ −W₂`.
pub fn glue_r5(a: &SeifertFillingR5, b: &SeifertFillingR5) -> ClosedMapRecordR5 {
    ClosedMapRecordR5::new(a.sigma - b.sigma, a.cusps_algebraic - b.cusps_algebraic)
}

/// As [`glue_r5`] for half-space fillings.
pub fn glue_r6(a: &SeifertFillingR6, b: &SeifertFillingR6) -> ClosedMapRecordR6 {
    ClosedMapRecordR6 {
        sigma: a.sigma - b.sigma,
        triple_points: a.triple_points - b.triple_points,
        singular_linking: a.singular_linking - b.singular_linking,
    }
}
