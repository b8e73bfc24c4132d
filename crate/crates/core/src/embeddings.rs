//! Which regular homotopy classes contain embeddings.
//!
//! An embedding with Seifert surface `W` has `i = 3(σ(W) − α)/2`. Any two
//! spin fillings inducing the same spin structure differ in signature by a
//! multiple of 16, which moves `i` by a multiple of 24; connected sum with
//! an embedded sphere does the same. So within a Wu component the embedding
//! classes are a union of residues mod 24, one for each base signature.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::invariants::RegHomotopyClass;
use crate::surgery::{gamma2_elements, Gamma2Element, HomologyProfile};

const PERIOD: i64 = 24;

/// Realisable Seifert signatures, grouped by the Wu coset they induce.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpinBoundarySignatures {
    pub per_coset: BTreeMap<Gamma2Element, BTreeSet<i64>>,
}

impl SpinBoundarySignatures {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, coset: Gamma2Element, signature: i64) {
        self.per_coset.entry(coset).or_default().insert(signature);
    }

    pub fn with(mut self, coset: Gamma2Element, signatures: impl IntoIterator<Item = i64>) -> Self {
        for s in signatures {
            self.insert(coset.clone(), s);
        }
        self
    }

    /// The S³ data: one coset, the standard ball of signature 0.
    pub fn sphere() -> Self {
        Self::new().with(Gamma2Element::zero(0), [0])
    }
}

/// Residues of `i` mod 24 realised by embeddings, per Wu coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingClassSet {
    pub offsets_mod_24: BTreeMap<Gamma2Element, BTreeSet<i64>>,
}

impl EmbeddingClassSet {
    /// If the offsets of a coset form the subgroup `gℤ/24`, returns `g`.
    pub fn progression_step(&self, coset: &Gamma2Element) -> Option<i64> {
        let offsets = self.offsets_mod_24.get(coset)?;
        let step = offsets
            .iter()
            .fold(PERIOD, |g, &o| num_integer::gcd(g, o));
        let expected: BTreeSet<i64> = (0..PERIOD).step_by(step as usize).collect();
        (*offsets == expected).then_some(step)
    }

    /// Human-readable description of the embedding set in one coset.
    pub fn describe(&self, coset: &Gamma2Element) -> Option<String> {
        let offsets = self.offsets_mod_24.get(coset)?;
        Some(match self.progression_step(coset) {
            Some(1) => "ℤ".to_string(),
            Some(step) => format!("{step}ℤ"),
            None => offsets
                .iter()
                .map(|o| format!("{o} + 24ℤ"))
                .collect::<Vec<_>>()
                .join(" ∪ "),
        })
    }
}

/// `3(s₀ − α)/2 mod 24`. Assumes `s₀ ≡ α (mod 2)`.
fn offset(signature: i64, alpha: usize) -> i64 {
    let alpha = alpha as i128;
    let num = 3 * (signature as i128 - alpha);
    ((num / 2).rem_euclid(PERIOD as i128)) as i64
}

pub fn embedding_classes(
    h: &HomologyProfile,
    sig: &SpinBoundarySignatures,
) -> Result<EmbeddingClassSet> {
    for (coset, sigs) in &sig.per_coset {
        if coset.alpha() != h.alpha {
            return Err(Error::InvalidCoords {
                coords: coset.to_string(),
                alpha: h.alpha,
            });
        }
        if let Some(&bad) = sigs
            .iter()
            .find(|&&s| (s - h.alpha as i64).rem_euclid(2) != 0)
        {
            return Err(Error::ParityViolation {
                coset: coset.to_string(),
                signature: bad,
                alpha: h.alpha,
            });
        }
    }
    let mut offsets_mod_24 = BTreeMap::new();
    for coset in gamma2_elements(h) {
        let sigs = sig
            .per_coset
            .get(&coset)
            .filter(|s| !s.is_empty())
            .ok_or_else(|| Error::CosetUncovered(coset.to_string()))?;
        let offsets = sigs.iter().map(|&s| offset(s, h.alpha)).collect();
        offsets_mod_24.insert(coset, offsets);
    }
    Ok(EmbeddingClassSet { offsets_mod_24 })
}

pub fn is_embedding_class(c: &RegHomotopyClass, e: &EmbeddingClassSet) -> Result<bool> {
    let offsets = e
        .offsets_mod_24
        .get(&c.wu)
        .ok_or_else(|| Error::CosetUncovered(c.wu.to_string()))?;
    Ok(offsets.contains(&c.i.rem_euclid(PERIOD)))
}

/// For 3-manifolds without 2-torsion in H², two embeddings are regularly
/// homotopic exactly when their Seifert surfaces have equal signature.
pub fn seifert_signature_criterion(s1: i64, s2: i64, h: &HomologyProfile) -> Result<bool> {
    if h.alpha > 0 {
        return Err(Error::HypothesisViolated(format!(
            "H² has 2-torsion (alpha = {})",
            h.alpha
        )));
    }
    Ok(s1 == s2)
}

/// Signatures of two spin fillings inducing the same spin structure agree
/// mod 16.
pub fn rohlin_compatible(s1: i64, s2: i64) -> bool {
    (s1 as i128 - s2 as i128).rem_euclid(16) == 0
}

/// Signature of `V ∪ −W` glued along a common boundary.
pub fn glued_signature(v: i64, w: i64) -> i64 {
    v - w
}
