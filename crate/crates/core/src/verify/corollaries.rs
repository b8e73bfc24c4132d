//! Built-in reproductions of the consequences for S³ and T³.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embeddings::{embedding_classes, is_embedding_class, SpinBoundarySignatures};
use crate::error::Result;
use crate::fixtures;
use crate::invariants::{
    connected_sum_act, i_a, smale_via_seifert_r5, solve_for_summand, RegHomotopyClass,
    SeifertFillingR5, SmaleClass,
};
use crate::surgery::{homology_profile, signature_of_trace, SurgeryPresentation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub name: String,
    pub summary: String,
    pub passed: bool,
    pub detail: Vec<String>,
}

impl fmt::Display for CorollaryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "✓" } else { "✗" };
        write!(f, "{}: {} {mark}", self.name, self.summary)?;
        for line in &self.detail {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

/// Cusp-free fillings of S³: signatures in 16ℤ give exactly 24ℤ, and
/// signatures in 16ℤ + 8 never land in 24ℤ.
pub fn hughes_melvin_sweep(bound: i64) -> Result<CorollaryReport> {
    let bound = bound - bound.rem_euclid(8);
    let mut image = BTreeSet::new();
    let mut detail = Vec::new();
    let mut passed = true;
    for sigma in (-bound..=bound).step_by(8) {
        let omega = smale_via_seifert_r5(&SeifertFillingR5::new(sigma, 0))?.omega;
        if sigma.rem_euclid(16) == 0 {
            image.insert(omega);
            if omega.rem_euclid(24) != 0 {
                passed = false;
                detail.push(format!("σ = {sigma} gives Ω = {omega} ∉ 24ℤ"));
            }
        } else if omega.rem_euclid(24) == 0 {
            passed = false;
            detail.push(format!("σ = {sigma} ∈ 16ℤ+8 gives Ω = {omega} ∈ 24ℤ"));
        }
    }
    let span = bound / 16;
    let expected: BTreeSet<i64> = (-span..=span).map(|j| 24 * j).collect();
    if image != expected {
        passed = false;
        detail.push(format!("image {image:?} is not 24ℤ ∩ [{}, {}]", -24 * span, 24 * span));
    }
    Ok(CorollaryReport {
        name: "embedded spheres".into(),
        summary: format!("σ ∈ 16ℤ ∩ [{}, {bound}] ↦ Ω ∈ 24ℤ, σ ∈ 16ℤ+8 ↦ Ω ∉ 24ℤ", -bound),
        passed,
        detail,
    })
}

struct T3Data {
    t3: crate::surgery::HomologyProfile,
    i_f0: i64,
    i_f8: i64,
    sigma_f8: i64,
}

fn t3_data() -> Result<T3Data> {
    let t3 = homology_profile(&fixtures::t3());
    let sigma_f8 = signature_of_trace(&SurgeryPresentation::new("W_F8", fixtures::e8_form()));
    Ok(T3Data {
        i_f0: i_a(&SeifertFillingR5::new(0, 0), &t3)?,
        i_f8: i_a(&SeifertFillingR5::new(sigma_f8, 0), &t3)?,
        sigma_f8,
        t3,
    })
}

/// Two embeddings of T³ related by a sphere summand that is not itself an
/// embedding.
pub fn t3_summand_not_embedding() -> Result<CorollaryReport> {
    let d = t3_data()?;
    let zero = d.t3.zero();
    let f0 = RegHomotopyClass::new(zero.clone(), d.i_f0);
    let f8 = RegHomotopyClass::new(zero, d.i_f8);
    let h = solve_for_summand(&f0, &f8)?;

    let s3 = homology_profile(&fixtures::s3());
    let sphere_embeddings = embedding_classes(&s3, &SpinBoundarySignatures::sphere())?;
    let h_class = RegHomotopyClass::new(s3.zero(), h.omega);
    let h_embeds = is_embedding_class(&h_class, &sphere_embeddings)?;

    let chain = format!(
        "{} = 3/2·{} = i(F₈) = i(F₀ ♯ h) = i(F₀) + Ω(h) = {} + Ω(h), so Ω(h) = {} ≠ 24k",
        d.i_f8, d.sigma_f8, d.i_f0, h.omega
    );
    let passed = d.sigma_f8 == 8 && d.i_f8 == 12 && d.i_f0 == 0 && h.omega == 12 && !h_embeds;
    Ok(CorollaryReport {
        name: "T³ summand".into(),
        summary: format!("Ω(h)={} ∉ 24ℤ", h.omega),
        passed,
        detail: vec![chain],
    })
}

/// The non-embeddable sphere with `Ω = 12` turns every embedding of T³ into
/// an embedding again: `i(E ♯ h) = 12(k+1)` for `σ(W_E) = 8k`, matched by
/// `F₈ ♯ eₙ` when `k` is even and `F₀ ♯ eₙ` when `k` is odd.
pub fn t3_absorbs_sphere(k_range: std::ops::RangeInclusive<i64>) -> Result<CorollaryReport> {
    let d = t3_data()?;
    let zero = d.t3.zero();
    let t3_embeddings = embedding_classes(&d.t3, &fixtures::t3_spin_boundary_signatures())?;
    let s3 = homology_profile(&fixtures::s3());
    let sphere_embeddings = embedding_classes(&s3, &SpinBoundarySignatures::sphere())?;

    let h = SmaleClass::new(12);
    let mut passed = !is_embedding_class(&RegHomotopyClass::new(s3.zero(), h.omega), &sphere_embeddings)?;
    let mut detail = Vec::new();
    let (lo, hi) = (*k_range.start(), *k_range.end());
    for k in k_range {
        let i_e = i_a(&SeifertFillingR5::new(8 * k, 0), &d.t3)?;
        let e_sharp_h = connected_sum_act(&RegHomotopyClass::new(zero.clone(), i_e), h)?;

        let (n, base, base_name) = if k % 2 == 0 {
            (k / 2, d.i_f8, "F₈")
        } else {
            ((k + 1) / 2, d.i_f0, "F₀")
        };
        let e_n = smale_via_seifert_r5(&SeifertFillingR5::new(16 * n, 0))?;
        let e_n_embeds =
            is_embedding_class(&RegHomotopyClass::new(s3.zero(), e_n.omega), &sphere_embeddings)?;
        let candidate = connected_sum_act(&RegHomotopyClass::new(zero.clone(), base), e_n)?;

        let ok = e_sharp_h.i == 12 * (k + 1)
            && candidate == e_sharp_h
            && e_n_embeds
            && is_embedding_class(&candidate, &t3_embeddings)?;
        if !ok {
            passed = false;
        }
        detail.push(format!(
            "k = {k}: i(E ♯ h) = {} = i({base_name} ♯ e_{n}) {}",
            e_sharp_h.i,
            if ok { "✓" } else { "✗" }
        ));
    }
    Ok(CorollaryReport {
        name: "T³ absorption".into(),
        summary: format!("all k in [{lo},{hi}] matched"),
        passed,
        detail,
    })
}

/// All built-in reproductions.
pub fn run_all() -> Result<Vec<CorollaryReport>> {
    Ok(vec![
        hughes_melvin_sweep(160)?,
        t3_summand_not_embedding()?,
        t3_absorbs_sphere(-10..=10)?,
    ])
}
