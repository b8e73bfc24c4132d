//! Report types. Each has a plain-text rendering (`Display`) and a JSON
//! form that parses back to the same value.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::verify::{CorollaryReport, OracleReport};

use super::json_int;

fn mark(ok: bool) -> &'static str {
    if ok {
        "✓"
    } else {
        "✗"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub name: String,
    pub link_components: usize,
    pub betti1: usize,
    #[serde(with = "json_int::vec")]
    pub torsion_factors: Vec<BigInt>,
    pub alpha: usize,
    #[serde(with = "json_int")]
    pub gamma2_order: BigInt,
    #[serde(with = "json_int")]
    pub spin_structures: BigInt,
    pub trace_signature: i64,
    pub even_presentation: bool,
    /// Wu components of `Imm[M³,ℝ⁵]₀`, one per element of Γ₂.
    pub wu_components: Vec<String>,
}

impl AnalyzeReport {
    pub fn homology_string(&self) -> String {
        let mut parts = Vec::new();
        match self.betti1 {
            0 => {}
            1 => parts.push("ℤ".to_string()),
            b => parts.push(format!("ℤ^{b}")),
        }
        parts.extend(self.torsion_factors.iter().map(|d| format!("ℤ/{d}")));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ⊕ ")
        }
    }

    /// One-line classification statement.
    pub fn classification(&self) -> String {
        let gamma = match self.alpha {
            0 => "Γ₂ = 0".to_string(),
            _ => format!("|Γ₂| = {}", self.gamma2_order),
        };
        let classes = match self.alpha {
            0 => "ℤ".to_string(),
            1 => "ℤ₂ × ℤ".to_string(),
            a => format!("(ℤ₂)^{a} × ℤ"),
        };
        format!(
            "{gamma}, classes ≅ {classes}, spin structures: {}",
            self.spin_structures
        )
    }
}

impl fmt::Display for AnalyzeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "manifold: {}", self.name)?;
        writeln!(f, "link components: {}", self.link_components)?;
        writeln!(f, "H₁ = {}", self.homology_string())?;
        writeln!(f, "β₁ = {}", self.betti1)?;
        let torsion: Vec<String> = self.torsion_factors.iter().map(|d| d.to_string()).collect();
        writeln!(f, "torsion invariant factors: [{}]", torsion.join(", "))?;
        writeln!(f, "α = {}", self.alpha)?;
        writeln!(f, "|Γ₂| = {}", self.gamma2_order)?;
        writeln!(f, "spin structures: {}", self.spin_structures)?;
        writeln!(
            f,
            "trace signature: {} ({})",
            self.trace_signature,
            if self.even_presentation { "even framings" } else { "odd framing present" }
        )?;
        writeln!(f, "{}", self.classification())?;
        write!(
            f,
            "Imm[M³,ℝ⁵]₀ ≅ Γ₂ × ℤ; Wu components: {}",
            self.wu_components.join(", ")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantValue {
    pub id: String,
    /// `i_a` or `i_b`.
    pub kind: String,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspResidue {
    pub id: String,
    pub residue_mod_3: i64,
    /// Whether the residue agrees with `L mod 3`, when `L` is known.
    pub matches_big_l: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub manifold: String,
    pub alpha: usize,
    pub values: Vec<InvariantValue>,
    /// All computed values agree.
    pub consistent: bool,
    pub i: Option<i64>,
    pub cusp_residues: Vec<CuspResidue>,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.consistent && self.cusp_residues.iter().all(|r| r.matches_big_l != Some(false))
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "manifold: {} (α = {})", self.manifold, self.alpha)?;
        for v in &self.values {
            writeln!(f, "{} [{}] = {}", v.kind, v.id, v.value)?;
        }
        for r in &self.cusp_residues {
            let verdict = match r.matches_big_l {
                Some(true) => " ≡ L (mod 3) ✓",
                Some(false) => " ≢ L (mod 3) ✗",
                None => "",
            };
            writeln!(f, "#Σ¹¹ [{}] ≡ {} (mod 3){verdict}", r.id, r.residue_mod_3)?;
        }
        match self.i {
            Some(i) if self.consistent => write!(f, "i = {i} (i_a = i_b {})", mark(true)),
            _ if self.consistent => write!(f, "no values"),
            _ => write!(f, "inconsistent: values disagree {}", mark(false)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActReport {
    pub manifold: String,
    pub wu: String,
    pub i_before: i64,
    pub omega: i64,
    pub i_after: i64,
    pub embedding_class: Option<bool>,
}

impl fmt::Display for ActReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "({}, {}) ♯ {} = ({}, {})",
            self.wu, self.i_before, self.omega, self.wu, self.i_after
        )?;
        match self.embedding_class {
            Some(true) => write!(f, "embedding class: yes"),
            Some(false) => write!(f, "embedding class: no"),
            None => write!(f, "embedding class: unknown (no spin boundary signatures)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetEmbeddings {
    pub coset: String,
    pub base_signatures: Vec<i64>,
    pub offsets_mod_24: Vec<i64>,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingsReport {
    pub manifold: String,
    pub alpha: usize,
    pub cosets: Vec<CosetEmbeddings>,
}

impl fmt::Display for EmbeddingsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "manifold: {} (α = {})", self.manifold, self.alpha)?;
        for c in &self.cosets {
            let sigs: Vec<String> = c.base_signatures.iter().map(|s| s.to_string()).collect();
            write!(
                f,
                "\nWu {}: signatures [{}] → embeddings i ∈ {}",
                c.coset,
                sigs.join(", "),
                c.description
            )?;
        }
        Ok(())
    }
}

/// Outcome of a single validator; `passed = None` means it was skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: Option<bool>,
    pub detail: String,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckLine {
            name: name.into(),
            passed: Some(passed),
            detail: detail.into(),
        }
    }

    pub fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckLine {
            name: name.into(),
            passed: None,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.passed {
            Some(ok) => mark(ok),
            None => "skipped",
        };
        write!(f, "{}: {} {tag}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    #[serde(default)]
    pub checks: Vec<CheckLine>,
    #[serde(default)]
    pub corollaries: Vec<CorollaryReport>,
    #[serde(default)]
    pub oracles: Vec<OracleReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed != Some(false))
            && self.corollaries.iter().all(|c| c.passed)
            && self.oracles.iter().all(OracleReport::ok)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lines: Vec<String> = self.checks.iter().map(ToString::to_string).collect();
        lines.extend(self.corollaries.iter().map(ToString::to_string));
        lines.extend(self.oracles.iter().map(ToString::to_string));
        lines.push(format!(
            "overall: {}",
            if self.passed() { "pass" } else { "FAIL" }
        ));
        write!(f, "{}", lines.join("\n"))
    }
}
