use std::path::Path;

use num_integer::Integer;

use crate::embeddings::{embedding_classes, is_embedding_class};
use crate::error::{Error, Result};
use crate::invariants::{
    connected_sum_act, fillings_coincide, i_a, i_b, track_correction, RegHomotopyClass,
    SmaleClass,
};
use crate::spin::spin_structures;
use crate::surgery::{
    gamma2_elements, homology_profile, is_even_presentation, signature_of_trace, Gamma2Element,
    HomologyProfile,
};
use crate::verify::{
    check_closed_r5, check_closed_r6, check_cusp_residue, check_equal_signatures_if_reg_homotopic,
    check_partition_divisibility, check_spin_even_components, glue_r5, glue_r6, oracle_parity_lemma,
    oracle_signature, oracle_snf, run_corollaries, SweepConfig,
};

use super::files::{load_any, load_manifold, load_seifert_data, InputFile, ManifoldFile, SeifertData};
use super::reports::*;

/// Which definition of `i` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Ia,
    Ib,
    Both,
}

pub fn analyze(m: &ManifoldFile) -> Result<AnalyzeReport> {
    let p = m.presentation()?;
    let h = homology_profile(&p);
    let spin = spin_structures(&p).len();
    debug_assert_eq!(num_bigint::BigInt::from(spin), h.spin_structure_count());
    Ok(AnalyzeReport {
        name: p.name.clone(),
        link_components: p.components(),
        betti1: h.betti1,
        torsion_factors: h.torsion_factors.clone(),
        alpha: h.alpha,
        gamma2_order: h.gamma2_order(),
        spin_structures: h.spin_structure_count(),
        trace_signature: signature_of_trace(&p),
        even_presentation: is_even_presentation(&p),
        wu_components: gamma2_elements(&h).iter().map(ToString::to_string).collect(),
    })
}

pub fn cmd_analyze(path: &Path) -> Result<AnalyzeReport> {
    analyze(&load_manifold(path)?)
}

fn with_record(e: Error, id: &str) -> Error {
    match e {
        Error::Parity { what, numerator } => Error::Parity {
            what: format!("{what} for record {id}"),
            numerator,
        },
        other => other,
    }
}

pub fn invariant(data: &SeifertData, which: Which) -> Result<InvariantReport> {
    let p = data.manifold.presentation()?;
    let h = homology_profile(&p);
    let f = &data.file;
    let mut values = Vec::new();

    if which != Which::Ib {
        if f.fillings_r5.is_empty() && which == Which::Ia {
            return Err(Error::MissingData("fillings_r5".into()));
        }
        for (k, r) in f.fillings_r5.iter().enumerate() {
            let id = r.label("r5", k);
            r.record.validate()?;
            let value = i_a(&r.record, &h).map_err(|e| with_record(e, &id))?;
            values.push(InvariantValue {
                id,
                kind: "i_a".into(),
                value,
            });
        }
    }
    if which != Which::Ia && !f.fillings_r6.is_empty() {
        let d = f
            .double_data
            .ok_or_else(|| Error::MissingData("double_data (needed for i_b)".into()))?;
        for (k, r) in f.fillings_r6.iter().enumerate() {
            let id = r.label("r6", k);
            let value = i_b(&r.record, &d, &h).map_err(|e| with_record(e, &id))?;
            values.push(InvariantValue {
                id,
                kind: "i_b".into(),
                value,
            });
        }
    } else if which == Which::Ib {
        return Err(Error::MissingData("fillings_r6".into()));
    }

    let consistent = values.windows(2).all(|w| w[0].value == w[1].value);
    let cusp_residues = f
        .fillings_r5
        .iter()
        .enumerate()
        .map(|(k, r)| CuspResidue {
            id: r.label("r5", k),
            residue_mod_3: r.record.cusps_algebraic.mod_floor(&3),
            matches_big_l: f.double_data.map(|d| check_cusp_residue(&r.record, &d)),
        })
        .collect();
    Ok(InvariantReport {
        manifold: p.name.clone(),
        alpha: h.alpha,
        i: values.first().map(|v| v.value),
        values,
        consistent,
        cusp_residues,
    })
}

pub fn cmd_invariant(path: &Path, which: Which) -> Result<InvariantReport> {
    invariant(&load_seifert_data(path)?, which)
}

pub fn act(m: &ManifoldFile, wu: &str, i: i64, omega: i64) -> Result<ActReport> {
    let p = m.presentation()?;
    let h = homology_profile(&p);
    let wu = Gamma2Element::parse(wu, h.alpha)?;
    let before = RegHomotopyClass::new(wu, i);
    let after = connected_sum_act(&before, SmaleClass::new(omega))?;
    let embedding_class = match m.signatures(h.alpha)? {
        Some(sig) => Some(is_embedding_class(&after, &embedding_classes(&h, &sig)?)?),
        None => None,
    };
    Ok(ActReport {
        manifold: p.name.clone(),
        wu: after.wu.to_string(),
        i_before: i,
        omega,
        i_after: after.i,
        embedding_class,
    })
}

pub fn cmd_act(path: &Path, wu: &str, i: i64, omega: i64) -> Result<ActReport> {
    act(&load_manifold(path)?, wu, i, omega)
}

pub fn embeddings(m: &ManifoldFile) -> Result<EmbeddingsReport> {
    let p = m.presentation()?;
    let h = homology_profile(&p);
    let sig = m
        .signatures(h.alpha)?
        .ok_or_else(|| Error::MissingData("spin_boundary_signatures".into()))?;
    let e = embedding_classes(&h, &sig)?;
    let cosets = e
        .offsets_mod_24
        .iter()
        .map(|(coset, offsets)| CosetEmbeddings {
            coset: coset.to_string(),
            base_signatures: sig.per_coset[coset].iter().copied().collect(),
            offsets_mod_24: offsets.iter().copied().collect(),
            description: e.describe(coset).unwrap_or_default(),
        })
        .collect();
    Ok(EmbeddingsReport {
        manifold: p.name.clone(),
        alpha: h.alpha,
        cosets,
    })
}

pub fn cmd_embeddings(path: &Path) -> Result<EmbeddingsReport> {
    embeddings(&load_manifold(path)?)
}

/// Validators applicable to a manifold file.
pub fn verify_manifold(m: &ManifoldFile) -> Result<Vec<CheckLine>> {
    let p = m.presentation()?;
    let h = homology_profile(&p);
    let mut checks = vec![CheckLine::new(
        "linking matrix",
        true,
        format!("{}×{} symmetric", p.components(), p.components()),
    )];
    let spin = spin_structures(&p).len();
    checks.push(CheckLine::new(
        "spin structure count",
        num_bigint::BigInt::from(spin) == h.spin_structure_count(),
        format!("{spin} = 2^(β₁ + α) = 2^{}", h.h1_z2_dim()),
    ));
    match m.signatures(h.alpha)? {
        None => checks.push(CheckLine::skipped("spin boundary signatures", "none given")),
        Some(sig) => {
            let line = match embedding_classes(&h, &sig) {
                Ok(_) => CheckLine::new(
                    "spin boundary signatures",
                    true,
                    format!("every coset covered, all signatures ≡ α = {} (mod 2)", h.alpha),
                ),
                Err(e) => CheckLine::new("spin boundary signatures", false, e.to_string()),
            };
            checks.push(line);
        }
    }
    Ok(checks)
}

/// Validators applicable to a Seifert data file.
pub fn verify_seifert_data(data: &SeifertData) -> Result<Vec<CheckLine>> {
    let p = data.manifold.presentation()?;
    let h: HomologyProfile = homology_profile(&p);
    let f = &data.file;
    let mut checks = Vec::new();

    let r5: Vec<_> = f
        .fillings_r5
        .iter()
        .enumerate()
        .map(|(k, r)| (r.label("r5", k), &r.record))
        .collect();
    let r6: Vec<_> = f
        .fillings_r6
        .iter()
        .enumerate()
        .map(|(k, r)| (r.label("r6", k), r.record))
        .collect();

    for (id, r) in &r5 {
        if let Err(e) = r.validate() {
            checks.push(CheckLine::new(format!("components {id}"), false, e.to_string()));
        }
        let line = match i_a(r, &h) {
            Ok(v) => CheckLine::new(format!("integrality {id}"), true, format!("i_a = {v}")),
            Err(e) => CheckLine::new(format!("integrality {id}"), false, e.to_string()),
        };
        checks.push(line);
    }
    for (a, b) in pairs(&r5) {
        let glued = glue_r5(a.1, b.1);
        checks.push(CheckLine::new(
            format!("gluing {} ∪ −{}", a.0, b.0),
            check_closed_r5(&glued),
            format!("#Σ¹¹ + 3σ = {} + 3·{}", glued.cusps_algebraic, glued.sigma),
        ));
    }
    for (a, b) in pairs(&r6) {
        let glued = glue_r6(&a.1, &b.1);
        checks.push(CheckLine::new(
            format!("gluing {} ∪ −{}", a.0, b.0),
            check_closed_r6(&glued),
            format!(
                "σ − l + t = {} − {} + {}",
                glued.sigma, glued.singular_linking, glued.triple_points
            ),
        ));
    }
    if let Some(d) = f.double_data {
        for (id, r) in &r6 {
            let line = match i_b(r, &d, &h) {
                Ok(v) => CheckLine::new(format!("integrality {id}"), true, format!("i_b = {v}")),
                Err(e) => CheckLine::new(format!("integrality {id}"), false, e.to_string()),
            };
            checks.push(line);
        }
        for (id5, a) in &r5 {
            for (id6, b) in &r6 {
                checks.push(CheckLine::new(
                    format!("i_a = i_b {id5}/{id6}"),
                    fillings_coincide(a, b, &d),
                    format!("3σ + #Σ¹¹ = 3(σ' + t − l) + L with L = {}", d.big_l),
                ));
            }
            checks.push(CheckLine::new(
                format!("cusp residue {id5}"),
                check_cusp_residue(a, &d),
                format!("#Σ¹¹ = {} vs L = {} (mod 3)", a.cusps_algebraic, d.big_l),
            ));
        }
    } else if !r6.is_empty() {
        checks.push(CheckLine::skipped("R6 fillings", "no double_data"));
    }

    if let Some(closed) = &f.closed_records {
        for (k, r) in closed.r5.iter().enumerate() {
            let id = r.label("closed_r5", k);
            let rec = &r.record;
            if let Err(e) = rec.validate() {
                checks.push(CheckLine::new(format!("components {id}"), false, e.to_string()));
            }
            checks.push(CheckLine::new(
                format!("closed {id}"),
                check_closed_r5(rec),
                format!("#Σ¹¹ + 3σ = {} + 3·{}", rec.cusps_algebraic, rec.sigma),
            ));
            if rec.is_spin {
                let line = match check_spin_even_components(rec) {
                    Ok(ok) => CheckLine::new(
                        format!("even cusps per component {id}"),
                        ok,
                        format!("{:?}", rec.cusps_per_component.as_deref().unwrap_or(&[])),
                    ),
                    Err(e) => CheckLine::skipped(format!("even cusps per component {id}"), e.to_string()),
                };
                checks.push(line);
            }
        }
        for (k, r) in closed.r6.iter().enumerate() {
            let id = r.label("closed_r6", k);
            let rec = &r.record;
            checks.push(CheckLine::new(
                format!("closed {id}"),
                check_closed_r6(rec),
                format!(
                    "σ − l + t = {} − {} + {}",
                    rec.sigma, rec.singular_linking, rec.triple_points
                ),
            ));
        }
        for (k, r) in closed.partitions.iter().enumerate() {
            let id = r.label("partition", k);
            let rec = &r.record;
            let detail = format!("parts {:?}", rec.part_cusps);
            if rec.hypotheses_hold() {
                checks.push(CheckLine::new(
                    format!("divisible by 6 {id}"),
                    check_partition_divisibility(rec),
                    detail,
                ));
            } else {
                checks.push(CheckLine::skipped(
                    format!("divisible by 6 {id}"),
                    "hypotheses not declared",
                ));
            }
        }
    }
    for (k, &(s1, s2)) in f.regularly_homotopic_embeddings.iter().enumerate() {
        checks.push(CheckLine::new(
            format!("equal Seifert signatures [{k}]"),
            check_equal_signatures_if_reg_homotopic(s1, s2),
            format!("{s1} vs {s2}"),
        ));
    }
    for (k, t) in f.tracks.iter().enumerate() {
        checks.push(CheckLine::new(
            format!("track [{k}]"),
            track_correction(t.l_before, t.l_after, t.triple_points),
            format!("{} = {} + 3·{}", t.l_before, t.l_after, t.triple_points),
        ));
    }
    Ok(checks)
}

fn pairs<T>(items: &[T]) -> impl Iterator<Item = (&T, &T)> + '_ {
    items
        .iter()
        .enumerate()
        .flat_map(move |(i, a)| items[i + 1..].iter().map(move |b| (a, b)))
}

/// What `verify` should run.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub file: Option<std::path::PathBuf>,
    pub corollaries: bool,
    pub oracles: Option<SweepConfig>,
}

pub fn cmd_verify(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    if let Some(path) = &opts.file {
        report.checks = match load_any(path)? {
            InputFile::Manifold(m) => verify_manifold(&m)?,
            InputFile::SeifertData(d) => verify_seifert_data(&d)?,
        };
    }
    if opts.corollaries {
        report.corollaries = run_corollaries()?;
    }
    if let Some(cfg) = opts.oracles {
        report.oracles = vec![oracle_parity_lemma(cfg), oracle_snf(cfg), oracle_signature(cfg)];
    }
    Ok(report)
}
