//! JSON input formats.
//!
//! A manifold file:
//!
//! ```json
//! { "name": "T3",
//!   "linking_matrix": [[0,0,0],[0,0,0],[0,0,0]],
//!   "spin_boundary_signatures": { "0": [0, 8] } }
//! ```
//!
//! Coset keys are Γ₂ coordinate strings of length α; `"0"` always names the
//! identity. A Seifert data file refers to a manifold (by path relative to
//! itself, or inline) and lists filling records.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::embeddings::SpinBoundarySignatures;
use crate::error::{Error, Result};
use crate::intlinalg::IntSymMatrix;
use crate::invariants::{ImmersionDoubleData, SeifertFillingR5, SeifertFillingR6};
use crate::surgery::{Gamma2Element, SurgeryPresentation};
use crate::verify::{ClosedMapRecordR5, ClosedMapRecordR6, PartitionRecord};

use super::json_int;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldFile {
    pub name: String,
    #[serde(with = "json_int::matrix")]
    pub linking_matrix: Vec<Vec<BigInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spin_boundary_signatures: Option<BTreeMap<String, Vec<i64>>>,
}

impl ManifoldFile {
    pub fn from_presentation(p: &SurgeryPresentation) -> Self {
        ManifoldFile {
            name: p.name.clone(),
            linking_matrix: p.q.as_matrix().to_rows(),
            spin_boundary_signatures: None,
        }
    }

    pub fn presentation(&self) -> Result<SurgeryPresentation> {
        let q = IntSymMatrix::from_rows(&self.linking_matrix)?;
        Ok(SurgeryPresentation::new(self.name.clone(), q))
    }

    /// Signature data keyed by parsed cosets, if the file has any.
    pub fn signatures(&self, alpha: usize) -> Result<Option<SpinBoundarySignatures>> {
        let Some(raw) = &self.spin_boundary_signatures else {
            return Ok(None);
        };
        let mut out = SpinBoundarySignatures::new();
        for (key, sigs) in raw {
            let coset = Gamma2Element::parse(key, alpha)?;
            for &s in sigs {
                out.insert(coset.clone(), s);
            }
            out.per_coset.entry(coset).or_default();
        }
        Ok(Some(out))
    }
}

/// A record with an optional identifier used in diagnostics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Named<T> {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(flatten)]
    pub record: T,
}

impl<T> Named<T> {
    pub fn new(record: T) -> Self {
        Named { id: None, record }
    }

    pub fn label(&self, kind: &str, index: usize) -> String {
        self.id.clone().unwrap_or_else(|| format!("{kind}[{index}]"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ManifoldRef {
    Path(String),
    Inline(ManifoldFile),
}

/// `L` before and after a regular homotopy, with the algebraic number of
/// triple points of its track.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrackRecord {
    pub l_before: i64,
    pub l_after: i64,
    pub triple_points: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedRecords {
    #[serde(default)]
    pub r5: Vec<Named<ClosedMapRecordR5>>,
    #[serde(default)]
    pub r6: Vec<Named<ClosedMapRecordR6>>,
    #[serde(default)]
    pub partitions: Vec<Named<PartitionRecord>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertDataFile {
    pub manifold: ManifoldRef,
    #[serde(default)]
    pub fillings_r5: Vec<Named<SeifertFillingR5>>,
    #[serde(default)]
    pub fillings_r6: Vec<Named<SeifertFillingR6>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub double_data: Option<ImmersionDoubleData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_records: Option<ClosedRecords>,
    /// Seifert signatures of pairs of embeddings declared regularly homotopic.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub regularly_homotopic_embeddings: Vec<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tracks: Vec<TrackRecord>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, path: &Path) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn load_manifold(path: &Path) -> Result<ManifoldFile> {
    parse(&read(path)?, path)
}

/// A Seifert data file together with its resolved manifold.
#[derive(Clone, Debug)]
pub struct SeifertData {
    pub file: SeifertDataFile,
    pub manifold: ManifoldFile,
}

pub fn load_seifert_data(path: &Path) -> Result<SeifertData> {
    let file: SeifertDataFile = parse(&read(path)?, path)?;
    let manifold = match &file.manifold {
        ManifoldRef::Inline(m) => m.clone(),
        ManifoldRef::Path(rel) => {
            let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
            load_manifold(&resolve(&base, rel))?
        }
    };
    Ok(SeifertData { file, manifold })
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

/// Either kind of input file, told apart by the presence of `linking_matrix`.
#[derive(Clone, Debug)]
pub enum InputFile {
    Manifold(ManifoldFile),
    SeifertData(Box<SeifertData>),
}

pub fn load_any(path: &Path) -> Result<InputFile> {
    let text = read(path)?;
    let value: serde_json::Value = parse(&text, path)?;
    if value.get("linking_matrix").is_some() {
        Ok(InputFile::Manifold(parse(&text, path)?))
    } else {
        load_seifert_data(path).map(|d| InputFile::SeifertData(Box::new(d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifold_file_parses() {
        let m: ManifoldFile = serde_json::from_str(
            r#"{"name":"T3","linking_matrix":[[0,0,0],[0,0,0],[0,0,0]],
                "spin_boundary_signatures":{"0":[0,8]}}"#,
        )
        .unwrap();
        let p = m.presentation().unwrap();
        assert_eq!(p.components(), 3);
        let sigs = m.signatures(0).unwrap().unwrap();
        assert_eq!(sigs.per_coset[&Gamma2Element::zero(0)], [0, 8].into());
    }

    #[test]
    fn big_entries_as_strings() {
        let m: ManifoldFile = serde_json::from_str(
            r#"{"name":"big","linking_matrix":[["123456789012345678901234567890"]]}"#,
        )
        .unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert!(text.contains("\"123456789012345678901234567890\""));
        assert_eq!(serde_json::from_str::<ManifoldFile>(&text).unwrap(), m);
    }

    #[test]
    fn empty_matrix_is_s3() {
        let m: ManifoldFile = serde_json::from_str(r#"{"name":"S3","linking_matrix":[]}"#).unwrap();
        assert_eq!(m.presentation().unwrap().components(), 0);
    }

    #[test]
    fn asymmetric_and_ragged_rejected() {
        let m: ManifoldFile =
            serde_json::from_str(r#"{"name":"x","linking_matrix":[[0,1],[2,0]]}"#).unwrap();
        assert!(matches!(m.presentation(), Err(Error::AsymmetricMatrix { .. })));
        let m: ManifoldFile =
            serde_json::from_str(r#"{"name":"x","linking_matrix":[[0,1],[1]]}"#).unwrap();
        assert!(m.presentation().unwrap_err().is_input_error());
        let m: ManifoldFile =
            serde_json::from_str(r#"{"name":"x","linking_matrix":[[0,1]]}"#).unwrap();
        assert!(matches!(m.presentation(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn bad_coset_keys() {
        let m: ManifoldFile = serde_json::from_str(
            r#"{"name":"RP3","linking_matrix":[[2]],"spin_boundary_signatures":{"11":[1]}}"#,
        )
        .unwrap();
        assert!(matches!(m.signatures(1), Err(Error::InvalidCoords { .. })));
    }

    #[test]
    fn seifert_records_with_ids() {
        let f: SeifertDataFile = serde_json::from_str(
            r#"{"manifold":"t3.json",
                "fillings_r5":[{"id":"F8","sigma":8,"cusps_algebraic":0},{"sigma":0,"cusps_algebraic":24}],
                "fillings_r6":[{"sigma":8,"triple_points":0,"singular_linking":0}],
                "double_data":{"big_l":0},
                "closed_records":{"partitions":[{"part_cusps":[6,-6]}]}}"#,
        )
        .unwrap();
        assert_eq!(f.manifold, ManifoldRef::Path("t3.json".into()));
        assert_eq!(f.fillings_r5[0].label("r5", 0), "F8");
        assert_eq!(f.fillings_r5[1].label("r5", 1), "r5[1]");
        assert_eq!(f.fillings_r5[1].record.cusps_algebraic, 24);
        let round: SeifertDataFile =
            serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(round, f);
    }
}
