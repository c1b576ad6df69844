//! JSON interchange for symbols.
//!
//! A polynomial document lists its sandwich Fourier coefficients for the
//! stated partition (indices 1-based):
//!
//! ```json
//! {"kind": "trig_poly", "d": 1, "s": 1, "t": 1,
//!  "kernel": {"left": [], "right": [1]},
//!  "entries": [{"multi_index": [1], "block": [[[0.0, 0.0, 1.0, 0.0]]]}]}
//! ```
//!
//! Each block entry is `[q0, q1, q2, q3]`. A sampled built-in is described by
//! `{"kind": "sampled", "builtin": "<name>", "d", "s", "t", "grid", "kernel"}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qmat::QMatrix;
use crate::quat::Quaternion;

use super::{builtin, KernelPartition, MultiIndex, SymbolBody, SymbolSpec, TrigPoly};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelDoc {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub multi_index: MultiIndex,
    pub block: Vec<Vec<[f64; 4]>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymbolDoc {
    #[serde(default = "default_kind")]
    pub kind: String,
    pub d: usize,
    pub s: usize,
    pub t: usize,
    pub kernel: KernelDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<EntryDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<usize>,
}

fn default_kind() -> String {
    "trig_poly".into()
}

impl KernelDoc {
    fn from_partition(k: &KernelPartition) -> Self {
        KernelDoc {
            left: k.left_set().iter().map(|l| l + 1).collect(),
            right: k.right_set().iter().map(|l| l + 1).collect(),
        }
    }

    fn to_partition(&self, d: usize) -> Result<KernelPartition> {
        let zero_based = |v: &[usize]| -> Result<Vec<usize>> {
            v.iter()
                .map(|&l| {
                    l.checked_sub(1)
                        .ok_or_else(|| Error::SymbolFormat("kernel indices are 1-based".into()))
                })
                .collect()
        };
        KernelPartition::new(d, &zero_based(&self.left)?, &zero_based(&self.right)?)
    }
}

/// Document describing `spec`.
pub fn to_doc(spec: &SymbolSpec) -> SymbolDoc {
    let kernel = KernelDoc::from_partition(spec.kernel());
    match spec.body() {
        SymbolBody::TrigPoly(p) => {
            let entries = p
                .sandwich_entries(spec.kernel())
                .into_iter()
                .map(|(m, b)| EntryDoc {
                    multi_index: m,
                    block: (0..b.rows())
                        .map(|i| {
                            (0..b.cols())
                                .map(|j| {
                                    let q = b[(i, j)];
                                    [q.q0, q.q1, q.q2, q.q3]
                                })
                                .collect()
                        })
                        .collect(),
                })
                .collect();
            SymbolDoc {
                kind: "trig_poly".into(),
                d: spec.d(),
                s: spec.s(),
                t: spec.t(),
                kernel,
                entries: Some(entries),
                builtin: None,
                grid: None,
            }
        }
        SymbolBody::Sampled(s) => SymbolDoc {
            kind: "sampled".into(),
            d: spec.d(),
            s: spec.s(),
            t: spec.t(),
            kernel,
            entries: None,
            builtin: Some(s.name.clone()),
            grid: Some(s.grid),
        },
    }
}

/// Symbol described by `doc`. Sampled documents must name a built-in.
pub fn from_doc(doc: &SymbolDoc) -> Result<SymbolSpec> {
    let kernel = doc.kernel.to_partition(doc.d)?;
    match doc.kind.as_str() {
        "trig_poly" => {
            let entries = doc.entries.as_deref().unwrap_or(&[]);
            let mut blocks = Vec::with_capacity(entries.len());
            for e in entries {
                if e.block.len() != doc.s || e.block.iter().any(|r| r.len() != doc.t) {
                    return Err(Error::SymbolFormat(format!(
                        "block at {:?} is not {}x{}",
                        e.multi_index, doc.s, doc.t
                    )));
                }
                let data = e
                    .block
                    .iter()
                    .flatten()
                    .map(|c| Quaternion::new(c[0], c[1], c[2], c[3]))
                    .collect();
                blocks.push((
                    e.multi_index.clone(),
                    QMatrix::from_vec(doc.s, doc.t, data)?,
                ));
            }
            let poly = TrigPoly::from_sandwich(&kernel, doc.s, doc.t, blocks)?;
            SymbolSpec::trig_poly(poly, kernel)
        }
        "sampled" => {
            let name = doc
                .builtin
                .as_deref()
                .ok_or_else(|| Error::SymbolFormat("sampled symbol without `builtin`".into()))?;
            let spec = builtin::builtin(name)?;
            if (spec.d(), spec.s(), spec.t()) != (doc.d, doc.s, doc.t) {
                return Err(Error::SymbolFormat(format!(
                    "dimensions do not match builtin `{name}`"
                )));
            }
            let spec = spec.with_kernel(kernel)?;
            Ok(match doc.grid {
                Some(g) => spec.with_quadrature(g),
                None => spec,
            })
        }
        other => Err(Error::SymbolFormat(format!("unknown kind `{other}`"))),
    }
}

pub fn to_json(spec: &SymbolSpec) -> Result<String> {
    Ok(serde_json::to_string_pretty(&to_doc(spec))?)
}

pub fn from_json(text: &str) -> Result<SymbolSpec> {
    let doc: SymbolDoc = serde_json::from_str(text)?;
    from_doc(&doc)
}
