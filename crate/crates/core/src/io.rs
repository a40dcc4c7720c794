//! The embedding file format, text rendering of tableaux, and TSV reports.
//!
//! An embedding file is a JSON object
//! `{"p": 2, "beta": [5,3,1], "generators": [[4,2,0],[0,2,1]]}` whose
//! generators are rows in the coordinates of `beta`. Entries may be negative
//! on input (`|v| < p^{β_i}`); the canonical form reduces them into
//! `[0, p^{β_i})`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embedding::{Embedding, EmbeddingError};
use crate::hom::SweepRow;
use crate::partition::Partition;
use crate::tableau::LRTableau;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("field `{field}`: {msg}")]
    Field { field: String, msg: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingFile {
    pub p: u64,
    pub beta: Vec<u32>,
    #[serde(default)]
    pub generators: Vec<Vec<i64>>,
}

impl EmbeddingFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Syntax {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })
    }

    pub fn from_embedding(e: &Embedding) -> Self {
        EmbeddingFile {
            p: e.p(),
            beta: e.beta().parts().to_vec(),
            generators: e
                .generator_rows()
                .into_iter()
                .map(|r| r.into_iter().map(|v| v as i64).collect())
                .collect(),
        }
    }

    pub fn to_embedding(&self) -> Result<Embedding, FileError> {
        let beta = Partition::new(self.beta.clone()).map_err(|e| FileError::Field {
            field: "beta".into(),
            msg: e.to_string(),
        })?;
        if self.beta.contains(&0) {
            return Err(FileError::Field { field: "beta".into(), msg: "parts must be positive".into() });
        }
        Embedding::from_signed_rows(self.p, beta, &self.generators).map_err(|e| match e {
            EmbeddingError::Ring(r) => FileError::Field { field: "p".into(), msg: r.to_string() },
            EmbeddingError::DimensionMismatch { generator, expected, found } => FileError::Field {
                field: format!("generators[{generator}]"),
                msg: format!("has {found} entries, beta has {expected} parts"),
            },
            EmbeddingError::EntryOutOfRange { generator, coord, value, exp } => FileError::Field {
                field: format!("generators[{generator}][{coord}]"),
                msg: format!("{value} is not below {}^{exp} in absolute value", self.p),
            },
            other => FileError::Field { field: "generators".into(), msg: other.to_string() },
        })
    }

    /// Canonical text: entries reduced, one generator per line.
    pub fn to_canonical_string(&self) -> Result<String, FileError> {
        Ok(canonical_json(&self.to_embedding()?))
    }
}

fn json_list<T: ToString>(xs: &[T]) -> String {
    let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(", "))
}

pub fn canonical_json(e: &Embedding) -> String {
    let rows = e.generator_rows();
    let mut out = format!("{{\n  \"p\": {},\n  \"beta\": {},\n  \"generators\": [", e.p(), json_list(e.beta().parts()));
    if rows.is_empty() {
        out.push_str("]\n}\n");
        return out;
    }
    for (k, r) in rows.iter().enumerate() {
        let sep = if k + 1 < rows.len() { "," } else { "" };
        let _ = write!(out, "\n    {}{sep}", json_list(r));
    }
    out.push_str("\n  ]\n}\n");
    out
}

pub fn parse_embedding(text: &str) -> Result<Embedding, FileError> {
    EmbeddingFile::parse(text)?.to_embedding()
}

fn cell(label: Option<usize>, width: usize) -> String {
    match label {
        Some(0) => format!("[{:width$}]", ""),
        Some(l) => format!("[{l:>width$}]"),
        None => String::new(),
    }
}

/// Parts drawn as columns, row 1 on top; skew boxes carry their label and
/// boxes of `γ` are blank. With `transpose` each part is a row instead.
pub fn render_tableau(t: &LRTableau, transpose: bool) -> String {
    let beta = t.beta();
    let width = t.s().to_string().len();
    let mut out = String::new();
    if transpose {
        for i in 0..beta.len() {
            for r in 1..=beta.part(i) {
                out.push_str(&cell(t.label_at(i, r), width));
            }
            out.push('\n');
        }
    } else {
        for r in 1..=beta.first() {
            for i in 0..beta.row(r) as usize {
                out.push_str(&cell(t.label_at(i, r), width));
            }
            out.push('\n');
        }
    }
    out
}

pub fn chain_json(t: &LRTableau) -> String {
    serde_json::to_string(t).expect("partitions serialize")
}

pub const TSV_HEADER: &str = "embedding-id\tell\tm\tcount_tableau\tcount_subfactor\tcount_hom\tagree";

pub fn tsv_row(id: &str, r: &SweepRow) -> String {
    format!(
        "{id}\t{}\t{}\t{}\t{}\t{}\t{}",
        r.ell,
        r.m,
        r.count_tableau,
        r.count_subfactor,
        r.count_hom,
        r.agree()
    )
}
