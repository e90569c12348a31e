//! JSON file format for heredity data.

use serde::{Deserialize, Serialize};

use crate::superalg::Parity;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    /// Covering pairs `[i, j]` meaning `i < j`, given by component labels.
    pub poset: Vec<[i64; 2]>,
    pub components: Vec<ComponentEntry>,
    pub products: Vec<ProductEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEntry {
    pub i: i64,
    #[serde(rename = "X")]
    pub x: Vec<ColorEntry>,
    #[serde(rename = "Y")]
    pub y: Vec<ColorEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorEntry {
    pub name: String,
    pub parity: Parity,
    #[serde(rename = "leftIdem", default, skip_serializing_if = "Option::is_none")]
    pub left_idem: Option<i64>,
}

/// A basis element `x·y` named by its two factors.
pub type PairName = [String; 2];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: PairName,
    pub right: PairName,
    pub result: Vec<(i64, PairName)>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: line {line}, column {column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl AlgebraFile {
    pub fn from_json(text: &str, path: &str) -> Result<Self, FormatError> {
        serde_json::from_str(text).map_err(|e| FormatError::Parse {
            path: path.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn load(path: &std::path::Path) -> Result<Self, FormatError> {
        let p = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: p.clone(), source })?;
        Self::from_json(&text, &p)
    }

    /// Pretty JSON with two-space indentation and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("algebra files always serialize");
        s.push('\n');
        s
    }
}
