//! Line-delimited JSON catalogues of links.
//!
//! One record per line:
//! `{"name": "3_1", "pd": "X[...] ...", "convention": "knotinfo", "expected": {"signature": 2, "b1": 2}}`
//! or `{"name": "T(2,5)", "braid": "2: 1 1 1 1 1"}`. Blank lines and lines
//! starting with `#` are skipped.

use serde::{Deserialize, Serialize};

use crate::braid::{closure_diagram, parse_braid, BraidWord};
use crate::diagram::{parse_pd_with, LinkDiagram, ParseOptions, PdConvention};
use crate::error::{KnotError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordInput {
    Pd(String),
    Braid(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b1: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogueRecord {
    pub name: String,
    #[serde(flatten)]
    pub input: RecordInput,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<PdConvention>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

/// A parsed record: its diagram, and the braid word when it came from one.
#[derive(Clone, Debug)]
pub struct LoadedLink {
    pub name: String,
    pub diagram: LinkDiagram,
    pub braid: Option<BraidWord>,
    pub expected: Expected,
}

impl CatalogueRecord {
    pub fn load(&self) -> Result<LoadedLink> {
        let (diagram, braid) = match &self.input {
            RecordInput::Pd(text) => {
                let opts = ParseOptions { convention: self.convention.unwrap_or(PdConvention::Standard), ..Default::default() };
                (parse_pd_with(text, &opts)?, None)
            }
            RecordInput::Braid(text) => {
                let b = parse_braid(text)?;
                (closure_diagram(&b), Some(b))
            }
        };
        Ok(LoadedLink { name: self.name.clone(), diagram, braid, expected: self.expected.clone().unwrap_or_default() })
    }
}

/// Parses every non-blank line; errors carry the 1-based line number.
pub fn parse_catalogue(text: &str) -> Vec<(usize, Result<CatalogueRecord>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            let rec = serde_json::from_str::<CatalogueRecord>(l)
                .map_err(|e| KnotError::MalformedTuple(format!("line {}: {e}", i + 1)));
            (i + 1, rec)
        })
        .collect()
}
