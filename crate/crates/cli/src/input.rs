use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use knotcert::catalogue::{parse_catalogue, CatalogueRecord, LoadedLink, RecordInput};
use knotcert::diagram::PdConvention;

/// One input link, or the reason it could not be read.
pub struct Entry {
    pub label: String,
    pub link: std::result::Result<LoadedLink, String>,
}

pub struct Sources<'a> {
    pub pd: Option<&'a str>,
    pub braid: Option<&'a str>,
    pub catalogue: Option<&'a Path>,
    pub convention: PdConvention,
}

fn load(label: String, rec: &CatalogueRecord) -> Entry {
    Entry { label, link: rec.load().map_err(|e| e.to_string()) }
}

/// Collects inputs in order: `--pd`, then `--braid`, then catalogue records.
/// Only an unreadable catalogue file is fatal.
pub fn gather(src: &Sources) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    if let Some(pd) = src.pd {
        let rec = CatalogueRecord {
            name: "pd".into(),
            input: RecordInput::Pd(pd.to_string()),
            convention: Some(src.convention),
            expected: None,
            provenance: None,
        };
        out.push(load("pd".into(), &rec));
    }
    if let Some(b) = src.braid {
        let rec = CatalogueRecord {
            name: "braid".into(),
            input: RecordInput::Braid(b.to_string()),
            convention: None,
            expected: None,
            provenance: None,
        };
        out.push(load("braid".into(), &rec));
    }
    if let Some(path) = src.catalogue {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read catalogue {}", path.display()))?;
        for (line, rec) in parse_catalogue(&text) {
            match rec {
                Ok(rec) => out.push(load(rec.name.clone(), &rec)),
                Err(e) => out.push(Entry { label: format!("line {line}"), link: Err(e.to_string()) }),
            }
        }
    }
    Ok(out)
}
