//! Named fixtures with expected invariants, and obstruction reports.

mod report;

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use report::{render_json, render_table, rows_from_json};

use crate::diagram::PdDiagram;
use crate::error::{Error, Result};
use crate::jones::{obstruction_check_with, Evidence, Verdict, JONES_MAX_CROSSINGS};
use crate::qpoly::{QEngine, Q_MAX_CROSSINGS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub pd: PdDiagram,
    pub expected_det: Option<u64>,
    pub expected_deg_q: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub name: String,
    pub computed_det: Option<u64>,
    pub computed_deg_q: Option<i64>,
    pub breadth: Option<num_rational::Ratio<i64>>,
    pub verdict: Option<Verdict>,
    pub mismatches: Vec<String>,
    /// Set when the row could not be computed; the other fields are empty.
    pub error: Option<String>,
    #[serde(default)]
    pub resource_bound: bool,
}

impl ReportRow {
    pub fn is_ok(&self) -> bool {
        self.error.is_none() && self.mismatches.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub max_crossings: usize,
    pub jones_max_crossings: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { max_crossings: Q_MAX_CROSSINGS, jones_max_crossings: JONES_MAX_CROSSINGS }
    }
}

/// Reads a catalog; `.json` files are JSON, anything else CSV with header
/// `name,pd,expected_det,expected_deg_q`.
pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let src = path.display().to_string();
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        parse_json(&text, &src)
    } else {
        parse_csv(&text, &src)
    }
}

#[derive(Deserialize)]
struct CsvRow {
    name: String,
    pd: String,
    #[serde(default)]
    expected_det: Option<u64>,
    #[serde(default)]
    expected_deg_q: Option<i64>,
}

pub fn parse_csv(text: &str, source: &str) -> Result<Vec<CatalogEntry>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (i, rec) in rdr.deserialize::<CsvRow>().enumerate() {
        // Header is line 1.
        let location = format!("{source}:{}", i + 2);
        let row = rec.map_err(|e| Error::Catalog { location: location.clone(), message: e.to_string() })?;
        let pd = row.pd.parse().map_err(|e: Error| Error::Catalog { location, message: e.to_string() })?;
        out.push(CatalogEntry {
            name: row.name,
            pd,
            expected_det: row.expected_det,
            expected_deg_q: row.expected_deg_q,
        });
    }
    check_unique(&out, source)?;
    Ok(out)
}

fn check_unique(entries: &[CatalogEntry], source: &str) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for e in entries {
        if !seen.insert(e.name.as_str()) {
            return Err(Error::Catalog { location: source.into(), message: format!("duplicate name {:?}", e.name) });
        }
    }
    Ok(())
}

#[derive(Deserialize)]
struct JsonRow {
    name: String,
    pd: serde_json::Value,
    #[serde(default)]
    expected_det: Option<u64>,
    #[serde(default)]
    expected_deg_q: Option<i64>,
}

pub fn parse_json(text: &str, source: &str) -> Result<Vec<CatalogEntry>> {
    let rows: Vec<JsonRow> =
        serde_json::from_str(text).map_err(|e| Error::Catalog { location: source.into(), message: e.to_string() })?;
    let out = rows
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            let location = format!("{source}[{i}]");
            let pd = match &r.pd {
                serde_json::Value::String(s) => s.parse(),
                v => PdDiagram::from_json_array(&v.to_string()),
            }
            .map_err(|e| Error::Catalog { location, message: e.to_string() })?;
            Ok(CatalogEntry { name: r.name, pd, expected_det: r.expected_det, expected_deg_q: r.expected_deg_q })
        })
        .collect::<Result<Vec<_>>>()?;
    check_unique(&out, source)?;
    Ok(out)
}

/// Recomputes every entry (in parallel, output in input order) and lists
/// disagreements with the expectations. A row that cannot be computed
/// carries its error instead of failing the whole table.
pub fn verify_table(entries: &[CatalogEntry], opts: VerifyOptions) -> Vec<ReportRow> {
    entries
        .par_iter()
        .map(|e| {
            let engine = QEngine::new().with_max_crossings(opts.max_crossings);
            match obstruction_check_with(&e.pd, &engine, opts.jones_max_crossings) {
                Ok((verdict, ev)) => row_for(e, verdict, ev),
                Err(err) => ReportRow {
                    name: e.name.clone(),
                    computed_det: None,
                    computed_deg_q: None,
                    breadth: None,
                    verdict: None,
                    mismatches: Vec::new(),
                    resource_bound: err.is_resource(),
                    error: Some(err.to_string()),
                },
            }
        })
        .collect()
}

fn row_for(e: &CatalogEntry, verdict: Verdict, ev: Evidence) -> ReportRow {
    let mut mismatches = Vec::new();
    if let Some(d) = e.expected_det {
        if d != ev.det {
            mismatches.push(format!("det: expected {d}, computed {}", ev.det));
        }
    }
    if let Some(g) = e.expected_deg_q {
        if g != ev.deg_q {
            mismatches.push(format!("deg Q: expected {g}, computed {}", ev.deg_q));
        }
    }
    ReportRow {
        name: e.name.clone(),
        computed_det: Some(ev.det),
        computed_deg_q: Some(ev.deg_q),
        breadth: Some(ev.breadth),
        verdict: Some(verdict),
        mismatches,
        error: None,
        resource_bound: false,
    }
}
