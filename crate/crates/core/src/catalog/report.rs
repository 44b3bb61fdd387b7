use std::fmt::Write;

use super::ReportRow;
use crate::error::{Error, Result};

/// Plain-text table. The breadth column is shown for comparison with the
/// determinant only; it plays no part in the verdict.
pub fn render_table(rows: &[ReportRow]) -> String {
    let w = rows.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
    let mut out = String::new();
    writeln!(out, "{:<w$}  {:>5}  {:>5}  {:>8}  {:<22}  notes", "name", "det", "deg Q", "breadth*", "verdict").unwrap();
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    for r in rows {
        let b =
            r.breadth.map(
                |b| {
                    if *b.denom() == 1 {
                        b.numer().to_string()
                    } else {
                        format!("{}/{}", b.numer(), b.denom())
                    }
                },
            );
        let notes = match &r.error {
            Some(e) => format!("error: {e}"),
            None => r.mismatches.join("; "),
        };
        writeln!(
            out,
            "{:<w$}  {:>5}  {:>5}  {:>8}  {:<22}  {}",
            r.name,
            opt(r.computed_det.map(|d| d.to_string())),
            opt(r.computed_deg_q.map(|d| d.to_string())),
            opt(b),
            opt(r.verdict.map(|v| v.to_string())),
            notes
        )
        .unwrap();
    }
    out.push_str("* breadth of the Jones polynomial, informational only\n");
    out
}

pub fn render_json(rows: &[ReportRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize")
}

pub fn rows_from_json(text: &str) -> Result<Vec<ReportRow>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("report JSON: {e}")))
}
