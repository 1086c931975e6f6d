//! Rendering command results as JSON, CSV or a fixed-width table.

use anyhow::Result;
use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// A command result. `json` is the full structured value; `rows` is the
/// flattened view used for CSV and tables.
#[derive(Clone, Debug, PartialEq)]
pub enum Rendered {
    /// One value, printed bare in table mode.
    Scalar { text: String, json: Value },
    Rows { headers: Vec<String>, rows: Vec<Vec<String>>, json: Value, sort: bool },
}

impl Rendered {
    pub fn scalar(text: impl Into<String>, json: Value) -> Self {
        Rendered::Scalar { text: text.into(), json }
    }

    pub fn rows(headers: &[&str], rows: Vec<Vec<String>>, json: Value) -> Self {
        Rendered::Rows { headers: headers.iter().map(|h| h.to_string()).collect(), rows, json, sort: true }
    }

    /// Rows whose order carries meaning, such as `n` in a sequence.
    pub fn ordered_rows(headers: &[&str], rows: Vec<Vec<String>>, json: Value) -> Self {
        Rendered::Rows { headers: headers.iter().map(|h| h.to_string()).collect(), rows, json, sort: false }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match (self, format) {
            (Rendered::Scalar { json, .. } | Rendered::Rows { json, .. }, Format::Json) => {
                let mut s = serde_json::to_string_pretty(json)?;
                s.push('\n');
                s
            }
            (Rendered::Scalar { text, .. }, Format::Table) => format!("{text}\n"),
            (Rendered::Scalar { text, .. }, Format::Csv) => csv_text(&["value".to_string()], &[vec![text.clone()]])?,
            (Rendered::Rows { headers, rows, .. }, Format::Csv) => csv_text(headers, rows)?,
            (Rendered::Rows { headers, rows, sort, .. }, Format::Table) => {
                let mut rows = rows.clone();
                if *sort {
                    rows.sort();
                }
                table(headers, &rows)
            }
        })
    }
}

fn csv_text(headers: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Left-aligned columns separated by two spaces, with a header rule.
pub fn table(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let mut s = padded.join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(headers);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&line(&rule));
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn formats() {
        let r = Rendered::rows(&["perm", "n"], vec![vec!["21".into(), "2".into()], vec!["1".into(), "1".into()]], json!([]));
        assert_eq!(r.render(Format::Table).unwrap(), "perm  n\n----  -\n1     1\n21    2\n");
        assert_eq!(r.render(Format::Csv).unwrap(), "perm,n\n21,2\n1,1\n");
        let s = Rendered::scalar("34125", json!({"output": "34125"}));
        assert_eq!(s.render(Format::Table).unwrap(), "34125\n");
        assert!(s.render(Format::Json).unwrap().contains("\"output\": \"34125\""));
    }
}
