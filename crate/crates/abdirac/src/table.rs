//! Result tables with provenance headers, serialized as CSV (default) or
//! JSON with 17 significant digits so downstream plots and regression diffs
//! are lossless.

use crate::error::{Error, Result};
use serde::Serialize;

/// Provenance recorded at the top of every emitted table.
#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    /// The exact command line that produced the table.
    pub command: String,
    pub version: String,
    /// Unix timestamp (seconds). Honors SOURCE_DATE_EPOCH so identical
    /// command lines can produce byte-identical files.
    pub generated_unix: u64,
    /// Quadrature settings in effect (node counts etc.).
    pub quadrature: String,
}

impl Provenance {
    pub fn new(command: String, quadrature: String) -> Self {
        let generated_unix = std::env::var("SOURCE_DATE_EPOCH")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or_else(|| {
                std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0)
            });
        Provenance {
            command,
            version: env!("CARGO_PKG_VERSION").to_string(),
            generated_unix,
            quadrature,
        }
    }
}

/// A rectangular numeric table with named, unit-annotated columns and an
/// optional scalar block (named values that accompany the grid).
#[derive(Debug, Clone)]
pub struct ResultTable {
    pub provenance: Provenance,
    /// Column names with explicit unit annotations, e.g. `E*R`, `I*2piR`.
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    /// Scalar results emitted in the header (CSV) or a `scalars` object (JSON).
    pub scalars: Vec<(String, f64)>,
}

impl ResultTable {
    pub fn new(provenance: Provenance, columns: Vec<String>) -> Self {
        ResultTable {
            provenance,
            columns,
            rows: Vec::new(),
            scalars: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn push_scalar(&mut self, name: impl Into<String>, value: f64) {
        self.scalars.push((name.into(), value));
    }

    /// 17 significant digits: enough to round-trip any f64.
    fn fmt(x: f64) -> String {
        format!("{x:.16e}")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# command: {}\n", self.provenance.command));
        out.push_str(&format!("# version: {}\n", self.provenance.version));
        out.push_str(&format!(
            "# generated_unix: {}\n",
            self.provenance.generated_unix
        ));
        out.push_str(&format!("# quadrature: {}\n", self.provenance.quadrature));
        for (name, value) in &self.scalars {
            out.push_str(&format!("# {name}: {}\n", Self::fmt(*value)));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|&x| Self::fmt(x)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct JsonTable<'a> {
            provenance: &'a Provenance,
            scalars: std::collections::BTreeMap<&'a str, String>,
            columns: &'a [String],
            rows: Vec<Vec<String>>,
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&x| Self::fmt(x)).collect())
            .collect();
        let scalars = self
            .scalars
            .iter()
            .map(|(k, v)| (k.as_str(), Self::fmt(*v)))
            .collect();
        serde_json::to_string_pretty(&JsonTable {
            provenance: &self.provenance,
            scalars,
            columns: &self.columns,
            rows,
        })
        .expect("table serialization cannot fail")
            + "\n"
    }

    /// Parses the data section of a CSV produced by [`Self::to_csv`].
    pub fn parse_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
        let mut columns = Vec::new();
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if columns.is_empty() {
                columns = line.split(',').map(|s| s.to_string()).collect();
                continue;
            }
            let row: std::result::Result<Vec<f64>, _> =
                line.split(',').map(|s| s.trim().parse::<f64>()).collect();
            rows.push(row.map_err(|e| Error::usage(format!("bad CSV row {line:?}: {e}")))?);
        }
        if columns.is_empty() {
            return Err(Error::usage("CSV has no header row"));
        }
        Ok((columns, rows))
    }
}
