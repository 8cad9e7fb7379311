//! Tabulated scan results and their CSV form.
//!
//! One scan = a header, numeric rows, and the metadata needed to reproduce
//! the run bit-for-bit.  CSV uses '.' decimals and scientific notation with
//! 17 significant digits, so emit → parse round-trips every f64 exactly.
//! Failed rows carry `NaN` sentinels.

use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub metadata: Vec<(String, String)>,
}

impl ScanResult {
    pub fn new(header: &[&str]) -> Self {
        ScanResult {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            metadata: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.header.len(), "row arity must match header");
        self.rows.push(row);
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.metadata.push((key.to_string(), value.to_string()));
    }

    /// CSV text; `with_comments` prefixes `# key = value` metadata lines.
    pub fn emit_csv(&self, with_comments: bool) -> String {
        let mut out = String::new();
        if with_comments {
            for (k, v) in &self.metadata {
                let _ = writeln!(out, "# {k} = {v}");
            }
        }
        let _ = writeln!(out, "{}", self.header.join(","));
        for row in &self.rows {
            let mut first = true;
            for v in row {
                if !first {
                    out.push(',');
                }
                first = false;
                if v.is_nan() {
                    out.push_str("NaN");
                } else {
                    let _ = write!(out, "{v:.16e}");
                }
            }
            out.push('\n');
        }
        out
    }

    /// Parses text produced by [`ScanResult::emit_csv`]; metadata comment
    /// lines are restored when present.
    pub fn parse_csv(text: &str) -> Result<ScanResult, String> {
        let mut metadata = Vec::new();
        let mut header: Option<Vec<String>> = None;
        let mut rows = Vec::new();
        for line in text.lines() {
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let (k, v) = rest
                    .split_once('=')
                    .ok_or_else(|| format!("bad metadata line: {line}"))?;
                metadata.push((k.trim().to_string(), v.trim().to_string()));
                continue;
            }
            match &header {
                None => header = Some(line.split(',').map(|s| s.to_string()).collect()),
                Some(h) => {
                    let row: Result<Vec<f64>, _> =
                        line.split(',').map(|s| s.trim().parse::<f64>()).collect();
                    let row = row.map_err(|e| format!("bad row `{line}`: {e}"))?;
                    if row.len() != h.len() {
                        return Err(format!("row arity {} != header {}", row.len(), h.len()));
                    }
                    rows.push(row);
                }
            }
        }
        Ok(ScanResult {
            header: header.ok_or("missing header")?,
            rows,
            metadata,
        })
    }
}

/// Evenly spaced grid, linear or logarithmic, endpoints included.
pub fn grid(from: f64, to: f64, steps: usize, log: bool) -> Result<Vec<f64>, String> {
    if steps == 0 {
        return Err("steps must be >= 1".into());
    }
    if !(from.is_finite() && to.is_finite()) {
        return Err("grid endpoints must be finite".into());
    }
    if log && !(from > 0.0 && to > 0.0) {
        return Err("log grid needs positive endpoints".into());
    }
    if steps == 1 {
        return Ok(vec![from]);
    }
    let n = steps as f64 - 1.0;
    Ok((0..steps)
        .map(|i| {
            let t = i as f64 / n;
            if log {
                (from.ln() + t * (to.ln() - from.ln())).exp()
            } else {
                from + t * (to - from)
            }
        })
        .collect())
}
