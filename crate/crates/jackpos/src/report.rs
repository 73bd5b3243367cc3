//! Sweep reports as JSON and as an aligned text table.

use std::fmt::Write as _;
use std::path::Path;

use crate::checks::{overall_status, CheckResult, Status};
use crate::error::{HarnessError, Result};

#[derive(Debug)]
pub struct Report {
    pub n_max: usize,
    pub jobs: usize,
    pub status: Status,
    pub elapsed: f64,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn new(n_max: usize, jobs: usize, elapsed: f64, results: Vec<CheckResult>) -> Self {
        Report { n_max, jobs, status: overall_status(&results), elapsed, results }
    }

    /// The results as a JSON list.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.results)?)
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()? + "\n")
            .map_err(|source| HarnessError::Io { path: path.to_path_buf(), source })
    }

    pub fn table(&self) -> String {
        let mut out = results_table(&self.results);
        let _ = writeln!(out, "overall: {} ({:.2}s)", self.status, self.elapsed);
        out
    }
}

/// One line per result: check, n, status, instance count, seconds, and the
/// witness or error if there is one.
pub fn results_table(results: &[CheckResult]) -> String {
    let rows: Vec<[String; 6]> = results
        .iter()
        .map(|r| {
            let note = match (&r.witness, &r.error) {
                (Some(w), _) => w.to_string(),
                (None, Some(e)) => e.clone(),
                (None, None) => String::new(),
            };
            [
                r.check_id.clone(),
                r.params.get("n").cloned().unwrap_or_default(),
                r.status.to_string(),
                r.counts.to_string(),
                format!("{:.3}", r.elapsed),
                note,
            ]
        })
        .collect();
    let header = ["check", "n", "status", "count", "secs", "witness"].map(String::from);
    let mut width = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in width.iter_mut().zip(row).take(5) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let line = format!(
            "{:<w0$}  {:>w1$}  {:<w2$}  {:>w3$}  {:>w4$}  {}",
            row[0],
            row[1],
            row[2],
            row[3],
            row[4],
            row[5],
            w0 = width[0],
            w1 = width[1],
            w2 = width[2],
            w3 = width[3],
            w4 = width[4],
        );
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::{CheckId, Harness, Params};

    #[test]
    fn table_columns_line_up() {
        let h = Harness::default();
        let results = vec![
            h.run_check(CheckId::T3Qyt, &Params::new(3)),
            h.run_check(CheckId::C1Positivity, &Params::new(5)),
            h.run_check(CheckId::C7Exact, &Params::new(9)),
        ];
        let report = Report::new(3, 1, 0.0, results);
        assert_eq!(report.status, Status::Error);
        let table = report.table();
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 5);
        let col = lines[0].find("status").unwrap();
        for l in &lines[1..4] {
            assert!(l[col..].starts_with("verified") || l[col..].starts_with("error"), "{l}");
        }
        let json: serde_json::Value = serde_json::from_str(&report.to_json().unwrap()).unwrap();
        assert_eq!(json.as_array().unwrap().len(), 3);
    }
}
