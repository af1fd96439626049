//! Tables, CSV emission and run manifests.
//!
//! Reals are written with 17 significant digits so every value round-trips.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::seasum::{VPConfig, VPResultRow};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Real(f64),
    Int(i64),
    Text(String),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Real(x)
    }
}

impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::Int(x)
    }
}

impl From<u32> for Cell {
    fn from(x: u32) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<i32> for Cell {
    fn from(x: i32) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_string())
    }
}

impl From<String> for Cell {
    fn from(x: String) -> Self {
        Cell::Text(x)
    }
}

impl Cell {
    pub fn render(&self) -> String {
        match self {
            Cell::Real(x) => fmt_real(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

/// 17 significant digits, `nan`/`inf` spelled out.
pub fn fmt_real(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

/// A named CSV table.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width for table {}", self.name);
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(
            self.rows
                .iter()
                .map(|row| match &row[j] {
                    Cell::Real(x) => *x,
                    Cell::Int(i) => *i as f64,
                    Cell::Text(_) => f64::NAN,
                })
                .collect(),
        )
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns).map_err(csv_err)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render)).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_bytes(&self) -> Result<Vec<u8>> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(buf)
    }

    pub fn save(&self, dir: &Path) -> Result<std::path::PathBuf> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("{}.csv", self.name));
        self.write_csv(std::fs::File::create(&path)?)?;
        Ok(path)
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

pub const VPSUM_COLUMNS: [&str; 10] = [
    "r",
    "v_sum",
    "v_uehling",
    "rho_sum",
    "rel_diff",
    "err_est",
    "kappa_max_used",
    "p_max",
    "n_p",
    "runtime_s",
];

/// Sea-sum rows as a table. Wall-clock times vary between runs, so they
/// are written only when `with_runtime` is set (0 otherwise) and always go
/// to the manifest.
pub fn vpsum_table(rows: &[VPResultRow], with_runtime: bool) -> Table {
    let mut t = Table::new("vpsum", &VPSUM_COLUMNS);
    for row in rows {
        t.push(vec![
            row.r.into(),
            row.v_sum.into(),
            row.v_uehling.into(),
            row.rho_sum.into(),
            row.rel_diff.into(),
            row.err_est.into(),
            row.kappa_max_used.into(),
            row.p_max.into(),
            row.n_p.into(),
            (if with_runtime { row.runtime_s } else { 0.0 }).into(),
        ]);
    }
    t
}

#[derive(Debug, Clone, Serialize)]
pub struct RowRecord {
    pub r: f64,
    pub status: String,
    pub runtime_s: f64,
    pub err_kappa: f64,
    pub err_grid: f64,
    pub err_tail: f64,
    pub tail_pairs: usize,
    pub tail_fallback: bool,
    pub tail_a: f64,
    pub kappa_unconverged: usize,
    pub warnings: Vec<String>,
}

impl From<&VPResultRow> for RowRecord {
    fn from(row: &VPResultRow) -> Self {
        let d = &row.diagnostics;
        RowRecord {
            r: row.r,
            status: row.status.clone(),
            runtime_s: row.runtime_s,
            err_kappa: d.err_kappa,
            err_grid: d.err_grid,
            err_tail: d.err_tail,
            tail_pairs: d.tail_pairs,
            tail_fallback: d.tail_fallback,
            tail_a: d.tail_a,
            kappa_unconverged: d.kappa_unconverged,
            warnings: d.warnings.clone(),
        }
    }
}

/// Everything needed to reproduce a run.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub config: Option<VPConfig>,
    pub workers: usize,
    pub outputs: Vec<String>,
    pub rows: Vec<RowRecord>,
    pub wall_clock_s: f64,
    pub notes: Vec<String>,
}

impl RunManifest {
    pub fn new(command: &str, workers: usize) -> Self {
        RunManifest {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config: None,
            workers,
            outputs: Vec::new(),
            rows: Vec::new(),
            wall_clock_s: 0.0,
            notes: Vec::new(),
        }
    }

    pub fn save(&self, dir: &Path) -> Result<std::path::PathBuf> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join("manifest.json");
        let text = serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))?;
        std::fs::write(&path, text + "\n")?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, f64::MIN_POSITIVE, f64::MAX] {
            let s = fmt_real(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
        assert_eq!(fmt_real(f64::NAN), "nan");
    }

    #[test]
    fn csv_has_header_and_fixed_width() {
        let mut t = Table::new("t", &["a", "b", "c"]);
        t.push(vec![1.5.into(), 2i64.into(), "x,y".into()]);
        let text = String::from_utf8(t.to_csv_bytes().unwrap()).unwrap();
        assert_eq!(text, "a,b,c\n1.5000000000000000e0,2,\"x,y\"\n");
        assert_eq!(t.column("a").unwrap(), vec![1.5]);
    }
}
