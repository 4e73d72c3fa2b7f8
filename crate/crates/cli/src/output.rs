//! Tabular output in CSV or JSON.
//!
//! Floating-point values are written in scientific notation with 12
//! significant digits. The JSON encoding carries the same rounded values, so
//! parsing either format yields identical numbers.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde_json::{Map, Value};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// A single table value.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(u64),
    Bool(bool),
    Text(String),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as u64)
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::Int(x)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_owned())
    }
}

/// `x` with 12 significant digits, e.g. `7.40740740741e-5`.
pub fn sig12(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.11e}")
    } else if x.is_nan() {
        "nan".to_owned()
    } else if x > 0.0 {
        "inf".to_owned()
    } else {
        "-inf".to_owned()
    }
}

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Float(x) => sig12(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Float(x) => sig12(*x)
                .parse::<f64>()
                .ok()
                .and_then(serde_json::Number::from_f64)
                .map_or(Value::Null, Value::Number),
            Cell::Int(n) => Value::from(*n),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Self {
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::to_csv).collect();
            writeln!(out, "{}", line.join(",")).unwrap();
        }
        out
    }

    /// Array of objects keyed by header.
    pub fn to_json_value(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .headers
                        .iter()
                        .zip(row)
                        .map(|(h, c)| ((*h).to_owned(), c.to_json()))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => render_json(&self.to_json_value()),
        }
    }
}

pub fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Where rendered output goes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Destination {
    Stdout,
    File(PathBuf),
}

impl Destination {
    pub fn from_option(path: Option<&Path>) -> Self {
        path.map_or(Destination::Stdout, |p| Destination::File(p.to_owned()))
    }

    pub fn is_stdout(&self) -> bool {
        matches!(self, Destination::Stdout)
    }

    pub fn write(&self, contents: &str) -> Result<()> {
        match self {
            Destination::Stdout => {
                let mut out = std::io::stdout().lock();
                out.write_all(contents.as_bytes())
                    .and_then(|()| out.flush())
                    .map_err(CliError::Stdout)
            }
            Destination::File(path) => std::fs::write(path, contents).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(2.0 / 27000.0), "7.40740740741e-5");
        assert_eq!(sig12(0.012), "1.20000000000e-2");
        assert_eq!(sig12(0.0), "0.00000000000e0");
        assert_eq!(sig12(f64::NAN), "nan");
    }

    #[test]
    fn csv_and_json_agree() {
        let mut t = Table::new(vec!["x", "n", "flag", "label"]);
        t.push(vec![Cell::from(1.0 / 3.0), Cell::from(7usize), Cell::from(true), Cell::from("nodal")]);
        t.push(vec![Cell::from(f64::INFINITY), Cell::from(0usize), Cell::from(false), Cell::from("2")]);
        assert_eq!(t.to_csv(), "x,n,flag,label\n3.33333333333e-1,7,true,nodal\ninf,0,false,2\n");
        let json = t.to_json_value();
        let x = json[0]["x"].as_f64().unwrap();
        assert_eq!(x, "3.33333333333e-1".parse::<f64>().unwrap());
        assert_eq!(json[0]["n"], 7);
        assert_eq!(json[1]["x"], Value::Null);
        assert_eq!(json[0]["label"], "nodal");
    }
}
