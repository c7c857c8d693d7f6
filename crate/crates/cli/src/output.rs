use crate::config::Format;
use serde_json::{json, Value};
use std::collections::BTreeMap;

pub const TOOL: &str = "qhydro";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::Int(x)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Text(x.to_string())
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

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(x: Option<T>) -> Self {
        x.map(Into::into).unwrap_or(Cell::Empty)
    }
}

/// 17 significant digits round-trip every double.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{x:.16e}")
    }
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => fmt_num(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => quote(s),
            Cell::Empty => String::new(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// What an experiment produced: a JSON result, the CSV view of it, and the
/// number of rows that failed numerically.
#[derive(Clone, Debug)]
pub struct Artifact {
    pub result: Value,
    pub table: Table,
    pub failures: usize,
    pub default_format: Format,
}

impl Artifact {
    pub fn json(result: Value, table: Table) -> Self {
        Artifact { result, table, failures: 0, default_format: Format::Json }
    }

    pub fn csv(result: Value, table: Table) -> Self {
        Artifact { result, table, failures: 0, default_format: Format::Csv }
    }

    pub fn with_failures(mut self, n: usize) -> Self {
        self.failures = n;
        self
    }
}

/// The resolved configuration as embedded in every report.
pub fn config_value(experiment: &str, family: Option<&str>, format: Format, constants: &str, threads: usize, params: &BTreeMap<String, String>) -> Value {
    json!({
        "experiment": experiment,
        "family": family,
        "format": format.name(),
        "constants": constants,
        "threads": threads,
        "params": params,
    })
}

pub fn render_json(config: &Value, status: &str, result: Option<&Value>, error: Option<(&str, &str)>) -> String {
    let mut doc = json!({ "tool": TOOL, "version": VERSION, "config": config, "status": status });
    if let Some(r) = result {
        doc["result"] = r.clone();
    }
    if let Some((kind, msg)) = error {
        doc["error"] = json!({ "kind": kind, "message": msg });
    }
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_csv(config: &Value, table: &Table, error: Option<(&str, &str)>) -> String {
    let mut s = format!("# {TOOL} {VERSION}\n# config: {}\n", serde_json::to_string(config).expect("config serializes"));
    if let Some((kind, msg)) = error {
        s.push_str(&format!("# error: {kind}: {}\n", msg.replace('\n', " ")));
    }
    s.push_str(&table.header.iter().map(|h| quote(h)).collect::<Vec<_>>().join(","));
    s.push('\n');
    for row in &table.rows {
        s.push_str(&row.iter().map(Cell::csv).collect::<Vec<_>>().join(","));
        s.push('\n');
    }
    s
}
