use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

/// Everything a command produces. `results` feeds the JSON form, `columns`
/// and `rows` the tabular forms, and `text` the plain form; when `text` is
/// empty the table is printed with aligned columns instead.
pub struct Report {
    pub command: &'static str,
    pub config: Value,
    pub results: Vec<Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &'static str, config: Value) -> Self {
        Report {
            command,
            config,
            results: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            text: String::new(),
            pass: true,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text if !self.text.is_empty() => self.text.clone(),
            Format::Text => aligned(&self.columns, &self.rows),
            Format::Json => {
                let doc = json!({
                    "command": self.command,
                    "config": self.config,
                    "results": self.results,
                    "pass": self.pass,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("values serialise");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).expect("in-memory write");
                for row in &self.rows {
                    w.write_record(row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
            }
            Format::Markdown => markdown(&self.columns, &self.rows),
        }
    }
}

fn aligned(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", padded.join("  ").trim_end()).expect("string write");
    };
    line(columns.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn markdown(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    writeln!(out, "| {} |", columns.join(" | ")).expect("string write");
    writeln!(out, "|{}", " --- |".repeat(columns.len())).expect("string write");
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| c.replace('|', "\\|")).collect();
        writeln!(out, "| {} |", cells.join(" | ")).expect("string write");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("count", json!({"n": 3}));
        r.columns = vec!["method", "value"];
        r.rows = vec![vec!["dp".into(), "2".into()], vec!["listing".into(), "2".into()]];
        r.results = vec![json!({"method": "dp", "value": 2})];
        r
    }

    #[test]
    fn tabular_forms() {
        let r = sample();
        assert_eq!(r.render(Format::Csv), "method,value\ndp,2\nlisting,2\n");
        assert_eq!(
            r.render(Format::Markdown),
            "| method | value |\n| --- | --- |\n| dp | 2 |\n| listing | 2 |\n"
        );
        assert_eq!(r.render(Format::Text), "method   value\ndp       2\nlisting  2\n");
    }

    #[test]
    fn json_schema() {
        let v: Value = serde_json::from_str(&sample().render(Format::Json)).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["command", "config", "results", "pass"]);
        assert_eq!(v["pass"], Value::Bool(true));
    }
}
