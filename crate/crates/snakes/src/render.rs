//! Rendering of command results as JSON, CSV or plain text.

use std::fmt::Write as _;
use std::io::Write;

use serde_json::Value;
use snakes_core::{Character, EpsInt, PathA, PathB};

use crate::error::CliError;
use crate::json;
use crate::report::Report;
use crate::suite::CriterionResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// A flat table, written as CSV or aligned text.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows
            .push(row.into_iter().map(|c| c.to_string()).collect());
    }
}

/// The result of a command before formatting.
#[derive(Debug, Clone)]
pub enum Doc {
    Character(Character),
    PathsA(Vec<PathA>),
    PathsB(Vec<PathB>),
    Report(Box<Report>),
    Suite(Vec<CriterionResult>),
    /// Free-form JSON with a table view for CSV and text output.
    Other {
        json: Value,
        table: Table,
        holds: bool,
    },
}

impl Doc {
    /// False when the document reports a failed verification.
    pub fn verified(&self) -> bool {
        match self {
            Doc::Report(r) => r.holds,
            Doc::Suite(cs) => cs.iter().all(|c| c.holds),
            Doc::Other { holds, .. } => *holds,
            _ => true,
        }
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            Format::Json => {
                let mut text = String::new();
                write_json(&self.to_json(), 0, &mut text);
                text.push('\n');
                out.write_all(text.as_bytes())?;
            }
            Format::Csv => write_csv(&self.to_table(), out)?,
            Format::Pretty => out.write_all(self.to_text().as_bytes())?,
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        match self {
            Doc::Character(c) => json::character(c),
            Doc::PathsA(ps) => Value::Array(ps.iter().map(json::path_a).collect()),
            Doc::PathsB(ps) => Value::Array(ps.iter().map(json::path_b).collect()),
            Doc::Report(r) => serde_json::to_value(r).expect("reports serialize"),
            Doc::Suite(cs) => serde_json::json!({ "criteria": cs }),
            Doc::Other { json, .. } => json.clone(),
        }
    }

    fn to_table(&self) -> Table {
        match self {
            Doc::Character(c) => character_table(c),
            Doc::PathsA(ps) => {
                let m = ps.first().map_or(0, |p| p.m());
                let mut t = Table::new((0..=m).map(|x| format!("y{x}")));
                for p in ps {
                    t.push(p.ys());
                }
                t
            }
            Doc::PathsB(ps) => {
                let n = ps.first().map_or(0, |p| p.n());
                let mut t = Table::new(b_path_header(n));
                for p in ps {
                    t.push(b_path_row(p));
                }
                t
            }
            Doc::Report(r) => report_table(r),
            Doc::Suite(cs) => {
                let mut t = Table::new([
                    "criterion",
                    "theorem",
                    "params",
                    "holds",
                    "equal",
                    "lhs_mass",
                    "rhs_mass",
                ]);
                for c in cs {
                    for r in &c.records {
                        t.push([
                            c.id.to_string(),
                            r.theorem.to_string(),
                            r.params.to_string(),
                            r.holds.to_string(),
                            r.equal.to_string(),
                            r.lhs_mass.to_string(),
                            r.rhs_mass.to_string(),
                        ]);
                    }
                }
                t
            }
            Doc::Other { table, .. } => table.clone(),
        }
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        match self {
            Doc::Character(c) => {
                let _ = writeln!(
                    s,
                    "{} character of rank {}, {} weights, mass {}",
                    c.family().tag(),
                    c.family().rank(),
                    c.len(),
                    c.mass()
                );
                for (k, m) in c.iter() {
                    let _ = writeln!(s, "  {m:>6}  {k:?}");
                }
            }
            Doc::Report(r) => {
                let verdict = if r.holds { "HOLDS" } else { "FAILS" };
                let _ = writeln!(s, "{}: {verdict}", r.theorem);
                let _ = writeln!(s, "  params   {}", r.params);
                let _ = writeln!(s, "  equal    {}", r.equal);
                let _ = writeln!(s, "  lhs mass {}", r.lhs_mass);
                let _ = writeln!(s, "  rhs mass {}", r.rhs_mass);
                if !r.difference.is_empty() {
                    let _ = writeln!(s, "  difference terms {}", r.difference.len());
                }
                if r.details.as_object().is_some_and(|o| !o.is_empty()) {
                    let _ = writeln!(s, "  details  {}", r.details);
                }
            }
            Doc::Suite(cs) => {
                for c in cs {
                    let verdict = if c.holds { "PASS" } else { "FAIL" };
                    let _ = writeln!(
                        s,
                        "{verdict} {:>2} {}/{} {}",
                        c.id, c.passed, c.checks, c.title
                    );
                }
            }
            _ => {
                let t = self.to_table();
                let widths: Vec<usize> = (0..t.header.len())
                    .map(|j| {
                        t.rows
                            .iter()
                            .map(|r| r[j].len())
                            .chain([t.header[j].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                for row in std::iter::once(&t.header).chain(&t.rows) {
                    let cells: Vec<String> = row
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect();
                    let _ = writeln!(s, "{}", cells.join("  ").trim_end());
                }
            }
        }
        s
    }
}

pub fn character_table(c: &Character) -> Table {
    let mut t = Table::new(
        (1..=c.family().rank())
            .map(|j| format!("w{j}"))
            .chain(["mult".to_string()]),
    );
    for (k, m) in c.iter() {
        t.push(k.iter().map(ToString::to_string).chain([m.to_string()]));
    }
    t
}

pub fn b_path_header(n: usize) -> Vec<String> {
    let side = |c: char| {
        (0..n)
            .map(move |j| format!("{c}{j}"))
            .chain([format!("{c}{n}_a"), format!("{c}{n}_b")])
    };
    side('y').chain(side('z')).collect()
}

pub fn b_path_row(p: &PathB) -> Vec<String> {
    let side = |xs: &[EpsInt]| -> Vec<String> {
        let n = xs.len() - 1;
        xs[..n]
            .iter()
            .map(|x| x.a.to_string())
            .chain([xs[n].a.to_string(), xs[n].b.to_string()])
            .collect()
    };
    let mut row = side(p.ys());
    row.extend(side(p.zs()));
    row
}

fn report_table(r: &Report) -> Table {
    let mut t = Table::new([
        "theorem", "params", "holds", "equal", "lhs_mass", "rhs_mass",
    ]);
    t.push([
        r.theorem.to_string(),
        r.params.to_string(),
        r.holds.to_string(),
        r.equal.to_string(),
        r.lhs_mass.to_string(),
        r.rhs_mass.to_string(),
    ]);
    t
}

/// Widest single-line rendering of an array or object before it is broken up.
const INLINE_WIDTH: usize = 120;

/// Indented JSON that keeps short arrays and objects on one line.
pub fn write_json(v: &Value, indent: usize, out: &mut String) {
    let compact = v.to_string();
    if compact.len() + indent <= INLINE_WIDTH {
        out.push_str(&compact);
        return;
    }
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) => {
            out.push_str("[\n");
            for (j, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_json(item, indent + 1, out);
                out.push_str(if j + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (j, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_json(item, indent + 1, out);
                out.push_str(if j + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => out.push_str(&compact),
    }
}

fn write_csv(t: &Table, out: &mut dyn Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&t.header)?;
    for row in &t.rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn short_values_stay_inline() {
        let mut s = String::new();
        write_json(&json!({ "a": [1, 2], "b": { "c": true } }), 0, &mut s);
        assert_eq!(s, r#"{"a":[1,2],"b":{"c":true}}"#);
    }

    #[test]
    fn long_values_break_and_reparse() {
        let v = json!({ "rows": (0..60).map(|j| json!([j, j * j])).collect::<Vec<_>>() });
        let mut s = String::new();
        write_json(&v, 0, &mut s);
        assert!(s.lines().count() > 1);
        assert_eq!(serde_json::from_str::<Value>(&s).unwrap(), v);
    }
}
