//! Rendering of command results as aligned tables, CSV, or canonical JSON.

use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// A command result: metadata plus a table of string cells. Numbers are
/// carried as decimal strings so no consumer loses precision.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: String,
    pub meta: Vec<(String, String)>,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Print only the single cell in table format.
    pub scalar: bool,
}

impl Report {
    pub fn new(command: &str, headers: &[&str]) -> Self {
        Report {
            command: command.to_string(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            ..Report::default()
        }
    }

    pub fn meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.push((key.to_string(), value.to_string()));
        self
    }

    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.rows.push(cells.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("command".into(), Value::String(self.command.clone()));
        for (k, v) in &self.meta {
            obj.insert(k.clone(), Value::String(v.clone()));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let cells = self
                    .headers
                    .iter()
                    .zip(row)
                    .map(|(h, c)| (h.clone(), Value::String(c.clone())))
                    .collect::<Map<_, _>>();
                Value::Object(cells)
            })
            .collect();
        obj.insert("rows".into(), Value::Array(rows));
        Value::Object(obj)
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                let text = serde_json::to_string_pretty(&self.to_json()).map_err(io::Error::other)?;
                writeln!(out, "{text}")
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.headers).map_err(io::Error::other)?;
                for row in &self.rows {
                    w.write_record(row).map_err(io::Error::other)?;
                }
                w.flush()
            }
            Format::Table => {
                if self.scalar && self.rows.len() == 1 && self.rows[0].len() == 1 {
                    return writeln!(out, "{}", self.rows[0][0]);
                }
                for (k, v) in &self.meta {
                    writeln!(out, "{k}: {v}")?;
                }
                let widths: Vec<usize> = (0..self.headers.len())
                    .map(|i| {
                        self.rows
                            .iter()
                            .filter_map(|r| r.get(i))
                            .map(|c| c.chars().count())
                            .chain([self.headers[i].chars().count()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: &[String]| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                writeln!(out, "{}", line(&self.headers))?;
                for row in &self.rows {
                    writeln!(out, "{}", line(row))?;
                }
                Ok(())
            }
        }
    }
}
