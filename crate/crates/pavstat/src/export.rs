//! Coefficient tables for `pavstat export`.
//!
//! CSV: a header row, then one row per entry (`n,k,value`, or `n,value`
//! for the Catalan sequence). JSON: an array of objects with the same keys.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use anyhow::Context;
use num_bigint::BigInt;
use pavstat_core::closed_forms::{catalan_numbers, narayana, s_coeff};
use pavstat_core::statpoly::StatTables;
use serde_json::{Map, Value};

use crate::config::Config;
use crate::render::big_json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    /// C_n for 0 ≤ n ≤ N
    Catalan,
    /// N_{n,k} for 1 ≤ k ≤ n ≤ N
    Narayana,
    /// s_{n,k} for 1 ≤ k ≤ n ≤ N
    #[value(name = "s-nk", alias = "s_nk")]
    SNk,
    /// A_{n,k}(1) for 0 ≤ k < n ≤ N, by enumeration
    Ank,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<BigInt>>,
}

impl Table {
    pub fn build(kind: TableKind, max_n: usize, config: &Config) -> anyhow::Result<Table> {
        let nk = vec!["n", "k", "value"];
        let triangle = |f: &dyn Fn(i64, i64) -> BigInt| {
            (1..=max_n as i64)
                .flat_map(|n| (1..=n).map(move |k| (n, k)))
                .map(|(n, k)| vec![n.into(), k.into(), f(n, k)])
                .collect()
        };
        Ok(match kind {
            TableKind::Catalan => Table {
                columns: vec!["n", "value"],
                rows: catalan_numbers(max_n)
                    .into_iter()
                    .enumerate()
                    .map(|(n, c)| vec![n.into(), c])
                    .collect(),
            },
            TableKind::Narayana => Table {
                columns: nk,
                rows: triangle(&narayana),
            },
            TableKind::SNk => Table {
                columns: nk,
                rows: triangle(&s_coeff),
            },
            TableKind::Ank => {
                config.admit(max_n)?;
                let mut rows = Vec::new();
                for n in 1..=max_n {
                    let tables = StatTables::compute(n);
                    for k in 0..n {
                        rows.push(vec![
                            n.into(),
                            k.into(),
                            tables.a_poly(k as u32).coeff_sum(),
                        ]);
                    }
                }
                Table { columns: nk, rows }
            }
        })
    }

    pub fn write_csv(&self, out: impl Write) -> anyhow::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(ToString::to_string))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| (c.to_string(), big_json(v)))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn write_json(&self, mut out: impl Write) -> anyhow::Result<()> {
        serde_json::to_writer_pretty(&mut out, &self.to_json())?;
        writeln!(out)?;
        Ok(())
    }

    pub fn write(&self, format: Format, out: impl Write) -> anyhow::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }
}

/// Writes to `path`, or to stdout when `path` is `-`.
pub fn export(table: &Table, format: Format, path: &Path) -> anyhow::Result<()> {
    if path == Path::new("-") {
        return table.write(format, io::stdout().lock());
    }
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    table
        .write(format, io::BufWriter::new(file))
        .with_context(|| format!("cannot write {}", path.display()))
}
