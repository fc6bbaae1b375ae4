use anyhow::{bail, Result};
use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A header and string cells, for commands whose output is a table.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// What a subcommand computed, ready to render in any supported format.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub table: Option<Table>,
    /// The computation finished and its answer is "no".
    pub negative: bool,
}

impl Report {
    pub fn new(value: impl Serialize, text: impl Into<String>) -> Result<Self> {
        Ok(Report { json: serde_json::to_value(value)?, text: text.into(), table: None, negative: false })
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn negative_if(mut self, no: bool) -> Self {
        self.negative = no;
        self
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.json)? + "\n"),
            Format::Text => Ok(if self.text.ends_with('\n') { self.text.clone() } else { format!("{}\n", self.text) }),
            Format::Csv => {
                let Some(table) = &self.table else {
                    bail!(crate::UsageError("csv output is only available for tabular commands".into()));
                };
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&table.header)?;
                for row in &table.rows {
                    w.write_record(row)?;
                }
                Ok(String::from_utf8(w.into_inner()?)?)
            }
        }
    }
}

/// Integers as JSON numbers when they fit in `i64`, decimal strings otherwise.
pub fn int(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}
