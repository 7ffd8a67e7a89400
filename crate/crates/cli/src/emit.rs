//! Rendering of command results in the three output formats.

use std::io::Write;

use serde::Serialize;

use crate::args::Format;

pub type CsvWriter<'a> = csv::Writer<&'a mut dyn Write>;

/// A command result. JSON is the stable interface; CSV flattens the main
/// table of the result; pretty output is for reading only.
pub trait Emission {
    fn json(&self) -> serde_json::Result<String>;
    fn csv(&self, w: &mut CsvWriter<'_>) -> csv::Result<()>;
    fn pretty(&self) -> String;

    fn write(&self, format: Format, out: &mut dyn Write) -> anyhow::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", self.json()?)?,
            Format::Pretty => write!(out, "{}", self.pretty())?,
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                self.csv(&mut w)?;
                w.flush()?;
            }
        }
        Ok(())
    }
}

pub fn to_json<T: Serialize>(v: &T) -> serde_json::Result<String> {
    serde_json::to_string_pretty(v)
}

/// A real value: an exact string (`"-3/2"`) in exact mode, a number otherwise.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Exact(String),
    Float(f64),
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Exact(s) => f.write_str(s),
            Value::Float(v) => write!(f, "{v}"),
        }
    }
}
