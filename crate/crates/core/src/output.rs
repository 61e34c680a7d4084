//! Plain, JSON and CSV renderings. Integers in JSON are decimal strings so
//! that no consumer truncates them.

use std::fmt;
use std::io::IsTerminal;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::InvalidArgument(format!("unknown format `{other}`"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::from(
        m.to_rows()
            .iter()
            .map(|row| Value::from(strings(row)))
            .collect::<Vec<_>>(),
    )
}

fn matrix_csv(m: &IntMatrix) -> String {
    m.to_rows()
        .iter()
        .map(|row| strings(row).join(","))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Compact JSON. Re-serialising the parsed text reproduces it byte for byte.
pub fn to_json(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialise")
}

pub fn render_term(r: u32, n: i64, value: &BigInt, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain | OutputFormat::Csv => value.to_string(),
        OutputFormat::Json => to_json(&json!({"r": r, "n": n, "value": value.to_string()})),
    }
}

pub fn render_sequence(r: u32, from: i64, values: &[BigInt], format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => strings(values).join("\n"),
        OutputFormat::Csv => values
            .iter()
            .zip(from..)
            .map(|(v, n)| format!("{n},{v}"))
            .collect::<Vec<_>>()
            .join("\n"),
        OutputFormat::Json => to_json(&json!({
            "r": r,
            "from": from,
            "to": from + values.len() as i64 - 1,
            "values": strings(values),
        })),
    }
}

/// Renders a matrix; `meta` fields lead the JSON object.
pub fn render_matrix(meta: Value, m: &IntMatrix, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => m.to_string(),
        OutputFormat::Csv => matrix_csv(m),
        OutputFormat::Json => {
            let mut obj = match meta {
                Value::Object(map) => map,
                _ => serde_json::Map::new(),
            };
            obj.insert("matrix".into(), matrix_json(m));
            to_json(&Value::Object(obj))
        }
    }
}

/// Colour only on a terminal, and never when `NO_COLOR` is set.
pub fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stdout().is_terminal()
}

pub fn paint(text: &str, ansi: &str, color: bool) -> String {
    if color {
        format!("\x1b[{ansi}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}
