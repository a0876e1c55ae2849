use std::io::Write;
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// An exact JSON number (serde_json keeps the digits verbatim).
pub fn json_int(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integers are valid JSON numbers"))
}

pub fn write_json(out: &mut dyn Write, value: &Value) -> Result<(), String> {
    let text = serde_json::to_string(value).map_err(|e| e.to_string())?;
    writeln!(out, "{text}").map_err(|e| e.to_string())
}

pub fn write_line(out: &mut dyn Write, line: impl std::fmt::Display) -> Result<(), String> {
    writeln!(out, "{line}").map_err(|e| e.to_string())
}

/// Rows of already-formatted cells; CSV cells here never need quoting
/// except symbol text, which contains commas.
pub fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<(), String> {
    let quote = |c: &str| {
        if c.contains([',', '"']) {
            format!("\"{}\"", c.replace('"', "\"\""))
        } else {
            c.to_string()
        }
    };
    write_line(out, header.join(","))?;
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| quote(c)).collect();
        write_line(out, cells.join(","))?;
    }
    Ok(())
}

pub fn write_text_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<(), String> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let render = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    write_line(out, render(header.to_vec()))?;
    for row in rows {
        write_line(out, render(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}
