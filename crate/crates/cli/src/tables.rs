use bipart_core::partition::{degenerate_count, p2_theorem, p_euler};
use bipart_core::symbols::{enumerate_phi, family as family_of, phi_counts, singles_and_degree, upsilon};
use bipart_core::Symbol;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::output::{json_int, write_csv, write_json, write_line, write_text_table, Format};

pub fn count(out: &mut dyn std::io::Write, format: Format, name: &str, n: i64, value: BigInt) -> Result<(), String> {
    match format {
        Format::Text => write_line(out, value),
        Format::Json => write_json(out, &json!({ "n": n, name: json_int(&value) })),
        Format::Csv => write_csv(out, &["n", name], &[vec![n.to_string(), value.to_string()]]),
    }
}

pub const TABLE_HEADER: [&str; 6] = ["n", "p", "p2", "p_half", "phi_plus", "phi_minus"];

pub fn emit_table(out: &mut dyn std::io::Write, format: Format, max: u64) -> Result<(), String> {
    let rows: Vec<[BigInt; 6]> = (0..=max)
        .map(|n| {
            let counts = phi_counts(n);
            let n = n as i64;
            [BigInt::from(n), p_euler(n), p2_theorem(n), degenerate_count(n), counts.plus, counts.minus]
        })
        .collect();
    match format {
        Format::Json => {
            let records = rows
                .iter()
                .map(|row| {
                    let record: Map<String, Value> = TABLE_HEADER
                        .iter()
                        .zip(row)
                        .map(|(k, v)| (k.to_string(), json_int(v)))
                        .collect();
                    Value::Object(record)
                })
                .collect();
            write_json(out, &Value::Array(records))
        }
        Format::Csv | Format::Text => {
            let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect();
            if format == Format::Csv {
                write_csv(out, &TABLE_HEADER, &cells)
            } else {
                write_text_table(out, &TABLE_HEADER, &cells)
            }
        }
    }
}

const SYMBOL_HEADER: [&str; 6] = ["symbol", "rank", "defect", "bipartition", "special", "degree"];

pub fn enumerate_symbols(out: &mut dyn std::io::Write, format: Format, rank: u64, defect: i64) -> Result<(), String> {
    let rank = i64::try_from(rank).map_err(|_| format!("rank {rank} out of range"))?;
    let classes = enumerate_phi(rank, defect).map_err(|e| e.to_string())?;
    let records: Vec<(String, u64, i64, String, bool, Option<usize>)> = classes
        .iter()
        .map(|c| {
            let degree = singles_and_degree(c.canonical()).ok().map(|d| d.degree);
            (c.to_string(), c.rank(), c.defect(), upsilon(c).to_string(), c.is_special(), degree)
        })
        .collect();
    match format {
        Format::Json => {
            let values = records
                .iter()
                .map(|(s, r, d, b, sp, deg)| {
                    json!({"symbol": s, "rank": r, "defect": d, "bipartition": b, "special": sp, "degree": deg})
                })
                .collect();
            write_json(out, &Value::Array(values))
        }
        Format::Csv | Format::Text => {
            let cells: Vec<Vec<String>> = records
                .iter()
                .map(|(s, r, d, b, sp, deg)| {
                    vec![
                        s.clone(),
                        r.to_string(),
                        d.to_string(),
                        b.clone(),
                        sp.to_string(),
                        deg.map_or_else(|| "-".to_string(), |g| g.to_string()),
                    ]
                })
                .collect();
            if format == Format::Csv {
                write_csv(out, &SYMBOL_HEADER, &cells)
            } else {
                write_text_table(out, &SYMBOL_HEADER, &cells)
            }
        }
    }
}

pub fn family(out: &mut dyn std::io::Write, format: Format, symbol: &Symbol) -> Result<(), String> {
    let data = singles_and_degree(symbol).map_err(|e| e.to_string())?;
    let members = family_of(&data);
    match format {
        Format::Json => {
            let values: Vec<Value> = members
                .iter()
                .map(|m| {
                    json!({
                        "m": m.m_subset.to_string(),
                        "lambda": m.lambda.to_string(),
                        "rank": m.lambda.rank(),
                        "defect": m.lambda.defect(),
                    })
                })
                .collect();
            write_json(
                out,
                &json!({
                    "z": data.z.to_string(),
                    "singles": data.singles.to_string(),
                    "degree": data.degree,
                    "members": values,
                }),
            )
        }
        Format::Csv | Format::Text => {
            let header = ["m", "lambda", "rank", "defect"];
            let cells: Vec<Vec<String>> = members
                .iter()
                .map(|m| {
                    vec![
                        m.m_subset.to_string(),
                        m.lambda.to_string(),
                        m.lambda.rank().to_string(),
                        m.lambda.defect().to_string(),
                    ]
                })
                .collect();
            if format == Format::Csv {
                write_csv(out, &header, &cells)
            } else {
                write_line(out, format!("Z = {}  singles = {}  degree = {}", data.z, data.singles, data.degree))?;
                write_text_table(out, &header, &cells)
            }
        }
    }
}

pub fn counts(out: &mut dyn std::io::Write, format: Format, rank: u64) -> Result<(), String> {
    let counts = phi_counts(rank);
    let order = counts.defects_by_magnitude();
    match format {
        Format::Json => {
            let map: Map<String, Value> = order
                .iter()
                .map(|d| (d.to_string(), json_int(&counts.by_defect[d])))
                .collect();
            write_json(out, &Value::Object(map))
        }
        Format::Csv | Format::Text => {
            let cells: Vec<Vec<String>> = order
                .iter()
                .map(|d| vec![d.to_string(), counts.by_defect[d].to_string()])
                .collect();
            if format == Format::Csv {
                write_csv(out, &["defect", "count"], &cells)
            } else {
                write_text_table(out, &["defect", "count"], &cells)?;
                write_line(out, format!("plus {}  minus {}", counts.plus, counts.minus))
            }
        }
    }
}
