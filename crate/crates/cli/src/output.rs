//! Output formats for generated records.

use std::io::{self, Write};

use kgonal_core::intersect::IntersectionRecord;
use kgonal_core::oracle::CommonValue;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Aligned columns i, n, m, value with a header row.
    Table,
    /// One JSON object per line; every number is a decimal string.
    Jsonl,
    /// Sequence-archive b-file lines "index value", index = i + 1.
    Bfile,
}

// decimal strings keep values intact for consumers without bignum support
#[derive(Serialize)]
struct JsonRecord {
    k: String,
    i: String,
    value: String,
    m: String,
    n: String,
    a: String,
}

pub fn write_records(
    format: OutputFormat,
    records: &[IntersectionRecord],
    out: &mut impl Write,
) -> io::Result<()> {
    match format {
        OutputFormat::Table => write_table(records, out),
        OutputFormat::Jsonl => write_jsonl(records, out),
        OutputFormat::Bfile => write_bfile(records, out),
    }
}

fn write_table(records: &[IntersectionRecord], out: &mut impl Write) -> io::Result<()> {
    let header = ["i", "n", "m", "value"];
    let rows: Vec<[String; 4]> = records
        .iter()
        .map(|r| {
            [
                r.i.to_string(),
                r.n.to_string(),
                r.m.to_string(),
                r.value.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    writeln!(
        out,
        "{:>w0$}  {:>w1$}  {:>w2$}  {:>w3$}",
        header[0],
        header[1],
        header[2],
        header[3],
        w0 = widths[0],
        w1 = widths[1],
        w2 = widths[2],
        w3 = widths[3],
    )?;
    for row in &rows {
        writeln!(
            out,
            "{:>w0$}  {:>w1$}  {:>w2$}  {:>w3$}",
            row[0],
            row[1],
            row[2],
            row[3],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2],
            w3 = widths[3],
        )?;
    }
    Ok(())
}

fn write_jsonl(records: &[IntersectionRecord], out: &mut impl Write) -> io::Result<()> {
    for r in records {
        let line = serde_json::to_string(&JsonRecord {
            k: r.k.to_string(),
            i: r.i.to_string(),
            value: r.value.to_string(),
            m: r.m.to_string(),
            n: r.n.to_string(),
            a: r.a.to_string(),
        })?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn write_bfile(records: &[IntersectionRecord], out: &mut impl Write) -> io::Result<()> {
    for r in records {
        writeln!(out, "{} {}", r.i + 1, r.value)?;
    }
    Ok(())
}

pub fn describe(side: &Option<CommonValue>) -> String {
    match side {
        Some(c) => format!("n={}, m={}, value={}", c.n, c.m, c.value),
        None => "absent".to_string(),
    }
}
