//! Sequence file formats.

use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SequenceFormat {
    /// Aligned columns for reading.
    Table,
    /// `n,count` header then one row per n.
    #[default]
    Csv,
    /// `[{"n":…,"count":…},…]`
    Json,
    /// OEIS b-file: `n count` per line, offset equal to the first n.
    Bfile,
}

impl FromStr for SequenceFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "table" => Ok(Self::Table),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "bfile" | "b-file" => Ok(Self::Bfile),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Serialize)]
struct Row {
    n: usize,
    count: u64,
}

pub fn write_sequence(
    rows: &[(usize, u64)],
    format: SequenceFormat,
    out: &mut dyn Write,
) -> io::Result<()> {
    match format {
        SequenceFormat::Table => {
            writeln!(out, "{:>4}  {:>12}", "n", "count")?;
            for (n, c) in rows {
                writeln!(out, "{n:>4}  {c:>12}")?;
            }
        }
        SequenceFormat::Csv => {
            writeln!(out, "n,count")?;
            for (n, c) in rows {
                writeln!(out, "{n},{c}")?;
            }
        }
        SequenceFormat::Json => {
            let rows: Vec<Row> = rows.iter().map(|&(n, count)| Row { n, count }).collect();
            serde_json::to_writer(&mut *out, &rows)?;
            writeln!(out)?;
        }
        SequenceFormat::Bfile => {
            for (n, c) in rows {
                writeln!(out, "{n} {c}")?;
            }
        }
    }
    Ok(())
}
