use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use threecore::counts::CoreCountRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Jsonl,
}

/// Serialized form of one count. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub kind: String,
    pub n: u64,
    pub value: String,
    pub method: String,
}

impl From<&CoreCountRecord> for OutputRecord {
    fn from(r: &CoreCountRecord) -> Self {
        Self {
            kind: r.kind.label().to_string(),
            n: r.n,
            value: r.value.to_string(),
            method: r.method.label().to_string(),
        }
    }
}

pub const CSV_HEADER: &str = "kind,n,value,method";

pub fn write_records(
    out: &mut impl Write,
    records: &[CoreCountRecord],
    format: Format,
    header: bool,
) -> io::Result<()> {
    if format == Format::Csv && header {
        writeln!(out, "{CSV_HEADER}")?;
    }
    for r in records {
        let rec = OutputRecord::from(r);
        match format {
            Format::Csv => writeln!(out, "{},{},{},{}", rec.kind, rec.n, rec.value, rec.method)?,
            Format::Jsonl => {
                serde_json::to_writer(&mut *out, &rec)?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use threecore::{CoreKind, Method};

    fn rec(n: u64, value: u128) -> CoreCountRecord {
        CoreCountRecord { kind: CoreKind::Triple, n, value, method: Method::Formula }
    }

    #[test]
    fn csv_and_jsonl() {
        let records = [rec(0, 1), rec(1, 3)];
        let mut buf = Vec::new();
        write_records(&mut buf, &records, Format::Csv, true).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "kind,n,value,method\nB3,0,1,formula\nB3,1,3,formula\n"
        );
        let mut buf = Vec::new();
        write_records(&mut buf, &records[..1], Format::Jsonl, true).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"kind\":\"B3\",\"n\":0,\"value\":\"1\",\"method\":\"formula\"}\n"
        );
    }

    #[test]
    fn large_values_stay_exact() {
        let mut buf = Vec::new();
        write_records(&mut buf, &[rec(7, u128::MAX)], Format::Jsonl, false).unwrap();
        let line = String::from_utf8(buf).unwrap();
        assert!(line.contains(&format!("\"value\":\"{}\"", u128::MAX)));
    }
}
