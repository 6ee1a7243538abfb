//! Output records and serialization formats.
//!
//! Every subcommand that streams results emits one record per line. The
//! plain format is space-separated; `--format json` emits one JSON object
//! per line; `--format csv` emits a header followed by rows with the key
//! field quoted (partition text contains commas).

use clap::ValueEnum;
use serde::Serialize;

/// One result row: a degree, what kind of number it is, an optional key
/// (partition or profile text, or a sub-series tag), and the value as exact
/// text ("a" or "a/b").
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub degree: u32,
    pub kind: String,
    pub key: String,
    pub value: String,
}

impl OutputRecord {
    pub fn new(degree: u32, kind: &str, key: &str, value: impl ToString) -> Self {
        OutputRecord {
            degree,
            kind: kind.to_string(),
            key: key.to_string(),
            value: value.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Render records in the chosen format, one per line, trailing newline
/// included when any records exist.
pub fn render(records: &[OutputRecord], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("degree,kind,key,value\n");
    }
    for r in records {
        match format {
            Format::Plain => {
                out.push_str(&format!("{} {} {} {}\n", r.degree, r.kind, r.key, r.value));
            }
            Format::Json => {
                out.push_str(&serde_json::to_string(r).expect("records serialize"));
                out.push('\n');
            }
            Format::Csv => {
                out.push_str(&format!(
                    "{},{},\"{}\",{}\n",
                    r.degree, r.kind, r.key, r.value
                ));
            }
        }
    }
    out
}
