//! Flat per-token output records and their TSV / JSON encodings.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::pipeline::LemmaResult;

/// One output row. Field names are the JSON keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub token: String,
    pub lemma: String,
    /// First POS candidate code, or `-` when unresolved.
    pub pos: String,
    pub status: String,
    /// `allomorph/CLASS` items, rightmost removal first.
    pub trace: Vec<String>,
}

impl OutputRecord {
    pub fn from_result(r: &LemmaResult, with_trace: bool) -> Self {
        OutputRecord {
            token: r.token.surface.clone(),
            lemma: r.lemma.clone(),
            pos: r
                .pos_candidates
                .first()
                .map_or_else(|| "-".to_string(), |p| p.code().to_string()),
            status: r.status.as_str().to_string(),
            trace: if with_trace {
                r.trace.iter().map(ToString::to_string).collect()
            } else {
                Vec::new()
            },
        }
    }

    /// `token<TAB>lemma<TAB>pos<TAB>status<TAB>trace`, trace items joined by `;`.
    pub fn to_tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.token,
            self.lemma,
            self.pos,
            self.status,
            self.trace.join(";")
        )
    }

    pub fn from_tsv_row(row: &str) -> Option<Self> {
        let mut cols = row.split('\t');
        let rec = OutputRecord {
            token: cols.next()?.to_string(),
            lemma: cols.next()?.to_string(),
            pos: cols.next()?.to_string(),
            status: cols.next()?.to_string(),
            trace: match cols.next()? {
                "" => Vec::new(),
                t => t.split(';').map(str::to_string).collect(),
            },
        };
        cols.next().is_none().then_some(rec)
    }
}

pub fn write_tsv<W: Write>(records: &[OutputRecord], mut out: W) -> io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_tsv_row())?;
    }
    Ok(())
}

/// A single JSON array followed by a newline.
pub fn write_json<W: Write>(records: &[OutputRecord], mut out: W) -> io::Result<()> {
    serde_json::to_writer(&mut out, records)?;
    writeln!(out)
}
