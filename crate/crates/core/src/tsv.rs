//! Line reader shared by the data-file loaders.

use std::io::BufRead;

use crate::error::LoadError;

pub(crate) struct Row {
    pub line: usize,
    pub text: String,
}

impl Row {
    pub fn columns<const N: usize>(&self) -> Result<[&str; N], LoadError> {
        let cols: Vec<&str> = self.text.split('\t').collect();
        cols.try_into()
            .map_err(|cols: Vec<&str>| LoadError::ColumnCount {
                line: self.line,
                expected: N,
                found: cols.len(),
            })
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
pub(crate) fn rows<R: BufRead>(mut source: R) -> impl Iterator<Item = Result<Row, LoadError>> {
    let mut line = 0;
    let mut buf = Vec::new();
    std::iter::from_fn(move || loop {
        buf.clear();
        match source.read_until(b'\n', &mut buf) {
            Err(e) => return Some(Err(LoadError::Io(e))),
            Ok(0) => return None,
            Ok(_) => {}
        }
        line += 1;
        let text = match std::str::from_utf8(&buf) {
            Ok(t) => t.trim_end_matches(['\n', '\r']),
            Err(_) => return Some(Err(LoadError::Encoding { line })),
        };
        if text.trim().is_empty() || text.starts_with('#') {
            continue;
        }
        return Some(Ok(Row {
            line,
            text: text.to_string(),
        }));
    })
}

pub(crate) fn flag(value: &str, line: usize, column: usize) -> Result<bool, LoadError> {
    match value {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(LoadError::BadFlag {
            line,
            column,
            value: value.to_string(),
        }),
    }
}
