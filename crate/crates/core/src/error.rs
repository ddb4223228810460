use std::io;

use thiserror::Error;

/// Failure while reading one of the TSV data files (words, affixes, manifest).
///
/// Every row-level variant carries the 1-based line number of the offending row.
#[derive(Debug, Error)]
pub enum LoadError {
    #[error("read failed: {0}")]
    Io(#[from] io::Error),

    #[error("line {line}: invalid UTF-8")]
    Encoding { line: usize },

    #[error("line {line}: expected {expected} tab-separated columns, found {found}")]
    ColumnCount {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: unknown POS tag `{code}`")]
    UnknownPos { line: usize, code: String },

    #[error("line {line}: unknown affix class `{code}` (expected DER, LEX or GRAM)")]
    UnknownClass { line: usize, code: String },

    #[error("line {line}: unknown affix position `{code}` (expected SUF or PRE)")]
    UnknownPosition { line: usize, code: String },

    #[error("line {line}: bad flag `{value}` in column {column} (expected 0 or 1)")]
    BadFlag {
        line: usize,
        column: usize,
        value: String,
    },

    #[error("line {line}: bad count `{value}`")]
    BadCount { line: usize, value: String },

    #[error("line {line}: `{form}` is not a normalized word form")]
    NotNormalized { line: usize, form: String },

    #[error("line {line}: closed-class word `{lemma}` marked as taking affixes; closed word classes never get affix")]
    ClosedClassTakesAffixes { line: usize, lemma: String },

    #[error("line {line}: verb lemma `{lemma}` is not in the -moq infinitive")]
    VerbNotInfinitive { line: usize, lemma: String },

    #[error("line {line}: empty affix id")]
    EmptyId { line: usize },

    #[error("line {line}: empty allomorph for affix `{id}`")]
    EmptyAllomorph { line: usize, id: String },

    #[error("line {line}: affix `{id}` has an empty POS list")]
    EmptyPosList { line: usize, id: String },

    #[error("line {line}: affix `{id}` applies to non-open class {pos}")]
    NonOpenClass {
        line: usize,
        id: String,
        pos: String,
    },

    #[error("line {line}: prefix `{id}` is marked strippable; prefixes stay in the lemma")]
    StrippablePrefix { line: usize, id: String },

    #[error("line {line}: affix `{id}` disagrees with its earlier rows on class, position, POS list or strip flag")]
    InconsistentAffix { line: usize, id: String },

    #[error("line {line}: duplicate manifest cell {pos}/{class}")]
    DuplicateCell {
        line: usize,
        pos: String,
        class: String,
    },
}

impl LoadError {
    /// Line number of the offending row, when the error is row-level.
    pub fn line(&self) -> Option<usize> {
        use LoadError::*;
        match self {
            Io(_) => None,
            Encoding { line }
            | ColumnCount { line, .. }
            | UnknownPos { line, .. }
            | UnknownClass { line, .. }
            | UnknownPosition { line, .. }
            | BadFlag { line, .. }
            | BadCount { line, .. }
            | NotNormalized { line, .. }
            | ClosedClassTakesAffixes { line, .. }
            | VerbNotInfinitive { line, .. }
            | EmptyId { line }
            | EmptyAllomorph { line, .. }
            | EmptyPosList { line, .. }
            | NonOpenClass { line, .. }
            | StrippablePrefix { line, .. }
            | InconsistentAffix { line, .. }
            | DuplicateCell { line, .. } => Some(*line),
        }
    }
}

/// Input text was not valid UTF-8.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("input is not valid UTF-8 (first bad byte at offset {offset})")]
pub struct InputError {
    pub offset: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("token `{surface}` is {kind:?}, only word tokens can be lemmatized")]
    NotAWord {
        surface: String,
        kind: crate::text::TokenKind,
    },
}
