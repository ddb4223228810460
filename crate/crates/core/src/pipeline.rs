//! End-to-end lemmatization: normalize, tokenize, drop non-words, look up,
//! strip, emit one result per word token.

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::affix::AffixStore;
use crate::error::{LoadError, PipelineError};
use crate::fsm::{run_fsm, Analysis, Status, StripStep};
use crate::lexicon::Lexicon;
use crate::pos::PosTag;
use crate::record::OutputRecord;
use crate::text::{filter_tokens, tokenize, Token, TokenKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaResult {
    pub token: Token,
    pub lemma: String,
    pub pos_candidates: Vec<PosTag>,
    pub trace: Vec<StripStep>,
    pub status: Status,
}

impl LemmaResult {
    fn new(token: Token, a: Analysis) -> Self {
        LemmaResult {
            token,
            lemma: a.lemma,
            pos_candidates: a.pos_candidates,
            trace: a.trace,
            status: a.status,
        }
    }

    /// Stem before `-moq` restoration: the token minus every traced removal.
    pub fn stem(&self) -> &str {
        match self.trace.last() {
            Some(step) => &step.stem_after,
            None if self.status == Status::Unresolved => &self.lemma,
            None => &self.token.normalized,
        }
    }
}

/// Lemmatize one word token: direct lexicon hit first, then the stripper.
pub fn lemmatize_token(
    token: &Token,
    lex: &Lexicon,
    store: &AffixStore,
) -> Result<LemmaResult, PipelineError> {
    if token.kind != TokenKind::Word {
        return Err(PipelineError::NotAWord {
            surface: token.surface.clone(),
            kind: token.kind,
        });
    }
    let entries = lex.lookup(&token.normalized);
    let analysis = if entries.is_empty() {
        run_fsm(&token.normalized, store, lex)
    } else {
        Analysis {
            lemma: token.normalized.clone(),
            pos_candidates: entries.iter().map(|e| e.pos).collect(),
            trace: Vec::new(),
            status: Status::Resolved,
            stem: token.normalized.clone(),
        }
    };
    Ok(LemmaResult::new(token.clone(), analysis))
}

/// Lemmatize every word of `raw`, in input order. Token surfaces and spans
/// refer to `raw`.
pub fn lemmatize_text(raw: &str, lex: &Lexicon, store: &AffixStore) -> Vec<LemmaResult> {
    filter_tokens(tokenize(raw))
        .iter()
        .map(|t| lemmatize_token(t, lex, store).expect("filtered tokens are words"))
        .collect()
}

#[derive(Debug, Error)]
#[error("{path}: {source}")]
pub struct DataFileError {
    pub path: PathBuf,
    #[source]
    pub source: LoadError,
}

/// A loaded words/affixes pair. Immutable and `Send + Sync`.
#[derive(Debug, Clone)]
pub struct Lemmatizer {
    lexicon: Lexicon,
    affixes: AffixStore,
}

impl Lemmatizer {
    pub fn new(lexicon: Lexicon, affixes: AffixStore) -> Self {
        Lemmatizer { lexicon, affixes }
    }

    /// Load the words and affixes TSV files; errors name the failing path.
    pub fn from_paths(
        words: impl AsRef<Path>,
        affixes: impl AsRef<Path>,
    ) -> Result<Self, DataFileError> {
        let lexicon = load_file(words.as_ref(), Lexicon::load)?;
        let affixes = load_file(affixes.as_ref(), AffixStore::load)?;
        Ok(Lemmatizer { lexicon, affixes })
    }

    /// The data shipped with the crate.
    pub fn seed() -> Self {
        Lemmatizer::new(crate::seed_lexicon(), crate::seed_affixes())
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn affixes(&self) -> &AffixStore {
        &self.affixes
    }

    pub fn lemmatize_text(&self, raw: &str) -> Vec<LemmaResult> {
        lemmatize_text(raw, &self.lexicon, &self.affixes)
    }

    pub fn lemmatize_token(&self, token: &Token) -> Result<LemmaResult, PipelineError> {
        lemmatize_token(token, &self.lexicon, &self.affixes)
    }

    /// Output records with traces, as serialized by the CLI with `--trace`.
    pub fn records(&self, raw: &str) -> Vec<OutputRecord> {
        self.lemmatize_text(raw)
            .iter()
            .map(|r| OutputRecord::from_result(r, true))
            .collect()
    }
}

pub(crate) fn load_file<T>(
    path: &Path,
    load: impl FnOnce(BufReader<File>) -> Result<T, LoadError>,
) -> Result<T, DataFileError> {
    let wrap = |source| DataFileError {
        path: path.to_path_buf(),
        source,
    };
    let file = File::open(path).map_err(|e| wrap(LoadError::Io(e)))?;
    load(BufReader::new(file)).map_err(wrap)
}
