//! Rule-based lemmatizer for Uzbek.
//!
//! Words are reduced to dictionary lemmas in two steps. Raw text is
//! normalized and split into word tokens; each word is then looked up in a
//! lemma lexicon (the *Words* store) and, when absent, fed to a finite-state
//! suffix stripper driven by an affix inventory (the *Affixes* store), with a
//! lexicon lookup after every removal. Verb stems are mapped back to their
//! `-moq` infinitive.
//!
//! ```
//! use uzlemma::Lemmatizer;
//!
//! let lz = Lemmatizer::seed();
//! let lemmas: Vec<String> = lz
//!     .lemmatize_text("O'qigan kitoblarimizni")
//!     .into_iter()
//!     .map(|r| r.lemma)
//!     .collect();
//! assert_eq!(lemmas, ["o\u{02BB}qimoq", "kitob"]);
//! ```

pub mod affix;
pub mod error;
pub mod fsm;
pub mod generate;
pub mod lexicon;
pub mod manifest;
pub mod oracle;
pub mod pipeline;
pub mod pos;
pub mod record;
pub mod text;
mod tsv;

pub use affix::{
    AffixClass, AffixEntry, AffixStore, CellCount, Position, SuffixMatch, MIN_STEM_CHARS,
};
pub use error::{InputError, LoadError, PipelineError};
pub use fsm::{
    restore_infinitive, run_fsm, strip_grammatical, strip_one, Analysis, FsmState, Label, Stage,
    Status, StripStep, Transition,
};
pub use generate::{generate_forms, GeneratedForm};
pub use lexicon::{Lexicon, LexiconEntry};
pub use manifest::{validate_manifest, AffixManifest, CellReport, ManifestReport};
pub use oracle::{oracle_analyze, oracle_lemmatize, OracleHit};
pub use pipeline::{lemmatize_text, lemmatize_token, DataFileError, LemmaResult, Lemmatizer};
pub use pos::{PosSet, PosTag, WordClass};
pub use record::OutputRecord;
pub use text::{decode, filter_tokens, normalize_text, tokenize, Span, Token, TokenKind};

/// Shipped words file.
pub const SEED_WORDS: &str = include_str!("../data/words.tsv");
/// Shipped affixes file.
pub const SEED_AFFIXES: &str = include_str!("../data/affixes.tsv");
/// Reference per-cell counts for a complete affix inventory.
pub const REFERENCE_MANIFEST: &str = include_str!("../data/reference_manifest.tsv");

pub fn seed_lexicon() -> Lexicon {
    Lexicon::load(SEED_WORDS.as_bytes()).expect("shipped words file is valid")
}

pub fn seed_affixes() -> AffixStore {
    AffixStore::load(SEED_AFFIXES.as_bytes()).expect("shipped affixes file is valid")
}

pub fn reference_manifest() -> AffixManifest {
    AffixManifest::load(REFERENCE_MANIFEST.as_bytes()).expect("shipped manifest is valid")
}
