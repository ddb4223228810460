//! The Words store: an immutable lemma dictionary keyed by normalized form.

use std::collections::{BTreeMap, HashMap};
use std::io::BufRead;

use crate::error::LoadError;
use crate::pos::{PosTag, WordClass};
use crate::text::is_normalized_word;
use crate::tsv::{self, Row};

/// Infinitive ending carried by every verb lemma.
pub const INFINITIVE: &str = "moq";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexiconEntry {
    pub lemma: String,
    pub pos: PosTag,
    pub takes_affixes: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    // entries per form, sorted by POS priority
    by_form: HashMap<String, Vec<LexiconEntry>>,
    len: usize,
}

impl Lexicon {
    /// Parse the words TSV: `lemma<TAB>POS<TAB>takes_affixes`.
    ///
    /// Duplicate `(lemma, POS)` rows collapse onto the first occurrence.
    pub fn load<R: BufRead>(source: R) -> Result<Self, LoadError> {
        let mut by_form: HashMap<String, Vec<LexiconEntry>> = HashMap::new();
        let mut len = 0;

        for row in tsv::rows(source) {
            let row = row?;
            let entry = parse_row(&row)?;
            let slot = by_form.entry(entry.lemma.clone()).or_default();
            if slot.iter().any(|e| e.pos == entry.pos) {
                continue;
            }
            slot.push(entry);
            len += 1;
        }

        for entries in by_form.values_mut() {
            entries.sort_by_key(|e| e.pos.priority());
        }
        Ok(Lexicon { by_form, len })
    }

    pub fn from_entries(entries: impl IntoIterator<Item = LexiconEntry>) -> Self {
        let mut by_form: HashMap<String, Vec<LexiconEntry>> = HashMap::new();
        let mut len = 0;
        for e in entries {
            let slot = by_form.entry(e.lemma.clone()).or_default();
            if !slot.iter().any(|x| x.pos == e.pos) {
                slot.push(e);
                len += 1;
            }
        }
        for entries in by_form.values_mut() {
            entries.sort_by_key(|e| e.pos.priority());
        }
        Lexicon { by_form, len }
    }

    /// All entries for `form`, homonyms ordered by POS priority. Empty when absent.
    pub fn lookup(&self, form: &str) -> &[LexiconEntry] {
        self.by_form.get(form).map_or(&[], Vec::as_slice)
    }

    pub fn contains(&self, form: &str) -> bool {
        self.by_form.contains_key(form)
    }

    /// Number of distinct `(lemma, POS)` entries.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn count_by_pos(&self) -> BTreeMap<PosTag, usize> {
        let mut counts = BTreeMap::new();
        for e in self.entries() {
            *counts.entry(e.pos).or_insert(0) += 1;
        }
        counts
    }

    /// Entries in unspecified order.
    pub fn entries(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.by_form.values().flatten()
    }

    /// Entries sorted by lemma, then POS priority.
    pub fn sorted_entries(&self) -> Vec<&LexiconEntry> {
        let mut forms: Vec<&String> = self.by_form.keys().collect();
        forms.sort();
        forms.into_iter().flat_map(|f| &self.by_form[f]).collect()
    }
}

fn parse_row(row: &Row) -> Result<LexiconEntry, LoadError> {
    let [lemma, pos, flag] = row.columns::<3>()?;
    let line = row.line;

    if !is_normalized_word(lemma) {
        return Err(LoadError::NotNormalized {
            line,
            form: lemma.to_string(),
        });
    }
    let pos: PosTag = pos.parse().map_err(|_| LoadError::UnknownPos {
        line,
        code: pos.to_string(),
    })?;
    let takes_affixes = tsv::flag(flag, line, 3)?;

    if takes_affixes && pos.class() == WordClass::Closed {
        return Err(LoadError::ClosedClassTakesAffixes {
            line,
            lemma: lemma.to_string(),
        });
    }
    if pos == PosTag::Verb && !lemma.ends_with(INFINITIVE) {
        return Err(LoadError::VerbNotInfinitive {
            line,
            lemma: lemma.to_string(),
        });
    }

    Ok(LexiconEntry {
        lemma: lemma.to_string(),
        pos,
        takes_affixes,
    })
}
