//! Brute-force reference lemmatizer used to cross-check the stripper.
//!
//! It shares no code with the FSM path: suffixes are found by scanning every
//! allomorph of every strippable suffix, classes may be removed in any order
//! and every allomorph choice is explored breadth-first.

use std::collections::BTreeSet;

use crate::affix::{AffixStore, Position};
use crate::lexicon::{Lexicon, INFINITIVE};

/// Longest word the oracle accepts.
pub const ORACLE_MAX_CHARS: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleHit {
    pub lemma: String,
    /// Number of suffix removals on the winning path.
    pub depth: usize,
}

/// Lemma reachable with the fewest removals, homonym ties broken by POS priority.
pub fn oracle_lemmatize(word: &str, lex: &Lexicon, store: &AffixStore) -> Option<String> {
    oracle_analyze(word, lex, store).map(|h| h.lemma)
}

pub fn oracle_analyze(word: &str, lex: &Lexicon, store: &AffixStore) -> Option<OracleHit> {
    if word.is_empty() || word.chars().count() > ORACLE_MAX_CHARS {
        return None;
    }

    let suffixes: BTreeSet<&str> = store
        .entries()
        .iter()
        .filter(|e| e.position == Position::Suffix && e.strip)
        .flat_map(|e| e.surface_forms.iter().map(String::as_str))
        .collect();

    let mut frontier: BTreeSet<String> = BTreeSet::from([word.to_string()]);
    let mut depth = 0;
    while !frontier.is_empty() {
        let best = frontier
            .iter()
            .flat_map(|stem| hits(stem, depth, lex))
            .min();
        if let Some((_, lemma)) = best {
            return Some(OracleHit { lemma, depth });
        }

        let mut next = BTreeSet::new();
        for stem in &frontier {
            let n = stem.chars().count();
            for s in &suffixes {
                // stems keep at least two characters
                if stem.ends_with(s) && n - s.chars().count() >= 2 {
                    next.insert(stem[..stem.len() - s.len()].to_string());
                }
            }
        }
        frontier = next;
        depth += 1;
    }
    None
}

/// `(priority, lemma)` for the stem and its infinitive form when they are lemmas.
fn hits(stem: &str, depth: usize, lex: &Lexicon) -> Vec<(u8, String)> {
    let mut forms = vec![stem.to_string()];
    if !stem.ends_with(INFINITIVE) {
        forms.push(format!("{stem}{INFINITIVE}"));
    }
    forms
        .into_iter()
        .filter_map(|f| {
            let best = lex
                .lookup(&f)
                .iter()
                .filter(|e| depth == 0 || e.takes_affixes)
                .map(|e| e.pos.priority())
                .min()?;
            Some((best, f))
        })
        .collect()
}
