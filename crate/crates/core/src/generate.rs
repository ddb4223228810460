//! Bounded enumeration of inflected forms from a lexicon and affix store.
//!
//! Used to drive the FSM against the oracle. Each open-class lemma that takes
//! affixes is combined with at most one derivational suffix, at most one
//! lexical suffix and at most one grammatical suffix per slot, in morphotactic
//! order, trying every allomorph. Verbs attach suffixes to the stem without
//! `-moq`.
//!
//! Grammatical slots come from affix ids of the form `<pos>_<slot>_<name>`.
//! Known slots are ordered `poss < case < ptcl < asp < pers < fin`; any other
//! grammatical slot sorts after them.

use crate::affix::{AffixClass, AffixEntry, AffixStore, Position};
use crate::lexicon::{Lexicon, INFINITIVE};
use crate::pos::PosTag;

const SLOT_ORDER: [&str; 6] = ["poss", "case", "ptcl", "asp", "pers", "fin"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedForm {
    pub word: String,
    /// The lemma the form was built from.
    pub source: String,
    pub pos: PosTag,
    /// Attached allomorphs, left to right.
    pub suffixes: Vec<String>,
}

/// Grammatical slot name of an affix id, or the whole id when it has no slot.
fn slot_of(id: &str) -> &str {
    id.split('_').nth(1).unwrap_or(id)
}

fn slot_rank(e: &AffixEntry) -> (u8, usize, &str) {
    match e.class {
        AffixClass::Derivational => (0, 0, ""),
        AffixClass::Lexical => (1, 0, ""),
        AffixClass::Grammatical => {
            let slot = slot_of(&e.id);
            match SLOT_ORDER.iter().position(|s| *s == slot) {
                Some(i) => (2, i, ""),
                None => (3, 0, slot),
            }
        }
    }
}

/// Ordered slot groups of strippable suffixes applying to `pos`.
fn slots_for(store: &AffixStore, pos: PosTag) -> Vec<Vec<&AffixEntry>> {
    let mut entries: Vec<&AffixEntry> = store
        .entries()
        .iter()
        .filter(|e| e.position == Position::Suffix && e.strip && e.applies_to.contains(pos))
        .collect();
    entries.sort_by(|a, b| {
        slot_rank(a)
            .cmp(&slot_rank(b))
            .then_with(|| a.id.cmp(&b.id))
    });

    let mut groups: Vec<Vec<&AffixEntry>> = Vec::new();
    let mut last = None;
    for e in entries {
        let rank = slot_rank(e);
        if last != Some(rank) {
            groups.push(Vec::new());
            last = Some(rank);
        }
        groups.last_mut().expect("group pushed above").push(e);
    }
    groups
}

/// Every form with up to `max_suffixes` suffixes, in a deterministic order.
/// Bare lemmas are included.
pub fn generate_forms(
    lex: &Lexicon,
    store: &AffixStore,
    max_suffixes: usize,
) -> Vec<GeneratedForm> {
    let mut out = Vec::new();
    for entry in lex.sorted_entries() {
        if !entry.pos.is_open() || !entry.takes_affixes {
            continue;
        }
        let base = match entry.pos {
            PosTag::Verb => entry.lemma.strip_suffix(INFINITIVE).unwrap_or(&entry.lemma),
            _ => entry.lemma.as_str(),
        };
        let groups = slots_for(store, entry.pos);
        let mut chosen = Vec::new();
        extend(&groups, 0, max_suffixes, &mut chosen, &mut |suffixes| {
            out.push(GeneratedForm {
                word: format!("{base}{}", suffixes.concat()),
                source: entry.lemma.clone(),
                pos: entry.pos,
                suffixes: suffixes.iter().map(|s| s.to_string()).collect(),
            });
        });
    }
    out
}

fn extend<'a>(
    groups: &[Vec<&'a AffixEntry>],
    at: usize,
    budget: usize,
    chosen: &mut Vec<&'a str>,
    emit: &mut impl FnMut(&[&'a str]),
) {
    if at == groups.len() {
        emit(chosen);
        return;
    }
    extend(groups, at + 1, budget, chosen, emit);
    if budget == 0 {
        return;
    }
    for e in &groups[at] {
        for form in &e.surface_forms {
            chosen.push(form);
            extend(groups, at + 1, budget - 1, chosen, emit);
            chosen.pop();
        }
    }
}
