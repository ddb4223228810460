//! Finite-state suffix stripper.
//!
//! The machine walks a word right to left through four stripping stages:
//!
//! ```text
//!            MultiAffix(GRAM) | ε          SingleAffix(LEX)
//!   Start ───────────────────────▶ GramDone ───────────────▶ LexStrip ─┐ SingleAffix(LEX)
//!                                     │ ε                       │ ε ◀──┘
//!                                     ▼                         ▼
//!                                  DerStrip ◀───────────────────┘
//!                                     │ └─┐ SingleAffix(DER)
//!                                     │ ◀─┘
//!   any stage ── ε [lexicon hit] ──▶ Accept
//! ```
//!
//! The grammatical transition removes the whole chain of grammatical
//! suffixes in one step. After every single removal the current stem, and the
//! stem with the `-moq` infinitive restored, is looked up in the lexicon; the
//! first hit accepts.

use std::fmt;

use crate::affix::{AffixClass, AffixStore, SuffixMatch};
use crate::lexicon::{Lexicon, LexiconEntry, INFINITIVE};
use crate::pos::{PosSet, PosTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stage {
    Start,
    GrammaticalDone,
    LexicalStripping,
    DerivationalStripping,
    Accept,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FsmState {
    pub id: u8,
    pub stage: Stage,
}

impl FsmState {
    pub const START: FsmState = FsmState {
        id: 0,
        stage: Stage::Start,
    };
    pub const GRAMMATICAL_DONE: FsmState = FsmState {
        id: 1,
        stage: Stage::GrammaticalDone,
    };
    pub const LEXICAL: FsmState = FsmState {
        id: 2,
        stage: Stage::LexicalStripping,
    };
    pub const DERIVATIONAL: FsmState = FsmState {
        id: 3,
        stage: Stage::DerivationalStripping,
    };
    pub const ACCEPT: FsmState = FsmState {
        id: 4,
        stage: Stage::Accept,
    };

    pub const ALL: [FsmState; 5] = [
        Self::START,
        Self::GRAMMATICAL_DONE,
        Self::LEXICAL,
        Self::DERIVATIONAL,
        Self::ACCEPT,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    /// Remove every consecutive suffix of the class at once.
    MultiAffix(AffixClass),
    SingleAffix(AffixClass),
    /// Remove nothing.
    Epsilon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Transition {
    pub from: FsmState,
    pub to: FsmState,
    pub label: Label,
}

const fn tr(from: FsmState, to: FsmState, label: Label) -> Transition {
    Transition { from, to, label }
}

/// Transition table of the stripper. Acceptance edges (ε guarded by a
/// lexicon hit) leave every non-final state.
pub const TRANSITIONS: [Transition; 11] = {
    use AffixClass::*;
    use FsmState as S;
    [
        tr(
            S::START,
            S::GRAMMATICAL_DONE,
            Label::MultiAffix(Grammatical),
        ),
        tr(S::START, S::GRAMMATICAL_DONE, Label::Epsilon),
        tr(S::GRAMMATICAL_DONE, S::LEXICAL, Label::SingleAffix(Lexical)),
        tr(S::GRAMMATICAL_DONE, S::DERIVATIONAL, Label::Epsilon),
        tr(S::LEXICAL, S::LEXICAL, Label::SingleAffix(Lexical)),
        tr(S::LEXICAL, S::DERIVATIONAL, Label::Epsilon),
        tr(
            S::DERIVATIONAL,
            S::DERIVATIONAL,
            Label::SingleAffix(Derivational),
        ),
        tr(S::START, S::ACCEPT, Label::Epsilon),
        tr(S::GRAMMATICAL_DONE, S::ACCEPT, Label::Epsilon),
        tr(S::LEXICAL, S::ACCEPT, Label::Epsilon),
        tr(S::DERIVATIONAL, S::ACCEPT, Label::Epsilon),
    ]
};

/// One suffix removal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StripStep {
    pub removed: String,
    pub affix_id: String,
    pub class: AffixClass,
    /// Stem left after the removal; `stem_after + removed` is the stem before it.
    pub stem_after: String,
}

impl fmt::Display for StripStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.removed, self.class.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Resolved,
    Unresolved,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Resolved => "resolved",
            Status::Unresolved => "unresolved",
        }
    }
}

/// Outcome of analysing one normalized word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    /// Lexicon lemma when resolved, otherwise the final stem.
    pub lemma: String,
    /// POS tags of the matched lexicon entries, priority order; empty when unresolved.
    pub pos_candidates: Vec<PosTag>,
    /// Removals, rightmost first.
    pub trace: Vec<StripStep>,
    pub status: Status,
    /// Stem after the last removal, before any `-moq` restoration.
    pub stem: String,
}

/// Append the `-moq` infinitive unless already present.
pub fn restore_infinitive(stem: &str) -> String {
    if stem.ends_with(INFINITIVE) {
        stem.to_string()
    } else {
        format!("{stem}{INFINITIVE}")
    }
}

/// Tracks the POS hint while suffixes are removed.
///
/// The hint starts as every open class and is intersected with the
/// applicability of each removed allomorph (the union over all affixes that
/// share that allomorph in the class). An empty intersection resets it.
#[derive(Debug, Clone, Copy)]
struct Hint(PosSet);

impl Hint {
    fn new(initial: Option<PosSet>) -> Self {
        Hint(initial.unwrap_or_else(PosSet::open))
    }

    fn narrow(&mut self, matches: &[SuffixMatch<'_>], chosen: &SuffixMatch<'_>) {
        let applies = matches
            .iter()
            .filter(|m| m.allomorph == chosen.allomorph)
            .fold(PosSet::EMPTY, |acc, m| acc.union(m.entry.applies_to));
        let narrowed = self.0.intersection(applies);
        self.0 = if narrowed.is_empty() {
            PosSet::open()
        } else {
            narrowed
        };
    }
}

/// Remove the longest matching suffix of `class`, if any, and narrow the hint.
fn strip_step(
    word: &str,
    store: &AffixStore,
    class: AffixClass,
    hint: &mut Hint,
) -> Option<StripStep> {
    let matches = store.match_suffixes(word, class, Some(hint.0));
    let best = *matches.first()?;
    hint.narrow(&matches, &best);
    Some(StripStep {
        removed: best.allomorph.to_string(),
        affix_id: best.entry.id.clone(),
        class,
        stem_after: best.stem(word).to_string(),
    })
}

fn strip_chain(word: &str, store: &AffixStore, hint: &mut Hint) -> (String, Vec<StripStep>) {
    let mut stem = word.to_string();
    let mut steps = Vec::new();
    while let Some(step) = strip_step(&stem, store, AffixClass::Grammatical, hint) {
        stem.clone_from(&step.stem_after);
        steps.push(step);
    }
    (stem, steps)
}

/// Remove all trailing grammatical suffixes in one transition, longest match
/// first. Returns the stem and the removals, rightmost first; no removals is
/// the ε case.
pub fn strip_grammatical(
    word: &str,
    store: &AffixStore,
    pos_hint: Option<PosSet>,
) -> (String, Vec<StripStep>) {
    strip_chain(word, store, &mut Hint::new(pos_hint))
}

/// Remove the single longest suffix of `class`.
///
/// `class` is expected to be lexical or derivational; grammatical suffixes
/// go through [`strip_grammatical`].
pub fn strip_one(
    word: &str,
    store: &AffixStore,
    class: AffixClass,
    pos_hint: Option<PosSet>,
) -> Option<(String, StripStep)> {
    debug_assert_ne!(class, AffixClass::Grammatical);
    let step = strip_step(word, store, class, &mut Hint::new(pos_hint))?;
    Some((step.stem_after.clone(), step))
}

/// Best lexicon hit for `stem` or its `-moq` form.
///
/// After at least one removal only entries that take affixes count. Between
/// the two candidates the better POS priority wins, then the smaller lemma.
pub(crate) fn lexicon_hit<'l>(
    lex: &'l Lexicon,
    stem: &str,
    removals: usize,
) -> Option<(String, Vec<&'l LexiconEntry>)> {
    let restored = restore_infinitive(stem);
    let candidates: &[&str] = if restored == stem {
        &[stem]
    } else {
        &[stem, restored.as_str()]
    };

    candidates
        .iter()
        .filter_map(|form| {
            let entries: Vec<&LexiconEntry> = lex
                .lookup(form)
                .iter()
                .filter(|e| removals == 0 || e.takes_affixes)
                .collect();
            let best = entries.first()?.pos.priority();
            Some((best, form.to_string(), entries))
        })
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
        .map(|(_, form, entries)| (form, entries))
}

fn resolved(
    lemma: String,
    entries: Vec<&LexiconEntry>,
    trace: Vec<StripStep>,
    stem: &str,
) -> Analysis {
    Analysis {
        lemma,
        pos_candidates: entries.iter().map(|e| e.pos).collect(),
        trace,
        status: Status::Resolved,
        stem: stem.to_string(),
    }
}

/// Run the stripper on a word that missed the initial lexicon lookup.
///
/// Deterministic: one analysis per `(word, store, lexicon)`.
pub fn run_fsm(word: &str, store: &AffixStore, lex: &Lexicon) -> Analysis {
    let mut hint = Hint::new(None);
    let mut trace: Vec<StripStep> = Vec::new();
    let mut stem = word.to_string();
    let mut state = FsmState::START;

    if let Some((lemma, entries)) = lexicon_hit(lex, &stem, 0) {
        return resolved(lemma, entries, trace, &stem);
    }

    loop {
        match state.stage {
            Stage::Start => {
                let (_, chain) = strip_chain(&stem, store, &mut hint);
                for step in chain {
                    stem.clone_from(&step.stem_after);
                    trace.push(step);
                    if let Some((lemma, entries)) = lexicon_hit(lex, &stem, trace.len()) {
                        return resolved(lemma, entries, trace, &stem);
                    }
                }
                state = FsmState::GRAMMATICAL_DONE;
            }
            Stage::GrammaticalDone | Stage::LexicalStripping | Stage::DerivationalStripping => {
                let (class, on_match, on_empty) = match state.stage {
                    Stage::DerivationalStripping => {
                        (AffixClass::Derivational, FsmState::DERIVATIONAL, None)
                    }
                    _ => (
                        AffixClass::Lexical,
                        FsmState::LEXICAL,
                        Some(FsmState::DERIVATIONAL),
                    ),
                };
                match strip_step(&stem, store, class, &mut hint) {
                    Some(step) => {
                        stem.clone_from(&step.stem_after);
                        trace.push(step);
                        if let Some((lemma, entries)) = lexicon_hit(lex, &stem, trace.len()) {
                            return resolved(lemma, entries, trace, &stem);
                        }
                        state = on_match;
                    }
                    None => match on_empty {
                        Some(next) => state = next,
                        None => break,
                    },
                }
            }
            Stage::Accept => unreachable!("accept returns directly"),
        }
    }

    Analysis {
        lemma: stem.clone(),
        pos_candidates: Vec::new(),
        trace,
        status: Status::Unresolved,
        stem,
    }
}
