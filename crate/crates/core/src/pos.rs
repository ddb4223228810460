//! Part-of-speech tags and their three-way class grouping.

use std::fmt;
use std::str::FromStr;

/// Uzbek part of speech.
///
/// Declaration order follows the conventional grammar listing and is used for
/// stable report ordering. Homonym disambiguation uses [`PosTag::priority`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosTag {
    Verb,
    Pronoun,
    Noun,
    Adverb,
    Adjective,
    Numeral,
    Conjunction,
    Auxiliary,
    Particle,
    Modal,
    Imitation,
    Interjection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordClass {
    /// Lexical words; all but pronouns carry their own affixes.
    Open,
    /// Grammatical words; never inflected.
    Closed,
    Intermediate,
}

impl PosTag {
    pub const ALL: [PosTag; 12] = [
        PosTag::Verb,
        PosTag::Pronoun,
        PosTag::Noun,
        PosTag::Adverb,
        PosTag::Adjective,
        PosTag::Numeral,
        PosTag::Conjunction,
        PosTag::Auxiliary,
        PosTag::Particle,
        PosTag::Modal,
        PosTag::Imitation,
        PosTag::Interjection,
    ];

    pub const OPEN: [PosTag; 6] = [
        PosTag::Verb,
        PosTag::Pronoun,
        PosTag::Noun,
        PosTag::Adverb,
        PosTag::Adjective,
        PosTag::Numeral,
    ];

    pub fn class(self) -> WordClass {
        use PosTag::*;
        match self {
            Verb | Pronoun | Noun | Adverb | Adjective | Numeral => WordClass::Open,
            Conjunction | Auxiliary | Particle => WordClass::Closed,
            Modal | Imitation | Interjection => WordClass::Intermediate,
        }
    }

    pub fn is_open(self) -> bool {
        self.class() == WordClass::Open
    }

    /// Rank used to order homonyms; lower wins.
    ///
    /// Noun > Verb > Adjective > Numeral > Adverb > Pronoun > closed > intermediate.
    pub fn priority(self) -> u8 {
        use PosTag::*;
        match self {
            Noun => 0,
            Verb => 1,
            Adjective => 2,
            Numeral => 3,
            Adverb => 4,
            Pronoun => 5,
            Conjunction => 6,
            Auxiliary => 7,
            Particle => 8,
            Modal => 9,
            Imitation => 10,
            Interjection => 11,
        }
    }

    /// Data-file code (`VERB`, `NOUN`, ...).
    pub fn code(self) -> &'static str {
        use PosTag::*;
        match self {
            Verb => "VERB",
            Pronoun => "PRON",
            Noun => "NOUN",
            Adverb => "ADV",
            Adjective => "ADJ",
            Numeral => "NUM",
            Conjunction => "CONJ",
            Auxiliary => "AUX",
            Particle => "PART",
            Modal => "MODAL",
            Imitation => "IMIT",
            Interjection => "INTJ",
        }
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownPosCode(pub String);

impl FromStr for PosTag {
    type Err = UnknownPosCode;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PosTag::ALL
            .into_iter()
            .find(|t| t.code() == s)
            .ok_or_else(|| UnknownPosCode(s.to_string()))
    }
}

/// Small bit set over [`PosTag`], used for affix applicability and FSM hints.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PosSet(u16);

impl PosSet {
    pub const EMPTY: PosSet = PosSet(0);

    pub fn open() -> Self {
        PosTag::OPEN.into_iter().collect()
    }

    pub fn insert(&mut self, tag: PosTag) {
        self.0 |= 1 << tag as u16;
    }

    pub fn contains(self, tag: PosTag) -> bool {
        self.0 & (1 << tag as u16) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersects(self, other: PosSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn intersection(self, other: PosSet) -> PosSet {
        PosSet(self.0 & other.0)
    }

    pub fn union(self, other: PosSet) -> PosSet {
        PosSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = PosTag> {
        PosTag::ALL.into_iter().filter(move |t| self.contains(*t))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
}

impl FromIterator<PosTag> for PosSet {
    fn from_iter<I: IntoIterator<Item = PosTag>>(iter: I) -> Self {
        let mut set = PosSet::EMPTY;
        for t in iter {
            set.insert(t);
        }
        set
    }
}

impl fmt::Debug for PosSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
