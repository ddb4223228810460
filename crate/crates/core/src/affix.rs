//! The Affixes store: suffix and prefix inventory with allomorph groups.
//!
//! Each affix has one or more allomorphs (surface variants), a morphotactic
//! class and the set of open-class parts of speech it attaches to. Strippable
//! suffix allomorphs are indexed in a reversed-character trie so that all
//! suffixes of a word are found in one right-to-left walk.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use crate::error::LoadError;
use crate::pos::{PosSet, PosTag};
use crate::text::is_normalized_word;
use crate::tsv::{self, Row};

/// Shortest stem, in characters, that any suffix removal may leave behind.
pub const MIN_STEM_CHARS: usize = 2;

/// Morphotactic class. Declaration order is the left-to-right order inside a
/// word: base + derivational + lexical + grammatical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffixClass {
    Derivational,
    Lexical,
    Grammatical,
}

impl AffixClass {
    pub const ALL: [AffixClass; 3] = [
        AffixClass::Derivational,
        AffixClass::Lexical,
        AffixClass::Grammatical,
    ];

    /// Order in which classes are stripped, rightmost first.
    pub const STRIPPING_ORDER: [AffixClass; 3] = [
        AffixClass::Grammatical,
        AffixClass::Lexical,
        AffixClass::Derivational,
    ];

    pub fn code(self) -> &'static str {
        match self {
            AffixClass::Derivational => "DER",
            AffixClass::Lexical => "LEX",
            AffixClass::Grammatical => "GRAM",
        }
    }

    /// Position in [`Self::STRIPPING_ORDER`].
    pub fn stripping_rank(self) -> u8 {
        match self {
            AffixClass::Grammatical => 0,
            AffixClass::Lexical => 1,
            AffixClass::Derivational => 2,
        }
    }
}

impl fmt::Display for AffixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for AffixClass {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        AffixClass::ALL
            .into_iter()
            .find(|c| c.code() == s)
            .ok_or(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Position {
    Suffix,
    Prefix,
}

impl Position {
    pub fn code(self) -> &'static str {
        match self {
            Position::Suffix => "SUF",
            Position::Prefix => "PRE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffixEntry {
    pub id: String,
    /// Allomorphs in file order, deduplicated.
    pub surface_forms: Vec<String>,
    pub class: AffixClass,
    pub position: Position,
    pub applies_to: PosSet,
    /// Whether the stripper may remove it. Always false for prefixes.
    pub strip: bool,
}

/// One way a suffix allomorph matches the end of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuffixMatch<'a> {
    pub entry: &'a AffixEntry,
    pub allomorph: &'a str,
}

impl SuffixMatch<'_> {
    /// The word with this allomorph removed.
    pub fn stem<'w>(&self, word: &'w str) -> &'w str {
        &word[..word.len() - self.allomorph.len()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CellCount {
    pub suffixes: usize,
    pub allomorphs: usize,
}

impl fmt::Display for CellCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.suffixes, self.allomorphs)
    }
}

#[derive(Debug, Clone, Default)]
struct TrieNode {
    children: Vec<(char, u32)>,
    /// (entry index, allomorph index) pairs ending here
    ends: Vec<(u32, u32)>,
}

/// Trie over reversed allomorphs.
#[derive(Debug, Clone)]
struct SuffixTrie {
    nodes: Vec<TrieNode>,
}

impl SuffixTrie {
    fn new() -> Self {
        SuffixTrie {
            nodes: vec![TrieNode::default()],
        }
    }

    fn insert(&mut self, form: &str, value: (u32, u32)) {
        let mut at = 0usize;
        for c in form.chars().rev() {
            let next = match self.nodes[at].children.iter().find(|(k, _)| *k == c) {
                Some(&(_, n)) => n as usize,
                None => {
                    let n = self.nodes.len();
                    self.nodes.push(TrieNode::default());
                    self.nodes[at].children.push((c, n as u32));
                    n
                }
            };
            at = next;
        }
        self.nodes[at].ends.push(value);
    }

    /// Visit every stored suffix of `word`, passing the suffix length in chars.
    fn for_each_suffix(&self, word: &str, mut f: impl FnMut(usize, (u32, u32))) {
        let mut at = 0usize;
        for (depth, c) in word.chars().rev().enumerate() {
            match self.nodes[at].children.iter().find(|(k, _)| *k == c) {
                Some(&(_, n)) => at = n as usize,
                None => return,
            }
            for &v in &self.nodes[at].ends {
                f(depth + 1, v);
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct AffixStore {
    /// sorted by id
    entries: Vec<AffixEntry>,
    by_id: HashMap<String, usize>,
    trie: SuffixTrie,
}

impl AffixStore {
    /// Parse the affixes TSV:
    /// `id<TAB>allomorph<TAB>class<TAB>position<TAB>pos_list<TAB>strip`.
    pub fn load<R: BufRead>(source: R) -> Result<Self, LoadError> {
        let mut entries: Vec<AffixEntry> = Vec::new();
        let mut by_id: HashMap<String, usize> = HashMap::new();

        for row in tsv::rows(source) {
            let row = row?;
            let (entry, allomorph) = parse_row(&row)?;
            match by_id.get(&entry.id) {
                Some(&i) => {
                    let known = &mut entries[i];
                    if known.class != entry.class
                        || known.position != entry.position
                        || known.applies_to != entry.applies_to
                        || known.strip != entry.strip
                    {
                        return Err(LoadError::InconsistentAffix {
                            line: row.line,
                            id: entry.id,
                        });
                    }
                    if !known.surface_forms.contains(&allomorph) {
                        known.surface_forms.push(allomorph);
                    }
                }
                None => {
                    by_id.insert(entry.id.clone(), entries.len());
                    entries.push(AffixEntry {
                        surface_forms: vec![allomorph],
                        ..entry
                    });
                }
            }
        }
        Ok(Self::from_entries(entries))
    }

    /// Build a store from already-validated entries.
    pub fn from_entries(mut entries: Vec<AffixEntry>) -> Self {
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        let by_id = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), i))
            .collect();
        let mut trie = SuffixTrie::new();
        for (i, e) in entries.iter().enumerate() {
            if e.position != Position::Suffix || !e.strip {
                continue;
            }
            for (j, form) in e.surface_forms.iter().enumerate() {
                trie.insert(form, (i as u32, j as u32));
            }
        }
        AffixStore {
            entries,
            by_id,
            trie,
        }
    }

    /// Entries ordered by id.
    pub fn entries(&self) -> &[AffixEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Option<&AffixEntry> {
        self.by_id.get(id).map(|&i| &self.entries[i])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Strippable suffixes of `class` that end `word`, leave a stem of at
    /// least [`MIN_STEM_CHARS`] characters and (with a hint) apply to one of
    /// the hinted parts of speech.
    ///
    /// Sorted longest allomorph first; ties by affix id, then allomorph.
    pub fn match_suffixes(
        &self,
        word: &str,
        class: AffixClass,
        pos_hint: Option<PosSet>,
    ) -> Vec<SuffixMatch<'_>> {
        let word_chars = word.chars().count();
        let mut found = Vec::new();
        self.trie.for_each_suffix(word, |suffix_chars, (ei, fi)| {
            if word_chars - suffix_chars < MIN_STEM_CHARS {
                return;
            }
            let entry = &self.entries[ei as usize];
            if entry.class != class {
                return;
            }
            if let Some(hint) = pos_hint {
                if !entry.applies_to.intersects(hint) {
                    return;
                }
            }
            found.push(SuffixMatch {
                entry,
                allomorph: entry.surface_forms[fi as usize].as_str(),
            });
        });
        found.sort_by(|a, b| {
            b.allomorph
                .len()
                .cmp(&a.allomorph.len())
                .then_with(|| a.entry.id.cmp(&b.entry.id))
                .then_with(|| a.allomorph.cmp(b.allomorph))
        });
        found
    }

    /// Suffix and allomorph counts per `(POS, class)` cell; prefixes are not counted.
    ///
    /// An affix that applies to several parts of speech counts once in each cell.
    pub fn counts(&self) -> BTreeMap<(PosTag, AffixClass), CellCount> {
        let mut counts: BTreeMap<(PosTag, AffixClass), CellCount> = BTreeMap::new();
        for e in self
            .entries
            .iter()
            .filter(|e| e.position == Position::Suffix)
        {
            for pos in e.applies_to.iter() {
                let cell = counts.entry((pos, e.class)).or_default();
                cell.suffixes += 1;
                cell.allomorphs += e.surface_forms.len();
            }
        }
        counts
    }

    /// Write the store back out in the load format, one row per allomorph.
    pub fn write_tsv<W: Write>(&self, mut out: W) -> io::Result<()> {
        for e in &self.entries {
            let pos_list: Vec<&str> = e.applies_to.iter().map(PosTag::code).collect();
            for form in &e.surface_forms {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    e.id,
                    form,
                    e.class.code(),
                    e.position.code(),
                    pos_list.join(","),
                    u8::from(e.strip)
                )?;
            }
        }
        Ok(())
    }
}

fn parse_row(row: &Row) -> Result<(AffixEntry, String), LoadError> {
    let [id, form, class, position, pos_list, strip] = row.columns::<6>()?;
    let line = row.line;

    if id.trim().is_empty() {
        return Err(LoadError::EmptyId { line });
    }
    if form.is_empty() {
        return Err(LoadError::EmptyAllomorph {
            line,
            id: id.to_string(),
        });
    }
    if !is_normalized_word(form) {
        return Err(LoadError::NotNormalized {
            line,
            form: form.to_string(),
        });
    }
    let class: AffixClass = class.parse().map_err(|_| LoadError::UnknownClass {
        line,
        code: class.to_string(),
    })?;
    let position = match position {
        "SUF" => Position::Suffix,
        "PRE" => Position::Prefix,
        other => {
            return Err(LoadError::UnknownPosition {
                line,
                code: other.to_string(),
            })
        }
    };

    let mut applies_to = PosSet::EMPTY;
    for code in pos_list.split(',').map(str::trim).filter(|c| !c.is_empty()) {
        let pos: PosTag = code.parse().map_err(|_| LoadError::UnknownPos {
            line,
            code: code.to_string(),
        })?;
        if !pos.is_open() {
            return Err(LoadError::NonOpenClass {
                line,
                id: id.to_string(),
                pos: code.to_string(),
            });
        }
        applies_to.insert(pos);
    }
    if applies_to.is_empty() {
        return Err(LoadError::EmptyPosList {
            line,
            id: id.to_string(),
        });
    }

    let strip = tsv::flag(strip, line, 6)?;
    if position == Position::Prefix && strip {
        return Err(LoadError::StrippablePrefix {
            line,
            id: id.to_string(),
        });
    }

    let entry = AffixEntry {
        id: id.to_string(),
        surface_forms: Vec::new(),
        class,
        position,
        applies_to,
        strip,
    };
    Ok((entry, form.to_string()))
}
