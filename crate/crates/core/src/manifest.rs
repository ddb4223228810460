//! Expected affix counts per `(POS, class)` cell and the validator that
//! compares a loaded store against them.

use std::collections::BTreeMap;
use std::fmt;
use std::io::BufRead;

use crate::affix::{AffixClass, AffixStore, CellCount};
use crate::error::LoadError;
use crate::pos::PosTag;
use crate::tsv;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AffixManifest {
    pub expected_counts: BTreeMap<(PosTag, AffixClass), CellCount>,
}

impl AffixManifest {
    /// Parse `pos<TAB>class<TAB>suffix_count<TAB>allomorph_count` rows.
    pub fn load<R: BufRead>(source: R) -> Result<Self, LoadError> {
        let mut expected_counts = BTreeMap::new();
        for row in tsv::rows(source) {
            let row = row?;
            let line = row.line;
            let [pos, class, suffixes, allomorphs] = row.columns::<4>()?;
            let pos: PosTag = pos.parse().map_err(|_| LoadError::UnknownPos {
                line,
                code: pos.to_string(),
            })?;
            let class: AffixClass = class.parse().map_err(|_| LoadError::UnknownClass {
                line,
                code: class.to_string(),
            })?;
            let count = |v: &str| {
                v.parse::<usize>().map_err(|_| LoadError::BadCount {
                    line,
                    value: v.to_string(),
                })
            };
            let cell = CellCount {
                suffixes: count(suffixes)?,
                allomorphs: count(allomorphs)?,
            };
            if expected_counts.insert((pos, class), cell).is_some() {
                return Err(LoadError::DuplicateCell {
                    line,
                    pos: pos.code().to_string(),
                    class: class.code().to_string(),
                });
            }
        }
        Ok(AffixManifest { expected_counts })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub pos: PosTag,
    pub class: AffixClass,
    pub expected: CellCount,
    pub actual: CellCount,
}

impl CellReport {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }

    /// Missing (positive) or surplus (negative) suffixes and allomorphs.
    pub fn deficit(&self) -> (i64, i64) {
        (
            self.expected.suffixes as i64 - self.actual.suffixes as i64,
            self.expected.allomorphs as i64 - self.actual.allomorphs as i64,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestReport {
    pub cells: Vec<CellReport>,
}

impl ManifestReport {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(CellReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| !c.passed())
    }

    pub fn cell(&self, pos: PosTag, class: AffixClass) -> Option<&CellReport> {
        self.cells.iter().find(|c| c.pos == pos && c.class == class)
    }
}

impl fmt::Display for ManifestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cells {
            write!(
                f,
                "{}\t{}\texpected {}\tactual {}\t",
                c.pos.code(),
                c.class.code(),
                c.expected,
                c.actual
            )?;
            if c.passed() {
                writeln!(f, "ok")?;
            } else {
                let (s, a) = c.deficit();
                writeln!(f, "FAIL (deficit {s} ({a}))")?;
            }
        }
        let failed = self.failures().count();
        write!(
            f,
            "manifest: {} cells, {} failed: {}",
            self.cells.len(),
            failed,
            if failed == 0 { "PASS" } else { "FAIL" }
        )
    }
}

/// Compare store counts with the manifest.
///
/// Every manifest cell is reported. Store cells absent from the manifest are
/// reported against an expected `0 (0)`, so a surplus never passes silently.
pub fn validate_manifest(store: &AffixStore, manifest: &AffixManifest) -> ManifestReport {
    let actual = store.counts();
    let mut keys: Vec<(PosTag, AffixClass)> = manifest.expected_counts.keys().copied().collect();
    keys.extend(actual.keys().copied());
    keys.sort();
    keys.dedup();

    let cells = keys
        .into_iter()
        .map(|(pos, class)| CellReport {
            pos,
            class,
            expected: manifest
                .expected_counts
                .get(&(pos, class))
                .copied()
                .unwrap_or_default(),
            actual: actual.get(&(pos, class)).copied().unwrap_or_default(),
        })
        .collect();
    ManifestReport { cells }
}
