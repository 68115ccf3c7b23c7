//! JSON cache for computed class tables.
//!
//! A cache entry stores, per class: order, length, label, and a generator
//! list for the canonical representative — full class member lists are
//! elided, since the orbit rebuilds cheaply from the representative.
//! Entries are keyed by (family, degree, format version); bump
//! [`CACHE_VERSION`] on any schema or canonical-ordering change so stale
//! files are never misread. Writes go to a temp file in the target
//! directory followed by a rename, so concurrent writers behave as an
//! atomic write-once-per-key store.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::enumerate::{ClassTable, SubgroupClass};
use crate::error::Error;
use crate::group::Group;
use crate::perm::Perm;
use crate::Result;

pub const CACHE_VERSION: u32 = 1;

/// Group family the entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    S,
    A,
}

impl Family {
    pub fn letter(&self) -> char {
        match self {
            Family::S => 'S',
            Family::A => 'A',
        }
    }

    pub fn group(&self, n: usize) -> Result<Group> {
        match self {
            Family::S => Group::symmetric(n),
            Family::A => Group::alternating(n),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "S" | "s" => Ok(Family::S),
            "A" | "a" => Ok(Family::A),
            other => Err(Error::Format(format!(
                "unknown family {other:?}, expected S or A"
            ))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CachedClass {
    order: u64,
    length: u64,
    label: String,
    generators: Vec<Vec<u16>>,
}

#[derive(Serialize, Deserialize)]
struct CachedTable {
    version: u32,
    family: Family,
    n: usize,
    degree: usize,
    classes: Vec<CachedClass>,
}

/// File name for a cache key.
pub fn cache_file_name(family: Family, n: usize) -> String {
    format!("{}{}.v{}.json", family.letter(), n, CACHE_VERSION)
}

/// Serializes a class table for (family, n).
pub fn to_json(table: &ClassTable, family: Family, n: usize) -> String {
    let entry = CachedTable {
        version: CACHE_VERSION,
        family,
        n,
        degree: table.group.degree(),
        classes: table
            .classes
            .iter()
            .map(|c| CachedClass {
                order: c.order,
                length: c.class_length,
                label: c.label.clone(),
                generators: c
                    .representative
                    .generators()
                    .iter()
                    .map(|g| g.images().to_vec())
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&entry).expect("cache entries always serialize")
}

/// Rebuilds a class table from a cache entry, verifying the key and basic
/// consistency (orders, monotonic sort). Representatives are re-closed from
/// their stored generators.
pub fn from_json(text: &str, family: Family, n: usize) -> Result<ClassTable> {
    let entry: CachedTable =
        serde_json::from_str(text).map_err(|e| Error::Format(format!("cache entry: {e}")))?;
    if entry.version != CACHE_VERSION || entry.family != family || entry.n != n {
        return Err(Error::Format("cache entry key mismatch".to_string()));
    }
    let group = family.group(n)?;
    if group.degree() != entry.degree {
        return Err(Error::Format("cache entry degree mismatch".to_string()));
    }
    let mut classes = Vec::with_capacity(entry.classes.len());
    for (index, c) in entry.classes.into_iter().enumerate() {
        let gens: Result<Vec<Perm>> = c.generators.into_iter().map(Perm::from_images).collect();
        let representative = Group::closure(&gens?, entry.degree)?;
        if representative.order() != c.order {
            return Err(Error::Format(format!(
                "cache entry class {index}: stored order {} does not match closure",
                c.order
            )));
        }
        classes.push(SubgroupClass {
            representative,
            class_length: c.length,
            order: c.order,
            label: c.label,
            index,
        });
    }
    if !classes.windows(2).all(|w| w[0].order <= w[1].order) {
        return Err(Error::Format(
            "cache entry classes out of order".to_string(),
        ));
    }
    Ok(ClassTable { group, classes })
}

/// Atomic write: temp file in the same directory, then rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    std::fs::create_dir_all(dir)?;
    let mut tmp = PathBuf::from(dir);
    tmp.push(format!(
        ".{}.tmp{}",
        path.file_name().and_then(|n| n.to_str()).unwrap_or("cache"),
        std::process::id()
    ));
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::class_table;

    #[test]
    fn cache_roundtrip_preserves_the_table() {
        let table = class_table(&Group::symmetric(4).unwrap()).unwrap();
        let json = to_json(&table, Family::S, 4);
        let back = from_json(&json, Family::S, 4).unwrap();
        assert_eq!(back.len(), table.len());
        for (a, b) in table.classes.iter().zip(&back.classes) {
            assert_eq!(a.representative, b.representative);
            assert_eq!(a.class_length, b.class_length);
            assert_eq!(a.label, b.label);
        }
        // wrong key refused
        assert!(from_json(&json, Family::A, 4).is_err());
        assert!(from_json(&json, Family::S, 5).is_err());
    }

    #[test]
    fn atomic_write_lands() {
        let dir = std::env::temp_dir().join(format!("tomseq-cache-test-{}", std::process::id()));
        let path = dir.join(cache_file_name(Family::S, 3));
        write_atomic(&path, "hello").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "hello");
        std::fs::remove_dir_all(&dir).ok();
    }
}
