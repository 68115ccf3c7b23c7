//! Computation backend for the CLI: lazily enumerated class tables with a
//! JSON cache, imported marks tables, and derived artifacts.

use std::collections::HashMap;
use std::path::PathBuf;
use std::rc::Rc;

use tomseq::cache::{self, Family};
use tomseq::enumerate::{class_table_with, ClassTable, EnumConfig};
use tomseq::marks::MarksTable;
use tomseq::properties::{classify_classes, PropertyFlags};
use tomseq::Error;

/// Where a marks table came from; imported tables have no groups behind
/// them, so group-level tables (connectivity, blue/red) stay unavailable.
pub enum MarksSource {
    Enumerated(Rc<MarksTable>, Rc<Vec<PropertyFlags>>),
    Imported(Rc<MarksTable>, Option<Rc<Vec<PropertyFlags>>>),
}

impl MarksSource {
    pub fn marks(&self) -> &MarksTable {
        match self {
            MarksSource::Enumerated(mt, _) | MarksSource::Imported(mt, _) => mt,
        }
    }

    pub fn flags(&self) -> Option<&[PropertyFlags]> {
        match self {
            MarksSource::Enumerated(_, f) => Some(f),
            MarksSource::Imported(_, f) => f.as_deref().map(|v| &v[..]),
        }
    }
}

pub struct Engine {
    pub cfg: EnumConfig,
    cache_dir: Option<PathBuf>,
    imports: HashMap<(Family, usize), (Rc<MarksTable>, Option<Rc<Vec<PropertyFlags>>>)>,
    tables: HashMap<(Family, usize), Rc<ClassTable>>,
    flags: HashMap<(Family, usize), Rc<Vec<PropertyFlags>>>,
    marks: HashMap<(Family, usize), Rc<MarksTable>>,
}

impl Engine {
    pub fn new(budget: u64, cache_dir: Option<PathBuf>) -> Self {
        Engine {
            cfg: EnumConfig {
                max_group_order: budget,
                parallel: true,
            },
            cache_dir,
            imports: HashMap::new(),
            tables: HashMap::new(),
            flags: HashMap::new(),
            marks: HashMap::new(),
        }
    }

    /// Registers an imported table under (family, n) when its name matches
    /// the `S<n>` / `A<n>` convention; other names are verify-only.
    pub fn register_import(
        &mut self,
        mt: MarksTable,
        props: Option<Vec<PropertyFlags>>,
    ) -> Option<(Family, usize)> {
        let key = parse_table_name(mt.name())?;
        self.imports.insert(key, (Rc::new(mt), props.map(Rc::new)));
        Some(key)
    }

    /// Whether direct enumeration is possible for this key under the budget.
    pub fn enumerable(&self, family: Family, n: usize) -> bool {
        group_order(family, n).is_some_and(|o| o <= self.cfg.max_group_order)
    }

    /// Class table via cache or enumeration. Errors with the budget refusal
    /// when out of reach.
    pub fn class_table(&mut self, family: Family, n: usize) -> Result<Rc<ClassTable>, Error> {
        if let Some(t) = self.tables.get(&(family, n)) {
            return Ok(t.clone());
        }
        if !self.enumerable(family, n) {
            return Err(Error::BudgetExceeded {
                order: group_order(family, n).unwrap_or(u64::MAX),
                budget: self.cfg.max_group_order,
            });
        }
        if let Some(dir) = &self.cache_dir {
            let path = dir.join(cache::cache_file_name(family, n));
            if let Ok(text) = std::fs::read_to_string(&path) {
                if let Ok(table) = cache::from_json(&text, family, n) {
                    let rc = Rc::new(table);
                    self.tables.insert((family, n), rc.clone());
                    return Ok(rc);
                }
                // unreadable or stale entries are recomputed and rewritten
            }
        }
        let table = class_table_with(&family.group(n)?, &self.cfg)?;
        if let Some(dir) = &self.cache_dir {
            let path = dir.join(cache::cache_file_name(family, n));
            // cache write failures are not fatal
            let _ = cache::write_atomic(&path, &cache::to_json(&table, family, n));
        }
        let rc = Rc::new(table);
        self.tables.insert((family, n), rc.clone());
        Ok(rc)
    }

    pub fn property_flags(
        &mut self,
        family: Family,
        n: usize,
    ) -> Result<Rc<Vec<PropertyFlags>>, Error> {
        if let Some(f) = self.flags.get(&(family, n)) {
            return Ok(f.clone());
        }
        let table = self.class_table(family, n)?;
        let f = Rc::new(classify_classes(&table, self.cfg.parallel));
        self.flags.insert((family, n), f.clone());
        Ok(f)
    }

    /// Marks table with its flags: enumerated when within budget, otherwise
    /// from a registered import.
    pub fn marks_source(&mut self, family: Family, n: usize) -> Result<MarksSource, Error> {
        if self.enumerable(family, n) {
            let mt =
                if let Some(mt) = self.marks.get(&(family, n)) {
                    mt.clone()
                } else {
                    let table = self.class_table(family, n)?;
                    let mt =
                        Rc::new(
                            MarksTable::from_class_table(&table, self.cfg.parallel)
                                .with_name(format!("{}{}", family.letter(), n)),
                        );
                    self.marks.insert((family, n), mt.clone());
                    mt
                };
            let flags = self.property_flags(family, n)?;
            return Ok(MarksSource::Enumerated(mt, flags));
        }
        if let Some((mt, props)) = self.imports.get(&(family, n)) {
            return Ok(MarksSource::Imported(mt.clone(), props.clone()));
        }
        Err(Error::BudgetExceeded {
            order: group_order(family, n).unwrap_or(u64::MAX),
            budget: self.cfg.max_group_order,
        })
    }
}

/// `|S_n|` or `|A_n|`, None on overflow (far beyond any budget anyway).
pub fn group_order(family: Family, n: usize) -> Option<u64> {
    let fact = tomseq::arith::factorial(n as u64).ok()?;
    Some(match family {
        Family::S => fact,
        Family::A => {
            if n <= 2 {
                1
            } else {
                fact / 2
            }
        }
    })
}

/// Parses `S4` / `A12` style table names.
pub fn parse_table_name(name: &str) -> Option<(Family, usize)> {
    let mut chars = name.chars();
    let family = match chars.next()? {
        'S' | 's' => Family::S,
        'A' | 'a' => Family::A,
        _ => return None,
    };
    let n: usize = chars.as_str().parse().ok()?;
    if n == 0 || n > 64 {
        return None;
    }
    Some((family, n))
}

/// Resolves the cache directory: explicit flag beats the `TOMSEQ_CACHE_DIR`
/// environment variable beats the platform default; `disabled` wins over
/// everything.
pub fn resolve_cache_dir(flag: Option<PathBuf>, disabled: bool) -> Option<PathBuf> {
    if disabled {
        return None;
    }
    if let Some(dir) = flag {
        return Some(dir);
    }
    if let Ok(dir) = std::env::var("TOMSEQ_CACHE_DIR") {
        if !dir.is_empty() {
            return Some(PathBuf::from(dir));
        }
    }
    if let Ok(xdg) = std::env::var("XDG_CACHE_HOME") {
        if !xdg.is_empty() {
            return Some(PathBuf::from(xdg).join("tomseq"));
        }
    }
    std::env::var("HOME")
        .ok()
        .filter(|h| !h.is_empty())
        .map(|h| PathBuf::from(h).join(".cache").join("tomseq"))
}
