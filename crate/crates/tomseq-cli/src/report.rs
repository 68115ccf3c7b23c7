//! Report generation: computes the selected tables over a degree range,
//! marks out-of-reach cells, renders csv / json / b-file output, and
//! compares computed cells against the golden registry.

use std::fmt::Write as _;

use tomseq::cache::Family;
use tomseq::connectivity::{self, ClassFilter};
use tomseq::enumerate::sn_classes_of_an_subgroups;
use tomseq::properties::Property;
use tomseq::Error;

use crate::engine::Engine;
use crate::golden;

pub const ALL_TABLES: [&str; 12] = [
    "classcounts",
    "orders",
    "totals",
    "sums",
    "incidences",
    "edges",
    "maxp",
    "maxp-totals",
    "property-totals",
    "redblue",
    "connected",
    "connseq",
];

pub const PARTITION_TABLE: &str = "connpartitions";

/// One report row: the degree plus either values or an unavailability
/// marker.
pub enum Cell {
    Computed(Vec<i128>),
    RequiresImport,
}

pub struct Report {
    pub table: &'static str,
    pub family: Family,
    pub columns: Vec<&'static str>,
    pub rows: Vec<(usize, Cell)>,
}

pub struct Mismatch {
    pub table: String,
    pub family: Family,
    pub n: usize,
    pub column: String,
    pub computed: i128,
    pub expected: i64,
}

fn table_id(name: &str) -> Result<&'static str, Error> {
    ALL_TABLES
        .iter()
        .chain(std::iter::once(&PARTITION_TABLE))
        .find(|t| **t == name)
        .copied()
        .ok_or_else(|| {
            Error::Format(format!(
                "unknown table {name:?}; available: {} and {PARTITION_TABLE}",
                ALL_TABLES.join(", ")
            ))
        })
}

/// Tables defined only over the symmetric family.
pub fn symmetric_only(table: &str) -> bool {
    matches!(table, "redblue" | "connseq")
}

/// Expands the table selection; `all` silently drops the symmetric-only
/// tables for the alternating family (requesting one explicitly still
/// errors).
pub fn parse_table_list(selection: &str, family: Family) -> Result<Vec<&'static str>, Error> {
    if selection == "all" {
        let mut v: Vec<&'static str> = ALL_TABLES
            .iter()
            .copied()
            .filter(|t| family == Family::S || !symmetric_only(t))
            .collect();
        v.push(PARTITION_TABLE);
        return Ok(v);
    }
    selection.split(',').map(|t| table_id(t.trim())).collect()
}

/// MAXP column order: solvable, supersolvable, abelian, cyclic, nilpotent.
const MAXP_PROPS: [Property; 5] = [
    Property::Solvable,
    Property::Supersolvable,
    Property::Abelian,
    Property::Cyclic,
    Property::Nilpotent,
];

fn compute_row(
    engine: &mut Engine,
    table: &'static str,
    family: Family,
    n: usize,
) -> Result<Cell, Error> {
    let unavailable = |e: Error| match e {
        Error::BudgetExceeded { .. } => Ok(Cell::RequiresImport),
        other => Err(other),
    };
    match table {
        "connpartitions" => Ok(Cell::Computed(vec![
            connectivity::connected_partition_count(n as u32, false) as i128,
            connectivity::connected_partition_count(n as u32, true) as i128,
        ])),
        "classcounts" => {
            // marks metadata plus property flags; works for imports with a
            // PROPS block
            match engine.marks_source(family, n) {
                Ok(src) => {
                    let Some(flags) = src.flags() else {
                        return Ok(Cell::RequiresImport);
                    };
                    let mut row = vec![src.marks().class_count() as i128];
                    let mut per = [0i128; 5];
                    for f in flags {
                        for (k, p) in Property::TABLE_ORDER.iter().enumerate() {
                            if f.get(*p) {
                                per[k] += 1;
                            }
                        }
                    }
                    row.extend(per);
                    Ok(Cell::Computed(row))
                }
                Err(e) => unavailable(e),
            }
        }
        "orders" => match engine.marks_source(family, n) {
            Ok(src) => {
                let (distinct, missing) = src.marks().order_stats();
                Ok(Cell::Computed(vec![distinct as i128, missing as i128]))
            }
            Err(e) => unavailable(e),
        },
        "totals" => match engine.marks_source(family, n) {
            Ok(src) => Ok(Cell::Computed(vec![src.marks().total_subgroups()])),
            Err(e) => unavailable(e),
        },
        "sums" => match engine.marks_source(family, n) {
            Ok(src) => Ok(Cell::Computed(vec![
                src.marks().entry_sum(),
                src.marks().diagonal_sum(),
            ])),
            Err(e) => unavailable(e),
        },
        "incidences" => match engine.marks_source(family, n) {
            Ok(src) => Ok(Cell::Computed(vec![
                src.marks().incidence_count(),
                src.marks().containment_sum(),
            ])),
            Err(e) => unavailable(e),
        },
        "edges" => match engine.marks_source(family, n) {
            Ok(src) => Ok(Cell::Computed(vec![
                src.marks().poset_edge_count()? as i128,
                src.marks().lattice_edge_count()?,
            ])),
            Err(e) => unavailable(e),
        },
        "maxp" | "maxp-totals" => match engine.marks_source(family, n) {
            Ok(src) => {
                let Some(flags) = src.flags() else {
                    return Ok(Cell::RequiresImport);
                };
                let mut row = Vec::with_capacity(5);
                for p in MAXP_PROPS {
                    if table == "maxp" {
                        row.push(src.marks().maximal_property_classes(flags, p)?.len() as i128);
                    } else {
                        row.push(src.marks().total_maximal_property(flags, p)?);
                    }
                }
                Ok(Cell::Computed(row))
            }
            Err(e) => unavailable(e),
        },
        "property-totals" => match engine.marks_source(family, n) {
            Ok(src) => {
                let Some(flags) = src.flags() else {
                    return Ok(Cell::RequiresImport);
                };
                let mt = src.marks();
                let mut row = vec![mt.total_subgroups()];
                let mut per = [0i128; 5];
                for (i, f) in flags.iter().enumerate() {
                    for (k, p) in Property::TABLE_ORDER.iter().enumerate() {
                        if f.get(*p) {
                            per[k] += mt.class_length(i) as i128;
                        }
                    }
                }
                row.extend(per);
                Ok(Cell::Computed(row))
            }
            Err(e) => unavailable(e),
        },
        // the remaining tables need materialized groups, so only direct
        // enumeration serves them
        "redblue" => {
            if family != Family::S {
                return Err(Error::Format(
                    "the redblue split is defined for the symmetric family; use --family S".into(),
                ));
            }
            if !engine.enumerable(family, n) {
                return Ok(Cell::RequiresImport);
            }
            let (blue, red) = sn_classes_of_an_subgroups(n, &engine.cfg)?;
            Ok(Cell::Computed(vec![blue as i128, red as i128]))
        }
        "connected" => {
            if !engine.enumerable(family, n) {
                return Ok(Cell::RequiresImport);
            }
            let table_rc = engine.class_table(family, n)?;
            let flags = engine.property_flags(family, n)?;
            let connected = connectivity::connected_class_count(
                &table_rc,
                ClassFilter::All,
                engine.cfg.parallel,
            );
            let per =
                connectivity::connected_property_counts(&table_rc, &flags, engine.cfg.parallel);
            // columns: connected, abelian, nilpotent, solvable, supersolvable
            Ok(Cell::Computed(vec![
                connected as i128,
                per[0] as i128,
                per[2] as i128,
                per[3] as i128,
                per[4] as i128,
            ]))
        }
        "connseq" => {
            if family != Family::S {
                return Err(Error::Format(
                    "connected-class splits are defined for the symmetric family; use --family S"
                        .into(),
                ));
            }
            if !engine.enumerable(family, n) {
                return Ok(Cell::RequiresImport);
            }
            let table_rc = engine.class_table(family, n)?;
            let all = connectivity::connected_class_count(
                &table_rc,
                ClassFilter::All,
                engine.cfg.parallel,
            );
            let blue = connectivity::connected_class_count(
                &table_rc,
                ClassFilter::InAlternating,
                engine.cfg.parallel,
            );
            Ok(Cell::Computed(vec![
                all as i128,
                blue as i128,
                (all - blue) as i128,
            ]))
        }
        other => Err(Error::Format(format!("unknown table {other:?}"))),
    }
}

fn columns_of(table: &'static str, family: Family) -> Vec<&'static str> {
    golden::GOLDEN
        .iter()
        .find(|g| g.table == table && g.family == family)
        .map(|g| g.columns.to_vec())
        .unwrap_or_else(|| match table {
            "maxp-totals" => golden::MAXP_COLUMNS.to_vec(),
            "connpartitions" => vec!["connected", "connected-even"],
            _ => vec![],
        })
}

pub fn build_report(
    engine: &mut Engine,
    table: &'static str,
    family: Family,
    max_n: usize,
) -> Result<Report, Error> {
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        rows.push((n, compute_row(engine, table, family, n)?));
    }
    Ok(Report {
        table,
        family,
        columns: columns_of(table, family),
        rows,
    })
}

/// Verification mode covers every registry table; cells outside the
/// registry (or beyond its 13 rows) pass silently.
pub fn golden_mismatches(report: &Report) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for (n, cell) in &report.rows {
        let Cell::Computed(values) = cell else {
            continue;
        };
        let Some(expected) = golden::expected(report.table, report.family, *n) else {
            continue;
        };
        for (k, (&got, &want)) in values.iter().zip(expected).enumerate() {
            if got != want as i128 {
                out.push(Mismatch {
                    table: report.table.to_string(),
                    family: report.family,
                    n: *n,
                    column: report.columns.get(k).copied().unwrap_or("?").to_string(),
                    computed: got,
                    expected: want,
                });
            }
        }
    }
    out
}

// ---- rendering -------------------------------------------------------------

pub fn render_csv(report: &Report) -> String {
    let mut out = String::new();
    writeln!(out, "n,{}", report.columns.join(",")).unwrap();
    for (n, cell) in &report.rows {
        match cell {
            Cell::Computed(values) => {
                let vals: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{n},{}", vals.join(",")).unwrap();
            }
            Cell::RequiresImport => {
                let marker = vec!["requires-import"; report.columns.len()];
                writeln!(out, "{n},{}", marker.join(",")).unwrap();
            }
        }
    }
    out
}

pub fn render_json(report: &Report) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = report
        .rows
        .iter()
        .map(|(n, cell)| match cell {
            Cell::Computed(values) => serde_json::json!({
                "n": n,
                "status": "computed",
                "values": values.iter().map(|v| {
                    // report cells stay far below 2^63; serialize as i64
                    i64::try_from(*v).expect("report cell fits in 64 bits")
                }).collect::<Vec<i64>>(),
            }),
            Cell::RequiresImport => serde_json::json!({
                "n": n,
                "status": "requires-import",
            }),
        })
        .collect();
    let mut value = serde_json::json!({
        "family": report.family.letter().to_string(),
        "table": report.table,
        "columns": report.columns,
        "rows": rows,
    });
    if let Some(source) = golden::source_of(report.table, report.family) {
        value["sources"] = serde_json::Value::String(source.to_string());
    }
    value
}

/// One b-file per column: computed prefix as `n value` lines, unavailable
/// rows as comments.
pub fn render_bfiles(report: &Report) -> Vec<(String, String)> {
    report
        .columns
        .iter()
        .enumerate()
        .map(|(k, col)| {
            let mut body = String::new();
            for (n, cell) in &report.rows {
                match cell {
                    Cell::Computed(values) => writeln!(body, "{n} {}", values[k]).unwrap(),
                    Cell::RequiresImport => writeln!(body, "# {n} requires-import").unwrap(),
                }
            }
            (
                format!("{}_{}_{}.b", report.family.letter(), report.table, col),
                body,
            )
        })
        .collect()
}
