//! Line-oriented interchange format for tables of marks (UTF-8, `.tom`).
//!
//! ```text
//! TOM <name> <r>
//! CLASS <i> order=<m> length=<l> label=<s>     (r lines, i = 1..r)
//! ROW <i>: <v_1> ... <v_i>                     (r lines, lower triangular)
//! PROPS <i>: a c n s ss                        (optional r lines, 0/1 flags)
//! ```
//!
//! Import validates every structural invariant of a marks table and, when
//! valid, enables all derived quantities (totals, sums, incidences, edges,
//! and — given the `PROPS` block — maximal property-P counts) without any
//! group enumeration. This is the route to degrees beyond the enumeration
//! budget: feed in an externally computed table and read everything off it.
//! Export is deterministic, so export → import → export is byte-identical.

use std::fmt::Write as _;

use thiserror::Error;

use crate::marks::{ClassInfo, MarksTable};
use crate::properties::PropertyFlags;

/// Parse and validation failures, each named after the invariant it breaks.
/// Row and column numbers are 1-based, matching the file format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TomError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("expected {expected} classes, found {found}")]
    CountMismatch { expected: usize, found: usize },

    #[error("row {row} breaks lower-triangularity: a row must carry exactly as many entries as its index")]
    NotLowerTriangular { row: usize },

    #[error("row {row}: first entry must equal the group order divided by the class order")]
    FirstColumnMismatch { row: usize },

    #[error("row {row}, column {col}: the diagonal entry (the normalizer index over the subgroup) must divide every entry of its row")]
    DiagonalDivisibility { row: usize, col: usize },

    #[error("row {row}: diagonal entry must be positive")]
    ZeroDiagonal { row: usize },

    #[error("row {row}: classes must be sorted by non-decreasing order")]
    OrderSort { row: usize },

    #[error("row {row}, column {col}: a nonzero mark requires the column class order to divide the row class order")]
    OrderDivisibility { row: usize, col: usize },

    #[error("row {row}: class length must equal the first entry divided by the diagonal")]
    ClassLengthMismatch { row: usize },

    #[error("the first class must be the trivial group (order 1)")]
    TrivialFirstClass,

    #[error("the last class must be the whole group")]
    WholeGroupLast,

    #[error("row {row}, column {col}: marks are non-negative")]
    NegativeEntry { row: usize, col: usize },

    #[error("row {row}: property flags violate the implication chain cyclic ⇒ abelian ⇒ nilpotent ⇒ supersolvable ⇒ solvable")]
    InvalidProps { row: usize },
}

/// Serializes a table, with an optional property block.
pub fn write_tom(mt: &MarksTable, props: Option<&[PropertyFlags]>) -> String {
    let r = mt.class_count();
    let mut out = String::new();
    writeln!(out, "TOM {} {}", mt.name(), r).unwrap();
    for (i, c) in mt.classes().iter().enumerate() {
        writeln!(
            out,
            "CLASS {} order={} length={} label={}",
            i + 1,
            c.order,
            c.length,
            c.label
        )
        .unwrap();
    }
    for i in 0..r {
        write!(out, "ROW {}:", i + 1).unwrap();
        for v in mt.dense_row(i) {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    if let Some(flags) = props {
        assert_eq!(flags.len(), r, "one flag set per class");
        for (i, f) in flags.iter().enumerate() {
            writeln!(
                out,
                "PROPS {}: {} {} {} {} {}",
                i + 1,
                u8::from(f.abelian),
                u8::from(f.cyclic),
                u8::from(f.nilpotent),
                u8::from(f.solvable),
                u8::from(f.supersolvable),
            )
            .unwrap();
        }
    }
    out
}

/// Parses and fully validates a table. Returns the property flags when a
/// `PROPS` block is present.
pub fn parse_tom(text: &str) -> Result<(MarksTable, Option<Vec<PropertyFlags>>), TomError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines.next().ok_or(TomError::Syntax {
        line: 1,
        msg: "empty file".into(),
    })?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("TOM") {
        return Err(TomError::Syntax {
            line: line_no,
            msg: "expected TOM header".into(),
        });
    }
    let name = parts
        .next()
        .ok_or(TomError::Syntax {
            line: line_no,
            msg: "missing table name".into(),
        })?
        .to_string();
    let r: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .filter(|&n| n > 0)
        .ok_or(TomError::Syntax {
            line: line_no,
            msg: "missing or invalid class count".into(),
        })?;

    let mut classes = Vec::with_capacity(r);
    for want in 1..=r {
        let (line_no, line) = lines.next().ok_or(TomError::CountMismatch {
            expected: r,
            found: want - 1,
        })?;
        classes.push(parse_class_line(line_no, line, want)?);
    }

    let mut dense_rows = Vec::with_capacity(r);
    for want in 1..=r {
        let (line_no, line) = lines.next().ok_or(TomError::CountMismatch {
            expected: r,
            found: want - 1,
        })?;
        dense_rows.push(parse_row_line(line_no, line, want)?);
    }

    let mut props: Option<Vec<PropertyFlags>> = None;
    let mut rest = lines.peekable();
    if rest.peek().is_some() {
        let mut flags = Vec::with_capacity(r);
        for want in 1..=r {
            let (line_no, line) = rest.next().ok_or(TomError::CountMismatch {
                expected: r,
                found: want - 1,
            })?;
            flags.push(parse_props_line(line_no, line, want)?);
        }
        if let Some((line_no, line)) = rest.next() {
            return Err(TomError::Syntax {
                line: line_no,
                msg: format!("unexpected trailing line: {line}"),
            });
        }
        props = Some(flags);
    }

    let table = MarksTable::from_raw(name, classes, dense_rows)?;
    Ok((table, props))
}

fn parse_class_line(line_no: usize, line: &str, want: usize) -> Result<ClassInfo, TomError> {
    let syntax = |msg: &str| TomError::Syntax {
        line: line_no,
        msg: msg.into(),
    };
    let mut parts = line.split_whitespace();
    if parts.next() != Some("CLASS") {
        return Err(syntax("expected CLASS line"));
    }
    let index: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| syntax("missing class index"))?;
    if index != want {
        return Err(syntax(&format!(
            "class index {index} out of sequence, expected {want}"
        )));
    }
    let mut order = None;
    let mut length = None;
    let mut label = None;
    for field in parts {
        if let Some(v) = field.strip_prefix("order=") {
            order = v.parse::<u64>().ok();
        } else if let Some(v) = field.strip_prefix("length=") {
            length = v.parse::<u64>().ok();
        } else if let Some(v) = field.strip_prefix("label=") {
            label = Some(v.to_string());
        } else {
            return Err(syntax(&format!("unexpected field {field}")));
        }
    }
    match (order, length, label) {
        (Some(order), Some(length), Some(label)) if order >= 1 && length >= 1 => Ok(ClassInfo {
            order,
            length,
            label,
        }),
        _ => Err(syntax(
            "CLASS line needs positive order=, length= and a label=",
        )),
    }
}

fn parse_row_line(line_no: usize, line: &str, want: usize) -> Result<Vec<i64>, TomError> {
    let syntax = |msg: &str| TomError::Syntax {
        line: line_no,
        msg: msg.into(),
    };
    let rest = line
        .strip_prefix("ROW ")
        .ok_or_else(|| syntax("expected ROW line"))?;
    let (index_part, values_part) = rest
        .split_once(':')
        .ok_or_else(|| syntax("ROW line needs a colon"))?;
    let index: usize = index_part
        .trim()
        .parse()
        .map_err(|_| syntax("invalid row index"))?;
    if index != want {
        return Err(syntax(&format!(
            "row index {index} out of sequence, expected {want}"
        )));
    }
    let values: Result<Vec<i64>, _> = values_part
        .split_whitespace()
        .map(|t| t.parse::<i64>())
        .collect();
    let values = values.map_err(|_| syntax("row entries must be decimal integers"))?;
    if values.len() != want {
        return Err(TomError::NotLowerTriangular { row: want });
    }
    Ok(values)
}

fn parse_props_line(line_no: usize, line: &str, want: usize) -> Result<PropertyFlags, TomError> {
    let syntax = |msg: &str| TomError::Syntax {
        line: line_no,
        msg: msg.into(),
    };
    let rest = line
        .strip_prefix("PROPS ")
        .ok_or_else(|| syntax("expected PROPS line"))?;
    let (index_part, values_part) = rest
        .split_once(':')
        .ok_or_else(|| syntax("PROPS line needs a colon"))?;
    let index: usize = index_part
        .trim()
        .parse()
        .map_err(|_| syntax("invalid props index"))?;
    if index != want {
        return Err(syntax(&format!(
            "props index {index} out of sequence, expected {want}"
        )));
    }
    let bits: Result<Vec<u8>, _> = values_part
        .split_whitespace()
        .map(|t| t.parse::<u8>())
        .collect();
    let bits = bits.map_err(|_| syntax("props entries must be 0 or 1"))?;
    if bits.len() != 5 || bits.iter().any(|&b| b > 1) {
        return Err(syntax(
            "PROPS line needs five 0/1 flags: abelian cyclic nilpotent solvable supersolvable",
        ));
    }
    let flags = PropertyFlags {
        abelian: bits[0] == 1,
        cyclic: bits[1] == 1,
        nilpotent: bits[2] == 1,
        solvable: bits[3] == 1,
        supersolvable: bits[4] == 1,
    };
    if !flags.chain_holds() {
        return Err(TomError::InvalidProps { row: want });
    }
    Ok(flags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::class_table;
    use crate::group::Group;
    use crate::properties::classify_classes;

    fn s4_export() -> (MarksTable, Vec<PropertyFlags>) {
        let ct = class_table(&Group::symmetric(4).unwrap()).unwrap();
        let mt = MarksTable::from_class_table(&ct, false).with_name("S4");
        let flags = classify_classes(&ct, false);
        (mt, flags)
    }

    #[test]
    fn roundtrip_is_byte_exact() {
        let (mt, flags) = s4_export();
        let text = write_tom(&mt, Some(&flags));
        let (parsed, parsed_flags) = parse_tom(&text).unwrap();
        assert_eq!(parsed, mt);
        assert_eq!(parsed_flags.as_deref(), Some(&flags[..]));
        assert_eq!(write_tom(&parsed, parsed_flags.as_deref()), text);
    }

    #[test]
    fn derived_quantities_survive_import() {
        let (mt, _) = s4_export();
        let text = write_tom(&mt, None);
        let (parsed, props) = parse_tom(&text).unwrap();
        assert!(props.is_none());
        assert_eq!(parsed.entry_sum(), 146);
        assert_eq!(parsed.diagonal_sum(), 47);
        assert_eq!(parsed.total_subgroups(), 30);
        assert_eq!(parsed.lattice_edge_count().unwrap(), 66);
    }

    /// Rewrites the line starting with `prefix` via `edit`.
    fn corrupt(text: &str, prefix: &str, edit: impl Fn(&str) -> String) -> String {
        let mut hit = false;
        let out: Vec<String> = text
            .lines()
            .map(|l| {
                if l.starts_with(prefix) {
                    hit = true;
                    edit(l)
                } else {
                    l.to_string()
                }
            })
            .collect();
        assert!(hit, "no line starts with {prefix}");
        out.join("\n") + "\n"
    }

    #[test]
    fn corrupted_diagonal_names_the_invariant() {
        let (mt, _) = s4_export();
        let text = write_tom(&mt, None);
        // the D8 row has diagonal 1 and leading entry 3; bump the diagonal
        // to 2, which no longer divides the 3 in column 1
        let row = mt.classes().iter().position(|c| c.label == "D8").unwrap() + 1;
        let bad = corrupt(&text, &format!("ROW {row}:"), |l| {
            let mut parts: Vec<String> = l.split(' ').map(str::to_string).collect();
            let last = parts.last_mut().unwrap();
            assert_eq!(last, "1");
            *last = "2".to_string();
            parts.join(" ")
        });
        match parse_tom(&bad) {
            Err(TomError::DiagonalDivisibility { row: r, col: 1 }) if r == row => {}
            other => panic!("expected diagonal divisibility failure, got {other:?}"),
        }
    }

    #[test]
    fn corrupted_first_column_is_named() {
        let (mt, _) = s4_export();
        let text = write_tom(&mt, None);
        let bad = corrupt(&text, "ROW 4:", |l| {
            let mut parts: Vec<String> = l.split(' ').map(str::to_string).collect();
            // double the first entry; it no longer equals |G| / |H_4|
            let v: i64 = parts[2].parse().unwrap();
            parts[2] = (2 * v).to_string();
            parts.join(" ")
        });
        match parse_tom(&bad) {
            Err(TomError::FirstColumnMismatch { row: 4 }) => {}
            other => panic!("expected first-column mismatch, got {other:?}"),
        }
    }

    #[test]
    fn extra_entries_break_triangularity() {
        let (mt, _) = s4_export();
        let text = write_tom(&mt, None);
        let bad = corrupt(&text, "ROW 1:", |l| format!("{l} 1"));
        match parse_tom(&bad) {
            Err(TomError::NotLowerTriangular { row: 1 }) => {}
            other => panic!("expected triangularity failure, got {other:?}"),
        }
    }

    #[test]
    fn length_mismatch_is_named() {
        let (mt, _) = s4_export();
        let text = write_tom(&mt, None);
        let old = format!("length={}", mt.classes()[1].length);
        let bad = corrupt(&text, "CLASS 2 ", |l| l.replace(&old, "length=5"));
        assert_ne!(bad, text);
        match parse_tom(&bad) {
            Err(TomError::ClassLengthMismatch { row: 2 }) => {}
            other => panic!("expected class length mismatch, got {other:?}"),
        }
    }

    #[test]
    fn props_chain_is_validated() {
        let (mt, mut flags) = s4_export();
        flags[3].solvable = false; // break supersolvable => solvable
        let text = write_tom(&mt, Some(&flags));
        match parse_tom(&text) {
            Err(TomError::InvalidProps { row: 4 }) => {}
            other => panic!("expected props chain failure, got {other:?}"),
        }
    }
}
