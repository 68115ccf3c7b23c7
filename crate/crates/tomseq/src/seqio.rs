//! Sequence file formats: OEIS-style b-files (`index value` per line) and
//! one-line CSV.

use crate::error::Error;
use crate::transforms::IntSeq;
use crate::Result;

/// Parses a b-file: one `index value` pair per line, `#` comments and blank
/// lines ignored. Indices must run consecutively from 1.
pub fn parse_bfile(text: &str) -> Result<IntSeq> {
    let mut values = Vec::new();
    let mut expected = 1i64;
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let idx: i64 = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Format(format!("line {}: expected an index", line_no + 1)))?;
        let value: i128 = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Format(format!("line {}: expected a value", line_no + 1)))?;
        if parts.next().is_some() {
            return Err(Error::Format(format!(
                "line {}: trailing tokens",
                line_no + 1
            )));
        }
        if idx != expected {
            return Err(Error::Format(format!(
                "line {}: index {idx} out of sequence, expected {expected}",
                line_no + 1
            )));
        }
        expected += 1;
        values.push(value);
    }
    Ok(IntSeq::new(values))
}

/// Writes a b-file with indices starting at 1.
pub fn write_bfile(seq: &IntSeq) -> String {
    let mut out = String::new();
    for (i, v) in seq.values().iter().enumerate() {
        out.push_str(&format!("{} {}\n", i + 1, v));
    }
    out
}

/// Parses a one-line CSV of integers.
pub fn parse_csv_line(text: &str) -> Result<IntSeq> {
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| Error::Format("empty input".to_string()))?;
    let values: Result<Vec<i128>> = line
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i128>()
                .map_err(|_| Error::Format(format!("not an integer: {t:?}")))
        })
        .collect();
    Ok(IntSeq::new(values?))
}

pub fn write_csv_line(seq: &IntSeq) -> String {
    let mut out = seq
        .values()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    out.push('\n');
    out
}

/// Sequence file flavor, sniffed from content: a comma anywhere means CSV.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqFormat {
    BFile,
    Csv,
}

pub fn sniff_format(text: &str) -> SeqFormat {
    if text.contains(',') {
        SeqFormat::Csv
    } else {
        SeqFormat::BFile
    }
}

pub fn parse_auto(text: &str) -> Result<(IntSeq, SeqFormat)> {
    match sniff_format(text) {
        SeqFormat::Csv => Ok((parse_csv_line(text)?, SeqFormat::Csv)),
        SeqFormat::BFile => Ok((parse_bfile(text)?, SeqFormat::BFile)),
    }
}

pub fn write_in_format(seq: &IntSeq, format: SeqFormat) -> String {
    match format {
        SeqFormat::BFile => write_bfile(seq),
        SeqFormat::Csv => write_csv_line(seq),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfile_roundtrip() {
        let seq = IntSeq::new(vec![1, 2, 4, 11, 19, 56]);
        let text = write_bfile(&seq);
        assert_eq!(text, "1 1\n2 2\n3 4\n4 11\n5 19\n6 56\n");
        assert_eq!(parse_bfile(&text).unwrap(), seq);
    }

    #[test]
    fn bfile_tolerates_comments() {
        let seq = parse_bfile("# a comment\n\n1 5\n2 -7\n").unwrap();
        assert_eq!(seq.values(), &[5, -7]);
    }

    #[test]
    fn bfile_rejects_gaps() {
        assert!(parse_bfile("1 1\n3 2\n").is_err());
        assert!(parse_bfile("0 1\n").is_err());
        assert!(parse_bfile("1 1 9\n").is_err());
    }

    #[test]
    fn csv_roundtrip_and_sniffing() {
        let seq = IntSeq::new(vec![1, 0, 1, 3]);
        let text = write_csv_line(&seq);
        assert_eq!(text, "1,0,1,3\n");
        let (parsed, fmt) = parse_auto(&text).unwrap();
        assert_eq!(parsed, seq);
        assert_eq!(fmt, SeqFormat::Csv);
        let (_, fmt) = parse_auto("1 1\n2 2\n").unwrap();
        assert_eq!(fmt, SeqFormat::BFile);
    }
}
