//! OEIS b-file format: one `index value` pair per line, single space,
//! newline-terminated, 1-based index.

use std::fmt::Write as _;

use perfectnum_core::eulerian::RecordTerm;
use perfectnum_core::natural::parse_natural;
use perfectnum_core::Natural;

pub fn format_bfile(terms: &[RecordTerm]) -> String {
    let mut out = String::new();
    for t in terms {
        writeln!(out, "{} {}", t.index, t.decomposition.value).expect("writing to a String");
    }
    out
}

/// Parses a b-file, skipping blank lines and `#` comments.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, Natural)>, String> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(format!("line {}: expected \"index value\"", lineno + 1));
        };
        let i: u64 = i.parse().map_err(|_| format!("line {}: bad index {i:?}", lineno + 1))?;
        let v = parse_natural(v).map_err(|e| format!("line {}: {e}", lineno + 1))?;
        out.push((i, v));
    }
    Ok(out)
}
