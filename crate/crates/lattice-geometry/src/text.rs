use std::fmt::Write as _;

use crate::{GeometryError, LatticeBox, SiteSet};

/// Writes `d L` followed by one site per line, in index order.
pub fn write_site_set(s: &SiteSet, lattice: &LatticeBox) -> String {
    let mut out = format!("{} {}\n", lattice.d(), lattice.side());
    for x in s.coords() {
        let line: Vec<String> = x.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Parses the format produced by [`write_site_set`]; blank lines and `#` comments are skipped.
pub fn parse_site_set(text: &str) -> Result<(LatticeBox, SiteSet), GeometryError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| GeometryError::Parse("missing header".into()))?;
    let head: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| GeometryError::Parse(format!("header: {e}")))?;
    let [d, side] = head[..] else {
        return Err(GeometryError::Parse("header must be `d L`".into()));
    };
    let lattice = LatticeBox::new(d, side)?;
    let mut set = SiteSet::in_box(&lattice);
    for (lineno, line) in lines.enumerate() {
        let x: Vec<i64> = line
            .split_whitespace()
            .map(|t| t.parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|e| GeometryError::Parse(format!("site line {}: {e}", lineno + 1)))?;
        if x.len() != d {
            return Err(GeometryError::Dimension {
                expected: d,
                got: x.len(),
            });
        }
        set.insert(&x)?;
    }
    Ok((lattice, set))
}
