//! Line-oriented space files and set literals.
//!
//! ```text
//! # comment
//! points: a b c d
//! open: a
//! open: a c d
//! ```
//!
//! `open:` with no tokens is the empty set; the empty set and the whole set
//! may be omitted.

use crate::error::{Error, Result};
use crate::space::FiniteSpace;
use crate::subset::PointSubset;

fn is_token(tok: &str) -> bool {
    !tok.is_empty() && tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the space text format.
pub fn parse_space(text: &str) -> Result<FiniteSpace> {
    let mut names: Option<Vec<String>> = None;
    let mut opens: Vec<PointSubset> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| parse_err(line_no, format!("expected `points:` or `open:`, found `{line}`")))?;
        match (key.trim(), &names) {
            ("points", None) => {
                let toks: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if let Some(bad) = toks.iter().find(|t| !is_token(t)) {
                    return Err(parse_err(line_no, format!("invalid point name `{bad}`")));
                }
                for (j, t) in toks.iter().enumerate() {
                    if toks[..j].contains(t) {
                        return Err(parse_err(line_no, format!("duplicate point name `{t}`")));
                    }
                }
                if toks.is_empty() || toks.len() > crate::subset::MAX_POINTS {
                    return Err(parse_err(line_no, format!("point count {} outside 1..=16", toks.len())));
                }
                names = Some(toks);
            }
            ("points", Some(_)) => return Err(parse_err(line_no, "`points:` declared twice")),
            ("open", None) => return Err(parse_err(line_no, "`open:` before `points:`")),
            ("open", Some(names)) => {
                let mut set = PointSubset::EMPTY;
                for tok in rest.split_whitespace() {
                    let p = names
                        .iter()
                        .position(|n| n == tok)
                        .ok_or_else(|| parse_err(line_no, format!("unknown point `{tok}`")))?;
                    set = set.insert(p);
                }
                if opens.contains(&set) {
                    return Err(parse_err(
                        line_no,
                        format!("duplicate open set {}", crate::space::format_set_with(names, set)),
                    ));
                }
                opens.push(set);
            }
            (other, _) => return Err(parse_err(line_no, format!("unknown directive `{other}:`"))),
        }
    }
    let names = names.ok_or_else(|| parse_err(0, "missing `points:` line"))?;
    FiniteSpace::new(names, &opens)
}

/// Serializes a space with every open (including `∅` and `X`) in canonical order.
pub fn format_space(space: &FiniteSpace) -> String {
    let mut out = String::from("points:");
    for name in space.point_names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for &u in space.opens() {
        out.push_str("open:");
        for p in u.points() {
            out.push(' ');
            out.push_str(&space.point_names()[p]);
        }
        out.push('\n');
    }
    out
}

/// Parses a set literal such as `{a,c}` or `{}` against a space's point names.
pub fn parse_set(space: &FiniteSpace, literal: &str) -> Result<PointSubset> {
    let lit = literal.trim();
    let inner = lit
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| parse_err(0, format!("set literal `{lit}` must be wrapped in braces")))?;
    let mut set = PointSubset::EMPTY;
    if inner.trim().is_empty() {
        return Ok(set);
    }
    for tok in inner.split(',') {
        let tok = tok.trim();
        let p = space
            .point_index(tok)
            .ok_or_else(|| Error::UnknownPoint(tok.to_string()))?;
        set = set.insert(p);
    }
    Ok(set)
}
