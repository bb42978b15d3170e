//! The line-oriented lattice file format.
//!
//! ```text
//! lattice exa1
//! elements: 0 S T U I R
//! 0 < S
//! S < I
//! ```
//!
//! `#` starts a comment. Blank and comment-only lines are skipped, but line
//! numbers in errors count every physical line.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::lattice::Lattice;
use crate::nucleus::Nucleus;

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Column (1-based, in characters) of `part` inside `line`.
fn column(line: &str, part: &str) -> usize {
    let offset = part.as_ptr() as usize - line.as_ptr() as usize;
    line[..offset].chars().count() + 1
}

/// Parses a lattice file.
pub fn parse_lattice(text: &str) -> Result<Lattice> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw, raw.split('#').next().unwrap_or("")))
        .filter(|(_, _, body)| !body.trim().is_empty());
    let last_line = text.lines().count();

    let (no, raw, body) = lines
        .next()
        .ok_or_else(|| syntax(1, 1, "expected `lattice <name>`"))?;
    let mut words = body.split_whitespace();
    if words.next() != Some("lattice") {
        return Err(syntax(
            no,
            column(raw, body.trim_start()),
            "expected `lattice <name>`",
        ));
    }
    let name = words.next().ok_or_else(|| {
        syntax(
            no,
            raw.trim_end().chars().count() + 1,
            "missing lattice name",
        )
    })?;
    if let Some(extra) = words.next() {
        return Err(syntax(
            no,
            column(raw, extra),
            "unexpected text after the name",
        ));
    }

    let (no, raw, body) = lines
        .next()
        .ok_or_else(|| syntax(last_line + 1, 1, "expected `elements: <labels>`"))?;
    let rest = body.trim_start().strip_prefix("elements:").ok_or_else(|| {
        syntax(
            no,
            column(raw, body.trim_start()),
            "expected `elements: <labels>`",
        )
    })?;
    let labels: Vec<&str> = rest.split_whitespace().collect();
    if labels.is_empty() {
        return Err(syntax(
            no,
            raw.trim_end().chars().count() + 1,
            "no elements listed",
        ));
    }

    let mut covers = Vec::new();
    for (no, raw, body) in lines {
        let parts: Vec<&str> = body.split_whitespace().collect();
        match parts.as_slice() {
            [lo, "<", hi] => {
                for part in [lo, hi] {
                    if !labels.contains(part) {
                        return Err(syntax(
                            no,
                            column(raw, part),
                            format!("unknown element `{part}`"),
                        ));
                    }
                }
                covers.push((*lo, *hi));
            }
            _ => {
                return Err(syntax(
                    no,
                    column(raw, body.trim_start()),
                    "expected a cover `<label> < <label>`",
                ))
            }
        }
    }
    Lattice::from_covers(name, &labels, &covers)
}

/// Canonical text: elements in index order, covers sorted by index.
pub fn emit_lattice(l: &Lattice) -> String {
    let mut out = String::new();
    writeln!(out, "lattice {}", l.name()).unwrap();
    writeln!(out, "elements: {}", l.labels().join(" ")).unwrap();
    for (lo, hi) in l.cover_pairs() {
        writeln!(out, "{} < {}", l.label(lo), l.label(hi)).unwrap();
    }
    out
}

/// How a nucleus is named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NucleusSpec {
    /// `chi a b`
    Chi(Interval),
    /// `xi a b`
    Xi(Interval),
    /// `zeta`
    Zeta,
    /// An explicit table, `0↦0, S↦S, …` or with `->`.
    Table(Nucleus),
}

pub fn parse_nucleus_spec(l: &Lattice, text: &str) -> Result<NucleusSpec> {
    let words: Vec<&str> = text.split_whitespace().collect();
    match words.as_slice() {
        ["zeta"] => Ok(NucleusSpec::Zeta),
        ["chi", a, b] => Ok(NucleusSpec::Chi(Interval::parse(l, a, b)?)),
        ["xi", a, b] => Ok(NucleusSpec::Xi(Interval::parse(l, a, b)?)),
        _ => Nucleus::parse(l, text).map(NucleusSpec::Table),
    }
}
