//! Line-oriented text formats.
//!
//! * `.imp`: `elements: a b c` then one `a b -> c` rule per line.
//! * `.mf`: `elements: a b c` then one set per line; `.` is the empty set.
//! * `.hg`: `vertices: a b c` then one edge per line; `.` is the empty edge.
//!
//! `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;

use crate::base::{Implication, ImplicationalBase};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{ElementSet, GroundSet};
use crate::sid::MeetFamily;

const EMPTY_TOKEN: &str = ".";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, keyword: &str) -> Result<GroundSet> {
    let (n, line) = lines
        .next()
        .ok_or_else(|| parse_error(1, format!("missing `{keyword}:` header")))?;
    let rest = line
        .strip_prefix(keyword)
        .and_then(|r| r.trim_start().strip_prefix(':'))
        .ok_or_else(|| parse_error(n, format!("expected `{keyword}:` header")))?;
    let labels: Vec<&str> = rest.split_whitespace().collect();
    if labels.contains(&EMPTY_TOKEN) || labels.iter().any(|l| l.contains("->")) {
        return Err(parse_error(n, "reserved token used as a label"));
    }
    GroundSet::new(labels).map_err(|e| parse_error(n, e.to_string()))
}

fn parse_labels(ground: &GroundSet, line: usize, tokens: &[&str]) -> Result<ElementSet> {
    let mut s = ground.empty_set();
    for &t in tokens {
        let i = ground
            .position(t)
            .ok_or_else(|| parse_error(line, format!("unknown element {t:?}")))?;
        s.insert(i);
    }
    Ok(s)
}

fn parse_set_line(ground: &GroundSet, line: usize, text: &str) -> Result<ElementSet> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens == [EMPTY_TOKEN] {
        return Ok(ground.empty_set());
    }
    parse_labels(ground, line, &tokens)
}

pub fn parse_imp(text: &str) -> Result<ImplicationalBase> {
    let mut lines = content_lines(text);
    let ground = parse_header(&mut lines, "elements")?;
    let mut imps = Vec::new();
    for (n, line) in lines {
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| parse_error(n, "expected `premise -> conclusion`"))?;
        if rhs.contains("->") {
            return Err(parse_error(n, "more than one `->`"));
        }
        let premise_tokens: Vec<&str> = lhs.split_whitespace().collect();
        let conclusion_tokens: Vec<&str> = rhs.split_whitespace().collect();
        let [conclusion] = conclusion_tokens[..] else {
            return Err(parse_error(n, "conclusion must be exactly one element"));
        };
        let premise = parse_labels(&ground, n, &premise_tokens)?;
        let b = ground
            .position(conclusion)
            .ok_or_else(|| parse_error(n, format!("unknown element {conclusion:?}")))?;
        imps.push(Implication::new(premise, b).map_err(|e| parse_error(n, e.to_string()))?);
    }
    ImplicationalBase::new(ground, imps)
}

pub fn write_imp(base: &ImplicationalBase) -> String {
    let g = base.ground();
    let mut out = format!("elements: {}\n", g.labels().join(" "));
    for imp in base.implications() {
        writeln!(out, "{}", imp.display(g)).expect("writing to a String");
    }
    out
}

/// A set family with its ground set; `.mf` files need not be meet families
/// (antichains use the same format).
pub fn parse_family(text: &str) -> Result<(GroundSet, Vec<ElementSet>)> {
    let mut lines = content_lines(text);
    let ground = parse_header(&mut lines, "elements")?;
    let sets = lines
        .map(|(n, line)| parse_set_line(&ground, n, line))
        .collect::<Result<_>>()?;
    Ok((ground, sets))
}

pub fn parse_mf(text: &str) -> Result<MeetFamily> {
    let (ground, sets) = parse_family(text)?;
    MeetFamily::new(ground, sets)
}

/// One set as a line body: labels, or `.` when empty.
pub fn format_set_line(ground: &GroundSet, s: &ElementSet) -> String {
    if s.is_empty() {
        EMPTY_TOKEN.to_string()
    } else {
        ground.format_set(s)
    }
}

pub fn write_family(ground: &GroundSet, sets: &[ElementSet]) -> String {
    let mut out = format!("elements: {}\n", ground.labels().join(" "));
    for s in sets {
        out.push_str(&format_set_line(ground, s));
        out.push('\n');
    }
    out
}

pub fn write_mf(m: &MeetFamily) -> String {
    write_family(m.ground(), m.meets())
}

/// The header labels become both the ground set and the vertex set.
pub fn parse_hg(text: &str) -> Result<(GroundSet, Hypergraph)> {
    let mut lines = content_lines(text);
    let ground = parse_header(&mut lines, "vertices")?;
    let edges = lines
        .map(|(n, line)| parse_set_line(&ground, n, line))
        .collect::<Result<_>>()?;
    let h = Hypergraph::new(ground.full_set(), edges)?;
    Ok((ground, h))
}

pub fn write_hg(ground: &GroundSet, h: &Hypergraph) -> String {
    let mut out = format!("vertices: {}\n", ground.format_set(h.vertices()));
    for e in h.edges() {
        out.push_str(&format_set_line(ground, e));
        out.push('\n');
    }
    out
}
