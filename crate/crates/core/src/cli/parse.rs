//! Dependency and facet file grammars.
//!
//! Both formats start with an `attrs:` header naming the universe. `#`
//! starts a comment and blank lines are ignored. A dependency line reads
//! `LHS -> RHS`; a facet line lists one maximal independent set.

use crate::closure::canonicalize;
use crate::error::{Error, Result};
use crate::flat::HereditaryCollection;
use crate::model::{AttrSet, FdFunction, FdPair, Universe};

const HEADER: &str = "attrs:";

/// Non-empty content lines with 1-based line numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n').enumerate().filter_map(|(i, raw)| {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_header<'a, I>(lines: &mut I) -> Result<Universe>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (_, first) = lines.next().ok_or(Error::MissingHeader)?;
    let names = first.strip_prefix(HEADER).ok_or(Error::MissingHeader)?;
    Universe::new(names.split_whitespace())
}

fn parse_names(u: &Universe, text: &str, line: usize) -> Result<AttrSet> {
    let mut set = u.empty_set();
    for name in text.split_whitespace() {
        let i = u.index_of(name).ok_or_else(|| Error::UnknownAttribute {
            name: name.to_string(),
            line,
        })?;
        set.insert(i);
    }
    Ok(set)
}

/// The universe and raw dependency pairs, in file order, before merging.
pub fn parse_fd_raw(text: &str) -> Result<(Universe, Vec<FdPair>)> {
    let mut lines = content_lines(text);
    let u = parse_header(&mut lines)?;
    let mut pairs = Vec::new();
    for (no, line) in lines {
        let mut parts = line.split("->");
        let (Some(lhs), Some(rhs), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::SyntaxError {
                line: no,
                message: "expected exactly one `->`".into(),
            });
        };
        pairs.push(FdPair {
            left: parse_names(&u, lhs, no)?,
            right: parse_names(&u, rhs, no)?,
        });
    }
    Ok((u, pairs))
}

/// Parses a dependency file and canonicalizes it.
pub fn parse_fd_file(text: &str) -> Result<(Universe, FdFunction)> {
    let (u, pairs) = parse_fd_raw(text)?;
    let f = canonicalize(&u, pairs)?;
    Ok((u, f))
}

/// Parses a facet file into the hereditary collection it generates. Lines
/// must be distinct and pairwise incomparable; a header alone gives `{∅}`.
pub fn parse_facets_file(text: &str) -> Result<HereditaryCollection> {
    let mut lines = content_lines(text);
    let u = parse_header(&mut lines)?;
    let mut facets: Vec<(usize, AttrSet)> = Vec::new();
    for (no, line) in lines {
        let set = parse_names(&u, line, no)?;
        if let Some((prev, _)) = facets
            .iter()
            .find(|(_, f)| set.is_subset(f) || f.is_subset(&set))
        {
            return Err(Error::SyntaxError {
                line: no,
                message: format!("facet is comparable with the facet on line {prev}"),
            });
        }
        facets.push((no, set));
    }
    let sets: Vec<AttrSet> = facets.into_iter().map(|(_, s)| s).collect();
    HereditaryCollection::from_facets(&u, &sets)
}
