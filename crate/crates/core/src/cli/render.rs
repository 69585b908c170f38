//! Text output: file formats and listings.

use std::fmt::Write as _;

use crate::flat::HereditaryCollection;
use crate::model::{AttrSet, FdFunction, FdPair, Universe};

/// A set as space-separated names, `{}` when empty.
pub fn render_set(u: &Universe, s: &AttrSet) -> String {
    if s.is_empty() {
        "{}".to_string()
    } else {
        u.render(s)
    }
}

/// A pair as `L -> R` with `{}` for empty sides.
pub fn render_pair(u: &Universe, p: &FdPair) -> String {
    format!("{} -> {}", render_set(u, &p.left), render_set(u, &p.right))
}

/// One pair per line in canonical order.
pub fn render_pairs(f: &FdFunction) -> String {
    let u = f.universe();
    let mut out = String::new();
    for p in f.canonical_order() {
        let _ = writeln!(out, "{}", render_pair(u, &p));
    }
    out
}

/// A function on one line, pairs separated by `; `.
pub fn render_function_inline(f: &FdFunction) -> String {
    let u = f.universe();
    f.canonical_order()
        .iter()
        .map(|p| render_pair(u, p))
        .collect::<Vec<_>>()
        .join("; ")
}

fn header(u: &Universe) -> String {
    format!("attrs: {}\n", u.names().join(" "))
}

/// The dependency file form; parsing it gives back the same function.
pub fn render_fd_file(f: &FdFunction) -> String {
    let u = f.universe();
    let mut out = header(u);
    for p in f.canonical_order() {
        let _ = writeln!(out, "{}", u.render_pair(&p));
    }
    out
}

/// The facet file form of a hereditary collection.
pub fn render_facets_file(h: &HereditaryCollection) -> String {
    let u = h.universe();
    let mut out = header(u);
    for f in h.facets().iter().filter(|f| !f.is_empty()) {
        let _ = writeln!(out, "{}", u.render(f));
    }
    out
}
