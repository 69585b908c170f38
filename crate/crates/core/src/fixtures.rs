//! Small named instances used throughout the tests and documentation.

use crate::audit::Instance;
use crate::cli::parse::{parse_facets_file, parse_fd_file};
use crate::flat::HereditaryCollection;
use crate::model::{FdFunction, Universe};

/// Two mutually determining attributes plus `a c -> d`.
pub const E1_FD: &str = "attrs: a b c d\na -> b\nb -> a\na c -> d\n";
/// The collection `{∅, {a}, {b}}`.
pub const E3_FACETS: &str = "attrs: a b\na\nb\n";
/// The collection generated by `{a, b}` and `{c}`.
pub const E4_FACETS: &str = "attrs: a b c\na b\nc\n";

pub fn e1() -> (Universe, FdFunction) {
    parse_fd_file(E1_FD).expect("fixture parses")
}

pub fn e3() -> HereditaryCollection {
    parse_facets_file(E3_FACETS).expect("fixture parses")
}

pub fn e4() -> HereditaryCollection {
    parse_facets_file(E4_FACETS).expect("fixture parses")
}

/// Every fixture as an audit instance.
pub fn all() -> Vec<Instance> {
    vec![
        Instance::fd("fixture/E1", e1().1),
        Instance::hereditary("fixture/E3", e3()),
        Instance::hereditary("fixture/E4", e4()),
    ]
}
