//! Finite closures through functional dependencies: closure kernels, keys,
//! nonredundant covers, spans, flat closures of hereditary collections, the
//! matroid of nonredundant covers, and a brute-force audit harness.
//!
//! ```
//! use fdmatroid::{cli::parse::parse_fd_file, fast_closure};
//!
//! let (u, f) = parse_fd_file("attrs: a b c d\na -> b\nb -> a\na c -> d\n").unwrap();
//! let c = fast_closure(&f, &u.parse_set("b c").unwrap()).unwrap();
//! assert_eq!(u.render(&c), "a b c d");
//! ```

pub mod audit;
pub mod cli;
pub mod closure;
pub mod cover;
pub mod error;
pub mod fixtures;
pub mod flat;
pub mod matroid;
pub mod model;

pub use closure::{
    all_keys, canonicalize, closed_sets, extend_by_closure, fast_closure, is_closed,
    key_restriction, key_sets, keys_of, materialize_mu, ClosureKernel, ClosureTable,
};
pub use cover::{
    is_cover, is_independent, is_nonredundant_cover, nonredundant_cover, removable_pairs, span,
};
pub use error::{Error, Result};
pub use flat::{delta, kappa_bottomup, kappa_topdown, FlatClosure, HereditaryCollection};
pub use matroid::{
    dd_bijection, directly_determines, enumerate_bases, exchange, singleton_status, top_signature,
    SingletonStatus,
};
pub use model::{AttrSet, FdFunction, FdPair, Trace, Universe};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
