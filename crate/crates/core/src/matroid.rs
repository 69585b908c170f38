//! The matroid whose bases are the nonredundant covers of a closure.
//!
//! Direct determination is computed from the interior of whichever cover is
//! at hand. Basis enumeration walks the single-pair exchange graph starting
//! from the one-pass nonredundant cover.

use std::collections::{BTreeSet, VecDeque};

use crate::closure::{extend_by_closure, ClosureKernel, ClosureTable, BASIS_CAP};
use crate::cover::{is_cover, is_independent, nonredundant_cover};
use crate::error::{Error, Result};
use crate::model::{AttrSet, FdFunction, FdPair, Trace};

/// Basis count above which [`singleton_status`] stops enumerating.
pub const SINGLETON_BASIS_LIMIT: usize = 1024;

/// The body, interior and top of a function at a closed set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeRestriction {
    pub body: FdFunction,
    pub interior: FdFunction,
    pub top: FdFunction,
    pub closed_set: AttrSet,
}

/// Partitions the pairs of `f` whose right side lies inside `c` by whether
/// the right side is a proper subset of `c` or equal to it.
pub fn restrict(f: &FdFunction, c: &AttrSet) -> Result<RangeRestriction> {
    f.check_set(c)?;
    if ClosureKernel::new(f).closure(c)? != *c {
        return Err(Error::NotClosed(f.universe().render(c)));
    }
    Ok(RangeRestriction {
        body: f.filtered(|p| p.right.is_subset(c)),
        interior: f.filtered(|p| p.right.is_proper_subset(c)),
        top: f.filtered(|p| p.right == *c),
        closed_set: c.clone(),
    })
}

fn interior_flags(f: &FdFunction, c: &AttrSet) -> Vec<bool> {
    f.iter().map(|p| p.right.is_proper_subset(c)).collect()
}

/// Closure of `x` under the pairs of `f` whose right side is a proper
/// subset of `c`.
pub fn interior_closure(f: &FdFunction, c: &AttrSet, x: &AttrSet) -> Result<AttrSet> {
    f.check_set(c)?;
    let flags = interior_flags(f, c);
    ClosureKernel::new(f).closure_with(x, Some(&flags), None)
}

fn first_non_canonical(f: &FdFunction) -> Option<&FdPair> {
    let kernel = ClosureKernel::new(f);
    f.iter()
        .find(|p| kernel.closure(&p.left).map_or(true, |r| r != p.right))
}

/// Whether `x` determines `y` directly: both share the closed set `C` and
/// `y` is derivable from `x` through interior pairs alone. The trace records
/// that interior derivation.
pub fn directly_determines(cover: &FdFunction, x: &AttrSet, y: &AttrSet) -> Result<(bool, Trace)> {
    cover.check_set(x)?;
    cover.check_set(y)?;
    if let Some(p) = first_non_canonical(cover) {
        return Err(Error::NotACover(cover.universe().render_pair(p)));
    }
    let kernel = ClosureKernel::new(cover);
    let c = kernel.closure(x)?;
    if kernel.closure(y)? != c {
        return Err(Error::UnequalClosures);
    }
    let interior = cover.filtered(|p| p.right.is_proper_subset(&c));
    let (reach, trace) = extend_by_closure(&interior, x)?;
    Ok((y.is_subset(&reach), trace))
}

/// A pair `(Z, c)` of the cover with `y →̇ Z`.
///
/// Tried in order: a top pair whose left side lies inside `y`; any top pair
/// when `y →̇ c`; otherwise the top pairs whose left side first appears in
/// the trace of `y`. Ties go to the first pair in canonical order.
pub fn dd_target(cover: &FdFunction, y: &AttrSet, c: &AttrSet) -> Result<FdPair> {
    cover.check_set(y)?;
    cover.check_set(c)?;
    let u = cover.universe();
    let kernel = ClosureKernel::new(cover);
    let yc = kernel.closure(y)?;
    if yc != *c {
        return Err(Error::ClosureMismatch {
            set: u.render(y),
            closure: u.render(&yc),
            expected: u.render(c),
        });
    }
    let top: Vec<&FdPair> = cover.iter().filter(|p| p.right == *c).collect();
    if top.is_empty() {
        return Err(Error::EmptyTop(u.render(c)));
    }
    let found = if let Some(p) = top.iter().find(|p| p.left.is_subset(y)) {
        (*p).clone()
    } else if c.is_subset(&interior_closure(cover, c, y)?) {
        top[0].clone()
    } else {
        let (_, trace) = extend_by_closure(cover, y)?;
        trace
            .stages
            .iter()
            .find_map(|s| top.iter().find(|p| p.left.is_subset(s)))
            .map(|p| (*p).clone())
            .ok_or_else(|| Error::Invariant("no top pair fires in the trace".into()))?
    };
    if !directly_determines(cover, y, &found.left)?.0 {
        return Err(Error::Invariant(format!(
            "selected target {} is not directly determined",
            u.render_pair(&found)
        )));
    }
    Ok(found)
}

/// Replaces `out` by `in_` in a basis.
///
/// Both pairs must share their right side `C` and determine each other
/// directly. The result is checked to be a nonredundant cover of the same
/// closure.
pub fn exchange(basis: &FdFunction, out: &FdPair, in_: &FdPair) -> Result<FdFunction> {
    let u = basis.universe();
    basis.check_set(&in_.left)?;
    basis.check_set(&in_.right)?;
    if !basis.contains(out) {
        return Err(Error::PairMismatch(format!(
            "{} is not in the basis",
            u.render_pair(out)
        )));
    }
    if out.right != in_.right {
        return Err(Error::PairMismatch(format!(
            "{} and {} have different closed sets",
            u.render_pair(out),
            u.render_pair(in_)
        )));
    }
    if out == in_ {
        return Ok(basis.clone());
    }
    let kernel = ClosureKernel::new(basis);
    if kernel.closure(&in_.left)? != in_.right {
        return Err(Error::PairMismatch(format!(
            "{} is not a pair of the closure",
            u.render_pair(in_)
        )));
    }
    if basis.get(&in_.left).is_some() {
        return Err(Error::PairMismatch(format!(
            "{} already has a pair in the basis",
            u.render(&in_.left)
        )));
    }
    let flags = interior_flags(basis, &out.right);
    let reach_in = kernel.closure_with(&in_.left, Some(&flags), None)?;
    let reach_out = kernel.closure_with(&out.left, Some(&flags), None)?;
    if !out.left.is_subset(&reach_in) {
        return Err(Error::NoDirectDetermination {
            from: u.render(&in_.left),
            to: u.render(&out.left),
        });
    }
    if !in_.left.is_subset(&reach_out) {
        return Err(Error::NoDirectDetermination {
            from: u.render(&out.left),
            to: u.render(&in_.left),
        });
    }
    let swapped = swap(basis, out, in_);
    if !is_cover(&swapped, basis)? || !is_independent(&swapped) {
        return Err(Error::Invariant(format!(
            "exchanging {} for {} did not yield a basis",
            u.render_pair(out),
            u.render_pair(in_)
        )));
    }
    Ok(swapped)
}

fn swap(basis: &FdFunction, out: &FdPair, in_: &FdPair) -> FdFunction {
    let mut pairs: Vec<FdPair> = basis.iter().filter(|p| *p != out).cloned().collect();
    let pos = pairs
        .binary_search_by(|p| p.left.cmp(&in_.left))
        .unwrap_err();
    pairs.insert(pos, in_.clone());
    FdFunction::from_sorted_unchecked(basis.universe(), pairs)
}

fn check_nonredundant(f: &FdFunction) -> Result<()> {
    if first_non_canonical(f).is_some() || !is_independent(f) {
        Err(Error::NotNonredundantCover)
    } else {
        Ok(())
    }
}

/// Pairs each `(X, C) ∈ a` with the unique `(Y, C) ∈ b` that `X` directly
/// determines. Totality, injectivity and self-inverseness are verified.
pub fn dd_bijection(a: &FdFunction, b: &FdFunction) -> Result<Vec<(FdPair, FdPair)>> {
    a.check_same(b)?;
    check_nonredundant(a)?;
    check_nonredundant(b)?;
    if !is_cover(a, b)? {
        return Err(Error::NotNonredundantCover);
    }
    let forward = dd_matching(a, b)?;
    let backward = dd_matching(b, a)?;
    let mut used = BTreeSet::new();
    for (x, y) in &forward {
        if !used.insert(y.clone()) {
            return Err(Error::Invariant(format!(
                "{} is matched twice",
                a.universe().render_pair(y)
            )));
        }
        if !backward.iter().any(|(y2, x2)| y2 == y && x2 == x) {
            return Err(Error::Invariant(format!(
                "matching is not self-inverse at {}",
                a.universe().render_pair(x)
            )));
        }
    }
    if used.len() != b.len() {
        return Err(Error::Invariant("matching is not onto".into()));
    }
    Ok(forward)
}

fn dd_matching(a: &FdFunction, b: &FdFunction) -> Result<Vec<(FdPair, FdPair)>> {
    let kernel = ClosureKernel::new(a);
    let u = a.universe();
    let mut out = Vec::with_capacity(a.len());
    for p in a.iter() {
        let flags = interior_flags(a, &p.right);
        let reach = kernel.closure_with(&p.left, Some(&flags), None)?;
        let mut hits = b
            .iter()
            .filter(|q| q.right == p.right && q.left.is_subset(&reach));
        let first = hits.next().ok_or_else(|| {
            Error::Invariant(format!("{} determines no pair directly", u.render_pair(p)))
        })?;
        if hits.next().is_some() {
            return Err(Error::Invariant(format!(
                "{} determines several pairs directly",
                u.render_pair(p)
            )));
        }
        out.push((p.clone(), first.clone()));
    }
    Ok(out)
}

/// Non-reflexive pairs of the closure grouped by right side, each group in
/// canonical order.
fn candidate_pairs(table: &ClosureTable) -> Vec<FdPair> {
    table
        .to_function()
        .iter()
        .filter(|p| !p.is_reflexive())
        .cloned()
        .collect()
}

/// All nonredundant covers reachable from the one-pass cover by single-pair
/// exchanges, in canonical order.
pub fn enumerate_bases(mu: &FdFunction, cap: usize) -> Result<Vec<FdFunction>> {
    let n = mu.universe().len();
    if n > BASIS_CAP {
        return Err(Error::cap("basis enumeration universe", n, BASIS_CAP));
    }
    let table = ClosureTable::build(mu)?;
    let full = table.to_function();
    let candidates = candidate_pairs(&table);
    let start = nonredundant_cover(&full);
    let mut seen: BTreeSet<FdFunction> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(basis) = queue.pop_front() {
        let kernel = ClosureKernel::new(&basis);
        for out in basis.iter() {
            let flags = interior_flags(&basis, &out.right);
            let reach_out = kernel.closure_with(&out.left, Some(&flags), None)?;
            for cand in candidates.iter().filter(|q| q.right == out.right) {
                if cand.left == out.left
                    || basis.get(&cand.left).is_some()
                    || !cand.left.is_subset(&reach_out)
                {
                    continue;
                }
                let reach_in = kernel.closure_with(&cand.left, Some(&flags), None)?;
                if !out.left.is_subset(&reach_in) {
                    continue;
                }
                let next = exchange(&basis, out, cand)?;
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::cap("bases", seen.len(), cap));
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Closed sets with a non-empty top in a nonredundant cover.
pub fn top_signature(cover: &FdFunction) -> Result<Vec<AttrSet>> {
    check_nonredundant(cover)?;
    let tops: BTreeSet<AttrSet> = cover.iter().map(|p| p.right.clone()).collect();
    Ok(tops.into_iter().collect())
}

/// What is known about the independence of the singleton `{p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingletonStatus {
    pub pair: FdPair,
    pub reflexive: bool,
    pub left_is_key: bool,
    /// `left →̇ right`.
    pub determines_closure: bool,
    /// The sufficient condition for dependence: reflexive, a non-key left
    /// side, or `left →̇ right`. `false` means undetermined, not independent.
    pub mat12_dependent: bool,
    /// `{p}` has no removable pair.
    pub locally_independent: bool,
    /// Membership in an enumerated basis, when enumeration was feasible.
    pub in_some_basis: Option<bool>,
    /// Basis membership when known, local irredundance otherwise.
    pub oracle_independent: bool,
    /// The sufficient condition says dependent but the oracle disagrees.
    pub conflict: bool,
}

pub fn singleton_status(mu: &FdFunction, p: &FdPair) -> Result<SingletonStatus> {
    let bases = if mu.universe().len() <= BASIS_CAP {
        enumerate_bases(mu, SINGLETON_BASIS_LIMIT).ok()
    } else {
        None
    };
    singleton_status_with_bases(mu, p, bases.as_deref())
}

/// As [`singleton_status`] with a precomputed basis list.
pub fn singleton_status_with_bases(
    mu: &FdFunction,
    p: &FdPair,
    bases: Option<&[FdFunction]>,
) -> Result<SingletonStatus> {
    mu.check_set(&p.left)?;
    mu.check_set(&p.right)?;
    let table = ClosureTable::build(mu)?;
    let u = mu.universe();
    if table.closure_mask(p.left.to_mask()) != p.right.to_mask() {
        return Err(Error::PairNotInMu(u.render_pair(p)));
    }
    let full = table.to_function();
    let reflexive = p.is_reflexive();
    let left_is_key = table.is_key_mask(p.left.to_mask());
    let determines_closure = p
        .right
        .is_subset(&interior_closure(&full, &p.right, &p.left)?);
    let mat12_dependent = reflexive || !left_is_key || determines_closure;
    let locally_independent =
        is_independent(&FdFunction::from_sorted_unchecked(u, vec![p.clone()]));
    let in_some_basis = bases.map(|bs| bs.iter().any(|b| b.contains(p)));
    let oracle_independent = in_some_basis.unwrap_or(locally_independent);
    Ok(SingletonStatus {
        pair: p.clone(),
        reflexive,
        left_is_key,
        determines_closure,
        mat12_dependent,
        locally_independent,
        in_some_basis,
        oracle_independent,
        conflict: mat12_dependent && oracle_independent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::materialize_mu;
    use crate::fixtures;
    use crate::model::Universe;

    const D: &str = "a b c d";

    fn set(u: &Universe, t: &str) -> AttrSet {
        u.parse_set(t).unwrap()
    }

    fn pair(u: &Universe, l: &str, r: &str) -> FdPair {
        FdPair::new(set(u, l), set(u, r)).unwrap()
    }

    fn func(u: &Universe, pairs: &[(&str, &str)]) -> FdFunction {
        FdFunction::from_pairs(u, pairs.iter().map(|(l, r)| pair(u, l, r)), false).unwrap()
    }

    fn greek(u: &Universe, top: &str) -> FdFunction {
        func(u, &[("a", "a b"), ("b", "a b"), (top, D)])
    }

    #[test]
    fn restriction_examples() {
        let (u, e1) = fixtures::e1();
        let mu = materialize_mu(&e1).unwrap();
        let r = restrict(&mu, &set(&u, "a b")).unwrap();
        assert_eq!(
            r.body,
            func(&u, &[("", ""), ("a", "a b"), ("b", "a b"), ("a b", "a b")])
        );
        assert_eq!(r.interior, func(&u, &[("", "")]));
        assert_eq!(
            r.top,
            func(&u, &[("a", "a b"), ("b", "a b"), ("a b", "a b")])
        );

        let gamma = greek(&u, "a b c");
        let r = restrict(&gamma, &u.full_set()).unwrap();
        assert_eq!(r.top, func(&u, &[("a b c", D)]));
        let r = restrict(&gamma, &set(&u, "d")).unwrap();
        assert!(r.body.is_empty() && r.interior.is_empty() && r.top.is_empty());
        assert_eq!(
            restrict(&gamma, &set(&u, "a")).unwrap_err(),
            Error::NotClosed("a".into())
        );
    }

    #[test]
    fn direct_determination_examples() {
        let (u, e1) = fixtures::e1();
        let (yes, trace) = directly_determines(&e1, &set(&u, "a c"), &set(&u, "b c")).unwrap();
        assert!(yes);
        assert_eq!(*trace.result(), set(&u, "a b c"));
        assert!(
            directly_determines(&e1, &set(&u, "a c"), &set(&u, "a c"))
                .unwrap()
                .0
        );
        assert!(
            !directly_determines(&e1, &set(&u, "a"), &set(&u, "b"))
                .unwrap()
                .0
        );
        assert_eq!(
            directly_determines(&e1, &set(&u, "a"), &set(&u, "c")).unwrap_err(),
            Error::UnequalClosures
        );
        let raw = func(&u, &[("a", "b")]);
        assert!(matches!(
            directly_determines(&raw, &set(&u, "a"), &set(&u, "a")),
            Err(Error::NotACover(_))
        ));
    }

    #[test]
    fn dd_target_examples() {
        let (u, _) = fixtures::e1();
        let gamma = greek(&u, "a b c");
        let alpha = greek(&u, "a c");
        assert_eq!(
            dd_target(&gamma, &set(&u, "a c"), &u.full_set()).unwrap(),
            pair(&u, "a b c", D)
        );
        assert_eq!(
            dd_target(&alpha, &set(&u, "a c d"), &u.full_set()).unwrap(),
            pair(&u, "a c", D)
        );
        assert_eq!(
            dd_target(&gamma, &set(&u, "a d"), &u.full_set()).unwrap_err(),
            Error::ClosureMismatch {
                set: "a d".into(),
                closure: "a b d".into(),
                expected: D.into()
            }
        );
        assert_eq!(
            dd_target(&gamma, &set(&u, "c"), &set(&u, "c")).unwrap_err(),
            Error::EmptyTop("c".into())
        );
    }

    #[test]
    fn exchange_examples() {
        let (u, _) = fixtures::e1();
        let alpha = greek(&u, "a c");
        let beta2 = greek(&u, "b c");
        assert_eq!(
            exchange(&alpha, &pair(&u, "a c", D), &pair(&u, "b c", D)).unwrap(),
            beta2
        );
        assert_eq!(
            exchange(&alpha, &pair(&u, "a b", "a b"), &pair(&u, "a b", "a b")).unwrap_err(),
            Error::PairMismatch("a b -> a b is not in the basis".into())
        );
        assert_eq!(
            exchange(&alpha, &pair(&u, "a", "a b"), &pair(&u, "a", "a b")).unwrap(),
            alpha
        );
        assert!(matches!(
            exchange(&alpha, &pair(&u, "a", "a b"), &pair(&u, "b c", D)),
            Err(Error::PairMismatch(_))
        ));
        assert!(matches!(
            exchange(&alpha, &pair(&u, "a c", D), &pair(&u, "a c d", D)),
            Err(Error::NoDirectDetermination { .. })
        ));
    }

    #[test]
    fn bijection_examples() {
        let (u, _) = fixtures::e1();
        let alpha = greek(&u, "a c");
        let beta2 = greek(&u, "b c");
        let gamma = greek(&u, "a b c");
        let m = dd_bijection(&alpha, &gamma).unwrap();
        assert_eq!(m[2], (pair(&u, "a c", D), pair(&u, "a b c", D)));
        assert_eq!(m[0], (pair(&u, "a", "a b"), pair(&u, "a", "a b")));
        let id = dd_bijection(&alpha, &alpha).unwrap();
        assert!(id.iter().all(|(x, y)| x == y));
        let m = dd_bijection(&alpha, &beta2).unwrap();
        assert_eq!(m[2], (pair(&u, "a c", D), pair(&u, "b c", D)));
        let redundant = func(&u, &[("a", "a b"), ("b", "a b"), ("a c", D), ("a b c", D)]);
        assert_eq!(
            dd_bijection(&redundant, &alpha).unwrap_err(),
            Error::NotNonredundantCover
        );
    }

    #[test]
    fn bases_of_e1() {
        let (u, e1) = fixtures::e1();
        let bases = enumerate_bases(&e1, 64).unwrap();
        assert_eq!(
            bases,
            vec![greek(&u, "a c"), greek(&u, "b c"), greek(&u, "a b c")]
        );
        for b in &bases {
            assert_eq!(
                top_signature(b).unwrap(),
                vec![set(&u, "a b"), u.full_set()]
            );
        }
        assert!(matches!(
            enumerate_bases(&e1, 2),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn bases_trivia() {
        let u = Universe::new(["a", "b"]).unwrap();
        let id = FdFunction::new(&u);
        assert_eq!(enumerate_bases(&id, 8).unwrap(), vec![FdFunction::new(&u)]);
        assert!(top_signature(&id).unwrap().is_empty());
        let f = func(&u, &[("a", "a b")]);
        assert_eq!(enumerate_bases(&f, 8).unwrap(), vec![f.clone()]);
    }

    #[test]
    fn singleton_examples() {
        let (u, e1) = fixtures::e1();
        let mu = materialize_mu(&e1).unwrap();
        let s = singleton_status(&mu, &pair(&u, D, D)).unwrap();
        assert!(s.mat12_dependent && !s.oracle_independent && !s.conflict);
        let s = singleton_status(&mu, &pair(&u, "a c", D)).unwrap();
        assert!(!s.mat12_dependent);
        assert_eq!(s.in_some_basis, Some(true));
        let s = singleton_status(&mu, &pair(&u, "a b c", D)).unwrap();
        assert!(s.mat12_dependent && !s.left_is_key);
        assert_eq!(s.in_some_basis, Some(true));
        assert!(s.conflict);
        assert_eq!(
            singleton_status(&mu, &pair(&u, "a", "a")).unwrap_err(),
            Error::PairNotInMu("a -> a".into())
        );
    }
}
