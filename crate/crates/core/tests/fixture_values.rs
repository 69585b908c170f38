//! Fixture values frozen from the brute-force script in `scripts/`, plus the
//! worked examples for each operation.

use fdmatroid::audit::oracle::{oracle_closure_table, oracle_nonredundant_covers};
use fdmatroid::closure::{close_rights, key_restriction};
use fdmatroid::flat::{ancestors, delta, maximal_independent_subsets};
use fdmatroid::matroid::{dd_target, restrict};
use fdmatroid::*;

fn e1() -> (Universe, FdFunction) {
    fdmatroid::fixtures::e1()
}

fn set(u: &Universe, t: &str) -> AttrSet {
    u.parse_set(t).unwrap()
}

fn pair(u: &Universe, l: &str, r: &str) -> FdPair {
    FdPair::new(set(u, l), set(u, r)).unwrap()
}

fn func(u: &Universe, pairs: &[(&str, &str)]) -> FdFunction {
    FdFunction::from_pairs(u, pairs.iter().map(|(l, r)| pair(u, l, r)), false).unwrap()
}

fn names(u: &Universe, sets: &[AttrSet]) -> Vec<String> {
    sets.iter().map(|s| u.render(s)).collect()
}

const D: &str = "a b c d";
const AB: &str = "a b";

fn alpha(u: &Universe) -> FdFunction {
    func(u, &[("a", AB), ("b", AB), ("a c", D)])
}

fn beta2(u: &Universe) -> FdFunction {
    func(u, &[("a", AB), ("b", AB), ("b c", D)])
}

fn gamma(u: &Universe) -> FdFunction {
    func(u, &[("a", AB), ("b", AB), ("a b c", D)])
}

#[test]
fn universe_from_names() {
    let u = Universe::new(["City", "Year", "RainfallTotal"]).unwrap();
    assert_eq!(u.len(), 3);
}

#[test]
fn insert_with_merge_unions_right_sides() {
    let u = Universe::letters(3).unwrap();
    let mut f = FdFunction::new(&u);
    f.insert(pair(&u, "a", "b"), true).unwrap();
    f.insert(pair(&u, "a", "c"), true).unwrap();
    assert_eq!(f, func(&u, &[("a", "b c")]));
}

#[test]
fn closures_of_e1() {
    let (u, f) = e1();
    assert_eq!(fast_closure(&f, &set(&u, "b c")).unwrap(), u.full_set());
    assert_eq!(
        extend_by_closure(&f, &set(&u, "a c")).unwrap().0,
        u.full_set()
    );
    let v = Universe::letters(2).unwrap();
    let g = func(&v, &[("", "a")]);
    assert_eq!(fast_closure(&g, &set(&v, "b")).unwrap(), v.full_set());
    assert_eq!(
        extend_by_closure(&g, &v.empty_set()).unwrap().0,
        set(&v, "a")
    );
    assert!(is_closed(&f, &set(&u, AB)).unwrap());
    assert!(!is_closed(&f, &set(&u, "a")).unwrap());
    assert!(is_closed(&f, &u.full_set()).unwrap());
}

#[test]
fn closed_sets_and_keys_of_e1() {
    let (u, f) = e1();
    assert_eq!(
        names(&u, &closed_sets(&f).unwrap()),
        ["", "c", "d", "a b", "c d", "a b d", "a b c d"]
    );
    assert_eq!(
        names(&u, &keys_of(&f, &u.full_set()).unwrap()),
        ["a c", "b c"]
    );
    assert_eq!(names(&u, &keys_of(&f, &set(&u, AB)).unwrap()), ["a", "b"]);
    assert_eq!(
        names(&u, &key_sets(&f).unwrap()),
        ["", "a", "b", "c", "d", "a c", "a d", "b c", "b d", "c d"]
    );
    let kr = key_restriction(&f).unwrap();
    assert_eq!(kr.len(), 10);
    assert!(kr.contains(&pair(&u, "a c", D)));
    assert!(kr.contains(&pair(&u, "c", "c")));
}

#[test]
fn keys_with_empty_left_side() {
    let u = Universe::letters(2).unwrap();
    let f = func(&u, &[("", "a")]);
    assert_eq!(names(&u, &key_sets(&f).unwrap()), ["", "b"]);
    assert_eq!(fast_closure(&f, &u.empty_set()).unwrap(), set(&u, "a"));
    assert_eq!(
        key_restriction(&f).unwrap(),
        func(&u, &[("", "a"), ("b", "a b")])
    );
}

#[test]
fn canonicalization_examples() {
    let u = Universe::letters(3).unwrap();
    let raw = [pair(&u, "a", "b"), pair(&u, "b", "c"), pair(&u, "a", "c")];
    assert_eq!(
        canonicalize(&u, raw).unwrap(),
        func(&u, &[("a", "a b c"), ("b", "b c")])
    );
    let raw = [pair(&u, "a", "b"), pair(&u, "a", "c")];
    assert_eq!(canonicalize(&u, raw).unwrap(), func(&u, &[("a", "a b c")]));
    let v = Universe::letters(2).unwrap();
    assert_eq!(
        materialize_mu(&func(&v, &[("a", "b")])).unwrap(),
        func(&v, &[("", ""), ("a", "a b"), ("b", "b"), ("a b", "a b")])
    );
    let (_, f) = e1();
    assert_eq!(close_rights(&f).unwrap(), f);
}

#[test]
fn removable_pairs_and_covers() {
    let (u, f) = e1();
    assert!(removable_pairs(&f).is_empty());
    let v = Universe::letters(3).unwrap();
    let g = func(&v, &[("a", "a b c"), ("b", "b c"), ("a b", "a b c")]);
    assert_eq!(removable_pairs(&g), vec![pair(&v, "a b", "a b c")]);
    let h = func(&u, &[("a", AB), ("b", AB), ("a c", D), ("a b c", D)]);
    assert_eq!(nonredundant_cover(&h), gamma(&u));
    assert!(is_cover(&f, &gamma(&u)).unwrap());
    assert!(!is_cover(&f, &func(&u, &[("a", AB)])).unwrap());
}

#[test]
fn spans_and_independence() {
    let (u, f) = e1();
    let mu = materialize_mu(&f).unwrap();
    let s = span(&func(&u, &[("a c", D)]), &mu).unwrap();
    assert!(s.contains(&pair(&u, "a b c", D)));
    assert!(!s.contains(&pair(&u, "b c", D)));
    for b in [alpha(&u), beta2(&u), gamma(&u)] {
        assert_eq!(span(&b, &mu).unwrap(), mu);
    }
    assert!(is_independent(&func(&u, &[("a", AB), ("a b c", D)])));
    assert!(!is_independent(&func(&u, &[("a b c", D), ("a c", D)])));
}

#[test]
fn oracle_closure_table_of_e1() {
    let (u, f) = e1();
    let t = oracle_closure_table(&f).unwrap();
    assert_eq!(t.len(), 16);
    assert_eq!(t.get(&set(&u, "b c")).unwrap().right, u.full_set());
    assert_eq!(t, materialize_mu(&f).unwrap());
}

#[test]
fn bases_of_e1() {
    let (u, f) = e1();
    let mu = materialize_mu(&f).unwrap();
    let want = vec![alpha(&u), beta2(&u), gamma(&u)];
    let mut oracle = oracle_nonredundant_covers(&mu).unwrap();
    oracle.sort();
    let mut walked = enumerate_bases(&mu, 64).unwrap();
    walked.sort();
    let mut sorted = want.clone();
    sorted.sort();
    assert_eq!(oracle, sorted);
    assert_eq!(walked, sorted);
    for b in &want {
        assert_eq!(b.len(), 3);
        assert_eq!(names(&u, &top_signature(b).unwrap()), [AB, D]);
    }
    let v = Universe::letters(2).unwrap();
    let g = func(&v, &[("a", "a b")]);
    assert_eq!(
        enumerate_bases(&materialize_mu(&g).unwrap(), 8).unwrap(),
        vec![g.clone()]
    );
    assert_eq!(
        oracle_nonredundant_covers(&materialize_mu(&g).unwrap()).unwrap(),
        vec![g]
    );
}

#[test]
fn range_restrictions() {
    let (u, f) = e1();
    let mu = materialize_mu(&f).unwrap();
    let r = restrict(&mu, &set(&u, AB)).unwrap();
    assert_eq!(
        r.body,
        func(&u, &[("", ""), ("a", AB), ("b", AB), ("a b", AB)])
    );
    assert_eq!(r.interior, func(&u, &[("", "")]));
    assert_eq!(r.top, func(&u, &[("a", AB), ("b", AB), ("a b", AB)]));
    let g = restrict(&gamma(&u), &u.full_set()).unwrap();
    assert_eq!(g.top, func(&u, &[("a b c", D)]));
}

#[test]
fn direct_determination_examples() {
    let (u, f) = e1();
    let a = alpha(&u);
    assert!(
        directly_determines(&f, &set(&u, "a c"), &set(&u, "b c"))
            .unwrap()
            .0
    );
    assert!(
        !directly_determines(&f, &set(&u, "a"), &set(&u, "b"))
            .unwrap()
            .0
    );
    let g = gamma(&u);
    assert_eq!(
        dd_target(&g, &set(&u, "a c"), &u.full_set()).unwrap(),
        pair(&u, "a b c", D)
    );
    assert_eq!(
        dd_target(&a, &set(&u, "a c d"), &u.full_set()).unwrap(),
        pair(&u, "a c", D)
    );
    assert!(matches!(
        dd_target(&g, &set(&u, "a d"), &u.full_set()),
        Err(Error::ClosureMismatch { .. })
    ));
}

#[test]
fn exchange_and_bijection() {
    let (u, _) = e1();
    let a = alpha(&u);
    let b2 = exchange(&a, &pair(&u, "a c", D), &pair(&u, "b c", D)).unwrap();
    assert_eq!(b2, beta2(&u));
    let m = dd_bijection(&a, &gamma(&u)).unwrap();
    assert!(m.contains(&(pair(&u, "a", AB), pair(&u, "a", AB))));
    assert!(m.contains(&(pair(&u, "b", AB), pair(&u, "b", AB))));
    assert!(m.contains(&(pair(&u, "a c", D), pair(&u, "a b c", D))));
    let m = dd_bijection(&a, &beta2(&u)).unwrap();
    assert!(m.contains(&(pair(&u, "a c", D), pair(&u, "b c", D))));
}

#[test]
fn exchange_requires_mutual_determination() {
    let (u, _) = e1();
    let a = alpha(&u);
    // {a c d} reaches {a c} directly but not the other way round.
    assert!(matches!(
        exchange(&a, &pair(&u, "a c", D), &pair(&u, "a c d", D)),
        Err(Error::NoDirectDetermination { .. })
    ));
}

#[test]
fn singleton_statuses_of_e1() {
    let (u, f) = e1();
    let mu = materialize_mu(&f).unwrap();
    let s = singleton_status(&mu, &pair(&u, "a c", D)).unwrap();
    assert!(!s.mat12_dependent);
    assert_eq!(s.in_some_basis, Some(true));
    assert!(!s.conflict);
    let s = singleton_status(&mu, &pair(&u, "a b c", D)).unwrap();
    assert!(s.mat12_dependent);
    assert!(!s.left_is_key);
    assert_eq!(s.in_some_basis, Some(true));
    assert!(s.conflict);
}

#[test]
fn hereditary_fixtures() {
    let e4 = fdmatroid::fixtures::e4();
    let u = e4.universe().clone();
    assert_eq!(names(&u, e4.members()), ["", "a", "b", "c", "a b"]);
    assert_eq!(delta(&e4, &set(&u, "c")).unwrap(), u.full_set());
    assert_eq!(
        names(&u, &ancestors(&e4, &set(&u, "c")).unwrap()),
        ["a c", "b c", "a b c"]
    );
    assert_eq!(kappa_topdown(&e4, &set(&u, "c")).unwrap(), set(&u, "c"));
    assert_eq!(kappa_topdown(&e4, &u.empty_set()).unwrap(), u.empty_set());
    assert_eq!(kappa_bottomup(&e4, &set(&u, "c")).unwrap(), u.full_set());
    assert_eq!(
        names(
            &u,
            &maximal_independent_subsets(&e4, &set(&u, "a c")).unwrap()
        ),
        ["a", "c"]
    );

    let e3 = fdmatroid::fixtures::e3();
    let v = e3.universe().clone();
    assert_eq!(delta(&e3, &set(&v, "a")).unwrap(), v.full_set());
    assert_eq!(names(&v, &ancestors(&e3, &set(&v, "a")).unwrap()), ["a b"]);
    assert_eq!(kappa_topdown(&e3, &set(&v, "a")).unwrap(), v.full_set());
    assert_eq!(kappa_bottomup(&e3, &set(&v, "a")).unwrap(), v.full_set());
}

#[test]
fn flat_closure_tables_of_e4() {
    let e4 = fdmatroid::fixtures::e4();
    let u = e4.universe().clone();
    let top = ["", "a c", "b c", "c", "a b c", "a c", "b c", "a b c"];
    for (x, want) in u.full_set().subsets().iter().zip(top) {
        assert_eq!(u.render(&kappa_topdown(&e4, x).unwrap()), want, "{x:?}");
        let bottom = if x.is_empty() { "" } else { "a b c" };
        assert_eq!(u.render(&kappa_bottomup(&e4, x).unwrap()), bottom, "{x:?}");
    }
}
