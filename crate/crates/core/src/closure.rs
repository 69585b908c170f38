//! Closures generated by dependency functions.
//!
//! [`extend_by_closure`] runs the staged recurrence and records each stage;
//! [`ClosureKernel`] is the counter-and-queue algorithm that runs in time
//! linear in the total size of the function. Both must agree bit for bit.

use crate::error::{Error, Result};
use crate::flat::HereditaryCollection;
use crate::model::{AttrSet, FdFunction, FdPair, Trace, Universe};

/// Largest universe for which closed sets and keys are enumerated.
pub const ENUMERATION_CAP: usize = 12;
/// Largest universe for which the full closure table is materialized.
pub const MU_CAP: usize = 12;
/// Largest universe for which bases are enumerated.
pub const BASIS_CAP: usize = 8;

/// Runs the extension-by-closure recurrence from `x`.
///
/// Each round fires every pair whose left side is contained in the current
/// stage and has not fired before; the round's right sides are unioned in.
/// Rounds that add nothing end the sequence.
pub fn extend_by_closure(f: &FdFunction, x: &AttrSet) -> Result<(AttrSet, Trace)> {
    f.check_set(x)?;
    let mut fired_flags = vec![false; f.len()];
    let mut stages = vec![x.clone()];
    let mut fired = Vec::new();
    loop {
        let current = stages.last().expect("non-empty");
        let mut next = current.clone();
        let mut round = Vec::new();
        for (i, p) in f.iter().enumerate() {
            if !fired_flags[i] && p.left.is_subset(current) {
                fired_flags[i] = true;
                next.union_with(&p.right);
                round.push(p.clone());
            }
        }
        if next == *current {
            break;
        }
        stages.push(next);
        fired.push(round);
    }
    let result = stages.last().expect("non-empty").clone();
    Ok((result, Trace { stages, fired }))
}

/// Prepared index for linear-time closure queries against one function.
pub struct ClosureKernel<'a> {
    f: &'a FdFunction,
    by_attr: Vec<Vec<u32>>,
    left_len: Vec<u32>,
    empty_left: Vec<u32>,
}

impl<'a> ClosureKernel<'a> {
    pub fn new(f: &'a FdFunction) -> Self {
        let n = f.universe().len();
        let mut by_attr = vec![Vec::new(); n];
        let mut left_len = Vec::with_capacity(f.len());
        let mut empty_left = Vec::new();
        for (i, p) in f.iter().enumerate() {
            let mut k = 0u32;
            for a in p.left.iter() {
                by_attr[a].push(i as u32);
                k += 1;
            }
            if k == 0 {
                empty_left.push(i as u32);
            }
            left_len.push(k);
        }
        ClosureKernel {
            f,
            by_attr,
            left_len,
            empty_left,
        }
    }

    pub fn function(&self) -> &FdFunction {
        self.f
    }

    pub fn closure(&self, x: &AttrSet) -> Result<AttrSet> {
        self.closure_with(x, None, None)
    }

    /// Closure of `x` using only the pairs flagged in `enabled` (all pairs
    /// when `None`). With `stop_at`, returns as soon as the running result
    /// contains that set; the returned set is then a subset of the closure.
    pub fn closure_with(
        &self,
        x: &AttrSet,
        enabled: Option<&[bool]>,
        stop_at: Option<&AttrSet>,
    ) -> Result<AttrSet> {
        self.f.check_set(x)?;
        if let Some(t) = stop_at {
            self.f.check_set(t)?;
        }
        let on = |i: u32| enabled.is_none_or(|e| e[i as usize]);
        let done = |r: &AttrSet| stop_at.is_some_and(|t| t.is_subset(r));
        let mut result = x.clone();
        if done(&result) {
            return Ok(result);
        }
        let mut counters = self.left_len.clone();
        let mut queue: Vec<usize> = x.iter().collect();
        let pairs = self.f.pairs();

        let fire = |i: u32, result: &mut AttrSet, queue: &mut Vec<usize>| {
            let right = pairs[i as usize].right.words();
            let res = result.words_mut();
            for (w, (r, cur)) in right.iter().zip(res.iter_mut()).enumerate() {
                let mut fresh = r & !*cur;
                *cur |= fresh;
                while fresh != 0 {
                    queue.push(w * 64 + fresh.trailing_zeros() as usize);
                    fresh &= fresh - 1;
                }
            }
        };

        for &i in &self.empty_left {
            if on(i) {
                fire(i, &mut result, &mut queue);
            }
        }
        if done(&result) {
            return Ok(result);
        }
        while let Some(a) = queue.pop() {
            for &i in &self.by_attr[a] {
                if !on(i) {
                    continue;
                }
                let c = &mut counters[i as usize];
                *c -= 1;
                if *c == 0 {
                    fire(i, &mut result, &mut queue);
                    if done(&result) {
                        return Ok(result);
                    }
                }
            }
        }
        Ok(result)
    }
}

/// Linear-time closure of `x` under `f`.
pub fn fast_closure(f: &FdFunction, x: &AttrSet) -> Result<AttrSet> {
    ClosureKernel::new(f).closure(x)
}

pub fn is_closed(f: &FdFunction, c: &AttrSet) -> Result<bool> {
    Ok(fast_closure(f, c)? == *c)
}

/// Full closure map of a function over a small universe, indexed by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTable {
    universe: Universe,
    masks: Vec<u64>,
}

impl ClosureTable {
    /// Tabulates `f⁺` on every subset. A function whose domain is already all
    /// of `2^U` and which is itself a closure operator is read off directly.
    pub fn build(f: &FdFunction) -> Result<Self> {
        let u = f.universe();
        if u.len() > MU_CAP {
            return Err(Error::cap("closure table universe", u.len(), MU_CAP));
        }
        if let Some(t) = Self::from_closure_function(f) {
            return Ok(t);
        }
        let kernel = ClosureKernel::new(f);
        let masks = (0..1u64 << u.len())
            .map(|m| kernel.closure(&u.set_from_mask(m)).map(|s| s.to_mask()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosureTable {
            universe: u.clone(),
            masks,
        })
    }

    /// Tabulates an arbitrary map on masks. The caller guarantees it is a
    /// closure operator.
    pub fn from_fn<F: FnMut(u64) -> u64>(universe: &Universe, mut g: F) -> Result<Self> {
        if universe.len() > MU_CAP {
            return Err(Error::cap("closure table universe", universe.len(), MU_CAP));
        }
        Ok(ClosureTable {
            universe: universe.clone(),
            masks: (0..1u64 << universe.len()).map(&mut g).collect(),
        })
    }

    fn from_closure_function(f: &FdFunction) -> Option<Self> {
        let n = f.universe().len();
        let size = 1usize << n;
        if f.len() != size {
            return None;
        }
        let mut masks = vec![0u64; size];
        for p in f.iter() {
            masks[p.left.to_mask() as usize] = p.right.to_mask();
        }
        for m in 0..size as u64 {
            let r = masks[m as usize];
            if m & !r != 0 || masks[r as usize] != r {
                return None;
            }
            for a in 0..n {
                let bigger = m | (1 << a);
                if r & !masks[bigger as usize] != 0 {
                    return None;
                }
            }
        }
        Some(ClosureTable {
            universe: f.universe().clone(),
            masks,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn closure_mask(&self, mask: u64) -> u64 {
        self.masks[mask as usize]
    }

    pub fn closure(&self, set: &AttrSet) -> AttrSet {
        assert_eq!(set.universe_id(), self.universe.id(), "universe mismatch");
        self.universe
            .set_from_mask(self.closure_mask(set.to_mask()))
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn is_closed_mask(&self, mask: u64) -> bool {
        self.masks[mask as usize] == mask
    }

    /// Whether `mask` is a key of its own closure.
    pub fn is_key_mask(&self, mask: u64) -> bool {
        let c = self.masks[mask as usize];
        let mut rest = mask;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if self.masks[(mask & !bit) as usize] == c {
                return false;
            }
        }
        true
    }

    /// The materialized function `{(S, Sμ)}` in canonical order.
    pub fn to_function(&self) -> FdFunction {
        let u = &self.universe;
        let mut pairs: Vec<FdPair> = (0..self.masks.len() as u64)
            .map(|m| FdPair {
                left: u.set_from_mask(m),
                right: u.set_from_mask(self.masks[m as usize]),
            })
            .collect();
        pairs.sort_by(|a, b| a.left.cmp(&b.left));
        FdFunction::from_sorted_unchecked(u, pairs)
    }
}

/// All closed sets of `f⁺` in canonical order.
pub fn closed_sets(f: &FdFunction) -> Result<Vec<AttrSet>> {
    let n = f.universe().len();
    if n > ENUMERATION_CAP {
        return Err(Error::cap(
            "closed-set enumeration universe",
            n,
            ENUMERATION_CAP,
        ));
    }
    let table = ClosureTable::build(f)?;
    let mut out: Vec<AttrSet> = (0..1u64 << n)
        .filter(|&m| table.is_closed_mask(m))
        .map(|m| f.universe().set_from_mask(m))
        .collect();
    out.sort();
    Ok(out)
}

/// Inclusion-minimal subsets of the closed set `c` whose closure is `c`.
pub fn keys_of(f: &FdFunction, c: &AttrSet) -> Result<Vec<AttrSet>> {
    f.check_set(c)?;
    let kernel = ClosureKernel::new(f);
    if kernel.closure(c)? != *c {
        return Err(Error::NotClosed(f.universe().render(c)));
    }
    if c.len() > ENUMERATION_CAP {
        return Err(Error::cap(
            "key enumeration closed set",
            c.len(),
            ENUMERATION_CAP,
        ));
    }
    let mut keys: Vec<AttrSet> = Vec::new();
    for k in c.subsets() {
        if keys.iter().any(|found| found.is_subset(&k)) {
            continue;
        }
        if kernel.closure(&k)? == *c {
            keys.push(k);
        }
    }
    Ok(keys)
}

/// Every key of `f⁺` in canonical order, without checking heredity.
pub fn key_sets(f: &FdFunction) -> Result<Vec<AttrSet>> {
    let n = f.universe().len();
    if n > ENUMERATION_CAP {
        return Err(Error::cap("key enumeration universe", n, ENUMERATION_CAP));
    }
    Ok(key_sets_of_table(&ClosureTable::build(f)?))
}

pub(crate) fn key_sets_of_table(table: &ClosureTable) -> Vec<AttrSet> {
    let u = table.universe();
    let mut out: Vec<AttrSet> = (0..1u64 << u.len())
        .filter(|&m| table.is_key_mask(m))
        .map(|m| u.set_from_mask(m))
        .collect();
    out.sort();
    out
}

/// `Ky μ` as a hereditary collection. Heredity is verified.
pub fn all_keys(f: &FdFunction) -> Result<HereditaryCollection> {
    HereditaryCollection::from_members(f.universe(), key_sets(f)?)
}

/// `μ` restricted to its keys: `{(K, Kμ) : K ∈ Ky μ}`.
pub fn key_restriction(f: &FdFunction) -> Result<FdFunction> {
    let n = f.universe().len();
    if n > ENUMERATION_CAP {
        return Err(Error::cap("key restriction universe", n, ENUMERATION_CAP));
    }
    let table = ClosureTable::build(f)?;
    let pairs = key_sets_of_table(&table)
        .into_iter()
        .map(|k| {
            let right = table.closure(&k);
            FdPair { left: k, right }
        })
        .collect();
    Ok(FdFunction::from_sorted_unchecked(f.universe(), pairs))
}

/// Reduces a dependency relation to the function with the same domain whose
/// right sides are the full closures of their left sides.
pub fn canonicalize<I>(universe: &Universe, raw: I) -> Result<FdFunction>
where
    I: IntoIterator<Item = FdPair>,
{
    let merged = FdFunction::from_pairs(universe, raw, true)?;
    close_rights(&merged)
}

/// Replaces each right side by the closure of its left side.
pub fn close_rights(f: &FdFunction) -> Result<FdFunction> {
    let kernel = ClosureKernel::new(f);
    let pairs = f
        .iter()
        .map(|p| {
            Ok(FdPair {
                left: p.left.clone(),
                right: kernel.closure(&p.left)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FdFunction::from_sorted_unchecked(f.universe(), pairs))
}

/// The explicit closure `μ = {(S, Sμ) : S ⊆ U}`.
pub fn materialize_mu(f: &FdFunction) -> Result<FdFunction> {
    let n = f.universe().len();
    if n > MU_CAP {
        return Err(Error::cap("materialized closure universe", n, MU_CAP));
    }
    Ok(ClosureTable::build(f)?.to_function())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(u: &Universe, t: &str) -> AttrSet {
        u.parse_set(t).unwrap()
    }

    fn func(u: &Universe, pairs: &[(&str, &str)]) -> FdFunction {
        FdFunction::from_pairs(
            u,
            pairs
                .iter()
                .map(|(l, r)| FdPair::new(set(u, l), set(u, r)).unwrap()),
            true,
        )
        .unwrap()
    }

    #[test]
    fn staged_recurrence_on_e1() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let f = func(&u, &[("a", "b"), ("b", "a"), ("a c", "d")]);
        let (r, t) = extend_by_closure(&f, &set(&u, "a c")).unwrap();
        assert_eq!(r, u.full_set());
        assert_eq!(t.stages, vec![set(&u, "a c"), set(&u, "a b c d")]);
        assert_eq!(
            t.fired,
            vec![vec![f.pairs()[0].clone(), f.pairs()[2].clone()]]
        );
        assert_eq!(t.steps(), 1);
        let (_, t) = extend_by_closure(&f, &set(&u, "b c")).unwrap();
        assert_eq!(
            t.stages,
            vec![set(&u, "b c"), set(&u, "a b c"), set(&u, "a b c d")]
        );
        assert_eq!(fast_closure(&f, &set(&u, "b c")).unwrap(), u.full_set());
    }

    #[test]
    fn trivial_closures() {
        let u = Universe::new(["a", "b"]).unwrap();
        let empty = FdFunction::new(&u);
        let (r, t) = extend_by_closure(&empty, &set(&u, "a")).unwrap();
        assert_eq!(r, set(&u, "a"));
        assert_eq!(t.stages.len(), 1);
        assert_eq!(fast_closure(&empty, &set(&u, "a")).unwrap(), set(&u, "a"));

        let g = func(&u, &[("", "a")]);
        assert_eq!(
            extend_by_closure(&g, &u.empty_set()).unwrap().0,
            set(&u, "a")
        );
        assert_eq!(fast_closure(&g, &set(&u, "b")).unwrap(), u.full_set());
    }

    #[test]
    fn closedness_on_e1() {
        let (u, f) = fixtures::e1();
        assert!(is_closed(&f, &set(&u, "a b")).unwrap());
        assert!(!is_closed(&f, &set(&u, "a")).unwrap());
        assert!(is_closed(&f, &u.full_set()).unwrap());
    }

    #[test]
    fn closed_sets_of_e1() {
        let (u, f) = fixtures::e1();
        let got = closed_sets(&f).unwrap();
        let want: Vec<AttrSet> = ["", "c", "d", "a b", "c d", "a b d", "a b c d"]
            .iter()
            .map(|t| set(&u, t))
            .collect();
        assert_eq!(got, want);

        let v = Universe::new(["a", "b"]).unwrap();
        assert_eq!(closed_sets(&FdFunction::new(&v)).unwrap().len(), 4);
        let g = func(&v, &[("", "a b")]);
        assert_eq!(closed_sets(&g).unwrap(), vec![v.full_set()]);
    }

    #[test]
    fn keys_on_e1() {
        let (u, f) = fixtures::e1();
        assert_eq!(
            keys_of(&f, &u.full_set()).unwrap(),
            vec![set(&u, "a c"), set(&u, "b c")]
        );
        assert_eq!(
            keys_of(&f, &set(&u, "a b")).unwrap(),
            vec![set(&u, "a"), set(&u, "b")]
        );
        assert_eq!(
            keys_of(&f, &set(&u, "a")).unwrap_err(),
            Error::NotClosed("a".into())
        );
        let empty = FdFunction::new(&u);
        assert_eq!(
            keys_of(&empty, &set(&u, "b d")).unwrap(),
            vec![set(&u, "b d")]
        );
    }

    #[test]
    fn all_keys_of_e1() {
        let (u, f) = fixtures::e1();
        let ky = all_keys(&f).unwrap();
        let want: Vec<AttrSet> = ["", "a", "b", "c", "d", "a c", "a d", "b c", "b d", "c d"]
            .iter()
            .map(|t| set(&u, t))
            .collect();
        assert_eq!(ky.members(), want.as_slice());
    }

    #[test]
    fn keys_with_empty_left() {
        let u = Universe::new(["a", "b"]).unwrap();
        let f = func(&u, &[("", "a")]);
        let ky = key_sets(&f).unwrap();
        assert_eq!(ky, vec![u.empty_set(), set(&u, "b")]);
        let kr = key_restriction(&f).unwrap();
        let want = func(&u, &[("", "a"), ("b", "a b")]);
        assert_eq!(kr, want);
        let empty = FdFunction::new(&u);
        assert_eq!(key_sets(&empty).unwrap().len(), 4);
        assert_eq!(key_restriction(&empty).unwrap().len(), 4);
    }

    #[test]
    fn key_restriction_of_e1() {
        let (u, f) = fixtures::e1();
        let kr = key_restriction(&f).unwrap();
        assert_eq!(kr.len(), 10);
        assert!(kr.contains(&FdPair::new(set(&u, "a c"), u.full_set()).unwrap()));
        assert!(kr.contains(&FdPair::new(set(&u, "c"), set(&u, "c")).unwrap()));
        for x in u.subsets() {
            assert_eq!(
                fast_closure(&kr, &x).unwrap(),
                fast_closure(&f, &x).unwrap()
            );
        }
    }

    #[test]
    fn canonicalize_examples() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let raw = |pairs: &[(&str, &str)]| -> Vec<FdPair> {
            pairs
                .iter()
                .map(|(l, r)| FdPair::new(set(&u, l), set(&u, r)).unwrap())
                .collect()
        };
        let got = canonicalize(&u, raw(&[("a", "b"), ("b", "c"), ("a", "c")])).unwrap();
        assert_eq!(got, func(&u, &[("a", "a b c"), ("b", "b c")]));
        let got = canonicalize(&u, raw(&[("a", "b"), ("a", "c")])).unwrap();
        assert_eq!(got, func(&u, &[("a", "a b c")]));
        let again = canonicalize(&u, got.pairs().to_vec()).unwrap();
        assert_eq!(again, got);
    }

    #[test]
    fn materialize_small() {
        let u = Universe::new(["a", "b"]).unwrap();
        let f = func(&u, &[("a", "b")]);
        let mu = materialize_mu(&f).unwrap();
        let want = func(&u, &[("", ""), ("a", "a b"), ("b", "b"), ("a b", "a b")]);
        assert_eq!(mu, want);
        let id = materialize_mu(&FdFunction::new(&u)).unwrap();
        assert!(id.iter().all(FdPair::is_reflexive));
        let big = Universe::letters(20).unwrap();
        assert!(matches!(
            materialize_mu(&FdFunction::new(&big)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn closure_table_reuses_materialized_input() {
        let (_, f) = fixtures::e1();
        let mu = materialize_mu(&f).unwrap();
        let t1 = ClosureTable::build(&f).unwrap();
        let t2 = ClosureTable::build(&mu).unwrap();
        assert_eq!(t1, t2);
    }

    #[test]
    fn early_stop_and_mask() {
        let (u, f) = fixtures::e1();
        let k = ClosureKernel::new(&f);
        let enabled = vec![true, false, true];
        let r = k
            .closure_with(&set(&u, "b c"), Some(&enabled), None)
            .unwrap();
        assert_eq!(r, set(&u, "b c"));
        let enabled = vec![false, true, true];
        let r = k
            .closure_with(&set(&u, "b c"), Some(&enabled), None)
            .unwrap();
        assert_eq!(r, set(&u, "a b c d"));
        let enabled = vec![true, true, false];
        let r = k
            .closure_with(&set(&u, "b c"), Some(&enabled), None)
            .unwrap();
        assert_eq!(r, set(&u, "a b c"));
        let target = set(&u, "a");
        let r = k.closure_with(&set(&u, "b"), None, Some(&target)).unwrap();
        assert!(target.is_subset(&r));
    }
}
