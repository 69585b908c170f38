//! Hereditary collections and their flat closures.
//!
//! The flat closure is computed top-down, as the intersection of the
//! dependence-function images containing a set, and bottom-up, by running
//! the extension-by-closure recurrence on the dependence function. The two
//! are compared, not assumed equal.

use crate::closure::{extend_by_closure, ClosureKernel};
use crate::error::{Error, Result};
use crate::model::{AttrSet, FdFunction, FdPair, Universe};

/// Largest universe a hereditary collection may live in.
pub const HEREDITARY_CAP: usize = 16;

/// A downward-closed family of attribute sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HereditaryCollection {
    universe: Universe,
    members: Vec<AttrSet>,
    bitmap: Vec<u64>,
}

impl HereditaryCollection {
    /// All subsets of the given facets, plus the empty set.
    pub fn from_facets(universe: &Universe, facets: &[AttrSet]) -> Result<Self> {
        check_cap(universe)?;
        let mut bitmap = empty_bitmap(universe);
        bitmap[0] |= 1;
        for f in facets {
            check_set(universe, f)?;
            let top = f.to_mask();
            let mut sub = top;
            loop {
                bitmap[(sub / 64) as usize] |= 1 << (sub % 64);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & top;
            }
        }
        Ok(Self::from_bitmap(universe, bitmap))
    }

    /// The collection with exactly these members. Fails with
    /// [`Error::Invariant`] if the family is not downward closed.
    pub fn from_members<I>(universe: &Universe, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = AttrSet>,
    {
        check_cap(universe)?;
        let mut bitmap = empty_bitmap(universe);
        for m in members {
            check_set(universe, &m)?;
            let k = m.to_mask();
            bitmap[(k / 64) as usize] |= 1 << (k % 64);
        }
        let h = Self::from_bitmap(universe, bitmap);
        for m in &h.members {
            for p in m.iter() {
                if !h.contains(&m.without(p)) {
                    return Err(Error::Invariant(format!(
                        "collection is not hereditary: {{{}}} is a member but {{{}}} is not",
                        universe.render(m),
                        universe.render(&m.without(p))
                    )));
                }
            }
        }
        Ok(h)
    }

    /// The uniform collection `U_{k,n}`: every set of size at most `k`.
    pub fn uniform(universe: &Universe, k: usize) -> Result<Self> {
        check_cap(universe)?;
        let mut bitmap = empty_bitmap(universe);
        for m in 0..1u64 << universe.len() {
            if m.count_ones() as usize <= k {
                bitmap[(m / 64) as usize] |= 1 << (m % 64);
            }
        }
        Ok(Self::from_bitmap(universe, bitmap))
    }

    fn from_bitmap(universe: &Universe, bitmap: Vec<u64>) -> Self {
        let mut members: Vec<AttrSet> = (0..1u64 << universe.len())
            .filter(|m| bitmap[(m / 64) as usize] & (1 << (m % 64)) != 0)
            .map(|m| universe.set_from_mask(m))
            .collect();
        members.sort();
        HereditaryCollection {
            universe: universe.clone(),
            members,
            bitmap,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Members in canonical order.
    pub fn members(&self) -> &[AttrSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        (mask >> self.universe.len()) == 0
            && self.bitmap[(mask / 64) as usize] & (1 << (mask % 64)) != 0
    }

    pub fn contains(&self, set: &AttrSet) -> bool {
        set.universe_id() == self.universe.id() && self.contains_mask(set.to_mask())
    }

    /// Inclusion-maximal members in canonical order.
    pub fn facets(&self) -> Vec<AttrSet> {
        let n = self.universe.len();
        self.members
            .iter()
            .filter(|m| {
                let k = m.to_mask();
                (0..n).all(|p| k & (1 << p) != 0 || !self.contains_mask(k | (1 << p)))
            })
            .cloned()
            .collect()
    }

    pub(crate) fn delta_mask(&self, mask: u64) -> u64 {
        let mut out = mask;
        for p in 0..self.universe.len() {
            let bit = 1u64 << p;
            if mask & bit == 0 && !self.contains_mask(mask | bit) {
                out |= bit;
            }
        }
        out
    }
}

fn check_cap(universe: &Universe) -> Result<()> {
    if universe.len() > HEREDITARY_CAP {
        Err(Error::cap(
            "hereditary collection universe",
            universe.len(),
            HEREDITARY_CAP,
        ))
    } else {
        Ok(())
    }
}

fn check_set(universe: &Universe, set: &AttrSet) -> Result<()> {
    if set.universe_id() == universe.id() && set.universe_len() == universe.len() {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

fn empty_bitmap(universe: &Universe) -> Vec<u64> {
    vec![0; (1usize << universe.len()).div_ceil(64)]
}

/// `Iδ_H = I ∪ {p ∉ I : I ∪ {p} ∉ H}` for a member `I`.
pub fn delta(h: &HereditaryCollection, i: &AttrSet) -> Result<AttrSet> {
    check_set(h.universe(), i)?;
    if !h.contains(i) {
        return Err(Error::NotIndependent(h.universe().render(i)));
    }
    Ok(h.universe().set_from_mask(h.delta_mask(i.to_mask())))
}

/// The function `{(I, Iδ_H) : I ∈ H}`.
pub fn delta_function(h: &HereditaryCollection) -> FdFunction {
    let u = h.universe();
    let pairs = h
        .members()
        .iter()
        .map(|m| FdPair {
            left: m.clone(),
            right: u.set_from_mask(h.delta_mask(m.to_mask())),
        })
        .collect();
    FdFunction::from_sorted_unchecked(u, pairs)
}

/// Distinct δ-images containing `x`, in canonical order.
pub fn ancestors(h: &HereditaryCollection, x: &AttrSet) -> Result<Vec<AttrSet>> {
    check_set(h.universe(), x)?;
    let xm = x.to_mask();
    let mut images: Vec<u64> = h
        .members()
        .iter()
        .map(|m| h.delta_mask(m.to_mask()))
        .filter(|d| xm & !d == 0)
        .collect();
    images.sort_unstable();
    images.dedup();
    let mut out: Vec<AttrSet> = images
        .into_iter()
        .map(|m| h.universe().set_from_mask(m))
        .collect();
    out.sort();
    Ok(out)
}

/// Intersection of the ancestors of `x`; `U` when there are none.
pub fn kappa_topdown(h: &HereditaryCollection, x: &AttrSet) -> Result<AttrSet> {
    let mut out = h.universe().full_set();
    for a in ancestors(h, x)? {
        out.intersect_with(&a);
    }
    Ok(out)
}

/// Closure of `x` under the extension of the dependence function.
pub fn kappa_bottomup(h: &HereditaryCollection, x: &AttrSet) -> Result<AttrSet> {
    check_set(h.universe(), x)?;
    Ok(extend_by_closure(&delta_function(h), x)?.0)
}

/// Members `I ⊆ x` of `h` to which no further element of `x` can be added.
pub fn maximal_independent_subsets(h: &HereditaryCollection, x: &AttrSet) -> Result<Vec<AttrSet>> {
    check_set(h.universe(), x)?;
    let xm = x.to_mask();
    Ok(h.members()
        .iter()
        .filter(|m| {
            let k = m.to_mask();
            if k & !xm != 0 {
                return false;
            }
            let mut rest = xm & !k;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if h.contains_mask(k | bit) {
                    return false;
                }
            }
            true
        })
        .cloned()
        .collect())
}

/// Precomputed top-down and bottom-up flat closures for repeated queries.
pub struct FlatClosure {
    universe: Universe,
    images: Vec<u64>,
    delta: FdFunction,
}

impl FlatClosure {
    pub fn new(h: &HereditaryCollection) -> Self {
        let mut images: Vec<u64> = h
            .members()
            .iter()
            .map(|m| h.delta_mask(m.to_mask()))
            .collect();
        images.sort_unstable();
        images.dedup();
        FlatClosure {
            universe: h.universe().clone(),
            images,
            delta: delta_function(h),
        }
    }

    pub fn delta_function(&self) -> &FdFunction {
        &self.delta
    }

    pub fn topdown_mask(&self, x: u64) -> u64 {
        let full = if self.universe.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.universe.len()) - 1
        };
        self.images
            .iter()
            .filter(|d| x & !**d == 0)
            .fold(full, |acc, d| acc & d)
    }

    pub fn kernel(&self) -> ClosureKernel<'_> {
        ClosureKernel::new(&self.delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(u: &Universe, t: &str) -> AttrSet {
        u.parse_set(t).unwrap()
    }

    fn sets(u: &Universe, ts: &[&str]) -> Vec<AttrSet> {
        ts.iter().map(|t| set(u, t)).collect()
    }

    #[test]
    fn facets_expand_downward() {
        let h = fixtures::e4();
        let u = h.universe().clone();
        assert_eq!(
            h.members(),
            sets(&u, &["", "a", "b", "c", "a b"]).as_slice()
        );
        let none = HereditaryCollection::from_facets(&u, &[]).unwrap();
        assert_eq!(none.members(), sets(&u, &[""]).as_slice());
        let free = HereditaryCollection::from_facets(&u, &[u.full_set()]).unwrap();
        assert_eq!(free.len(), 8);
        assert_eq!(h.facets(), sets(&u, &["c", "a b"]));
    }

    #[test]
    fn members_must_be_hereditary() {
        let u = Universe::new(["a", "b"]).unwrap();
        let err = HereditaryCollection::from_members(&u, sets(&u, &["", "a b"])).unwrap_err();
        assert!(matches!(err, Error::Invariant(_)));
    }

    #[test]
    fn delta_examples() {
        let h4 = fixtures::e4();
        let u = h4.universe().clone();
        assert_eq!(delta(&h4, &set(&u, "c")).unwrap(), u.full_set());
        assert_eq!(delta(&h4, &set(&u, "")).unwrap(), set(&u, ""));
        assert_eq!(delta(&h4, &set(&u, "a")).unwrap(), set(&u, "a c"));
        assert_eq!(delta(&h4, &set(&u, "b")).unwrap(), set(&u, "b c"));
        assert_eq!(delta(&h4, &set(&u, "a b")).unwrap(), u.full_set());
        assert_eq!(
            delta(&h4, &set(&u, "a c")).unwrap_err(),
            Error::NotIndependent("a c".into())
        );
        let free = HereditaryCollection::uniform(&u, 3).unwrap();
        assert_eq!(delta(&free, &set(&u, "a b")).unwrap(), set(&u, "a b"));
        let h3 = fixtures::e3();
        let v = h3.universe().clone();
        assert_eq!(delta(&h3, &set(&v, "a")).unwrap(), v.full_set());
    }

    #[test]
    fn ancestor_examples() {
        let h3 = fixtures::e3();
        let v = h3.universe().clone();
        assert_eq!(ancestors(&h3, &set(&v, "a")).unwrap(), sets(&v, &["a b"]));
        assert_eq!(
            ancestors(&h3, &set(&v, "")).unwrap(),
            sets(&v, &["", "a b"])
        );
        let h4 = fixtures::e4();
        let u = h4.universe().clone();
        assert_eq!(
            ancestors(&h4, &set(&u, "c")).unwrap(),
            sets(&u, &["a c", "b c", "a b c"])
        );
    }

    #[test]
    fn kappa_examples() {
        let h4 = fixtures::e4();
        let u = h4.universe().clone();
        assert_eq!(kappa_topdown(&h4, &set(&u, "c")).unwrap(), set(&u, "c"));
        assert_eq!(kappa_topdown(&h4, &set(&u, "")).unwrap(), set(&u, ""));
        assert_eq!(kappa_bottomup(&h4, &set(&u, "c")).unwrap(), u.full_set());

        let h3 = fixtures::e3();
        let v = h3.universe().clone();
        assert_eq!(kappa_topdown(&h3, &set(&v, "a")).unwrap(), v.full_set());
        assert_eq!(kappa_bottomup(&h3, &set(&v, "a")).unwrap(), v.full_set());

        let free = HereditaryCollection::uniform(&u, 3).unwrap();
        for x in u.subsets() {
            assert_eq!(kappa_bottomup(&free, &x).unwrap(), x);
            assert_eq!(kappa_topdown(&free, &x).unwrap(), x);
        }
    }

    #[test]
    fn flat_closure_helper_matches() {
        let h4 = fixtures::e4();
        let fc = FlatClosure::new(&h4);
        let k = fc.kernel();
        for x in h4.universe().subsets() {
            assert_eq!(
                fc.topdown_mask(x.to_mask()),
                kappa_topdown(&h4, &x).unwrap().to_mask()
            );
            assert_eq!(k.closure(&x).unwrap(), kappa_bottomup(&h4, &x).unwrap());
        }
    }

    #[test]
    fn maximal_independent() {
        let h4 = fixtures::e4();
        let u = h4.universe().clone();
        assert_eq!(
            maximal_independent_subsets(&h4, &u.full_set()).unwrap(),
            sets(&u, &["c", "a b"])
        );
        assert_eq!(
            maximal_independent_subsets(&h4, &set(&u, "a c")).unwrap(),
            sets(&u, &["a", "c"])
        );
    }
}
