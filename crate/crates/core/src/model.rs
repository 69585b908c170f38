//! Universes, attribute sets, dependency pairs and dependency functions.
//!
//! Every other module works on these types. Attribute sets are dense
//! bitmasks tagged with the identity of the universe they were built
//! against, so that mixing sets from two universes is detected instead of
//! silently reindexed. The canonical order on sets (size first, then
//! lexicographic by attribute position) is the single tie-breaking rule used
//! everywhere results are listed.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// The ground set: an ordered list of distinct attribute names.
#[derive(Clone)]
pub struct Universe {
    inner: Arc<UniverseInner>,
}

struct UniverseInner {
    names: Vec<String>,
    index: HashMap<String, usize>,
    id: u64,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyName);
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateAttribute(name.clone()));
            }
        }
        let id = fingerprint(&names);
        Ok(Universe {
            inner: Arc::new(UniverseInner { names, index, id }),
        })
    }

    /// Universe named `a`, `b`, ... for `n <= 26`, `x0`, `x1`, ... beyond.
    pub fn letters(n: usize) -> Result<Self> {
        if n <= 26 {
            Universe::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
        } else {
            Universe::new((0..n).map(|i| format!("x{i}")))
        }
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.inner.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }

    pub fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn empty_set(&self) -> AttrSet {
        AttrSet::empty(self.id(), self.len())
    }

    pub fn full_set(&self) -> AttrSet {
        let mut s = self.empty_set();
        for i in 0..self.len() {
            s.insert(i);
        }
        s
    }

    pub fn set_from_indices<I: IntoIterator<Item = usize>>(&self, indices: I) -> Result<AttrSet> {
        let mut s = self.empty_set();
        for i in indices {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    size: self.len(),
                });
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Builds a set from attribute names. Unknown names are reported with
    /// line number 0.
    pub fn set_of<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Result<AttrSet> {
        let mut s = self.empty_set();
        for name in names {
            let i = self.index_of(name).ok_or_else(|| Error::UnknownAttribute {
                name: name.to_string(),
                line: 0,
            })?;
            s.insert(i);
        }
        Ok(s)
    }

    /// Parses a space-separated list of attribute names.
    pub fn parse_set(&self, text: &str) -> Result<AttrSet> {
        self.set_of(text.split(' ').filter(|t| !t.is_empty()))
    }

    /// Set members in declaration order, space separated. The empty set
    /// renders as the empty string.
    pub fn render(&self, set: &AttrSet) -> String {
        let mut out = String::new();
        for i in set.iter() {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(self.name(i));
        }
        out
    }

    pub fn render_pair(&self, pair: &FdPair) -> String {
        let left = self.render(&pair.left);
        let right = self.render(&pair.right);
        match (left.is_empty(), right.is_empty()) {
            (true, true) => "->".to_string(),
            (true, false) => format!("-> {right}"),
            (false, true) => format!("{left} ->"),
            (false, false) => format!("{left} -> {right}"),
        }
    }

    pub fn set_from_mask(&self, mask: u64) -> AttrSet {
        debug_assert!(self.len() <= WORD);
        AttrSet::from_mask(self.id(), self.len(), mask)
    }

    /// All `2^n` subsets in increasing mask order. Only meaningful for
    /// universes of at most 63 attributes; callers enforce their own caps.
    pub fn subsets(&self) -> impl Iterator<Item = AttrSet> + '_ {
        assert!(self.len() < WORD, "subset enumeration needs |U| < 64");
        (0..(1u64 << self.len())).map(move |m| self.set_from_mask(m))
    }

    /// A copy of this universe with one attribute removed, plus the map
    /// from old positions to new ones.
    pub fn without(&self, index: usize) -> Result<(Universe, Vec<Option<usize>>)> {
        let names: Vec<&str> = self
            .names()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != index)
            .map(|(_, n)| n.as_str())
            .collect();
        let u = Universe::new(names)?;
        let map = (0..self.len())
            .map(|i| match i.cmp(&index) {
                Ordering::Less => Some(i),
                Ordering::Equal => None,
                Ordering::Greater => Some(i - 1),
            })
            .collect();
        Ok((u, map))
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.id == other.inner.id && self.inner.names == other.inner.names)
    }
}

impl Eq for Universe {}

impl Hash for Universe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.id.hash(state);
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

// FNV-1a over the names with a separator byte, stable across runs.
fn fingerprint(names: &[String]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for name in names {
        for b in name.bytes().chain(std::iter::once(0xff)) {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

/// A subset of a universe's attribute positions.
///
/// Binary operators (`|`, `&`, `-`) and the plain methods panic when the
/// operands come from different universes; the `try_*` methods report
/// [`Error::UniverseMismatch`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AttrSet {
    universe: u64,
    size: u32,
    words: SmallVec<[u64; 2]>,
}

impl AttrSet {
    fn empty(universe: u64, size: usize) -> Self {
        let nwords = size.div_ceil(WORD);
        AttrSet {
            universe,
            size: size as u32,
            words: SmallVec::from_elem(0, nwords),
        }
    }

    fn from_mask(universe: u64, size: usize, mask: u64) -> Self {
        let mut s = AttrSet::empty(universe, size);
        if !s.words.is_empty() {
            let keep = if size >= WORD {
                u64::MAX
            } else {
                (1u64 << size) - 1
            };
            s.words[0] = mask & keep;
        }
        s
    }

    pub fn universe_id(&self) -> u64 {
        self.universe
    }

    /// Number of attributes in the owning universe.
    pub fn universe_len(&self) -> usize {
        self.size as usize
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.size as usize && self.words[index / WORD] & (1 << (index % WORD)) != 0
    }

    /// Returns whether the attribute was newly inserted.
    pub fn insert(&mut self, index: usize) -> bool {
        assert!(index < self.size as usize, "attribute index out of range");
        let bit = 1 << (index % WORD);
        let w = &mut self.words[index / WORD];
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, index: usize) -> bool {
        if index >= self.size as usize {
            return false;
        }
        let bit = 1 << (index % WORD);
        let w = &mut self.words[index / WORD];
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn with(&self, index: usize) -> AttrSet {
        let mut s = self.clone();
        s.insert(index);
        s
    }

    pub fn without(&self, index: usize) -> AttrSet {
        let mut s = self.clone();
        s.remove(index);
        s
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// The low 64 positions as a bitmask.
    pub fn to_mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    pub fn same_universe(&self, other: &AttrSet) -> bool {
        self.universe == other.universe && self.size == other.size
    }

    fn check(&self, other: &AttrSet) -> Result<()> {
        if self.same_universe(other) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    fn expect_same(&self, other: &AttrSet) {
        assert!(
            self.same_universe(other),
            "attribute sets from different universes"
        );
    }

    pub fn union(&self, other: &AttrSet) -> AttrSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &AttrSet) -> AttrSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &AttrSet) -> AttrSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> AttrSet {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        let tail = self.size as usize % WORD;
        if tail != 0 {
            if let Some(last) = s.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        s
    }

    pub fn union_with(&mut self, other: &AttrSet) {
        self.expect_same(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &AttrSet) {
        self.expect_same(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= *b;
        }
    }

    pub fn difference_with(&mut self, other: &AttrSet) {
        self.expect_same(other);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !*b;
        }
    }

    pub fn is_subset(&self, other: &AttrSet) -> bool {
        self.expect_same(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// Strict inclusion.
    pub fn is_proper_subset(&self, other: &AttrSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(&self, other: &AttrSet) -> bool {
        self.expect_same(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn try_union(&self, other: &AttrSet) -> Result<AttrSet> {
        self.check(other).map(|_| self.union(other))
    }

    pub fn try_intersection(&self, other: &AttrSet) -> Result<AttrSet> {
        self.check(other).map(|_| self.intersection(other))
    }

    pub fn try_difference(&self, other: &AttrSet) -> Result<AttrSet> {
        self.check(other).map(|_| self.difference(other))
    }

    pub fn try_is_subset(&self, other: &AttrSet) -> Result<bool> {
        self.check(other).map(|_| self.is_subset(other))
    }

    pub fn try_is_proper_subset(&self, other: &AttrSet) -> Result<bool> {
        self.check(other).map(|_| self.is_proper_subset(other))
    }

    /// All subsets of this set, smallest first in canonical order.
    pub fn subsets(&self) -> Vec<AttrSet> {
        let members: Vec<usize> = self.iter().collect();
        assert!(members.len() < WORD, "too many members to enumerate");
        let mut out: Vec<AttrSet> = (0..(1u64 << members.len()))
            .map(|bits| {
                let mut s = AttrSet::empty(self.universe, self.size as usize);
                for (k, &i) in members.iter().enumerate() {
                    if bits & (1 << k) != 0 {
                        s.insert(i);
                    }
                }
                s
            })
            .collect();
        out.sort();
        out
    }
}

impl Ord for AttrSet {
    /// Size first, then lexicographic on the sorted member positions. For
    /// equal sizes the set holding the least element of the symmetric
    /// difference comes first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            for (a, b) in self.words.iter().zip(other.words.iter()) {
                let diff = a ^ b;
                if diff != 0 {
                    let low = diff & diff.wrapping_neg();
                    return if a & low != 0 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
            }
            self.size
                .cmp(&other.size)
                .then(self.universe.cmp(&other.universe))
        })
    }
}

impl PartialOrd for AttrSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for AttrSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl std::ops::BitOr for &AttrSet {
    type Output = AttrSet;
    fn bitor(self, rhs: &AttrSet) -> AttrSet {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for &AttrSet {
    type Output = AttrSet;
    fn bitand(self, rhs: &AttrSet) -> AttrSet {
        self.intersection(rhs)
    }
}

impl std::ops::Sub for &AttrSet {
    type Output = AttrSet;
    fn sub(self, rhs: &AttrSet) -> AttrSet {
        self.difference(rhs)
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD + bit);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

/// A dependency `left -> right`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FdPair {
    pub left: AttrSet,
    pub right: AttrSet,
}

impl FdPair {
    pub fn new(left: AttrSet, right: AttrSet) -> Result<Self> {
        left.check(&right)?;
        Ok(FdPair { left, right })
    }

    pub fn is_reflexive(&self) -> bool {
        self.left == self.right
    }
}

impl fmt::Debug for FdPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}", self.left, self.right)
    }
}

/// A set of pairs with at most one pair per left side, kept in canonical
/// order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FdFunction {
    universe: Universe,
    pairs: Vec<FdPair>,
}

impl FdFunction {
    pub fn new(universe: &Universe) -> Self {
        FdFunction {
            universe: universe.clone(),
            pairs: Vec::new(),
        }
    }

    /// Builds a function from raw pairs. With `merge`, pairs sharing a left
    /// side are combined by unioning their right sides; without it such a
    /// collision is a [`Error::DuplicateLeft`].
    pub fn from_pairs<I>(universe: &Universe, pairs: I, merge: bool) -> Result<Self>
    where
        I: IntoIterator<Item = FdPair>,
    {
        let mut raw: Vec<FdPair> = Vec::new();
        for p in pairs {
            if p.left.universe_id() != universe.id()
                || p.left.universe_len() != universe.len()
                || !p.left.same_universe(&p.right)
            {
                return Err(Error::UniverseMismatch);
            }
            raw.push(p);
        }
        raw.sort_by(|a, b| a.left.cmp(&b.left));
        let mut out: Vec<FdPair> = Vec::with_capacity(raw.len());
        for p in raw {
            match out.last_mut() {
                Some(last) if last.left == p.left => {
                    if !merge {
                        return Err(Error::DuplicateLeft(universe.render(&p.left)));
                    }
                    last.right.union_with(&p.right);
                }
                _ => out.push(p),
            }
        }
        Ok(FdFunction {
            universe: universe.clone(),
            pairs: out,
        })
    }

    /// Inserts a pair, keeping the functional invariant.
    pub fn insert(&mut self, pair: FdPair, merge: bool) -> Result<()> {
        if pair.left.universe_id() != self.universe.id()
            || pair.left.universe_len() != self.universe.len()
            || !pair.left.same_universe(&pair.right)
        {
            return Err(Error::UniverseMismatch);
        }
        match self.pairs.binary_search_by(|p| p.left.cmp(&pair.left)) {
            Ok(pos) => {
                if !merge {
                    return Err(Error::DuplicateLeft(self.universe.render(&pair.left)));
                }
                self.pairs[pos].right.union_with(&pair.right);
            }
            Err(pos) => self.pairs.insert(pos, pair),
        }
        Ok(())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs in canonical order.
    pub fn pairs(&self) -> &[FdPair] {
        &self.pairs
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FdPair> {
        self.pairs.iter()
    }

    pub fn canonical_order(&self) -> Vec<FdPair> {
        self.pairs.clone()
    }

    pub fn position(&self, left: &AttrSet) -> Option<usize> {
        self.pairs.binary_search_by(|p| p.left.cmp(left)).ok()
    }

    pub fn get(&self, left: &AttrSet) -> Option<&FdPair> {
        self.position(left).map(|i| &self.pairs[i])
    }

    pub fn contains(&self, pair: &FdPair) -> bool {
        self.get(&pair.left).is_some_and(|p| p.right == pair.right)
    }

    pub fn is_subset_of(&self, other: &FdFunction) -> bool {
        self.universe == other.universe && self.pairs.iter().all(|p| other.contains(p))
    }

    /// The function without the given pair (unchanged if absent).
    pub fn without(&self, pair: &FdPair) -> FdFunction {
        FdFunction {
            universe: self.universe.clone(),
            pairs: self.pairs.iter().filter(|p| *p != pair).cloned().collect(),
        }
    }

    pub fn filtered<F: FnMut(&FdPair) -> bool>(&self, mut keep: F) -> FdFunction {
        FdFunction {
            universe: self.universe.clone(),
            pairs: self.pairs.iter().filter(|p| keep(p)).cloned().collect(),
        }
    }

    /// Builds from pairs already known to be sorted and free of duplicate
    /// left sides.
    pub(crate) fn from_sorted_unchecked(universe: &Universe, pairs: Vec<FdPair>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0].left < w[1].left));
        FdFunction {
            universe: universe.clone(),
            pairs,
        }
    }

    pub(crate) fn check_set(&self, set: &AttrSet) -> Result<()> {
        if set.universe_id() == self.universe.id() && set.universe_len() == self.universe.len() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub(crate) fn check_same(&self, other: &FdFunction) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }
}

impl Ord for FdFunction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.pairs
            .cmp(&other.pairs)
            .then(self.universe.id().cmp(&other.universe.id()))
    }
}

impl PartialOrd for FdFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FdFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.pairs).finish()
    }
}

impl<'a> IntoIterator for &'a FdFunction {
    type Item = &'a FdPair;
    type IntoIter = std::slice::Iter<'a, FdPair>;
    fn into_iter(self) -> Self::IntoIter {
        self.pairs.iter()
    }
}

/// Stage sequence of the extension-by-closure recurrence.
///
/// `stages[0]` is the input set and each following stage strictly grows.
/// `fired[t]` holds the pairs whose left side became applicable at stage
/// `t`; their right sides produce `stages[t + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub stages: Vec<AttrSet>,
    pub fired: Vec<Vec<FdPair>>,
}

impl Trace {
    /// Number of growth steps (`N_X`).
    pub fn steps(&self) -> usize {
        self.stages.len().saturating_sub(1)
    }

    pub fn result(&self) -> &AttrSet {
        self.stages.last().expect("trace has at least one stage")
    }
}
