//! Brute-force ground truth, written independently of the library kernels.

use crate::error::{Error, Result};
use crate::model::{FdFunction, FdPair, Universe};

/// Largest universe for the naive closure table.
pub const ORACLE_TABLE_CAP: usize = 10;
/// Largest universe for exhaustive cover enumeration.
pub const ORACLE_COVER_CAP: usize = 4;

/// `Xf⁺` for every mask `X`, by repeated full scans of the pair list.
pub fn oracle_closure_masks(f: &FdFunction) -> Result<Vec<u32>> {
    let n = f.universe().len();
    if n > ORACLE_TABLE_CAP {
        return Err(Error::cap(
            "oracle closure table universe",
            n,
            ORACLE_TABLE_CAP,
        ));
    }
    let pairs: Vec<(u32, u32)> = f
        .iter()
        .map(|p| (p.left.to_mask() as u32, p.right.to_mask() as u32))
        .collect();
    Ok((0..1u32 << n)
        .map(|x| {
            let mut cur = x;
            loop {
                let mut next = cur;
                for &(l, r) in &pairs {
                    if l & !cur == 0 {
                        next |= r;
                    }
                }
                if next == cur {
                    return cur;
                }
                cur = next;
            }
        })
        .collect())
}

/// The table `{(S, Sf⁺)}` as a function in canonical order.
pub fn oracle_closure_table(f: &FdFunction) -> Result<FdFunction> {
    let masks = oracle_closure_masks(f)?;
    let u = f.universe();
    let pairs: Vec<FdPair> = masks
        .iter()
        .enumerate()
        .map(|(s, &c)| FdPair {
            left: u.set_from_mask(s as u64),
            right: u.set_from_mask(u64::from(c)),
        })
        .collect();
    FdFunction::from_pairs(u, pairs, false)
}

/// Compact engine over the non-reflexive pairs of a closure on at most four
/// attributes. A function is a bitmask over those pairs; reflexive pairs
/// never change a closure and are left out.
#[derive(Clone, Debug)]
pub struct SmallMu {
    universe: Universe,
    closure: Vec<u32>,
    lefts: Vec<u32>,
    rights: Vec<u32>,
}

impl SmallMu {
    pub fn new(f: &FdFunction) -> Result<Self> {
        let n = f.universe().len();
        if n > ORACLE_COVER_CAP {
            return Err(Error::cap("exhaustive cover universe", n, ORACLE_COVER_CAP));
        }
        let closure = oracle_closure_masks(f)?;
        let table = oracle_closure_table(f)?;
        let (lefts, rights) = table
            .iter()
            .filter(|p| !p.is_reflexive())
            .map(|p| (p.left.to_mask() as u32, p.right.to_mask() as u32))
            .unzip();
        Ok(SmallMu {
            universe: f.universe().clone(),
            closure,
            lefts,
            rights,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Number of non-reflexive pairs.
    pub fn m(&self) -> usize {
        self.lefts.len()
    }

    pub fn all(&self) -> u32 {
        ((1u64 << self.m()) - 1) as u32
    }

    pub fn mu(&self, x: u32) -> u32 {
        self.closure[x as usize]
    }

    pub fn left(&self, e: usize) -> u32 {
        self.lefts[e]
    }

    pub fn right(&self, e: usize) -> u32 {
        self.rights[e]
    }

    /// Closure of `x` under the pairs in `sub`.
    pub fn close(&self, sub: u32, x: u32) -> u32 {
        let mut cur = x;
        loop {
            let mut next = cur;
            for e in bits(sub) {
                if self.lefts[e] & !cur == 0 {
                    next |= self.rights[e];
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Non-reflexive pairs of the span of `sub`.
    pub fn span(&self, sub: u32) -> u32 {
        let mut out = 0;
        for e in 0..self.m() {
            if self.close(sub, self.lefts[e]) == self.rights[e] {
                out |= 1 << e;
            }
        }
        out
    }

    pub fn is_cover(&self, sub: u32) -> bool {
        self.span(sub) == self.all()
    }

    /// No pair of `sub` is derivable from the others.
    pub fn independent(&self, sub: u32) -> bool {
        bits(sub).all(|e| {
            let r = self.close(sub & !(1 << e), self.lefts[e]);
            self.rights[e] & !r != 0
        })
    }

    pub fn to_function(&self, sub: u32) -> FdFunction {
        let u = &self.universe;
        let pairs = bits(sub).map(|e| FdPair {
            left: u.set_from_mask(u64::from(self.lefts[e])),
            right: u.set_from_mask(u64::from(self.rights[e])),
        });
        FdFunction::from_pairs(u, pairs, false).expect("distinct left sides")
    }

    /// The mask of a function made of non-reflexive pairs of the closure.
    pub fn mask_of(&self, f: &FdFunction) -> Option<u32> {
        let mut out = 0;
        for p in f.iter() {
            let (l, r) = (p.left.to_mask() as u32, p.right.to_mask() as u32);
            let e = (0..self.m()).find(|&e| self.lefts[e] == l && self.rights[e] == r)?;
            out |= 1 << e;
        }
        Some(out)
    }

    /// Every nonredundant cover, as masks in increasing order.
    pub fn nonredundant_cover_masks(&self) -> Vec<u32> {
        (0..=self.all())
            .filter(|&s| self.is_cover(s) && self.independent(s))
            .collect()
    }
}

pub(crate) fn bits(mut x: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(b)
        }
    })
}

/// All nonredundant covers of the closure generated by `mu`, by scanning
/// every subset of its non-reflexive pairs. Canonical order.
pub fn oracle_nonredundant_covers(mu: &FdFunction) -> Result<Vec<FdFunction>> {
    let small = SmallMu::new(mu)?;
    let mut out: Vec<FdFunction> = small
        .nonredundant_cover_masks()
        .into_iter()
        .map(|s| small.to_function(s))
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::materialize_mu;
    use crate::fixtures;

    #[test]
    fn oracle_table_of_e1() {
        let (u, e1) = fixtures::e1();
        let t = oracle_closure_table(&e1).unwrap();
        assert_eq!(t.len(), 16);
        assert_eq!(
            t.get(&u.parse_set("b c").unwrap()).unwrap().right,
            u.full_set()
        );
        assert_eq!(t, materialize_mu(&e1).unwrap());
        let id = oracle_closure_table(&FdFunction::new(&u)).unwrap();
        assert!(id.iter().all(FdPair::is_reflexive));
        let big = Universe::letters(12).unwrap();
        assert!(matches!(
            oracle_closure_table(&FdFunction::new(&big)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn oracle_covers() {
        let (u, e1) = fixtures::e1();
        let covers = oracle_nonredundant_covers(&e1).unwrap();
        assert_eq!(covers.len(), 3);
        assert!(covers.iter().all(|c| c.len() == 3));
        let id = oracle_nonredundant_covers(&FdFunction::new(&u)).unwrap();
        assert_eq!(id, vec![FdFunction::new(&u)]);
        let v = Universe::new(["a", "b"]).unwrap();
        let f = FdFunction::from_pairs(
            &v,
            [FdPair::new(v.parse_set("a").unwrap(), v.full_set()).unwrap()],
            false,
        )
        .unwrap();
        assert_eq!(oracle_nonredundant_covers(&f).unwrap(), vec![f]);
    }
}
