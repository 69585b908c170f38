//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Instance;
use crate::closure::canonicalize;
use crate::error::{Error, Result};
use crate::flat::HereditaryCollection;
use crate::model::{AttrSet, FdPair, Universe};

/// Largest universe a random instance may have.
pub const RANDOM_UNIVERSE_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    Fd,
    Hereditary,
}

impl InstanceKind {
    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::Fd => "fd",
            InstanceKind::Hereditary => "hereditary",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceParams {
    pub universe_size: usize,
    /// Upper bound on dependencies (or facets) drawn.
    pub max_pairs: usize,
    pub kind: InstanceKind,
}

fn rng_for(seed: u64, params: &InstanceParams) -> ChaCha8Rng {
    let kind = match params.kind {
        InstanceKind::Fd => 0u64,
        InstanceKind::Hereditary => 1,
    };
    let mix = seed
        ^ (params.universe_size as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (params.max_pairs as u64).wrapping_mul(0xC2B2_AE3D_27D4_EB4F)
        ^ kind.wrapping_mul(0x1656_67B1_9E37_79F9);
    ChaCha8Rng::seed_from_u64(mix)
}

fn random_subset(rng: &mut ChaCha8Rng, u: &Universe, size: usize) -> AttrSet {
    let mut s = u.empty_set();
    while s.len() < size {
        s.insert(rng.random_range(0..u.len()));
    }
    s
}

/// The instance determined by `seed` and `params`. Identical inputs give
/// identical instances.
pub fn random_instance(seed: u64, params: &InstanceParams) -> Result<Instance> {
    let n = params.universe_size;
    if n == 0 || n > RANDOM_UNIVERSE_CAP {
        return Err(Error::BadParams(format!(
            "universe size must be between 1 and {RANDOM_UNIVERSE_CAP}, got {n}"
        )));
    }
    let u = Universe::letters(n)?;
    let mut rng = rng_for(seed, params);
    let count = if params.max_pairs == 0 {
        0
    } else {
        rng.random_range(1..=params.max_pairs)
    };
    let id = format!("{}/n{n}/p{}/s{seed}", params.kind.name(), params.max_pairs);
    match params.kind {
        InstanceKind::Fd => {
            let max_left = 3.min(n.saturating_sub(1)).max(1);
            let pairs: Vec<FdPair> = (0..count)
                .map(|_| {
                    let left_size = if n == 1 || rng.random_bool(0.05) {
                        0
                    } else {
                        rng.random_range(1..=max_left)
                    };
                    let left = random_subset(&mut rng, &u, left_size);
                    let right_size = rng.random_range(1..=2.min(n));
                    let right = random_subset(&mut rng, &u, right_size);
                    FdPair { left, right }
                })
                .collect();
            Ok(Instance::fd(id, canonicalize(&u, pairs)?))
        }
        InstanceKind::Hereditary => {
            let facets: Vec<AttrSet> = (0..count.max(1))
                .map(|_| {
                    let size = rng.random_range(0..=n);
                    random_subset(&mut rng, &u, size)
                })
                .collect();
            Ok(Instance::hereditary(
                id,
                HereditaryCollection::from_facets(&u, &facets)?,
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, kind: InstanceKind) -> InstanceParams {
        InstanceParams {
            universe_size: n,
            max_pairs: 8,
            kind,
        }
    }

    #[test]
    fn deterministic() {
        for kind in [InstanceKind::Fd, InstanceKind::Hereditary] {
            for seed in 0..20 {
                let a = random_instance(seed, &params(5, kind)).unwrap();
                let b = random_instance(seed, &params(5, kind)).unwrap();
                assert_eq!(a, b);
                assert_eq!(a.universe().len(), 5);
            }
        }
        let a = random_instance(1, &params(5, InstanceKind::Fd)).unwrap();
        assert_eq!(a.id, "fd/n5/p8/s1");
    }

    #[test]
    fn seeds_differ() {
        let distinct: std::collections::BTreeSet<String> = (0..30)
            .map(|s| {
                random_instance(s, &params(4, InstanceKind::Fd))
                    .unwrap()
                    .to_text()
            })
            .collect();
        assert!(distinct.len() > 10);
    }

    #[test]
    fn bad_sizes() {
        for n in [0, 9] {
            assert!(matches!(
                random_instance(0, &params(n, InstanceKind::Fd)),
                Err(Error::BadParams(_))
            ));
        }
        let one = random_instance(3, &params(1, InstanceKind::Fd)).unwrap();
        assert_eq!(one.universe().len(), 1);
    }
}
