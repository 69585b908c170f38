//! Greedy shrinking of failing instances.

use super::{checks, Claim, Ctx, Instance, InstanceBody, Outcome, Violation, Witness};
use crate::closure::canonicalize;
use crate::flat::HereditaryCollection;
use crate::model::{AttrSet, FdFunction, FdPair, Universe};

const MAX_STEPS: usize = 200;

fn failure(claim: Claim, instance: &Instance) -> Option<Violation> {
    match checks::find(claim, &Ctx::new(instance)) {
        Outcome::Fail(v) => Some(v),
        _ => None,
    }
}

fn project(set: &AttrSet, target: &Universe, map: &[Option<usize>]) -> AttrSet {
    target
        .set_from_indices(set.iter().filter_map(|i| map[i]))
        .expect("projected indices are in range")
}

fn fd_candidates(f: &FdFunction) -> Vec<FdFunction> {
    let u = f.universe();
    let mut out = Vec::new();
    if u.len() > 1 {
        for i in 0..u.len() {
            let Ok((v, map)) = u.without(i) else { continue };
            let pairs = f.iter().map(|p| FdPair {
                left: project(&p.left, &v, &map),
                right: project(&p.right, &v, &map),
            });
            if let Ok(g) = canonicalize(&v, pairs) {
                out.push(g);
            }
        }
    }
    for p in f.iter() {
        if let Ok(g) = canonicalize(u, f.without(p).iter().cloned()) {
            out.push(g);
        }
    }
    out
}

fn hereditary_candidates(h: &HereditaryCollection) -> Vec<HereditaryCollection> {
    let u = h.universe();
    let facets = h.facets();
    let mut out = Vec::new();
    if u.len() > 1 {
        for i in 0..u.len() {
            let Ok((v, map)) = u.without(i) else { continue };
            let projected: Vec<AttrSet> = facets.iter().map(|f| project(f, &v, &map)).collect();
            if let Ok(g) = HereditaryCollection::from_facets(&v, &projected) {
                out.push(g);
            }
        }
    }
    for (k, _) in facets.iter().enumerate() {
        let mut rest = facets.clone();
        rest.remove(k);
        if let Ok(g) = HereditaryCollection::from_facets(u, &rest) {
            out.push(g);
        }
    }
    for (k, f) in facets.iter().enumerate() {
        for p in f.iter() {
            let mut next = facets.clone();
            next[k] = f.without(p);
            if let Ok(g) = HereditaryCollection::from_facets(u, &next) {
                out.push(g);
            }
        }
    }
    out
}

/// Repeatedly replaces the instance by a smaller one that still violates
/// `claim`. `None` if the instance does not fail to begin with.
pub fn minimize(claim: Claim, instance: &Instance) -> Option<Witness> {
    let id = format!("{}/min", instance.id);
    let mut current = Instance {
        id: id.clone(),
        body: instance.body.clone(),
    };
    let mut violation = failure(claim, &current)?;
    for _ in 0..MAX_STEPS {
        let candidates: Vec<Instance> = match &current.body {
            InstanceBody::Fd(f) => fd_candidates(f)
                .into_iter()
                .map(|g| Instance::fd(id.clone(), g))
                .collect(),
            InstanceBody::Hereditary(h) => hereditary_candidates(h)
                .into_iter()
                .map(|g| Instance::hereditary(id.clone(), g))
                .collect(),
        };
        let next = candidates
            .into_iter()
            .filter(|c| c.body != current.body)
            .find_map(|c| failure(claim, &c).map(|v| (c, v)));
        match next {
            Some((c, v)) => {
                current = c;
                violation = v;
            }
            None => break,
        }
    }
    Some(Witness {
        instance: current,
        violation,
    })
}
