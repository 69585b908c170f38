//! Spans, covers and redundancy.

use crate::closure::{ClosureKernel, ClosureTable};
use crate::error::{Error, Result};
use crate::model::{FdFunction, FdPair};

/// Pairs `p ∈ f` whose right side is derivable from `f ∖ {p}`, in canonical
/// order.
pub fn removable_pairs(f: &FdFunction) -> Vec<FdPair> {
    let kernel = ClosureKernel::new(f);
    let mut enabled = vec![true; f.len()];
    let mut out = Vec::new();
    for (i, p) in f.iter().enumerate() {
        enabled[i] = false;
        if derivable(&kernel, p, &enabled) {
            out.push(p.clone());
        }
        enabled[i] = true;
    }
    out
}

fn derivable(kernel: &ClosureKernel<'_>, p: &FdPair, enabled: &[bool]) -> bool {
    kernel
        .closure_with(&p.left, Some(enabled), Some(&p.right))
        .map(|r| p.right.is_subset(&r))
        .expect("pair drawn from the kernel's own function")
}

/// One pass in canonical order, dropping each pair that is removable with
/// respect to the pairs still present.
pub fn nonredundant_cover(f: &FdFunction) -> FdFunction {
    let kernel = ClosureKernel::new(f);
    let mut enabled = vec![true; f.len()];
    for (i, p) in f.iter().enumerate() {
        enabled[i] = false;
        if !derivable(&kernel, p, &enabled) {
            enabled[i] = true;
        }
    }
    let mut keep = enabled.into_iter();
    f.filtered(|_| keep.next().expect("one flag per pair"))
}

/// Whether `f⁺ = other⁺`, decided pair by pair in both directions.
pub fn is_cover(f: &FdFunction, other: &FdFunction) -> Result<bool> {
    f.check_same(other)?;
    Ok(derives_all(other, f) && derives_all(f, other))
}

fn derives_all(source: &FdFunction, target: &FdFunction) -> bool {
    let kernel = ClosureKernel::new(source);
    target.iter().all(|p| {
        kernel
            .closure_with(&p.left, None, Some(&p.right))
            .map(|r| p.right.is_subset(&r))
            .unwrap_or(false)
    })
}

/// `f⁺ ∩ μ`: the pairs `(S, Sμ)` of `mu` with `S f⁺ = Sμ`.
///
/// When `mu` does not already list every subset, its closure is
/// materialized first.
pub fn span(f: &FdFunction, mu: &FdFunction) -> Result<FdFunction> {
    f.check_same(mu)?;
    let table = ClosureTable::build(mu)?;
    let full = table.to_function();
    for p in f.iter() {
        if table.closure_mask(p.left.to_mask()) != p.right.to_mask() {
            return Err(Error::NotSubsetOfMu(f.universe().render_pair(p)));
        }
    }
    let kernel = ClosureKernel::new(f);
    let mut err = None;
    let out = full.filtered(|p| match kernel.closure(&p.left) {
        Ok(r) => r == p.right,
        Err(e) => {
            err = Some(e);
            false
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Local irredundance: no pair of `f` is removable.
pub fn is_independent(f: &FdFunction) -> bool {
    let kernel = ClosureKernel::new(f);
    let mut enabled = vec![true; f.len()];
    for (i, p) in f.iter().enumerate() {
        enabled[i] = false;
        if derivable(&kernel, p, &enabled) {
            return false;
        }
        enabled[i] = true;
    }
    true
}

/// A cover of `mu` with no removable pair.
pub fn is_nonredundant_cover(f: &FdFunction, mu: &FdFunction) -> Result<bool> {
    Ok(is_cover(f, mu)? && is_independent(f))
}
