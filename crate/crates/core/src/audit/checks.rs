//! One checker per claim. [`find`] searches for the first violation in a
//! fixed order; [`recheck`] confirms that a recorded violation still holds.

use super::oracle::{bits, SmallMu, ORACLE_COVER_CAP, ORACLE_TABLE_CAP};
use super::{
    canonical_mask_cmp, Claim, Ctx, Exhaustive, Outcome, Violation, FLAT_CAP, MAT6_CAP, MAT_CAP,
};
use crate::closure::{
    all_keys, extend_by_closure, key_restriction, keys_of, ClosureKernel, ClosureTable, MU_CAP,
};
use crate::cover::{is_cover, is_independent, is_nonredundant_cover, nonredundant_cover, span};
use crate::flat::kappa_topdown;
use crate::matroid::{
    dd_bijection, directly_determines, enumerate_bases, singleton_status_with_bases, top_signature,
};
use crate::model::{AttrSet, FdFunction, FdPair};

/// Bases compared pairwise for tiny universes.
const PAIRWISE_BASES_SMALL: usize = 64;
/// Bases compared pairwise otherwise.
const PAIRWISE_BASES: usize = 16;

macro_rules! need {
    ($e:expr, $reason:expr) => {
        match $e {
            Some(v) => v,
            None => return Outcome::Capped($reason),
        }
    };
}

macro_rules! fail {
    ($v:expr) => {
        return Outcome::Fail($v)
    };
}

fn capped(ctx: &Ctx<'_>, what: &str, cap: usize) -> String {
    format!("|U| = {} exceeds the {what} cap of {cap}", ctx.n())
}

fn within(ctx: &Ctx<'_>, cap: usize) -> Option<()> {
    (ctx.n() <= cap).then_some(())
}

fn bits64(mut x: u64) -> impl Iterator<Item = u64> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let b = x & x.wrapping_neg();
            x &= x - 1;
            Some(b)
        }
    })
}

fn submasks(top: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(top);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & top)
        };
        Some(cur)
    })
}

fn is_key(t: &[u64], k: u64) -> bool {
    let c = t[k as usize];
    bits64(k).all(|b| t[(k & !b) as usize] != c)
}

fn render(ctx: &Ctx<'_>, mask: u64) -> String {
    format!("{{{}}}", ctx.universe().render(&ctx.set(mask)))
}

/// Function masks over `m` pairs, smallest first.
fn function_order(m: usize) -> Vec<u32> {
    let mut v: Vec<u32> = (0..1u32 << m).collect();
    v.sort_by(|a, b| canonical_mask_cmp(u64::from(*a), u64::from(*b)));
    v
}

fn small_exhaustive<'c>(ctx: &'c Ctx<'_>) -> Option<(&'c SmallMu, &'c Exhaustive)> {
    Some((ctx.small()?, ctx.exhaustive()?))
}

/// Local irredundance, answered by the exhaustive table when available.
fn indep_of(ctx: &Ctx<'_>, f: &FdFunction) -> bool {
    if let Some((s, ex)) = small_exhaustive(ctx) {
        if let Some(m) = s.mask_of(f) {
            return ex.independent[m as usize];
        }
    }
    is_independent(f)
}

fn with_pair(f: &FdFunction, p: &FdPair) -> FdFunction {
    let mut g = f.clone();
    let _ = g.insert(p.clone(), false);
    g
}

fn swap(a: &FdFunction, out: &FdPair, in_: &FdPair) -> FdFunction {
    with_pair(&a.without(out), in_)
}

fn pairwise_bases<'c>(ctx: &'c Ctx<'_>) -> Option<&'c [FdFunction]> {
    let bases = ctx.bases()?;
    let limit = if ctx.n() <= ORACLE_COVER_CAP {
        PAIRWISE_BASES_SMALL
    } else {
        PAIRWISE_BASES
    };
    Some(&bases[..bases.len().min(limit)])
}

fn bases_reason(ctx: &Ctx<'_>) -> String {
    if ctx.n() > MAT_CAP {
        capped(ctx, "basis enumeration", MAT_CAP)
    } else {
        format!(
            "more than {} bases; enumeration stopped",
            super::AUDIT_BASIS_LIMIT
        )
    }
}

fn is_basis_of_mu(ctx: &Ctx<'_>, f: &FdFunction) -> bool {
    ctx.mu()
        .is_some_and(|mu| is_nonredundant_cover(f, mu).unwrap_or(false))
}

pub fn find(claim: Claim, ctx: &Ctx<'_>) -> Outcome {
    match claim {
        Claim::Co6 => co6(ctx),
        Claim::Co7 => co7(ctx),
        Claim::Co8 => co8(ctx),
        Claim::Ec2 => ec2(ctx),
        Claim::Ec3 => ec3(ctx),
        Claim::Ec7Monotonicity => ec7(ctx),
        Claim::Ec8Spanlaws => ec8_spanlaws(ctx),
        Claim::Ec8Keys => ec8_keys(ctx),
        Claim::Mat2 => mat2(ctx),
        Claim::Mat4 => mat4(ctx),
        Claim::Mat6 => mat6(ctx),
        Claim::Mat7 => mat7(ctx),
        Claim::Mat9 => mat9(ctx),
        Claim::Mat10 => mat10(ctx),
        Claim::Mat11Cardinality => mat11_cardinality(ctx),
        Claim::Mat11Exchange => mat11_exchange(ctx),
        Claim::Fl4Closurelaws => fl4_closurelaws(ctx),
        Claim::Fl4HSubsetOfKeys => fl4_h_subset(ctx),
        Claim::Fl3NoteA => fl3_note_a(ctx),
        Claim::Fl4KeysetEquality => fl4_keyset(ctx),
        Claim::Fl5 => fl5(ctx),
        Claim::Fl6 => fl6(ctx),
        Claim::Fl7 => fl7(ctx),
        Claim::Mat12 => mat12(ctx),
        Claim::Ec6Equivalence => ec6(ctx),
        Claim::Mat11Augmentation => mat11_augmentation(ctx),
    }
}

/// Whether the recorded violation reproduces on `ctx`.
pub fn recheck(claim: Claim, ctx: &Ctx<'_>, v: &Violation) -> bool {
    recheck_inner(claim, ctx, v).unwrap_or(false)
}

fn mask(s: &AttrSet) -> u64 {
    s.to_mask()
}

fn recheck_inner(claim: Claim, ctx: &Ctx<'_>, v: &Violation) -> Option<bool> {
    let s = |i: usize| v.sets.get(i).map(mask);
    let f = |i: usize| v.functions.get(i);
    let p = |i: usize| v.pairs.get(i);
    Some(match (claim, v.check) {
        (Claim::Co6, "heredity") => {
            let t = ctx.table()?;
            let (k, j) = (s(0)?, s(1)?);
            j & !k == 0 && j != k && is_key(t, k) && !is_key(t, j)
        }
        (Claim::Co6, "library-keys") => {
            let t = ctx.table()?;
            let m = s(0)?;
            match all_keys(ctx.generator()?) {
                Ok(h) => h.contains_mask(m) != is_key(t, m),
                Err(_) => true,
            }
        }
        (Claim::Co6, "library-keys-of") => {
            let t = ctx.table()?;
            let c = s(0)?;
            !keys_of_agree(ctx, t, c)
        }
        (Claim::Co7, "characterization") => {
            let t = ctx.table()?;
            co7_mismatch(ctx, t, s(0)?)
        }
        (Claim::Co8, "empty-closure") => {
            let t = ctx.table()?;
            t[0] != nonkey_singletons(ctx, t)
        }
        (Claim::Ec2, check) => {
            let t = ctx.table()?;
            ec2_violates(ctx, t, check, s(0)?, s(1))
        }
        (Claim::Ec3, "regeneration") => {
            let t = ctx.table()?;
            let kr = key_restriction(ctx.generator()?).ok()?;
            let x = s(0)?;
            ClosureKernel::new(&kr).closure(&ctx.set(x)).ok()?.to_mask() != t[x as usize]
        }
        (Claim::Ec7Monotonicity, "downward-closed") => {
            let (g, h) = (f(0)?, f(1)?);
            h.is_subset_of(g) && indep_of(ctx, g) && !indep_of(ctx, h)
        }
        (Claim::Ec8Spanlaws, check) => spanlaw_violates(ctx, check, f(0)?, f(1))?,
        (Claim::Ec8Keys, "key-characterization") => {
            let g = f(0)?;
            span_key(ctx, g)? != indep_of(ctx, g)
        }
        (Claim::Ec8Keys, "library-independence") => {
            let (sm, ex) = small_exhaustive(ctx)?;
            let g = f(0)?;
            ex.independent[sm.mask_of(g)? as usize] != is_independent(g)
        }
        (Claim::Ec6Equivalence, "irredundant-vs-extendable") => {
            let g = f(0)?;
            let bases = ctx.bases()?;
            indep_of(ctx, g) != bases.iter().any(|b| g.is_subset_of(b))
        }
        (Claim::Mat11Augmentation, "augmentation") => {
            let (i, j) = (f(0)?, f(1)?);
            indep_of(ctx, i)
                && indep_of(ctx, j)
                && j.len() == i.len() + 1
                && j.iter()
                    .filter(|q| !i.contains(q))
                    .all(|q| i.get(&q.left).is_some() || !indep_of(ctx, &with_pair(i, q)))
        }
        (Claim::Mat2, check) => {
            let t = ctx.table()?;
            let cover = f(0)?;
            is_cover(cover, ctx.mu()?).ok()? && mat2_violates(ctx, t, cover, check, s(0)?, s(1)?)
        }
        (Claim::Mat4, "signature") => {
            let (a, b) = (f(0)?, f(1)?);
            is_basis_of_mu(ctx, a)
                && is_basis_of_mu(ctx, b)
                && top_signature(a).ok()? != top_signature(b).ok()?
        }
        (Claim::Mat6, check) => mat6_violates(ctx, check, s(0)?, s(1), s(2))?,
        (Claim::Mat7, "interior-agreement") => {
            let (a, b) = (f(0)?, f(1)?);
            let mu = ctx.mu()?;
            let (c, x) = (ctx.set(s(0)?), ctx.set(s(1)?));
            is_cover(a, mu).ok()?
                && is_cover(b, mu).ok()?
                && interior(a, &c, &x) != interior(b, &c, &x)
        }
        (Claim::Mat9, check) => {
            let (a, b) = (f(0)?, f(1)?);
            let (x, y) = (p(0)?, p(1)?);
            is_basis_of_mu(ctx, a)
                && is_basis_of_mu(ctx, b)
                && a.contains(x)
                && b.contains(y)
                && x.right == y.right
                && x.left != y.left
                && directly_determines(a, &x.left, &y.left).ok()?.0
                && match check {
                    "part-2" => a == b && !is_cover(&a.without(x), a).ok()?,
                    _ => !is_cover(&swap(a, x, y), a).ok()?,
                }
        }
        (Claim::Mat10, "bijection") => {
            let (a, b) = (f(0)?, f(1)?);
            is_basis_of_mu(ctx, a) && is_basis_of_mu(ctx, b) && dd_bijection(a, b).is_err()
        }
        (Claim::Mat11Cardinality, "cardinality") => {
            let (a, b) = (f(0)?, f(1)?);
            is_basis_of_mu(ctx, a) && is_basis_of_mu(ctx, b) && a.len() != b.len()
        }
        (Claim::Mat11Exchange, "enumeration") => {
            let g = f(0)?;
            let oracle = ctx.bases()?.contains(g);
            let walked = enumerate_bases(ctx.mu()?, usize::MAX).ok()?.contains(g);
            oracle != walked
        }
        (Claim::Mat11Exchange, "exchange") => {
            let (a, b) = (f(0)?, f(1)?);
            let x = p(0)?;
            is_basis_of_mu(ctx, a)
                && is_basis_of_mu(ctx, b)
                && a.contains(x)
                && !b.contains(x)
                && !b
                    .iter()
                    .filter(|y| !a.contains(y))
                    .any(|y| is_basis_of_mu(ctx, &swap(a, x, y)))
        }
        (Claim::Mat12, "sufficient-condition") => {
            let mu = ctx.mu()?;
            singleton_status_with_bases(mu, p(0)?, Some(ctx.bases()?))
                .ok()?
                .conflict
        }
        (Claim::Fl4Closurelaws, check) => fl4_violates(ctx, check, s(0)?, s(1))?,
        (Claim::Fl4HSubsetOfKeys, "member-not-key") => {
            let k = ctx.kappa()?;
            let (i, j) = (s(0)?, s(1)?);
            ctx.hereditary()?.contains_mask(i)
                && j & !i == 0
                && (i & !j).count_ones() == 1
                && k[j as usize] == k[i as usize]
        }
        (Claim::Fl4KeysetEquality, "key-not-member") => {
            let k = ctx.kappa()?;
            let x = s(0)?;
            is_key(k, x) && !ctx.hereditary()?.contains_mask(x)
        }
        (Claim::Fl3NoteA, "delta-vs-kappa") => {
            let h = ctx.hereditary()?;
            let i = s(0)?;
            h.contains_mask(i) && h.delta_mask(i) != ctx.kappa()?[i as usize]
        }
        (Claim::Fl5, "maximal-independent") => {
            let h = ctx.hereditary()?;
            let (x, i) = (s(0)?, s(1)?);
            is_maximal_independent(h, x, i) && ctx.kappa()?[x as usize] != h.delta_mask(i)
        }
        (Claim::Fl6, "topdown-vs-bottomup") => {
            let fc = ctx.flat()?;
            let x = s(0)?;
            fc.kernel().closure(&ctx.set(x)).ok()?.to_mask() != ctx.kappa()?[x as usize]
        }
        (Claim::Fl7, "span-vs-flat") => {
            let (sm, ex) = small_exhaustive(ctx)?;
            let g = sm.mask_of(f(0)?)?;
            let kappa = span_flat_closure(sm, ex);
            kappa(g) != ex.spans[g as usize]
        }
        _ => false,
    })
}

// ---------------------------------------------------------------- CO

fn co6(ctx: &Ctx<'_>) -> Outcome {
    let t = need!(ctx.table(), capped(ctx, "closure table", MU_CAP));
    for &k in ctx.canonical_masks() {
        if !is_key(t, k) {
            continue;
        }
        for b in bits64(k) {
            let j = k & !b;
            if !is_key(t, j) {
                fail!(Violation::new("heredity")
                    .sets([ctx.set(k), ctx.set(j)])
                    .note(format!(
                        "{} is a key, {} is not",
                        render(ctx, k),
                        render(ctx, j)
                    )));
            }
        }
    }
    let g = need!(ctx.generator(), capped(ctx, "closure table", MU_CAP));
    match all_keys(g) {
        Ok(h) => {
            for &m in ctx.canonical_masks() {
                if h.contains_mask(m) != is_key(t, m) {
                    fail!(Violation::new("library-keys")
                        .sets([ctx.set(m)])
                        .note("library key set disagrees with the closure table"));
                }
            }
        }
        Err(e) => fail!(Violation::new("library-keys")
            .sets([ctx.universe().empty_set()])
            .note(e.to_string())),
    }
    if ctx.n() <= MAT_CAP {
        for &c in ctx.canonical_masks() {
            if t[c as usize] == c && !keys_of_agree(ctx, t, c) {
                fail!(Violation::new("library-keys-of")
                    .sets([ctx.set(c)])
                    .note("keys of the closed set disagree with the closure table"));
            }
        }
    }
    Outcome::Pass
}

fn keys_of_agree(ctx: &Ctx<'_>, t: &[u64], c: u64) -> bool {
    let Some(g) = ctx.generator() else {
        return true;
    };
    let Ok(lib) = keys_of(g, &ctx.set(c)) else {
        return false;
    };
    let mut want: Vec<AttrSet> = submasks(c)
        .filter(|&k| t[k as usize] == c && is_key(t, k))
        .map(|k| ctx.set(k))
        .collect();
    want.sort();
    lib == want
}

fn co7_mismatch(ctx: &Ctx<'_>, t: &[u64], c: u64) -> bool {
    let closed = t[c as usize] == c;
    let grows = (0..ctx.n())
        .map(|p| 1u64 << p)
        .filter(|b| c & b == 0)
        .all(|b| {
            let (lo, hi) = (t[c as usize], t[(c | b) as usize]);
            lo & !hi == 0 && lo != hi
        });
    closed != grows
}

fn co7(ctx: &Ctx<'_>) -> Outcome {
    let t = need!(ctx.table(), capped(ctx, "closure table", MU_CAP));
    for &c in ctx.canonical_masks() {
        if co7_mismatch(ctx, t, c) {
            fail!(Violation::new("characterization").sets([ctx.set(c)]));
        }
    }
    Outcome::Pass
}

fn nonkey_singletons(ctx: &Ctx<'_>, t: &[u64]) -> u64 {
    (0..ctx.n())
        .map(|p| 1u64 << p)
        .filter(|&b| !is_key(t, b))
        .fold(0, |a, b| a | b)
}

fn co8(ctx: &Ctx<'_>) -> Outcome {
    let t = need!(ctx.table(), capped(ctx, "closure table", MU_CAP));
    let nk = nonkey_singletons(ctx, t);
    if t[0] != nk {
        fail!(Violation::new("empty-closure")
            .sets([ctx.set(t[0]), ctx.set(nk)])
            .note("closure of the empty set differs from the non-key singletons"));
    }
    Outcome::Pass
}

// ---------------------------------------------------------------- EC

fn trace_ok(g: &FdFunction, x: &AttrSet) -> bool {
    let Ok((_, trace)) = extend_by_closure(g, x) else {
        return false;
    };
    if trace.fired.len() + 1 != trace.stages.len() {
        return false;
    }
    if trace.steps() > g.universe().len() - x.len() {
        return false;
    }
    for (t, fired) in trace.fired.iter().enumerate() {
        let cur = &trace.stages[t];
        let next = &trace.stages[t + 1];
        if !cur.is_proper_subset(next) || fired.is_empty() {
            return false;
        }
        let mut grown = cur.clone();
        for p in fired {
            if !p.left.is_subset(cur) || (t > 0 && p.left.is_subset(&trace.stages[t - 1])) {
                return false;
            }
            grown.union_with(&p.right);
        }
        if grown != *next {
            return false;
        }
    }
    true
}

fn ec2_violates(ctx: &Ctx<'_>, t: &[u64], check: &str, x: u64, y: Option<u64>) -> bool {
    let cx = t[x as usize];
    match check {
        "inclusion" => x & !cx != 0,
        "monotonicity" => y.is_some_and(|y| x & !y == 0 && cx & !t[y as usize] != 0),
        "idempotence" => t[cx as usize] != cx,
        "kernel" => ctx.generator().is_some_and(|g| {
            let xs = ctx.set(x);
            let fast = ClosureKernel::new(g).closure(&xs).map(|s| s.to_mask());
            let staged = extend_by_closure(g, &xs).map(|(s, _)| s.to_mask());
            fast != Ok(cx) || staged != Ok(cx)
        }),
        "trace" => ctx.generator().is_some_and(|g| !trace_ok(g, &ctx.set(x))),
        "table-agreement" => ctx
            .generator()
            .is_some_and(|g| ClosureTable::build(g).map_or(true, |lib| lib.closure_mask(x) != cx)),
        _ => false,
    }
}

fn ec2(ctx: &Ctx<'_>) -> Outcome {
    need!(
        within(ctx, ORACLE_TABLE_CAP),
        capped(ctx, "oracle table", ORACLE_TABLE_CAP)
    );
    let t = need!(ctx.table(), capped(ctx, "oracle table", ORACLE_TABLE_CAP));
    let g = need!(
        ctx.generator(),
        capped(ctx, "oracle table", ORACLE_TABLE_CAP)
    );
    let lib = ClosureTable::build(g).ok();
    let kernel = ClosureKernel::new(g);
    for &x in ctx.canonical_masks() {
        let cx = t[x as usize];
        let xs = ctx.set(x);
        if x & !cx != 0 {
            fail!(Violation::new("inclusion").sets([xs]));
        }
        if t[cx as usize] != cx {
            fail!(Violation::new("idempotence").sets([xs]));
        }
        for b in (0..ctx.n()).map(|p| 1u64 << p).filter(|b| x & b == 0) {
            if cx & !t[(x | b) as usize] != 0 {
                fail!(Violation::new("monotonicity").sets([xs, ctx.set(x | b)]));
            }
        }
        let fast = kernel.closure(&xs).map(|s| s.to_mask());
        let staged = extend_by_closure(g, &xs).map(|(s, _)| s.to_mask());
        if fast != Ok(cx) || staged != Ok(cx) {
            fail!(Violation::new("kernel")
                .sets([xs])
                .note("fast, staged and oracle closures disagree"));
        }
        if !trace_ok(g, &xs) {
            fail!(Violation::new("trace").sets([xs]));
        }
        if lib.as_ref().is_none_or(|l| l.closure_mask(x) != cx) {
            fail!(Violation::new("table-agreement").sets([xs]));
        }
    }
    Outcome::Pass
}

fn ec3(ctx: &Ctx<'_>) -> Outcome {
    let t = need!(ctx.table(), capped(ctx, "closure table", MU_CAP));
    let g = need!(ctx.generator(), capped(ctx, "closure table", MU_CAP));
    let kr = match key_restriction(g) {
        Ok(kr) => kr,
        Err(e) => return Outcome::Capped(e.to_string()),
    };
    let kernel = ClosureKernel::new(&kr);
    for &x in ctx.canonical_masks() {
        let got = kernel.closure(&ctx.set(x)).map(|s| s.to_mask());
        if got != Ok(t[x as usize]) {
            fail!(Violation::new("regeneration").sets([ctx.set(x)]));
        }
    }
    Outcome::Pass
}

/// Functions to probe when exhaustive enumeration is out of reach.
fn sample_functions(ctx: &Ctx<'_>) -> Vec<FdFunction> {
    let mut out = Vec::new();
    if let Some(mu) = ctx.mu() {
        out.push(FdFunction::new(ctx.universe()));
        out.push(nonredundant_cover(mu));
    }
    if let Some(g) = ctx.generator() {
        out.push(g.clone());
    }
    if let Some(bases) = pairwise_bases(ctx) {
        out.extend(bases.iter().cloned());
    }
    out
}

fn ec7(ctx: &Ctx<'_>) -> Outcome {
    if let Some((s, ex)) = small_exhaustive(ctx) {
        for g in function_order(s.m()) {
            if !ex.independent[g as usize] {
                continue;
            }
            for e in bits(g) {
                let h = g & !(1 << e);
                if !ex.independent[h as usize] {
                    fail!(Violation::new("downward-closed")
                        .functions([s.to_function(g), s.to_function(h)]));
                }
            }
        }
        return Outcome::Pass;
    }
    need!(within(ctx, MAT_CAP), capped(ctx, "matroid", MAT_CAP));
    for g in sample_functions(ctx) {
        if !is_independent(&g) {
            continue;
        }
        for p in g.iter() {
            let h = g.without(p);
            if !is_independent(&h) {
                fail!(Violation::new("downward-closed").functions([g.clone(), h]));
            }
        }
    }
    Outcome::Pass
}

fn span_of(ctx: &Ctx<'_>, g: &FdFunction) -> Option<FdFunction> {
    span(g, ctx.mu()?).ok()
}

fn span_key(ctx: &Ctx<'_>, g: &FdFunction) -> Option<bool> {
    if let Some((s, ex)) = small_exhaustive(ctx) {
        if let Some(m) = s.mask_of(g) {
            let sp = ex.spans[m as usize];
            return Some(bits(m).all(|e| ex.spans[(m & !(1 << e)) as usize] != sp));
        }
    }
    let sp = span_of(ctx, g)?;
    for p in g.iter() {
        if span_of(ctx, &g.without(p))? == sp {
            return Some(false);
        }
    }
    Some(true)
}

/// The oracle span plus every reflexive pair of the closure.
fn oracle_span_function(ctx: &Ctx<'_>, s: &SmallMu, ex: &Exhaustive, g: u32) -> Option<FdFunction> {
    let mu = ctx.mu()?;
    let mut out = s.to_function(ex.spans[g as usize]);
    for p in mu.iter().filter(|p| p.is_reflexive()) {
        out.insert(p.clone(), false).ok()?;
    }
    Some(out)
}

fn spanlaw_violates(
    ctx: &Ctx<'_>,
    check: &str,
    g: &FdFunction,
    h: Option<&FdFunction>,
) -> Option<bool> {
    Some(match check {
        "inclusion" => !g.is_subset_of(&span_of(ctx, g)?),
        "monotonicity" => {
            let h = h?;
            g.is_subset_of(h) && !span_of(ctx, g)?.is_subset_of(&span_of(ctx, h)?)
        }
        "idempotence" => {
            let sp = span_of(ctx, g)?;
            span_of(ctx, &sp)? != sp
        }
        "library-span" => {
            let (s, ex) = small_exhaustive(ctx)?;
            let m = s.mask_of(g)?;
            span_of(ctx, g)? != oracle_span_function(ctx, s, ex, m)?
        }
        _ => false,
    })
}

fn sampled(m: usize, g: u32) -> bool {
    m <= 10 || g.is_multiple_of(31)
}

fn ec8_spanlaws(ctx: &Ctx<'_>) -> Outcome {
    if let Some((s, ex)) = small_exhaustive(ctx) {
        let all = s.all();
        for g in function_order(s.m()) {
            let sp = ex.spans[g as usize];
            if g & !sp != 0 {
                fail!(Violation::new("inclusion").functions([s.to_function(g)]));
            }
            for e in bits(all & !g) {
                let bigger = g | (1 << e);
                if sp & !ex.spans[bigger as usize] != 0 {
                    fail!(Violation::new("monotonicity")
                        .functions([s.to_function(g), s.to_function(bigger)]));
                }
            }
            if ex.spans[sp as usize] != sp {
                fail!(Violation::new("idempotence").functions([s.to_function(g)]));
            }
            if sampled(s.m(), g) {
                let want = need!(oracle_span_function(ctx, s, ex, g), "no closure".into());
                if span_of(ctx, &s.to_function(g)).as_ref() != Some(&want) {
                    fail!(Violation::new("library-span").functions([s.to_function(g)]));
                }
            }
        }
        return Outcome::Pass;
    }
    need!(within(ctx, MAT_CAP), capped(ctx, "matroid", MAT_CAP));
    for g in sample_functions(ctx) {
        let sp = need!(span_of(ctx, &g), capped(ctx, "closure table", MU_CAP));
        if !g.is_subset_of(&sp) {
            fail!(Violation::new("inclusion").functions([g]));
        }
        if span_of(ctx, &sp).as_ref() != Some(&sp) {
            fail!(Violation::new("idempotence").functions([g]));
        }
        for p in g.iter() {
            let h = g.without(p);
            if !span_of(ctx, &h).is_some_and(|x| x.is_subset_of(&sp)) {
                fail!(Violation::new("monotonicity").functions([h, g.clone()]));
            }
        }
    }
    Outcome::Pass
}

fn ec8_keys(ctx: &Ctx<'_>) -> Outcome {
    if let Some((s, ex)) = small_exhaustive(ctx) {
        for g in function_order(s.m()) {
            let sp = ex.spans[g as usize];
            let key = bits(g).all(|e| ex.spans[(g & !(1 << e)) as usize] != sp);
            if key != ex.independent[g as usize] {
                fail!(Violation::new("key-characterization")
                    .functions([s.to_function(g)])
                    .note(if key {
                        "minimal span but locally redundant"
                    } else {
                        "locally irredundant but not a minimal span"
                    }));
            }
            if sampled(s.m(), g) && is_independent(&s.to_function(g)) != ex.independent[g as usize]
            {
                fail!(Violation::new("library-independence").functions([s.to_function(g)]));
            }
        }
        return Outcome::Pass;
    }
    need!(within(ctx, MAT_CAP), capped(ctx, "matroid", MAT_CAP));
    for g in sample_functions(ctx) {
        let key = need!(span_key(ctx, &g), capped(ctx, "closure table", MU_CAP));
        if key != is_independent(&g) {
            fail!(Violation::new("key-characterization").functions([g]));
        }
    }
    Outcome::Pass
}

fn ec6(ctx: &Ctx<'_>) -> Outcome {
    if let Some((s, ex)) = small_exhaustive(ctx) {
        let bases = s.nonredundant_cover_masks();
        for g in function_order(s.m()) {
            let local = ex.independent[g as usize];
            let extendable = bases.iter().any(|b| b & g == g);
            if local != extendable {
                fail!(Violation::new("irredundant-vs-extendable")
                    .functions([s.to_function(g)])
                    .note(if local {
                        "locally irredundant but contained in no nonredundant cover"
                    } else {
                        "contained in a nonredundant cover but locally redundant"
                    }));
            }
        }
        return Outcome::Pass;
    }
    need!(
        within(ctx, MAT6_CAP),
        capped(ctx, "pair-subset scan", MAT6_CAP)
    );
    let bases = need!(ctx.bases(), bases_reason(ctx));
    let mu = need!(ctx.mu(), capped(ctx, "closure table", MU_CAP));
    let ground: Vec<&FdPair> = mu.iter().filter(|p| !p.is_reflexive()).collect();
    let mut candidates: Vec<FdFunction> = Vec::new();
    for (i, p) in ground.iter().enumerate() {
        let one =
            FdFunction::from_pairs(ctx.universe(), [(*p).clone()], false).expect("single pair");
        candidates.push(one.clone());
        for q in &ground[i + 1..] {
            candidates.push(with_pair(&one, q));
        }
    }
    for g in candidates {
        let local = is_independent(&g);
        let extendable = bases.iter().any(|b| g.is_subset_of(b));
        if local != extendable {
            fail!(Violation::new("irredundant-vs-extendable")
                .functions([g])
                .note(if local {
                    "locally irredundant but contained in no nonredundant cover"
                } else {
                    "contained in a nonredundant cover but locally redundant"
                }));
        }
    }
    Outcome::Pass
}

// ---------------------------------------------------------------- MAT

fn interior(f: &FdFunction, c: &AttrSet, x: &AttrSet) -> Option<AttrSet> {
    crate::matroid::interior_closure(f, c, x).ok()
}

fn mat2_violates(
    ctx: &Ctx<'_>,
    t: &[u64],
    cover: &FdFunction,
    check: &str,
    c: u64,
    x: u64,
) -> bool {
    if x & !c != 0 || t[c as usize] != c {
        return false;
    }
    let kernel = ClosureKernel::new(cover);
    let cs = ctx.set(c);
    let xs = ctx.set(x);
    let want = t[x as usize];
    match check {
        "body" => {
            let flags: Vec<bool> = cover.iter().map(|p| p.right.is_subset(&cs)).collect();
            kernel
                .closure_with(&xs, Some(&flags), None)
                .map_or(true, |r| r.to_mask() != want)
        }
        "interior" => {
            let flags: Vec<bool> = cover
                .iter()
                .map(|p| p.right.is_proper_subset(&cs))
                .collect();
            kernel
                .closure_with(&xs, Some(&flags), None)
                .map_or(true, |r| {
                    let r = r.to_mask();
                    r & !want != 0 || (want != c && r != want)
                })
        }
        _ => false,
    }
}

fn mat2(ctx: &Ctx<'_>) -> Outcome {
    need!(within(ctx, MAT_CAP), capped(ctx, "matroid", MAT_CAP));
    let t = need!(ctx.table(), capped(ctx, "closure table", MU_CAP));
    for cover in ctx.covers() {
        for &c in ctx.canonical_masks() {
            if t[c as usize] != c {
                continue;
            }
            for check in ["body", "interior"] {
                let mut xs: Vec<u64> = submasks(c).collect();
                xs.sort_by(|a, b| canonical_mask_cmp(*a, *b));
                for x in xs {
                    if mat2_violates(ctx, t, cover, check, c, x) {
                        fail!(Violation::new(check)
                            .functions([cover.clone()])
                            .sets([ctx.set(c), ctx.set(x)]));
                    }
                }
            }
        }
    }
    Outcome::Pass
}

fn mat4(ctx: &Ctx<'_>) -> Outcome {
    let bases = need!(ctx.bases(), bases_reason(ctx));
    let Some(first) = bases.first() else {
        return Outcome::Pass;
    };
    let sig0 = top_signature(first).ok();
    for b in &bases[1..] {
        if top_signature(b).ok() != sig0 {
            fail!(Violation::new("signature").functions([first.clone(), b.clone()]));
        }
    }
    Outcome::Pass
}

/// Closure of `x` under the interior of the materialized closure at `c`,
/// read straight from the table.
fn naive_interior(t: &[u64], c: u64, x: u64) -> u64 {
    let mut cur = x;
    loop {
        let mut next = cur;
        for s in submasks(cur) {
            let r = t[s as usize];
            if r != c {
                next |= r;
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn mat6_violates(
    ctx: &Ctx<'_>,
    check: &str,
    x: u64,
    y: Option<u64>,
    z: Option<u64>,
) -> Option<bool> {
    let t = ctx.table()?;
    let mu = ctx.mu()?;
    let cover = nonredundant_cover(mu);
    let dd = |a: u64, b: u64| -> Option<bool> {
        Some(
            directly_determines(&cover, &ctx.set(a), &ctx.set(b))
                .ok()?
                .0,
        )
    };
    let same = |a: u64, b: u64| t[a as usize] == t[b as usize];
    Some(match check {
        "reflexive" => !dd(x, x)?,
        "projective" => {
            let y = y?;
            y & !x == 0 && same(x, y) && !dd(x, y)?
        }
        "transitive" => {
            let (y, z) = (y?, z?);
            same(x, y) && same(y, z) && dd(x, y)? && dd(y, z)? && !dd(x, z)?
        }
        "library-dd" => {
            let y = y?;
            let c = t[x as usize];
            same(x, y) && dd(x, y)? != (y & !naive_interior(t, c, x) == 0)
        }
        _ => false,
    })
}

fn mat6(ctx: &Ctx<'_>) -> Outcome {
    need!(
        within(ctx, MAT6_CAP),
        capped(ctx, "direct-determination", MAT6_CAP)
    );
    let t = need!(ctx.table(), capped(ctx, "closure table", MU_CAP));
    let mu = need!(ctx.mu(), capped(ctx, "closure table", MU_CAP));
    let cover = nonredundant_cover(mu);
    for &c in ctx.canonical_masks() {
        if t[c as usize] != c {
            continue;
        }
        let class: Vec<u64> = ctx
            .canonical_masks()
            .iter()
            .copied()
            .filter(|&x| t[x as usize] == c)
            .collect();
        let reach: Vec<u64> = class.iter().map(|&x| naive_interior(t, c, x)).collect();
        for (i, &x) in class.iter().enumerate() {
            if x & !reach[i] != 0 {
                fail!(Violation::new("reflexive").sets([ctx.set(x)]));
            }
            for (j, &y) in class.iter().enumerate() {
                if y & !x == 0 && y & !reach[i] != 0 {
                    fail!(Violation::new("projective").sets([ctx.set(x), ctx.set(y)]));
                }
                if y & !reach[i] == 0 {
                    if let Some(&z) = class
                        .iter()
                        .find(|&&z| z & !reach[j] == 0 && z & !reach[i] != 0)
                    {
                        fail!(Violation::new("transitive").sets([
                            ctx.set(x),
                            ctx.set(y),
                            ctx.set(z)
                        ]));
                    }
                }
            }
        }
        let x = class[0];
        for &y in &class {
            let lib = directly_determines(&cover, &ctx.set(x), &ctx.set(y)).map(|r| r.0);
            if lib != Ok(y & !reach[0] == 0) {
                fail!(Violation::new("library-dd").sets([ctx.set(x), ctx.set(y)]));
            }
        }
    }
    Outcome::Pass
}

fn mat7(ctx: &Ctx<'_>) -> Outcome {
    need!(within(ctx, MAT_CAP), capped(ctx, "matroid", MAT_CAP));
    let t = need!(ctx.table(), capped(ctx, "closure table", MU_CAP));
    let covers = ctx.covers();
    let kernels: Vec<ClosureKernel<'_>> = covers.iter().map(ClosureKernel::new).collect();
    for &c in ctx.canonical_masks() {
        if t[c as usize] != c {
            continue;
        }
        let cs = ctx.set(c);
        let flags: Vec<Vec<bool>> = covers
            .iter()
            .map(|f| f.iter().map(|p| p.right.is_proper_subset(&cs)).collect())
            .collect();
        let mut xs: Vec<u64> = submasks(c).collect();
        xs.sort_by(|a, b| canonical_mask_cmp(*a, *b));
        for x in xs {
            let xset = ctx.set(x);
            let reach: Vec<Option<AttrSet>> = kernels
                .iter()
                .zip(&flags)
                .map(|(k, fl)| k.closure_with(&xset, Some(fl), None).ok())
                .collect();
            for j in 1..reach.len() {
                if reach[j] != reach[0] {
                    fail!(Violation::new("interior-agreement")
                        .functions([covers[0].clone(), covers[j].clone()])
                        .sets([cs.clone(), xset.clone()]));
                }
            }
        }
    }
    Outcome::Pass
}

fn mat9(ctx: &Ctx<'_>) -> Outcome {
    let bases = need!(pairwise_bases(ctx), bases_reason(ctx));
    for a in bases {
        let kernel = ClosureKernel::new(a);
        for x in a.iter() {
            let flags: Vec<bool> = a
                .iter()
                .map(|p| p.right.is_proper_subset(&x.right))
                .collect();
            let Ok(reach) = kernel.closure_with(&x.left, Some(&flags), None) else {
                continue;
            };
            for b in bases {
                for y in b.iter() {
                    if y.right != x.right || y.left == x.left || !y.left.is_subset(&reach) {
                        continue;
                    }
                    if a == b {
                        if !is_cover(&a.without(x), a).unwrap_or(false) {
                            fail!(Violation::new("part-2")
                                .functions([a.clone(), b.clone()])
                                .pairs([x.clone(), y.clone()]));
                        }
                    } else if !is_cover(&swap(a, x, y), a).unwrap_or(false) {
                        fail!(Violation::new("part-1")
                            .functions([a.clone(), b.clone()])
                            .pairs([x.clone(), y.clone()]));
                    }
                }
            }
        }
    }
    Outcome::Pass
}

fn mat10(ctx: &Ctx<'_>) -> Outcome {
    let bases = need!(pairwise_bases(ctx), bases_reason(ctx));
    for a in bases {
        for b in bases {
            if let Err(e) = dd_bijection(a, b) {
                fail!(Violation::new("bijection")
                    .functions([a.clone(), b.clone()])
                    .note(e.to_string()));
            }
        }
    }
    Outcome::Pass
}

fn mat11_cardinality(ctx: &Ctx<'_>) -> Outcome {
    let bases = need!(ctx.bases(), bases_reason(ctx));
    if let Some(first) = bases.first() {
        if let Some(b) = bases.iter().find(|b| b.len() != first.len()) {
            fail!(Violation::new("cardinality").functions([first.clone(), b.clone()]));
        }
    }
    Outcome::Pass
}

fn mat11_exchange(ctx: &Ctx<'_>) -> Outcome {
    let all = need!(ctx.bases(), bases_reason(ctx));
    if ctx.n() <= ORACLE_COVER_CAP {
        let mu = need!(ctx.mu(), capped(ctx, "closure table", MU_CAP));
        match enumerate_bases(mu, usize::MAX) {
            Ok(walked) => {
                if let Some(g) = all.iter().find(|g| !walked.contains(g)) {
                    fail!(Violation::new("enumeration")
                        .functions([g.clone()])
                        .note("oracle basis not reached by the exchange walk"));
                }
                if let Some(g) = walked.iter().find(|g| !all.contains(g)) {
                    fail!(Violation::new("enumeration")
                        .functions([g.clone()])
                        .note("exchange walk produced a non-basis"));
                }
            }
            Err(e) => fail!(Violation::new("enumeration")
                .functions([nonredundant_cover(mu)])
                .note(e.to_string())),
        }
    }
    let bases = need!(pairwise_bases(ctx), bases_reason(ctx));
    for a in bases {
        for b in bases {
            for x in a.iter().filter(|x| !b.contains(x)) {
                let ok = b
                    .iter()
                    .filter(|y| !a.contains(y))
                    .any(|y| is_basis_of_mu(ctx, &swap(a, x, y)));
                if !ok {
                    fail!(Violation::new("exchange")
                        .functions([a.clone(), b.clone()])
                        .pairs([x.clone()]));
                }
            }
        }
    }
    Outcome::Pass
}

fn mat11_augmentation(ctx: &Ctx<'_>) -> Outcome {
    let (s, ex) = need!(
        small_exhaustive(ctx),
        capped(ctx, "exhaustive independence", ORACLE_COVER_CAP)
    );
    let size = 1usize << s.m();
    let mut rank = vec![0u8; size];
    for g in 0..size {
        rank[g] = if ex.independent[g] {
            g.count_ones() as u8
        } else {
            bits(g as u32)
                .map(|e| rank[g & !(1 << e)])
                .max()
                .unwrap_or(0)
        };
    }
    let all = s.all();
    for i in function_order(s.m()) {
        if !ex.independent[i as usize] {
            continue;
        }
        let augmenting = bits(all & !i)
            .filter(|&e| ex.independent[(i | (1 << e)) as usize])
            .fold(0u32, |acc, e| acc | (1 << e));
        let pool = all & !augmenting;
        let target = i.count_ones() + 1;
        if u32::from(rank[pool as usize]) < target {
            continue;
        }
        let mut js: Vec<u32> = submasks(u64::from(pool))
            .map(|j| j as u32)
            .filter(|&j| j.count_ones() == target && ex.independent[j as usize])
            .collect();
        js.sort_by(|a, b| canonical_mask_cmp(u64::from(*a), u64::from(*b)));
        if let Some(&j) = js.first() {
            fail!(Violation::new("augmentation")
                .functions([s.to_function(i), s.to_function(j)])
                .note("no pair of the larger function extends the smaller one"));
        }
    }
    Outcome::Pass
}

fn mat12(ctx: &Ctx<'_>) -> Outcome {
    let bases = need!(ctx.bases(), bases_reason(ctx));
    let mu = need!(ctx.mu(), capped(ctx, "closure table", MU_CAP));
    for p in mu.iter() {
        match singleton_status_with_bases(mu, p, Some(bases)) {
            Ok(st) if st.conflict => {
                let why = if st.reflexive {
                    "reflexive"
                } else if !st.left_is_key {
                    "left side is not a key"
                } else {
                    "left side directly determines its closure"
                };
                fail!(Violation::new("sufficient-condition")
                    .pairs([p.clone()])
                    .note(format!("{why}, yet the pair lies in a nonredundant cover")));
            }
            Ok(_) => {}
            Err(e) => return Outcome::Capped(e.to_string()),
        }
    }
    Outcome::Pass
}

// ---------------------------------------------------------------- FL

fn fl4_violates(ctx: &Ctx<'_>, check: &str, x: u64, y: Option<u64>) -> Option<bool> {
    let k = ctx.kappa()?;
    let kx = k[x as usize];
    Some(match check {
        "inclusion" => x & !kx != 0,
        "monotonicity" => {
            let y = y?;
            x & !y == 0 && kx & !k[y as usize] != 0
        }
        "idempotence" => k[kx as usize] != kx,
        "ancestor-bound" => {
            let h = ctx.hereditary()?;
            let i = y?;
            is_maximal_independent(h, x, i) && kx & !h.delta_mask(i) != 0
        }
        "library-kappa" => {
            kappa_topdown(ctx.hereditary()?, &ctx.set(x))
                .ok()?
                .to_mask()
                != kx
        }
        _ => false,
    })
}

fn is_maximal_independent(h: &crate::flat::HereditaryCollection, x: u64, i: u64) -> bool {
    i & !x == 0 && h.contains_mask(i) && bits64(x & !i).all(|b| !h.contains_mask(i | b))
}

fn maximal_independent(h: &crate::flat::HereditaryCollection, x: u64) -> Vec<u64> {
    let mut out: Vec<u64> = submasks(x)
        .filter(|&i| is_maximal_independent(h, x, i))
        .collect();
    out.sort_by(|a, b| canonical_mask_cmp(*a, *b));
    out
}

fn fl4_closurelaws(ctx: &Ctx<'_>) -> Outcome {
    let k = need!(ctx.kappa(), capped(ctx, "flat closure", FLAT_CAP));
    let h = need!(ctx.hereditary(), capped(ctx, "flat closure", FLAT_CAP));
    for &x in ctx.canonical_masks() {
        let kx = k[x as usize];
        if x & !kx != 0 {
            fail!(Violation::new("inclusion").sets([ctx.set(x)]));
        }
        if k[kx as usize] != kx {
            fail!(Violation::new("idempotence").sets([ctx.set(x)]));
        }
        for b in (0..ctx.n()).map(|p| 1u64 << p).filter(|b| x & b == 0) {
            if kx & !k[(x | b) as usize] != 0 {
                fail!(Violation::new("monotonicity").sets([ctx.set(x), ctx.set(x | b)]));
            }
        }
        for i in maximal_independent(h, x) {
            if kx & !h.delta_mask(i) != 0 {
                fail!(Violation::new("ancestor-bound").sets([ctx.set(x), ctx.set(i)]));
            }
        }
        if ctx.n() <= MAT_CAP && kappa_topdown(h, &ctx.set(x)).map(|s| s.to_mask()) != Ok(kx) {
            fail!(Violation::new("library-kappa").sets([ctx.set(x)]));
        }
    }
    Outcome::Pass
}

fn fl4_h_subset(ctx: &Ctx<'_>) -> Outcome {
    let k = need!(ctx.kappa(), capped(ctx, "flat closure", FLAT_CAP));
    let h = need!(ctx.hereditary(), capped(ctx, "flat closure", FLAT_CAP));
    for i in h.members() {
        let im = i.to_mask();
        for b in bits64(im) {
            let j = im & !b;
            if k[j as usize] == k[im as usize] {
                fail!(Violation::new("member-not-key").sets([i.clone(), ctx.set(j)]));
            }
        }
    }
    Outcome::Pass
}

fn fl4_keyset(ctx: &Ctx<'_>) -> Outcome {
    let k = need!(ctx.kappa(), capped(ctx, "flat closure", FLAT_CAP));
    let h = need!(ctx.hereditary(), capped(ctx, "flat closure", FLAT_CAP));
    for &x in ctx.canonical_masks() {
        if is_key(k, x) && !h.contains_mask(x) {
            fail!(Violation::new("key-not-member")
                .sets([ctx.set(x)])
                .note("a key of the flat closure outside the collection"));
        }
    }
    Outcome::Pass
}

fn fl3_note_a(ctx: &Ctx<'_>) -> Outcome {
    let k = need!(ctx.kappa(), capped(ctx, "flat closure", FLAT_CAP));
    let h = need!(ctx.hereditary(), capped(ctx, "flat closure", FLAT_CAP));
    for i in h.members() {
        let im = i.to_mask();
        let d = h.delta_mask(im);
        if d != k[im as usize] {
            fail!(Violation::new("delta-vs-kappa")
                .sets([i.clone()])
                .note(format!(
                    "delta = {}, kappa = {}",
                    render(ctx, d),
                    render(ctx, k[im as usize])
                )));
        }
    }
    Outcome::Pass
}

fn fl5(ctx: &Ctx<'_>) -> Outcome {
    let k = need!(ctx.kappa(), capped(ctx, "flat closure", FLAT_CAP));
    let h = need!(ctx.hereditary(), capped(ctx, "flat closure", FLAT_CAP));
    for &x in ctx.canonical_masks() {
        for i in maximal_independent(h, x) {
            let d = h.delta_mask(i);
            if d != k[x as usize] {
                fail!(Violation::new("maximal-independent")
                    .sets([ctx.set(x), ctx.set(i)])
                    .note(format!(
                        "kappa = {}, delta = {}",
                        render(ctx, k[x as usize]),
                        render(ctx, d)
                    )));
            }
        }
    }
    Outcome::Pass
}

fn fl6(ctx: &Ctx<'_>) -> Outcome {
    let k = need!(ctx.kappa(), capped(ctx, "flat closure", FLAT_CAP));
    let fc = need!(ctx.flat(), capped(ctx, "flat closure", FLAT_CAP));
    let kernel = fc.kernel();
    for &x in ctx.canonical_masks() {
        let bottom = match kernel.closure(&ctx.set(x)) {
            Ok(s) => s.to_mask(),
            Err(e) => return Outcome::Capped(e.to_string()),
        };
        if bottom != k[x as usize] {
            fail!(Violation::new("topdown-vs-bottomup")
                .sets([ctx.set(x)])
                .note(format!(
                    "top-down = {}, bottom-up = {}",
                    render(ctx, k[x as usize]),
                    render(ctx, bottom)
                )));
        }
    }
    Outcome::Pass
}

/// The flat closure of the key family of the span operator, as a map on
/// function masks.
fn span_flat_closure<'s>(s: &'s SmallMu, ex: &'s Exhaustive) -> impl Fn(u32) -> u32 + 's {
    let size = 1usize << s.m();
    let all = s.all();
    let key: Vec<bool> = (0..size as u32)
        .map(|g| {
            let sp = ex.spans[g as usize];
            bits(g).all(|e| ex.spans[(g & !(1 << e)) as usize] != sp)
        })
        .collect();
    let mut images: Vec<u32> = (0..size as u32)
        .filter(|&i| key[i as usize])
        .map(|i| {
            bits(all & !i)
                .filter(|&e| !key[(i | (1 << e)) as usize])
                .fold(i, |acc, e| acc | (1 << e))
        })
        .collect();
    images.sort_unstable();
    images.dedup();
    move |g| {
        images
            .iter()
            .filter(|&&d| g & !d == 0)
            .fold(all, |acc, &d| acc & d)
    }
}

fn fl7(ctx: &Ctx<'_>) -> Outcome {
    let (s, ex) = need!(
        small_exhaustive(ctx),
        capped(ctx, "exhaustive span", ORACLE_COVER_CAP)
    );
    let kappa = span_flat_closure(s, ex);
    for g in function_order(s.m()) {
        let k = kappa(g);
        if k != ex.spans[g as usize] {
            fail!(Violation::new("span-vs-flat")
                .functions([
                    s.to_function(g),
                    s.to_function(ex.spans[g as usize]),
                    s.to_function(k)
                ])
                .note("span differs from the flat closure of the nonredundant functions"));
        }
    }
    Outcome::Pass
}
