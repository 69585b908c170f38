//! Per-claim audit of closures, covers, flat closures and the cover matroid
//! against brute-force ground truth.
//!
//! Every instance is a dependency function or a hereditary collection. A
//! dependency instance supplies its closure `μ` and the hereditary family
//! `Ky μ`; a hereditary instance supplies `H` and its top-down flat closure
//! as `μ`. Every claim is then checked on the pair `(μ, H)`.

pub mod checks;
pub mod oracle;
pub mod random;
mod shrink;

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::cli::parse::{parse_facets_file, parse_fd_file};
use crate::cli::render::{render_facets_file, render_fd_file};
use crate::closure::{key_restriction, key_sets_of_table, ClosureTable, MU_CAP};
use crate::cover::nonredundant_cover;
use crate::error::Result;
use crate::flat::{FlatClosure, HereditaryCollection};
use crate::matroid::enumerate_bases;
use crate::model::{AttrSet, FdFunction, FdPair, Universe};

use self::oracle::{oracle_closure_masks, SmallMu, ORACLE_COVER_CAP, ORACLE_TABLE_CAP};
pub use self::random::{random_instance, InstanceKind, InstanceParams};

/// Basis count above which matroid claims are capped.
pub const AUDIT_BASIS_LIMIT: usize = 256;
/// Largest universe for the matroid claims that scan every closed set.
pub const MAT_CAP: usize = 8;
/// Largest universe for the direct-determination law checks.
pub const MAT6_CAP: usize = 6;
/// Largest universe for the flat-closure claims.
pub const FLAT_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    MustPass,
    AuditedOpen,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::MustPass => "must-pass",
            Group::AuditedOpen => "audited-open",
        }
    }
}

macro_rules! claims {
    ($($variant:ident => $name:literal, $group:ident;)*) => {
        /// A checked statement. Declaration order is registry order.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Claim {
            $($variant,)*
        }

        impl Claim {
            pub const ALL: &'static [Claim] = &[$(Claim::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Claim::$variant => $name,)*
                }
            }

            pub fn group(self) -> Group {
                match self {
                    $(Claim::$variant => Group::$group,)*
                }
            }
        }
    };
}

claims! {
    Co6 => "CO6", MustPass;
    Co7 => "CO7", MustPass;
    Co8 => "CO8", MustPass;
    Ec2 => "EC2", MustPass;
    Ec3 => "EC3", MustPass;
    Ec7Monotonicity => "EC7-monotonicity", MustPass;
    Ec8Spanlaws => "EC8-spanlaws", MustPass;
    Ec8Keys => "EC8-keys", MustPass;
    Mat2 => "MAT2", MustPass;
    Mat4 => "MAT4", MustPass;
    Mat6 => "MAT6", MustPass;
    Mat7 => "MAT7", MustPass;
    Mat9 => "MAT9", MustPass;
    Mat10 => "MAT10", MustPass;
    Mat11Cardinality => "MAT11-cardinality", MustPass;
    Mat11Exchange => "MAT11-exchange", MustPass;
    Fl4Closurelaws => "FL4-closurelaws", MustPass;
    Fl4HSubsetOfKeys => "FL4-H-subset-of-keys", MustPass;
    Fl3NoteA => "FL3-note-a", AuditedOpen;
    Fl4KeysetEquality => "FL4-keyset-equality", AuditedOpen;
    Fl5 => "FL5", AuditedOpen;
    Fl6 => "FL6", AuditedOpen;
    Fl7 => "FL7", AuditedOpen;
    Mat12 => "MAT12", AuditedOpen;
    Ec6Equivalence => "EC6-equivalence", AuditedOpen;
    Mat11Augmentation => "MAT11-augmentation", AuditedOpen;
}

impl Claim {
    pub fn from_name(name: &str) -> Option<Claim> {
        Claim::ALL
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(name))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceBody {
    Fd(FdFunction),
    Hereditary(HereditaryCollection),
}

/// An audited object with a stable identifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub body: InstanceBody,
}

impl Instance {
    pub fn fd(id: impl Into<String>, f: FdFunction) -> Self {
        Instance {
            id: id.into(),
            body: InstanceBody::Fd(f),
        }
    }

    pub fn hereditary(id: impl Into<String>, h: HereditaryCollection) -> Self {
        Instance {
            id: id.into(),
            body: InstanceBody::Hereditary(h),
        }
    }

    pub fn universe(&self) -> &Universe {
        match &self.body {
            InstanceBody::Fd(f) => f.universe(),
            InstanceBody::Hereditary(h) => h.universe(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.body {
            InstanceBody::Fd(_) => "fd",
            InstanceBody::Hereditary(_) => "hereditary",
        }
    }

    /// The instance in its input file format.
    pub fn to_text(&self) -> String {
        match &self.body {
            InstanceBody::Fd(f) => render_fd_file(f),
            InstanceBody::Hereditary(h) => render_facets_file(h),
        }
    }

    pub fn from_text(id: &str, kind: &str, text: &str) -> Result<Self> {
        if kind == "hereditary" {
            Ok(Instance::hereditary(id, parse_facets_file(text)?))
        } else {
            Ok(Instance::fd(id, parse_fd_file(text)?.1))
        }
    }
}

/// Lazily computed views of one instance shared by the checkers.
pub struct Ctx<'a> {
    instance: &'a Instance,
    canon: OnceCell<Vec<u64>>,
    table: OnceCell<Option<Vec<u64>>>,
    generator: OnceCell<Option<FdFunction>>,
    mu: OnceCell<Option<FdFunction>>,
    hereditary: OnceCell<Option<HereditaryCollection>>,
    flat: OnceCell<Option<(FlatClosure, Vec<u64>)>>,
    small: OnceCell<Option<SmallMu>>,
    exhaustive: OnceCell<Option<Exhaustive>>,
    bases: OnceCell<Option<Vec<FdFunction>>>,
    covers: OnceCell<Vec<FdFunction>>,
}

/// Span and independence of every function over the non-reflexive pairs of
/// a small closure.
pub(crate) struct Exhaustive {
    pub spans: Vec<u32>,
    pub independent: Vec<bool>,
}

impl<'a> Ctx<'a> {
    pub fn new(instance: &'a Instance) -> Self {
        Ctx {
            instance,
            canon: OnceCell::new(),
            table: OnceCell::new(),
            generator: OnceCell::new(),
            mu: OnceCell::new(),
            hereditary: OnceCell::new(),
            flat: OnceCell::new(),
            small: OnceCell::new(),
            exhaustive: OnceCell::new(),
            bases: OnceCell::new(),
            covers: OnceCell::new(),
        }
    }

    pub fn instance(&self) -> &Instance {
        self.instance
    }

    pub fn universe(&self) -> &Universe {
        self.instance.universe()
    }

    pub fn n(&self) -> usize {
        self.universe().len()
    }

    pub fn full_mask(&self) -> u64 {
        match self.n() {
            n if n >= 64 => u64::MAX,
            n => (1u64 << n) - 1,
        }
    }

    pub fn set(&self, mask: u64) -> AttrSet {
        self.universe().set_from_mask(mask)
    }

    /// Every mask in canonical set order.
    pub fn canonical_masks(&self) -> &[u64] {
        self.canon.get_or_init(|| {
            let mut v: Vec<u64> = (0..=self.full_mask()).collect();
            v.sort_by(|a, b| canonical_mask_cmp(*a, *b));
            v
        })
    }

    fn flat_table(&self) -> Option<&(FlatClosure, Vec<u64>)> {
        self.flat
            .get_or_init(|| {
                if self.n() > FLAT_CAP {
                    return None;
                }
                let h = self.hereditary()?;
                let fc = FlatClosure::new(h);
                let table = (0..=self.full_mask()).map(|x| fc.topdown_mask(x)).collect();
                Some((fc, table))
            })
            .as_ref()
    }

    /// The closure `μ` tabulated by mask. Computed by the naive oracle when
    /// the universe allows it.
    pub fn table(&self) -> Option<&[u64]> {
        self.table
            .get_or_init(|| match &self.instance.body {
                InstanceBody::Fd(f) => {
                    if self.n() <= ORACLE_TABLE_CAP {
                        oracle_closure_masks(f)
                            .ok()
                            .map(|t| t.into_iter().map(u64::from).collect())
                    } else if self.n() <= MU_CAP {
                        ClosureTable::build(f).ok().map(|t| t.masks().to_vec())
                    } else {
                        None
                    }
                }
                InstanceBody::Hereditary(_) => {
                    if self.n() > MU_CAP {
                        None
                    } else {
                        self.flat_table().map(|(_, t)| t.clone())
                    }
                }
            })
            .as_deref()
    }

    /// A function generating `μ`: the input function, or the materialized
    /// flat closure for hereditary instances.
    pub fn generator(&self) -> Option<&FdFunction> {
        self.generator
            .get_or_init(|| match &self.instance.body {
                InstanceBody::Fd(f) => Some(f.clone()),
                InstanceBody::Hereditary(_) => self.mu().cloned(),
            })
            .as_ref()
    }

    /// The materialized closure `{(S, Sμ)}`.
    pub fn mu(&self) -> Option<&FdFunction> {
        self.mu
            .get_or_init(|| {
                let t = self.table()?;
                let table = ClosureTable::from_fn(self.universe(), |m| t[m as usize]).ok()?;
                Some(table.to_function())
            })
            .as_ref()
    }

    /// `Ky μ` for dependency instances, `H` for hereditary ones.
    pub fn hereditary(&self) -> Option<&HereditaryCollection> {
        self.hereditary
            .get_or_init(|| match &self.instance.body {
                InstanceBody::Hereditary(h) => Some(h.clone()),
                InstanceBody::Fd(_) => {
                    let t = self.table()?;
                    let table = ClosureTable::from_fn(self.universe(), |m| t[m as usize]).ok()?;
                    HereditaryCollection::from_members(self.universe(), key_sets_of_table(&table))
                        .ok()
                }
            })
            .as_ref()
    }

    pub fn flat(&self) -> Option<&FlatClosure> {
        self.flat_table().map(|(fc, _)| fc)
    }

    /// Top-down flat closure of the hereditary family, by mask.
    pub fn kappa(&self) -> Option<&[u64]> {
        self.flat_table().map(|(_, t)| t.as_slice())
    }

    pub fn small(&self) -> Option<&SmallMu> {
        self.small
            .get_or_init(|| {
                if self.n() > ORACLE_COVER_CAP {
                    return None;
                }
                SmallMu::new(self.mu()?).ok()
            })
            .as_ref()
    }

    pub(crate) fn exhaustive(&self) -> Option<&Exhaustive> {
        self.exhaustive
            .get_or_init(|| {
                let s = self.small()?;
                let size = 1usize << s.m();
                let spans = (0..size as u32).map(|g| s.span(g)).collect();
                let independent = (0..size as u32).map(|g| s.independent(g)).collect();
                Some(Exhaustive { spans, independent })
            })
            .as_ref()
    }

    /// All bases: the exhaustive oracle for tiny universes, exchange-graph
    /// enumeration up to [`MAT_CAP`].
    pub fn bases(&self) -> Option<&[FdFunction]> {
        self.bases
            .get_or_init(|| {
                if self.n() <= ORACLE_COVER_CAP {
                    let s = self.small()?;
                    let mut out: Vec<FdFunction> = s
                        .nonredundant_cover_masks()
                        .into_iter()
                        .map(|m| s.to_function(m))
                        .collect();
                    out.sort();
                    Some(out)
                } else if self.n() <= MAT_CAP {
                    enumerate_bases(self.mu()?, AUDIT_BASIS_LIMIT).ok()
                } else {
                    None
                }
            })
            .as_deref()
    }

    /// Covers of `μ` used where a claim quantifies over covers: the
    /// generator, its one-pass nonredundant cover, the key restriction and
    /// `μ` itself.
    pub fn covers(&self) -> &[FdFunction] {
        self.covers.get_or_init(|| {
            let mut out = Vec::new();
            if let (Some(g), Some(mu)) = (self.generator(), self.mu()) {
                out.push(g.clone());
                out.push(nonredundant_cover(g));
                if let Ok(k) = key_restriction(g) {
                    out.push(k);
                }
                out.push(mu.clone());
            }
            let mut seen = Vec::new();
            out.retain(|f| {
                if seen.contains(f) {
                    false
                } else {
                    seen.push(f.clone());
                    true
                }
            });
            out
        })
    }
}

/// Canonical order on masks: size, then the set holding the lowest element
/// of the symmetric difference first.
pub fn canonical_mask_cmp(a: u64, b: u64) -> std::cmp::Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let d = a ^ b;
        if d == 0 {
            std::cmp::Ordering::Equal
        } else if a & d & d.wrapping_neg() != 0 {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    })
}

/// Concrete objects exhibiting a violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub sets: Vec<AttrSet>,
    pub pairs: Vec<FdPair>,
    pub functions: Vec<FdFunction>,
    pub note: String,
}

impl Violation {
    pub fn new(check: &'static str) -> Self {
        Violation {
            check,
            sets: Vec::new(),
            pairs: Vec::new(),
            functions: Vec::new(),
            note: String::new(),
        }
    }

    pub fn sets(mut self, sets: impl IntoIterator<Item = AttrSet>) -> Self {
        self.sets.extend(sets);
        self
    }

    pub fn pairs(mut self, pairs: impl IntoIterator<Item = FdPair>) -> Self {
        self.pairs.extend(pairs);
        self
    }

    pub fn functions(mut self, fs: impl IntoIterator<Item = FdFunction>) -> Self {
        self.functions.extend(fs);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Violation),
    Capped(String),
}

/// A violation together with the instance it occurs in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub instance: Instance,
    pub violation: Violation,
}

impl Witness {
    /// Re-parses the instance from its text form and re-runs the specific
    /// check on the recorded objects.
    pub fn replay(&self, claim: Claim) -> Result<bool> {
        let text = self.instance.to_text();
        let inst = Instance::from_text(&self.instance.id, self.instance.kind(), &text)?;
        let ctx = Ctx::new(&inst);
        Ok(checks::recheck(claim, &ctx, &self.violation))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Capped,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Capped => "capped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub claim: Claim,
    pub status: Status,
    /// Why a claim was capped.
    pub reason: Option<String>,
    pub witness: Option<Witness>,
    /// The witness after greedy shrinking of the instance.
    pub minimized: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub instance_id: String,
    pub kind: &'static str,
    pub universe: Vec<String>,
    pub verdicts: Vec<Verdict>,
}

impl AuditReport {
    pub fn verdict(&self, claim: Claim) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.claim == claim)
    }

    pub fn must_pass_failures(&self) -> usize {
        self.verdicts
            .iter()
            .filter(|v| v.claim.group() == Group::MustPass && v.status == Status::Fail)
            .count()
    }
}

/// Audits one instance against the given claims, in registry order.
pub fn audit_instance(instance: &Instance, claims: &[Claim], minimize: bool) -> AuditReport {
    let ctx = Ctx::new(instance);
    let verdicts = Claim::ALL
        .iter()
        .copied()
        .filter(|c| claims.contains(c))
        .map(|claim| match checks::find(claim, &ctx) {
            Outcome::Pass => Verdict {
                claim,
                status: Status::Pass,
                reason: None,
                witness: None,
                minimized: None,
            },
            Outcome::Capped(reason) => Verdict {
                claim,
                status: Status::Capped,
                reason: Some(reason),
                witness: None,
                minimized: None,
            },
            Outcome::Fail(violation) => {
                let minimized = if minimize {
                    shrink::minimize(claim, instance)
                } else {
                    None
                };
                Verdict {
                    claim,
                    status: Status::Fail,
                    reason: None,
                    witness: Some(Witness {
                        instance: instance.clone(),
                        violation,
                    }),
                    minimized,
                }
            }
        })
        .collect();
    AuditReport {
        instance_id: instance.id.clone(),
        kind: instance.kind(),
        universe: instance.universe().names().to_vec(),
        verdicts,
    }
}

/// Which instances a suite run audits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seeds: Vec<u64>,
    pub sizes: Vec<usize>,
    pub max_pairs: usize,
    pub kinds: Vec<InstanceKind>,
    /// `None` audits the full registry.
    pub claims: Option<Vec<Claim>>,
    pub include_fixtures: bool,
    pub minimize: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seeds: (0..250).collect(),
            sizes: vec![3, 4, 5, 6],
            max_pairs: 8,
            kinds: vec![InstanceKind::Fd],
            claims: None,
            include_fixtures: false,
            minimize: true,
        }
    }
}

impl SuiteConfig {
    pub fn claims(&self) -> Vec<Claim> {
        self.claims.clone().unwrap_or_else(|| Claim::ALL.to_vec())
    }

    /// Instances in audit order: fixtures, then kind, size and seed.
    pub fn instances(&self) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        if self.include_fixtures {
            out.extend(crate::fixtures::all());
        }
        for &kind in &self.kinds {
            for &size in &self.sizes {
                for &seed in &self.seeds {
                    let params = InstanceParams {
                        universe_size: size,
                        max_pairs: self.max_pairs,
                        kind,
                    };
                    out.push(random_instance(seed, &params)?);
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub capped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditSummary {
    pub reports: Vec<AuditReport>,
    pub totals: BTreeMap<Claim, Totals>,
}

impl AuditSummary {
    pub fn from_reports(reports: Vec<AuditReport>) -> Self {
        let mut totals: BTreeMap<Claim, Totals> = BTreeMap::new();
        for r in &reports {
            for v in &r.verdicts {
                let t = totals.entry(v.claim).or_default();
                match v.status {
                    Status::Pass => t.pass += 1,
                    Status::Fail => t.fail += 1,
                    Status::Capped => t.capped += 1,
                }
            }
        }
        AuditSummary { reports, totals }
    }

    pub fn must_pass_failures(&self) -> usize {
        self.reports
            .iter()
            .map(AuditReport::must_pass_failures)
            .sum()
    }

    /// 1 if any must-pass claim failed, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.must_pass_failures() > 0)
    }

    /// One line per claim with pass/fail/capped counts.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "instances: {}", self.reports.len());
        for (claim, t) in &self.totals {
            let _ = writeln!(
                out,
                "{:<22} {:<13} pass {:>5}  fail {:>5}  capped {:>5}",
                claim.name(),
                claim.group().name(),
                t.pass,
                t.fail,
                t.capped
            );
        }
        let _ = writeln!(out, "must-pass failures: {}", self.must_pass_failures());
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let totals: Vec<TotalsJson> = self
            .totals
            .iter()
            .map(|(c, t)| TotalsJson {
                claim: c.name(),
                group: c.group().name(),
                pass: t.pass,
                fail: t.fail,
                capped: t.capped,
            })
            .collect();
        serde_json::to_value(SummaryJson {
            instances: self.reports.len(),
            must_pass_failures: self.must_pass_failures(),
            totals,
            reports: self.reports.iter().map(report_json).collect(),
        })
        .expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }
}

/// Audits every configured instance in order.
pub fn run_suite(config: &SuiteConfig) -> Result<AuditSummary> {
    let claims = config.claims();
    let reports = config
        .instances()?
        .iter()
        .map(|inst| audit_instance(inst, &claims, config.minimize))
        .collect();
    Ok(AuditSummary::from_reports(reports))
}

#[derive(Serialize)]
struct SummaryJson {
    instances: usize,
    must_pass_failures: usize,
    totals: Vec<TotalsJson>,
    reports: Vec<ReportJson>,
}

#[derive(Serialize)]
struct TotalsJson {
    claim: &'static str,
    group: &'static str,
    pass: usize,
    fail: usize,
    capped: usize,
}

#[derive(Serialize)]
pub(crate) struct ReportJson {
    instance: String,
    kind: &'static str,
    universe: Vec<String>,
    verdicts: Vec<VerdictJson>,
}

#[derive(Serialize)]
pub(crate) struct VerdictJson {
    claim: &'static str,
    group: &'static str,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimized: Option<WitnessJson>,
}

#[derive(Serialize)]
struct WitnessJson {
    check: &'static str,
    instance: String,
    kind: &'static str,
    input: String,
    sets: Vec<Vec<String>>,
    pairs: Vec<PairJson>,
    functions: Vec<Vec<PairJson>>,
    #[serde(skip_serializing_if = "String::is_empty")]
    note: String,
}

#[derive(Serialize)]
pub(crate) struct PairJson {
    left: Vec<String>,
    right: Vec<String>,
}

pub(crate) fn set_json(u: &Universe, s: &AttrSet) -> Vec<String> {
    s.iter().map(|i| u.name(i).to_string()).collect()
}

pub(crate) fn pair_json(u: &Universe, p: &FdPair) -> PairJson {
    PairJson {
        left: set_json(u, &p.left),
        right: set_json(u, &p.right),
    }
}

fn witness_json(w: &Witness) -> WitnessJson {
    let u = w.instance.universe();
    let v = &w.violation;
    WitnessJson {
        check: v.check,
        instance: w.instance.id.clone(),
        kind: w.instance.kind(),
        input: w.instance.to_text(),
        sets: v.sets.iter().map(|s| set_json(u, s)).collect(),
        pairs: v.pairs.iter().map(|p| pair_json(u, p)).collect(),
        functions: v
            .functions
            .iter()
            .map(|f| f.iter().map(|p| pair_json(u, p)).collect())
            .collect(),
        note: v.note.clone(),
    }
}

pub(crate) fn verdict_json(v: &Verdict) -> VerdictJson {
    VerdictJson {
        claim: v.claim.name(),
        group: v.claim.group().name(),
        status: v.status,
        reason: v.reason.clone(),
        witness: v.witness.as_ref().map(witness_json),
        minimized: v.minimized.as_ref().map(witness_json),
    }
}

pub(crate) fn report_json(r: &AuditReport) -> ReportJson {
    ReportJson {
        instance: r.instance_id.clone(),
        kind: r.kind,
        universe: r.universe.clone(),
        verdicts: r.verdicts.iter().map(verdict_json).collect(),
    }
}

/// Human-readable description of a witness.
pub fn describe_witness(w: &Witness) -> String {
    let u = w.instance.universe();
    let v = &w.violation;
    let mut parts = vec![format!("check {}", v.check)];
    for s in &v.sets {
        parts.push(format!("{{{}}}", u.render(s)));
    }
    for p in &v.pairs {
        parts.push(format!("({})", u.render_pair(p)));
    }
    for f in &v.functions {
        let inner: Vec<String> = f.iter().map(|p| u.render_pair(p)).collect();
        parts.push(format!("[{}]", inner.join("; ")));
    }
    if !v.note.is_empty() {
        parts.push(v.note.clone());
    }
    parts.join(" ")
}
