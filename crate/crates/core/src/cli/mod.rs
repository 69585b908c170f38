//! Command-line front end. [`run_command`] is pure over its arguments and
//! the files they name, so output is reproducible byte for byte.

pub mod parse;
pub mod render;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::audit::{
    audit_instance, describe_witness, pair_json, report_json, run_suite, set_json, Claim, Instance,
    InstanceKind, Status, SuiteConfig,
};
use crate::closure::{
    closed_sets, extend_by_closure, fast_closure, keys_of, materialize_mu, ClosureTable,
};
use crate::cover::{nonredundant_cover, span};
use crate::error::{Error, Result};
use crate::flat::FlatClosure;
use crate::matroid::{directly_determines, enumerate_bases, singleton_status, top_signature};
use crate::model::{AttrSet, FdFunction, FdPair, Universe};

use self::parse::{parse_facets_file, parse_fd_file, parse_fd_raw};
use self::render::{render_fd_file, render_function_inline, render_pair, render_pairs, render_set};

/// Exit status, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "fdmatroid",
    version,
    about = "Closures, covers, flat closures and the matroid of nonredundant covers"
)]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FdArg {
    /// Dependency file.
    #[arg(long)]
    fds: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closure of a set.
    Closure {
        #[command(flatten)]
        fd: FdArg,
        #[arg(long)]
        set: String,
        /// Print the stages of the staged recurrence.
        #[arg(long)]
        trace: bool,
    },
    /// Every closed set.
    ClosedSets {
        #[command(flatten)]
        fd: FdArg,
    },
    /// Keys of one closed set, or of every closed set.
    Keys {
        #[command(flatten)]
        fd: FdArg,
        #[arg(long)]
        of: Option<String>,
    },
    /// A nonredundant cover of the canonical function.
    Mincover {
        #[command(flatten)]
        fd: FdArg,
    },
    /// The canonical form of the file.
    Canonicalize {
        #[command(flatten)]
        fd: FdArg,
    },
    /// Span of a set of closure pairs (default: the canonical function).
    Span {
        #[command(flatten)]
        fd: FdArg,
        /// Dependency file whose pairs must be pairs of the closure.
        #[arg(long)]
        sub: Option<PathBuf>,
    },
    /// Direct determination between two sets with equal closure.
    Dd {
        #[command(flatten)]
        fd: FdArg,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Every nonredundant cover of the closure.
    Bases {
        #[command(flatten)]
        fd: FdArg,
        #[arg(long, default_value_t = crate::audit::AUDIT_BASIS_LIMIT)]
        cap: usize,
    },
    /// Distinct right sides of a nonredundant cover.
    TopSignature {
        #[command(flatten)]
        fd: FdArg,
    },
    /// Top-down and bottom-up flat closure of a set.
    Flats {
        #[arg(long)]
        facets: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Matroid status of the singleton `{(left, closed)}`.
    Singleton {
        #[command(flatten)]
        fd: FdArg,
        #[arg(long)]
        left: String,
        /// Right side; defaults to the closure of the left side.
        #[arg(long)]
        closed: Option<String>,
    },
    /// Audit claims on a file or a seeded random corpus.
    Audit(AuditArgs),
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[arg(long, conflicts_with_all = ["facets", "random"])]
    fds: Option<PathBuf>,
    #[arg(long, conflicts_with = "random")]
    facets: Option<PathBuf>,
    /// Number of random instances.
    #[arg(long)]
    random: Option<u64>,
    #[arg(long, default_value_t = 4)]
    universe: usize,
    /// First seed of the random corpus.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    max_pairs: usize,
    /// Random hereditary collections instead of dependency functions.
    #[arg(long)]
    hereditary: bool,
    /// Comma-separated claim names (default: all).
    #[arg(long, value_delimiter = ',')]
    claims: Vec<String>,
    /// Skip witness minimization.
    #[arg(long)]
    no_minimize: bool,
}

#[derive(Serialize)]
struct JsonOutput {
    command: &'static str,
    universe: Vec<String>,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdicts: Option<Value>,
}

struct Response {
    command: &'static str,
    universe: Vec<String>,
    text: String,
    result: Value,
    verdicts: Option<Value>,
    code: i32,
}

impl Response {
    fn new(command: &'static str, u: &Universe, text: String, result: Value) -> Self {
        Response {
            command,
            universe: u.names().to_vec(),
            text,
            result,
            verdicts: None,
            code: 0,
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                let first = text
                    .lines()
                    .find(|l| !l.trim().is_empty())
                    .unwrap_or("error");
                CommandOutput {
                    code,
                    stdout: String::new(),
                    stderr: format!("{first}\n"),
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(r) => {
            let stdout = if cli.json {
                let out = JsonOutput {
                    command: r.command,
                    universe: r.universe,
                    result: r.result,
                    verdicts: r.verdicts,
                };
                let mut s = serde_json::to_string_pretty(&out).expect("serializable");
                s.push('\n');
                s
            } else {
                r.text
            };
            CommandOutput {
                code: r.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => CommandOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::BadParams(format!("cannot read {}: {e}", path.display())))
}

fn load_fd(arg: &FdArg) -> Result<(Universe, FdFunction)> {
    parse_fd_file(&read(&arg.fds)?)
}

fn line(u: &Universe, s: &AttrSet) -> String {
    format!("{}\n", render_set(u, s))
}

fn set_list_json(u: &Universe, sets: &[AttrSet]) -> Value {
    json!(sets.iter().map(|s| set_json(u, s)).collect::<Vec<_>>())
}

fn function_json(f: &FdFunction) -> Value {
    let u = f.universe();
    json!(f
        .canonical_order()
        .iter()
        .map(|p| pair_json(u, p))
        .collect::<Vec<_>>())
}

fn trace_text(u: &Universe, stages: &[AttrSet], fired: &[Vec<FdPair>]) -> String {
    let mut out = String::new();
    for (i, s) in stages.iter().enumerate() {
        let _ = write!(out, "stage {i}: {}", render_set(u, s));
        if let Some(ps) = fired.get(i) {
            let names: Vec<String> = ps.iter().map(|p| render_pair(u, p)).collect();
            let _ = write!(out, "  fires {}", names.join("; "));
        }
        out.push('\n');
    }
    out
}

fn trace_json(u: &Universe, stages: &[AttrSet], fired: &[Vec<FdPair>]) -> Value {
    json!({
        "stages": set_list_json(u, stages),
        "fired": fired
            .iter()
            .map(|ps| ps.iter().map(|p| pair_json(u, p)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn dispatch(cmd: &Command) -> Result<Response> {
    match cmd {
        Command::Closure { fd, set, trace } => {
            let (u, f) = load_fd(fd)?;
            let x = u.parse_set(set)?;
            if *trace {
                let (c, t) = extend_by_closure(&f, &x)?;
                let text = format!("{}{}", line(&u, &c), trace_text(&u, &t.stages, &t.fired));
                let result = json!({
                    "closure": set_json(&u, &c),
                    "trace": trace_json(&u, &t.stages, &t.fired),
                });
                Ok(Response::new("closure", &u, text, result))
            } else {
                let c = fast_closure(&f, &x)?;
                let result = json!({ "closure": set_json(&u, &c) });
                Ok(Response::new("closure", &u, line(&u, &c), result))
            }
        }
        Command::ClosedSets { fd } => {
            let (u, f) = load_fd(fd)?;
            let sets = closed_sets(&f)?;
            let text: String = sets.iter().map(|s| line(&u, s)).collect();
            let result = json!({ "closed_sets": set_list_json(&u, &sets) });
            Ok(Response::new("closed-sets", &u, text, result))
        }
        Command::Keys { fd, of } => {
            let (u, f) = load_fd(fd)?;
            let join = |ks: &[AttrSet]| {
                ks.iter()
                    .map(|k| render_set(&u, k))
                    .collect::<Vec<_>>()
                    .join(" / ")
            };
            match of {
                Some(c) => {
                    let c = u.parse_set(c)?;
                    let ks = keys_of(&f, &c)?;
                    let text = format!("{}\n", join(&ks));
                    let result = json!({
                        "closed_set": set_json(&u, &c),
                        "keys": set_list_json(&u, &ks),
                    });
                    Ok(Response::new("keys", &u, text, result))
                }
                None => {
                    let mut text = String::new();
                    let mut rows = Vec::new();
                    for c in closed_sets(&f)? {
                        let ks = keys_of(&f, &c)?;
                        let _ = writeln!(text, "{}: {}", render_set(&u, &c), join(&ks));
                        rows.push(json!({
                            "closed_set": set_json(&u, &c),
                            "keys": set_list_json(&u, &ks),
                        }));
                    }
                    Ok(Response::new(
                        "keys",
                        &u,
                        text,
                        json!({ "closed_sets": rows }),
                    ))
                }
            }
        }
        Command::Mincover { fd } => {
            let (u, f) = load_fd(fd)?;
            let g = nonredundant_cover(&f);
            let result = json!({ "cover": function_json(&g) });
            Ok(Response::new("mincover", &u, render_pairs(&g), result))
        }
        Command::Canonicalize { fd } => {
            let (u, f) = load_fd(fd)?;
            let result = json!({ "function": function_json(&f) });
            Ok(Response::new(
                "canonicalize",
                &u,
                render_fd_file(&f),
                result,
            ))
        }
        Command::Span { fd, sub } => {
            let (u, f) = load_fd(fd)?;
            let mu = materialize_mu(&f)?;
            let g = match sub {
                Some(path) => {
                    let (v, pairs) = parse_fd_raw(&read(path)?)?;
                    if v != u {
                        return Err(Error::UniverseMismatch);
                    }
                    FdFunction::from_pairs(&u, pairs, false)?
                }
                None => f,
            };
            let s = span(&g, &mu)?;
            let result = json!({ "span": function_json(&s) });
            Ok(Response::new("span", &u, render_pairs(&s), result))
        }
        Command::Dd { fd, from, to } => {
            let (u, f) = load_fd(fd)?;
            let (x, y) = (u.parse_set(from)?, u.parse_set(to)?);
            let cover = nonredundant_cover(&f);
            let (yes, t) = directly_determines(&cover, &x, &y)?;
            let text = format!(
                "{}\n{}",
                if yes { "yes" } else { "no" },
                trace_text(&u, &t.stages, &t.fired)
            );
            let result = json!({
                "determines": yes,
                "trace": trace_json(&u, &t.stages, &t.fired),
            });
            Ok(Response::new("dd", &u, text, result))
        }
        Command::Bases { fd, cap } => {
            let (u, f) = load_fd(fd)?;
            let bases = enumerate_bases(&materialize_mu(&f)?, *cap)?;
            let text: String = bases
                .iter()
                .map(|b| format!("{}\n", render_function_inline(b)))
                .collect();
            let result = json!({
                "count": bases.len(),
                "bases": bases.iter().map(function_json).collect::<Vec<_>>(),
            });
            Ok(Response::new("bases", &u, text, result))
        }
        Command::TopSignature { fd } => {
            let (u, f) = load_fd(fd)?;
            let sig = top_signature(&nonredundant_cover(&f))?;
            let text: String = sig.iter().map(|s| line(&u, s)).collect();
            let result = json!({ "signature": set_list_json(&u, &sig) });
            Ok(Response::new("top-signature", &u, text, result))
        }
        Command::Flats { facets, set } => {
            let h = parse_facets_file(&read(facets)?)?;
            let u = h.universe().clone();
            let x = u.parse_set(set)?;
            let fc = FlatClosure::new(&h);
            let top = u.set_from_mask(fc.topdown_mask(x.to_mask()));
            let bottom = fc.kernel().closure(&x)?;
            let divergent = top != bottom;
            let text = format!(
                "top-down: {}\nbottom-up: {}\ndivergent: {}\n",
                render_set(&u, &top),
                render_set(&u, &bottom),
                if divergent { "yes" } else { "no" }
            );
            let result = json!({
                "topdown": set_json(&u, &top),
                "bottomup": set_json(&u, &bottom),
                "divergent": divergent,
            });
            Ok(Response::new("flats", &u, text, result))
        }
        Command::Singleton { fd, left, closed } => {
            let (u, f) = load_fd(fd)?;
            let l = u.parse_set(left)?;
            let r = match closed {
                Some(c) => u.parse_set(c)?,
                None => fast_closure(&f, &l)?,
            };
            let mu = ClosureTable::build(&f)?.to_function();
            let p = FdPair::new(l, r)?;
            let st = singleton_status(&mu, &p)?;
            let yn = |b: bool| if b { "yes" } else { "no" };
            let basis = match st.in_some_basis {
                Some(b) => yn(b).to_string(),
                None => "unknown".to_string(),
            };
            let condition = if st.mat12_dependent {
                "dependent"
            } else {
                "undetermined"
            };
            let text = format!(
                "pair: {}\nreflexive: {}\nleft is key: {}\ndetermines closure: {}\n\
                 sufficient condition: {}\nlocally independent: {}\n\
                 in some basis: {basis}\nindependent: {}\nconflict: {}\n",
                render_pair(&u, &p),
                yn(st.reflexive),
                yn(st.left_is_key),
                yn(st.determines_closure),
                condition,
                yn(st.locally_independent),
                yn(st.oracle_independent),
                yn(st.conflict),
            );
            let result = json!({
                "pair": pair_json(&u, &p),
                "reflexive": st.reflexive,
                "left_is_key": st.left_is_key,
                "determines_closure": st.determines_closure,
                "mat12_dependent": st.mat12_dependent,
                "sufficient_condition": condition,
                "locally_independent": st.locally_independent,
                "in_some_basis": st.in_some_basis,
                "independent": st.oracle_independent,
                "conflict": st.conflict,
            });
            Ok(Response::new("singleton", &u, text, result))
        }
        Command::Audit(args) => audit(args),
    }
}

fn parse_claims(names: &[String]) -> Result<Option<Vec<Claim>>> {
    if names.is_empty() {
        return Ok(None);
    }
    names
        .iter()
        .map(|n| {
            Claim::from_name(n.trim()).ok_or_else(|| Error::BadParams(format!("unknown claim {n}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

fn audit(args: &AuditArgs) -> Result<Response> {
    let claims = parse_claims(&args.claims)?;
    let minimize = !args.no_minimize;
    let (universe, summary) = if let Some(n) = args.random {
        let config = SuiteConfig {
            seeds: (args.seed..args.seed.saturating_add(n)).collect(),
            sizes: vec![args.universe],
            max_pairs: args.max_pairs,
            kinds: vec![if args.hereditary {
                InstanceKind::Hereditary
            } else {
                InstanceKind::Fd
            }],
            claims,
            include_fixtures: false,
            minimize,
        };
        crate::audit::random_instance(
            args.seed,
            &crate::audit::InstanceParams {
                universe_size: args.universe,
                max_pairs: args.max_pairs,
                kind: config.kinds[0],
            },
        )?;
        (Universe::letters(args.universe)?, run_suite(&config)?)
    } else {
        let instance = match (&args.fds, &args.facets) {
            (Some(p), _) => Instance::fd(p.display().to_string(), parse_fd_file(&read(p)?)?.1),
            (None, Some(p)) => {
                Instance::hereditary(p.display().to_string(), parse_facets_file(&read(p)?)?)
            }
            (None, None) => {
                return Err(Error::BadParams(
                    "audit needs --fds, --facets or --random".into(),
                ))
            }
        };
        let list = claims.unwrap_or_else(|| Claim::ALL.to_vec());
        let report = audit_instance(&instance, &list, minimize);
        (
            instance.universe().clone(),
            crate::audit::AuditSummary::from_reports(vec![report]),
        )
    };
    let mut text = summary.render_text();
    for r in &summary.reports {
        for v in &r.verdicts {
            if v.status == Status::Pass {
                continue;
            }
            let _ = write!(
                text,
                "{} {} {}",
                r.instance_id,
                v.claim.name(),
                v.status.name()
            );
            if let Some(reason) = &v.reason {
                let _ = write!(text, ": {reason}");
            }
            text.push('\n');
            if let Some(w) = &v.witness {
                let _ = writeln!(text, "  witness: {}", describe_witness(w));
            }
            if let Some(w) = &v.minimized {
                let _ = writeln!(
                    text,
                    "  minimized ({}): {}",
                    w.instance.id,
                    describe_witness(w)
                );
            }
        }
    }
    let json = summary.to_json_value();
    let verdicts: Vec<Value> = summary
        .reports
        .iter()
        .flat_map(|r| {
            let rep = serde_json::to_value(report_json(r)).expect("serializable");
            let id = r.instance_id.clone();
            rep["verdicts"]
                .as_array()
                .cloned()
                .unwrap_or_default()
                .into_iter()
                .map(move |mut v| {
                    v["instance"] = json!(id);
                    v
                })
        })
        .collect();
    let result = json!({
        "instances": json["instances"],
        "must_pass_failures": json["must_pass_failures"],
        "totals": json["totals"],
    });
    let mut resp = Response::new("audit", &universe, text, result);
    resp.verdicts = Some(Value::Array(verdicts));
    resp.code = summary.exit_code();
    Ok(resp)
}
