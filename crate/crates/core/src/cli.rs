//! The `gradmod` command line. Each invocation produces one JSON document
//! (stdout or `--out`) and a human summary on stderr; `--format human`
//! prints only the summary, on stdout.
//!
//! Exit codes: 0 success, 1 a computation-level finding (cross-check
//! discrepancy, invalid complex, corpus mismatch), 2 bad input.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::complexes::CochainComplex;
use crate::corpus;
use crate::error::Error;
use crate::format::PresentationFile;
use crate::homalg;
use crate::module::ModulePresentation;
use crate::resolution::{minimal_free_resolution, Measured};

#[derive(Parser, Debug)]
#[command(name = "gradmod", version, about = "Graded modules over F_p[t1, ..., tr]: resolutions, Ext, depth, syzygy order")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimal free resolution.
    Resolve(Common),
    /// Graded Betti table.
    Betti(Common),
    /// Hilbert series and the Hilbert function up to `--max-degree`.
    Hilbert(Common),
    /// Depth, projective dimension and the Auslander–Buchsbaum check.
    Depth(Common),
    /// Krull dimension.
    Dim(Common),
    /// Ext^i(M, R); all indices up to the projective dimension by default.
    Ext {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Syzygy order, with the torsion-free and reflexive tests.
    Syzord(Common),
    /// Cohen–Macaulay test of the module, or of every term of `--complex`.
    CmCheck(Common),
    /// Validate an augmented complex and compare its partial exactness
    /// with the syzygy order of the augmenting module.
    AbCheck(Common),
    /// Check corpus entries against their expected facts.
    Corpus {
        #[command(flatten)]
        common: Common,
        /// Print the entry as a presentation file instead of checking it.
        #[arg(long)]
        emit: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Presentation file.
    pub file: Option<PathBuf>,
    /// Presentation file (alternative to the positional argument).
    #[arg(long = "ring")]
    pub ring: Option<PathBuf>,
    #[arg(long)]
    pub module: Option<String>,
    #[arg(long)]
    pub complex: Option<String>,
    /// Corpus identifier such as `k:r=2` or `suspension:p=3`.
    #[arg(long)]
    pub corpus: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Structured)]
    pub format: Format,
    /// Last degree of the Hilbert function to list.
    #[arg(long, default_value_t = 12)]
    pub max_degree: i32,
}

/// Result of one invocation, already routed to the two streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// What a command operates on.
struct Target {
    label: Value,
    module: ModulePresentation,
    complex: Option<CochainComplex>,
}

/// `needs_complex` lets a file with a single complex stand in for `--complex`.
fn load(c: &Common, needs_complex: bool) -> Result<Target, Failure> {
    let path = match (&c.file, &c.ring) {
        (Some(_), Some(_)) => return Err(input_error("give the file either positionally or with --ring")),
        (Some(p), None) | (None, Some(p)) => Some(p),
        (None, None) => None,
    };
    match (path, &c.corpus) {
        (Some(_), Some(_)) => Err(input_error("give either a file or --corpus")),
        (None, None) => Err(input_error("no input: give a presentation file or --corpus")),
        (None, Some(id)) => {
            if c.module.is_some() || c.complex.is_some() {
                return Err(input_error("--module and --complex apply to files"));
            }
            let entry = corpus::lookup(id)?;
            Ok(Target {
                label: json!({ "corpus": entry.id.to_string() }),
                module: entry.module.clone(),
                complex: entry.complex.clone(),
            })
        }
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
            let file = PresentationFile::parse(&text)?;
            let complex = match &c.complex {
                Some(n) => Some(
                    file.complex(n)
                        .ok_or_else(|| input_error(format!("no complex named `{n}`")))?
                        .clone(),
                ),
                None => match file.complexes() {
                    [only] if needs_complex && c.module.is_none() => Some(only.clone()),
                    _ => None,
                },
            };
            let module_name = match (&c.module, &complex) {
                (Some(n), _) => n.clone(),
                (None, Some(nc)) => match &nc.augment {
                    Some(a) => a.clone(),
                    None => nc.modules.first().cloned().unwrap_or_default(),
                },
                (None, None) => match file.modules() {
                    [(n, _)] => n.clone(),
                    [] => return Err(input_error("the file declares no modules")),
                    _ => return Err(input_error("the file declares several modules; choose one with --module")),
                },
            };
            let module = file
                .module(&module_name)
                .ok_or_else(|| input_error(format!("no module named `{module_name}`")))?
                .clone();
            let mut label = json!({ "file": path.display().to_string(), "module": module_name });
            if let Some(nc) = &complex {
                label["complex"] = json!(nc.name);
            }
            Ok(Target {
                label,
                module,
                complex: complex.map(|nc| nc.complex),
            })
        }
    }
}

fn measured_json(m: Measured) -> Value {
    match m {
        Measured::ZeroModule => json!("zero-module"),
        Measured::Value(v) => json!(v),
    }
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'a str,
    input: Value,
    result: Value,
}

pub fn run_command<I, T>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return if e.use_stderr() {
                CommandOutput { code: 2, stdout: String::new(), stderr: e.to_string() }
            } else {
                CommandOutput { code: 0, stdout: e.to_string(), stderr: String::new() }
            };
        }
    };
    let (common, name) = match &cli.command {
        Command::Resolve(c) => (c, "resolve"),
        Command::Betti(c) => (c, "betti"),
        Command::Hilbert(c) => (c, "hilbert"),
        Command::Depth(c) => (c, "depth"),
        Command::Dim(c) => (c, "dim"),
        Command::Ext { common, .. } => (common, "ext"),
        Command::Syzord(c) => (c, "syzord"),
        Command::CmCheck(c) => (c, "cm-check"),
        Command::AbCheck(c) => (c, "ab-check"),
        Command::Corpus { common, .. } => (common, "corpus"),
    };
    let outcome = match &cli.command {
        Command::Corpus { common, emit } => corpus_command(common, *emit),
        cmd => load(common, matches!(cmd, Command::AbCheck(_))).and_then(|t| {
            let (result, human, code) = execute(cmd, common, &t)?;
            Ok((Some((t.label, result)), human, code))
        }),
    };
    match outcome {
        Err(f) => CommandOutput {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
        Ok((None, text, code)) => finish(common, None, text, code),
        Ok((Some((input, result)), human, code)) => {
            let doc = serde_json::to_string_pretty(&Report { command: name, input, result })
                .expect("reports serialize")
                + "\n";
            finish(common, Some(doc), human, code)
        }
    }
}

/// Structured documents go to `--out` or stdout with the summary on
/// stderr; without a document the text goes where the document would.
fn finish(common: &Common, doc: Option<String>, human: String, code: i32) -> CommandOutput {
    let (primary, side) = match (common.format, doc) {
        (Format::Structured, Some(d)) => (d, human),
        (_, _) => (human, String::new()),
    };
    let stdout = match &common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &primary) {
                return CommandOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                };
            }
            String::new()
        }
        None => primary,
    };
    CommandOutput { code, stdout, stderr: side }
}

type Outcome = Result<(Option<(Value, Value)>, String, i32), Failure>;

fn corpus_command(c: &Common, emit: bool) -> Outcome {
    if c.file.is_some() || c.ring.is_some() {
        return Err(input_error("the corpus command takes --corpus, not a file"));
    }
    let ids: Vec<String> = match &c.corpus {
        Some(id) => vec![id.clone()],
        None => corpus::standard_ids(),
    };
    if emit {
        let [id] = &ids[..] else {
            return Err(input_error("--emit needs a single --corpus entry"));
        };
        return Ok((None, corpus::lookup(id)?.to_file().print(), 0));
    }
    let mut entries = Vec::new();
    let mut human = String::new();
    let mut failures = 0;
    for id in &ids {
        let entry = corpus::lookup(id)?;
        let checks = entry.check();
        let ok = checks.iter().all(|c| c.ok);
        failures += usize::from(!ok);
        let _ = writeln!(human, "{} {}", if ok { "ok  " } else { "FAIL" }, entry.id);
        for c in checks.iter().filter(|c| !c.ok) {
            let _ = writeln!(human, "     {}: expected {} got {}", c.fact, c.expected, c.actual);
        }
        entries.push(json!({ "id": entry.id.to_string(), "ok": ok, "facts": checks }));
    }
    let _ = writeln!(human, "{} entries, {} mismatches", ids.len(), failures);
    let input = json!({ "corpus": c.corpus.clone().unwrap_or_else(|| "standard".into()) });
    let result = json!({ "entries": entries, "mismatches": failures });
    Ok((Some((input, result)), human, if failures == 0 { 0 } else { 1 }))
}

fn rows(m: &ModulePresentation, cols: &[crate::vector::Vector], target_rank: usize) -> Vec<Vec<String>> {
    cols.iter()
        .map(|v| v.coordinates(m.ring(), target_rank).iter().map(ToString::to_string).collect())
        .collect()
}

fn execute(cmd: &Command, c: &Common, t: &Target) -> Result<(Value, String, i32), Failure> {
    let m = &t.module;
    let r = m.ring().num_vars();
    let mut human = String::new();
    let result = match cmd {
        Command::Resolve(_) => {
            let res = minimal_free_resolution(m);
            let maps: Vec<Value> = (1..res.modules().len())
                .map(|i| {
                    json!({
                        "index": i,
                        "columns": rows(m, res.differential(i), res.module_shifts(i - 1).len()),
                    })
                })
                .collect();
            let _ = writeln!(human, "ring {}", m.ring());
            for (i, s) in res.modules().iter().enumerate() {
                let _ = writeln!(human, "F{i}: rank {} shifts {:?}", s.len(), s);
            }
            json!({
                "ring": m.ring().to_string(),
                "length": measured_json(res.projective_dimension()),
                "modules": res.modules(),
                "differentials": maps,
                "betti": res.betti().records(),
            })
        }
        Command::Betti(_) => {
            let b = crate::resolution::graded_betti(m);
            human.push_str(&b.grid());
            json!({ "ranks": b.ranks(), "entries": b.records() })
        }
        Command::Hilbert(_) => {
            let hs = crate::resolution::hilbert_series(m);
            let reduced = hs.reduced();
            let low = m.cover_shifts().iter().copied().min().unwrap_or(0);
            let values = if c.max_degree >= low { hs.expand(low, c.max_degree) } else { Vec::new() };
            let function: Vec<Value> = values
                .iter()
                .enumerate()
                .map(|(k, v)| json!([low + k as i32, v]))
                .collect();
            let _ = writeln!(human, "H(q) = {reduced}");
            json!({
                "series": hs.record(),
                "reduced": reduced.record(),
                "function": function,
            })
        }
        Command::Depth(_) => {
            let summary = homalg::summarize(m);
            let ab = match (summary.projective_dimension, summary.depth.finite()) {
                (Measured::Value(pd), Some(d)) => json!(pd + d == r),
                _ => Value::Null,
            };
            let _ = writeln!(human, "depth {} (projective dimension {}, r = {r})", summary.depth, summary.projective_dimension);
            json!({
                "depth": summary.depth,
                "projective_dimension": measured_json(summary.projective_dimension),
                "num_vars": r,
                "auslander_buchsbaum": ab,
            })
        }
        Command::Dim(_) => {
            let d = homalg::krull_dimension(m);
            let _ = writeln!(human, "Krull dimension {d}");
            json!({ "krull_dimension": measured_json(d), "num_vars": r })
        }
        Command::Ext { index, .. } => {
            let all = homalg::ext_modules(m);
            let indices: Vec<usize> = match index {
                Some(i) => vec![*i],
                None => (0..all.len()).collect(),
            };
            let zero = ModulePresentation::zero(m.ring());
            let list: Vec<Value> = indices
                .iter()
                .map(|&i| {
                    let e = all.get(i).unwrap_or(&zero);
                    let hs = crate::resolution::hilbert_series(e).reduced();
                    let _ = writeln!(human, "Ext^{i} = {}", if e.is_zero() { "0".to_string() } else { format!("H(q) = {hs}") });
                    json!({
                        "index": i,
                        "zero": e.is_zero(),
                        "generators": e.cover_shifts(),
                        "hilbert": hs.record(),
                    })
                })
                .collect();
            json!({ "ext": list })
        }
        Command::Syzord(_) => {
            let order = homalg::syzygy_order(m);
            let dd = homalg::double_dual(m);
            let consistent = order.at_least(1) == dd.injective && order.at_least(2) == dd.bijective;
            let _ = writeln!(human, "syzygy order {order}");
            json!({
                "syzygy_order": order,
                "torsion_free": dd.injective,
                "reflexive": dd.bijective,
                "consistent": consistent,
            })
        }
        Command::CmCheck(_) => {
            let support = homalg::ext_support(m);
            let cm = match support.as_slice() {
                [] => json!("zero-module"),
                [i] => json!(i),
                _ => Value::Null,
            };
            let _ = writeln!(human, "Ext support {support:?}");
            let mut out = json!({ "ext_support": support, "cm_projective_dimension": cm });
            if let Some(cx) = &t.complex {
                let rep = cx.check_cm_assumption()?;
                let _ = writeln!(human, "complex terms zero or CM of matching projective dimension: {}", rep.holds);
                out["complex"] = json!(rep);
            }
            out
        }
        Command::AbCheck(_) => {
            let Some(cx) = &t.complex else {
                return Err(input_error("ab-check needs an augmented complex (--complex or a corpus entry with one)"));
            };
            return ab_check(cx, human);
        }
        Command::Corpus { .. } => unreachable!("handled separately"),
    };
    Ok((result, human, 0))
}

fn ab_check(cx: &CochainComplex, mut human: String) -> Result<(Value, String, i32), Failure> {
    let violations = cx.validate();
    if !violations.is_empty() {
        for v in &violations {
            let _ = writeln!(human, "invalid: {v}");
        }
        return Ok((json!({ "valid": false, "violations": violations }), human, 1));
    }
    if cx.augmentation().is_none() {
        return Err(input_error("ab-check needs an augmented complex"));
    }
    let cm = cx.check_cm_assumption()?;
    let profile = cx.exactness_profile()?;
    let _ = writeln!(
        human,
        "exact at {}/{} positions, max j = {}{}",
        profile.positions.iter().filter(|p| p.exact).count(),
        profile.positions.len(),
        profile.max_j,
        if profile.exact_everywhere { " (exact everywhere)" } else { "" }
    );
    let mut result = json!({
        "valid": true,
        "cm_assumption": cm,
        "profile": profile.record(),
    });
    if !cm.holds {
        let _ = writeln!(human, "terms are not zero or CM of matching projective dimension; no cross-check");
        result["crosscheck"] = Value::Null;
        return Ok((result, human, 1));
    }
    let x = cx.exactness_crosscheck()?;
    let _ = writeln!(human, "syzygy order {}; {}", x.syzygy_order, if x.agreement { "agreement for every j" } else { "DISCREPANCY" });
    result["crosscheck"] = json!({
        "syzygy_order": x.syzygy_order,
        "rows": x.rows,
        "agreement": x.agreement,
        "discrepancies": x.discrepancies(),
    });
    let code = if x.agreement { 0 } else { 1 };
    Ok((result, human, code))
}
