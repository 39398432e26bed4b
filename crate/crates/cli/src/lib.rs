//! Command-line front end.
//!
//! Exit codes: 0 affirmative answer or success, 1 negative answer, 2 unknown,
//! 64 usage error, 65 input format error.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tai::closure::{
    bounded_closure, decide_entailment, decide_general_entailment, default_max_rounds, default_window,
    pseudo_lin_closure, Budget, EntailmentStatus, EntailmentVerdict, GeneralOptions,
};
use tai::complexity::{export_ltl, gen_subset_sum_theory, solve_subset_sum_dp, SubsetSumInstance, DEFAULT_DP_CAP};
use tai::grounding::Window;
use tai::mining::{mine, parse_confidence, reduce_theory, report_tsv, rules_to_theory, MiningParams};
use tai::proofs::{check_proof, format_proof, parse_proof, prove_by_closure, translate, CheckResult, RuleSetName};
use tai::semantics::{check_theory_validity, violating_shifts};
use tai::textio::{ingest_csv, parse_implication, parse_set, parse_theory, serialize_theory, Warning};
use tai::{AttributeSet, Implication, Theory};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_FORMAT: i32 = 65;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Format(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Format(_) | CliError::Io(_) => EXIT_FORMAT,
        }
    }
}

impl From<tai::Error> for CliError {
    fn from(e: tai::Error) -> Self {
        match e {
            tai::Error::InvalidParams(_) | tai::Error::InvalidWindow(_) | tai::Error::CapExceeded { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Format(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "tai", version, about = "Reasoning with attribute implications annotated by time points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validity of every theory formula in a dataset.
    Check(CheckArgs),
    /// Closure of a seed set under a theory.
    Closure(ClosureArgs),
    /// Decide whether a theory entails a query.
    Entail(EntailArgs),
    /// Emit a proof of an entailed predictive query.
    Prove(ProveArgs),
    /// Check a proof against a theory and rule set.
    Verify(VerifyArgs),
    /// Mine predictive rules from a dataset.
    Mine(MineArgs),
    /// Remove formulas entailed by the remaining ones.
    Reduce(ReduceArgs),
    /// Entailment instance from unbounded subset sum.
    GenSubsetsum(GenArgs),
    /// Translate an entailment question to temporal logic.
    ExportLtl(ExportArgs),
}

#[derive(Debug, Args)]
struct TheoryArg {
    /// Theory file, `-` for standard input, or inline formulas.
    #[arg(long)]
    theory: String,
}

#[derive(Debug, Args)]
struct QueryArg {
    /// Inline query formula; takes precedence over --query-file.
    #[arg(long, allow_hyphen_values = true)]
    query: Option<String>,
    #[arg(long)]
    query_file: Option<String>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// CSV dataset or `-`.
    #[arg(long)]
    data: String,
    #[command(flatten)]
    theory: TheoryArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct ClosureArgs {
    #[command(flatten)]
    theory: TheoryArg,
    #[arg(long)]
    seed: String,
    /// Largest time point (predictive mode). Defaults to u(seed).
    #[arg(long, allow_hyphen_values = true)]
    max: Option<i64>,
    /// Windowed iteration for arbitrary theories.
    #[arg(long)]
    general: bool,
    /// Window `LO:HI` (general mode).
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    /// Round limit (general mode). Defaults to 10·|Σ|·width.
    #[arg(long)]
    rounds: Option<usize>,
    /// Window padding factor when no window is given (general mode).
    #[arg(long, default_value_t = 4)]
    k: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct EntailArgs {
    #[command(flatten)]
    theory: TheoryArg,
    #[command(flatten)]
    query: QueryArg,
    /// Use the bounded semi-decision even for predictive inputs.
    #[arg(long)]
    general: bool,
    #[arg(long, default_value_t = 4)]
    k: i64,
    #[arg(long)]
    rounds: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct ProveArgs {
    #[command(flatten)]
    theory: TheoryArg,
    #[command(flatten)]
    query: QueryArg,
    /// Rule set of the emitted proof.
    #[arg(long, default_value = "NORMALIZED")]
    rules: String,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Proof file or `-`.
    #[arg(long)]
    proof: String,
    #[command(flatten)]
    theory: TheoryArg,
    #[arg(long, default_value = "AX_CUT_SHF")]
    rules: String,
    /// Also require the proof to end in this formula.
    #[command(flatten)]
    query: QueryArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct MineArgs {
    #[arg(long)]
    data: String,
    #[arg(long)]
    maxspan: i64,
    #[arg(long)]
    min_support: usize,
    /// Rational in (0, 1], e.g. `1`, `3/4` or `0.75`.
    #[arg(long, default_value = "1")]
    min_confidence: String,
    #[arg(long, default_value_t = 3)]
    max_antecedent: usize,
    #[arg(long, default_value_t = 3)]
    max_consequent: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the tab-separated rule report here.
    #[arg(long)]
    report: Option<String>,
    /// Reduce the mined theory before printing it.
    #[arg(long)]
    reduce: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    #[command(flatten)]
    theory: TheoryArg,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Comma-separated non-negative integers.
    #[arg(long)]
    values: String,
    #[arg(long)]
    target: u64,
    /// Largest target the dynamic-programming check accepts.
    #[arg(long, default_value_t = DEFAULT_DP_CAP)]
    dp_cap: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct ExportArgs {
    #[command(flatten)]
    theory: TheoryArg,
    #[command(flatten)]
    query: QueryArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_source(&mut self, source: &str) -> CliResult<String> {
        if source == "-" {
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| CliError::Io(format!("standard input: {e}")))?;
            return Ok(text);
        }
        fs::read_to_string(source).map_err(|e| CliError::Io(format!("{source}: {e}")))
    }

    /// Path, `-`, or inline text (anything containing `=>` that is not a file).
    fn read_theory(&mut self, source: &str) -> CliResult<Theory> {
        let text = if source != "-" && !Path::new(source).is_file() && source.contains("=>") {
            source.to_string()
        } else {
            self.read_source(source)?
        };
        let doc = parse_theory(&text).map_err(|e| CliError::Format(format!("{source}: {e}")))?;
        for w in &doc.warnings {
            let Warning::DuplicateAtom { atom, pos } = w;
            let _ = writeln!(self.err, "warning: {source}:{}:{}: duplicate atom {atom}", pos.line, pos.column);
        }
        Ok(doc.theory)
    }

    fn read_query(&mut self, q: &QueryArg) -> CliResult<Implication> {
        let text = match (&q.query, &q.query_file) {
            (Some(inline), _) => inline.clone(),
            (None, Some(file)) => self.read_source(file)?,
            (None, None) => return Err(CliError::Usage("missing --query or --query-file".into())),
        };
        parse_implication(strip_comments(&text).trim()).map_err(|e| CliError::Format(format!("query: {e}")))
    }

    fn emit(&mut self, text: &str) -> CliResult<()> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("output: {e}")))
    }

    fn emit_json(&mut self, value: &Value) -> CliResult<()> {
        let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
        self.emit(&format!("{text}\n"))
    }
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_window(text: &str) -> CliResult<Window> {
    let bad = || CliError::Usage(format!("window must look like LO:HI, found {text:?}"));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    Ok(Window::new(lo, hi)?)
}

fn parse_rule_set(text: &str) -> CliResult<RuleSetName> {
    text.parse().map_err(|e: tai::Error| CliError::Usage(e.to_string()))
}

fn status_code(status: EntailmentStatus) -> i32 {
    match status {
        EntailmentStatus::Entailed => EXIT_OK,
        EntailmentStatus::NotEntailed => EXIT_NEGATIVE,
        EntailmentStatus::Unknown => EXIT_UNKNOWN,
    }
}

fn status_key(status: EntailmentStatus) -> &'static str {
    match status {
        EntailmentStatus::Entailed => "entailed",
        EntailmentStatus::NotEntailed => "not_entailed",
        EntailmentStatus::Unknown => "unknown",
    }
}

fn budget_json(b: &Budget) -> Value {
    match *b {
        Budget::Predictive { max } => json!({"mode": "predictive", "max": max}),
        Budget::Bounded { window, max_rounds } => {
            json!({"mode": "bounded", "window": [window.lo, window.hi], "max_rounds": max_rounds})
        }
    }
}

fn budget_text(b: &Budget) -> String {
    match *b {
        Budget::Predictive { max } => format!("budget: predictive max={max}"),
        Budget::Bounded { window, max_rounds } => {
            format!("budget: window=[{}, {}] rounds={max_rounds}", window.lo, window.hi)
        }
    }
}

fn cmd_check(io: &mut Io<'_>, a: &CheckArgs) -> CliResult<i32> {
    let data = io.read_source(&a.data)?;
    let table = ingest_csv(&data).map_err(|e| CliError::Format(format!("{}: {e}", a.data)))?;
    let m = table.to_timed_set();
    let theory = io.read_theory(&a.theory.theory)?;
    let results = check_theory_validity(&m, &theory);
    let all = results.iter().all(|(_, r)| r.holds);
    match a.format {
        Format::Text => {
            let mut out = String::new();
            for (f, r) in &results {
                match r.counterexample_shift {
                    None => out.push_str(&format!("HOLDS {f}\n")),
                    Some(i) => {
                        out.push_str(&format!("FAILS {f} shift={i}"));
                        let all = violating_shifts(&m, f);
                        if all.len() > 1 {
                            let all: Vec<String> = all.iter().map(ToString::to_string).collect();
                            out.push_str(&format!(" shifts={}", all.join(",")));
                        }
                        out.push('\n');
                    }
                }
            }
            io.emit(&out)?;
        }
        Format::Json => {
            let rows: Vec<Value> = results
                .iter()
                .map(|(f, r)| {
                    json!({
                        "formula": f.to_string(),
                        "holds": r.holds,
                        "shift": r.counterexample_shift,
                        "violating_shifts": violating_shifts(&m, f),
                    })
                })
                .collect();
            io.emit_json(&json!({"all_hold": all, "results": rows}))?;
        }
    }
    Ok(if all { EXIT_OK } else { EXIT_NEGATIVE })
}

fn set_json(s: &AttributeSet) -> Value {
    Value::Array(s.iter().map(|a| Value::String(a.to_string())).collect())
}

fn cmd_closure(io: &mut Io<'_>, a: &ClosureArgs) -> CliResult<i32> {
    let theory = io.read_theory(&a.theory.theory)?;
    let seed = parse_set(&a.seed).map_err(|e| CliError::Format(format!("seed: {e}")))?;
    if !a.general {
        if a.window.is_some() || a.rounds.is_some() {
            return Err(CliError::Usage("--window and --rounds need --general".into()));
        }
        theory.require_predictive()?;
        let max = match a.max {
            Some(m) => m,
            None => seed.upper().ok_or(CliError::Usage("--max is required for an empty seed".into()))?,
        };
        let trace = pseudo_lin_closure(&theory, &seed, max)?;
        match a.format {
            Format::Text => io.emit(&format!("{}\n", trace.final_set))?,
            Format::Json => io.emit_json(&json!({
                "mode": "predictive",
                "max": max,
                "final_set": set_json(&trace.final_set),
                "firings": trace.firings.len(),
                "instances": trace.stats.instances,
                "updates": trace.stats.updates,
                "max_updates_per_atom": trace.stats.max_updates_per_atom,
            }))?,
        }
        return Ok(EXIT_OK);
    }
    if a.max.is_some() {
        return Err(CliError::Usage("--max is for predictive closures; use --window".into()));
    }
    let window = match &a.window {
        Some(w) => parse_window(w)?,
        None => default_window(&theory, &Implication::new(seed.clone(), AttributeSet::new()), a.k)?,
    };
    let rounds = a.rounds.unwrap_or_else(|| default_max_rounds(&theory, window));
    let (trace, saturated) = bounded_closure(&theory, &seed, window, rounds)?;
    match a.format {
        Format::Text => {
            let state = if saturated { "saturated" } else { "not saturated" };
            io.emit(&format!(
                "{}\n{state} after {} round(s) in [{}, {}]\n",
                trace.final_set, trace.stats.rounds, window.lo, window.hi
            ))?;
        }
        Format::Json => io.emit_json(&json!({
            "mode": "bounded",
            "window": [window.lo, window.hi],
            "max_rounds": rounds,
            "rounds": trace.stats.rounds,
            "saturated": saturated,
            "final_set": set_json(&trace.final_set),
            "firings": trace.firings.len(),
        }))?,
    }
    Ok(if saturated { EXIT_OK } else { EXIT_UNKNOWN })
}

fn entail(a: &EntailArgs, theory: &Theory, query: &Implication) -> CliResult<EntailmentVerdict> {
    let opts = GeneralOptions {
        window: a.window.as_deref().map(parse_window).transpose()?,
        k: a.k,
        max_rounds: a.rounds,
    };
    Ok(if a.general {
        decide_general_entailment(theory, query, opts)?
    } else {
        decide_entailment(theory, query, opts)?
    })
}

fn cmd_entail(io: &mut Io<'_>, a: &EntailArgs) -> CliResult<i32> {
    let theory = io.read_theory(&a.theory.theory)?;
    let query = io.read_query(&a.query)?;
    let v = entail(a, &theory, &query)?;
    match a.format {
        Format::Text => {
            let mut out = format!("{}\n", v.status);
            if let Some(c) = &v.certificate {
                out.push_str(&format!("missing: {}\n", c.missing));
            }
            if v.status == EntailmentStatus::Unknown {
                out.push_str(&budget_text(&v.budget));
                out.push('\n');
            }
            io.emit(&out)?;
        }
        Format::Json => io.emit_json(&json!({
            "status": status_key(v.status),
            "query": query.to_string(),
            "budget": budget_json(&v.budget),
            "closure": set_json(&v.trace.final_set),
            "missing": v.certificate.as_ref().map(|c| set_json(&c.missing)),
            "rounds": v.trace.stats.rounds,
            "firings": v.trace.firings.len(),
        }))?,
    }
    Ok(status_code(v.status))
}

fn cmd_prove(io: &mut Io<'_>, a: &ProveArgs) -> CliResult<i32> {
    let theory = io.read_theory(&a.theory.theory)?;
    let query = io.read_query(&a.query)?;
    let rules = parse_rule_set(&a.rules)?;
    match prove_by_closure(&theory, &query)? {
        Some(p) => {
            let p = if rules == RuleSetName::Normalized {
                p
            } else {
                translate(&p, rules)?
            };
            io.emit(&format_proof(&p))?;
            Ok(EXIT_OK)
        }
        None => {
            let _ = writeln!(io.err, "query is not entailed; no proof exists");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_verify(io: &mut Io<'_>, a: &VerifyArgs) -> CliResult<i32> {
    let theory = io.read_theory(&a.theory.theory)?;
    let rules = parse_rule_set(&a.rules)?;
    let text = io.read_source(&a.proof)?;
    let proof = parse_proof(&text, theory, rules).map_err(|e| CliError::Format(format!("{}: {e}", a.proof)))?;
    let expected = if a.query.query.is_some() || a.query.query_file.is_some() {
        Some(io.read_query(&a.query)?)
    } else {
        None
    };
    let mut result = check_proof(&proof);
    if let (CheckResult::Valid, Some(q)) = (&result, &expected) {
        if proof.conclusion() != Some(q) {
            result = CheckResult::Invalid {
                step: proof.len(),
                reason: format!("proof concludes {} instead of {q}", display_conclusion(&proof)),
            };
        }
    }
    match a.format {
        Format::Text => match &result {
            CheckResult::Valid => io.emit(&format!("VALID {} step(s) in {rules}\n", proof.len()))?,
            CheckResult::Invalid { step, reason } => io.emit(&format!("INVALID step {step}: {reason}\n"))?,
        },
        Format::Json => {
            let v = match &result {
                CheckResult::Valid => json!({"valid": true, "steps": proof.len(), "rules": rules.name()}),
                CheckResult::Invalid { step, reason } => {
                    json!({"valid": false, "steps": proof.len(), "rules": rules.name(), "step": step, "reason": reason})
                }
            };
            io.emit_json(&v)?;
        }
    }
    Ok(if result.is_valid() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn display_conclusion(p: &tai::proofs::Proof) -> String {
    p.conclusion().map_or_else(|| "nothing".to_string(), ToString::to_string)
}

fn cmd_mine(io: &mut Io<'_>, a: &MineArgs) -> CliResult<i32> {
    let data = io.read_source(&a.data)?;
    let table = ingest_csv(&data).map_err(|e| CliError::Format(format!("{}: {e}", a.data)))?;
    let m = table.to_timed_set();
    let mut params = MiningParams::new(a.maxspan, a.min_support, parse_confidence(&a.min_confidence)?)?;
    params.max_antecedent = a.max_antecedent;
    params.max_consequent = a.max_consequent;
    params.jobs = a.jobs;
    params.validate()?;
    let rules = mine(&m, &params)?;
    if let Some(path) = &a.report {
        fs::write(path, report_tsv(&rules)).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    }
    let mined = rules_to_theory(&rules);
    let theory = if a.reduce { reduce_theory(&mined)? } else { mined };
    let _ = writeln!(io.err, "mined {} rule(s); printing {}", rules.len(), theory.len());
    match a.format {
        Format::Text => io.emit(&serialize_theory(&theory))?,
        Format::Json => {
            let mined: Vec<Value> = rules
                .iter()
                .map(|r| {
                    json!({"rule": r.rule.to_string(), "support": r.support, "confidence": r.confidence.to_string()})
                })
                .collect();
            let printed: Vec<Value> = theory.iter().map(|f| Value::String(f.to_string())).collect();
            io.emit_json(&json!({"mined": mined, "theory": printed}))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_reduce(io: &mut Io<'_>, a: &ReduceArgs) -> CliResult<i32> {
    let theory = io.read_theory(&a.theory.theory)?;
    let reduced = reduce_theory(&theory)?;
    let _ = writeln!(io.err, "kept {} of {} formula(s)", reduced.len(), theory.len());
    io.emit(&serialize_theory(&reduced))?;
    Ok(EXIT_OK)
}

fn cmd_gen(io: &mut Io<'_>, a: &GenArgs) -> CliResult<i32> {
    let inst = SubsetSumInstance {
        values: SubsetSumInstance::parse_values(&a.values)?,
        target: a.target,
    };
    let (theory, query) = gen_subset_sum_theory(&inst)?;
    let answer = match solve_subset_sum_dp(&inst, a.dp_cap) {
        Ok(b) => Some(b),
        Err(e @ tai::Error::CapExceeded { .. }) => {
            let _ = writeln!(io.err, "note: {e}; reachability not computed");
            None
        }
        Err(e) => return Err(e.into()),
    };
    match a.format {
        Format::Text => {
            let values: Vec<String> = inst.values.iter().map(ToString::to_string).collect();
            let mut out = format!(
                "# values {}; target {}; reachable: {}\n# query: {query}\n",
                values.join(", "),
                inst.target,
                match answer {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "not computed",
                }
            );
            out.push_str(&serialize_theory(&theory));
            io.emit(&out)?;
        }
        Format::Json => {
            let formulas: Vec<Value> = theory.iter().map(|f| Value::String(f.to_string())).collect();
            io.emit_json(&json!({"theory": formulas, "query": query.to_string(), "reachable": answer}))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_export(io: &mut Io<'_>, a: &ExportArgs) -> CliResult<i32> {
    let theory = io.read_theory(&a.theory.theory)?;
    let query = io.read_query(&a.query)?;
    let doc = export_ltl(&theory, &query);
    match a.format {
        Format::Text => io.emit(&doc.text())?,
        Format::Json => {
            let c = doc.counts;
            io.emit_json(&json!({
                "formula": doc.formula,
                "counts": {
                    "always": c.always,
                    "next": c.next,
                    "previous": c.previous,
                    "max_next_depth": c.max_next_depth,
                    "max_previous_depth": c.max_previous_depth,
                },
            }))?;
        }
    }
    Ok(EXIT_OK)
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    let result = match &cli.command {
        Command::Check(a) => cmd_check(&mut io, a),
        Command::Closure(a) => cmd_closure(&mut io, a),
        Command::Entail(a) => cmd_entail(&mut io, a),
        Command::Prove(a) => cmd_prove(&mut io, a),
        Command::Verify(a) => cmd_verify(&mut io, a),
        Command::Mine(a) => cmd_mine(&mut io, a),
        Command::Reduce(a) => cmd_reduce(&mut io, a),
        Command::GenSubsetsum(a) => cmd_gen(&mut io, a),
        Command::ExportLtl(a) => cmd_export(&mut io, a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            e.exit_code()
        }
    }
}
