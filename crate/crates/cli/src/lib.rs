//! Command-line front end for `lqsdepth`.
//!
//! Every command builds a [`Report`]: a flat map with sorted keys that renders
//! either as `key: value` lines or as JSON. [`run`] parses arguments, runs a
//! command, and returns the text to print together with the exit code, so the
//! whole front end can be driven in-process.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use lqsdepth::stanley::{best_partition, partition_to_decomposition};
use lqsdepth::theorems::{
    combinatorial_witness, conditional_chain_verify, conjecture_report, find_principal_collapse,
    run_iterative_pipeline, run_sweep, ChainVerdict, ConjectureKind, ConjectureReport,
    InstanceRecord, PipelineOutcome, RandomParams, SweepConfig, SweepSummary,
};
use lqsdepth::{
    betti_numbers, depth_oracle, depth_via_linear_quotients, find_admissible_order,
    linear_quotient_decomposition, parse_decomposition, parse_ideal, render_decomposition,
    sdepth_exact, sdepth_of_decomposition, verify_decomposition, AdmissibleOrder, Error, Execution,
    Limits, MonomialIdeal, TargetKind,
};
use serde_json::{Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(
    name = "lqsdepth",
    version,
    about = "Depth and Stanley depth of monomial ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full report: order, depth, sdepth, witnesses, pipeline.
    Analyze(IdealArgs),
    /// Exact Stanley depth with a decomposition attaining it.
    Sdepth(IdealArgs),
    /// Depth of S/I from Betti numbers, and from the order when there is one.
    Depth(IdealArgs),
    /// Admissible order, colon sets and the induced decomposition of I.
    Lq(IdealArgs),
    /// Print an optimal Stanley decomposition, or check one with --check.
    Decompose(DecomposeArgs),
    /// Multigraded Betti numbers of I.
    Betti(IdealArgs),
    /// Principal collapse witness for an ideal with linear quotients.
    Collapse(IdealArgs),
    /// Witness scans for both conjectures and the certified chain.
    Conjecture(IdealArgs),
    /// Iterated quotient transforms along the admissible order.
    Pipeline(IdealArgs),
    /// Theorem battery over random ideals with linear quotients.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Ideal,
    Quotient,
}

impl From<TargetArg> for TargetKind {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::Ideal => TargetKind::Ideal,
            TargetArg::Quotient => TargetKind::Quotient,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Module whose Stanley depth is computed.
    #[arg(long, value_enum, default_value = "quotient")]
    pub target: TargetArg,
    /// Recorded in the report; sweeps derive every instance from it.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
    /// Node budget for the exact sdepth search and the order search.
    #[arg(long)]
    pub max_states: Option<u64>,
    /// Directory for NOTABLE findings, one file per instance.
    #[arg(long)]
    pub findings_dir: Option<PathBuf>,
    /// Run without the thread pool.
    #[arg(long)]
    pub sequential: bool,
}

impl Common {
    fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(s) = self.max_states {
            limits.max_search_nodes = s;
            limits.max_order_states = s;
        }
        if self.sequential {
            limits.execution = Execution::Sequential;
        }
        limits
    }
}

#[derive(Args, Debug, Clone)]
pub struct IdealArgs {
    /// Ideal such as "n=4; x1^2, x1*x2^2, x1*x2*x3^2".
    pub ideal: Option<String>,
    /// Read the ideal from a file instead.
    #[arg(long, conflicts_with = "ideal")]
    pub file: Option<PathBuf>,
    /// Leave out the exponential sdepth search.
    #[arg(long)]
    pub skip_sdepth: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub input: IdealArgs,
    /// Verify a decomposition file instead of computing one.
    #[arg(long)]
    pub check: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 4)]
    pub m: usize,
    #[arg(long, default_value_t = 3)]
    pub deg: u32,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[command(flatten)]
    pub common: Common,
}

/// How a run ended; maps onto the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Notable,
    Usage,
    Violation,
    ResourceCap,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok | Status::Notable => 0,
            Status::Usage => 1,
            Status::Violation => 2,
            Status::ResourceCap => 3,
        }
    }

    /// The more severe of the two; a violation outranks a cap.
    fn worst(self, other: Status) -> Status {
        let rank = |s: Status| match s {
            Status::Ok => 0,
            Status::Notable => 1,
            Status::ResourceCap => 2,
            Status::Usage => 3,
            Status::Violation => 4,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

pub fn status_of_error(e: &Error) -> Status {
    match e {
        Error::ResourceCap { .. } => Status::ResourceCap,
        Error::TheoremViolation(_) | Error::Structural(_) => Status::Violation,
        _ => Status::Usage,
    }
}

/// Flat key-value report with sorted keys.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    fields: Map<String, Value>,
    pub status: Option<Status>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        let mut r = Report::default();
        r.set("command", command);
        r.set("seed", seed);
        r.set("version", VERSION);
        r
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.to_string(), value.into());
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn fields(&self) -> &Map<String, Value> {
        &self.fields
    }

    fn mark(&mut self, s: Status) {
        self.status = Some(self.status.unwrap_or(Status::Ok).worst(s));
    }

    /// Runs `f`; a resource cap or a theorem violation is written under
    /// `key` instead of aborting the report.
    fn attempt<T>(
        &mut self,
        key: &str,
        f: impl FnOnce() -> lqsdepth::Result<T>,
    ) -> Result<Option<T>, Error> {
        match f() {
            Ok(v) => Ok(Some(v)),
            Err(e @ Error::ResourceCap { .. }) => {
                self.set(key, format!("omitted ({e})"));
                self.mark(Status::ResourceCap);
                Ok(None)
            }
            Err(e @ Error::TheoremViolation(_)) => {
                self.set(key, format!("VIOLATION ({e})"));
                self.mark(Status::Violation);
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            match v {
                Value::Array(items) => {
                    let _ = writeln!(out, "{k}:");
                    for item in items {
                        let _ = writeln!(out, "  {}", scalar(item));
                    }
                }
                other => {
                    let _ = writeln!(out, "{k}: {}", scalar(other));
                }
            }
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&Value::Object(self.fields.clone()))
            .expect("report values serialize");
        s.push('\n');
        s
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.render_json()
        } else {
            self.render_text()
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn lines(text: impl AsRef<str>) -> Value {
    Value::Array(
        text.as_ref()
            .lines()
            .map(|l| Value::String(l.to_string()))
            .collect(),
    )
}

fn var_name(i: usize) -> String {
    format!("x{}", i + 1)
}

fn order_lines(order: &AdmissibleOrder) -> Value {
    Value::Array(
        (1..=order.m())
            .map(|j| {
                let z = order.colon_vars(j);
                let colon = if j == 1 {
                    "-".to_string()
                } else {
                    format!(
                        "({})",
                        z.iter().map(var_name).collect::<Vec<_>>().join(", ")
                    )
                };
                Value::String(format!(
                    "u{j} = {}  colon {colon}",
                    order.generators()[j - 1]
                ))
            })
            .collect(),
    )
}

/// Output of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn read_ideal(args: &IdealArgs) -> Result<MonomialIdeal, String> {
    let text = match (&args.ideal, &args.file) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => {
            fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
        }
        (None, None) => return Err("an ideal or --file is required".into()),
    };
    parse_ideal(text.trim()).map_err(|e| format!("invalid ideal: {e}"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return RunOutput {
                stdout,
                stderr,
                code,
            };
        }
    };
    execute(&cli.command)
}

pub fn execute(command: &Command) -> RunOutput {
    let fail = |status: Status, msg: String| RunOutput {
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
        code: status.code(),
    };
    if let Command::Sweep(args) = command {
        return match cmd_sweep(args) {
            Ok(out) => out,
            Err(e) => fail(status_of_error(&e), e.to_string()),
        };
    }
    let (input, name) = match command {
        Command::Analyze(a) => (a, "analyze"),
        Command::Sdepth(a) => (a, "sdepth"),
        Command::Depth(a) => (a, "depth"),
        Command::Lq(a) => (a, "lq"),
        Command::Decompose(d) => (&d.input, "decompose"),
        Command::Betti(a) => (a, "betti"),
        Command::Collapse(a) => (a, "collapse"),
        Command::Conjecture(a) => (a, "conjecture"),
        Command::Pipeline(a) => (a, "pipeline"),
        Command::Sweep(_) => unreachable!(),
    };
    let ideal = if let Command::Decompose(DecomposeArgs { check: Some(_), .. }) = command {
        None
    } else {
        match read_ideal(input) {
            Ok(i) => Some(i),
            Err(msg) => return fail(Status::Usage, msg),
        }
    };
    let common = &input.common;
    let limits = common.limits();
    let mut report = Report::new(name, common.seed);
    if let Some(i) = &ideal {
        report.set("ideal", i.to_string());
        report.set("n", i.n());
        report.set("generators", i.num_gens());
    }
    let result = match (command, &ideal) {
        (Command::Decompose(d), _) if d.check.is_some() => {
            cmd_check(&mut report, d.check.as_deref().expect("checked"))
        }
        (Command::Analyze(a), Some(i)) => cmd_analyze(&mut report, i, a, &limits),
        (Command::Sdepth(a), Some(i)) => {
            cmd_sdepth(&mut report, i, a.common.target.into(), &limits)
        }
        (Command::Depth(_), Some(i)) => cmd_depth(&mut report, i, &limits),
        (Command::Lq(_), Some(i)) => cmd_lq(&mut report, i, &limits),
        (Command::Decompose(d), Some(i)) => {
            return match best_partition(i, d.input.common.target.into(), &limits)
                .and_then(|(_, p)| partition_to_decomposition(&p))
            {
                Ok(dec) if !common.json => RunOutput {
                    stdout: render_decomposition(&dec),
                    stderr: String::new(),
                    code: 0,
                },
                Ok(dec) => {
                    report.set("sdepth", sdepth_of_decomposition(&dec).unwrap_or(0));
                    report.set("decomposition", lines(render_decomposition(&dec)));
                    RunOutput {
                        stdout: report.render_json(),
                        stderr: String::new(),
                        code: 0,
                    }
                }
                Err(e) => fail(status_of_error(&e), e.to_string()),
            };
        }
        (Command::Betti(_), Some(i)) => cmd_betti(&mut report, i, &limits),
        (Command::Collapse(_), Some(i)) => cmd_collapse(&mut report, i, &limits),
        (Command::Conjecture(_), Some(i)) => cmd_conjecture(&mut report, i, common, &limits),
        (Command::Pipeline(_), Some(i)) => cmd_pipeline(&mut report, i, &limits),
        _ => unreachable!("ideal is parsed for every command but decompose --check"),
    };
    match result {
        Ok(()) => {
            let status = report.status.unwrap_or(Status::Ok);
            RunOutput {
                stdout: report.render(common.json),
                stderr: String::new(),
                code: status.code(),
            }
        }
        Err(e) => fail(status_of_error(&e), e.to_string()),
    }
}

fn require_order(ideal: &MonomialIdeal, limits: &Limits) -> Result<AdmissibleOrder, Error> {
    find_admissible_order(ideal, limits)?
        .ok_or_else(|| Error::Precondition(format!("{ideal} does not have linear quotients")))
}

fn cmd_analyze(
    r: &mut Report,
    ideal: &MonomialIdeal,
    args: &IdealArgs,
    limits: &Limits,
) -> Result<(), Error> {
    let n = ideal.n();
    let target: TargetKind = args.common.target.into();
    r.set("sdepth.target", target.to_string());

    let order = r
        .attempt("linear_quotients", || find_admissible_order(ideal, limits))?
        .flatten();
    let depth = r.attempt("depth.oracle", || depth_oracle(ideal, limits))?;
    if let Some(d) = depth {
        r.set("depth.oracle", d);
    }
    match &order {
        Some(o) => {
            r.set("linear_quotients", true);
            r.set("order", order_lines(o));
            let formula = depth_via_linear_quotients(o);
            r.set("depth.formula", formula);
            if depth.is_some_and(|d| d != formula) {
                r.set("depth.formula", format!("VIOLATION ({formula} != oracle)"));
                r.mark(Status::Violation);
            }
            let lq = linear_quotient_decomposition(o);
            r.set("sdepth.ideal_lower_bound", sdepth_of_decomposition(&lq)?);
        }
        None if r.get("linear_quotients").is_none() => {
            r.set("linear_quotients", false);
            r.set("order", "none");
        }
        None => {}
    }

    if args.skip_sdepth {
        r.set("sdepth.exact", "skipped");
    } else if let Some(s) = r.attempt("sdepth.exact", || sdepth_exact(ideal, target, limits))? {
        r.set("sdepth.exact", s);
    }

    let Some(o) = order else {
        return Ok(());
    };
    match r.attempt("pipeline", || run_iterative_pipeline(&o))? {
        Some(PipelineOutcome::Complete(t)) => {
            r.set(
                "pipeline",
                format!("complete after {} steps", t.steps.len()),
            );
            r.set("sdepth.quotient_lower_bound", t.final_sdepth());
        }
        Some(PipelineOutcome::Stuck { step, reason, .. }) => {
            r.set("pipeline", format!("stuck at step {step}: {reason}"));
        }
        None => {}
    }
    if let Some(w) = r.attempt("witness.collapse", || find_principal_collapse(&o, limits))? {
        r.set(
            "witness.collapse",
            format!("tau = {{{}}}, u = {}", w.tau, w.u),
        );
    }
    if let Some(c) = r.attempt("witness.conjecture", || {
        conjecture_report(ideal, false, limits)
    })? {
        r.set("witness.conjecture", witness_text(&c));
    }
    if args.skip_sdepth {
        r.set("witness.strong_conjecture", "skipped");
    } else if let Some(c) = r.attempt("witness.strong_conjecture", || {
        conjecture_report(ideal, true, limits)
    })? {
        r.set("witness.strong_conjecture", witness_text(&c));
    }
    r.set(
        "witness.combinatorial",
        combinatorial_witness(&o).map_or("none".to_string(), var_name),
    );
    if n >= 2 && depth == Some(n - 2) && !args.skip_sdepth && target == TargetKind::Quotient {
        if let Some(Value::Number(s)) = r.get("sdepth.exact") {
            if s.as_u64() != Some((n - 2) as u64) {
                r.set("check.depth_nminus2", "VIOLATION");
                r.mark(Status::Violation);
            } else {
                r.set("check.depth_nminus2", "holds");
            }
        }
    }
    Ok(())
}

fn witness_text(c: &ConjectureReport) -> String {
    c.witness.map_or("none (NOTABLE)".to_string(), var_name)
}

fn cmd_sdepth(
    r: &mut Report,
    ideal: &MonomialIdeal,
    target: TargetKind,
    limits: &Limits,
) -> Result<(), Error> {
    let (t, p) = best_partition(ideal, target, limits)?;
    let d = partition_to_decomposition(&p)?;
    r.set("target", target.to_string());
    r.set("sdepth", t);
    r.set("decomposition", lines(d.to_string()));
    Ok(())
}

fn cmd_depth(r: &mut Report, ideal: &MonomialIdeal, limits: &Limits) -> Result<(), Error> {
    let t = betti_numbers(ideal, limits)?;
    r.set("depth.oracle", t.depth_quotient());
    r.set("pd.quotient", t.pd_quotient());
    if let Some(o) = find_admissible_order(ideal, limits)? {
        let f = depth_via_linear_quotients(&o);
        r.set("depth.formula", f);
        if f != t.depth_quotient() {
            r.mark(Status::Violation);
        }
    } else {
        r.set("depth.formula", "none (no linear quotients)");
    }
    Ok(())
}

fn cmd_lq(r: &mut Report, ideal: &MonomialIdeal, limits: &Limits) -> Result<(), Error> {
    match find_admissible_order(ideal, limits)? {
        Some(o) => {
            let d = linear_quotient_decomposition(&o);
            r.set("linear_quotients", true);
            r.set("order", order_lines(&o));
            r.set("depth.formula", depth_via_linear_quotients(&o));
            r.set("decomposition", lines(d.to_string()));
            r.set("decomposition.sdepth", sdepth_of_decomposition(&d)?);
            r.set("decomposition.verified", verify_decomposition(&d)?);
        }
        None => {
            r.set("linear_quotients", false);
            r.set("order", "none");
        }
    }
    Ok(())
}

fn cmd_check(r: &mut Report, path: &Path) -> Result<(), Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    let d = parse_decomposition(&text)?;
    r.set("ideal", d.target().ideal().to_string());
    r.set("target", d.target().kind().to_string());
    r.set("pieces", d.pieces().len());
    r.set("verified", verify_decomposition(&d)?);
    r.set("sdepth", sdepth_of_decomposition(&d)?);
    Ok(())
}

fn cmd_betti(r: &mut Report, ideal: &MonomialIdeal, limits: &Limits) -> Result<(), Error> {
    let t = betti_numbers(ideal, limits)?;
    r.set(
        "betti",
        Value::Array(
            t.entries()
                .map(|(i, a, b)| Value::String(format!("beta_{i},{a} = {b}")))
                .collect(),
        ),
    );
    r.set(
        "totals",
        Value::Array(
            (0..=t.pd_ideal())
                .map(|i| Value::String(format!("beta_{i} = {}", t.total(i))))
                .collect(),
        ),
    );
    r.set("pd.ideal", t.pd_ideal());
    r.set("depth.oracle", t.depth_quotient());
    Ok(())
}

fn cmd_collapse(r: &mut Report, ideal: &MonomialIdeal, limits: &Limits) -> Result<(), Error> {
    let o = require_order(ideal, limits)?;
    if let Some(w) = r.attempt("collapse", || find_principal_collapse(&o, limits))? {
        r.set("s", w.s);
        r.set("tau", w.tau.to_string());
        r.set("u", w.u.to_string());
        r.set("collapse", "verified");
    }
    Ok(())
}

fn probe_lines(c: &ConjectureReport) -> Value {
    Value::Array(
        c.probes
            .iter()
            .map(|p| {
                let mut s = format!("{}: depth_with = {}", var_name(p.variable), p.depth_with);
                if let Some(sd) = p.sdepth_with {
                    let _ = write!(s, ", sdepth_with = {sd}");
                }
                if p.qualifies {
                    s.push_str(", qualifies");
                }
                Value::String(s)
            })
            .collect(),
    )
}

fn cmd_conjecture(
    r: &mut Report,
    ideal: &MonomialIdeal,
    common: &Common,
    limits: &Limits,
) -> Result<(), Error> {
    let o = require_order(ideal, limits)?;
    let weak = conjecture_report(ideal, false, limits)?;
    let strong = conjecture_report(ideal, true, limits)?;
    r.set("depth", weak.depth);
    r.set("sdepth", strong.sdepth.unwrap_or(0));
    r.set("witness.conjecture", witness_text(&weak));
    r.set("witness.strong_conjecture", witness_text(&strong));
    r.set(
        "witness.combinatorial",
        combinatorial_witness(&o).map_or("none".to_string(), var_name),
    );
    r.set("probes", probe_lines(&strong));
    if let Some(chain) = r.attempt("chain", || conditional_chain_verify(ideal, limits))? {
        let verdict = match &chain.verdict {
            ChainVerdict::Certified => format!("certified over {} levels", chain.levels.len()),
            ChainVerdict::NoWitness { level } => format!("no witness at level {level}"),
            ChainVerdict::Broken { level, detail } => {
                r.mark(Status::Violation);
                format!("VIOLATION at level {level}: {detail}")
            }
        };
        r.set("chain", verdict);
    }
    if weak.witness.is_none() || strong.witness.is_none() {
        r.mark(Status::Notable);
        if let Some(dir) = &common.findings_dir {
            let body = conjecture_finding(ideal, &weak, &strong, common.seed);
            let name = format!(
                "finding-conjecture-{:016x}.txt",
                fingerprint(&ideal.to_string())
            );
            write_finding(dir, &name, &body)?;
            r.set("finding", dir.join(name).display().to_string());
        }
    }
    Ok(())
}

fn cmd_pipeline(r: &mut Report, ideal: &MonomialIdeal, limits: &Limits) -> Result<(), Error> {
    let o = require_order(ideal, limits)?;
    let Some(out) = r.attempt("outcome", || run_iterative_pipeline(&o))? else {
        return Ok(());
    };
    let steps = out
        .steps()
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let slot = s.slot.map_or("-".to_string(), |x| (x + 1).to_string());
            Value::String(format!(
                "D_{}: {} pieces, slot {slot}, sdepth {}, depth {}",
                k + 1,
                s.decomposition.pieces().len(),
                s.sdepth,
                s.depth
            ))
        })
        .collect();
    r.set("steps", Value::Array(steps));
    match &out {
        PipelineOutcome::Complete(t) => {
            r.set("outcome", "complete");
            r.set("sdepth", t.final_sdepth());
            r.set("decomposition", lines(t.last().decomposition.to_string()));
        }
        PipelineOutcome::Stuck { step, reason, .. } => {
            r.set("outcome", format!("stuck at step {step}: {reason}"));
        }
    }
    Ok(())
}

/// FNV-1a, for stable file names.
fn fingerprint(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

fn write_finding(dir: &Path, name: &str, body: &str) -> Result<(), Error> {
    fs::create_dir_all(dir)
        .and_then(|()| fs::write(dir.join(name), body))
        .map_err(|e| Error::Precondition(format!("cannot write finding in {}: {e}", dir.display())))
}

fn conjecture_finding(
    ideal: &MonomialIdeal,
    weak: &ConjectureReport,
    strong: &ConjectureReport,
    seed: u64,
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "verdict: NOTABLE");
    let _ = writeln!(s, "ideal: {ideal}");
    let _ = writeln!(s, "n: {}", ideal.n());
    let _ = writeln!(s, "seed: {seed}");
    let _ = writeln!(s, "depth: {}", weak.depth);
    let _ = writeln!(s, "sdepth: {}", strong.sdepth.unwrap_or(0));
    let _ = writeln!(s, "witness.conjecture: {}", witness_text(weak));
    let _ = writeln!(s, "witness.strong_conjecture: {}", witness_text(strong));
    for p in probe_lines(strong).as_array().into_iter().flatten() {
        let _ = writeln!(s, "probe: {}", scalar(p));
    }
    let _ = writeln!(s, "version: {VERSION}");
    s
}

/// Self-describing text for one sweep instance.
pub fn sweep_finding(config: &SweepConfig, rec: &InstanceRecord) -> String {
    let p = config.params;
    let verdict = if rec.violations.is_empty() {
        "NOTABLE"
    } else {
        "VIOLATION"
    };
    let mut s = String::new();
    let _ = writeln!(s, "verdict: {verdict}");
    let _ = writeln!(s, "ideal: {}", rec.ideal);
    let _ = writeln!(s, "n: {}", rec.ideal.n());
    let _ = writeln!(s, "instance: {}", rec.index);
    let _ = writeln!(s, "instance_seed: {}", rec.seed);
    let _ = writeln!(
        s,
        "reproduce: lqsdepth sweep --n {} --m {} --deg {} --count {} --seed {}",
        p.n,
        p.m,
        p.max_degree,
        rec.index + 1,
        config.seed
    );
    let _ = writeln!(s, "depth: {}", rec.depth_oracle);
    let _ = writeln!(s, "sdepth: {}", rec.sdepth);
    let _ = writeln!(s, "sdepth_ideal: {}", rec.sdepth_ideal);
    for (kind, report) in [
        ("conjecture", &rec.weak),
        ("strong_conjecture", &rec.strong),
    ] {
        if let Some(c) = report {
            let _ = writeln!(s, "witness.{kind}: {}", witness_text(c));
        }
    }
    for m in &rec.misses {
        let kind = match m {
            ConjectureKind::Weak => "conjecture",
            ConjectureKind::Strong => "strong_conjecture",
        };
        let _ = writeln!(s, "miss: {kind}");
    }
    for v in &rec.violations {
        let _ = writeln!(s, "violation: {v}");
    }
    if let Some(c) = &rec.strong {
        for p in probe_lines(c).as_array().into_iter().flatten() {
            let _ = writeln!(s, "probe: {}", scalar(p));
        }
    }
    let _ = writeln!(s, "version: {VERSION}");
    s
}

pub fn sweep_status(summary: &SweepSummary) -> Status {
    if summary.has_violations() {
        Status::Violation
    } else if summary.notable().next().is_some() {
        Status::Notable
    } else {
        Status::Ok
    }
}

/// Writes one file per NOTABLE or violating instance; returns the paths.
pub fn persist_findings(dir: &Path, summary: &SweepSummary) -> Result<Vec<PathBuf>, Error> {
    let mut paths = Vec::new();
    for rec in &summary.records {
        if rec.misses.is_empty() && rec.violations.is_empty() {
            continue;
        }
        let name = format!("finding-{}-{:04}.txt", summary.config.seed, rec.index);
        write_finding(dir, &name, &sweep_finding(&summary.config, rec))?;
        paths.push(dir.join(name));
    }
    Ok(paths)
}

fn cmd_sweep(args: &SweepArgs) -> Result<RunOutput, Error> {
    let config = SweepConfig {
        params: RandomParams::new(args.n, args.m, args.deg)?,
        count: args.count,
        seed: args.common.seed,
    };
    let summary = run_sweep(&config, &args.common.limits())?;
    let status = sweep_status(&summary);
    let findings = match &args.common.findings_dir {
        Some(dir) => persist_findings(dir, &summary)?,
        None => Vec::new(),
    };
    let stdout = if args.common.json {
        let mut r = Report::new("sweep", config.seed);
        r.set("n", args.n);
        r.set("m", args.m);
        r.set("deg", args.deg);
        r.set("count", args.count);
        r.set(
            "instances",
            Value::Array(
                summary
                    .records
                    .iter()
                    .map(|x| Value::String(x.summary_line()))
                    .collect(),
            ),
        );
        let text = summary.render();
        for line in text
            .lines()
            .filter(|l| !l.starts_with('#') && !l.starts_with("sweep "))
        {
            if let Some((k, v)) = line.split_once(": ") {
                r.set(
                    &format!("total.{k}"),
                    v.parse::<u64>().map_or(Value::from(v), Value::from),
                );
            }
        }
        r.set("findings", findings.len());
        r.render_json()
    } else {
        let mut out = format!("version: {VERSION}\n");
        out.push_str(&summary.render());
        if args.common.findings_dir.is_some() {
            let _ = writeln!(out, "findings_written: {}", findings.len());
        }
        out
    };
    let stderr = summary
        .violations()
        .map(|(rec, v)| format!("VIOLATION #{:04} {}: {v}\n", rec.index, rec.ideal))
        .collect();
    Ok(RunOutput {
        stdout,
        stderr,
        code: status.code(),
    })
}
