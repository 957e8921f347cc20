//! Command implementations behind the `xrealign` binary.
//!
//! Each command writes its report to the supplied writer, so the commands
//! can be exercised without spawning a process. Failures map to stable exit
//! codes through [`CliError::exit_code`].

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use xrealign::audit::{run_audit, AuditSummary};
use xrealign::criteria::{derivation_diagnostics, evaluate_all, CriterionReport, DerivationReport};
use xrealign::numerics::Tolerance;
use xrealign::scanner::{format_sig, scan, summarize, write_csv, Axis, GridSpec, RegionSummary, ScanCriterion};
use xrealign::states::{read_state, SamplerParams, XState};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID_STATE: u8 = 2;
pub const EXIT_PARSE: u8 = 3;
pub const EXIT_GRID_TOO_LARGE: u8 = 4;
pub const EXIT_UNWRITABLE: u8 = 5;
pub const EXIT_STRICT: u8 = 6;
pub const EXIT_OTHER: u8 = 1;

#[derive(Debug)]
pub enum CliError {
    Core(xrealign::Error),
    Read { path: PathBuf, source: io::Error },
    Write { path: PathBuf, source: io::Error },
    Disagreements(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use xrealign::Error as E;
        match self {
            CliError::Core(e) if e.is_invalid_state() => EXIT_INVALID_STATE,
            CliError::Core(E::GridTooLarge { .. }) => EXIT_GRID_TOO_LARGE,
            CliError::Core(E::Output(_)) => EXIT_UNWRITABLE,
            CliError::Core(E::Parse(_) | E::Domain(_) | E::UnknownFamily(_) | E::UnknownCriterion(_)) => EXIT_PARSE,
            CliError::Core(_) => EXIT_OTHER,
            CliError::Read { .. } => EXIT_PARSE,
            CliError::Write { .. } => EXIT_UNWRITABLE,
            CliError::Disagreements(_) => EXIT_STRICT,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) if e.is_invalid_state() => write!(f, "invalid state ({}): {e}", e.kind()),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Read { path, source } => write!(f, "cannot read {}: {source}", path.display()),
            CliError::Write { path, source } => write!(f, "cannot write {}: {source}", path.display()),
            CliError::Disagreements(n) => write!(f, "{n} PPT-entangled samples fail the modified bound (--strict)"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<xrealign::Error> for CliError {
    fn from(e: xrealign::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "xrealign", version, about = "Entanglement criteria for two-qubit X-states")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Output format for reports.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Hermiticity and trace tolerance.
    #[arg(long, default_value_t = Tolerance::default().eps_herm, global = true)]
    pub eps_herm: f64,
    /// Slack for sign tests and inequality checks.
    #[arg(long, default_value_t = Tolerance::default().eps_psd, global = true)]
    pub eps_psd: f64,
    /// Tolerance for identities checked between equivalent forms.
    #[arg(long, default_value_t = Tolerance::default().eps_eq, global = true)]
    pub eps_eq: f64,
    /// Seed for the random ensemble.
    #[arg(long, default_value_t = 1, global = true)]
    pub seed: u64,
    /// Output file: the CSV for `scan` (`-` for standard output), the
    /// disagreement dump for `audit`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl GlobalArgs {
    pub fn tolerance(&self) -> CliResult<Tolerance> {
        Ok(Tolerance::new(self.eps_herm, self.eps_psd, self.eps_eq)?)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every criterion on one state file.
    Analyze { input: PathBuf },
    /// Classify a grid of a two-parameter family and write CSV.
    Scan(ScanArgs),
    /// Compare the criteria on a seeded random ensemble.
    Audit(AuditArgs),
    /// Evaluate the inequality chain behind the modified bound.
    Diagnose { input: PathBuf },
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    /// Registered state family.
    #[arg(long, default_value = "rho1")]
    pub family: String,
    /// Lower end of the x axis.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub x_min: f64,
    /// Upper end of the x axis.
    #[arg(long, default_value_t = 0.25, allow_negative_numbers = true)]
    pub x_max: f64,
    /// Lower end of the y axis.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub y_min: f64,
    /// Upper end of the y axis.
    #[arg(long, default_value_t = 0.25, allow_negative_numbers = true)]
    pub y_max: f64,
    /// Grid spacing on both axes.
    #[arg(long, default_value_t = 0.01)]
    pub step: f64,
    /// Fix one coordinate, e.g. `x=0.1`, and scan along the other.
    #[arg(long, value_parser = parse_slice)]
    pub slice: Option<(Axis, f64)>,
}

#[derive(Debug, Clone, Args)]
pub struct AuditArgs {
    /// Number of states to draw.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Exit with a dedicated code when any disagreement is found.
    #[arg(long)]
    pub strict: bool,
    /// Upper end of the coherence fraction drawn per sample, in [0, 1].
    #[arg(long, default_value_t = 1.0)]
    pub max_coherence: f64,
}

fn parse_slice(s: &str) -> Result<(Axis, f64), String> {
    let (axis, value) = s.split_once('=').ok_or_else(|| format!("expected axis=value, got `{s}`"))?;
    let axis: Axis = axis.trim().parse().map_err(|e: xrealign::Error| e.to_string())?;
    let value: f64 = value.trim().parse().map_err(|e| format!("bad slice value `{value}`: {e}"))?;
    Ok((axis, value))
}

/// Runs one parsed command line, writing the report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let g = &cli.global;
    match &cli.command {
        Command::Analyze { input } => cmd_analyze(input, g, out),
        Command::Scan(args) => cmd_scan(args, g, out),
        Command::Audit(args) => cmd_audit(args, g, out),
        Command::Diagnose { input } => cmd_diagnose(input, g, out),
    }
}

fn stdout_err(e: io::Error) -> CliError {
    CliError::Write { path: PathBuf::from("<stdout>"), source: e }
}

fn load_state(path: &Path, tol: &Tolerance) -> CliResult<XState> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
    let state = read_state(&text)?.into_x_state(tol)?;
    state.validate(tol)?;
    Ok(state)
}

fn num(v: f64) -> String {
    if v.is_finite() {
        format_sig(v, 10)
    } else {
        "-".to_string()
    }
}

fn write_json<T: Serialize + ?Sized>(value: &T, out: &mut dyn Write) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| xrealign::Error::Output(e.to_string()))?;
    writeln!(out, "{text}").map_err(stdout_err)
}

pub fn cmd_analyze(input: &Path, g: &GlobalArgs, out: &mut dyn Write) -> CliResult<()> {
    let tol = g.tolerance()?;
    let state = load_state(input, &tol)?;
    let reports = evaluate_all(&state, &tol)?;
    match g.format {
        Format::Json => write_json(&reports, out),
        Format::Text => write_report_table(&reports, out).map_err(stdout_err),
    }
}

fn write_report_table(reports: &[CriterionReport], out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{:<12} {:<14} {:>17} {:>17} {:>17}  branch", "criterion", "verdict", "lhs", "rhs", "margin")?;
    for r in reports {
        writeln!(
            out,
            "{:<12} {:<14} {:>17} {:>17} {:>17}  {:?}",
            r.criterion.name(),
            r.verdict.to_string(),
            num(r.lhs),
            num(r.rhs),
            num(r.margin),
            r.branch
        )?;
    }
    Ok(())
}

pub fn cmd_diagnose(input: &Path, g: &GlobalArgs, out: &mut dyn Write) -> CliResult<()> {
    let tol = g.tolerance()?;
    let state = load_state(input, &tol)?;
    let report = derivation_diagnostics(&state, &tol)?;
    match g.format {
        Format::Json => write_json(&report, out),
        Format::Text => write_derivation(&report, out).map_err(stdout_err),
    }
}

fn write_derivation(r: &DerivationReport, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "branch {:?}  P = {}  Q = {}  norm = {}", r.branch, num(r.p), num(r.q), num(r.s))?;
    for c in &r.checks {
        let status = match (c.applicable, c.holds) {
            (false, _) => "n/a",
            (true, true) => "holds",
            (true, false) => "FAILS",
        };
        let rel =
            serde_json::to_value(c.relation).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        writeln!(out, "{:<12} {:>17} {rel} {:<17}  {status}", c.id, num(c.lhs), num(c.rhs))?;
    }
    let applicable = r.applicable().count();
    writeln!(out, "{}/{} applicable checks hold", r.holding(), applicable)
}

#[derive(Debug, Serialize)]
struct ScanSummary<'a> {
    family: &'a str,
    grid: GridSpec,
    points: usize,
    csv: String,
    regions: Vec<RegionSummary>,
}

fn grid_for(args: &ScanArgs) -> CliResult<GridSpec> {
    let (mut x, mut y) = ((args.x_min, args.x_max), (args.y_min, args.y_max));
    match args.slice {
        Some((Axis::X, v)) => x = (v, v),
        Some((Axis::Y, v)) => y = (v, v),
        None => {}
    }
    Ok(GridSpec::new(x.0, x.1, y.0, y.1, args.step)?)
}

pub fn cmd_scan(args: &ScanArgs, g: &GlobalArgs, out: &mut dyn Write) -> CliResult<()> {
    let tol = g.tolerance()?;
    let grid = grid_for(args)?;
    let records = scan(&args.family, &grid, &tol)?;

    let target = g.out.clone().unwrap_or_else(|| PathBuf::from("scan.csv"));
    let to_stdout = target.as_os_str() == "-";
    if to_stdout {
        write_csv(&records, &mut *out)?;
    } else {
        let file = File::create(&target).map_err(|source| CliError::Write { path: target.clone(), source })?;
        write_csv(&records, BufWriter::new(file))?;
    }

    let crits = [ScanCriterion::Validity, ScanCriterion::Ppt, ScanCriterion::Ccn, ScanCriterion::Theorem1];
    let summary = ScanSummary {
        family: &args.family,
        grid,
        points: records.len(),
        csv: target.display().to_string(),
        regions: crits.iter().map(|&c| summarize(&records, c)).collect(),
    };
    // With the CSV on standard output, the summary goes to standard error.
    let mut stderr = io::stderr();
    let sink: &mut dyn Write = if to_stdout { &mut stderr } else { out };
    match g.format {
        Format::Json => write_json(&summary, sink),
        Format::Text => write_scan_summary(&summary, sink).map_err(stdout_err),
    }
}

fn write_scan_summary(s: &ScanSummary, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "family {}: {} points, step {}, csv {}", s.family, s.points, num(s.grid.step), s.csv)?;
    for region in &s.regions {
        let c = region.counts;
        if region.criterion == ScanCriterion::Validity {
            writeln!(out, "{}: {} valid, {} invalid", region.criterion, c.separable, c.invalid)?;
        } else {
            writeln!(
                out,
                "{}: {} entangled, {} separable, {} not applicable, {} invalid",
                region.criterion, c.entangled, c.separable, c.not_applicable, c.invalid
            )?;
        }
        let shown = region.boundary_estimates.len().min(8);
        for b in &region.boundary_estimates[..shown] {
            let other = if b.axis == Axis::X { Axis::Y } else { Axis::X };
            writeln!(
                out,
                "  boundary {} = {} +- {} at {other} = {}  [{}, {}]",
                b.axis,
                num(b.value()),
                num(b.half_width()),
                num(b.fixed),
                num(b.lo),
                num(b.hi)
            )?;
        }
        if region.boundary_estimates.len() > shown {
            writeln!(out, "  ... {} more boundary lines (use --format json)", region.boundary_estimates.len() - shown)?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct AuditReport<'a> {
    seed: u64,
    max_coherence: f64,
    samples: usize,
    ppt_entangled: usize,
    ccn_detected: usize,
    thm1_detected: usize,
    ccn_missed_but_thm1_caught: usize,
    concurrence_disagreements: usize,
    ccn_necessity_violations: usize,
    max_corollary_deviation: f64,
    derivation_failures: &'a std::collections::BTreeMap<String, usize>,
    disagreements: usize,
    disagreement_file: Option<String>,
}

impl<'a> AuditReport<'a> {
    fn new(s: &'a AuditSummary, disagreement_file: Option<String>) -> Self {
        Self {
            seed: s.seed,
            max_coherence: s.max_coherence,
            samples: s.samples,
            ppt_entangled: s.ppt_entangled,
            ccn_detected: s.ccn_detected,
            thm1_detected: s.thm1_detected,
            ccn_missed_but_thm1_caught: s.ccn_missed_but_thm1_caught,
            concurrence_disagreements: s.concurrence_disagreements,
            ccn_necessity_violations: s.ccn_necessity_violations,
            max_corollary_deviation: s.max_corollary_deviation,
            derivation_failures: &s.derivation_failures,
            disagreements: s.disagreements.len(),
            disagreement_file,
        }
    }
}

pub fn cmd_audit(args: &AuditArgs, g: &GlobalArgs, out: &mut dyn Write) -> CliResult<()> {
    let tol = g.tolerance()?;
    if !(0.0..=1.0).contains(&args.max_coherence) {
        return Err(
            xrealign::Error::Domain(format!("--max-coherence must lie in [0, 1], got {}", args.max_coherence)).into()
        );
    }
    let params = SamplerParams { max_coherence: args.max_coherence };
    let summary = run_audit(args.samples as usize, g.seed, &params, &tol)?;

    let dump = if summary.disagreements.is_empty() {
        None
    } else {
        let path = g.out.clone().unwrap_or_else(|| PathBuf::from("audit_disagreements.json"));
        let text =
            serde_json::to_string_pretty(&summary.disagreements).map_err(|e| xrealign::Error::Output(e.to_string()))?;
        std::fs::write(&path, text + "\n").map_err(|source| CliError::Write { path: path.clone(), source })?;
        Some(path.display().to_string())
    };

    let report = AuditReport::new(&summary, dump);
    match g.format {
        Format::Json => write_json(&report, out)?,
        Format::Text => write_audit(&report, out).map_err(stdout_err)?,
    }
    if args.strict && report.disagreements > 0 {
        return Err(CliError::Disagreements(report.disagreements));
    }
    Ok(())
}

fn write_audit(r: &AuditReport, out: &mut dyn Write) -> io::Result<()> {
    let failures: Vec<String> = r.derivation_failures.iter().map(|(id, n)| format!("{id}: {n}")).collect();
    let mut disagreements = r.disagreements.to_string();
    if let Some(path) = &r.disagreement_file {
        disagreements += &format!(" (dumped to {path})");
    }
    let rows = [
        ("samples", format!("{}  (seed {}, max coherence {})", r.samples, r.seed, num(r.max_coherence))),
        ("PPT entangled", r.ppt_entangled.to_string()),
        ("CCN detected", r.ccn_detected.to_string()),
        ("Theorem-1 detected", r.thm1_detected.to_string()),
        ("CCN missed, Theorem-1 caught", r.ccn_missed_but_thm1_caught.to_string()),
        ("PPT/concurrence mismatches", r.concurrence_disagreements.to_string()),
        ("CCN necessity violations", r.ccn_necessity_violations.to_string()),
        ("max corollary deviation", num(r.max_corollary_deviation)),
        ("derivation step failures", if failures.is_empty() { "none".into() } else { failures.join(", ") }),
        ("disagreements", disagreements),
    ];
    for (label, value) in rows {
        writeln!(out, "{label:<30}{value}")?;
    }
    Ok(())
}
