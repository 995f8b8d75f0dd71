//! Argument parsing and the four subcommands.
//!
//! Exit codes: 0 success or pass, 1 verification failure, 2 input error,
//! 3 search budget exhausted.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gwalk_core::catalog::{
    convolve_moving_d2, flipflop_min_state, moving_min_state, nine_point_kernel,
};
use gwalk_core::eigen::{
    check_gamma_relations, check_lemma_structure, eigen_residual, is_stationary_measure,
};
use gwalk_core::search::{min_support_search, SearchConfig};
use gwalk_core::walk::{evolve, grover_coin};
use gwalk_core::{Eigenvalue, Error, LatticePoint, Rational, Scalar, ShiftKind};

use crate::format::{
    from_json, parse_lambda, to_json, BudgetDocument, EvolveDocument, FormatError, MeasureDocument,
    SearchDocument, StateDocument,
};
use crate::scan::Parallel;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Budget(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "gwalk",
    version,
    about = "Exact Grover-walk eigenstates on Z^d"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a catalog eigenstate as a state document.
    Build(BuildArgs),
    /// Check a state document against the eigen-equation and its consequences.
    Verify(VerifyArgs),
    /// Apply the walk n times and report the state and its measure.
    Evolve(EvolveArgs),
    /// Find the smallest eigenstate support inside a window.
    Search(SearchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    MovingMin,
    FlipflopMin,
    NinePoint,
    Convolve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShiftArg {
    Moving,
    Flipflop,
}

impl From<ShiftArg> for ShiftKind {
    fn from(s: ShiftArg) -> Self {
        match s {
            ShiftArg::Moving => ShiftKind::Moving,
            ShiftArg::Flipflop => ShiftKind::FlipFlop,
        }
    }
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Lattice dimension; the nine-point and convolve families are planar.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true, default_value = "+1")]
    pub lambda: Eigenvalue,
    /// Lowest corner of the support, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub base: Option<Vec<i64>>,
    /// Kernel entry `X,Y=RE` or `X,Y=RE:IM` for the convolve family; repeatable.
    #[arg(long = "g", allow_hyphen_values = true)]
    pub g: Vec<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Overrides the eigenvalue recorded in the document.
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
    pub lambda: Option<Eigenvalue>,
    /// Overrides the shift recorded in the document.
    #[arg(long, value_enum)]
    pub shift: Option<ShiftArg>,
    /// Number of steps for the stationary-measure check.
    #[arg(long, default_value_t = 10)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub shift: Option<ShiftArg>,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
    pub lambda: Eigenvalue,
    #[arg(long, value_enum)]
    pub shift: ShiftArg,
    #[arg(long)]
    pub max_size: usize,
    #[arg(long)]
    pub radius: u32,
    /// Worker threads; defaults to the number of available cores.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Stop with exit code 3 after this many candidates.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Runs one command and returns the exit code for a completed run.
pub fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Build(a) => build(a),
        Command::Verify(a) => verify(a),
        Command::Evolve(a) => evolve_cmd(a),
        Command::Search(a) => search(a),
    }
}

fn is_stdio(path: &Option<PathBuf>) -> Option<&Path> {
    match path {
        Some(p) if p.as_os_str() != "-" => Some(p),
        _ => None,
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    let mut text = String::new();
    match is_stdio(path) {
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
        }
    }
    Ok(text)
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match is_stdio(path) {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn parse_kernel_entry(s: &str) -> Result<(LatticePoint, Scalar), CliError> {
    let bad = || CliError::Input(format!("kernel entry {s:?} is not of the form X,Y=RE[:IM]"));
    let (pos, value) = s.split_once('=').ok_or_else(bad)?;
    let coords = pos
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad())?;
    if coords.len() != 2 {
        return Err(bad());
    }
    let (re, im) = value.split_once(':').unwrap_or((value, "0"));
    let re: Rational = re.parse().map_err(|_| bad())?;
    let im: Rational = im.parse().map_err(|_| bad())?;
    Ok((LatticePoint::new(coords), Scalar::new(re, im)))
}

fn build(a: &BuildArgs) -> Result<i32, CliError> {
    let planar = matches!(a.family, Family::NinePoint | Family::Convolve);
    let d = match (a.d, planar) {
        (Some(d), true) if d != 2 => {
            return Err(CliError::Input(format!(
                "this family lives on Z^2, got --d {d}"
            )));
        }
        (Some(d), _) => d,
        (None, true) => 2,
        (None, false) => return Err(CliError::Input("--d is required for this family".into())),
    };
    if planar && a.lambda != Eigenvalue::Plus {
        return Err(CliError::Input(
            "this family is only available for eigenvalue +1".into(),
        ));
    }
    if a.family != Family::Convolve && !a.g.is_empty() {
        return Err(CliError::Input(
            "--g only applies to the convolve family".into(),
        ));
    }
    let base = match &a.base {
        Some(c) => LatticePoint::new(c.clone()),
        None => LatticePoint::origin(d),
    };
    let (psi, shift) = match a.family {
        Family::MovingMin => (moving_min_state(d, a.lambda, &base)?, ShiftKind::Moving),
        Family::FlipflopMin => (flipflop_min_state(d, a.lambda, &base)?, ShiftKind::FlipFlop),
        Family::NinePoint | Family::Convolve => {
            let kernel = if a.family == Family::NinePoint {
                nine_point_kernel()
            } else {
                let mut g = BTreeMap::new();
                for entry in &a.g {
                    let (p, v) = parse_kernel_entry(entry)?;
                    if g.insert(p.clone(), v).is_some() {
                        return Err(CliError::Input(format!("kernel point {p} given twice")));
                    }
                }
                g
            };
            let psi = convolve_moving_d2(&kernel)?;
            let psi = if a.base.is_some() {
                psi.translate(&base)?
            } else {
                psi
            };
            (psi, ShiftKind::Moving)
        }
    };
    write_output(
        &a.out,
        &to_json(&StateDocument::from_state(&psi, shift, Some(a.lambda))),
    )?;
    Ok(0)
}

const LISTED: usize = 5;

fn format_amps(amps: &[Scalar]) -> String {
    let parts: Vec<String> = amps.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn verify(a: &VerifyArgs) -> Result<i32, CliError> {
    let doc: StateDocument = from_json(&read_input(&a.input)?)?;
    let psi = doc.to_state()?;
    let shift = a.shift.map(ShiftKind::from).unwrap_or(doc.shift());
    let lambda = a.lambda.or(doc.lambda).ok_or_else(|| {
        CliError::Input("no eigenvalue: pass --lambda or set \"lambda\" in the document".into())
    })?;
    let coin = grover_coin(psi.dim())?;

    let mut report = String::new();
    let mut ok = true;
    let line = |report: &mut String, name: &str, pass: bool, detail: &str| {
        let verdict = if pass { "pass" } else { "FAIL" };
        let _ = writeln!(report, "{name}: {verdict}{detail}");
    };
    let _ = writeln!(
        report,
        "state: d={} shift={} lambda={}",
        psi.dim(),
        shift,
        lambda
    );
    let _ = writeln!(report, "support size: {}", psi.len());
    if psi.is_zero() {
        let _ = writeln!(report, "the zero state is not an eigenstate");
        let _ = writeln!(report, "result: FAIL");
        write_output(&a.out, &report)?;
        return Ok(1);
    }

    let residual = eigen_residual(&psi, lambda, &coin, shift)?;
    let residual_ok = residual.is_zero();
    ok &= residual_ok;
    line(&mut report, "eigen residual", residual_ok, "");
    for (x, amps) in residual.iter().take(LISTED) {
        let _ = writeln!(report, "  residual at {x}: {}", format_amps(amps));
    }
    if residual.len() > LISTED {
        let _ = writeln!(report, "  ... {} more sites", residual.len() - LISTED);
    }

    let gamma = check_gamma_relations(&psi, lambda, shift);
    ok &= gamma.passed();
    line(&mut report, "gamma relations", gamma.passed(), "");
    for v in gamma.violations.iter().take(LISTED) {
        let _ = writeln!(report, "  {v}");
    }

    if residual_ok {
        match check_lemma_structure(&psi, lambda, shift) {
            Ok(lemma) => {
                ok &= lemma.passed();
                let detail = format!(" ({} axis lines)", lemma.endpoints.len());
                line(&mut report, "endpoint structure", lemma.passed(), &detail);
                for v in lemma.violations.iter().take(LISTED) {
                    let _ = writeln!(report, "  {v}");
                }
            }
            Err(e) => {
                ok = false;
                line(&mut report, "endpoint structure", false, &format!(" ({e})"));
            }
        }
    } else {
        line(
            &mut report,
            "endpoint structure",
            false,
            " (skipped: not an eigenstate)",
        );
    }

    let stationary = is_stationary_measure(&psi, &coin, shift, a.n)?;
    ok &= stationary;
    line(
        &mut report,
        &format!("stationary measure (n=1..{})", a.n),
        stationary,
        "",
    );

    let _ = writeln!(report, "result: {}", if ok { "PASS" } else { "FAIL" });
    write_output(&a.out, &report)?;
    Ok(if ok { 0 } else { 1 })
}

fn evolve_cmd(a: &EvolveArgs) -> Result<i32, CliError> {
    let doc: StateDocument = from_json(&read_input(&a.input)?)?;
    let psi = doc.to_state()?;
    let shift = a.shift.map(ShiftKind::from).unwrap_or(doc.shift());
    let out = evolve(&psi, &grover_coin(psi.dim())?, shift, a.n)?;
    let result = EvolveDocument {
        n: a.n,
        state: StateDocument::from_state(&out, shift, doc.lambda),
        measure: MeasureDocument::from_measure(&out.to_measure()),
    };
    write_output(&a.out, &to_json(&result))?;
    Ok(0)
}

fn search(a: &SearchArgs) -> Result<i32, CliError> {
    let workers = match a.workers {
        Some(0) => return Err(CliError::Input("--workers must be at least 1".into())),
        Some(w) => w,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let scanner =
        Parallel::new(workers).map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
    let shift = ShiftKind::from(a.shift);
    let mut config = SearchConfig::grover(a.d, a.lambda, shift, a.max_size, a.radius)?;
    config.budget = a.budget;
    match min_support_search(&config, &scanner) {
        Ok(result) => {
            write_output(&a.out, &to_json(&SearchDocument::from_result(&result)))?;
            Ok(0)
        }
        Err(
            e @ Error::BudgetExceeded {
                budget,
                scanned,
                reached_size,
            },
        ) => {
            let partial = BudgetDocument {
                d: a.d,
                shift: shift.into(),
                lambda: a.lambda,
                window_radius: a.radius,
                max_size: a.max_size,
                budget,
                scanned,
                reached_size,
            };
            write_output(&a.out, &to_json(&partial))?;
            Err(CliError::Budget(e))
        }
        Err(e) => Err(e.into()),
    }
}
