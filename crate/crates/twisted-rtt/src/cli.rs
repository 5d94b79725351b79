//! Command-line front end of the `verify` binary: suite selection, parameter
//! validation, execution and the JSON report.
//!
//! Exit codes: `0` when no check failed, `1` when some check failed (the
//! report is still written), `2` on a configuration error.

use crate::cartan::check_cartan;
use crate::currents::check_currents;
use crate::exact_algebra::{parse_rat, BigRat, Mode};
use crate::gauss::{check_central, check_embed, check_gauss, EvalParam, LOperator};
use crate::qseries::check_f_identity;
use crate::report::{Check, Report, Status};
use crate::repv::{check_drinfeld_relations, RepV};
use crate::rmatrix::{check_rank_one_block, check_reduction, check_rhat_annihilation, check_type_a_corner, check_unitarity_crossing, check_ybe};
use clap::{Parser, ValueEnum};
use serde_json::json;
use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

/// A verification suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Cartan,
    Rmatrix,
    Series,
    Rep,
    Gauss,
    Central,
    Embed,
    Currents,
    All,
}

impl Suite {
    /// The individual suites run by `all`, in execution order.
    pub const EACH: [Suite; 8] =
        [Suite::Cartan, Suite::Rmatrix, Suite::Series, Suite::Rep, Suite::Gauss, Suite::Central, Suite::Embed, Suite::Currents];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cartan => "cartan",
            Suite::Rmatrix => "rmatrix",
            Suite::Series => "series",
            Suite::Rep => "rep",
            Suite::Gauss => "gauss",
            Suite::Central => "central",
            Suite::Embed => "embed",
            Suite::Currents => "currents",
            Suite::All => "all",
        }
    }

    /// Smallest rank the suite is defined for.
    pub fn min_rank(self) -> usize {
        match self {
            Suite::Rep | Suite::Gauss | Suite::Central | Suite::Embed | Suite::Currents => 2,
            _ => 1,
        }
    }

    /// Whether `--mode` changes how the suite decides its identities.  The
    /// cartan, series, rep and currents suites are always exact.
    pub fn uses_mode(self) -> bool {
        matches!(self, Suite::Rmatrix | Suite::Gauss | Suite::Central | Suite::Embed)
    }

    /// Whether grid mode is selected automatically at rank `n` when no
    /// `--mode` is given: for every mode-dependent suite from `n = 3` on.
    pub fn auto_grid(self, n: usize) -> bool {
        n >= 3 && self.uses_mode()
    }
}

/// `--mode` values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Symbolic,
    Grid,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Symbolic => Mode::Symbolic,
            ModeArg::Grid => Mode::Grid,
        }
    }
}

/// Raw command-line arguments.
#[derive(Clone, Debug, Parser)]
#[command(name = "verify", version, about = "Exact verification suites for the twisted quantum affine algebra of type A(2n-1)^(2)")]
pub struct Args {
    /// Suite to run.
    #[arg(value_enum)]
    pub suite: Suite,
    /// Rank n (the vector representation has dimension 2n).
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// How identities are decided; by default symbolic, with grid selected
    /// automatically for the rmatrix, gauss, central and embed suites at n ≥ 3.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Mode window for the relation suites (|m| ≤ window).
    #[arg(long, default_value_t = 3)]
    pub window: i64,
    /// Series truncation order of the f-identity.
    #[arg(long, default_value_t = 30)]
    pub trunc: u32,
    /// Evaluation parameter of the L-operator: `symbolic` or a non-zero rational.
    #[arg(long = "eval-param", default_value = "symbolic")]
    pub eval_param: String,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include the wall time in the report (makes it run-dependent).
    #[arg(long)]
    pub timing: bool,
}

/// A rejected configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

/// A validated configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub n: usize,
    pub mode: Option<Mode>,
    pub window: i64,
    pub trunc: u32,
    pub eval_param: EvalParam,
    pub threads: Option<usize>,
    pub out: Option<PathBuf>,
    pub timing: bool,
}

impl VerifyConfig {
    /// Defaults of the command line for `suite` at rank `n`.
    pub fn new(suite: Suite, n: usize) -> VerifyConfig {
        VerifyConfig {
            suite,
            n,
            mode: None,
            window: 3,
            trunc: 30,
            eval_param: EvalParam::Symbolic,
            threads: None,
            out: None,
            timing: false,
        }
    }

    pub fn from_args(args: Args) -> Result<VerifyConfig, ConfigError> {
        let eval_param = parse_eval_param(&args.eval_param)?;
        let config = VerifyConfig {
            suite: args.suite,
            n: args.n,
            mode: args.mode.map(Mode::from),
            window: args.window,
            trunc: args.trunc,
            eval_param,
            threads: args.threads,
            out: args.out,
            timing: args.timing,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n < self.suite.min_rank().max(1) {
            return Err(ConfigError(format!("suite `{}` needs n ≥ {}, got n = {}", self.suite.name(), self.suite.min_rank().max(1), self.n)));
        }
        if self.window < 1 {
            return Err(ConfigError(format!("--window must be at least 1, got {}", self.window)));
        }
        if self.trunc < 1 {
            return Err(ConfigError("--trunc must be at least 1".into()));
        }
        if self.threads == Some(0) {
            return Err(ConfigError("--threads must be at least 1".into()));
        }
        Ok(())
    }

    /// The mode a suite runs in, and a notice when it was chosen automatically.
    pub fn mode_for(&self, suite: Suite) -> (Mode, Option<String>) {
        match self.mode {
            Some(m) => (m, None),
            None if suite.auto_grid(self.n) => (
                Mode::Grid,
                Some(format!("notice: suite `{}` at n = {} runs in grid mode (pass --mode symbolic to override)", suite.name(), self.n)),
            ),
            None => (Mode::Symbolic, None),
        }
    }
}

/// `symbolic` or a non-zero rational such as `3/2`.
pub fn parse_eval_param(s: &str) -> Result<EvalParam, ConfigError> {
    if s == "symbolic" {
        return Ok(EvalParam::Symbolic);
    }
    let r = parse_rat(s).ok_or_else(|| ConfigError(format!("--eval-param must be `symbolic` or a rational number, got `{s}`")))?;
    if r == BigRat::from_integer(0.into()) {
        return Err(ConfigError("--eval-param must be non-zero".into()));
    }
    Ok(EvalParam::Value(r))
}

/// Runs one suite (not `all`) and returns its checks.
pub fn run_suite(config: &VerifyConfig, suite: Suite, mode: Mode) -> Vec<Check> {
    let n = config.n;
    if n < suite.min_rank() {
        return vec![Check::skipped(format!("{}.n{n}", suite.name()), format!("suite `{}` needs n ≥ {}", suite.name(), suite.min_rank()))];
    }
    let op = || LOperator::new(n, config.eval_param.clone());
    let with_op = |f: &dyn Fn(&LOperator) -> Vec<Check>| match op() {
        Ok(op) => f(&op),
        Err(e) => vec![Check::fail(format!("{}.loperator.n{n}", suite.name()), "construction of the L-operator", e.to_string())],
    };
    match suite {
        Suite::Cartan => check_cartan(n),
        Suite::Rmatrix => {
            let mut out = check_ybe(n, mode);
            out.extend(check_unitarity_crossing(n, mode));
            out.extend(check_reduction(n, mode));
            out.extend(check_rank_one_block());
            out.extend(check_type_a_corner(n));
            out.extend(check_rhat_annihilation(n));
            out
        }
        Suite::Series => check_f_identity(n, config.trunc),
        Suite::Rep => match RepV::new(n).and_then(|rep| check_drinfeld_relations(&rep, config.window)) {
            Ok(checks) => checks,
            Err(e) => vec![Check::fail(format!("rep.build.n{n}"), "vector representation", e.to_string())],
        },
        Suite::Gauss => with_op(&|op| check_gauss(op, mode)),
        Suite::Central => with_op(&|op| check_central(op, mode)),
        Suite::Embed => with_op(&|op| check_embed(op, mode)),
        Suite::Currents => with_op(&|op| check_currents(op, config.window, config.window.min(2))),
        Suite::All => unreachable!("`all` is expanded by the caller"),
    }
}

/// Runs the configured suite(s).  Notices (automatic mode selection) are
/// returned separately so that the report stays deterministic.
pub fn run(config: &VerifyConfig) -> (Report, Vec<String>) {
    let start = Instant::now();
    let suites: Vec<Suite> = if config.suite == Suite::All { Suite::EACH.to_vec() } else { vec![config.suite] };
    let mut checks = Vec::new();
    let mut notices = Vec::new();
    let mut modes = serde_json::Map::new();
    for suite in suites {
        let (mode, notice) = config.mode_for(suite);
        notices.extend(notice);
        if suite.uses_mode() {
            modes.insert(suite.name().into(), json!(mode.to_string()));
        }
        checks.extend(run_suite(config, suite, mode));
    }
    let params = json!({
        "n": config.n,
        "mode": modes,
        "window": config.window,
        "trunc": config.trunc,
        "eval_param": config.eval_param.describe(),
    });
    let mut report = Report::new(config.suite.name(), params, checks);
    if config.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    (report, notices)
}

/// Exit code for a finished report.
pub fn exit_code(report: &Report) -> i32 {
    if report.all_passed() {
        0
    } else {
        1
    }
}

/// Entry point of the binary: parses `argv`, runs, writes the report and
/// returns the process exit code.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let config = match VerifyConfig::from_args(args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if let Some(t) = config.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot configure {t} worker threads: {e}");
            return 2;
        }
    }
    let (report, notices) = run(&config);
    for notice in &notices {
        eprintln!("{notice}");
    }
    let json = report.to_json();
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{json}"),
    }
    let count = |s: Status| report.checks.iter().filter(|c| c.status == s).count();
    eprintln!("{} checks: {} passed, {} failed, {} skipped", report.checks.len(), count(Status::Pass), count(Status::Fail), count(Status::Skipped));
    for c in report.failures() {
        eprintln!("FAIL {}: {}", c.id, c.detail);
    }
    exit_code(&report)
}
