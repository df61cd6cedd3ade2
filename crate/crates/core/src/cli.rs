//! Command-line harness: table reproductions, the complexity sweep and
//! ad-hoc partial derivatives. The `jetdiff` binary is a thin wrapper
//! around [`run`].
//!
//! Exit codes: 0 success, 1 a `--verify` check failed, 2 usage or input
//! error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dd::DoubleDouble;
use crate::error::Error;
use crate::fmfd::{directional4_fd, partial_fd, Contraction, FdScheme, Precision, DEFAULT_M_CAP};
use crate::kinematics::{kinematics_directional, kinematics_timejet, KinematicResult, KinematicSnapshot};
use crate::mlform::{d4, partial};
use crate::models::{eff, icwf, nested_sine, IcwfSetup, EFF_POINT};
use crate::reference as refv;
use crate::scalar::Elementary;
use crate::screws::{rcr_model, screw_kinematics, Chain};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "jetdiff",
    version,
    about = "Fourth-order dual numbers: directional derivatives, finite differences, kinematics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fourth-order directional derivative of the inverted cosine wave, dual vs FMFD.
    Table1(Table1Args),
    /// Dual-number d4 timing sweep over the dimension.
    Complexity(ComplexityArgs),
    /// Velocity, acceleration, jerk and snap of a model point.
    Kinematics(KinematicsArgs),
    /// Mixed partial derivatives, dual vs FMFD per precision.
    Partials(PartialsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PrecisionArg {
    F64,
    Extended,
}

impl From<PrecisionArg> for Precision {
    fn from(p: PrecisionArg) -> Self {
        match p {
            PrecisionArg::F64 => Precision::F64,
            PrecisionArg::Extended => Precision::Extended,
        }
    }
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[arg(long, value_delimiter = ',', default_values_t = [5, 7, 10, 15, 20])]
    pub m_list: Vec<usize>,
    #[arg(long, default_value_t = 1e-5)]
    pub h: f64,
    /// FMFD approximation order.
    #[arg(long, default_value_t = 4)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = PrecisionArg::Extended)]
    pub precision: PrecisionArg,
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub verify: bool,
    /// Largest m for which the O(m^4) FMFD leg runs.
    #[arg(long, default_value_t = DEFAULT_M_CAP)]
    pub m_cap: usize,
    /// Sum every index tuple instead of the symmetric reduction.
    #[arg(long)]
    pub full_contraction: bool,
    /// Skip the FMFD leg entirely.
    #[arg(long)]
    pub no_fmfd: bool,
}

#[derive(Debug, Args)]
pub struct ComplexityArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [500, 1000, 2000, 3000])]
    pub m_list: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Check the fitted log-log slope lies in [0.8, 1.3].
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    /// Nested-sine map R^2 -> R^3.
    Hypothetical,
    /// RCR manipulator end effector.
    Rcr,
    /// Serial chain from a JSON description (`--chain`).
    File,
}

#[derive(Debug, Args)]
pub struct KinematicsArgs {
    #[arg(value_enum)]
    pub model: ModelArg,
    /// JSON snapshot with keys q, qd, qdd, qddd, qdddd.
    #[arg(long)]
    pub snapshot: Option<PathBuf>,
    /// JSON chain description (model `file`).
    #[arg(long)]
    pub chain: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetArg {
    Table4,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionId {
    /// cos(xy/u) z/w + 3 sin(xu) sin(y/u) ln(xyz/(uw)), five variables.
    Eff,
    /// Inverted cosine wave, any dimension >= 2.
    Icwf,
    /// Product of all coordinates.
    Product,
}

impl FunctionId {
    pub fn eval<T: Elementary>(self, v: &[T]) -> T {
        match self {
            FunctionId::Eff => eff(v),
            FunctionId::Icwf => icwf(v),
            FunctionId::Product => v.iter().skip(1).fold(v[0], |acc, &x| acc * x),
        }
    }

    fn check_point(self, m: usize) -> CliResult<()> {
        let ok = match self {
            FunctionId::Eff => m == 5,
            FunctionId::Icwf => m >= 2,
            FunctionId::Product => m >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(CliError::Usage(format!("{self:?} cannot take a {m}-dimensional point")))
        }
    }
}

#[derive(Debug, Args)]
pub struct PartialsArgs {
    #[arg(value_enum)]
    pub preset: PresetArg,
    #[arg(long, value_enum, default_value_t = FunctionId::Eff)]
    pub function: FunctionId,
    /// Evaluation point (defaults to (1.1, 2.2, 3.3, 4.4, 5.5) for eff).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub point: Option<Vec<f64>>,
    /// 1-based coordinate indices, at most four.
    #[arg(long, value_delimiter = ',')]
    pub indices: Option<Vec<usize>>,
    #[arg(long, default_value_t = 1e-5)]
    pub h: f64,
    #[arg(long, default_value_t = 8)]
    pub order: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [PrecisionArg::F64, PrecisionArg::Extended])]
    pub precision: Vec<PrecisionArg>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub verify: bool,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{e}");
                2
            };
        }
    };
    match execute(&cli.command, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Runs a parsed command; `Ok(false)` means a verification check failed.
pub fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<bool> {
    match cmd {
        Command::Table1(a) => cmd_table1(a, out, err),
        Command::Complexity(a) => cmd_complexity(a, out, err),
        Command::Kinematics(a) => cmd_kinematics(a, out, err),
        Command::Partials(a) => cmd_partials(a, out, err),
    }
}

/// One timed value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub m: usize,
    pub method: &'static str,
    pub value: f64,
    pub wall_time_s: f64,
    pub repeats: usize,
}

/// Runs `f` once to warm up, then `repeats` times; returns the last value
/// and the median wall time in seconds.
pub fn median_time<R>(repeats: usize, mut f: impl FnMut() -> R) -> (R, f64) {
    let mut value = std::hint::black_box(f());
    let mut times: Vec<f64> = (0..repeats.max(1))
        .map(|_| {
            let t = Instant::now();
            value = std::hint::black_box(f());
            t.elapsed().as_secs_f64()
        })
        .collect();
    times.sort_by(f64::total_cmp);
    let n = times.len();
    let median = if n % 2 == 1 { times[n / 2] } else { 0.5 * (times[n / 2 - 1] + times[n / 2]) };
    (value, median)
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

/// Ten significant digits, switching to exponent form for very large or
/// small magnitudes.
pub fn sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let e = x.abs().log10().floor() as i32;
    if (-5..10).contains(&e) {
        format!("{:.*}", (9 - e).max(0) as usize, x)
    } else {
        format!("{x:.9e}")
    }
}

fn check(err: &mut dyn Write, name: &str, ok: bool, detail: String) -> CliResult<bool> {
    writeln!(err, "{} {name}: {detail}", if ok { "PASS" } else { "FAIL" })?;
    Ok(ok)
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn require_repeats(r: usize) -> CliResult<()> {
    if r < 3 {
        return Err(usage(format!("--repeats must be at least 3, got {r}")));
    }
    Ok(())
}

fn to_dd(v: &[f64]) -> Vec<DoubleDouble> {
    v.iter().map(|&x| DoubleDouble::from(x)).collect()
}

/// Dual-number `d4(x, y, z, w)` of the inverted cosine wave.
pub fn icwf_dual_d4(m: usize) -> f64 {
    let s = IcwfSetup::<f64>::new(m);
    d4(icwf, &s.q, &s.x, &s.y, &s.z, &s.w).expect("setup dimensions agree")
}

/// Finite-difference `d4(x, y, z, w)` of the inverted cosine wave.
pub fn icwf_fmfd_d4(m: usize, scheme: &FdScheme, cap: usize) -> crate::Result<f64> {
    match scheme.precision {
        Precision::F64 => {
            let s = IcwfSetup::<f64>::new(m);
            directional4_fd(icwf, &s.q, &s.x, &s.y, &s.z, &s.w, scheme, cap)
        }
        Precision::Extended => {
            let s = IcwfSetup::<DoubleDouble>::new(m);
            directional4_fd(icwf, &s.q, &s.x, &s.y, &s.z, &s.w, scheme, cap).map(|v| v.to_f64())
        }
    }
}

fn cmd_table1(a: &Table1Args, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<bool> {
    require_repeats(a.repeats)?;
    if let Some(&m) = a.m_list.iter().find(|&&m| m < 2) {
        return Err(usage(format!("every m must be at least 2, got {m}")));
    }
    let contraction = if a.full_contraction { Contraction::Full } else { Contraction::Symmetric };
    let scheme = FdScheme::for_order(4, a.order, a.h)?.with_precision(a.precision.into()).with_contraction(contraction);

    let mut records = Vec::new();
    for &m in &a.m_list {
        let (value, t) = median_time(a.repeats, || icwf_dual_d4(m));
        records.push(BenchRecord { m, method: "dual", value, wall_time_s: t, repeats: a.repeats });
        if !a.no_fmfd && m <= a.m_cap {
            let (value, t) = median_time(a.repeats, || icwf_fmfd_d4(m, &scheme, a.m_cap));
            records.push(BenchRecord { m, method: "fmfd", value: value?, wall_time_s: t, repeats: a.repeats });
        }
    }
    emit_records(&records, a.format, out)?;

    let mut ok = true;
    if a.verify {
        let comparable = a.precision == PrecisionArg::Extended && a.order == 4 && a.h == 1e-5;
        for r in &records {
            let Some(&(_, dual, fmfd)) = refv::TABLE1.iter().find(|row| row.0 == r.m) else {
                continue;
            };
            let (want, tol) = if r.method == "dual" {
                (dual, refv::TABLE1_DUAL_TOL)
            } else if comparable {
                (fmfd, refv::TABLE1_FMFD_TOL)
            } else {
                continue;
            };
            let name = format!("table1 m={} {}", r.m, r.method);
            ok &= check(err, &name, (r.value - want).abs() <= tol, format!("{:.3} vs {want:.3} (tol {tol})", r.value))?;
        }
    }
    Ok(ok)
}

fn emit_records(records: &[BenchRecord], format: Format, out: &mut dyn Write) -> CliResult<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(records).expect("serializable"))?,
        Format::Csv => {
            writeln!(out, "m,method,value,wall_time_s,repeats")?;
            for r in records {
                writeln!(out, "{},{},{},{:e},{}", r.m, r.method, r.value, r.wall_time_s, r.repeats)?;
            }
        }
        Format::Table => {
            writeln!(out, "{:>6}  {:<6}  {:>16}  {:>12}", "m", "method", "d4", "time (s)")?;
            for r in records {
                writeln!(out, "{:>6}  {:<6}  {:>16.3}  {:>12.6}", r.m, r.method, r.value, r.wall_time_s)?;
            }
        }
    }
    Ok(())
}

fn cmd_complexity(a: &ComplexityArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<bool> {
    require_repeats(a.repeats)?;
    if let Some(&m) = a.m_list.iter().find(|&&m| m < 2) {
        return Err(usage(format!("every m must be at least 2, got {m}")));
    }
    let records: Vec<BenchRecord> = a
        .m_list
        .iter()
        .map(|&m| {
            let (value, t) = median_time(a.repeats, || icwf_dual_d4(m));
            BenchRecord { m, method: "dual", value, wall_time_s: t, repeats: a.repeats }
        })
        .collect();
    emit_records(&records, a.format, out)?;
    if records.len() < 2 {
        return Ok(true);
    }
    let ms: Vec<f64> = records.iter().map(|r| r.m as f64).collect();
    let ts: Vec<f64> = records.iter().map(|r| r.wall_time_s.max(1e-12)).collect();
    let slope = loglog_slope(&ms, &ts);
    match a.format {
        Format::Table => writeln!(out, "log-log slope: {slope:.3}")?,
        _ => writeln!(err, "log-log slope: {slope:.3}")?,
    }
    if a.verify {
        return check(err, "complexity slope", (0.8..=1.3).contains(&slope), format!("{slope:.3} in [0.8, 1.3]"));
    }
    Ok(true)
}

fn read_snapshot(path: &PathBuf) -> CliResult<KinematicSnapshot> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let s: KinematicSnapshot =
        serde_json::from_str(&text).map_err(|e| usage(format!("malformed snapshot {}: {e}", path.display())))?;
    s.validate()?;
    Ok(s)
}

#[derive(Serialize)]
struct RouteOutput {
    route: &'static str,
    #[serde(flatten)]
    result: KinematicResult,
}

fn cmd_kinematics(a: &KinematicsArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<bool> {
    let custom = a.snapshot.as_ref().map(read_snapshot).transpose()?;
    let chain = match a.model {
        ModelArg::Hypothetical => None,
        ModelArg::Rcr => Some(rcr_model()),
        ModelArg::File => {
            let path = a.chain.as_ref().ok_or_else(|| usage("model `file` needs --chain"))?;
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Some(Chain::from_json(&text)?)
        }
    };
    let snapshot = match (&custom, a.model) {
        (Some(s), _) => s.clone(),
        (None, ModelArg::Hypothetical) => refv::nested_sine_snapshot(),
        (None, ModelArg::Rcr) => refv::rcr_snapshot(),
        (None, ModelArg::File) => return Err(usage("model `file` needs --snapshot")),
    };

    let mut routes = Vec::new();
    match &chain {
        None => {
            if snapshot.dim() != 2 {
                return Err(Error::DimensionMismatch { expected: 2, found: snapshot.dim() }.into());
            }
            routes.push(RouteOutput { route: "timejet", result: kinematics_timejet(nested_sine, &snapshot)? });
            routes.push(RouteOutput { route: "directional", result: kinematics_directional(nested_sine, &snapshot)? });
        }
        Some(c) => {
            if snapshot.dim() != c.dof() {
                return Err(Error::DimensionMismatch { expected: c.dof(), found: snapshot.dim() }.into());
            }
            routes.push(RouteOutput { route: "timejet", result: kinematics_timejet(c.field(), &snapshot)? });
            routes.push(RouteOutput { route: "directional", result: kinematics_directional(c.field(), &snapshot)? });
            routes.push(RouteOutput { route: "screw", result: screw_kinematics(c, &snapshot)? });
        }
    }

    const NAMES: [&str; 4] = ["v", "a", "jerk", "snap"];
    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&routes).expect("serializable"))?,
        Format::Csv => {
            writeln!(out, "route,quantity,component,value")?;
            for r in &routes {
                for (name, row) in NAMES.iter().zip(r.result.rows()) {
                    for (i, v) in row.iter().enumerate() {
                        writeln!(out, "{},{name},{},{v:.4}", r.route, i + 1)?;
                    }
                }
            }
        }
        Format::Table => {
            for r in &routes {
                writeln!(out, "[{}]", r.route)?;
                for (name, row) in NAMES.iter().zip(r.result.rows()) {
                    let cols: Vec<String> = row.iter().map(|v| format!("{v:>12.4}")).collect();
                    writeln!(out, "  {name:<5}{}", cols.join(""))?;
                }
            }
        }
    }

    if !a.verify {
        return Ok(true);
    }
    let mut ok = true;
    let reference = match (a.model, custom.is_none()) {
        (ModelArg::Hypothetical, true) => Some(refv::TABLE2),
        (ModelArg::Rcr, true) => Some(refv::TABLE3),
        _ => None,
    };
    if let Some(table) = reference {
        for r in &routes {
            let worst = r
                .result
                .rows()
                .iter()
                .zip(&table)
                .flat_map(|(got, want)| got.iter().zip(want).map(|(g, w)| (g - w).abs()))
                .fold(0.0, f64::max);
            ok &= check(
                err,
                &format!("{} reference", r.route),
                worst <= refv::KINEMATICS_TOL,
                format!("max abs error {worst:.2e} (tol {:.0e})", refv::KINEMATICS_TOL),
            )?;
        }
    }
    let rel = routes[0].result.max_rel_diff(&routes[1].result);
    ok &= check(err, "dual routes agree", rel <= 1e-11, format!("max rel diff {rel:.2e} (tol 1e-11)"))?;
    if let Some(s) = routes.get(2) {
        let abs = routes[0].result.max_abs_diff(&s.result);
        ok &= check(err, "screw oracle agrees", abs <= 1e-9, format!("max abs diff {abs:.2e} (tol 1e-9)"))?;
    }
    Ok(ok)
}

#[derive(Debug, Clone, Serialize)]
pub struct PartialRecord {
    pub label: String,
    pub indices: Vec<usize>,
    pub dual: f64,
    pub fmfd: Vec<(PrecisionArg, f64)>,
}

/// FMFD partial of a named function in the requested precision.
pub fn fd_partial(func: FunctionId, point: &[f64], indices: &[usize], scheme: &FdScheme) -> crate::Result<f64> {
    match scheme.precision {
        Precision::F64 => partial_fd(|v: &[f64]| func.eval(v), point, indices, scheme),
        Precision::Extended => {
            partial_fd(|v: &[DoubleDouble]| func.eval(v), &to_dd(point), indices, scheme).map(|v| v.to_f64())
        }
    }
}

type PartialRows = Vec<(String, Vec<usize>)>;

fn cmd_partials(a: &PartialsArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<bool> {
    let (func, point, rows): (FunctionId, Vec<f64>, PartialRows) = match a.preset {
        PresetArg::Table4 => (
            FunctionId::Eff,
            EFF_POINT.to_vec(),
            refv::TABLE4.iter().map(|r| (r.label.to_string(), r.indices.to_vec())).collect(),
        ),
        PresetArg::Custom => {
            let point = match (&a.point, a.function) {
                (Some(p), _) => p.clone(),
                (None, FunctionId::Eff) => EFF_POINT.to_vec(),
                (None, _) => return Err(usage("--point is required for this function")),
            };
            let idx = a.indices.clone().ok_or_else(|| usage("custom partials need --indices"))?;
            let label = format!("{:?}{idx:?}", a.function).to_lowercase();
            (a.function, point, vec![(label, idx)])
        }
    };
    func.check_point(point.len())?;

    let mut records = Vec::new();
    for (label, idx) in rows {
        let dual = partial(|v| func.eval(v), &point, &idx)?;
        let mut fmfd = Vec::new();
        for &p in &a.precision {
            let scheme = FdScheme::for_order(idx.len(), a.order, a.h)?.with_precision(p.into());
            fmfd.push((p, fd_partial(func, &point, &idx, &scheme)?));
        }
        records.push(PartialRecord { label, indices: idx, dual, fmfd });
    }

    let pname = |p: PrecisionArg| match p {
        PrecisionArg::F64 => "f64",
        PrecisionArg::Extended => "extended",
    };
    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&records).expect("serializable"))?,
        Format::Csv => {
            let heads: Vec<String> = a.precision.iter().map(|&p| format!("fmfd_{}", pname(p))).collect();
            writeln!(out, "label,indices,dual,{}", heads.join(","))?;
            for r in &records {
                let idx: Vec<String> = r.indices.iter().map(|i| i.to_string()).collect();
                let vals: Vec<String> = r.fmfd.iter().map(|(_, v)| sig10(*v)).collect();
                writeln!(out, "{},{},{},{}", r.label, idx.join(" "), sig10(r.dual), vals.join(","))?;
            }
        }
        Format::Table => {
            let heads: String = a.precision.iter().map(|&p| format!("{:>22}", format!("fmfd {}", pname(p)))).collect();
            writeln!(out, "{:<18}{:>18}{heads}", "partial", "dual")?;
            for r in &records {
                let vals: String = r.fmfd.iter().map(|(_, v)| format!("{:>22}", sig10(*v))).collect();
                writeln!(out, "{:<18}{:>18}{vals}", r.label, sig10(r.dual))?;
            }
        }
    }

    if !a.verify {
        return Ok(true);
    }
    let mut ok = true;
    let reference_scheme = a.order == 8 && a.h == 1e-5;
    for (i, r) in records.iter().enumerate() {
        let ext = r.fmfd.iter().find(|(p, _)| *p == PrecisionArg::Extended).map(|x| x.1);
        let f64v = r.fmfd.iter().find(|(p, _)| *p == PrecisionArg::F64).map(|x| x.1);
        if a.preset == PresetArg::Table4 {
            let row = &refv::TABLE4[i];
            let e = (r.dual - row.dual).abs();
            ok &= check(err, &format!("{} dual", row.label), e <= refv::TABLE4_DUAL_TOL, format!("error {e:.1e}"))?;
            if let (Some(v), true) = (ext, reference_scheme) {
                let e = (v - row.extended).abs();
                ok &= check(
                    err,
                    &format!("{} extended", row.label),
                    e <= refv::TABLE4_EXTENDED_TOL,
                    format!("error {e:.1e}"),
                )?;
            }
            if let (Some(v), true, true) = (f64v, reference_scheme, i >= 2) {
                let floor = refv::TABLE4_BINARY64_FAILURE[i - 2];
                let e = (v - row.dual).abs();
                ok &= check(
                    err,
                    &format!("{} binary64 fails", row.label),
                    e > floor,
                    format!("error {e:.3e} > {floor:.0e}"),
                )?;
            }
        } else if let Some(v) = ext {
            let e = (v - r.dual).abs();
            ok &= check(
                err,
                &format!("{} extended vs dual", r.label),
                e <= refv::TABLE4_EXTENDED_TOL,
                format!("error {e:.1e}"),
            )?;
        }
    }
    Ok(ok)
}
