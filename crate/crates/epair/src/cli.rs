//! Reproducible sweep runner: every computation in the crate exposed as a
//! subcommand that writes a machine-readable table (CSV or JSON).
//!
//! Reproducibility contract: identical configuration yields byte-identical
//! output. Numbers print in Rust's shortest round-trip decimal form, rows
//! follow grid order regardless of worker count, and the Monte-Carlo
//! command is deterministic in the seed.
//!
//! Exit codes: 0 success, 1 validation failure, 2 computation failure,
//! 3 verification FAIL (oracle-verify only).

use crate::monopole::{self, MonopoleState, PatchId, SphericalPoint};
use crate::{classical, scatter};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_VERIFY_FAIL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "epair",
    about = "Planar Coulomb scattering of an identical electron pair: sweep tables for phase shifts, amplitudes, cross sections, monopole harmonics and classical deflection",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonOpts,
}

#[derive(Debug, Args, Clone)]
pub struct CommonOpts {
    /// Output file; "-" or absent writes to stdout.
    #[arg(long, global = true)]
    pub output: Option<String>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Verification tolerance (oracle-verify).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// RNG seed (classical-mc).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads for grid evaluation.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Flat key=value config file; command-line flags win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Phase shifts delta_Lambda(k) on a (lambda, k) grid.
    PhaseShifts {
        /// Helicity grid, e.g. "0..5" or "0,2,4".
        #[arg(long)]
        lambda: Option<String>,
        /// Wavenumber grid, e.g. "0.2..5:log:20".
        #[arg(long)]
        k: Option<String>,
    },
    /// Bloch scattering amplitude f_S(k, phi) over an azimuth grid.
    Amplitude {
        #[arg(long)]
        spin: Option<u32>,
        #[arg(long)]
        k: Option<String>,
        /// Azimuth grid in radians.
        #[arg(long)]
        phi: Option<String>,
        #[arg(long)]
        n_max: Option<usize>,
        /// Bloch sum over both handedness branches or right-handed only.
        #[arg(long, value_enum)]
        sum: Option<SumMode>,
    },
    /// Differential cross section |f|^4 over an azimuth grid.
    CrossSection {
        #[arg(long)]
        spin: Option<u32>,
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum)]
        sum: Option<SumMode>,
    },
    /// Deflection law: b(chi), |db/dchi|, Rutherford values and the
    /// trajectory-recovered deflection per grid point.
    ClassicalDeflection {
        #[arg(long)]
        k: Option<String>,
        /// Deflection-angle grid in radians, strictly inside (0, pi).
        #[arg(long)]
        chi: Option<String>,
    },
    /// Monte-Carlo Rutherford estimate binned in the deflection angle.
    ClassicalMc {
        #[arg(long)]
        k: Option<f64>,
        #[arg(long)]
        bmax: Option<f64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        bins: Option<usize>,
    },
    /// Monopole harmonics sampled on an angular grid.
    MonopoleTable {
        /// Doubled angular momenta, e.g. "1,2,3" for l = 1/2, 1, 3/2.
        #[arg(long)]
        two_l: Option<String>,
        #[arg(long)]
        theta: Option<String>,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long, value_enum)]
        patch: Option<PatchArg>,
    },
    /// Per-channel |delta_analytic - delta_oracle| with PASS/FAIL verdicts.
    OracleVerify {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        k: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumMode {
    Symmetrized,
    RightHanded,
}

impl From<SumMode> for scatter::BlochSum {
    fn from(m: SumMode) -> Self {
        match m {
            SumMode::Symmetrized => scatter::BlochSum::Symmetrized,
            SumMode::RightHanded => scatter::BlochSum::RightHanded,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PatchArg {
    North,
    South,
}

// ---------------------------------------------------------------------------
// Grid specification parsing
// ---------------------------------------------------------------------------

/// Parse a grid spec: "a,b,c" list, "a..b" inclusive integer range, or
/// "a..b:lin|log:n".
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err("empty grid specification".into());
    }
    if let Some((range, rest)) = split_range(spec)? {
        let (lo, hi) = range;
        match rest {
            None => {
                // inclusive integer-stepped range
                if lo > hi {
                    return Err(format!("range minimum {lo} exceeds maximum {hi}"));
                }
                let n = (hi - lo).round() as usize;
                return Ok((0..=n).map(|i| lo + i as f64).collect());
            }
            Some((spacing, count)) => {
                if count < 1 {
                    return Err("grid count must be >= 1".into());
                }
                if lo > hi {
                    return Err(format!("range minimum {lo} exceeds maximum {hi}"));
                }
                let pts = match spacing {
                    Spacing::Lin => linspace(lo, hi, count),
                    Spacing::Log => {
                        if lo <= 0.0 {
                            return Err("log spacing requires min > 0".into());
                        }
                        linspace(lo.ln(), hi.ln(), count)
                            .into_iter()
                            .map(f64::exp)
                            .collect()
                    }
                };
                return Ok(pts);
            }
        }
    }
    spec.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| format!("cannot parse grid value '{tok}'"))
        })
        .collect()
}

enum Spacing {
    Lin,
    Log,
}

type RangeSpec = ((f64, f64), Option<(Spacing, usize)>);

fn split_range(spec: &str) -> Result<Option<RangeSpec>, String> {
    let Some(dots) = spec.find("..") else {
        return Ok(None);
    };
    let lo: f64 = spec[..dots]
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse range start in '{spec}'"))?;
    let rest = &spec[dots + 2..];
    let mut parts = rest.split(':');
    let hi: f64 = parts
        .next()
        .unwrap_or("")
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse range end in '{spec}'"))?;
    match parts.next() {
        None => Ok(Some(((lo, hi), None))),
        Some(sp) => {
            let spacing = match sp.trim() {
                "lin" => Spacing::Lin,
                "log" => Spacing::Log,
                other => return Err(format!("unknown spacing '{other}' (want lin or log)")),
            };
            let count: usize = parts
                .next()
                .ok_or_else(|| format!("missing point count in '{spec}'"))?
                .trim()
                .parse()
                .map_err(|_| format!("cannot parse point count in '{spec}'"))?;
            if parts.next().is_some() {
                return Err(format!("trailing fields in grid spec '{spec}'"));
            }
            Ok(Some(((lo, hi), Some((spacing, count)))))
        }
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

// ---------------------------------------------------------------------------
// Flat key=value config files
// ---------------------------------------------------------------------------

#[derive(Debug, Default, Clone)]
pub struct ConfigMap(BTreeMap<String, String>);

impl ConfigMap {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut map = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!(
                    "line {}: expected 'key = value', got '{raw}'",
                    lineno + 1
                ));
            };
            map.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(ConfigMap(map))
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }
}

/// Resolve one field: CLI flag wins, then the config file, then a default.
fn resolve<T: std::str::FromStr>(
    flag: Option<T>,
    cfg: &ConfigMap,
    key: &str,
    default: Option<T>,
) -> Result<T, String> {
    if let Some(v) = flag {
        return Ok(v);
    }
    if let Some(raw) = cfg.get(key) {
        return raw
            .parse()
            .map_err(|_| format!("config field '{key}': cannot parse '{raw}'"));
    }
    default.ok_or_else(|| format!("missing required field '{key}'"))
}

fn resolve_grid(
    flag: Option<String>,
    cfg: &ConfigMap,
    key: &str,
    default: Option<&str>,
) -> Result<Vec<f64>, String> {
    let spec = match flag {
        Some(s) => s,
        None => match cfg.get(key) {
            Some(s) => s.to_string(),
            None => default
                .ok_or_else(|| format!("missing required grid '{key}'"))?
                .to_string(),
        },
    };
    parse_grid(&spec).map_err(|e| format!("grid '{key}': {e}"))
}

// ---------------------------------------------------------------------------
// Output tables
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v}"),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => {
                if v.is_finite() {
                    format!("{v}")
                } else {
                    "null".into()
                }
            }
            Cell::Text(s) => format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\"")),
            Cell::Empty => "null".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Table {
        Table {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("[\n");
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str("  {");
            for (j, (col, cell)) in self.columns.iter().zip(row).enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                let _ = write!(out, "\"{col}\": {}", cell.json());
            }
            out.push('}');
            if i + 1 < self.rows.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("]\n");
        out
    }
}

// ---------------------------------------------------------------------------
// Command execution
// ---------------------------------------------------------------------------

struct RunOutcome {
    table: Table,
    any_row_error: bool,
    any_verify_fail: bool,
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_VALIDATION
        }
    }
}

pub fn run(cli: Cli) -> Result<i32, String> {
    let cfg = match &cli.common.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
            ConfigMap::parse(&text)?
        }
        None => ConfigMap::default(),
    };
    let jobs = resolve(cli.common.jobs, &cfg, "jobs", Some(0usize))?;
    let outcome = if jobs > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| format!("cannot build worker pool: {e}"))?;
        pool.install(|| execute(&cli, &cfg))?
    } else {
        execute(&cli, &cfg)?
    };

    let format = match cli.common.format {
        Some(f) => f,
        None => match cfg.get("format") {
            Some("csv") => OutputFormat::Csv,
            Some("json") => OutputFormat::Json,
            Some(other) => return Err(format!("config field 'format': unknown value '{other}'")),
            None => OutputFormat::Csv,
        },
    };
    let rendered = match format {
        OutputFormat::Csv => outcome.table.to_csv(),
        OutputFormat::Json => outcome.table.to_json(),
    };
    let output = cli
        .common
        .output
        .or_else(|| cfg.get("output").map(String::from))
        .unwrap_or_else(|| "-".into());
    if output == "-" {
        print!("{rendered}");
    } else {
        fs::write(&output, rendered).map_err(|e| format!("cannot write {output}: {e}"))?;
    }

    Ok(if outcome.any_verify_fail {
        EXIT_VERIFY_FAIL
    } else if outcome.any_row_error {
        EXIT_COMPUTATION
    } else {
        EXIT_OK
    })
}

fn execute(cli: &Cli, cfg: &ConfigMap) -> Result<RunOutcome, String> {
    match &cli.command {
        Command::PhaseShifts { lambda, k } => {
            let lambdas = resolve_grid(lambda.clone(), cfg, "lambda", Some("0..5"))?;
            let ks = resolve_grid(k.clone(), cfg, "k", Some("0.2..5:log:20"))?;
            phase_shifts_cmd(&lambdas, &ks)
        }
        Command::Amplitude {
            spin,
            k,
            phi,
            n_max,
            sum,
        } => {
            let spin = resolve(*spin, cfg, "spin", Some(0u32))?;
            let ks = resolve_grid(k.clone(), cfg, "k", Some("1"))?;
            let phis = resolve_grid(phi.clone(), cfg, "phi", Some("0.1..3.04:lin:30"))?;
            let n_max = resolve(*n_max, cfg, "n_max", Some(64usize))?;
            let mode = sum_mode(*sum, cfg)?;
            amplitude_cmd(spin, &ks, &phis, n_max, mode, false)
        }
        Command::CrossSection {
            spin,
            k,
            phi,
            n_max,
            sum,
        } => {
            let spin = resolve(*spin, cfg, "spin", Some(0u32))?;
            let ks = resolve_grid(k.clone(), cfg, "k", Some("1"))?;
            let phis = resolve_grid(phi.clone(), cfg, "phi", Some("0.1..3.04:lin:30"))?;
            let n_max = resolve(*n_max, cfg, "n_max", Some(64usize))?;
            let mode = sum_mode(*sum, cfg)?;
            amplitude_cmd(spin, &ks, &phis, n_max, mode, true)
        }
        Command::ClassicalDeflection { k, chi } => {
            let ks = resolve_grid(k.clone(), cfg, "k", Some("1"))?;
            let chis = resolve_grid(chi.clone(), cfg, "chi", Some("0.3..2.8:lin:12"))?;
            classical_deflection_cmd(&ks, &chis)
        }
        Command::ClassicalMc { k, bmax, n, bins } => {
            let k = resolve(*k, cfg, "k", Some(1.0))?;
            let bmax = resolve(*bmax, cfg, "bmax", Some(5.0))?;
            let n = resolve(*n, cfg, "n", Some(100_000usize))?;
            let bins = resolve(*bins, cfg, "bins", Some(36usize))?;
            let seed = resolve(cli.common.seed, cfg, "seed", Some(0u64))?;
            classical_mc_cmd(k, bmax, n, bins, seed)
        }
        Command::MonopoleTable {
            two_l,
            theta,
            phi,
            patch,
        } => {
            let two_ls = resolve_grid(two_l.clone(), cfg, "two_l", Some("0..3"))?;
            let thetas = resolve_grid(theta.clone(), cfg, "theta", Some("0.2..1.4:lin:7"))?;
            let phis = resolve_grid(phi.clone(), cfg, "phi", Some("0..6.0:lin:7"))?;
            let patch = match patch {
                Some(PatchArg::North) => PatchId::North,
                Some(PatchArg::South) => PatchId::South,
                None => match cfg.get("patch") {
                    Some("north") | None => PatchId::North,
                    Some("south") => PatchId::South,
                    Some(other) => {
                        return Err(format!("config field 'patch': unknown value '{other}'"))
                    }
                },
            };
            monopole_table_cmd(&two_ls, &thetas, &phis, patch)
        }
        Command::OracleVerify { lambda, k } => {
            let lambdas = resolve_grid(lambda.clone(), cfg, "lambda", Some("0..3"))?;
            let ks = resolve_grid(k.clone(), cfg, "k", Some("0.5,1,2"))?;
            let tol = resolve(cli.common.tol, cfg, "tol", Some(1e-6))?;
            oracle_verify_cmd(&lambdas, &ks, tol)
        }
    }
}

fn sum_mode(flag: Option<SumMode>, cfg: &ConfigMap) -> Result<scatter::BlochSum, String> {
    Ok(match flag {
        Some(m) => m.into(),
        None => match cfg.get("sum") {
            Some("symmetrized") | None => scatter::BlochSum::Symmetrized,
            Some("right-handed") => scatter::BlochSum::RightHanded,
            Some(other) => return Err(format!("config field 'sum': unknown value '{other}'")),
        },
    })
}

fn require_integer_grid(values: &[f64], what: &str) -> Result<Vec<u32>, String> {
    values
        .iter()
        .map(|&v| {
            if v >= 0.0 && (v - v.round()).abs() < 1e-9 {
                Ok(v.round() as u32)
            } else {
                Err(format!(
                    "{what} grid must hold nonnegative integers, got {v}"
                ))
            }
        })
        .collect()
}

fn phase_shifts_cmd(lambdas: &[f64], ks: &[f64]) -> Result<RunOutcome, String> {
    let lambdas = require_integer_grid(lambdas, "lambda")?;
    let mut table = Table::new(&["lambda", "k_inv_bohr", "delta_rad"]);
    for &lam in &lambdas {
        let mut ks_sorted = ks.to_vec();
        ks_sorted.sort_by(f64::total_cmp);
        if ks_sorted != ks {
            return Err("k grid must be ascending for sweep unwrapping".into());
        }
        let deltas = scatter::phase_shift_sweep(lam, ks).map_err(|e| e.to_string())?;
        for (&k, &d) in ks.iter().zip(&deltas) {
            table.push(vec![Cell::Int(lam as i64), Cell::Float(k), Cell::Float(d)]);
        }
    }
    Ok(RunOutcome {
        table,
        any_row_error: false,
        any_verify_fail: false,
    })
}

fn amplitude_cmd(
    spin: u32,
    ks: &[f64],
    phis: &[f64],
    n_max: usize,
    mode: scatter::BlochSum,
    cross_section: bool,
) -> Result<RunOutcome, String> {
    let mut cols = vec!["spin", "k_inv_bohr", "phi_rad"];
    if cross_section {
        cols.extend_from_slice(&["dsigma_domega_bohr2", "status"]);
    } else {
        cols.extend_from_slice(&["re_f", "im_f", "abs_f", "status"]);
    }
    let mut table = Table::new(&cols);
    let mut any_err = false;
    for &k in ks {
        let series = scatter::AmplitudeSeries::build(spin, k, n_max).map_err(|e| e.to_string())?;
        for &phi in phis {
            let mut row = vec![Cell::Int(spin as i64), Cell::Float(k), Cell::Float(phi)];
            match series.eval(phi, mode) {
                Ok(f) => {
                    if cross_section {
                        row.push(Cell::Float(f.norm_sqr() * f.norm_sqr()));
                    } else {
                        row.push(Cell::Float(f.re));
                        row.push(Cell::Float(f.im));
                        row.push(Cell::Float(f.norm()));
                    }
                    row.push(Cell::Text("ok".into()));
                }
                Err(e) => {
                    any_err = true;
                    let blanks = if cross_section { 1 } else { 3 };
                    for _ in 0..blanks {
                        row.push(Cell::Empty);
                    }
                    row.push(Cell::Text(error_tag(&e)));
                }
            }
            table.push(row);
        }
    }
    Ok(RunOutcome {
        table,
        any_row_error: any_err,
        any_verify_fail: false,
    })
}

fn error_tag(e: &scatter::ScatterError) -> String {
    match e {
        scatter::ScatterError::ForwardSingularity { .. } => "forward-window".into(),
        other => format!("error: {other}"),
    }
}

fn classical_deflection_cmd(ks: &[f64], chis: &[f64]) -> Result<RunOutcome, String> {
    let mut table = Table::new(&[
        "k_inv_bohr",
        "chi_rad",
        "b_bohr",
        "db_dchi_abs_bohr",
        "dsigma_rutherford_bohr2",
        "dsigma_symmetrized_bohr2",
        "chi_recovered_rad",
        "status",
    ]);
    let grid: Vec<(f64, f64)> = ks
        .iter()
        .flat_map(|&k| chis.iter().map(move |&chi| (k, chi)))
        .collect();
    let rows: Vec<Result<Vec<Cell>, String>> = grid
        .par_iter()
        .map(|&(k, chi)| {
            let b = classical::impact_from_angle(chi, k).map_err(|e| e.to_string())?;
            let db = 1.0 / (2.0 * k * k * (chi / 2.0).sin().powi(2));
            let ruth = classical::rutherford(chi, k, false).map_err(|e| e.to_string())?;
            let ruth_sym = classical::rutherford(chi, k, true).map_err(|e| e.to_string())?;
            let mut row = vec![
                Cell::Float(k),
                Cell::Float(chi),
                Cell::Float(b),
                Cell::Float(db),
                Cell::Float(ruth),
                Cell::Float(ruth_sym),
            ];
            match classical::integrate_trajectory(b, k, 1e-10) {
                Ok(t) => {
                    row.push(Cell::Float(t.chi));
                    row.push(Cell::Text("ok".into()));
                }
                Err(e) => {
                    row.push(Cell::Empty);
                    row.push(Cell::Text(format!("error: {e}")));
                }
            }
            Ok(row)
        })
        .collect();
    let mut any_err = false;
    for row in rows {
        let row = row?;
        if matches!(row.last(), Some(Cell::Text(s)) if s != "ok") {
            any_err = true;
        }
        table.push(row);
    }
    Ok(RunOutcome {
        table,
        any_row_error: any_err,
        any_verify_fail: false,
    })
}

fn classical_mc_cmd(
    k: f64,
    bmax: f64,
    n: usize,
    bins: usize,
    seed: u64,
) -> Result<RunOutcome, String> {
    let hist = classical::mc_cross_section(k, bmax, n, bins, seed).map_err(|e| e.to_string())?;
    let mut table = Table::new(&[
        "chi_lo_rad",
        "chi_hi_rad",
        "chi_mid_rad",
        "count",
        "dsigma_mc_bohr2",
        "std_err_bohr2",
        "dsigma_rutherford_bohr2",
    ]);
    for i in 0..bins {
        let (lo, hi) = (hist.bin_edges[i], hist.bin_edges[i + 1]);
        let mid = 0.5 * (lo + hi);
        let ruth = classical::rutherford(mid, k, false).map_err(|e| e.to_string())?;
        table.push(vec![
            Cell::Float(lo),
            Cell::Float(hi),
            Cell::Float(mid),
            Cell::Int(hist.counts[i] as i64),
            Cell::Float(hist.dsigma[i]),
            Cell::Float(hist.std_err[i]),
            Cell::Float(ruth),
        ]);
    }
    Ok(RunOutcome {
        table,
        any_row_error: false,
        any_verify_fail: false,
    })
}

fn monopole_table_cmd(
    two_ls: &[f64],
    thetas: &[f64],
    phis: &[f64],
    patch: PatchId,
) -> Result<RunOutcome, String> {
    let two_ls = require_integer_grid(two_ls, "two_l")?;
    let mut table = Table::new(&[
        "two_l",
        "two_m",
        "two_lambda",
        "theta_rad",
        "phi_rad",
        "re_y",
        "im_y",
        "abs_y",
        "status",
    ]);
    let mut any_err = false;
    for &two_l in &two_ls {
        let tl = two_l as i32;
        for two_m in (-tl..=tl).step_by(2) {
            for two_lambda in (-tl..=tl).step_by(2) {
                let state = MonopoleState::new(tl, two_m, two_lambda).map_err(|e| e.to_string())?;
                for &theta in thetas {
                    for &phi in phis {
                        let mut row = vec![
                            Cell::Int(tl as i64),
                            Cell::Int(two_m as i64),
                            Cell::Int(two_lambda as i64),
                            Cell::Float(theta),
                            Cell::Float(phi),
                        ];
                        match SphericalPoint::new(theta, phi, 1.0)
                            .and_then(|pt| monopole::harmonic(&state, &pt, patch))
                        {
                            Ok(y) => {
                                row.push(Cell::Float(y.re));
                                row.push(Cell::Float(y.im));
                                row.push(Cell::Float(y.norm()));
                                row.push(Cell::Text("ok".into()));
                            }
                            Err(e) => {
                                any_err = true;
                                row.push(Cell::Empty);
                                row.push(Cell::Empty);
                                row.push(Cell::Empty);
                                row.push(Cell::Text(format!("error: {e}")));
                            }
                        }
                        table.push(row);
                    }
                }
            }
        }
    }
    Ok(RunOutcome {
        table,
        any_row_error: any_err,
        any_verify_fail: false,
    })
}

fn oracle_verify_cmd(lambdas: &[f64], ks: &[f64], tol: f64) -> Result<RunOutcome, String> {
    let lambdas = require_integer_grid(lambdas, "lambda")?;
    let grid: Vec<(u32, f64)> = lambdas
        .iter()
        .flat_map(|&lam| ks.iter().map(move |&k| (lam, k)))
        .collect();
    type VerifyRow = (u32, f64, Result<(f64, f64, f64), String>);
    let rows: Vec<VerifyRow> = grid
        .par_iter()
        .map(|&(lam, k)| {
            let result = (|| {
                let analytic = scatter::phase_shift(lam, k).map_err(|e| e.to_string())?;
                let oracle = scatter::radial_oracle(lam, k).map_err(|e| e.to_string())?;
                let diff = scatter::dist_mod_pi(analytic, oracle);
                Ok((analytic, oracle, diff))
            })();
            (lam, k, result)
        })
        .collect();
    let mut table = Table::new(&[
        "lambda",
        "k_inv_bohr",
        "delta_analytic_rad",
        "delta_oracle_rad",
        "abs_diff_mod_pi",
        "status",
    ]);
    let mut any_err = false;
    let mut any_fail = false;
    for (lam, k, result) in rows {
        let mut row = vec![Cell::Int(lam as i64), Cell::Float(k)];
        match result {
            Ok((analytic, oracle, diff)) => {
                row.push(Cell::Float(analytic));
                row.push(Cell::Float(oracle));
                row.push(Cell::Float(diff));
                if diff < tol {
                    row.push(Cell::Text("PASS".into()));
                } else {
                    any_fail = true;
                    row.push(Cell::Text("FAIL".into()));
                }
            }
            Err(e) => {
                any_err = true;
                row.push(Cell::Empty);
                row.push(Cell::Empty);
                row.push(Cell::Empty);
                row.push(Cell::Text(format!("error: {e}")));
            }
        }
        table.push(row);
    }
    Ok(RunOutcome {
        table,
        any_row_error: any_err,
        any_verify_fail: any_fail,
    })
}
