//! Command-line driver. Exit codes: 0 ok, 1 usage or configuration,
//! 2 numerical failure, 3 selftest failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::dirac::{
    bound_radial, bound_radial_ode, continuum_radial_closed, continuum_radial_ode, free_radial, DiracState,
    EnergySign, RadialValues, CLOSED_FORM_MAX_2PR,
};
use crate::figures::{all_figures, figure, o3_shift, FIGURE_TITLES};
use crate::forces::balance_residual;
use crate::report::{vpsum_table, RowRecord, RunManifest, Table};
use crate::seasum::{build_p_grid, run_vp, VPConfig, VPResultRow};
use crate::selftest::{self, DESK_CRITERIA, KNOWN_RED};
use crate::uehling::{uehling_asymptotic, uehling_density, uehling_oracle, Regime};
use crate::{Error, Result, ALPHA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;
pub const EXIT_SELFTEST: i32 = 3;

/// Environment variable consulted when `--workers` is absent.
pub const WORKERS_ENV: &str = "DIRACSEA_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "diracsea", version, about = "Dirac-sea vacuum polarization and force balance")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tabulate one radial solution.
    States(StatesArgs),
    /// Shell force balance over a state matrix.
    Balance(BalanceArgs),
    /// Uehling density with its oracle and asymptotes.
    Uehling(UehlingArgs),
    /// Sea-sum vacuum polarization, one row per radius.
    Vpsum(VpArgs),
    /// Sea sum against Uehling, with and without the O(α³) terms.
    Compare(VpArgs),
    /// Data series for the figures.
    Figures(FigureArgs),
    /// Run the acceptance checks.
    Selftest(SelftestArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
pub enum Kind {
    Bound,
    Continuum,
    Free,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
pub enum Method {
    Closed,
    Ode,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
pub enum Sign {
    Pos,
    Neg,
}

impl From<Sign> for EnergySign {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Pos => EnergySign::Positive,
            Sign::Neg => EnergySign::Negative,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct RadiusRange {
    #[arg(long, default_value_t = 0.01)]
    pub r_min: f64,
    #[arg(long, default_value_t = 4.0)]
    pub r_max: f64,
    #[arg(long, default_value_t = 50)]
    pub points: usize,
}

impl RadiusRange {
    fn grid(&self) -> Result<Vec<f64>> {
        if !(self.r_min > 0.0 && self.r_max >= self.r_min) || self.points == 0 {
            return Err(Error::Config(format!(
                "radius range needs 0 < r_min <= r_max and points > 0 (got {} {} {})",
                self.r_min, self.r_max, self.points
            )));
        }
        let n = self.points;
        Ok((0..n)
            .map(|i| {
                let t = if n == 1 { 0.0 } else { i as f64 / (n - 1) as f64 };
                self.r_min * (self.r_max / self.r_min).powf(t)
            })
            .collect())
    }
}

#[derive(Args, Debug)]
pub struct StatesArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    pub kappa: i32,
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    #[arg(long, value_enum, default_value_t = Sign::Pos)]
    pub sign: Sign,
    #[arg(long, default_value_t = ALPHA)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    pub method: Method,
    #[command(flatten)]
    pub range: RadiusRange,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BalanceArgs {
    #[arg(long, default_value_t = ALPHA)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub threshold: f64,
    #[arg(long, default_value_t = 0.01)]
    pub r_min: f64,
    #[arg(long, default_value_t = 4.0)]
    pub r_max: f64,
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct UehlingArgs {
    #[arg(long, default_value_t = ALPHA)]
    pub alpha: f64,
    #[command(flatten)]
    pub range: RadiusRange,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
pub enum Preset {
    /// p_max = 40/r, 400 points, |κ| ≤ 80
    Desk,
    /// p_max = 160/r, 1200 points, |κ| ≤ 200, r = 0.2
    Paper,
    /// library defaults
    Default,
}

/// Sea-sum settings shared by vpsum, compare and figures.
#[derive(Args, Debug, Clone, Default)]
pub struct VpArgs {
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// TOML file with any of the keys alpha, r_list, p_max_factor, n_p,
    /// kappa_max, kappa_rel_tol, damping, subtract_o3, extrapolate_tail,
    /// workers, out_dir.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Comma-separated radii.
    #[arg(long, value_delimiter = ',')]
    pub r: Option<Vec<f64>>,
    #[arg(long)]
    pub p_max_factor: Option<f64>,
    #[arg(long)]
    pub n_p: Option<usize>,
    #[arg(long)]
    pub kappa_max: Option<u32>,
    #[arg(long)]
    pub kappa_rel_tol: Option<f64>,
    #[arg(long)]
    pub no_damping: bool,
    #[arg(long)]
    pub subtract_o3: bool,
    #[arg(long)]
    pub no_extrapolate_tail: bool,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// Write wall-clock seconds into the CSV (breaks byte-identity).
    #[arg(long)]
    pub record_runtime: bool,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    /// Figure number 1-10; repeat for several.
    #[arg(long = "id", required_unless_present = "all")]
    pub ids: Vec<u32>,
    #[arg(long)]
    pub all: bool,
    /// Radius for the single-radius figures.
    #[arg(long = "at", default_value_t = 0.5)]
    pub at: f64,
    #[command(flatten)]
    pub vp: VpArgs,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    /// Also run the paper-scale spot check.
    #[arg(long)]
    pub paper: bool,
    /// Run only these criteria.
    #[arg(long, value_delimiter = ',')]
    pub only: Option<Vec<u32>>,
    /// Multiply every tolerance by this factor.
    #[arg(long, default_value_t = 1.0)]
    pub tolerance_scale: f64,
}

/// Keys accepted in a config file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub alpha: Option<f64>,
    pub r_list: Option<Vec<f64>>,
    pub p_max_factor: Option<f64>,
    pub n_p: Option<usize>,
    pub kappa_max: Option<u32>,
    pub kappa_rel_tol: Option<f64>,
    pub damping: Option<bool>,
    pub subtract_o3: Option<bool>,
    pub extrapolate_tail: Option<bool>,
    pub workers: Option<usize>,
    pub out_dir: Option<PathBuf>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(format!("config file: {e}")))
    }
}

/// Effective settings after preset, file and flags.
#[derive(Debug, Clone, PartialEq)]
pub struct Resolved {
    pub config: VPConfig,
    pub workers: usize,
    pub out_dir: PathBuf,
}

pub fn resolve(args: &VpArgs, default_out: &str) -> Result<Resolved> {
    let mut cfg = match args.preset {
        Some(Preset::Desk) => VPConfig::desk(),
        Some(Preset::Paper) => VPConfig::paper(),
        Some(Preset::Default) | None => VPConfig::default(),
    };
    let mut workers = None;
    let mut out_dir = None;
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        let f = FileConfig::parse(&text)?;
        cfg.alpha = f.alpha.unwrap_or(cfg.alpha);
        cfg.r_list = f.r_list.unwrap_or(cfg.r_list);
        cfg.p_max_factor = f.p_max_factor.unwrap_or(cfg.p_max_factor);
        cfg.n_p = f.n_p.unwrap_or(cfg.n_p);
        cfg.kappa_max = f.kappa_max.unwrap_or(cfg.kappa_max);
        cfg.kappa_rel_tol = f.kappa_rel_tol.unwrap_or(cfg.kappa_rel_tol);
        cfg.damping = f.damping.unwrap_or(cfg.damping);
        cfg.subtract_o3 = f.subtract_o3.unwrap_or(cfg.subtract_o3);
        cfg.extrapolate_tail = f.extrapolate_tail.unwrap_or(cfg.extrapolate_tail);
        workers = f.workers;
        out_dir = f.out_dir;
    }
    if let Some(a) = args.alpha {
        cfg.alpha = a;
    }
    if let Some(r) = &args.r {
        cfg.r_list = r.clone();
    }
    if let Some(x) = args.p_max_factor {
        cfg.p_max_factor = x;
    }
    if let Some(x) = args.n_p {
        cfg.n_p = x;
    }
    if let Some(x) = args.kappa_max {
        cfg.kappa_max = x;
    }
    if let Some(x) = args.kappa_rel_tol {
        cfg.kappa_rel_tol = x;
    }
    cfg.damping &= !args.no_damping;
    cfg.subtract_o3 |= args.subtract_o3;
    cfg.extrapolate_tail &= !args.no_extrapolate_tail;
    cfg.validate()?;
    for &r in &cfg.r_list {
        build_p_grid(r, cfg.p_max_factor, cfg.n_p)?;
    }
    let workers = args.workers.or(workers).map(Ok).unwrap_or_else(workers_from_env)?;
    if workers == 0 {
        return Err(Error::Config("workers must be at least 1".into()));
    }
    Ok(Resolved {
        config: cfg,
        workers,
        out_dir: args.out_dir.clone().or(out_dir).unwrap_or_else(|| PathBuf::from(default_out)),
    })
}

fn workers_from_env() -> Result<usize> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("{WORKERS_ENV} = {v:?} is not a worker count"))),
        Err(_) => Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}

fn with_workers<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    Ok(pool.install(job))
}

fn emit(table: &Table, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            table.write_csv(std::fs::File::create(path)?)
        }
        None => table.write_csv(std::io::stdout().lock()),
    }
}

pub const STATES_COLUMNS: [&str; 7] = ["r", "g", "f", "gp", "fp", "gpp", "fpp"];

pub fn states_table(a: &StatesArgs) -> Result<(Table, Vec<String>)> {
    let rs = a.range.grid()?;
    let state = match a.kind {
        Kind::Bound => DiracState::bound(a.n, a.kappa, a.alpha)?,
        Kind::Continuum => DiracState::continuum(a.p, a.kappa, a.sign.into(), a.alpha)?,
        Kind::Free => DiracState::free(a.p, a.kappa, a.sign.into())?,
    };
    let mut notes = vec![format!("evaluator: {:?}", a.method).to_lowercase()];
    let values: Vec<RadialValues> = match (a.kind, a.method) {
        (Kind::Bound, Method::Closed) => rs.iter().map(|&r| bound_radial(&state, r)).collect::<Result<_>>()?,
        (Kind::Bound, Method::Ode) => bound_radial_ode(&state, &rs)?,
        (Kind::Free, Method::Closed) => rs.iter().map(|&r| free_radial(&state, r)).collect::<Result<_>>()?,
        (Kind::Continuum, Method::Closed) => {
            let inside = |r: f64| 2.0 * a.p * r <= CLOSED_FORM_MAX_2PR;
            if rs.iter().all(|&r| inside(r)) {
                rs.iter().map(|&r| continuum_radial_closed(&state, r)).collect::<Result<_>>()?
            } else {
                notes.push(format!(
                    "closed form is limited to 2pr <= {CLOSED_FORM_MAX_2PR}; using the ODE evaluator"
                ));
                continuum_radial_ode(&state, &rs)?
            }
        }
        (_, Method::Ode) => continuum_radial_ode(&state, &rs)?,
    };
    let mut t = Table::new("states", &STATES_COLUMNS);
    for (r, v) in rs.iter().zip(values) {
        t.push(vec![(*r).into(), v.g.into(), v.f.into(), v.gp.into(), v.fp.into(), v.gpp.into(), v.fpp.into()]);
    }
    Ok((t, notes))
}

pub const BALANCE_COLUMNS: [&str; 11] = [
    "kind",
    "n",
    "p",
    "sign",
    "kappa",
    "r",
    "f_conf",
    "f_elec",
    "residual",
    "rel_residual",
    "pass",
];

/// Shell balance over bound n ≤ 3, |κ| ≤ 2 and continuum p ∈ {0.25 … 4},
/// |κ| ≤ 3, both energy signs. At α = 0 bound states are skipped and the
/// residual is taken relative to (2|κ|/4π)(f² + g²)(E² + 1/r²).
pub fn balance_table(alpha: f64, rs: &[f64], threshold: f64) -> Result<(Table, f64)> {
    let mut states = Vec::new();
    if alpha > 0.0 {
        for n in 1..=3u32 {
            for k in [-2, -1, 1, 2] {
                if let Ok(s) = DiracState::bound(n, k, alpha) {
                    states.push(s);
                }
            }
        }
    }
    for p in [0.25, 0.5, 1.0, 2.0, 4.0] {
        for k in [-3, -2, -1, 1, 2, 3] {
            for sign in [EnergySign::Positive, EnergySign::Negative] {
                states.push(DiracState::continuum(p, k, sign, alpha)?);
            }
        }
    }
    let mut t = Table::new("balance", &BALANCE_COLUMNS);
    let mut worst: f64 = 0.0;
    for s in &states {
        let (kind, n, p, sign) = match s.kind() {
            crate::dirac::StateKind::Bound { n } => ("bound", n as i64, f64::NAN, 0),
            crate::dirac::StateKind::Continuum { p, sign } => ("continuum", 0, p, sign.value() as i64),
            crate::dirac::StateKind::Free { p, sign } => ("free", 0, p, sign.value() as i64),
        };
        for &r in rs {
            let mut b = balance_residual(s, r)?;
            if alpha == 0.0 {
                // f_elec vanishes, so measure f_conf against the shell's natural scale
                let v = s.radial(r)?;
                let e = s.energy_parts().e;
                let scale = 2.0 * s.kappa().abs() as f64 / (4.0 * std::f64::consts::PI)
                    * (v.f * v.f + v.g * v.g)
                    * (e * e + 1.0 / (r * r));
                b.rel_residual = b.residual.abs() / scale.max(f64::MIN_POSITIVE);
            }
            worst = worst.max(b.rel_residual);
            t.push(vec![
                kind.into(),
                n.into(),
                p.into(),
                sign.into(),
                s.kappa().into(),
                r.into(),
                b.f_conf_r.into(),
                b.f_elec_r.into(),
                b.residual.into(),
                b.rel_residual.into(),
                (if b.rel_residual <= threshold { 1i64 } else { 0 }).into(),
            ]);
        }
    }
    Ok((t, worst))
}

pub const UEHLING_COLUMNS: [&str; 7] = ["r", "z", "rho", "v_reduced", "rho_oracle", "ratio_small", "ratio_large"];

pub fn uehling_table(alpha: f64, rs: &[f64]) -> Result<Table> {
    let mut t = Table::new("uehling", &UEHLING_COLUMNS);
    for &r in rs {
        let u = uehling_density(r, alpha)?;
        let oracle = if alpha > 0.0 { uehling_oracle(r, alpha)? } else { 0.0 };
        let ratio = |regime| -> Result<f64> {
            let a = uehling_asymptotic(r, alpha, regime)?;
            Ok(if a != 0.0 { u.rho / a } else { f64::NAN })
        };
        t.push(vec![
            r.into(),
            u.z.into(),
            u.rho.into(),
            u.v_reduced.into(),
            oracle.into(),
            ratio(Regime::Small)?.into(),
            ratio(Regime::Large)?.into(),
        ]);
    }
    Ok(t)
}

pub const COMPARE_COLUMNS: [&str; 8] = [
    "r",
    "v_sum",
    "v_uehling",
    "diff",
    "rel_diff",
    "rel_diff_o3",
    "err_est",
    "err_est_rel",
];

/// Sea sum against Uehling. `v_sum` is without the O(α³) terms whatever
/// the configuration says; `rel_diff_o3` includes them.
pub fn compare_table(rows: &[VPResultRow], cfg: &VPConfig) -> Table {
    let mut t = Table::new("compare", &COMPARE_COLUMNS);
    for row in rows {
        let shift = o3_shift(row.r, cfg.alpha);
        let plain = if cfg.subtract_o3 { row.v_sum - shift } else { row.v_sum };
        let scale = row.v_uehling.abs();
        let rel = |v: f64| if scale > 0.0 { (v - row.v_uehling) / scale } else { v - row.v_uehling };
        t.push(vec![
            row.r.into(),
            plain.into(),
            row.v_uehling.into(),
            (plain - row.v_uehling).into(),
            rel(plain).into(),
            rel(plain + shift).into(),
            row.err_est.into(),
            (if scale > 0.0 { row.err_est / scale } else { row.err_est }).into(),
        ]);
    }
    t
}

fn print_rows(rows: &[VPResultRow]) {
    eprintln!("{:>8} {:>14} {:>14} {:>11} {:>10}  status", "r", "v_sum", "v_uehling", "rel_diff", "err_est");
    for row in rows {
        eprintln!(
            "{:>8.4} {:>14.6e} {:>14.6e} {:>11.3e} {:>10.2e}  {}",
            row.r, row.v_sum, row.v_uehling, row.rel_diff, row.err_est, row.status
        );
    }
}

fn run_sea(args: &VpArgs, command: &str) -> Result<i32> {
    let res = resolve(args, &format!("out/{command}"))?;
    for w in res.config.warnings() {
        eprintln!("warning: {w}");
    }
    let t0 = Instant::now();
    let rows = with_workers(res.workers, || run_vp(&res.config))??;
    print_rows(&rows);
    let table = if command == "compare" {
        compare_table(&rows, &res.config)
    } else {
        vpsum_table(&rows, args.record_runtime)
    };
    let path = table.save(&res.out_dir)?;
    let mut manifest = RunManifest::new(command, res.workers);
    manifest.config = Some(res.config.clone());
    manifest.outputs.push(path.display().to_string());
    manifest.rows = rows.iter().map(RowRecord::from).collect();
    manifest.wall_clock_s = t0.elapsed().as_secs_f64();
    let failed = rows.iter().filter(|r| r.status != "ok").count();
    if failed > 0 {
        manifest.notes.push(format!("{failed} row(s) failed"));
    }
    manifest.save(&res.out_dir)?;
    eprintln!("wrote {} and manifest.json", path.display());
    Ok(if failed > 0 { EXIT_NUMERICAL } else { EXIT_OK })
}

fn run_figures(a: &FigureArgs) -> Result<i32> {
    let mut vp = a.vp.clone();
    if vp.preset.is_none() && vp.config.is_none() {
        vp.preset = Some(Preset::Desk);
    }
    let mut res = resolve(&vp, "out/figures")?;
    if vp.r.is_none() && vp.config.is_none() {
        res.config.r_list = vec![0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0];
    }
    let t0 = Instant::now();
    let tables = if a.all {
        with_workers(res.workers, || all_figures(&res.config, a.at))??
    } else {
        let mut out = Vec::new();
        for &id in &a.ids {
            if !(1..=10).contains(&id) {
                return Err(Error::Config(format!("unknown figure {id}; expected 1-10")));
            }
            out.extend(with_workers(res.workers, || figure(id, &res.config, a.at))??);
        }
        out
    };
    let mut manifest = RunManifest::new("figures", res.workers);
    manifest.config = Some(res.config.clone());
    for t in &tables {
        let id: usize = t.name.trim_start_matches("fig").parse().unwrap_or(0);
        let path = t.save(&res.out_dir)?;
        eprintln!("fig{id:<2} {}  -> {}", FIGURE_TITLES.get(id.wrapping_sub(1)).unwrap_or(&""), path.display());
        manifest.outputs.push(path.display().to_string());
    }
    manifest.notes.push(format!("single-radius figures at r = {}", a.at));
    manifest.wall_clock_s = t0.elapsed().as_secs_f64();
    manifest.save(&res.out_dir)?;
    Ok(EXIT_OK)
}

fn run_selftest(a: &SelftestArgs) -> Result<i32> {
    let mut ids: Vec<u32> = match &a.only {
        Some(ids) => ids.clone(),
        None => DESK_CRITERIA.to_vec(),
    };
    if a.paper && !ids.contains(&8) {
        ids.push(8);
        ids.sort_unstable();
    }
    if let Some(bad) = ids.iter().find(|&&i| !(1..=10).contains(&i)) {
        return Err(Error::Config(format!("no criterion {bad}")));
    }
    let opts = selftest::Options {
        tolerance_scale: a.tolerance_scale,
    };
    let mut all_ok = true;
    let mut out = std::io::stdout().lock();
    for id in ids {
        let o = selftest::run_criterion(id, &opts);
        let tag = if !o.passed && KNOWN_RED.contains(&id) { "  [known]" } else { "" };
        writeln!(out, "{}{tag}", o.line())?;
        all_ok &= o.passed;
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_SELFTEST })
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::States(a) => {
            let (t, notes) = states_table(&a)?;
            for n in notes {
                eprintln!("note: {n}");
            }
            emit(&t, a.out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Balance(a) => {
            let rs = RadiusRange {
                r_min: a.r_min,
                r_max: a.r_max,
                points: a.points,
            }
            .grid()?;
            let (t, worst) = balance_table(a.alpha, &rs, a.threshold)?;
            emit(&t, a.out.as_deref())?;
            eprintln!("max rel residual {worst:.3e} (threshold {:.1e})", a.threshold);
            Ok(if worst <= a.threshold { EXIT_OK } else { EXIT_NUMERICAL })
        }
        Command::Uehling(a) => {
            emit(&uehling_table(a.alpha, &a.range.grid()?)?, a.out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Vpsum(a) => run_sea(&a, "vpsum"),
        Command::Compare(a) => run_sea(&a, "compare"),
        Command::Figures(a) => run_figures(&a),
        Command::Selftest(a) => run_selftest(&a),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Config(_) | Error::Domain(_) | Error::Io(_) => EXIT_USAGE,
        Error::Precision { .. } | Error::Overflow(_) | Error::Numerical(_) => EXIT_NUMERICAL,
    }
}

/// Parse `args` (program name first), run, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
