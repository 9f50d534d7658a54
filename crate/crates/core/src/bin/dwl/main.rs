//! `dwl` — phase-space quantifiers of magnetically trapped Dirac spinors.
//!
//! Subcommands: `sweep` (mutual-information tables over (n, ε, κ)), `field`
//! (phase-space dumps of local purity / concurrence / density), `verify`
//! (the named cross-check suite as JSON), and `wigner-dump` (analytic vs
//! Weyl-oracle matrices per probe point).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O
//! error.

mod config;
mod format;

use clap::{Args, Parser, Subcommand};
use config::ConfigFile;
use dwl_core::landau::{LandauState, ParityBranch, PhysParams, Spin};
use dwl_core::numerics::{QuadratureGrid, DEFAULT_GRID_PAD};
use dwl_core::quantifiers::{
    concurrence_sq_field, entropy_sp_closed, entropy_xk, local_purity, mutual_information,
    mutual_information_from_parts, purity_trace,
};
use dwl_core::verify::{run_all, VerifyOptions};
use dwl_core::wigner::{
    density, omega_matrix, weyl_transform, PhasePoint, SampledSpinor, WignerMatrixField,
};
use format::{CsvWriter, Json};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "dwl",
    version,
    about = "Phase-space (Wigner) quantifiers of Dirac spinors in a uniform magnetic field"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep mutual information and entropies over (n, eps, kappa)
    Sweep(SweepArgs),
    /// Dump a phase-space field (local purity, concurrence squared, density)
    Field(FieldArgs),
    /// Run the verification suite and emit the JSON report
    Verify(VerifyArgs),
    /// Dump analytic and Weyl-oracle Wigner matrices per probe point
    WignerDump(WignerDumpArgs),
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat key=value config file (flags take precedence)
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct StateArgs {
    /// Landau index n >= 1
    #[arg(long)]
    n: Option<i32>,
    /// Intrinsic-parity branch, 1 or 2
    #[arg(long)]
    r: Option<u8>,
    /// Spin label, + or -
    #[arg(long, allow_hyphen_values = true)]
    spin: Option<String>,
}

#[derive(Args, Clone)]
struct PhysicsArgs {
    /// Dimensionless magnetic coupling eB/m^2 (pairs with --kappa)
    #[arg(long)]
    eps: Option<f64>,
    /// Dimensionless k_z^2/m^2 (pairs with --eps)
    #[arg(long)]
    kappa: Option<f64>,
    /// Mass scale (physical parameter set)
    #[arg(long)]
    m: Option<f64>,
    /// Magnetic coupling eB (physical parameter set)
    #[arg(long = "eB")]
    e_b: Option<f64>,
    /// Longitudinal momentum k_z (physical parameter set)
    #[arg(long)]
    kz: Option<f64>,
    /// Transverse momentum k_y (orbit-center shift only)
    #[arg(long)]
    ky: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    /// Largest Landau index (rows run n = 1..=n-max)
    #[arg(long = "n-max")]
    n_max: Option<i32>,
    /// Comma-separated eps values
    #[arg(long)]
    eps: Option<String>,
    /// Comma-separated kappa values
    #[arg(long)]
    kappa: Option<String>,
    /// Also compute the quadrature-based M column (slower)
    #[arg(long = "with-quadrature", default_value_t = false)]
    with_quadrature: bool,
    /// Grid points per axis for the quadrature columns
    #[arg(long = "grid-points")]
    grid_points: Option<usize>,
    /// Grid padding beyond the classical turning point
    #[arg(long = "grid-pad")]
    grid_pad: Option<f64>,
    /// Output format: csv or json
    #[arg(long)]
    format: Option<String>,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct FieldArgs {
    /// Which field to dump: purity, concurrence, or density
    #[arg(long)]
    quantity: Option<String>,
    #[command(flatten)]
    state: StateArgs,
    #[command(flatten)]
    physics: PhysicsArgs,
    /// Grid points per axis
    #[arg(long = "grid-points")]
    grid_points: Option<usize>,
    /// Grid padding beyond the classical turning point
    #[arg(long = "grid-pad")]
    grid_pad: Option<f64>,
    /// Output format: csv or ppm
    #[arg(long)]
    format: Option<String>,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct VerifyArgs {
    /// Multiplies every gated tolerance (values < 1 tighten the gates)
    #[arg(long = "tolerance-scale")]
    tolerance_scale: Option<f64>,
    /// Grid points per axis for the quadrature checks
    #[arg(long = "grid-points")]
    grid_points: Option<usize>,
    /// Output format (json only)
    #[arg(long)]
    format: Option<String>,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct WignerDumpArgs {
    #[command(flatten)]
    state: StateArgs,
    #[command(flatten)]
    physics: PhysicsArgs,
    /// Probe points as "s:k;s:k;..."; default is an aligned 5x5 grid
    #[arg(long)]
    points: Option<String>,
    /// Probe grid size per axis when --points is not given
    #[arg(long = "grid-points")]
    grid_points: Option<usize>,
    #[command(flatten)]
    common: CommonOpts,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Sweep(args) => cmd_sweep(args),
        Command::Field(args) => cmd_field(args),
        Command::Verify(args) => cmd_verify(args),
        Command::WignerDump(args) => cmd_wigner_dump(args),
    };
    match outcome {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("i/o error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}

enum CliError {
    Usage(String),
    Io(String),
}

impl From<dwl_core::Error> for CliError {
    fn from(e: dwl_core::Error) -> Self {
        match e {
            dwl_core::Error::Io(io) => CliError::Io(io.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<ExitCode, CliError>;

fn load_config(common: &CommonOpts) -> Result<ConfigFile, CliError> {
    match &common.config {
        None => Ok(ConfigFile::default()),
        Some(path) => ConfigFile::load(path).map_err(CliError::Usage),
    }
}

fn pick<T>(cli: Option<T>, cfg: Result<Option<T>, String>, default: T) -> Result<T, CliError> {
    match cli {
        Some(v) => Ok(v),
        None => Ok(cfg.map_err(CliError::Usage)?.unwrap_or(default)),
    }
}

fn parse_list(raw: &str, what: &str) -> Result<Vec<f64>, CliError> {
    let vals: Result<Vec<f64>, _> = raw
        .split(',')
        .map(|tok| tok.trim().parse::<f64>())
        .collect();
    let vals = vals.map_err(|_| CliError::Usage(format!("cannot parse {what} list {raw:?}")))?;
    if vals.is_empty() || raw.trim().is_empty() {
        return Err(CliError::Usage(format!("{what} list must not be empty")));
    }
    Ok(vals)
}

fn parse_spin(raw: &str) -> Result<Spin, CliError> {
    match raw {
        "+" | "up" => Ok(Spin::Up),
        "-" | "down" => Ok(Spin::Down),
        other => Err(CliError::Usage(format!(
            "spin must be + or -, got {other:?}"
        ))),
    }
}

fn parse_branch(raw: u8) -> Result<ParityBranch, CliError> {
    match raw {
        1 => Ok(ParityBranch::R1),
        2 => Ok(ParityBranch::R2),
        other => Err(CliError::Usage(format!("r must be 1 or 2, got {other}"))),
    }
}

/// Resolve the physics inputs: (eps, kappa) or (m, eB, kz, ky), never mixed.
fn resolve_params(args: &PhysicsArgs, cfg: &ConfigFile) -> Result<PhysParams, CliError> {
    let eps = args.eps.or(cfg.parse("eps").map_err(CliError::Usage)?);
    let kappa = args.kappa.or(cfg.parse("kappa").map_err(CliError::Usage)?);
    let m = args.m.or(cfg.parse("m").map_err(CliError::Usage)?);
    let e_b = args.e_b.or(cfg.parse("eB").map_err(CliError::Usage)?);
    let kz = args.kz.or(cfg.parse("kz").map_err(CliError::Usage)?);
    let ky = args.ky.or(cfg.parse("ky").map_err(CliError::Usage)?);
    let dimensionless_given = eps.is_some() || kappa.is_some();
    let physical_given = m.is_some() || e_b.is_some() || kz.is_some() || ky.is_some();
    if dimensionless_given && physical_given {
        return Err(CliError::Usage(
            "give either (--eps, --kappa) or (--m, --eB, --kz, --ky), not a mix".into(),
        ));
    }
    if physical_given {
        let e_b = e_b.ok_or_else(|| CliError::Usage("physical parameters need --eB".into()))?;
        Ok(PhysParams::new(
            m.unwrap_or(1.0),
            e_b,
            kz.unwrap_or(0.0),
            ky.unwrap_or(0.0),
        )?)
    } else {
        let eps =
            eps.ok_or_else(|| CliError::Usage("provide --eps (with --kappa) or --eB".into()))?;
        Ok(PhysParams::dimensionless(eps, kappa.unwrap_or(0.0))?)
    }
}

fn resolve_state(
    state: &StateArgs,
    params: PhysParams,
    cfg: &ConfigFile,
) -> Result<LandauState, CliError> {
    let n = pick(state.n, cfg.parse("n"), 1)?;
    let r = parse_branch(pick(state.r, cfg.parse("r"), 1)?)?;
    let spin = parse_spin(&pick(
        state.spin.clone(),
        cfg.parse::<String>("spin"),
        "+".into(),
    )?)?;
    Ok(LandauState::new(n, r, spin, params)?)
}

fn write_output(common: &CommonOpts, bytes: &[u8]) -> Result<(), CliError> {
    match &common.out {
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(bytes)
                .map_err(|e| CliError::Io(e.to_string()))
        }
        Some(path) => std::fs::write(path, bytes).map_err(|e| CliError::Io(e.to_string())),
    }
}

fn cmd_sweep(args: SweepArgs) -> CmdResult {
    let cfg = load_config(&args.common)?;
    let n_max = pick(args.n_max, cfg.parse("n-max"), 10)?;
    if n_max < 1 {
        return Err(CliError::Usage(format!(
            "--n-max must be >= 1, got {n_max}"
        )));
    }
    let eps_raw = pick(args.eps, cfg.parse::<String>("eps"), "0.1,1,10".into())?;
    let kappa_raw = pick(
        args.kappa,
        cfg.parse::<String>("kappa"),
        "0.01,1,100".into(),
    )?;
    let eps_list = parse_list(&eps_raw, "eps")?;
    let kappa_list = parse_list(&kappa_raw, "kappa")?;
    let format = pick(args.format, cfg.parse::<String>("format"), "csv".into())?;
    let grid_points = pick(args.grid_points, cfg.parse("grid-points"), 512)?;
    let grid_pad = pick(args.grid_pad, cfg.parse("grid-pad"), DEFAULT_GRID_PAD)?;
    for &eps in &eps_list {
        if eps <= 0.0 {
            return Err(CliError::Usage(format!(
                "eps values must be positive, got {eps}"
            )));
        }
    }
    for &kappa in &kappa_list {
        if kappa < 0.0 {
            return Err(CliError::Usage(format!(
                "kappa values must be >= 0, got {kappa}"
            )));
        }
    }
    let grid = sized_grid(n_max, grid_pad, grid_points)?;

    struct Row {
        n: i32,
        eps: f64,
        kappa: f64,
        m_closed: f64,
        m_parts: Option<f64>,
        i_sp: f64,
        i_xk: f64,
        purity: f64,
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for &eps in &eps_list {
            for &kappa in &kappa_list {
                let params = PhysParams::dimensionless(eps, kappa)?;
                let st = LandauState::new(n, ParityBranch::R1, Spin::Up, params)?;
                let m_closed = mutual_information(n, eps, kappa)?;
                let i_sp = entropy_sp_closed(&st);
                let (m_parts, i_xk, purity) = if args.with_quadrature {
                    let field = WignerMatrixField::pure(st);
                    let xk = entropy_xk(&st, &grid)?;
                    (
                        Some(mutual_information_from_parts(&st, &grid)?),
                        xk,
                        purity_trace(&field, &grid)?,
                    )
                } else {
                    // closed forms: the entropies coincide and pure-state
                    // purity is identically 1
                    let c = st.coefficients();
                    let norm = c.eta * ((1.0 + c.a * c.a) + c.b * c.b);
                    (None, i_sp, norm * norm)
                };
                rows.push(Row {
                    n,
                    eps,
                    kappa,
                    m_closed,
                    m_parts,
                    i_sp,
                    i_xk,
                    purity,
                });
            }
        }
    }

    let bytes = match format.as_str() {
        "csv" => {
            let mut header = vec!["n", "eps", "kappa", "M_closed"];
            if args.with_quadrature {
                header.push("M_parts");
            }
            header.extend_from_slice(&["I_sp", "I_xk", "purity"]);
            let mut w = CsvWriter::new(&header);
            for row in &rows {
                let mut vals = vec![f64::from(row.n), row.eps, row.kappa, row.m_closed];
                if let Some(mp) = row.m_parts {
                    vals.push(mp);
                }
                vals.extend_from_slice(&[row.i_sp, row.i_xk, row.purity]);
                w.row(&vals);
            }
            w.finish().into_bytes()
        }
        "json" => {
            let items: Vec<Json> = rows
                .iter()
                .map(|row| {
                    let mut fields = vec![
                        ("n".to_string(), Json::Int(i64::from(row.n))),
                        ("eps".to_string(), Json::Num(row.eps)),
                        ("kappa".to_string(), Json::Num(row.kappa)),
                        ("M_closed".to_string(), Json::Num(row.m_closed)),
                    ];
                    if let Some(mp) = row.m_parts {
                        fields.push(("M_parts".to_string(), Json::Num(mp)));
                    }
                    fields.push(("I_sp".to_string(), Json::Num(row.i_sp)));
                    fields.push(("I_xk".to_string(), Json::Num(row.i_xk)));
                    fields.push(("purity".to_string(), Json::Num(row.purity)));
                    Json::Obj(fields)
                })
                .collect();
            Json::Obj(vec![
                ("command".to_string(), Json::Str("sweep".into())),
                ("rows".to_string(), Json::Arr(items)),
            ])
            .to_string_pretty()
            .into_bytes()
        }
        other => {
            return Err(CliError::Usage(format!(
                "sweep format must be csv or json, got {other:?}"
            )))
        }
    };
    write_output(&args.common, &bytes)?;
    Ok(ExitCode::SUCCESS)
}

fn sized_grid(n_max: i32, pad: f64, points: usize) -> Result<QuadratureGrid, CliError> {
    let l = (2.0 * (2.0 * f64::from(n_max.max(0)) + 1.0)).sqrt() + pad;
    Ok(QuadratureGrid::trapezoid(-l, l, -l, l, points, points)?)
}

fn cmd_field(args: FieldArgs) -> CmdResult {
    let cfg = load_config(&args.common)?;
    let quantity = pick(
        args.quantity.clone(),
        cfg.parse::<String>("quantity"),
        "purity".into(),
    )?;
    let params = resolve_params(&args.physics, &cfg)?;
    let st = resolve_state(&args.state, params, &cfg)?;
    let grid_points = pick(args.grid_points, cfg.parse("grid-points"), 512)?;
    let grid_pad = pick(args.grid_pad, cfg.parse("grid-pad"), DEFAULT_GRID_PAD)?;
    let format = pick(
        args.format.clone(),
        cfg.parse::<String>("format"),
        "csv".into(),
    )?;
    let e_b = st.params().e_b;
    let eval: Box<dyn Fn(PhasePoint) -> f64 + Sync> = match quantity.as_str() {
        // dimensionless scalings per the normalization conventions
        "purity" => Box::new(move |p| local_purity(&st, p) / e_b),
        "concurrence" => Box::new(move |p| concurrence_sq_field(&st, p) / e_b),
        "density" => Box::new(move |p| density(&st, p) / e_b.sqrt()),
        "wigner" => {
            return Err(CliError::Usage(
                "field does not dump matrices; use `dwl wigner-dump` for --quantity wigner".into(),
            ))
        }
        other => return Err(CliError::Usage(format!("unknown field quantity {other:?}"))),
    };
    let grid = sized_grid(st.n(), grid_pad, grid_points)?;
    let bytes = match format.as_str() {
        "csv" => {
            let mut w = CsvWriter::new(&["s", "k", "value"]);
            for &s in grid.s_nodes() {
                for &k in grid.k_nodes() {
                    w.row(&[s, k, eval(PhasePoint::new(s, k))]);
                }
            }
            w.finish().into_bytes()
        }
        "ppm" => {
            // rows top-down = k descending, columns = s ascending
            let mut values = Vec::with_capacity(grid.n_s * grid.n_k);
            for kk in (0..grid.n_k).rev() {
                for ss in 0..grid.n_s {
                    values.push(eval(PhasePoint::new(
                        grid.s_nodes()[ss],
                        grid.k_nodes()[kk],
                    )));
                }
            }
            format::ppm(&values, grid.n_s, grid.n_k)
        }
        other => {
            return Err(CliError::Usage(format!(
                "field format must be csv or ppm, got {other:?}"
            )))
        }
    };
    write_output(&args.common, &bytes)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let cfg = load_config(&args.common)?;
    let tolerance_scale = pick(args.tolerance_scale, cfg.parse("tolerance-scale"), 1.0)?;
    let grid_points = pick(args.grid_points, cfg.parse("grid-points"), 512)?;
    let format = pick(args.format, cfg.parse::<String>("format"), "json".into())?;
    if format != "json" {
        return Err(CliError::Usage(format!(
            "verify emits json only, got {format:?}"
        )));
    }
    if tolerance_scale <= 0.0 {
        return Err(CliError::Usage("--tolerance-scale must be positive".into()));
    }
    if grid_points < 64 {
        return Err(CliError::Usage(
            "--grid-points must be at least 64 for verify".into(),
        ));
    }
    let opts = VerifyOptions {
        tolerance_scale,
        grid_points,
    };
    let report = run_all(&opts)?;
    for check in &report.checks {
        eprintln!(
            "{} {:45} residual {:.3e} (tolerance {:.1e})",
            if check.pass { "PASS" } else { "FAIL" },
            check.name,
            check.residual,
            check.tolerance,
        );
    }
    let checks_json: Vec<Json> = report
        .checks
        .iter()
        .map(|c| {
            let mut fields = vec![
                ("name".to_string(), Json::Str(c.name.clone())),
                ("residual".to_string(), Json::Num(c.residual)),
                ("tolerance".to_string(), Json::Num(c.tolerance)),
                ("pass".to_string(), Json::Bool(c.pass)),
            ];
            if let Some(note) = &c.note {
                fields.push(("note".to_string(), Json::Str(note.clone())));
            }
            Json::Obj(fields)
        })
        .collect();
    let states_json: Vec<Json> = report
        .states
        .iter()
        .map(|s| {
            let q = &s.quantifiers;
            let residuals = Json::Obj(
                q.residuals
                    .iter()
                    .map(|(k, v)| (k.clone(), Json::Num(*v)))
                    .collect(),
            );
            Json::Obj(vec![
                ("n".to_string(), Json::Int(i64::from(s.n))),
                ("r".to_string(), Json::Int(i64::from(s.r))),
                ("spin".to_string(), Json::Str(s.spin.clone())),
                ("eps".to_string(), Json::Num(s.eps)),
                ("kappa".to_string(), Json::Num(s.kappa)),
                ("purity_trace".to_string(), Json::Num(q.purity_trace)),
                ("purity_clifford".to_string(), Json::Num(q.purity_clifford)),
                (
                    "purity_coordinate".to_string(),
                    Json::Num(q.purity_coordinate),
                ),
                ("entropy_sp".to_string(), Json::Num(q.entropy_sp)),
                ("entropy_xk".to_string(), Json::Num(q.entropy_xk)),
                ("mutual_info_def".to_string(), Json::Num(q.mutual_info_def)),
                (
                    "mutual_info_closed".to_string(),
                    Json::Num(q.mutual_info_closed),
                ),
                (
                    "concurrence_sq_integral".to_string(),
                    Json::Num(q.concurrence_sq_integral),
                ),
                ("residuals".to_string(), residuals),
            ])
        })
        .collect();
    let passed = report.checks.iter().filter(|c| c.pass).count();
    let failed = report.checks.len() - passed;
    let doc = Json::Obj(vec![
        ("command".to_string(), Json::Str("verify".into())),
        ("tolerance_scale".to_string(), Json::Num(tolerance_scale)),
        ("grid_points".to_string(), Json::Int(grid_points as i64)),
        (
            "summary".to_string(),
            Json::Obj(vec![
                ("total".to_string(), Json::Int(report.checks.len() as i64)),
                ("passed".to_string(), Json::Int(passed as i64)),
                ("failed".to_string(), Json::Int(failed as i64)),
            ]),
        ),
        ("checks".to_string(), Json::Arr(checks_json)),
        ("states".to_string(), Json::Arr(states_json)),
    ]);
    write_output(&args.common, doc.to_string_pretty().as_bytes())?;
    if report.all_pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "{failed} of {} checks failed (see the README's known-discrepancy note for \
             concurrence_trace_vs_closed)",
            report.checks.len()
        );
        Ok(ExitCode::from(EXIT_VERIFY_FAILED))
    }
}

fn cmd_wigner_dump(args: WignerDumpArgs) -> CmdResult {
    let cfg = load_config(&args.common)?;
    let params = resolve_params(&args.physics, &cfg)?;
    let st = resolve_state(&args.state, params, &cfg)?;
    let probe_grid = pick(args.grid_points, cfg.parse("grid-points"), 5)?;
    let points: Vec<PhasePoint> = match &args.points {
        Some(raw) => {
            let mut pts = Vec::new();
            for pair in raw.split(';') {
                let Some((s, k)) = pair.split_once(':') else {
                    return Err(CliError::Usage(format!(
                        "points must look like \"s:k;s:k\", got {pair:?}"
                    )));
                };
                let s: f64 = s
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad s value {s:?}")))?;
                let k: f64 = k
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad k value {k:?}")))?;
                pts.push(PhasePoint::new(s, k));
            }
            pts
        }
        None => {
            if probe_grid < 2 {
                return Err(CliError::Usage(
                    "--grid-points must be >= 2 for wigner-dump".into(),
                ));
            }
            // probes on multiples of 1/2 stay aligned with the oracle lattice
            let mut pts = Vec::new();
            for i in 0..probe_grid {
                for j in 0..probe_grid {
                    let frac = |t: usize| -2.0 + 4.0 * (t as f64) / (probe_grid as f64 - 1.0);
                    let snap = |x: f64| (x * 2.0).round() / 2.0;
                    pts.push(PhasePoint::new(snap(frac(i)), snap(frac(j))));
                }
            }
            pts
        }
    };
    let e_b = st.params().e_b;
    // oracle lattice: spacing 1/(160 sqrt(eB)) so probes on multiples of
    // 1/320 stay aligned for any eB
    let half = 24.0 / e_b.sqrt();
    let psi = SampledSpinor::from_fn(|x| dwl_core::landau::spinor(&st, x), -half, half, 7681)?;
    let mut items = Vec::new();
    for p in &points {
        let analytic = omega_matrix(&st, *p);
        let oracle = weyl_transform(&psi, *p, e_b)?;
        let delta = analytic.max_abs_diff(&oracle);
        let matrix_json = |m: &dwl_core::clifford::ComplexMatrix4| {
            let mut rows = Vec::new();
            for i in 0..4 {
                for j in 0..4 {
                    rows.push(Json::Arr(vec![
                        Json::Num(m.entries[i][j].re),
                        Json::Num(m.entries[i][j].im),
                    ]));
                }
            }
            Json::Arr(rows)
        };
        items.push(Json::Obj(vec![
            ("s".to_string(), Json::Num(p.s)),
            ("k".to_string(), Json::Num(p.k)),
            ("analytic".to_string(), matrix_json(&analytic)),
            ("oracle".to_string(), matrix_json(&oracle)),
            ("max_abs_delta".to_string(), Json::Num(delta)),
        ]));
    }
    let doc = Json::Obj(vec![
        ("command".to_string(), Json::Str("wigner-dump".into())),
        ("n".to_string(), Json::Int(i64::from(st.n()))),
        ("r".to_string(), Json::Int(i64::from(st.r().index()))),
        ("spin".to_string(), Json::Str(st.spin().label().to_string())),
        ("eps".to_string(), Json::Num(st.params().eps())),
        ("kappa".to_string(), Json::Num(st.params().kappa())),
        ("points".to_string(), Json::Arr(items)),
    ]);
    write_output(&args.common, doc.to_string_pretty().as_bytes())?;
    Ok(ExitCode::SUCCESS)
}
