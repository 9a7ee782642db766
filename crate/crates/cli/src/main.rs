//! Command-line reports for the infinite square well: the exact spectrum,
//! variational minimization, inequality property checks, uncertainty
//! bounds and coefficient projections.
//!
//! Exit codes are a stable scripting contract: 0 success, 1 inequality
//! violations found by `check-wirtinger`, 2 usage errors, 3 minimizer hit
//! the iteration budget, 4 I/O or state-validation failures.

use std::fmt::Write as _;
use std::fs;
use std::io::{BufReader, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use squarewell::analytic;
use squarewell::functionals::{
    bounds_report, epsilon_quad, norm_squared, wirtinger_margin, wirtinger_ratio,
};
use squarewell::io as wellio;
use squarewell::minimize::{minimize_rayleigh, MinimizerConfig, Start};
use squarewell::spectral::{project_exp, project_sine, sine_to_exp};
use squarewell::trials;
use squarewell::{Error, PhysicalParams, SampledWaveFunction, SineSeries};

const PI: f64 = std::f64::consts::PI;

#[derive(Parser)]
#[command(
    name = "squarewell",
    version,
    about = "Ground state and exact energy bound of the infinite square well, variationally",
    after_help = "Exit codes: 0 success, 1 inequality violation, 2 usage, \
                  3 non-convergence, 4 I/O or validation error."
)]
struct Cli {
    #[command(flatten)]
    options: GlobalOptions,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOptions {
    /// Reduced Planck constant ħ.
    #[arg(long, global = true, default_value_t = 1.0, value_parser = positive_f64)]
    hbar: f64,

    /// Particle mass m.
    #[arg(long, global = true, default_value_t = 1.0, value_parser = positive_f64)]
    mass: f64,

    /// Well width L (ignored for file states, whose grid fixes L).
    #[arg(long, global = true, default_value_t = 1.0, value_parser = positive_f64)]
    length: f64,

    /// Number of grid points for sampled states.
    #[arg(long, global = true, default_value_t = 1001, value_parser = clap::value_parser!(u64).range(3..))]
    grid_points: u64,

    /// Basis truncation K.
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    truncation: u64,

    /// Seed for every randomized command.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output_format: OutputFormat,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact energy levels E_n = ħ²π²n²/(2mL²).
    Spectrum {
        /// Highest level to print.
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
    },
    /// Minimize the energy functional over the sine basis by projected
    /// gradient descent and compare against the exact bound.
    Minimize {
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        max_iterations: u64,
        /// Gradient step; defaults to a tenth of the inverse top mode energy.
        #[arg(long, value_parser = positive_f64)]
        step_size: Option<f64>,
        /// Relative energy change that counts as converged.
        #[arg(long, default_value_t = 1e-12, value_parser = positive_f64)]
        tolerance: f64,
        /// Write the final sine coefficients here (CSV n,re,im).
        #[arg(long)]
        coeffs_out: Option<PathBuf>,
        /// Write the final sampled state here (CSV x,re,im).
        #[arg(long)]
        state_out: Option<PathBuf>,
    },
    /// Test the inequality ∫|ψ′|² ≥ (π²/L²)∫|ψ|² on random trial states,
    /// on the grid and exactly in coefficient space.
    CheckWirtinger {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Additionally run the analytic ground state as the equality case.
        #[arg(long)]
        include_ground: bool,
    },
    /// Uncertainty data and the crude vs exact bound for one state.
    Bounds {
        /// ground | mode:N | file:PATH
        state: StateSelector,
    },
    /// Project a state onto basis coefficients.
    Coeffs {
        /// ground | mode:N | file:PATH
        state: StateSelector,
        #[arg(long, value_enum, default_value_t = Basis::Sine)]
        basis: Basis,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Basis {
    Sine,
    Exp,
}

#[derive(Clone, Debug)]
enum StateSelector {
    Ground,
    Mode(usize),
    File(PathBuf),
}

impl FromStr for StateSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "ground" {
            return Ok(Self::Ground);
        }
        if let Some(index) = s.strip_prefix("mode:") {
            let n: usize = index
                .parse()
                .map_err(|_| format!("bad mode index '{index}'"))?;
            if n < 1 {
                return Err("mode index must be at least 1".into());
            }
            return Ok(Self::Mode(n));
        }
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(Self::File(PathBuf::from(path)));
        }
        Err(format!(
            "unknown state '{s}'; expected ground, mode:N or file:PATH"
        ))
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let value: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if value <= 0.0 || !value.is_finite() {
        return Err(format!("must be a positive finite number, got {value}"));
    }
    Ok(value)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::NonPositive { .. } | Error::TruncationTooSmall { .. } => 2,
        _ => 4,
    }
}

fn run(cli: Cli) -> squarewell::Result<ExitCode> {
    let options = &cli.options;
    let params = PhysicalParams::new(options.hbar, options.mass, options.length)?;
    match &cli.command {
        Command::Spectrum { n_max } => cmd_spectrum(options, params, *n_max as usize),
        Command::Minimize {
            max_iterations,
            step_size,
            tolerance,
            coeffs_out,
            state_out,
        } => {
            let config = MinimizerConfig {
                truncation: options.truncation as usize,
                max_iterations: *max_iterations as usize,
                step_size: *step_size,
                tolerance: *tolerance,
                seed: options.seed,
            };
            cmd_minimize(
                options,
                params,
                &config,
                coeffs_out.as_ref(),
                state_out.as_ref(),
            )
        }
        Command::CheckWirtinger {
            trials,
            include_ground,
        } => cmd_check_wirtinger(options, params, *trials as usize, *include_ground),
        Command::Bounds { state } => cmd_bounds(options, params, state),
        Command::Coeffs { state, basis } => cmd_coeffs(options, params, state, *basis),
    }
}

fn emit(options: &GlobalOptions, payload: &str) -> squarewell::Result<()> {
    match &options.output {
        Some(path) => fs::write(path, payload)?,
        None => {
            std::io::stdout().write_all(payload.as_bytes())?;
        }
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize infallibly");
    text.push('\n');
    text
}

// ---------------------------------------------------------------- spectrum

#[derive(Serialize)]
struct SpectrumReport {
    hbar: f64,
    mass: f64,
    length: f64,
    /// ħ²/(2mL²), the unit in which E_n = π²n².
    energy_unit: f64,
    levels: Vec<LevelRow>,
}

#[derive(Serialize)]
struct LevelRow {
    n: usize,
    energy: f64,
    energy_over_unit: f64,
}

fn cmd_spectrum(
    options: &GlobalOptions,
    params: PhysicalParams,
    n_max: usize,
) -> squarewell::Result<ExitCode> {
    let unit = params.energy_unit();
    let levels: Vec<LevelRow> = (1..=n_max)
        .map(|n| {
            let energy = analytic::energy_level(&params, n)?;
            Ok(LevelRow {
                n,
                energy,
                energy_over_unit: energy / unit,
            })
        })
        .collect::<squarewell::Result<_>>()?;

    let payload = match options.output_format {
        OutputFormat::Json => to_json(&SpectrumReport {
            hbar: params.hbar(),
            mass: params.mass(),
            length: params.length(),
            energy_unit: unit,
            levels,
        }),
        OutputFormat::Csv => {
            let rows: Vec<(usize, f64)> = levels.iter().map(|l| (l.n, l.energy)).collect();
            let mut buf = Vec::new();
            wellio::write_spectrum_csv(&mut buf, &rows)?;
            String::from_utf8(buf).expect("CSV is UTF-8")
        }
        OutputFormat::Text => {
            let mut text = String::new();
            let _ = writeln!(
                text,
                "exact spectrum (hbar={}, m={}, L={})",
                params.hbar(),
                params.mass(),
                params.length()
            );
            let _ = writeln!(text, "energy unit hbar^2/(2 m L^2) = {unit}");
            let _ = writeln!(text, "{:>4}  {:>22}  {:>22}", "n", "energy", "energy/unit");
            for l in &levels {
                let _ = writeln!(
                    text,
                    "{:>4}  {:>22}  {:>22}",
                    l.n,
                    format!("{}", l.energy),
                    format!("{}", l.energy_over_unit)
                );
            }
            text
        }
    };
    emit(options, &payload)?;
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------- minimize

#[derive(Serialize)]
struct MinimizeReport {
    final_energy: f64,
    exact_bound: f64,
    /// final_energy − exact_bound, nonnegative up to rounding.
    gap_above_bound: f64,
    overlap_with_mode1: f64,
    iterations_used: usize,
    converged: bool,
    truncation: usize,
    seed: u64,
    final_energy_over_unit: f64,
    exact_bound_over_unit: f64,
}

fn cmd_minimize(
    options: &GlobalOptions,
    params: PhysicalParams,
    config: &MinimizerConfig,
    coeffs_out: Option<&PathBuf>,
    state_out: Option<&PathBuf>,
) -> squarewell::Result<ExitCode> {
    let result = minimize_rayleigh(Start::Random(params), config)?;
    let bound = analytic::exact_bound(&params);
    let unit = params.energy_unit();
    let report = MinimizeReport {
        final_energy: result.final_energy,
        exact_bound: bound,
        gap_above_bound: result.final_energy - bound,
        overlap_with_mode1: result.overlap_with_mode1,
        iterations_used: result.iterations_used,
        converged: result.converged,
        truncation: config.truncation,
        seed: config.seed,
        final_energy_over_unit: result.final_energy / unit,
        exact_bound_over_unit: bound / unit,
    };

    if let Some(path) = coeffs_out {
        let mut buf = Vec::new();
        wellio::write_sine_csv(&mut buf, &result.final_series)?;
        fs::write(path, buf)?;
    }
    if let Some(path) = state_out {
        let sampled = result.final_series.sample(options.grid_points as usize)?;
        let mut buf = Vec::new();
        wellio::write_wavefunction_csv(&mut buf, &sampled)?;
        fs::write(path, buf)?;
    }

    let payload = match options.output_format {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Csv => {
            let mut buf = Vec::new();
            wellio::write_trajectory_csv(&mut buf, &result.energy_trajectory)?;
            String::from_utf8(buf).expect("CSV is UTF-8")
        }
        OutputFormat::Text => {
            let mut text = String::new();
            let _ = writeln!(
                text,
                "variational minimization (K={}, seed={}, hbar={}, m={}, L={})",
                config.truncation,
                config.seed,
                params.hbar(),
                params.mass(),
                params.length()
            );
            let _ = writeln!(
                text,
                "final energy        = {}  ({} units of hbar^2/(2mL^2))",
                report.final_energy, report.final_energy_over_unit
            );
            let _ = writeln!(
                text,
                "exact lower bound   = {}  (pi^2 = {} units)",
                report.exact_bound, report.exact_bound_over_unit
            );
            let _ = writeln!(text, "gap above bound     = {}", report.gap_above_bound);
            let _ = writeln!(text, "overlap with mode 1 = {}", report.overlap_with_mode1);
            let _ = writeln!(
                text,
                "iterations          = {} ({})",
                report.iterations_used,
                if report.converged {
                    "converged"
                } else {
                    "iteration budget exhausted"
                }
            );
            text
        }
    };
    emit(options, &payload)?;
    Ok(if result.converged {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

// --------------------------------------------------------- check-wirtinger

#[derive(Serialize)]
struct WirtingerSummary {
    trials: usize,
    grid_violations: usize,
    coeff_violations: usize,
    /// Trials whose coefficient-side margin is exactly zero.
    equality_cases: usize,
    bound: f64,
    epsilon_quad: f64,
    min_grid_margin: f64,
    mean_grid_margin: f64,
    min_coeff_margin: f64,
    mean_coeff_margin: f64,
    seed: u64,
}

fn cmd_check_wirtinger(
    options: &GlobalOptions,
    params: PhysicalParams,
    n_trials: usize,
    include_ground: bool,
) -> squarewell::Result<ExitCode> {
    let n_points = options.grid_points as usize;
    let truncation = options.truncation as usize;
    let bound = PI * PI / (params.length() * params.length());
    let eps = epsilon_quad(n_points, &params);

    let mut summary = WirtingerSummary {
        trials: 0,
        grid_violations: 0,
        coeff_violations: 0,
        equality_cases: 0,
        bound,
        epsilon_quad: eps,
        min_grid_margin: f64::INFINITY,
        mean_grid_margin: 0.0,
        min_coeff_margin: f64::INFINITY,
        mean_coeff_margin: 0.0,
        seed: options.seed,
    };

    let record = |grid_margin: f64, coeff_margin: f64, summary: &mut WirtingerSummary| {
        summary.trials += 1;
        summary.min_grid_margin = summary.min_grid_margin.min(grid_margin);
        summary.mean_grid_margin += grid_margin;
        summary.min_coeff_margin = summary.min_coeff_margin.min(coeff_margin);
        summary.mean_coeff_margin += coeff_margin;
        if grid_margin < -eps {
            summary.grid_violations += 1;
        }
        if coeff_margin < 0.0 {
            summary.coeff_violations += 1;
        }
        if coeff_margin == 0.0 {
            summary.equality_cases += 1;
        }
    };

    if include_ground {
        let series = SineSeries::pure_mode(1, 1, params)?;
        let ratio = wirtinger_ratio(&series.sample(n_points)?)?;
        let margin = wirtinger_margin(&sine_to_exp(&series));
        record(ratio - bound, margin, &mut summary);
    }
    for index in 0..n_trials as u64 {
        let trial = trials::generate(options.seed, index, &params, n_points)?;
        let ratio = wirtinger_ratio(trial.sampled())?;
        let margin = match trial.series() {
            Some(series) => wirtinger_margin(&sine_to_exp(series)),
            None => wirtinger_margin(&project_exp(trial.sampled(), truncation)?),
        };
        record(ratio - bound, margin, &mut summary);
    }
    summary.mean_grid_margin /= summary.trials as f64;
    summary.mean_coeff_margin /= summary.trials as f64;

    let clean = summary.grid_violations == 0 && summary.coeff_violations == 0;
    let payload = match options.output_format {
        OutputFormat::Json => to_json(&summary),
        OutputFormat::Csv => {
            let mut text = String::from("metric,value\n");
            let _ = writeln!(text, "trials,{}", summary.trials);
            let _ = writeln!(text, "grid_violations,{}", summary.grid_violations);
            let _ = writeln!(text, "coeff_violations,{}", summary.coeff_violations);
            let _ = writeln!(text, "equality_cases,{}", summary.equality_cases);
            let _ = writeln!(text, "bound,{}", summary.bound);
            let _ = writeln!(text, "epsilon_quad,{}", summary.epsilon_quad);
            let _ = writeln!(text, "min_grid_margin,{}", summary.min_grid_margin);
            let _ = writeln!(text, "mean_grid_margin,{}", summary.mean_grid_margin);
            let _ = writeln!(text, "min_coeff_margin,{}", summary.min_coeff_margin);
            let _ = writeln!(text, "mean_coeff_margin,{}", summary.mean_coeff_margin);
            text
        }
        OutputFormat::Text => {
            let mut text = String::new();
            let _ = writeln!(
                text,
                "wirtinger inequality check: {} trials (seed {}, N={}, K={})",
                summary.trials, summary.seed, n_points, truncation
            );
            let _ = writeln!(text, "bound pi^2/L^2        = {}", summary.bound);
            let _ = writeln!(text, "epsilon_quad          = {}", summary.epsilon_quad);
            let _ = writeln!(
                text,
                "grid side             = {} violations, margin min {} mean {}",
                summary.grid_violations, summary.min_grid_margin, summary.mean_grid_margin
            );
            let _ = writeln!(
                text,
                "coefficient side      = {} violations, margin min {} mean {}",
                summary.coeff_violations, summary.min_coeff_margin, summary.mean_coeff_margin
            );
            let _ = writeln!(
                text,
                "equality cases        = {}{}",
                summary.equality_cases,
                if summary.equality_cases > 0 {
                    " (margin exactly zero: ground-state support)"
                } else {
                    ""
                }
            );
            let _ = writeln!(
                text,
                "verdict               = {}",
                if clean {
                    "inequality holds"
                } else {
                    "VIOLATED"
                }
            );
            text
        }
    };
    emit(options, &payload)?;
    Ok(if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ------------------------------------------------------------------ bounds

fn resolve_state(
    options: &GlobalOptions,
    params: PhysicalParams,
    selector: &StateSelector,
    normalize: bool,
) -> squarewell::Result<(SampledWaveFunction, String)> {
    let n_points = options.grid_points as usize;
    match selector {
        StateSelector::Ground => Ok((
            analytic::ground_state(&params, n_points)?,
            "ground".to_string(),
        )),
        StateSelector::Mode(n) => {
            let sampled = SineSeries::pure_mode(*n, *n, params)?.sample(n_points)?;
            // Counteract quadrature drift so the moment preconditions hold
            // for high modes on coarse grids.
            let state = if normalize {
                let norm = norm_squared(&sampled);
                if norm == 0.0 {
                    return Err(Error::DegenerateInput);
                }
                sampled.scaled(Complex64::new(1.0 / norm.sqrt(), 0.0))
            } else {
                sampled
            };
            Ok((state, format!("mode:{n}")))
        }
        StateSelector::File(path) => {
            let file = fs::File::open(path)
                .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
            let psi =
                wellio::read_wavefunction_csv(BufReader::new(file), options.hbar, options.mass)?;
            Ok((psi, format!("file:{}", path.display())))
        }
    }
}

fn cmd_bounds(
    options: &GlobalOptions,
    params: PhysicalParams,
    selector: &StateSelector,
) -> squarewell::Result<ExitCode> {
    let (psi, label) = resolve_state(options, params, selector, true)?;
    let state_params = *psi.params();
    let report = bounds_report(&psi)?;

    let payload = match options.output_format {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Csv => {
            let mut text = String::from("metric,value\n");
            let _ = writeln!(text, "heisenberg_bound,{}", report.heisenberg_bound);
            let _ = writeln!(text, "exact_bound,{}", report.exact_bound);
            let _ = writeln!(text, "delta_x,{}", report.delta_x);
            let _ = writeln!(text, "delta_p,{}", report.delta_p);
            let _ = writeln!(text, "uncertainty_product,{}", report.uncertainty_product);
            let _ = writeln!(text, "bound_ratio,{}", report.bound_ratio);
            text
        }
        OutputFormat::Text => {
            let unit = state_params.energy_unit();
            let mut text = String::new();
            let _ = writeln!(
                text,
                "bounds report (state: {label}, hbar={}, m={}, L={})",
                state_params.hbar(),
                state_params.mass(),
                state_params.length()
            );
            let _ = writeln!(
                text,
                "heisenberg bound    = {}  ({} units of hbar^2/(2mL^2))",
                report.heisenberg_bound,
                report.heisenberg_bound / unit
            );
            let _ = writeln!(
                text,
                "exact bound         = {}  ({} units)",
                report.exact_bound,
                report.exact_bound / unit
            );
            let _ = writeln!(
                text,
                "bound ratio         = {}  (= pi^2: the crude bound is low by this factor)",
                report.bound_ratio
            );
            let _ = writeln!(text, "delta_x             = {}", report.delta_x);
            let _ = writeln!(text, "delta_p             = {}", report.delta_p);
            let _ = writeln!(
                text,
                "uncertainty product = {}  (hbar/2 = {})",
                report.uncertainty_product,
                0.5 * state_params.hbar()
            );
            text
        }
    };
    emit(options, &payload)?;
    Ok(ExitCode::SUCCESS)
}

// ------------------------------------------------------------------ coeffs

#[derive(Serialize)]
struct CoeffRow {
    index: isize,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct CoeffReport {
    state: String,
    basis: &'static str,
    truncation: usize,
    coefficients: Vec<CoeffRow>,
}

fn cmd_coeffs(
    options: &GlobalOptions,
    params: PhysicalParams,
    selector: &StateSelector,
    basis: Basis,
) -> squarewell::Result<ExitCode> {
    let (psi, label) = resolve_state(options, params, selector, false)?;
    let truncation = options.truncation as usize;

    let (rows, csv) = match basis {
        Basis::Sine => {
            let series = project_sine(&psi, truncation)?;
            let rows: Vec<CoeffRow> = series
                .coefficients()
                .iter()
                .enumerate()
                .map(|(idx, c)| CoeffRow {
                    index: idx as isize + 1,
                    re: c.re,
                    im: c.im,
                })
                .collect();
            let mut buf = Vec::new();
            wellio::write_sine_csv(&mut buf, &series)?;
            (rows, String::from_utf8(buf).expect("CSV is UTF-8"))
        }
        Basis::Exp => {
            let coefficients = project_exp(&psi, truncation)?;
            let rows: Vec<CoeffRow> = coefficients
                .indexed()
                .map(|(k, a)| CoeffRow {
                    index: k,
                    re: a.re,
                    im: a.im,
                })
                .collect();
            let mut buf = Vec::new();
            wellio::write_exp_csv(&mut buf, &coefficients)?;
            (rows, String::from_utf8(buf).expect("CSV is UTF-8"))
        }
    };

    let payload = match options.output_format {
        OutputFormat::Json => to_json(&CoeffReport {
            state: label,
            basis: match basis {
                Basis::Sine => "sine",
                Basis::Exp => "exp",
            },
            truncation,
            coefficients: rows,
        }),
        OutputFormat::Csv => csv,
        OutputFormat::Text => {
            let mut text = String::new();
            let _ = writeln!(
                text,
                "{} coefficients of {} (K={})",
                match basis {
                    Basis::Sine => "sine-basis",
                    Basis::Exp => "exponential-basis",
                },
                label,
                truncation
            );
            let header = match basis {
                Basis::Sine => "n",
                Basis::Exp => "k",
            };
            let _ = writeln!(text, "{:>4}  {:>24}  {:>24}", header, "re", "im");
            for row in &rows {
                let _ = writeln!(
                    text,
                    "{:>4}  {:>24}  {:>24}",
                    row.index,
                    format!("{}", row.re),
                    format!("{}", row.im)
                );
            }
            text
        }
    };
    emit(options, &payload)?;
    Ok(ExitCode::SUCCESS)
}
