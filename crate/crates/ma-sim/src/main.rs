use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use ma_sim::experiment::{parse_schemes, ExperimentKind, ExperimentSpec, Scheme};
use ma_sim::profile::dump_profile;
use ma_sim::solve::{read_gains_file, solve_report};
use ma_sim::{config, run_sweep, write_sweep_csv, SweepResult};

#[derive(Parser)]
#[command(
    name = "ma-sim",
    version,
    about = "Movable-antenna placement benchmarks on a discretized aperture"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Received SNR versus the number of sampling points
    SweepM(CommonArgs),
    /// Received SNR versus the number of antennas
    SweepN(CommonArgs),
    /// Received SNR versus the aperture length (10 mm sampling)
    SweepL(CommonArgs),
    /// Received SNR versus the number of propagation paths
    SweepPaths(CommonArgs),
    /// Channel gain profile and chosen positions for one realization
    Profile(CommonArgs),
    /// Optimal and sequential placement for a gains file (one linear gain
    /// per line)
    Solve(SolveArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Number of sampling points M
    #[arg(long)]
    m: Option<usize>,
    /// Number of movable antennas N
    #[arg(long)]
    n: Option<usize>,
    /// Aperture length in meters
    #[arg(long)]
    length: Option<f64>,
    /// Minimum antenna distance in meters
    #[arg(long)]
    dmin: Option<f64>,
    /// Number of propagation paths
    #[arg(long)]
    paths: Option<usize>,
    /// Monte Carlo trials per sweep value
    #[arg(long)]
    trials: Option<u64>,
    /// Master seed
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Comma-separated schemes: ma-optimal,ma-sequential,fpa-as,fpa-no-as
    #[arg(long)]
    schemes: Option<String>,
    /// key=value config file mirroring these flags; explicit flags win
    #[arg(long)]
    config: Option<PathBuf>,
    /// Carrier wavelength in meters
    #[arg(long)]
    wavelength: Option<f64>,
}

#[derive(Args)]
struct SolveArgs {
    /// Gains file, one nonnegative linear gain per line
    gains: PathBuf,
    #[command(flatten)]
    common: CommonArgs,
}

/// Flags merged over the config file.
struct Settings {
    m: Option<usize>,
    n: Option<usize>,
    length: Option<f64>,
    dmin: Option<f64>,
    paths: Option<usize>,
    trials: Option<u64>,
    seed: Option<u64>,
    out: Option<PathBuf>,
    schemes: Option<Vec<Scheme>>,
    wavelength: Option<f64>,
}

fn resolve(args: &CommonArgs) -> Result<Settings> {
    let file = match &args.config {
        Some(path) => config::load(path)?,
        None => Default::default(),
    };
    let schemes_raw = args
        .schemes
        .clone()
        .or_else(|| file.get("schemes").cloned());
    Ok(Settings {
        m: args.m.or(config::get(&file, "m")?),
        n: args.n.or(config::get(&file, "n")?),
        length: args.length.or(config::get(&file, "length")?),
        dmin: args.dmin.or(config::get(&file, "dmin")?),
        paths: args.paths.or(config::get(&file, "paths")?),
        trials: args.trials.or(config::get(&file, "trials")?),
        seed: args.seed.or(config::get(&file, "seed")?),
        out: args.out.clone().or(config::get(&file, "out")?),
        schemes: schemes_raw.map(|s| parse_schemes(&s)).transpose()?,
        wavelength: args.wavelength.or(config::get(&file, "wavelength")?),
    })
}

fn build_spec(kind: ExperimentKind, settings: &Settings) -> Result<ExperimentSpec> {
    let mut spec = ExperimentSpec::with_defaults(kind);
    if let Some(m) = settings.m {
        spec.points = m;
    }
    if let Some(n) = settings.n {
        spec.antennas = n;
    }
    if let Some(length) = settings.length {
        spec.scenario.aperture = length;
    }
    if let Some(dmin) = settings.dmin {
        spec.scenario.min_distance = dmin;
    }
    if let Some(paths) = settings.paths {
        spec.scenario.num_paths = paths;
    }
    if let Some(trials) = settings.trials {
        spec.trials = trials;
    }
    if let Some(seed) = settings.seed {
        spec.seed = seed;
    }
    if let Some(schemes) = &settings.schemes {
        spec.schemes = schemes.clone();
    }
    if let Some(wavelength) = settings.wavelength {
        spec.scenario.wavelength = wavelength;
    }
    spec.validate()?;
    Ok(spec)
}

/// Writes through `--out` or to stdout.
fn with_output<F>(out: &Option<PathBuf>, write: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> Result<()>,
{
    match out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("creating output file {}", path.display()))?;
            let mut writer = BufWriter::new(file);
            write(&mut writer)?;
            writer.flush()?;
            Ok(())
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)
        }
    }
}

fn report_skipped(result: &SweepResult) {
    for cell in &result.skipped {
        eprintln!(
            "note: skipping {} at value {}: {}",
            cell.scheme, cell.value, cell.reason
        );
    }
}

fn run_sweep_command(kind: ExperimentKind, args: &CommonArgs) -> Result<()> {
    let settings = resolve(args)?;
    let spec = build_spec(kind, &settings)?;
    let result = run_sweep(&spec)?;
    report_skipped(&result);
    with_output(&settings.out, |w| write_sweep_csv(&spec, &result, w))
}

fn run_profile(args: &CommonArgs) -> Result<()> {
    let settings = resolve(args)?;
    let spec = build_spec(ExperimentKind::Profile, &settings)?;
    with_output(&settings.out, |w| {
        let skipped = dump_profile(&spec, w)?;
        for (scheme, reason) in skipped {
            eprintln!("note: no markers for {scheme}: {reason}");
        }
        Ok(())
    })
}

fn run_solve(args: &SolveArgs) -> Result<()> {
    let settings = resolve(&args.common)?;
    let gains = read_gains_file(&args.gains)?;
    let spec = build_spec(ExperimentKind::Solve, &settings)?;
    let report = solve_report(
        &gains,
        spec.scenario.aperture,
        spec.scenario.min_distance,
        spec.antennas,
    )?;
    with_output(&settings.out, |w| {
        w.write_all(report.as_bytes())?;
        Ok(())
    })
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::SweepM(args) => run_sweep_command(ExperimentKind::SweepM, args),
        Command::SweepN(args) => run_sweep_command(ExperimentKind::SweepN, args),
        Command::SweepL(args) => run_sweep_command(ExperimentKind::SweepL, args),
        Command::SweepPaths(args) => run_sweep_command(ExperimentKind::SweepPaths, args),
        Command::Profile(args) => run_profile(args),
        Command::Solve(args) => run_solve(args),
    }
}

/// A closed pipe on stdout (`ma-sim ... | head`) is not an error.
fn is_broken_pipe(err: &anyhow::Error) -> bool {
    err.chain().any(|cause| {
        cause
            .downcast_ref::<io::Error>()
            .is_some_and(|io_err| io_err.kind() == io::ErrorKind::BrokenPipe)
    })
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(&cli) {
        if is_broken_pipe(&err) {
            return;
        }
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
