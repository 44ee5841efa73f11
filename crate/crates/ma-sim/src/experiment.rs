//! Experiment specs, per-trial evaluation, and Monte Carlo sweeps.
//!
//! Every trial draws one channel realization from a dedicated random
//! substream (`master seed` selects the key, the trial index the stream),
//! evaluates all requested schemes on that same realization, and reports the
//! received SNR in dB. Sweeps aggregate per-trial SNRs into means and sample
//! standard deviations in the dB domain, in trial-index order, so results do
//! not depend on evaluation order.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ma_core::{
    channel_gains, fpa_as_grid_init, fpa_as_select, fpa_candidate_positions, fpa_no_as_positions,
    mrt_received_power, sequential_update, solve_optimal, AntennaLayout, Error as CoreError,
    GainProfile, LayoutProvenance, PathSet, SamplingGrid, ScenarioConfig,
};

use crate::format::{db_to_linear, format_sig6, linear_to_db};

/// Grid spacing used by the aperture-length sweep, so `M = L / 0.01`.
pub const SWEEP_L_SPACING: f64 = 0.01;

/// Master seed used when none is given.
pub const DEFAULT_SEED: u64 = 1;

/// Trials per sweep value used when none are given.
pub const DEFAULT_TRIALS: u64 = 1000;

/// The seedable generator behind every draw.
pub type TrialRng = ChaCha8Rng;

/// Independent substream for one trial: the master seed keys the generator
/// and the trial index selects the stream.
pub fn trial_rng(master_seed: u64, trial: u64) -> TrialRng {
    let mut rng = TrialRng::seed_from_u64(master_seed);
    rng.set_stream(trial);
    rng
}

/// Placement schemes compared by the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Movable antennas, optimal grid placement.
    MaOptimal,
    /// Movable antennas, sequential-update heuristic.
    MaSequential,
    /// Fixed antennas with antenna selection.
    FpaAs,
    /// Fixed antennas without antenna selection.
    FpaNoAs,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [
        Scheme::MaOptimal,
        Scheme::MaSequential,
        Scheme::FpaAs,
        Scheme::FpaNoAs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::MaOptimal => "ma-optimal",
            Scheme::MaSequential => "ma-sequential",
            Scheme::FpaAs => "fpa-as",
            Scheme::FpaNoAs => "fpa-no-as",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|scheme| scheme.name() == s)
            .ok_or_else(|| anyhow!("unknown scheme `{s}` (expected one of ma-optimal, ma-sequential, fpa-as, fpa-no-as)"))
    }
}

/// Parses a comma-separated scheme list into canonical order, rejecting
/// unknown names.
pub fn parse_schemes(list: &str) -> Result<Vec<Scheme>> {
    let mut requested = Vec::new();
    for part in list.split(',') {
        let part = part.trim();
        if part.is_empty() {
            bail!("empty scheme name in `{list}`");
        }
        requested.push(part.parse::<Scheme>()?);
    }
    let schemes: Vec<Scheme> = Scheme::ALL
        .into_iter()
        .filter(|s| requested.contains(s))
        .collect();
    Ok(schemes)
}

/// What a run sweeps over (or that it is a single-shot command).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentKind {
    SweepM,
    SweepN,
    SweepL,
    SweepPaths,
    Profile,
    Solve,
}

impl ExperimentKind {
    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::SweepM => "sweep-m",
            ExperimentKind::SweepN => "sweep-n",
            ExperimentKind::SweepL => "sweep-l",
            ExperimentKind::SweepPaths => "sweep-paths",
            ExperimentKind::Profile => "profile",
            ExperimentKind::Solve => "solve",
        }
    }

    /// Name of the swept parameter in the CSV `param` column.
    pub fn param_name(self) -> &'static str {
        match self {
            ExperimentKind::SweepM => "m",
            ExperimentKind::SweepN => "n",
            ExperimentKind::SweepL => "length",
            ExperimentKind::SweepPaths => "paths",
            ExperimentKind::Profile => "position",
            ExperimentKind::Solve => "gains",
        }
    }
}

/// Default scenario: 5 GHz carrier (wavelength 0.06 m), 0.36 m aperture,
/// half-wavelength minimum spacing, 100 m link with exponent 2.8, -46 dB
/// reference path loss, 100 dB transmit SNR, 9 paths.
pub fn default_scenario() -> ScenarioConfig {
    ScenarioConfig {
        wavelength: 0.06,
        aperture: 0.36,
        min_distance: 0.03,
        link_distance: 100.0,
        path_loss_exponent: 2.8,
        reference_path_loss: db_to_linear(-46.0),
        transmit_snr: db_to_linear(100.0),
        num_paths: 9,
    }
}

/// A full experiment description: what to sweep, the base configuration,
/// trial count, seed, and the schemes to compare.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub kind: ExperimentKind,
    /// Sweep values, ascending. Ignored by `profile` and `solve`.
    pub values: Vec<f64>,
    pub scenario: ScenarioConfig,
    /// Sampling points `M` (fixed unless swept).
    pub points: usize,
    /// Antenna count `N` (fixed unless swept).
    pub antennas: usize,
    pub trials: u64,
    pub seed: u64,
    pub schemes: Vec<Scheme>,
}

impl ExperimentSpec {
    /// Spec with the default scenario, sweep grid, 1000 trials, and all
    /// four schemes.
    pub fn with_defaults(kind: ExperimentKind) -> Self {
        let values = match kind {
            ExperimentKind::SweepM => vec![12.0, 24.0, 36.0, 48.0, 60.0, 72.0],
            ExperimentKind::SweepN => (1..=12).map(|n| n as f64).collect(),
            ExperimentKind::SweepL => (12..=60).step_by(6).map(|c| c as f64 / 100.0).collect(),
            ExperimentKind::SweepPaths => (1..=15).map(|p| p as f64).collect(),
            ExperimentKind::Profile | ExperimentKind::Solve => Vec::new(),
        };
        Self {
            kind,
            values,
            scenario: default_scenario(),
            points: 48,
            antennas: 8,
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            schemes: Scheme::ALL.to_vec(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.scenario.validate()?;
        if self.trials == 0 {
            bail!("trials must be at least 1");
        }
        if self.points == 0 {
            bail!("points must be at least 1");
        }
        if self.antennas == 0 {
            bail!("antennas must be at least 1");
        }
        if self.schemes.is_empty() {
            bail!("at least one scheme is required");
        }
        match self.kind {
            ExperimentKind::Profile | ExperimentKind::Solve => {}
            _ => {
                if self.values.is_empty() {
                    bail!("sweep values must not be empty");
                }
                if self.values.iter().any(|&v| v <= 0.0 || !v.is_finite()) {
                    bail!("sweep values must be positive");
                }
                if self.values.windows(2).any(|p| p[0] >= p[1]) {
                    bail!("sweep values must be strictly ascending");
                }
            }
        }
        Ok(())
    }

    /// Base configuration with the sweep value applied.
    pub fn configure(&self, value: f64) -> Result<TrialConfig> {
        let mut scenario = self.scenario.clone();
        let mut points = self.points;
        let mut antennas = self.antennas;
        match self.kind {
            ExperimentKind::SweepM => points = as_count(value, "m")?,
            ExperimentKind::SweepN => antennas = as_count(value, "n")?,
            ExperimentKind::SweepL => {
                scenario.aperture = value;
                points = (value / SWEEP_L_SPACING).round() as usize;
                if points == 0 {
                    bail!("aperture {value} is shorter than the sweep spacing");
                }
            }
            ExperimentKind::SweepPaths => scenario.num_paths = as_count(value, "paths")?,
            ExperimentKind::Profile | ExperimentKind::Solve => {
                bail!("{} does not sweep", self.kind.name())
            }
        }
        Ok(TrialConfig {
            scenario,
            points,
            antennas,
        })
    }

    /// Configuration for single-shot commands (`profile`).
    pub fn base_config(&self) -> TrialConfig {
        TrialConfig {
            scenario: self.scenario.clone(),
            points: self.points,
            antennas: self.antennas,
        }
    }
}

fn as_count(value: f64, name: &str) -> Result<usize> {
    if value.is_nan() || value < 1.0 || value.fract() != 0.0 {
        bail!("{name} sweep value {value} is not a positive integer");
    }
    Ok(value as usize)
}

/// Scenario plus grid size and antenna count for one sweep point.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialConfig {
    pub scenario: ScenarioConfig,
    pub points: usize,
    pub antennas: usize,
}

/// Grid and gain profile shared by the movable-antenna schemes of one trial.
pub struct TrialContext {
    pub grid: SamplingGrid,
    pub profile: GainProfile,
}

impl TrialContext {
    pub fn new(cfg: &TrialConfig, paths: &PathSet) -> Result<Self> {
        let grid = SamplingGrid::new(cfg.scenario.aperture, cfg.points, cfg.scenario.min_distance)?;
        let profile = channel_gains(paths, &grid, cfg.scenario.wavelength);
        Ok(Self { grid, profile })
    }
}

/// Checks whether a scheme can run at all under this configuration,
/// independent of the channel realization.
pub fn scheme_feasibility(cfg: &TrialConfig, scheme: Scheme) -> Result<(), CoreError> {
    let scenario = &cfg.scenario;
    match scheme {
        Scheme::MaOptimal | Scheme::MaSequential => {
            let grid = SamplingGrid::new(scenario.aperture, cfg.points, scenario.min_distance)?;
            let needed = (cfg.antennas - 1) * grid.min_separation() + 1;
            if cfg.points < needed {
                return Err(CoreError::Infeasible {
                    points: cfg.points,
                    antennas: cfg.antennas,
                    min_separation: grid.min_separation(),
                });
            }
            if scheme == Scheme::MaSequential {
                let available =
                    fpa_candidate_positions(scenario.aperture, scenario.min_distance).len();
                if cfg.antennas > available {
                    return Err(CoreError::TooFewCandidates {
                        requested: cfg.antennas,
                        available,
                    });
                }
            }
            Ok(())
        }
        Scheme::FpaAs => {
            let available = fpa_candidate_positions(scenario.aperture, scenario.min_distance).len();
            if cfg.antennas > available {
                return Err(CoreError::TooFewCandidates {
                    requested: cfg.antennas,
                    available,
                });
            }
            Ok(())
        }
        Scheme::FpaNoAs => {
            fpa_no_as_positions(scenario.aperture, cfg.antennas, scenario.min_distance)?;
            Ok(())
        }
    }
}

/// Antenna layout chosen by one scheme for one realization.
pub fn scheme_layout(
    cfg: &TrialConfig,
    paths: &PathSet,
    ctx: &TrialContext,
    scheme: Scheme,
) -> Result<AntennaLayout> {
    let scenario = &cfg.scenario;
    let layout = match scheme {
        Scheme::MaOptimal => {
            let selection = solve_optimal(
                ctx.profile.power(),
                ctx.grid.min_separation(),
                cfg.antennas,
            )?;
            AntennaLayout::from_grid_selection(
                &selection,
                &ctx.grid,
                &ctx.profile,
                scenario.min_distance,
            )?
        }
        Scheme::MaSequential => {
            let init = fpa_as_grid_init(
                ctx.profile.power(),
                &ctx.grid,
                scenario.min_distance,
                cfg.antennas,
            )?;
            let update = sequential_update(ctx.profile.power(), ctx.grid.min_separation(), &init)?;
            AntennaLayout::from_grid_selection(
                &update.selection,
                &ctx.grid,
                &ctx.profile,
                scenario.min_distance,
            )?
        }
        Scheme::FpaAs => fpa_as_select(
            paths,
            scenario.aperture,
            scenario.min_distance,
            cfg.antennas,
            scenario.wavelength,
        )?,
        Scheme::FpaNoAs => {
            let positions =
                fpa_no_as_positions(scenario.aperture, cfg.antennas, scenario.min_distance)?;
            AntennaLayout::from_positions(
                positions,
                paths,
                scenario.wavelength,
                LayoutProvenance::FixedUniform,
                scenario.aperture,
                scenario.min_distance,
            )?
        }
    };
    Ok(layout)
}

/// Evaluates all requested schemes on the realization of one trial and
/// returns the received SNR in dB, aligned with `schemes`.
pub fn run_trial(
    cfg: &TrialConfig,
    schemes: &[Scheme],
    master_seed: u64,
    trial: u64,
) -> Result<Vec<f64>> {
    let mut rng = trial_rng(master_seed, trial);
    let paths = PathSet::draw(&cfg.scenario, &mut rng)?;
    let ctx = TrialContext::new(cfg, &paths)?;
    schemes
        .iter()
        .map(|&scheme| {
            let layout = scheme_layout(cfg, &paths, &ctx, scheme)
                .with_context(|| format!("scheme {scheme} failed on trial {trial}"))?;
            let mrt = mrt_received_power(layout.channel(), cfg.scenario.transmit_snr)?;
            Ok(linear_to_db(mrt.power))
        })
        .collect()
}

/// One aggregated cell of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub scheme: Scheme,
    pub trials: u64,
    pub mean_snr_db: f64,
    pub std_snr_db: f64,
}

/// A `(value, scheme)` cell that could not run, with the reason.
#[derive(Debug, Clone, PartialEq)]
pub struct SkippedCell {
    pub value: f64,
    pub scheme: Scheme,
    pub reason: String,
}

/// Aggregated sweep output.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    pub skipped: Vec<SkippedCell>,
}

/// Runs the full sweep: for each value, every feasible scheme is evaluated
/// on the same `trials` realizations; infeasible `(value, scheme)` cells are
/// reported in `skipped`.
pub fn run_sweep(spec: &ExperimentSpec) -> Result<SweepResult> {
    spec.validate()?;
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for &value in &spec.values {
        let cfg = spec.configure(value)?;
        let mut active = Vec::new();
        for &scheme in &spec.schemes {
            match scheme_feasibility(&cfg, scheme) {
                Ok(()) => active.push(scheme),
                Err(err) => skipped.push(SkippedCell {
                    value,
                    scheme,
                    reason: err.to_string(),
                }),
            }
        }
        if active.is_empty() {
            continue;
        }
        let mut per_scheme: Vec<Vec<f64>> =
            vec![Vec::with_capacity(spec.trials as usize); active.len()];
        for trial in 0..spec.trials {
            let snrs = run_trial(&cfg, &active, spec.seed, trial)?;
            for (bucket, snr) in per_scheme.iter_mut().zip(snrs) {
                bucket.push(snr);
            }
        }
        for (scheme, samples) in active.iter().zip(&per_scheme) {
            let (mean, std) = mean_std(samples);
            rows.push(SweepRow {
                value,
                scheme: *scheme,
                trials: spec.trials,
                mean_snr_db: mean,
                std_snr_db: std,
            });
        }
    }
    Ok(SweepResult { rows, skipped })
}

/// Mean and sample standard deviation, folded in index order.
pub fn mean_std(samples: &[f64]) -> (f64, f64) {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    if samples.len() < 2 {
        return (mean, 0.0);
    }
    let ss = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>();
    (mean, (ss / (n - 1.0)).sqrt())
}

/// Writes the sweep as CSV: header
/// `experiment,param,value,scheme,trials,mean_snr_db,std_snr_db`, LF line
/// endings, floats with six significant digits.
pub fn write_sweep_csv<W: Write + ?Sized>(spec: &ExperimentSpec, result: &SweepResult, w: &mut W) -> Result<()> {
    writeln!(w, "experiment,param,value,scheme,trials,mean_snr_db,std_snr_db")?;
    for row in &result.rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            spec.kind.name(),
            spec.kind.param_name(),
            format_sig6(row.value),
            row.scheme,
            row.trials,
            format_sig6(row.mean_snr_db),
            format_sig6(row.std_snr_db),
        )?;
    }
    Ok(())
}
