//! Single-realization gain profile dump.

use std::io::Write;

use anyhow::Result;

use ma_core::{field_response, PathSet};

use crate::experiment::{
    scheme_feasibility, scheme_layout, trial_rng, ExperimentSpec, Scheme, TrialContext,
};
use crate::format::{format_sig6, linear_to_db};

/// Step of the dense evaluation grid, in meters.
pub const PROFILE_STEP: f64 = 1e-3;

/// Writes one channel realization as CSV: `gain` rows sample `|h(x)|^2` in
/// dB over the whole aperture, and one marker row per scheme antenna gives
/// the chosen positions with their gains. Infeasible schemes are returned
/// with the reason instead of aborting the dump.
pub fn dump_profile<W: Write + ?Sized>(spec: &ExperimentSpec, out: &mut W) -> Result<Vec<(Scheme, String)>> {
    spec.validate()?;
    let cfg = spec.base_config();
    let mut rng = trial_rng(spec.seed, 0);
    let paths = PathSet::draw(&cfg.scenario, &mut rng)?;
    let ctx = TrialContext::new(&cfg, &paths)?;

    writeln!(out, "series,position_m,gain_db")?;
    let aperture = cfg.scenario.aperture;
    let steps = (aperture / PROFILE_STEP).round() as usize;
    for k in 0..=steps {
        let x = (k as f64 * PROFILE_STEP).min(aperture);
        let gain = field_response(&paths, x, cfg.scenario.wavelength).norm_sqr();
        writeln!(
            out,
            "gain,{},{}",
            format_sig6(x),
            format_sig6(linear_to_db(gain))
        )?;
    }

    let mut skipped = Vec::new();
    for &scheme in &spec.schemes {
        if let Err(err) = scheme_feasibility(&cfg, scheme) {
            skipped.push((scheme, err.to_string()));
            continue;
        }
        let layout = scheme_layout(&cfg, &paths, &ctx, scheme)?;
        for (&x, h) in layout.positions().iter().zip(layout.channel()) {
            writeln!(
                out,
                "{},{},{}",
                scheme.name(),
                format_sig6(x),
                format_sig6(linear_to_db(h.norm_sqr()))
            )?;
        }
    }
    Ok(skipped)
}
