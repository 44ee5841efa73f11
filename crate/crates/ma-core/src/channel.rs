//! Multipath field-response channel model.
//!
//! A channel realization is a set of plane-wave paths, each with a complex
//! gain, an angle of departure, and a share of the average power. The
//! channel seen from aperture position `x` is the phased sum of the path
//! contributions, `h(x) = sum_i gain_i * exp(j * (2*pi/wavelength) * x * cos(aod_i))`,
//! with the angle measured from the array axis.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::Error;
use crate::grid::SamplingGrid;

const PI: f64 = core::f64::consts::PI;

/// Absolute tolerance on the power fractions summing to one.
const FRACTION_SUM_TOL: f64 = 1e-12;

/// Scenario parameters for channel draws and benchmarks.
///
/// All quantities are linear (no dB) and lengths are in meters.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    /// Carrier wavelength.
    pub wavelength: f64,
    /// Length of the linear transmit aperture.
    pub aperture: f64,
    /// Minimum distance between any two antennas.
    pub min_distance: f64,
    /// Transmitter-receiver distance.
    pub link_distance: f64,
    /// Path-loss exponent.
    pub path_loss_exponent: f64,
    /// Path loss at the 1 m reference distance (linear power ratio).
    pub reference_path_loss: f64,
    /// Transmit SNR `P_t / sigma^2` (linear).
    pub transmit_snr: f64,
    /// Number of propagation paths.
    pub num_paths: usize,
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<(), Error> {
        let positives = [
            ("wavelength", self.wavelength),
            ("aperture", self.aperture),
            ("min_distance", self.min_distance),
            ("link_distance", self.link_distance),
            ("path_loss_exponent", self.path_loss_exponent),
            ("reference_path_loss", self.reference_path_loss),
            ("transmit_snr", self.transmit_snr),
        ];
        for (name, value) in positives {
            if value <= 0.0 || !value.is_finite() {
                return Err(Error::NonPositive { name });
            }
        }
        if self.num_paths == 0 {
            return Err(Error::ZeroCount { name: "num_paths" });
        }
        Ok(())
    }

    /// Average total receive power gain `beta * D^(-alpha)`.
    pub fn average_path_gain(&self) -> f64 {
        self.reference_path_loss * libm::pow(self.link_distance, -self.path_loss_exponent)
    }
}

/// One multipath channel realization.
#[derive(Debug, Clone, PartialEq)]
pub struct PathSet {
    gains: Vec<Complex64>,
    aods: Vec<f64>,
    fractions: Vec<f64>,
}

impl PathSet {
    /// Validates per-path data: angles in `[0, pi]`, nonnegative fractions
    /// summing to one within [`FRACTION_SUM_TOL`].
    pub fn new(gains: Vec<Complex64>, aods: Vec<f64>, fractions: Vec<f64>) -> Result<Self, Error> {
        if gains.is_empty() {
            return Err(Error::ZeroCount { name: "paths" });
        }
        if gains.len() != aods.len() || gains.len() != fractions.len() {
            return Err(Error::InvalidPathSet {
                reason: "gains, aods, and fractions differ in length",
            });
        }
        if aods.iter().any(|&a| !(0.0..=PI).contains(&a)) {
            return Err(Error::InvalidPathSet {
                reason: "angle of departure outside [0, pi]",
            });
        }
        if fractions.iter().any(|&l| l < 0.0 || !l.is_finite()) {
            return Err(Error::InvalidPathSet {
                reason: "negative or non-finite power fraction",
            });
        }
        let total: f64 = fractions.iter().sum();
        if libm::fabs(total - 1.0) > FRACTION_SUM_TOL {
            return Err(Error::InvalidPathSet {
                reason: "power fractions do not sum to one",
            });
        }
        Ok(Self {
            gains,
            aods,
            fractions,
        })
    }

    /// Draws one realization: per-path circularly-symmetric complex Gaussian
    /// gains with variance `beta * D^(-alpha) * l_i`, angles of departure
    /// uniform on `[0, pi]`.
    pub fn draw<R: Rng + ?Sized>(cfg: &ScenarioConfig, rng: &mut R) -> Result<Self, Error> {
        cfg.validate()?;
        let fractions = draw_power_fractions(cfg.num_paths, rng);
        let aods: Vec<f64> = (0..cfg.num_paths).map(|_| rng.random::<f64>() * PI).collect();
        let base = cfg.average_path_gain();
        let gains: Vec<Complex64> = fractions
            .iter()
            .map(|&l| {
                let sigma = libm::sqrt(base * l / 2.0);
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(re * sigma, im * sigma)
            })
            .collect();
        Self::new(gains, aods, fractions)
    }

    /// Number of paths.
    pub fn len(&self) -> usize {
        self.gains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gains.is_empty()
    }

    /// Complex gain per path.
    pub fn gains(&self) -> &[Complex64] {
        &self.gains
    }

    /// Angle of departure per path, in radians from the array axis.
    pub fn aods(&self) -> &[f64] {
        &self.aods
    }

    /// Share of the average power per path.
    pub fn fractions(&self) -> &[f64] {
        &self.fractions
    }
}

/// Draws `paths` nonnegative power fractions summing to one: i.i.d. uniform
/// weights, normalized.
pub fn draw_power_fractions<R: Rng + ?Sized>(paths: usize, rng: &mut R) -> Vec<f64> {
    assert!(paths >= 1, "paths must be at least 1");
    loop {
        let mut weights: Vec<f64> = (0..paths).map(|_| rng.random::<f64>()).collect();
        let total: f64 = weights.iter().sum();
        if total > 0.0 {
            for w in &mut weights {
                *w /= total;
            }
            return weights;
        }
    }
}

/// Channel value at aperture position `x`.
pub fn field_response(paths: &PathSet, position: f64, wavelength: f64) -> Complex64 {
    let wavenumber = 2.0 * PI / wavelength;
    paths
        .gains
        .iter()
        .zip(&paths.aods)
        .map(|(gain, &aod)| gain * Complex64::cis(wavenumber * position * libm::cos(aod)))
        .sum()
}

/// Channel values and power gains at every sampling point of a grid.
pub fn channel_gains(paths: &PathSet, grid: &SamplingGrid, wavelength: f64) -> GainProfile {
    let channel: Vec<Complex64> = grid
        .positions()
        .map(|x| field_response(paths, x, wavelength))
        .collect();
    GainProfile::new(channel)
}

/// Per-point channel values `h_m` and power gains `|h_m|^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct GainProfile {
    channel: Vec<Complex64>,
    power: Vec<f64>,
}

impl GainProfile {
    pub fn new(channel: Vec<Complex64>) -> Self {
        let power = channel.iter().map(|h| h.norm_sqr()).collect();
        Self { channel, power }
    }

    /// Number of sampling points.
    pub fn len(&self) -> usize {
        self.channel.len()
    }

    pub fn is_empty(&self) -> bool {
        self.channel.is_empty()
    }

    /// Channel value at point `m` (1-based).
    pub fn channel(&self, m: usize) -> Complex64 {
        self.channel[m - 1]
    }

    /// Power gain at point `m` (1-based).
    pub fn gain(&self, m: usize) -> f64 {
        self.power[m - 1]
    }

    pub fn channel_values(&self) -> &[Complex64] {
        &self.channel
    }

    /// Power gains, indexed `m - 1` for point `m`.
    pub fn power(&self) -> &[f64] {
        &self.power
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use rand_chacha::ChaCha8Rng;
    use rand_chacha::rand_core::SeedableRng;
    use std::vec;
    use std::vec::Vec;

    fn test_config() -> ScenarioConfig {
        ScenarioConfig {
            wavelength: 0.06,
            aperture: 0.36,
            min_distance: 0.03,
            link_distance: 100.0,
            path_loss_exponent: 2.8,
            reference_path_loss: libm::pow(10.0, -4.6),
            transmit_snr: 1e10,
            num_paths: 9,
        }
    }

    #[test]
    fn fractions_normalize_for_one_path() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let fractions = draw_power_fractions(1, &mut rng);
        assert_eq!(fractions, vec![1.0]);
    }

    #[test]
    fn fractions_sum_to_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for paths in [2, 3, 9, 40] {
            let fractions = draw_power_fractions(paths, &mut rng);
            assert!(fractions.iter().all(|&l| l >= 0.0));
            assert_abs_diff_eq!(fractions.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn fraction_means_are_symmetric() {
        // Monte Carlo check: each fraction has mean 1/P; assert within three
        // standard errors estimated from the sample itself.
        let paths = 9;
        let draws = 100_000;
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut sums = vec![0.0f64; paths];
        let mut sq_sums = vec![0.0f64; paths];
        for _ in 0..draws {
            let fractions = draw_power_fractions(paths, &mut rng);
            for (i, &l) in fractions.iter().enumerate() {
                sums[i] += l;
                sq_sums[i] += l * l;
            }
        }
        let n = draws as f64;
        for i in 0..paths {
            let mean = sums[i] / n;
            let var = (sq_sums[i] - sums[i] * sums[i] / n) / (n - 1.0);
            let se = libm::sqrt(var / n);
            assert!(
                libm::fabs(mean - 1.0 / paths as f64) <= 3.0 * se,
                "fraction {i}: mean {mean} vs 1/{paths}, se {se}"
            );
        }
    }

    #[test]
    fn path_draw_matches_scenario_variance() {
        // E[sum_i |gain_i|^2] = beta * D^(-alpha) because fractions sum to one.
        let cfg = test_config();
        let expected = cfg.average_path_gain();
        assert_relative_eq!(expected, libm::pow(10.0, -10.2), max_relative = 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let draws = 100_000;
        let mut total = 0.0;
        for _ in 0..draws {
            let paths = PathSet::draw(&cfg, &mut rng).unwrap();
            total += paths.gains().iter().map(|g| g.norm_sqr()).sum::<f64>();
        }
        let mean = total / draws as f64;
        assert!(
            libm::fabs(mean - expected) <= 0.05 * expected,
            "mean {mean} vs expected {expected}"
        );
    }

    #[test]
    fn single_path_variance() {
        let cfg = ScenarioConfig {
            num_paths: 1,
            ..test_config()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let draws = 100_000;
        let mut total = 0.0;
        for _ in 0..draws {
            let paths = PathSet::draw(&cfg, &mut rng).unwrap();
            assert_eq!(paths.fractions(), &[1.0]);
            total += paths.gains()[0].norm_sqr();
        }
        let mean = total / draws as f64;
        let expected = cfg.average_path_gain();
        assert!(libm::fabs(mean - expected) <= 0.05 * expected);
    }

    #[test]
    fn aod_distribution_is_uniform() {
        // Chi-square goodness of fit over 20 bins; threshold is the 0.999
        // quantile at 19 degrees of freedom.
        let cfg = test_config();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let bins = 20;
        let mut counts = vec![0u64; bins];
        let draws = 20_000;
        let mut total = 0usize;
        for _ in 0..draws {
            let paths = PathSet::draw(&cfg, &mut rng).unwrap();
            for &aod in paths.aods() {
                assert!((0.0..=PI).contains(&aod));
                let bin = ((aod / PI) * bins as f64) as usize;
                counts[bin.min(bins - 1)] += 1;
                total += 1;
            }
        }
        let expected = total as f64 / bins as f64;
        let chi2: f64 = counts
            .iter()
            .map(|&c| {
                let d = c as f64 - expected;
                d * d / expected
            })
            .sum();
        assert!(chi2 < 43.82, "chi-square statistic {chi2}");
    }

    #[test]
    fn field_response_at_origin_sums_gains() {
        let gains = vec![Complex64::new(0.3, -0.7), Complex64::new(-1.1, 0.2)];
        let paths = PathSet::new(gains.clone(), vec![0.4, 2.2], vec![0.5, 0.5]).unwrap();
        let h = field_response(&paths, 0.0, 0.06);
        let expected: Complex64 = gains.iter().sum();
        assert_relative_eq!(h.re, expected.re, max_relative = 1e-12);
        assert_relative_eq!(h.im, expected.im, max_relative = 1e-12);
    }

    #[test]
    fn broadside_paths_give_position_independent_response() {
        let gains = vec![Complex64::new(1.0, 0.5), Complex64::new(-0.2, 0.9)];
        let paths = PathSet::new(gains.clone(), vec![PI / 2.0, PI / 2.0], vec![0.4, 0.6]).unwrap();
        let expected: Complex64 = gains.iter().sum();
        for &x in &[0.0, 0.05, 0.17, 0.36] {
            let h = field_response(&paths, x, 0.06);
            assert_abs_diff_eq!(h.re, expected.re, epsilon = 1e-12);
            assert_abs_diff_eq!(h.im, expected.im, epsilon = 1e-12);
        }
    }

    #[test]
    fn two_path_response_hand_value() {
        // gains (1, j), aods (0, pi/3), wavelength 0.06, x = 0.03:
        // phases are pi and pi/2, so h = -1 + j*j = -2.
        let paths = PathSet::new(
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)],
            vec![0.0, PI / 3.0],
            vec![0.5, 0.5],
        )
        .unwrap();
        let h = field_response(&paths, 0.03, 0.06);
        assert_abs_diff_eq!(h.re, -2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(h.im, 0.0, epsilon = 1e-9);
    }

    #[test]
    fn response_is_linear_in_path_gains() {
        let aods = vec![0.3, 1.1, 2.9];
        let fractions = vec![0.2, 0.5, 0.3];
        let a = vec![
            Complex64::new(0.4, -0.1),
            Complex64::new(-0.8, 0.6),
            Complex64::new(0.05, 0.9),
        ];
        let b = vec![
            Complex64::new(-0.3, 0.7),
            Complex64::new(0.2, 0.2),
            Complex64::new(1.4, -0.5),
        ];
        let sum: Vec<Complex64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let pa = PathSet::new(a, aods.clone(), fractions.clone()).unwrap();
        let pb = PathSet::new(b, aods.clone(), fractions.clone()).unwrap();
        let ps = PathSet::new(sum, aods, fractions).unwrap();
        let x = 0.21;
        let combined = field_response(&ps, x, 0.06);
        let separate = field_response(&pa, x, 0.06) + field_response(&pb, x, 0.06);
        assert_relative_eq!(combined.re, separate.re, max_relative = 1e-12);
        assert_relative_eq!(combined.im, separate.im, max_relative = 1e-12);
    }

    #[test]
    fn single_path_profile_is_flat() {
        let cfg = ScenarioConfig {
            num_paths: 1,
            ..test_config()
        };
        let grid = SamplingGrid::new(cfg.aperture, 48, cfg.min_distance).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let paths = PathSet::draw(&cfg, &mut rng).unwrap();
        let profile = channel_gains(&paths, &grid, cfg.wavelength);
        let expected = paths.gains()[0].norm_sqr();
        for m in 1..=grid.points() {
            assert_relative_eq!(profile.gain(m), expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn profile_matches_pointwise_reevaluation() {
        let cfg = test_config();
        let grid = SamplingGrid::new(cfg.aperture, 48, cfg.min_distance).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let paths = PathSet::draw(&cfg, &mut rng).unwrap();
        let profile = channel_gains(&paths, &grid, cfg.wavelength);
        assert_eq!(profile.len(), 48);
        for m in 1..=grid.points() {
            let h = field_response(&paths, grid.position(m), cfg.wavelength);
            assert_eq!(profile.channel(m), h);
            assert_eq!(profile.gain(m), h.norm_sqr());
        }
    }

    #[test]
    fn single_point_profile() {
        let cfg = test_config();
        let grid = SamplingGrid::new(cfg.aperture, 1, cfg.min_distance).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let paths = PathSet::draw(&cfg, &mut rng).unwrap();
        let profile = channel_gains(&paths, &grid, cfg.wavelength);
        assert_eq!(profile.len(), 1);
        assert_eq!(
            profile.channel(1),
            field_response(&paths, cfg.aperture, cfg.wavelength)
        );
    }

    #[test]
    fn path_set_validation() {
        let gain = vec![Complex64::new(1.0, 0.0)];
        assert!(PathSet::new(gain.clone(), vec![0.1], vec![1.0]).is_ok());
        assert_eq!(
            PathSet::new(gain.clone(), vec![-0.1], vec![1.0]),
            Err(Error::InvalidPathSet {
                reason: "angle of departure outside [0, pi]"
            })
        );
        assert_eq!(
            PathSet::new(gain.clone(), vec![0.1], vec![0.9]),
            Err(Error::InvalidPathSet {
                reason: "power fractions do not sum to one"
            })
        );
        assert_eq!(
            PathSet::new(gain, vec![0.1, 0.2], vec![1.0]),
            Err(Error::InvalidPathSet {
                reason: "gains, aods, and fractions differ in length"
            })
        );
    }

    #[test]
    fn scenario_validation() {
        let mut cfg = test_config();
        assert!(cfg.validate().is_ok());
        cfg.num_paths = 0;
        assert_eq!(cfg.validate(), Err(Error::ZeroCount { name: "num_paths" }));
        let cfg = ScenarioConfig {
            transmit_snr: 0.0,
            ..test_config()
        };
        assert_eq!(
            cfg.validate(),
            Err(Error::NonPositive {
                name: "transmit_snr"
            })
        );
    }
}
