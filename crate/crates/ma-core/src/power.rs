//! Maximum-ratio transmission received power.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::Error;

/// MRT beamformer and the resulting received power.
#[derive(Debug, Clone, PartialEq)]
pub struct MrtPower {
    /// `sqrt(P_t) * h / ||h||`, or all zeros for an all-zero channel.
    pub beamformer: Vec<Complex64>,
    /// Received power `P_t * sum |h_n|^2`.
    pub power: f64,
    /// Set when the channel was identically zero, leaving the beamformer
    /// undefined; the power is reported as zero.
    pub zero_channel: bool,
}

/// Received power under maximum-ratio transmission over the given channel.
pub fn mrt_received_power(channel: &[Complex64], transmit_power: f64) -> Result<MrtPower, Error> {
    if channel.is_empty() {
        return Err(Error::EmptyChannel);
    }
    if transmit_power <= 0.0 || !transmit_power.is_finite() {
        return Err(Error::NonPositive {
            name: "transmit_power",
        });
    }
    let sum_gain: f64 = channel.iter().map(|h| h.norm_sqr()).sum();
    if sum_gain == 0.0 {
        return Ok(MrtPower {
            beamformer: vec![Complex64::new(0.0, 0.0); channel.len()],
            power: 0.0,
            zero_channel: true,
        });
    }
    let scale = libm::sqrt(transmit_power) / libm::sqrt(sum_gain);
    let beamformer: Vec<Complex64> = channel.iter().map(|h| h * scale).collect();
    let power = transmit_power * sum_gain;
    #[cfg(debug_assertions)]
    {
        // The inner-product route |w^H h|^2 must agree with P_t * sum |h|^2.
        let received: Complex64 = beamformer.iter().zip(channel).map(|(w, h)| w.conj() * h).sum();
        let cross = received.norm_sqr();
        debug_assert!(
            libm::fabs(cross - power) <= 1e-10 * libm::fmax(cross, power),
            "MRT power routes disagree: {cross} vs {power}"
        );
    }
    Ok(MrtPower {
        beamformer,
        power,
        zero_channel: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, StandardNormal};

    #[test]
    fn single_antenna_snr_in_db() {
        // |h|^2 = 10^-10.2 with transmit SNR 10^10 gives -2 dB.
        let h = [Complex64::new(libm::sqrt(libm::pow(10.0, -10.2)), 0.0)];
        let out = mrt_received_power(&h, 1e10).unwrap();
        let snr_db = 10.0 * libm::log10(out.power);
        assert_abs_diff_eq!(snr_db, -2.0, epsilon = 1e-9);
    }

    #[test]
    fn single_nonzero_entry() {
        let h = [
            Complex64::new(0.0, 0.0),
            Complex64::new(0.3, -0.4),
            Complex64::new(0.0, 0.0),
        ];
        let out = mrt_received_power(&h, 2.0).unwrap();
        assert_relative_eq!(out.power, 2.0 * 0.25, max_relative = 1e-12);
        assert!(!out.zero_channel);
    }

    #[test]
    fn beamformer_matches_sum_gain_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..50 {
            let h: alloc::vec::Vec<Complex64> = (0..8)
                .map(|_| {
                    let re: f64 = StandardNormal.sample(&mut rng);
                    let im: f64 = StandardNormal.sample(&mut rng);
                    Complex64::new(re * 1e-5, im * 1e-5)
                })
                .collect();
            let out = mrt_received_power(&h, 1e10).unwrap();
            let received: Complex64 = out
                .beamformer
                .iter()
                .zip(&h)
                .map(|(w, hk)| w.conj() * hk)
                .sum();
            let cross = received.norm_sqr();
            assert!(
                libm::fabs(cross - out.power) <= 1e-10 * libm::fmax(cross, out.power),
                "{cross} vs {}",
                out.power
            );
            // The beamformer spends exactly the transmit power.
            let spent: f64 = out.beamformer.iter().map(|w| w.norm_sqr()).sum();
            assert_relative_eq!(spent, 1e10, max_relative = 1e-10);
        }
    }

    #[test]
    fn zero_channel_is_flagged() {
        let h = [Complex64::new(0.0, 0.0); 4];
        let out = mrt_received_power(&h, 1.0).unwrap();
        assert!(out.zero_channel);
        assert_eq!(out.power, 0.0);
        assert!(out.beamformer.iter().all(|w| w.norm_sqr() == 0.0));
    }

    #[test]
    fn rejects_empty_and_nonpositive_power() {
        assert_eq!(mrt_received_power(&[], 1.0), Err(Error::EmptyChannel));
        assert_eq!(
            mrt_received_power(&[Complex64::new(1.0, 0.0)], 0.0),
            Err(Error::NonPositive {
                name: "transmit_power"
            })
        );
    }
}
