//! Thermal occupation numbers, the Planck spectral energy density, Wien's
//! displacement law, and band-integrated detector radiometry.
//!
//! All spectral arguments are angular frequencies; see [`crate::constants`]
//! for the interface conversions.

use std::f64::consts::PI;

use crate::constants::{SpectralPoint, BOLTZMANN, REDUCED_PLANCK, SPEED_OF_LIGHT};
use crate::error::{Error, Result};

/// A (spectral point, temperature) pair convertible to a mean occupation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalEnvironment {
    pub spectral: SpectralPoint,
    /// Absolute temperature in kelvin, strictly positive.
    pub temperature: f64,
}

impl ThermalEnvironment {
    pub fn new(spectral: SpectralPoint, temperature: f64) -> Result<Self> {
        if !temperature.is_finite() || temperature <= 0.0 {
            return Err(Error::domain(format!(
                "temperature must be positive and finite, got {temperature}"
            )));
        }
        Ok(Self {
            spectral,
            temperature,
        })
    }

    /// Convenience constructor from a vacuum wavelength in meters.
    pub fn from_wavelength(lambda: f64, temperature: f64) -> Result<Self> {
        Self::new(SpectralPoint::from_wavelength(lambda)?, temperature)
    }

    /// Dimensionless Boltzmann exponent ħω/k_B·T.
    pub fn exponent(&self) -> f64 {
        REDUCED_PLANCK * self.spectral.omega() / (BOLTZMANN * self.temperature)
    }
}

/// Above this value of ħω/k_B·T the occupation underflows; we return an
/// exact 0.0 instead of risking exp overflow.
pub const EXP_OVERFLOW_THRESHOLD: f64 = 700.0;

/// Mean photon number of a thermal mode, 1/(exp(ħω/k_B·T) − 1).
///
/// Strictly positive on the supported range, monotone increasing in T at
/// fixed ω and decreasing in ω at fixed T. Depends on (ω, T) only through
/// the product λ·T.
pub fn mean_occupation(env: &ThermalEnvironment) -> f64 {
    let x = env.exponent();
    if x > EXP_OVERFLOW_THRESHOLD {
        return 0.0;
    }
    1.0 / x.exp_m1()
}

/// Photon-number probability p_n = n̄ⁿ/(n̄+1)ⁿ⁺¹ of a thermal state with
/// mean occupation n̄ (geometric form of the Bose-Einstein distribution).
pub fn bose_einstein_pmf(n_th: f64, n: u32) -> Result<f64> {
    if !n_th.is_finite() || n_th < 0.0 {
        return Err(Error::domain(format!(
            "mean occupation must be non-negative, got {n_th}"
        )));
    }
    if n_th == 0.0 {
        return Ok(if n == 0 { 1.0 } else { 0.0 });
    }
    let ratio = n_th / (n_th + 1.0);
    Ok(ratio.powi(n as i32) / (n_th + 1.0))
}

/// Black-body spectral energy density per unit angular frequency,
/// W(ω,T) = n(ω,T) · ħω · g(ω) with mode density g(ω) = ω²/π²c³ (J·s/m³).
pub fn planck_energy_density(env: &ThermalEnvironment) -> f64 {
    let omega = env.spectral.omega();
    let g = omega * omega / (PI * PI * SPEED_OF_LIGHT.powi(3));
    mean_occupation(env) * REDUCED_PLANCK * omega * g
}

/// Wien displacement constant b (m·K), per-unit-wavelength convention.
pub const WIEN_B: f64 = 2.897_771_955e-3;

/// Peak wavelength b/T of black-body emission per unit wavelength.
pub fn wien_peak_wavelength(temperature: f64) -> Result<f64> {
    if !temperature.is_finite() || temperature <= 0.0 {
        return Err(Error::domain(format!(
            "temperature must be positive and finite, got {temperature}"
        )));
    }
    Ok(WIEN_B / temperature)
}

/// Band-integrated background seen by a flat detector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandBackground {
    /// Radiant power on the detector (W).
    pub power: f64,
    /// Photon arrival rate (s⁻¹).
    pub photon_flux: f64,
}

// Composite-Simpson panel count for the band integrals. The integrand is
// smooth and the band narrow, so the quadrature error is far below the
// 1e-6 relative contract.
const QUADRATURE_INTERVALS: usize = 4096;

/// Integrates the Planck spectral radiance over a wavenumber band (cm⁻¹)
/// for a detector of the given area (m²) viewing a unity-emissivity
/// Lambertian hemisphere, i.e. étendue π·A.
///
/// Power integrates (c/4)·W(ω,T) over the band and multiplies by A; the
/// photon flux integrates the same radiance divided by ħω.
pub fn detector_band_background(
    temperature: f64,
    band_cm: (f64, f64),
    area: f64,
) -> Result<BandBackground> {
    if !area.is_finite() || area <= 0.0 {
        return Err(Error::domain(format!(
            "detector area must be positive and finite, got {area}"
        )));
    }
    if !temperature.is_finite() || temperature <= 0.0 {
        return Err(Error::domain(format!(
            "temperature must be positive and finite, got {temperature}"
        )));
    }
    let (lambda_short, lambda_long) =
        crate::constants::wavenumber_band_to_wavelengths(band_cm.0, band_cm.1)?;
    let omega_low = crate::constants::wavelength_to_omega(lambda_long)?;
    let omega_high = crate::constants::wavelength_to_omega(lambda_short)?;

    // Hemispherical Lambertian throughput onto a flat detector: P = A·(c/4)·∫W dω.
    let prefactor = area * SPEED_OF_LIGHT / 4.0;
    let (energy_integral, photon_integral) =
        simpson_pair(omega_low, omega_high, QUADRATURE_INTERVALS, |omega| {
            let env = ThermalEnvironment {
                spectral: SpectralPoint::from_omega(omega).expect("omega > 0 inside band"),
                temperature,
            };
            let w = planck_energy_density(&env);
            (w, w / (REDUCED_PLANCK * omega))
        })?;

    Ok(BandBackground {
        power: prefactor * energy_integral,
        photon_flux: prefactor * photon_integral,
    })
}

/// Composite Simpson rule evaluating two integrands in one pass.
fn simpson_pair(
    a: f64,
    b: f64,
    intervals: usize,
    f: impl Fn(f64) -> (f64, f64),
) -> Result<(f64, f64)> {
    if intervals < 2 || intervals % 2 != 0 {
        return Err(Error::domain(
            "Simpson rule needs an even interval count >= 2".to_string(),
        ));
    }
    let h = (b - a) / intervals as f64;
    let (mut s0, mut s1) = f(a);
    let (e0, e1) = f(b);
    s0 += e0;
    s1 += e1;
    for k in 1..intervals {
        let weight = if k % 2 == 1 { 4.0 } else { 2.0 };
        let (v0, v1) = f(a + k as f64 * h);
        s0 += weight * v0;
        s1 += weight * v1;
    }
    Ok((s0 * h / 3.0, s1 * h / 3.0))
}
