//! Physical constants (CODATA-2018 exact SI values) and the spectral unit
//! conversions used everywhere else in the crate.
//!
//! The canonical internal unit for spectral quantities is SI angular
//! frequency (rad/s); wavelengths and wavenumbers exist only at interface
//! boundaries.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Planck constant (J·s), exact by the 2019 SI redefinition.
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Reduced Planck constant ħ = h/2π (J·s).
pub const REDUCED_PLANCK: f64 = PLANCK / (2.0 * PI);

/// Boltzmann constant (J/K), exact by the 2019 SI redefinition.
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Speed of light in vacuum (m/s), exact.
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// Bundle of the fundamental constants the model needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Planck constant (J·s).
    pub h: f64,
    /// Reduced Planck constant (J·s).
    pub hbar: f64,
    /// Boltzmann constant (J/K).
    pub k_b: f64,
    /// Speed of light (m/s).
    pub c: f64,
}

/// The CODATA-2018 exact values used by every module.
pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
    h: PLANCK,
    hbar: REDUCED_PLANCK,
    k_b: BOLTZMANN,
    c: SPEED_OF_LIGHT,
};

fn require_positive_finite(value: f64, what: &str) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::domain(format!(
            "{what} must be positive and finite, got {value}"
        )))
    }
}

/// A single spectral location, stored as angular frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint {
    omega: f64,
}

impl SpectralPoint {
    /// From angular frequency in rad/s.
    pub fn from_omega(omega: f64) -> Result<Self> {
        Ok(Self {
            omega: require_positive_finite(omega, "angular frequency")?,
        })
    }

    /// From vacuum wavelength in meters.
    pub fn from_wavelength(lambda: f64) -> Result<Self> {
        Ok(Self {
            omega: wavelength_to_omega(lambda)?,
        })
    }

    /// From wavenumber in m⁻¹ (not cm⁻¹).
    pub fn from_wavenumber(nu: f64) -> Result<Self> {
        let nu = require_positive_finite(nu, "wavenumber")?;
        Self::from_wavelength(1.0 / nu)
    }

    /// Angular frequency in rad/s.
    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Vacuum wavelength in meters.
    pub fn wavelength(&self) -> f64 {
        2.0 * PI * SPEED_OF_LIGHT / self.omega
    }

    /// Wavenumber 1/λ in m⁻¹.
    pub fn wavenumber(&self) -> f64 {
        1.0 / self.wavelength()
    }
}

/// ω = 2πc/λ for λ in meters.
pub fn wavelength_to_omega(lambda: f64) -> Result<f64> {
    let lambda = require_positive_finite(lambda, "wavelength")?;
    Ok(2.0 * PI * SPEED_OF_LIGHT / lambda)
}

/// λ = 2πc/ω for ω in rad/s.
pub fn omega_to_wavelength(omega: f64) -> Result<f64> {
    let omega = require_positive_finite(omega, "angular frequency")?;
    Ok(2.0 * PI * SPEED_OF_LIGHT / omega)
}

/// Converts a spectroscopic band given in cm⁻¹ to a wavelength interval in
/// meters. The lower wavenumber maps to the longer wavelength, so the result
/// is returned as (short, long) = (1/high, 1/low).
pub fn wavenumber_band_to_wavelengths(low_cm: f64, high_cm: f64) -> Result<(f64, f64)> {
    let low = require_positive_finite(low_cm, "band low edge")?;
    let high = require_positive_finite(high_cm, "band high edge")?;
    if low >= high {
        return Err(Error::domain(format!(
            "band must satisfy 0 < low < high, got ({low_cm}, {high_cm}) cm^-1"
        )));
    }
    // 1 cm^-1 = 100 m^-1, so lambda = 0.01/nu meters.
    Ok((0.01 / high, 0.01 / low))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn hbar_is_h_over_two_pi() {
        assert_relative_eq!(REDUCED_PLANCK, PLANCK / (2.0 * PI), max_relative = 1e-15);
        assert_relative_eq!(CODATA_2018.hbar, 1.054_571_817e-34, max_relative = 1e-9);
    }

    #[test]
    fn one_micron_omega() {
        // 2*pi*c/lambda evaluated with the stated constants.
        let omega = wavelength_to_omega(1e-6).unwrap();
        assert_relative_eq!(omega, 1.883_651_567_308_853_2e15, max_relative = 1e-12);
    }

    #[test]
    fn eight_micron_omega() {
        let omega = wavelength_to_omega(8e-6).unwrap();
        assert_relative_eq!(omega, 2.354_564_459_136_066_6e14, max_relative = 1e-12);
    }

    #[test]
    fn rejects_nonpositive_wavelength() {
        assert!(wavelength_to_omega(0.0).is_err());
        assert!(wavelength_to_omega(-1e-6).is_err());
        assert!(wavelength_to_omega(f64::NAN).is_err());
        assert!(omega_to_wavelength(f64::INFINITY).is_err());
    }

    #[test]
    fn measurement_band_maps_to_wavelengths() {
        // 1176-1234 cm^-1, lambda = 0.01/nu m.
        let (short, long) = wavenumber_band_to_wavelengths(1176.0, 1234.0).unwrap();
        assert_relative_eq!(short, 8.103_727_714_748_785e-6, max_relative = 1e-12);
        assert_relative_eq!(long, 8.503_401_360_544_217e-6, max_relative = 1e-12);
        assert!(short < long);
    }

    #[test]
    fn rejects_empty_or_reversed_band() {
        assert!(wavenumber_band_to_wavelengths(1000.0, 1000.0).is_err());
        assert!(wavenumber_band_to_wavelengths(1250.0, 1176.0).is_err());
        assert!(wavenumber_band_to_wavelengths(-5.0, 10.0).is_err());
    }

    proptest! {
        #[test]
        fn wavelength_omega_round_trip(lambda in 1e-9..1e-3f64) {
            let back = omega_to_wavelength(wavelength_to_omega(lambda).unwrap()).unwrap();
            prop_assert!((back - lambda).abs() / lambda <= 1e-12);
        }

        #[test]
        fn spectral_point_views_consistent(omega in 1e12..1e17f64) {
            let p = SpectralPoint::from_omega(omega).unwrap();
            let via_lambda = SpectralPoint::from_wavelength(p.wavelength()).unwrap();
            let via_nu = SpectralPoint::from_wavenumber(p.wavenumber()).unwrap();
            prop_assert!((via_lambda.omega() - omega).abs() / omega <= 1e-12);
            prop_assert!((via_nu.omega() - omega).abs() / omega <= 1e-12);
        }
    }
}
