//! The nonlinear-interferometer model proper: parameter container,
//! closed-form visible-mode photon number and fringe visibility, a
//! scan-based extremum finder, and finite-difference sensitivity analysis.
//!
//! Layout of the modeled device: a two-mode squeezer on (i, v), a phase
//! shifter on i, a beam splitter mixing i with an independently seeded
//! mode i', and a second identical squeezer on (i, v). Only mode v is
//! measured.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Gains above this value leave the undepleted-pump approximation the
/// closed forms were derived under; the model stays exact but loses
/// physical fidelity.
pub const LOW_GAIN_LIMIT: f64 = 0.2;

/// The five model knobs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferometerParams {
    /// Parametric gain of each crystal (dimensionless, >= 0).
    pub xi: f64,
    /// Phase shift in the infrared arm (radians).
    pub phi: f64,
    /// Beam-splitter mixing angle in [0, pi/2]; transmissivity cos²κ.
    pub kappa: f64,
    /// Mean occupation of the thermal seed entering the first crystal.
    pub n_th_i: f64,
    /// Mean occupation of the thermal seed mixed in at the beam splitter.
    pub n_th_c: f64,
}

impl InterferometerParams {
    pub fn new(xi: f64, phi: f64, kappa: f64, n_th_i: f64, n_th_c: f64) -> Result<Self> {
        if !xi.is_finite() || xi < 0.0 {
            return Err(Error::domain(format!("gain xi must be >= 0, got {xi}")));
        }
        if !phi.is_finite() {
            return Err(Error::domain(format!("phase phi must be finite, got {phi}")));
        }
        if !kappa.is_finite() || !(0.0..=FRAC_PI_2).contains(&kappa) {
            return Err(Error::domain(format!(
                "beam-splitter angle kappa must lie in [0, pi/2], got {kappa}"
            )));
        }
        if !n_th_i.is_finite() || n_th_i < 0.0 {
            return Err(Error::domain(format!(
                "occupation n_th_i must be >= 0, got {n_th_i}"
            )));
        }
        if !n_th_c.is_finite() || n_th_c < 0.0 {
            return Err(Error::domain(format!(
                "occupation n_th_c must be >= 0, got {n_th_c}"
            )));
        }
        Ok(Self {
            xi,
            phi,
            kappa,
            n_th_i,
            n_th_c,
        })
    }

    /// True while the undepleted-pump assumption is comfortable. Callers
    /// should warn (not fail) when this returns false.
    pub fn low_gain(&self) -> bool {
        self.xi <= LOW_GAIN_LIMIT
    }

    /// Square root of the beam-splitter transmissivity, t = cos κ.
    ///
    /// π/2 is not representable in binary, so `cos` of the stored endpoint
    /// would give ~6.1e-17 instead of 0; the full-reflection endpoint is
    /// pinned to an exact 0 so that closed-form visibility vanishes exactly.
    pub fn cos_kappa(&self) -> f64 {
        if self.kappa == FRAC_PI_2 {
            0.0
        } else {
            self.kappa.cos()
        }
    }

    pub fn with_phi(&self, phi: f64) -> Self {
        Self { phi, ..*self }
    }
}

/// Fringe extrema and contrast of the visible-mode photon number over φ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VisibilityResult {
    /// (max − min)/(max + min), in [0, 1]; 0 when both extrema vanish.
    pub visibility: f64,
    pub n_v_max: f64,
    pub n_v_min: f64,
    /// Phase at which the maximum occurs (radians in [0, 2π)).
    pub phi_max: f64,
    /// Phase at which the minimum occurs (radians in [0, 2π)).
    pub phi_min: f64,
    /// Set when there are no fringes at all (ξ = 0, so N_v ≡ 0).
    pub degenerate: bool,
}

/// Mean photon number in the visible mode after the full pipeline:
/// sinh²ξ·[(n_i+1)·cosh²ξ·(cos²κ + 1 + 2·cosκ·cosφ) + (n_c+1)·(1−cos²κ)].
pub fn n_visible(params: &InterferometerParams) -> f64 {
    let sinh2 = params.xi.cosh().powi(2) - 1.0; // sinh²ξ, written as cosh²−1
    let cosh2 = params.xi.cosh().powi(2);
    let t = params.cos_kappa();
    let interference = t * t + 1.0 + 2.0 * t * params.phi.cos();
    let seeded = (params.n_th_i + 1.0) * cosh2 * interference;
    let injected = (params.n_th_c + 1.0) * (1.0 - t * t);
    (sinh2 * (seeded + injected)).max(0.0)
}

/// Closed-form visibility with extrema pinned at φ = 0 and φ = π:
/// V = 2(n_i+1)cosh²ξ·cosκ / [(n_i+1)cosh²ξ(1+cos²κ) + (n_c+1)(1−cos²κ)].
pub fn visibility_closed_form(params: &InterferometerParams) -> VisibilityResult {
    let n_v_max = n_visible(&params.with_phi(0.0));
    let n_v_min = n_visible(&params.with_phi(PI));
    if params.xi == 0.0 {
        return VisibilityResult {
            visibility: 0.0,
            n_v_max,
            n_v_min,
            phi_max: 0.0,
            phi_min: PI,
            degenerate: true,
        };
    }
    let visibility = closed_visibility(
        params.cos_kappa(),
        params.n_th_i,
        params.n_th_c,
        params.xi,
    );
    VisibilityResult {
        visibility,
        n_v_max,
        n_v_min,
        phi_max: 0.0,
        phi_min: PI,
        degenerate: false,
    }
}

/// V as a function of t = cosκ. Shared by the closed form and the
/// finite-difference sensitivities.
fn closed_visibility(t: f64, n_i: f64, n_c: f64, xi: f64) -> f64 {
    let cosh2 = xi.cosh().powi(2);
    let seeded = (n_i + 1.0) * cosh2;
    let numerator = 2.0 * seeded * t;
    let denominator = seeded * (1.0 + t * t) + (n_c + 1.0) * (1.0 - t * t);
    numerator / denominator
}

/// Locates the fringe extrema by scanning φ over [0, 2π) and refining
/// each candidate with a golden-section search. `grid_points` must be at
/// least 64 so no lobe can be missed.
pub fn visibility_by_scan(
    params: &InterferometerParams,
    grid_points: usize,
) -> Result<VisibilityResult> {
    if grid_points < 64 {
        return Err(Error::domain(format!(
            "phi grid must have at least 64 points, got {grid_points}"
        )));
    }
    let n_at = |phi: f64| n_visible(&params.with_phi(phi));
    let step = 2.0 * PI / grid_points as f64;
    let mut best_max = (0usize, f64::NEG_INFINITY);
    let mut best_min = (0usize, f64::INFINITY);
    for k in 0..grid_points {
        let value = n_at(k as f64 * step);
        if value > best_max.1 {
            best_max = (k, value);
        }
        if value < best_min.1 {
            best_min = (k, value);
        }
    }

    // Degenerate scan: constant N_v (either xi = 0 or no phi dependence).
    if (best_max.1 - best_min.1).abs() <= f64::EPSILON * best_max.1.abs().max(1.0) {
        return Ok(VisibilityResult {
            visibility: 0.0,
            n_v_max: best_max.1,
            n_v_min: best_min.1,
            phi_max: 0.0,
            phi_min: PI,
            degenerate: params.xi == 0.0,
        });
    }

    let refine = |k: usize, maximize: bool| -> (f64, f64) {
        let lo = (k as f64 - 1.0) * step;
        let hi = (k as f64 + 1.0) * step;
        golden_section(lo, hi, 1e-9, |phi| {
            if maximize {
                -n_at(phi)
            } else {
                n_at(phi)
            }
        })
    };
    let (phi_max_raw, _) = refine(best_max.0, true);
    let (phi_min_raw, _) = refine(best_min.0, false);
    let phi_max = phi_max_raw.rem_euclid(2.0 * PI);
    let phi_min = phi_min_raw.rem_euclid(2.0 * PI);
    let n_v_max = n_at(phi_max);
    let n_v_min = n_at(phi_min);
    let visibility = if n_v_max + n_v_min > 0.0 {
        (n_v_max - n_v_min) / (n_v_max + n_v_min)
    } else {
        0.0
    };
    Ok(VisibilityResult {
        visibility,
        n_v_max,
        n_v_min,
        phi_max,
        phi_min,
        degenerate: false,
    })
}

/// Golden-section minimization on [lo, hi]; returns (argmin, min).
fn golden_section(mut lo: f64, mut hi: f64, tol: f64, f: impl Fn(f64) -> f64) -> (f64, f64) {
    let inv_phi = 0.618_033_988_749_894_8;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    let mid = 0.5 * (lo + hi);
    (mid, f(mid))
}

/// Finite-difference sensitivities of the visibility with respect to
/// (t = cosκ, n_th_c, n_th_i, ξ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VisibilityPartials {
    pub dv_dt: f64,
    pub dv_dn_c: f64,
    pub dv_dn_i: f64,
    pub dv_dxi: f64,
    /// True when any direction had to fall back to a one-sided difference
    /// because the base point touches a domain boundary.
    pub one_sided: bool,
}

impl VisibilityPartials {
    /// Sign pattern (∂V/∂t, ∂V/∂n_c, ∂V/∂n_i, ∂V/∂ξ) as positivity flags.
    pub fn signs(&self) -> (bool, bool, bool, bool) {
        (
            self.dv_dt > 0.0,
            self.dv_dn_c > 0.0,
            self.dv_dn_i > 0.0,
            self.dv_dxi > 0.0,
        )
    }
}

const FD_RELATIVE_STEP: f64 = 1e-6;

/// Central finite differences of V, parameter-scaled step h = 1e-6·max(|p|, 1).
/// Directions whose lower bound would be crossed use a one-sided difference
/// and set the `one_sided` flag. ξ = 0 is rejected: the visibility is
/// defined as 0 there, so no meaningful derivative exists.
pub fn visibility_partials(params: &InterferometerParams) -> Result<VisibilityPartials> {
    if params.xi == 0.0 {
        return Err(Error::domain(
            "visibility derivatives are undefined at xi = 0 (degenerate fringes)".to_string(),
        ));
    }
    let t = params.cos_kappa();
    let (n_i, n_c, xi) = (params.n_th_i, params.n_th_c, params.xi);
    let mut one_sided = false;

    let mut diff = |value: f64,
                    lower: f64,
                    upper: f64,
                    eval: &dyn Fn(f64) -> f64|
     -> f64 {
        let h = FD_RELATIVE_STEP * value.abs().max(1.0);
        let lo_ok = value - h >= lower;
        let hi_ok = value + h <= upper;
        match (lo_ok, hi_ok) {
            (true, true) => (eval(value + h) - eval(value - h)) / (2.0 * h),
            (false, _) => {
                one_sided = true;
                (eval(value + h) - eval(value)) / h
            }
            (_, false) => {
                one_sided = true;
                (eval(value) - eval(value - h)) / h
            }
        }
    };

    let dv_dt = diff(t, 0.0, 1.0, &|x| closed_visibility(x, n_i, n_c, xi));
    let dv_dn_c = diff(n_c, 0.0, f64::INFINITY, &|x| {
        closed_visibility(t, n_i, x, xi)
    });
    let dv_dn_i = diff(n_i, 0.0, f64::INFINITY, &|x| {
        closed_visibility(t, x, n_c, xi)
    });
    let dv_dxi = diff(xi, 0.0, f64::INFINITY, &|x| {
        closed_visibility(t, n_i, n_c, x)
    });

    Ok(VisibilityPartials {
        dv_dt,
        dv_dn_c,
        dv_dn_i,
        dv_dxi,
        one_sided,
    })
}
