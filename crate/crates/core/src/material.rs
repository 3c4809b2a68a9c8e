//! Dispersive media and the surface-plasmon pole of a planar interface.
//!
//! Drude metal:
//!
//! ```text
//! eps(w) = eps_inf * (1 - w_p^2 / (w (w + i gamma)))
//! ```
//!
//! with `w_p` and `gamma` given in eV and the drive frequency converted with
//! hbar. The p-polarised reflection factor of the dielectric (`eps_d`, z > 0)
//! / metal (`eps_m`, z < 0) interface has the denominator
//! `k_m eps_d - k_d eps_m`, where
//!
//! ```text
//! k_d = +sqrt(eps_d k0^2 - k^2)    (Im >= 0)
//! k_m = -sqrt(eps_m k0^2 - k^2)    (negated Im >= 0 root)
//! ```
//!
//! Its zero is the SPP wavenumber `k_spp = k0 sqrt(eps_d eps_m / (eps_d + eps_m))`.

use num_complex::Complex64;

use crate::constants::{vacuum_wavenumber, HBAR_EV_S};
use crate::error::MaterialError;
use crate::numerics::branch::sqrt_im_nonneg;

/// Relative tolerance on `|k_m eps_d - k_d eps_m|` at the returned pole.
pub const POLE_RESIDUAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrudeParams {
    /// Plasma frequency, eV.
    pub omega_p_ev: f64,
    /// High-frequency permittivity.
    pub eps_inf: f64,
    /// Damping rate, eV.
    pub gamma_ev: f64,
}

impl DrudeParams {
    pub fn new(omega_p_ev: f64, eps_inf: f64, gamma_ev: f64) -> Result<Self, MaterialError> {
        let p = Self { omega_p_ev, eps_inf, gamma_ev };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), MaterialError> {
        if !(self.omega_p_ev.is_finite() && self.omega_p_ev > 0.0) {
            return Err(MaterialError::InvalidDrude("plasma frequency must be positive"));
        }
        if !(self.eps_inf.is_finite() && self.eps_inf >= 1.0) {
            return Err(MaterialError::InvalidDrude("eps_inf must be >= 1"));
        }
        if !(self.gamma_ev.is_finite() && self.gamma_ev >= 0.0) {
            return Err(MaterialError::InvalidDrude("damping must be non-negative"));
        }
        Ok(())
    }
}

/// Silver: `w_p = 3.76 eV`, `eps_inf = 9.6`, `gamma = 0.03 w_p`.
pub fn silver_default() -> DrudeParams {
    DrudeParams { omega_p_ev: 3.76, eps_inf: 9.6, gamma_ev: 0.03 * 3.76 }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Medium {
    /// Lossless dielectric with real permittivity >= 1.
    Dielectric(f64),
    DrudeMetal(DrudeParams),
    /// Frequency-independent permittivity, for model media such as the
    /// lossless `eps = -2` test metal.
    Fixed(Complex64),
}

impl Medium {
    pub fn silver() -> Self {
        Medium::DrudeMetal(silver_default())
    }

    pub fn vacuum() -> Self {
        Medium::Dielectric(1.0)
    }
}

/// Relative permittivity of `medium` at angular frequency `omega` (rad/s).
pub fn permittivity(medium: &Medium, omega: f64) -> Result<Complex64, MaterialError> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(MaterialError::NonPositiveFrequency(omega));
    }
    match medium {
        Medium::Dielectric(eps) => {
            if !(eps.is_finite() && *eps >= 1.0) {
                return Err(MaterialError::InvalidDielectric(*eps));
            }
            Ok(Complex64::new(*eps, 0.0))
        }
        Medium::DrudeMetal(p) => {
            p.validate()?;
            let w = omega * HBAR_EV_S;
            let denom = Complex64::new(w, 0.0) * Complex64::new(w, p.gamma_ev);
            Ok(p.eps_inf * (Complex64::new(1.0, 0.0) - p.omega_p_ev * p.omega_p_ev / denom))
        }
        Medium::Fixed(eps) => Ok(*eps),
    }
}

/// `(k_d, k_m)` for a real in-plane wavenumber.
pub fn vertical_wavenumbers(k_par: f64, omega: f64, eps_d: Complex64, eps_m: Complex64) -> (Complex64, Complex64) {
    let k0 = vacuum_wavenumber(omega);
    vertical_wavenumbers_k0(Complex64::new(k_par, 0.0), k0, eps_d, eps_m)
}

/// `(k_d, k_m)` for a complex in-plane wavenumber (contour points) and
/// vacuum wavenumber `k0`.
#[inline]
pub fn vertical_wavenumbers_k0(
    k_par: Complex64,
    k0: f64,
    eps_d: Complex64,
    eps_m: Complex64,
) -> (Complex64, Complex64) {
    let k2 = k_par * k_par;
    let k02 = k0 * k0;
    let kd = sqrt_im_nonneg(eps_d * k02 - k2);
    let km = -sqrt_im_nonneg(eps_m * k02 - k2);
    (kd, km)
}

/// Bound surface-plasmon mode of the interface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SppMode {
    pub k_spp: Complex64,
    pub omega: f64,
    pub eps_d: Complex64,
    pub eps_m: Complex64,
}

impl SppMode {
    /// Lateral 1/e intensity length `1/(2 Im k_spp)`; infinite when lossless.
    pub fn propagation_length(&self) -> f64 {
        propagation_length(self)
    }

    /// `sqrt(eps_d / -eps_m)` on the principal branch: vertical decay per
    /// unit `|k_spp|` in the dielectric.
    pub fn decay_ratio(&self) -> Complex64 {
        (self.eps_d / -self.eps_m).sqrt()
    }

    /// Vertical 1/e field length in the dielectric, `1/(Re sqrt(eps_d/-eps_m) |k_spp|)`.
    pub fn confinement_length(&self) -> f64 {
        1.0 / (self.decay_ratio().re * self.k_spp.norm())
    }

    pub fn vacuum_wavenumber(&self) -> f64 {
        vacuum_wavenumber(self.omega)
    }
}

pub fn propagation_length(mode: &SppMode) -> f64 {
    if mode.k_spp.im > 0.0 {
        1.0 / (2.0 * mode.k_spp.im)
    } else {
        f64::INFINITY
    }
}

/// Relative residual of the p-denominator at `k`.
pub fn pole_residual(k: Complex64, k0: f64, eps_d: Complex64, eps_m: Complex64) -> f64 {
    let (kd, km) = vertical_wavenumbers_k0(k, k0, eps_d, eps_m);
    (km * eps_d - kd * eps_m).norm() / (kd * eps_m).norm()
}

/// SPP pole of the dielectric/metal interface at `omega`.
pub fn spp_pole(omega: f64, eps_d: Complex64, eps_m: Complex64) -> Result<SppMode, MaterialError> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(MaterialError::NonPositiveFrequency(omega));
    }
    if !(eps_m.re < 0.0 && (eps_d + eps_m).re < 0.0) {
        return Err(MaterialError::NoBoundMode { eps_d, eps_m });
    }
    let k0 = vacuum_wavenumber(omega);
    let mut k = k0 * (eps_d * eps_m / (eps_d + eps_m)).sqrt();
    if k.re < 0.0 {
        k = -k;
    }
    if pole_residual(k, k0, eps_d, eps_m) > POLE_RESIDUAL_TOL {
        k = newton_polish(k, k0, eps_d, eps_m)?;
    }
    let residual = pole_residual(k, k0, eps_d, eps_m);
    if residual > POLE_RESIDUAL_TOL {
        return Err(MaterialError::PoleResidual { residual });
    }
    Ok(SppMode { k_spp: k, omega, eps_d, eps_m })
}

/// Complex Newton iteration on `f(k) = k_m eps_d - k_d eps_m`, using
/// `dk_d/dk = -k/k_d` and `dk_m/dk = -k/k_m`.
pub fn newton_polish(
    start: Complex64,
    k0: f64,
    eps_d: Complex64,
    eps_m: Complex64,
) -> Result<Complex64, MaterialError> {
    let mut k = start;
    for _ in 0..50 {
        let (kd, km) = vertical_wavenumbers_k0(k, k0, eps_d, eps_m);
        let f = km * eps_d - kd * eps_m;
        let df = -k * (eps_d / km - eps_m / kd);
        if !(df.re.is_finite() && df.im.is_finite()) || df.norm() == 0.0 {
            return Err(MaterialError::PolishFailed);
        }
        let step = f / df;
        k -= step;
        if step.norm() <= 1e-15 * k.norm() {
            return Ok(k);
        }
    }
    Err(MaterialError::PolishFailed)
}
