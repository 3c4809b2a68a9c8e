//! Two-level emitter coupled to the surface plasmon: decay rate, Rabi
//! splitting and the resonant second-order correlation
//!
//! ```text
//! g2(tau) = 1 - exp(-3 Gamma tau / 4) [cos(R tau) + (3 Gamma / 4 R) sin(R tau)],
//! R = sqrt(Omega_R^2 - Gamma^2 / 16).
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::constants::{vacuum_wavenumber, HBAR_J_S, MU_0};
use crate::error::EmitterError;
use crate::material::SppMode;
use crate::spp_tensor::{g_spp_tensor, SppTensorInputs};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumEmitter {
    /// Dipole moment magnitude, C·m.
    pub dipole_moment: f64,
    /// Unit orientation of the dipole moment.
    pub orientation: [f64; 3],
    /// Transition angular frequency, rad/s.
    pub omega: f64,
    /// Position, m (z > 0).
    pub position: [f64; 3],
    /// Rabi frequency, rad/s.
    pub rabi_frequency: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecayMode {
    /// Plasmon-only rate, s^-1, under [`super::CONVENTION_TAG`].
    SppOnly,
    /// `Gamma_spp / Gamma_0`, with `Gamma_0` the rate in the bulk dielectric.
    Normalized,
    /// `(Gamma_spp + Gamma_0) / Gamma_0`.
    NormalizedTotal,
}

impl QuantumEmitter {
    fn validate(&self) -> Result<(), EmitterError> {
        if !(self.dipole_moment.is_finite() && self.dipole_moment > 0.0) {
            return Err(EmitterError::InvalidSource("dipole moment must be positive"));
        }
        if !(self.omega.is_finite() && self.omega > 0.0) {
            return Err(EmitterError::InvalidSource("transition frequency must be positive"));
        }
        let n: f64 = self.orientation.iter().map(|v| v * v).sum::<f64>().sqrt();
        if (n - 1.0).abs() >= 1e-12 || n.is_nan() {
            return Err(EmitterError::InvalidSource("orientation must be a unit vector"));
        }
        if !(self.position[2] > 0.0 && self.position.iter().all(|v| v.is_finite())) {
            return Err(EmitterError::NotInDielectric(self.position[2]));
        }
        Ok(())
    }
}

/// `Im[u · G_spp(r0, r0) · u]`, m^-1.
fn im_projected_g(emitter: &QuantumEmitter, mode: &SppMode) -> Result<f64, EmitterError> {
    let g = g_spp_tensor(&SppTensorInputs::new(mode, emitter.position, emitter.position))?;
    let u = emitter.orientation;
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..3 {
        for j in 0..3 {
            acc += g[i][j] * (u[i] * u[j]);
        }
    }
    if acc.im < -1e-12 * acc.norm() {
        return Err(EmitterError::NegativeRate { value: acc.im });
    }
    Ok(acc.im)
}

/// Spontaneous decay rate of `emitter` into the surface plasmon of `mode`.
pub fn decay_rate(emitter: &QuantumEmitter, mode: &SppMode, kind: DecayMode) -> Result<f64, EmitterError> {
    emitter.validate()?;
    if (mode.omega - emitter.omega).abs() > 1e-9 * emitter.omega {
        return Err(EmitterError::InvalidSource("SPP mode frequency differs from the transition frequency"));
    }
    let im_g = im_projected_g(emitter, mode)?;
    // Bulk dielectric: Im G0(r0, r0) = k / (6 pi) 1, k = sqrt(eps_d) w / c.
    let im_g0 = mode.eps_d.re.sqrt() * vacuum_wavenumber(emitter.omega) / (6.0 * PI);
    Ok(match kind {
        DecayMode::SppOnly => {
            let w = emitter.omega;
            2.0 * MU_0 * w * w / HBAR_J_S * emitter.dipole_moment * emitter.dipole_moment * im_g
        }
        DecayMode::Normalized => im_g / im_g0,
        DecayMode::NormalizedTotal => (im_g + im_g0) / im_g0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RabiRegime {
    /// `Omega_R > Gamma / 4`: real `R`, oscillating correlations.
    Underdamped,
    /// `Omega_R = Gamma / 4`: `R = 0`.
    Critical,
    /// `Omega_R < Gamma / 4`: `R` imaginary; `value` holds `|R|`.
    Overdamped,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RabiSplitting {
    /// `|R|`, same units as the inputs.
    pub value: f64,
    pub regime: RabiRegime,
}

pub fn rabi_splitting(rabi_frequency: f64, gamma: f64) -> Result<RabiSplitting, EmitterError> {
    if !(rabi_frequency.is_finite() && gamma.is_finite() && rabi_frequency >= 0.0 && gamma >= 0.0) {
        return Err(EmitterError::InvalidRates);
    }
    let a = rabi_frequency * rabi_frequency;
    let b = gamma * gamma / 16.0;
    let disc = a - b;
    if disc.abs() <= 4.0 * f64::EPSILON * a.max(b) {
        return Ok(RabiSplitting { value: 0.0, regime: RabiRegime::Critical });
    }
    let regime = if disc > 0.0 { RabiRegime::Underdamped } else { RabiRegime::Overdamped };
    Ok(RabiSplitting { value: disc.abs().sqrt(), regime })
}

/// Resonant second-order correlation at delay `tau` (same time units as
/// `1/gamma`).
pub fn g2(tau: f64, rabi_frequency: f64, gamma: f64) -> Result<f64, EmitterError> {
    if !(tau.is_finite() && tau >= 0.0) {
        return Err(EmitterError::InvalidRates);
    }
    let r = rabi_splitting(rabi_frequency, gamma)?;
    if r.regime != RabiRegime::Underdamped {
        return Err(EmitterError::UnsupportedBranch(r.regime));
    }
    let big_r = r.value;
    let damp = (-0.75 * gamma * tau).exp();
    Ok(1.0 - damp * ((big_r * tau).cos() + 0.75 * gamma / big_r * (big_r * tau).sin()))
}

/// First maximum of `g2`: `tau = pi / R`, `g2 = 1 + exp(-3 Gamma pi / 4 R)`.
pub fn g2_first_maximum(rabi_frequency: f64, gamma: f64) -> Result<(f64, f64), EmitterError> {
    let r = rabi_splitting(rabi_frequency, gamma)?;
    if r.regime != RabiRegime::Underdamped {
        return Err(EmitterError::UnsupportedBranch(r.regime));
    }
    let tau = PI / r.value;
    Ok((tau, g2(tau, rabi_frequency, gamma)?))
}
