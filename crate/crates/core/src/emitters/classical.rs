//! Dipole-antenna source, its frequency-domain current, and the SPP and
//! free-space fields it produces.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::constants::{vacuum_wavenumber, MU_0};
use crate::error::EmitterError;
use crate::layered_green::free_space_g0;
use crate::material::SppMode;
use crate::spp_tensor::{g_spp_tensor, BesselArgument, SppTensorInputs};
use crate::Tensor3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    X,
    Z,
}

impl Orientation {
    pub fn unit(self) -> [f64; 3] {
        match self {
            Orientation::X => [1.0, 0.0, 0.0],
            Orientation::Z => [0.0, 0.0, 1.0],
        }
    }

    pub fn axis_index(self) -> usize {
        match self {
            Orientation::X => 0,
            Orientation::Z => 2,
        }
    }
}

/// Classical dipole antenna at `(0, 0, z0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DipoleSource {
    /// Charge, C.
    pub charge: f64,
    /// Antenna length, m.
    pub length: f64,
    /// Drive angular frequency, rad/s.
    pub omega: f64,
    pub orientation: Orientation,
    /// Height above the interface, m.
    pub z0: f64,
}

impl DipoleSource {
    pub fn validate(&self) -> Result<(), EmitterError> {
        let pos = |v: f64| v.is_finite() && v > 0.0;
        if !pos(self.charge) {
            return Err(EmitterError::InvalidSource("charge must be positive"));
        }
        if !pos(self.length) {
            return Err(EmitterError::InvalidSource("length must be positive"));
        }
        if !pos(self.omega) {
            return Err(EmitterError::InvalidSource("frequency must be positive"));
        }
        if !pos(self.z0) {
            return Err(EmitterError::InvalidSource("height must be positive"));
        }
        Ok(())
    }

    pub fn position(&self) -> [f64; 3] {
        [0.0, 0.0, self.z0]
    }

    /// `i mu0 q l Omega^2 / 2`: maps `G · u` to the field phasor.
    fn field_prefactor(&self) -> Complex64 {
        Complex64::new(0.0, MU_0 * self.charge * self.length * self.omega * self.omega / 2.0)
    }
}

/// Fourier component of the antenna current:
/// `amplitude · delta^3(r - support) (delta(w - Omega) - delta(w + Omega)) u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurrentDensity {
    /// `i sqrt(pi/2) q l Omega / 2`, A·m.
    pub amplitude: Complex64,
    pub support: [f64; 3],
    pub frequency: f64,
    pub orientation: Orientation,
}

impl CurrentDensity {
    /// Weight of the frequency delta at `omega`: `+amplitude` at `+Omega`,
    /// `-amplitude` at `-Omega`, zero elsewhere.
    pub fn weight_at(&self, omega: f64) -> Complex64 {
        if omega == self.frequency {
            self.amplitude
        } else if omega == -self.frequency {
            -self.amplitude
        } else {
            Complex64::new(0.0, 0.0)
        }
    }
}

pub fn current_density_fourier(source: &DipoleSource) -> CurrentDensity {
    CurrentDensity {
        amplitude: Complex64::new(0.0, (PI / 2.0).sqrt() * source.charge * source.length * source.omega / 2.0),
        support: source.position(),
        frequency: source.omega,
        orientation: source.orientation,
    }
}

/// Time at which a real field is sampled.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum TimeSpec {
    /// `cos(Omega t) = 1`, i.e. `t = 0`.
    #[default]
    PeakEnvelope,
    /// Seconds.
    At(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub point: [f64; 3],
    pub time: TimeSpec,
    /// Real field `Re[A e^{-i Omega t}]`, V/m.
    pub e: [f64; 3],
    /// Envelope intensity `sum |A_i|^2`, (V/m)^2.
    pub envelope_intensity: f64,
}

fn apply(g: &Tensor3, col: usize, pre: Complex64) -> [Complex64; 3] {
    [g[0][col] * pre, g[1][col] * pre, g[2][col] * pre]
}

fn check_point(point: [f64; 3]) -> Result<(), EmitterError> {
    if !point.iter().all(|v| v.is_finite()) {
        return Err(EmitterError::InvalidSource("non-finite observation point"));
    }
    if point[2] < 0.0 {
        return Err(EmitterError::NotInDielectric(point[2]));
    }
    Ok(())
}

fn check_mode(source: &DipoleSource, mode: &SppMode) -> Result<(), EmitterError> {
    if (mode.omega - source.omega).abs() > 1e-9 * source.omega {
        return Err(EmitterError::InvalidSource("SPP mode frequency differs from the drive frequency"));
    }
    Ok(())
}

/// Complex SPP field phasor at `point` from the closed-form pole tensor.
pub fn spp_field_phasor(
    source: &DipoleSource,
    mode: &SppMode,
    point: [f64; 3],
    bessel_arg: BesselArgument,
) -> Result<[Complex64; 3], EmitterError> {
    source.validate()?;
    check_point(point)?;
    check_mode(source, mode)?;
    let inputs = SppTensorInputs::new(mode, point, source.position()).with_bessel_arg(bessel_arg);
    let g = g_spp_tensor(&inputs)?;
    Ok(apply(&g, source.orientation.axis_index(), source.field_prefactor()))
}

/// Free-space phasor in the homogeneous dielectric `eps_d` (no interface).
pub fn free_space_field_phasor(
    source: &DipoleSource,
    eps_d: f64,
    point: [f64; 3],
) -> Result<[Complex64; 3], EmitterError> {
    source.validate()?;
    if !point.iter().all(|v| v.is_finite()) {
        return Err(EmitterError::InvalidSource("non-finite observation point"));
    }
    if point == source.position() {
        return Err(EmitterError::AtSource);
    }
    let k = eps_d.sqrt() * vacuum_wavenumber(source.omega);
    let g = free_space_g0(point, source.position(), k)?;
    Ok(apply(&g, source.orientation.axis_index(), source.field_prefactor()))
}

fn real_sample(point: [f64; 3], a: [Complex64; 3], omega: f64, time: TimeSpec) -> FieldSample {
    let phase = match time {
        TimeSpec::PeakEnvelope => Complex64::new(1.0, 0.0),
        TimeSpec::At(t) => Complex64::new(0.0, -omega * t).exp(),
    };
    FieldSample { point, time, e: a.map(|c| (c * phase).re), envelope_intensity: a.iter().map(|c| c.norm_sqr()).sum() }
}

/// Real SPP field sample (closed form, complex-pole Bessel argument).
pub fn spp_field(
    source: &DipoleSource,
    mode: &SppMode,
    point: [f64; 3],
    time: TimeSpec,
) -> Result<FieldSample, EmitterError> {
    let a = spp_field_phasor(source, mode, point, BesselArgument::default())?;
    Ok(real_sample(point, a, source.omega, time))
}

/// Real free-space field sample in the dielectric `eps_d`.
pub fn free_space_field(
    source: &DipoleSource,
    eps_d: f64,
    point: [f64; 3],
    time: TimeSpec,
) -> Result<FieldSample, EmitterError> {
    let a = free_space_field_phasor(source, eps_d, point)?;
    Ok(real_sample(point, a, source.omega, time))
}

/// `sum |A_spp|^2 / sum |A_0|^2` at the peak envelope; `+inf` when the
/// free-space field vanishes at `point`.
pub fn relative_intensity(source: &DipoleSource, mode: &SppMode, point: [f64; 3]) -> Result<f64, EmitterError> {
    let spp = spp_field(source, mode, point, TimeSpec::PeakEnvelope)?;
    let free = free_space_field(source, mode.eps_d.re, point, TimeSpec::PeakEnvelope)?;
    if free.envelope_intensity == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(spp.envelope_intensity / free.envelope_intensity)
}
