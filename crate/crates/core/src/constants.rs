//! Physical constants (CODATA 2018) and the unit conversions used at the
//! interface boundary. Everything inside the crate is SI: rad/s, m.

use std::f64::consts::PI;

/// Speed of light in vacuum, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Reduced Planck constant, eV s.
pub const HBAR_EV_S: f64 = 6.582_119_569e-16;
/// Reduced Planck constant, J s.
pub const HBAR_J_S: f64 = 1.054_571_817e-34;
/// Vacuum permeability, N/A^2.
pub const MU_0: f64 = 1.256_637_062_12e-6;
/// One debye in C m.
pub const DEBYE: f64 = 3.335_640_952e-30;

pub fn omega_from_wavelength_nm(lambda_nm: f64) -> f64 {
    2.0 * PI * SPEED_OF_LIGHT / (lambda_nm * 1e-9)
}

pub fn wavelength_nm_from_omega(omega: f64) -> f64 {
    2.0 * PI * SPEED_OF_LIGHT / omega * 1e9
}

pub fn omega_from_ev(energy_ev: f64) -> f64 {
    energy_ev / HBAR_EV_S
}

pub fn ev_from_omega(omega: f64) -> f64 {
    omega * HBAR_EV_S
}

/// Vacuum wavenumber ω/c.
pub fn vacuum_wavenumber(omega: f64) -> f64 {
    omega / SPEED_OF_LIGHT
}
