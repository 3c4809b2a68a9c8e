//! Shared fixtures for the integration tests.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spp_green::constants::omega_from_wavelength_nm;
use spp_green::material::{permittivity, spp_pole, Medium, SppMode};

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn silver_eps(lambda_nm: f64) -> Complex64 {
    permittivity(&Medium::silver(), omega_from_wavelength_nm(lambda_nm)).unwrap()
}

/// Silver/vacuum mode at `lambda_nm`.
pub fn silver_mode(lambda_nm: f64) -> SppMode {
    spp_pole(omega_from_wavelength_nm(lambda_nm), c(1.0), silver_eps(lambda_nm)).unwrap()
}

/// Lossless `eps_m = -2` / vacuum mode at `lambda_nm`.
pub fn toy_mode(lambda_nm: f64) -> SppMode {
    spp_pole(omega_from_wavelength_nm(lambda_nm), c(1.0), c(-2.0)).unwrap()
}

/// `max |a - b| / max |b|` over all entries.
pub fn rel_diff<const N: usize, const M: usize>(a: &[[Complex64; M]; N], b: &[[Complex64; M]; N]) -> f64 {
    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for i in 0..N {
        for j in 0..M {
            num = num.max((a[i][j] - b[i][j]).norm());
            den = den.max(b[i][j].norm());
        }
    }
    num / den
}
