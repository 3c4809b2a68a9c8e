use num_complex::Complex64;
use thiserror::Error;

use crate::emitters::RabiRegime;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("Bessel order {0} is not supported (orders 0, 1 and 2 only)")]
    UnsupportedOrder(u32),
    #[error("argument {0} must be finite and non-negative")]
    InvalidArgument(f64),
    #[error("non-finite input {0}")]
    NonFinite(Complex64),
    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(&'static str),
    #[error(
        "quadrature did not converge after {subdivisions} subdivisions \
         (estimate {estimate}, error bound {abs_error:e})"
    )]
    NonConvergence { estimate: Complex64, abs_error: f64, subdivisions: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MaterialError {
    #[error("angular frequency must be positive, got {0}")]
    NonPositiveFrequency(f64),
    #[error("invalid Drude parameters: {0}")]
    InvalidDrude(&'static str),
    #[error("dielectric permittivity must be real and >= 1, got {0}")]
    InvalidDielectric(f64),
    #[error("no bound SPP mode: eps_d = {eps_d}, eps_m = {eps_m} (need Re eps_m < 0 and Re(eps_d + eps_m) < 0)")]
    NoBoundMode { eps_d: Complex64, eps_m: Complex64 },
    #[error("SPP pole residual {residual:e} exceeds tolerance")]
    PoleResidual { residual: f64 },
    #[error("Newton polish of the SPP pole failed to converge")]
    PolishFailed,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GreenError {
    #[error("k_par = {k_par:e} sits on the SPP pole (distance {distance:e} rad/m)")]
    PoleProximity { k_par: f64, distance: f64 },
    #[error("in-plane wavenumber must be finite and non-negative, got {0}")]
    InvalidWavenumber(f64),
    #[error("source and observation points coincide")]
    CoincidentPoints,
    #[error("free-space wavenumber must be positive, got {0}")]
    InvalidFreeSpaceWavenumber(f64),
    #[error("pole-only evaluation needs both points strictly inside the dielectric (z > 0)")]
    NotInDielectric,
    #[error("the integrand has no exponential decay for these heights (both points on the interface plane)")]
    NoDecay,
    #[error("no bound SPP pole for this interface")]
    NoPole,
    #[error(
        "Sommerfeld quadrature did not converge (estimate norm {estimate_norm:e}, \
         error bound {abs_error:e}, {subdivisions} subdivisions)"
    )]
    Quadrature { estimate_norm: f64, abs_error: f64, subdivisions: usize },
    #[error(transparent)]
    Material(#[from] MaterialError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SppError {
    #[error("eps_d + eps_m = 0: planar plasmon resonance, closed forms diverge")]
    Resonance,
    #[error("invalid closed-form inputs: {0}")]
    InvalidInputs(&'static str),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EmitterError {
    #[error("invalid source: {0}")]
    InvalidSource(&'static str),
    #[error("observation point coincides with the source")]
    AtSource,
    #[error("point must lie in the dielectric half-space (z >= 0), got z = {0:e}")]
    NotInDielectric(f64),
    #[error("negative decay rate {value:e}: branch or sign inconsistency")]
    NegativeRate { value: f64 },
    #[error("g2 is only defined for the underdamped branch, got {0:?}")]
    UnsupportedBranch(RabiRegime),
    #[error("Rabi frequency and decay rate must be finite and non-negative")]
    InvalidRates,
    #[error(transparent)]
    Spp(#[from] SppError),
    #[error(transparent)]
    Green(#[from] GreenError),
    #[error(transparent)]
    Material(#[from] MaterialError),
}
