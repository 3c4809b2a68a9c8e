//! Classical dipole fields near the interface and quantum-emitter
//! observables.
//!
//! Convention (tag [`CONVENTION_TAG`]): SI units, `D = 4 pi G`. A dipole
//! antenna `j(t) = (q l Omega / 2) sin(Omega t) delta^3(r - r0) u` radiates
//! the phasor
//!
//! ```text
//! A(r) = i (mu0 q l Omega^2 / 2) G(r, r0; Omega) · u,     E(r, t) = Re[A e^{-i Omega t}]
//! ```
//!
//! which reproduces the tabulated surface-plasmon field expressions (their
//! `cos(Omega t)` form at real prefactors, with the height `h` identified
//! with the source height `z0`). The decay rate of a two-level emitter is
//!
//! ```text
//! Gamma = (2/hbar) w^2 (mu0 / 4 pi) Im[d · D(r0, r0) · d] = (2 mu0 w^2 / hbar) Im[d · G · d],
//! ```
//!
//! which gives the Wigner–Weisskopf rate when `G = G0`. All physical
//! comparisons use ratios (`|E|^2/|E0|^2`, `Gamma/Gamma0`, `g2`), which do not
//! depend on this choice.

pub mod classical;
pub mod quantum;

pub use classical::{
    current_density_fourier, free_space_field, free_space_field_phasor, relative_intensity, spp_field,
    spp_field_phasor, CurrentDensity, DipoleSource, FieldSample, Orientation, TimeSpec,
};
pub use quantum::{
    decay_rate, g2, g2_first_maximum, rabi_splitting, DecayMode, QuantumEmitter, RabiRegime, RabiSplitting,
};

/// Identifies the normalisation of raw (non-ratio) outputs.
pub const CONVENTION_TAG: &str = "si;D=4piG;E=Re[i*mu0*q*l*W^2/2*G.u*exp(-iWt)];Gamma=2*mu0*w^2/hbar*Im[d.G.d]";
