//! Green's tensor of a dielectric/metal interface and its surface-plasmon
//! pole contribution.
//!
//! * [`numerics`]: Bessel functions J0–J2, branch-controlled square roots,
//!   adaptive Gauss–Kronrod quadrature.
//! * [`material`]: Drude permittivity, vertical wavenumbers, the SPP pole.
//! * [`layered_green`]: exact reduced Green's matrix in all region pairs,
//!   `d = s^-1 g s`, free-space `G0`, and the Sommerfeld-integral oracle.
//! * [`spp_tensor`]: closed-form pole (surface-plasmon) tensor.
//! * [`emitters`]: dipole-antenna fields, decay rate, Rabi splitting, `g2`.
//! * [`par`]: order-preserving parallel map (rayon behind the `parallel`
//!   feature).
//!
//! Units are SI throughout (rad/s, m); conversions from nm and eV live in
//! [`constants`].

use num_complex::Complex64;

pub mod constants;
pub mod emitters;
pub mod error;
pub mod layered_green;
pub mod material;
pub mod numerics;
pub mod par;
pub mod spp_tensor;

/// Dense complex 3×3 tensor, `t[row][column]`.
pub type Tensor3 = [[Complex64; 3]; 3];

pub use error::{EmitterError, GreenError, MaterialError, NumericsError, SppError};
