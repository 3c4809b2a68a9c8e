//! Green's tensor of the dielectric (z > 0) / metal (z < 0) interface.
//!
//! The tensor `D` solves
//!
//! ```text
//! [curl curl - k0^2 eps(X)] D(X, X') = 4 pi 1 delta(X - X')
//! ```
//!
//! and is represented through its in-plane Fourier transform
//!
//! ```text
//! D(X, X') = ∫ d^2k/(2pi)^2 exp(i k·(X_par - X'_par)) d(k | z, z'),
//! d = s^-1 g s,
//! ```
//!
//! where `s` rotates `k_par` onto the x-axis and the reduced matrix `g`
//! has only the five entries `g_xx, g_yy, g_zz, g_xz, g_zx`.
//!
//! Sign convention: the reduced rows are implemented exactly as tabulated in
//! the literature form used here, whose direct term is
//! `g_yy = -(2 pi i / k_d) exp(i k_d |z - z'|)`. The Weyl identity gives the
//! opposite sign for the physical (outgoing, `Im D > 0` at coincidence)
//! tensor, so every k-space integral in [`sommerfeld`] carries an explicit
//! overall minus sign and returns `D = 4 pi G` with the physical sign.

pub mod free_space;
pub mod reduced;
pub mod sommerfeld;

pub use free_space::free_space_g0;
pub use reduced::{
    assemble_d, assemble_d_direction, reduced_g, reduced_g_matrix, rotation_s, ContactTerm, GComponent,
    ReducedGreenMatrix, Rotation, RowReading, Term,
};
pub use sommerfeld::{sommerfeld_d, sommerfeld_tensor, AngularReduction, PoleHandling, SommerfeldOptions};

/// Half-space a point belongs to. `z = 0` counts as dielectric (limit
/// from above).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    Dielectric,
    Metal,
}

impl Region {
    pub fn of(z: f64) -> Self {
        if z >= 0.0 {
            Region::Dielectric
        } else {
            Region::Metal
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegionPair {
    pub observer: Region,
    pub source: Region,
}

impl RegionPair {
    pub fn new(z: f64, z_src: f64) -> Self {
        Self { observer: Region::of(z), source: Region::of(z_src) }
    }

    pub fn same_side(&self) -> bool {
        self.observer == self.source
    }
}

/// Cartesian axis index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X = 0,
    Y = 1,
    Z = 2,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }
}
