//! Special functions, branch-aware square roots and adaptive quadrature.

pub mod bessel;
pub mod branch;
pub mod quadrature;

pub use bessel::{bessel_j, bessel_j012, bessel_j1_over_z, bessel_j_complex};
pub use branch::{branched_sqrt, BranchRule};
pub use quadrature::{adaptive_integrate, QuadResult, QuadValue, QuadratureSpec, Upper};
