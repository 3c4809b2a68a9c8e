//! Square roots with explicit branch selection.
//!
//! The vertical wavenumbers of the two half-spaces are
//! `k_d = +sqrt(eps_d k0^2 - k^2)` and `k_m = -sqrt(eps_m k0^2 - k^2)`, where
//! `sqrt` is the root with non-negative imaginary part. Exactly on the cut
//! (`Im = 0`) the root with non-negative real part is taken, so lossless
//! media resolve to the propagating root.

use num_complex::Complex64;

use crate::error::NumericsError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BranchRule {
    /// `Im z >= 0`, ties resolved to `Re z >= 0`.
    ImNonNegative,
    /// The negation of [`BranchRule::ImNonNegative`].
    PrincipalNegated,
}

pub fn branched_sqrt(w: Complex64, rule: BranchRule) -> Result<Complex64, NumericsError> {
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(NumericsError::NonFinite(w));
    }
    let root = sqrt_im_nonneg(w);
    Ok(match rule {
        BranchRule::ImNonNegative => root,
        BranchRule::PrincipalNegated => -root,
    })
}

#[inline]
pub(crate) fn sqrt_im_nonneg(w: Complex64) -> Complex64 {
    let s = w.sqrt();
    if s.im < 0.0 || (s.im == 0.0 && s.re < 0.0) {
        -s
    } else {
        // Normalise -0.0 so the tie rule is visible to callers.
        Complex64::new(s.re, s.im + 0.0)
    }
}
