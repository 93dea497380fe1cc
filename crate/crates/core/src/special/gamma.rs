//! Principal-branch complex log-gamma.
//!
//! Stirling's asymptotic series once the argument is far enough right, with
//! the recurrence log Gamma(z) = log Gamma(z+1) - log z shifting small
//! arguments into the asymptotic regime. For Re(z) > 0 the shifted arguments
//! never approach the branch cut, so summing principal logarithms keeps the
//! principal branch.

use num_complex::Complex64;

use super::SpecialError;

/// B_{2k} / (2k (2k-1)) for k = 1..=11.
const STIRLING: [f64; 11] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1_260.0,
    -1.0 / 1_680.0,
    1.0 / 1_188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3_617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
    77_683.0 / 5_796.0,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// Real part threshold beyond which the Stirling series is applied directly.
const SHIFT_THRESHOLD: f64 = 16.0;

/// Principal branch of log Gamma(z).
///
/// Errors on the poles (nonpositive real integers). Guaranteed accurate for
/// Re(z) > 0, which covers every consumer in this crate; arguments left of
/// the imaginary axis are shifted through the same recurrence.
pub fn log_gamma(z: Complex64) -> Result<Complex64, SpecialError> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Err(SpecialError::GammaPole { re: z.re });
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_THRESHOLD {
        shift += w.ln();
        w += 1.0;
    }
    let ln_w = w.ln();
    let mut acc = (w - 0.5) * ln_w - w + HALF_LN_TWO_PI;
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut power = inv;
    for c in STIRLING {
        let term = c * power;
        acc += term;
        if term.norm_sqr() < 1e-60 * acc.norm_sqr() {
            break;
        }
        power *= inv2;
    }
    Ok(acc - shift)
}
