//! Complex zeta and log-gamma evaluation on the critical strip, and the
//! zeta-ratio envelope machinery.
//!
//! The two halves are tied together by the functional equation: the modulus
//! ratio |zeta(1/2-eps+i tau) / zeta(1/2+eps+i tau)| equals
//! pi^{-eps} |Gamma(1/4+eps/2+i tau/2) / Gamma(1/4-eps/2+i tau/2)| exactly,
//! which doubles as the cross-check between the two implementations and as
//! the fallback when the denominator sits on top of a zero.

mod gamma;
mod zeta;

use num_complex::Complex64;
use thiserror::Error;

pub use gamma::log_gamma;

/// Supported evaluation strip for zeta.
pub const SIGMA_MIN: f64 = -1.0;
pub const SIGMA_MAX: f64 = 2.0;
/// Supported ordinate ceiling; desk-scale spectral integrals truncate well
/// below this.
pub const TAU_CEILING: f64 = 1.0e5;
/// Finest honored relative-error target.
pub const PRECISION_FLOOR: f64 = 1.0e-14;
/// Default relative-error target.
pub const DEFAULT_PRECISION: f64 = 1.0e-12;
/// Denominator modulus below which the ratio switches to the
/// functional-equation form.
pub const RATIO_FALLBACK_THRESHOLD: f64 = 1.0e-8;

#[derive(Debug, Error, PartialEq)]
pub enum SpecialError {
    #[error("sigma = {sigma} outside the supported strip [{SIGMA_MIN}, {SIGMA_MAX}]")]
    OutsideStrip { sigma: f64 },
    #[error("|tau| = {tau} above the supported ceiling {TAU_CEILING}")]
    UnsupportedRange { tau: f64 },
    #[error("zeta has a pole at s = 1")]
    PoleAtOne,
    #[error("precision target {precision} finer than the floor {PRECISION_FLOOR}")]
    InvalidPrecision { precision: f64 },
    #[error("log-gamma pole at nonpositive integer {re}")]
    GammaPole { re: f64 },
    #[error("{0}")]
    InvalidArgument(String),
}

/// A point s = sigma + i tau on the supported evaluation strip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripPoint {
    sigma: f64,
    tau: f64,
}

impl StripPoint {
    pub fn new(sigma: f64, tau: f64) -> Result<Self, SpecialError> {
        if !(SIGMA_MIN..=SIGMA_MAX).contains(&sigma) || !sigma.is_finite() {
            return Err(SpecialError::OutsideStrip { sigma });
        }
        if !tau.is_finite() {
            return Err(SpecialError::InvalidArgument("tau must be finite".into()));
        }
        Ok(Self { sigma, tau })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.sigma, self.tau)
    }
}

/// zeta(s) with an estimated relative error at most `precision`.
pub fn zeta(point: StripPoint, precision: f64) -> Result<Complex64, SpecialError> {
    zeta_at(point.to_complex(), precision)
}

/// Internal entry taking a raw complex argument; validates the same domain.
///
/// Negative ordinates are evaluated through conjugation, which makes the
/// symmetry zeta(conj s) = conj zeta(s) hold bit for bit.
pub(crate) fn zeta_at(s: Complex64, precision: f64) -> Result<Complex64, SpecialError> {
    if !(SIGMA_MIN..=SIGMA_MAX).contains(&s.re) || !s.re.is_finite() {
        return Err(SpecialError::OutsideStrip { sigma: s.re });
    }
    if s.im.abs() > TAU_CEILING {
        return Err(SpecialError::UnsupportedRange { tau: s.im.abs() });
    }
    if precision < PRECISION_FLOOR || !precision.is_finite() {
        return Err(SpecialError::InvalidPrecision { precision });
    }
    if (s - Complex64::new(1.0, 0.0)).norm() < 1e-12 {
        return Err(SpecialError::PoleAtOne);
    }
    if s.im < 0.0 {
        Ok(zeta::zeta_euler_maclaurin(s.conj(), precision).conj())
    } else {
        Ok(zeta::zeta_euler_maclaurin(s, precision))
    }
}

/// |zeta(1/2-eps+i tau)| / |zeta(1/2+eps+i tau)|.
///
/// Falls back to the functional-equation form when the denominator modulus
/// drops below [`RATIO_FALLBACK_THRESHOLD`]; by the functional equation the
/// two forms are the same quantity.
pub fn zeta_ratio(epsilon: f64, tau: f64) -> Result<f64, SpecialError> {
    check_ratio_epsilon(epsilon)?;
    let num = zeta_at(Complex64::new(0.5 - epsilon, tau), DEFAULT_PRECISION)?.norm();
    let den = zeta_at(Complex64::new(0.5 + epsilon, tau), DEFAULT_PRECISION)?.norm();
    if den < RATIO_FALLBACK_THRESHOLD {
        return zeta_ratio_functional(epsilon, tau);
    }
    Ok(num / den)
}

/// The functional-equation form pi^{-eps} |Gamma(1/4+eps/2+i tau/2)| /
/// |Gamma(1/4-eps/2+i tau/2)| of the same ratio.
pub fn zeta_ratio_functional(epsilon: f64, tau: f64) -> Result<f64, SpecialError> {
    check_ratio_epsilon(epsilon)?;
    let upper = log_gamma(Complex64::new(0.25 + 0.5 * epsilon, 0.5 * tau))?;
    let lower = log_gamma(Complex64::new(0.25 - 0.5 * epsilon, 0.5 * tau))?;
    Ok((upper.re - lower.re - epsilon * std::f64::consts::PI.ln()).exp())
}

fn check_ratio_epsilon(epsilon: f64) -> Result<(), SpecialError> {
    if !(0.0..0.5).contains(&epsilon) {
        return Err(SpecialError::InvalidArgument(format!(
            "epsilon = {epsilon} outside [0, 1/2)"
        )));
    }
    Ok(())
}

/// Grid scan of the ratio with the empirical envelope constant.
#[derive(Debug, Clone)]
pub struct RatioScan {
    pub epsilon: f64,
    pub tau_grid: Vec<f64>,
    pub ratios: Vec<f64>,
    /// max over the grid of ratio / (1+|tau|)^epsilon.
    pub fitted_c: f64,
}

pub fn ratio_scan(epsilon: f64, tau_max: f64, step: f64) -> Result<RatioScan, SpecialError> {
    if epsilon <= 0.0 || epsilon >= 0.5 {
        return Err(SpecialError::InvalidArgument(format!(
            "epsilon = {epsilon} outside (0, 1/2)"
        )));
    }
    if step <= 0.0 || tau_max < 0.0 || tau_max > TAU_CEILING {
        return Err(SpecialError::InvalidArgument(
            "need step > 0 and 0 <= tau_max <= ceiling".into(),
        ));
    }
    let count = (tau_max / step).floor() as usize + 1;
    let mut tau_grid = Vec::with_capacity(count);
    let mut ratios = Vec::with_capacity(count);
    let mut fitted_c = 0.0f64;
    for i in 0..count {
        let tau = i as f64 * step;
        let ratio = zeta_ratio(epsilon, tau)?;
        fitted_c = fitted_c.max(ratio / (1.0 + tau.abs()).powf(epsilon));
        tau_grid.push(tau);
        ratios.push(ratio);
    }
    Ok(RatioScan {
        epsilon,
        tau_grid,
        ratios,
        fitted_c,
    })
}
