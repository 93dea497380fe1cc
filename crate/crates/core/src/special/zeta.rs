//! Riemann zeta on the evaluation strip by Euler-Maclaurin summation.
//!
//! zeta(s) = sum_{k=1}^{N-1} k^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//!           + sum_{j=1}^{6} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{1-s-2j}
//!
//! with N chosen from |tau| and the requested precision. With N >= 2|tau| and
//! corrections through B_12 the truncation error stays near machine epsilon
//! throughout the supported strip, far below the 1e-12 default target.

use num_complex::Complex64;

/// B_2 .. B_12 divided by (2j)!.
const BERNOULLI_OVER_FACT: [f64; 6] = [
    1.0 / 12.0,                      // B2/2!
    -1.0 / 720.0,                    // B4/4!
    1.0 / 30_240.0,                  // B6/6!
    -1.0 / 1_209_600.0,              // B8/8!
    1.0 / 47_900_160.0,              // B10/10!
    -691.0 / 1_307_674_368_000.0,    // B12/12!
];

/// |B_14|/14!, used only to estimate the first omitted correction.
const B14_OVER_FACT: f64 = 7.0 / 6.0 / 87_178_291_200.0;

/// k^{-s} through explicit polar pieces; exact sign symmetry in tau is
/// inherited from the sin/cos parities.
#[inline]
fn pow_neg(k: f64, s: Complex64) -> Complex64 {
    let ln_k = k.ln();
    let modulus = (-s.re * ln_k).exp();
    let (sin, cos) = (-s.im * ln_k).sin_cos();
    Complex64::new(modulus * cos, modulus * sin)
}

/// Estimated modulus of the Euler-Maclaurin remainder after the B_12 term.
fn remainder_estimate(s: Complex64, n: f64) -> f64 {
    // |R| <= |s+13|/(sigma+13) * |B14/14!| * |s(s+1)...(s+12)| * N^{-sigma-13}
    let mut poch = 1.0f64;
    for i in 0..13 {
        poch *= (s + i as f64).norm();
    }
    let lead = (s + 13.0).norm() / (s.re + 13.0);
    lead * B14_OVER_FACT * poch * n.powf(-s.re - 13.0)
}

/// Term count: the design point is N ~ 2|tau|, backed off only when the
/// remainder estimate already clears the precision target at a smaller N.
fn term_count(s: Complex64, precision: f64) -> usize {
    let tau = s.im.abs();
    let full = (2.0 * tau).ceil().max(20.0);
    // Try a cheaper N first for loose targets; the estimate is conservative.
    for factor in [0.6, 1.0, 1.4] {
        let n = (factor * full).ceil().max(20.0);
        if remainder_estimate(s, n) < 0.1 * precision {
            return n as usize;
        }
    }
    (2.0 * full) as usize
}

/// Euler-Maclaurin evaluation; caller guarantees tau >= 0 and a point inside
/// the supported strip, away from s = 1.
pub(crate) fn zeta_euler_maclaurin(s: Complex64, precision: f64) -> Complex64 {
    debug_assert!(s.im >= 0.0);
    let n = term_count(s, precision);
    let nf = n as f64;

    // Main Dirichlet block with compensated (Neumaier) accumulation.
    let mut sum_re = 0.0f64;
    let mut sum_im = 0.0f64;
    let mut comp_re = 0.0f64;
    let mut comp_im = 0.0f64;
    for k in 1..n {
        let term = pow_neg(k as f64, s);
        let t = sum_re + term.re;
        comp_re += if sum_re.abs() >= term.re.abs() {
            (sum_re - t) + term.re
        } else {
            (term.re - t) + sum_re
        };
        sum_re = t;
        let t = sum_im + term.im;
        comp_im += if sum_im.abs() >= term.im.abs() {
            (sum_im - t) + term.im
        } else {
            (term.im - t) + sum_im
        };
        sum_im = t;
    }
    let mut total = Complex64::new(sum_re + comp_re, sum_im + comp_im);

    let n_pow = pow_neg(nf, s); // N^{-s}
    total += n_pow * nf / (s - 1.0); // N^{1-s}/(s-1)
    total += 0.5 * n_pow;

    // Bernoulli corrections; pochhammer extended two factors per step.
    let inv_n = 1.0 / nf;
    let mut poch = s;
    let mut n_shift = n_pow * inv_n; // N^{-s-1}
    for (j, coeff) in BERNOULLI_OVER_FACT.iter().enumerate() {
        total += *coeff * poch * n_shift;
        let base = 2.0 * j as f64;
        poch *= (s + (base + 1.0)) * (s + (base + 2.0));
        n_shift *= inv_n * inv_n;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remainder_estimate_is_tiny_at_design_point() {
        for tau in [0.0, 10.0, 1000.0, 100_000.0] {
            let s = Complex64::new(0.5, tau);
            let n = (2.0 * tau).max(20.0);
            assert!(remainder_estimate(s, n) < 1e-14, "tau = {tau}");
        }
    }

    #[test]
    fn zeta_two_matches_pi_squared_over_six() {
        let got = zeta_euler_maclaurin(Complex64::new(2.0, 0.0), 1e-14);
        let expect = std::f64::consts::PI.powi(2) / 6.0;
        assert!((got.re - expect).abs() < 1e-14);
        assert!(got.im.abs() < 1e-15);
    }
}
