//! Riemann zeta on the real axis, plus the two derivative values used by
//! the Barnes specializations.

use super::hurwitz::euler_maclaurin;
use super::special::{gamma, richardson_derivative};
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// `zeta_R(s)` for real `s != 1`; relative error <= 1e-12.
///
/// Euler-Maclaurin for `s >= 0`, the functional equation for `s < 0`.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    if (s - 1.0).abs() < 1e-13 {
        return Err(Error::Pole {
            function: "riemann_zeta",
            s,
        });
    }
    if s < 0.0 {
        // trivial zeros, handled exactly
        if s == s.round() && (s.round() as i64) % 2 == 0 {
            return Ok(0.0);
        }
        let reflected = euler_maclaurin(1.0 - s, 1.0);
        return Ok(2f64.powf(s) * PI.powf(s - 1.0) * sin_pi_half(s) * gamma(1.0 - s) * reflected);
    }
    Ok(euler_maclaurin(s, 1.0))
}

/// `sin(pi s / 2)` with exact values at integers.
fn sin_pi_half(s: f64) -> f64 {
    let r = s.round();
    if (s - r).abs() < 1e-300 {
        return match (r as i64).rem_euclid(4) {
            0 => 0.0,
            1 => 1.0,
            2 => 0.0,
            _ => -1.0,
        };
    }
    (PI * s / 2.0).sin()
}

/// `zeta_R'(s)` at the two points needed downstream.
///
/// At -1 the value comes from a step-extrapolated central difference; at -2
/// the classical identity `zeta'(-2) = -zeta(3)/(4 pi^2)` is used.
pub fn riemann_zeta_prime(s: f64) -> Result<f64> {
    if s == -1.0 {
        Ok(riemann_zeta_prime_numeric(-1.0))
    } else if s == -2.0 {
        Ok(-riemann_zeta(3.0)? / (4.0 * PI * PI))
    } else {
        Err(Error::InvalidArgument(format!(
            "riemann_zeta_prime supports s in {{-1, -2}}, got {s}"
        )))
    }
}

/// Richardson-extrapolated finite difference of `zeta_R` away from the pole.
pub fn riemann_zeta_prime_numeric(s: f64) -> f64 {
    richardson_derivative(|x| riemann_zeta(x).unwrap(), s, 0.2, 5)
}
