//! Barnes zeta functions with unit weights: closed forms at `c = 0` for
//! dimensions 2 and 3, and the Hurwitz-combination continuation for `c > 0`.

use super::hurwitz::hurwitz_zeta;
use super::riemann::riemann_zeta;
use super::special::digamma;
use crate::bernoulli::{exp_series, series_mul, series_pow, t_over_one_minus_exp_neg};
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Generalized Bernoulli polynomial `B_n^{(d)}(c)` with unit weights,
/// extracted from its generating function in exact rational arithmetic.
pub fn gen_bernoulli(d: u32, n: u32, c: f64) -> Result<f64> {
    if d == 0 || d > 8 {
        return Err(Error::InvalidArgument(format!(
            "gen_bernoulli: d = {d} out of range"
        )));
    }
    if n > 30 {
        return Err(Error::InvalidArgument(format!(
            "gen_bernoulli: n = {n} exceeds the supported range (n <= 30)"
        )));
    }
    let c_exact = BigRational::from_float(c)
        .ok_or_else(|| Error::InvalidArgument("c must be finite".into()))?;
    Ok(gen_bernoulli_exact(d, n, &c_exact).to_f64().unwrap())
}

/// `B_n^{(d)}(c) = (-1)^n n! [t^n] e^{-ct} (t/(1-e^{-t}))^d`.
pub(crate) fn gen_bernoulli_exact(d: u32, n: u32, c: &BigRational) -> BigRational {
    let order = n as usize;
    let base = series_pow(&t_over_one_minus_exp_neg(order), d, order);
    let exp_part = exp_series(&(-c.clone()), order);
    let product = series_mul(&exp_part, &base, order);
    let mut fact = BigRational::from_integer(1.into());
    for k in 2..=n as u64 {
        fact *= BigRational::from_integer(k.into());
    }
    let sign = if n.is_multiple_of(2) { fact } else { -fact };
    sign * &product[order]
}

/// Barnes zeta `zeta_B^{(d)}(s, c)` with unit weights.
///
/// `c = 0` uses the closed forms for d = 2, 3; `c > 0` uses the
/// Hurwitz-combination continuation (d <= 5).
pub fn barnes_zeta(d: u32, s: f64, c: f64) -> Result<f64> {
    if c < 0.0 {
        return Err(Error::Domain("barnes_zeta requires c >= 0".into()));
    }
    if c == 0.0 {
        return match d {
            2 => {
                check_pole(s, 2, "barnes_zeta")?;
                Ok(riemann_zeta(s - 1.0)? + riemann_zeta(s)?)
            }
            3 => {
                check_pole(s, 3, "barnes_zeta")?;
                Ok(0.5
                    * (riemann_zeta(s - 2.0)?
                        + 3.0 * riemann_zeta(s - 1.0)?
                        + 2.0 * riemann_zeta(s)?))
            }
            _ => Err(Error::InvalidArgument(format!(
                "barnes_zeta with c = 0 supports d in {{2, 3}}, got {d}"
            ))),
        };
    }
    if d == 0 || d > 5 {
        return Err(Error::InvalidArgument(format!(
            "barnes_zeta with c > 0 supports 1 <= d <= 5, got {d}"
        )));
    }
    check_pole(s, d, "barnes_zeta")?;
    let mut total = 0.0;
    for k in 1..=d {
        total += hurwitz_coefficient(d, k, c)? * hurwitz_zeta(s + 1.0 - k as f64, c)?;
    }
    Ok(total)
}

/// `(-1)^{k+d} / ((k-1)! (d-k)!) * B_{d-k}^{(d)}(c)`
fn hurwitz_coefficient(d: u32, k: u32, c: f64) -> Result<f64> {
    let sign = if (k + d).is_multiple_of(2) { 1.0 } else { -1.0 };
    let denom = factorial(k - 1) * factorial(d - k);
    Ok(sign / denom * gen_bernoulli(d, d - k, c)?)
}

fn factorial(n: u32) -> f64 {
    (1..=n as u64).map(|v| v as f64).product()
}

fn check_pole(s: f64, d: u32, function: &'static str) -> Result<()> {
    for p in 1..=d {
        if (s - p as f64).abs() < 1e-12 {
            return Err(Error::Pole { function, s });
        }
    }
    Ok(())
}

/// Finite part of `zeta_B^{(s)}(t, c)` (dimension equal to `s`) at its
/// leading pole `t = s`. The residue there is `1/(s-1)!`; the finite part
/// combines the regular Hurwitz terms with `-digamma(c)/(s-1)!`.
pub fn barnes_fp_at_own_pole(s: u32, c: f64) -> Result<f64> {
    if !(2..=5).contains(&s) {
        return Err(Error::InvalidArgument(format!(
            "barnes_fp_at_own_pole supports 2 <= s <= 5, got {s}"
        )));
    }
    if !(c > 0.0) {
        return Err(Error::Domain("barnes_fp_at_own_pole requires c > 0".into()));
    }
    let d = s;
    let mut total = -digamma(c) / factorial(s - 1);
    for k in 1..d {
        total += hurwitz_coefficient(d, k, c)? * hurwitz_zeta(s as f64 + 1.0 - k as f64, c)?;
    }
    Ok(total)
}
