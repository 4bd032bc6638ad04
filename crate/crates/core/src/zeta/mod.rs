//! Zeta-function kernels on the real axis: values, residues, finite parts
//! at poles, and derivatives at zero, for every family the theorems consume.

pub mod barnes;
pub mod epstein;
pub mod hurwitz;
pub mod riemann;
pub mod special;

pub use barnes::{barnes_fp_at_own_pole, barnes_zeta, gen_bernoulli};
pub use epstein::{epstein_zeta, epstein_zeta_continuation, epstein_zeta_direct};
pub use hurwitz::{hurwitz_fp_at_one, hurwitz_zeta};
pub use riemann::{riemann_zeta, riemann_zeta_prime, riemann_zeta_prime_numeric};

use crate::error::{Error, Result};
use crate::sequences::{default_expansion, SequenceFamily};
use once_cell::sync::Lazy;
use special::{gamma, richardson_symmetric_limit};
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.5772156649015329;

/// Pole/coefficient data extracted from a family's expansion.
#[derive(Debug, Clone)]
pub struct ExpansionCoefficients {
    /// `(mu_i, A_{-mu_i})` in decreasing `mu` order.
    pub poles: Vec<(f64, f64)>,
    pub a0: f64,
}

pub(crate) fn spectral_expansion_coefficients(
    family: &SequenceFamily,
) -> Result<ExpansionCoefficients> {
    let exp = default_expansion(family)?;
    Ok(ExpansionCoefficients {
        poles: exp.poles(),
        a0: exp.a0(),
    })
}

/// Per-family cache of everything the moment theorems need.
#[derive(Debug, Clone)]
pub struct SpectralData {
    pub family: SequenceFamily,
    /// `(mu_i, residue)` in decreasing `mu` order; residue = A_{-mu}/Gamma(mu).
    pub poles: Vec<(f64, f64)>,
    /// Expansion coefficients `A_{-mu_i}` aligned with `poles`.
    pub pole_coefficients: Vec<f64>,
    pub a0: f64,
    /// `zeta_Lambda(s)` for integer `s` in `1..=k_max`; the finite part is
    /// stored when `s` coincides with a pole.
    pub zeta_at: BTreeMap<u32, f64>,
    /// Finite part at the leading pole `mu_0`, when computable.
    pub fp_at_pole: Option<f64>,
    pub zeta_prime_0: f64,
}

impl SpectralData {
    pub fn mu0(&self) -> f64 {
        self.poles[0].0
    }
}

/// `zeta_Lambda(s)` via the family's closed form or continuation.
pub fn zeta_lambda(family: &SequenceFamily, s: f64) -> Result<f64> {
    match family {
        SequenceFamily::Naturals => riemann_zeta(s),
        SequenceFamily::Barnes(d) => barnes_zeta(*d, s, 0.0),
        SequenceFamily::Epstein(d) => epstein_zeta(*d, s),
        _ => Err(Error::UnsupportedFamily(format!(
            "{family} has no zeta continuation"
        ))),
    }
}

/// Finite part `lim_{s -> mu} (zeta_Lambda(s) - res/(s - mu))` at any point;
/// used both for pole values in `zeta_at` and for `fp_at_pole`.
pub fn finite_part_at(family: &SequenceFamily, mu: f64, residue: f64) -> Result<f64> {
    family.validate()?;
    let f = |s: f64| zeta_lambda(family, s).unwrap() - residue / (s - mu);
    Ok(richardson_symmetric_limit(f, mu, 0.0625, 4))
}

fn cache_lookup(key: (u8, u8), compute: impl FnOnce() -> Result<f64>) -> Result<f64> {
    static CACHE: Lazy<Mutex<HashMap<(u8, u8), f64>>> = Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(&v) = CACHE.lock().unwrap().get(&key) {
        return Ok(v);
    }
    let v = compute()?;
    CACHE.lock().unwrap().insert(key, v);
    Ok(v)
}

/// Finite part at the family's leading pole.
///
/// Closed forms where the constituents are classical; a cached numeric limit
/// for the Epstein families (the value is derived here, not unknown paper
/// input, and is reported with that caveat by the CLI).
pub fn finite_part_at_pole(family: &SequenceFamily) -> Result<f64> {
    match family {
        SequenceFamily::Naturals => Ok(EULER_GAMMA),
        SequenceFamily::Barnes(2) => Ok(EULER_GAMMA + riemann_zeta(2.0)?),
        SequenceFamily::Barnes(3) => {
            Ok(0.5 * EULER_GAMMA + 1.5 * riemann_zeta(2.0)? + riemann_zeta(3.0)?)
        }
        SequenceFamily::Epstein(d) if *d == 2 || *d == 3 => {
            let d = *d;
            cache_lookup((1, d as u8), || {
                let coeffs = spectral_expansion_coefficients(&SequenceFamily::Epstein(d))?;
                let (mu0, a) = coeffs.poles[0];
                finite_part_at(&SequenceFamily::Epstein(d), mu0, a / gamma(mu0))
            })
        }
        _ => Err(Error::UnsupportedFamily(format!(
            "{family} has no finite-part data"
        ))),
    }
}

/// `zeta_Lambda'(0)` per family.
pub fn zeta_prime_zero(family: &SequenceFamily) -> Result<f64> {
    let half_log_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    match family {
        SequenceFamily::Naturals => Ok(-half_log_2pi),
        SequenceFamily::Barnes(2) => Ok(-half_log_2pi + riemann_zeta_prime(-1.0)?),
        SequenceFamily::Barnes(3) => {
            Ok(-half_log_2pi + 1.5 * riemann_zeta_prime(-1.0)? + 0.5 * riemann_zeta_prime(-2.0)?)
        }
        SequenceFamily::Epstein(d) => {
            let d = *d;
            cache_lookup((2, d as u8), || {
                Ok(special::richardson_derivative(
                    |s| epstein_zeta_continuation(d, s).unwrap(),
                    0.0,
                    0.0625,
                    4,
                ))
            })
        }
        // One-singularity families carry no derivative information; the
        // estimates they feed treat the factor e^{zeta'(0)} as 1.
        SequenceFamily::OneSingularity { .. } => Ok(0.0),
        _ => Err(Error::UnsupportedFamily(format!(
            "{family} has no zeta derivative data"
        ))),
    }
}

/// Assemble the spectral cache for a family, with `zeta_at` filled for
/// `s = 1..=k_max`.
pub fn spectral_data(family: &SequenceFamily, k_max: u32) -> Result<SpectralData> {
    family.validate()?;
    if matches!(family, SequenceFamily::Custom(_)) {
        return Err(Error::UnsupportedFamily(
            "custom sequences have exact tables only; no spectral data".into(),
        ));
    }
    let coeffs = spectral_expansion_coefficients(family)?;
    let poles: Vec<(f64, f64)> = coeffs
        .poles
        .iter()
        .map(|&(mu, a)| (mu, a / gamma(mu)))
        .collect();
    let pole_coefficients: Vec<f64> = coeffs.poles.iter().map(|&(_, a)| a).collect();

    let mut zeta_at = BTreeMap::new();
    if !matches!(family, SequenceFamily::OneSingularity { .. }) {
        for s in 1..=k_max {
            let value = match zeta_lambda(family, s as f64) {
                Ok(v) => v,
                Err(Error::Pole { .. }) => {
                    let residue = poles
                        .iter()
                        .find(|(mu, _)| (mu - s as f64).abs() < 1e-9)
                        .map(|&(_, r)| r)
                        .unwrap_or(0.0);
                    finite_part_at(family, s as f64, residue)?
                }
                Err(e) => return Err(e),
            };
            zeta_at.insert(s, value);
        }
    }

    let fp_at_pole = match family {
        SequenceFamily::OneSingularity { .. } => None,
        _ => Some(finite_part_at_pole(family)?),
    };

    Ok(SpectralData {
        family: family.clone(),
        poles,
        pole_coefficients,
        a0: coeffs.a0,
        zeta_at,
        fp_at_pole,
        zeta_prime_0: zeta_prime_zero(family)?,
    })
}
