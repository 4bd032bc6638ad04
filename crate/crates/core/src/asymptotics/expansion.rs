//! Real-exponent power expansions in `1/n`, used to substitute the saddle
//! series into the theorem formulas symbolically.
//!
//! The printed closed forms of the moment corollaries keep exactly the
//! terms of non-negative `n`-power generated by that substitution; doing the
//! substitution here, rather than evaluating the theorem at a floating
//! `alpha`, is what lets the general path and the printed forms agree to
//! full precision.

use crate::saddle::AlphaExpansion;

const EXPONENT_TOL: f64 = 1e-9;

/// `sum c_i n^{q_i}` with strictly decreasing real exponents.
#[derive(Debug, Clone)]
pub struct PowerSeriesInN {
    /// `(exponent, coefficient)` sorted by decreasing exponent.
    terms: Vec<(f64, f64)>,
}

impl PowerSeriesInN {
    #[cfg(test)]
    pub fn terms(&self) -> &[(f64, f64)] {
        &self.terms
    }

    pub fn eval(&self, n: f64) -> f64 {
        self.terms.iter().map(|&(q, c)| c * n.powf(q)).sum()
    }

    fn from_unsorted(mut raw: Vec<(f64, f64)>) -> Self {
        raw.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        let mut terms: Vec<(f64, f64)> = Vec::with_capacity(raw.len());
        for (q, c) in raw {
            if let Some(last) = terms.last_mut() {
                if (last.0 - q).abs() < EXPONENT_TOL {
                    last.1 += c;
                    continue;
                }
            }
            terms.push((q, c));
        }
        terms.retain(|&(_, c)| c != 0.0);
        PowerSeriesInN { terms }
    }
}

/// Expand `alpha^p` (real `p`, typically `-mu`) as a series in `n`, keeping
/// terms with `n`-exponent `>= floor_exp`.
///
/// With `alpha = c0 n^{-e0} (1 + delta)`, the binomial series of
/// `(1 + delta)^p` is accumulated term by term; `delta` has strictly
/// negative exponents so the expansion terminates against the floor.
pub fn alpha_power(alpha: &AlphaExpansion, p: f64, floor_exp: f64) -> PowerSeriesInN {
    let (c0, e0) = alpha.leading(); // alpha ~ c0 n^{e0}, e0 < 0
    let lead_exp = p * e0;
    // delta terms, as (exponent, coefficient) with exponent < 0
    let delta: Vec<(f64, f64)> = alpha.terms[1..]
        .iter()
        .map(|&(c, e)| (e - e0, c / c0))
        .collect();
    let mut out: Vec<(f64, f64)> = vec![(lead_exp, c0.powf(p))];
    if !delta.is_empty() {
        // powers of delta, truncated below floor_exp - lead_exp
        let rel_floor = floor_exp - lead_exp - EXPONENT_TOL;
        let mut delta_pow: Vec<(f64, f64)> = vec![(0.0, 1.0)];
        let mut binom = 1.0;
        for j in 1..=64 {
            binom *= (p - (j - 1) as f64) / j as f64;
            delta_pow = multiply(&delta_pow, &delta, rel_floor);
            if delta_pow.is_empty() {
                break;
            }
            for &(q, c) in &delta_pow {
                out.push((lead_exp + q, binom * c0.powf(p) * c));
            }
        }
    }
    let mut series = PowerSeriesInN::from_unsorted(out);
    series.terms.retain(|&(q, _)| q >= floor_exp - EXPONENT_TOL);
    series
}

fn multiply(a: &[(f64, f64)], b: &[(f64, f64)], floor: f64) -> Vec<(f64, f64)> {
    let mut raw = Vec::new();
    for &(qa, ca) in a {
        for &(qb, cb) in b {
            let q = qa + qb;
            if q >= floor {
                raw.push((q, ca * cb));
            }
        }
    }
    PowerSeriesInN::from_unsorted(raw).terms
}
