//! Saddle-point machinery: the exact root of `n = sum g(lambda) lambda /
//! (e^{alpha lambda} - 1)` and the closed-form large-`n` expansions of
//! `alpha` for each family.

use crate::error::{Error, Result};
use crate::sequences::{default_expansion, enumerate, SequenceFamily, WeightedSequence};
use crate::zeta::riemann_zeta;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaSource {
    Numeric,
    Series,
}

impl AlphaSource {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "numeric" => Ok(AlphaSource::Numeric),
            "series" => Ok(AlphaSource::Series),
            other => Err(Error::InvalidArgument(format!(
                "unknown alpha source '{other}'"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaMethod {
    Numeric,
    Series,
}

#[derive(Debug, Clone, Copy)]
pub struct SaddleResult {
    pub n: f64,
    pub alpha: f64,
    /// `|sum - n| / n` for the numeric root; NaN when no concrete sequence
    /// was available to measure against (series evaluations).
    pub residual: f64,
    pub method: AlphaMethod,
    pub series_order: usize,
}

/// Terms `alpha ~ sum c_i n^{e_i}` (all `e_i < 0`) plus the order of the
/// first neglected term.
#[derive(Debug, Clone)]
pub struct AlphaExpansion {
    /// `(coefficient, exponent)` with exponents strictly decreasing.
    pub terms: Vec<(f64, f64)>,
    /// `p` such that the truncation error is `O(n^{-p})`.
    pub error_order: f64,
}

impl AlphaExpansion {
    pub fn eval(&self, n: f64) -> f64 {
        self.terms.iter().map(|&(c, e)| c * n.powf(e)).sum()
    }

    pub fn leading(&self) -> (f64, f64) {
        self.terms[0]
    }
}

/// The printed expansion of the saddle point for each closed-form family.
pub fn alpha_expansion(family: &SequenceFamily) -> Result<AlphaExpansion> {
    family.validate()?;
    let z = |s: f64| riemann_zeta(s).unwrap();
    let terms: (Vec<(f64, f64)>, f64) = match family {
        SequenceFamily::Naturals => (vec![(PI / 6f64.sqrt(), -0.5), (-0.25, -1.0)], 1.5),
        SequenceFamily::Barnes(2) => {
            let l = (2.0 * z(3.0)).powf(1.0 / 3.0);
            (
                vec![
                    (l, -1.0 / 3.0),
                    (z(2.0) / (3.0 * l), -2.0 / 3.0),
                    (-7.0 / 36.0, -1.0),
                ],
                4.0 / 3.0,
            )
        }
        SequenceFamily::Barnes(3) => {
            let z2 = z(2.0);
            let z3 = z(3.0);
            let z4 = z(4.0);
            (
                vec![
                    ((3.0 * z4).powf(0.25), -0.25),
                    (3f64.sqrt() * z3 / (4.0 * z4.sqrt()), -0.5),
                    (
                        (8.0 * z2 * z4 - 3.0 * z3 * z3) / (3f64.powf(0.25) * 32.0 * z4.powf(1.25)),
                        -0.75,
                    ),
                    (-5.0 / 32.0, -1.0),
                ],
                1.25,
            )
        }
        SequenceFamily::Epstein(2) => {
            let z2 = z(2.0);
            let z32 = z(1.5);
            (
                vec![
                    ((PI * z2 / 4.0).sqrt(), -0.5),
                    (
                        PI.powf(0.25) * z32 / (4.0 * 2f64.sqrt() * z2.powf(0.25)),
                        -0.75,
                    ),
                    (-3.0 / 8.0, -1.0),
                ],
                1.25,
            )
        }
        SequenceFamily::Epstein(3) => {
            let z2 = z(2.0);
            let z32 = z(1.5);
            let z52 = z(2.5);
            (
                vec![
                    ((3.0 * PI.powf(1.5) * z52 / 16.0).powf(0.4), -0.4),
                    (
                        3f64.powf(0.6) * z2 / 5.0 * (PI / (2.0 * z52)).powf(0.4),
                        -0.6,
                    ),
                    (
                        3f64.powf(0.8) * PI.powf(0.2) / (2f64.powf(0.2) * 100.0 * z52.powf(1.2))
                            * (5.0 * z32 * z52 - 2.0 * z2 * z2),
                        -0.8,
                    ),
                    (-7.0 / 20.0, -1.0),
                ],
                1.2,
            )
        }
        SequenceFamily::OneSingularity { mu, coefficients } => {
            let mu = *mu;
            let a = coefficients.poles()[0].1;
            let a0 = coefficients.a0();
            let lead = (riemann_zeta(mu + 1.0)? * mu * a).powf(1.0 / (mu + 1.0));
            (
                vec![(lead, -1.0 / (mu + 1.0)), (a0 / (mu + 1.0), -1.0)],
                1.0 + 1.0 / (mu + 1.0),
            )
        }
        SequenceFamily::Custom(_) => {
            return Err(Error::UnsupportedFamily(
                "custom sequences have no saddle expansion".into(),
            ))
        }
        // other dimensions are rejected by validate() above
        SequenceFamily::Barnes(_) | SequenceFamily::Epstein(_) => unreachable!(),
    };
    Ok(AlphaExpansion {
        terms: terms.0,
        error_order: terms.1,
    })
}

/// Evaluate the printed saddle expansion at `n`.
pub fn alpha_series(family: &SequenceFamily, n: f64) -> Result<SaddleResult> {
    let exp = alpha_expansion(family)?;
    Ok(SaddleResult {
        n,
        alpha: exp.eval(n),
        residual: f64::NAN,
        method: AlphaMethod::Series,
        series_order: exp.terms.len(),
    })
}

/// `sum g(lambda) lambda / (e^{alpha lambda} - 1)` over the truncation,
/// with compensated summation.
pub fn lambda_sum(seq: &WeightedSequence, alpha: f64) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &(l, g) in seq.entries() {
        let x = alpha * l as f64;
        let denom = -(-x).exp_m1(); // 1 - e^{-x}, accurate for small x
        let term = g as f64 * l as f64 * (-x).exp() / denom;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if x > 40.0 && term < sum * 1e-18 {
            break;
        }
    }
    sum
}

fn lambda_sum_derivative(seq: &WeightedSequence, alpha: f64) -> f64 {
    let mut sum = 0.0;
    for &(l, g) in seq.entries() {
        let lf = l as f64;
        let x = alpha * lf;
        let u = (-x).exp();
        let denom = -(-x).exp_m1();
        let term = g as f64 * lf * lf * u / (denom * denom);
        sum -= term;
        if x > 40.0 && term < sum.abs() * 1e-18 {
            break;
        }
    }
    sum
}

/// Geometric estimate of the truncated part of `lambda_sum` beyond the
/// cutoff.
///
/// Multiplicities fluctuate (Epstein counts in particular), so the decay
/// ratio is measured between two value windows rather than two entries.
pub fn lambda_sum_tail_estimate(seq: &WeightedSequence, alpha: f64) -> f64 {
    let entries = seq.entries();
    let cutoff = seq.cutoff();
    let term = |&(l, g): &(u64, u64)| -> f64 {
        let x = alpha * l as f64;
        g as f64 * l as f64 * (-x).exp() / -(-x).exp_m1()
    };
    let window = (cutoff / 8).max(1);
    if cutoff <= 2 * window {
        let worst = entries.iter().map(term).fold(0.0, f64::max);
        return worst * 2.0 / alpha.min(1.0);
    }
    let hi_start = cutoff - window;
    let lo_start = cutoff - 2 * window;
    let mut s_lo = 0.0;
    let mut s_hi = 0.0;
    for e in entries {
        if e.0 > hi_start {
            s_hi += term(e);
        } else if e.0 > lo_start {
            s_lo += term(e);
        }
    }
    if s_hi <= 0.0 {
        return 0.0;
    }
    let ratio = s_hi / s_lo;
    if !(ratio < 0.999) {
        return f64::INFINITY;
    }
    s_hi * ratio / (1.0 - ratio)
}

/// Unique positive root of `lambda_sum(seq, alpha) = n`, by bisection
/// followed by Newton. The left side is strictly decreasing in `alpha`.
pub fn solve_saddle(seq: &WeightedSequence, n: f64) -> Result<SaddleResult> {
    if !(n >= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "solve_saddle requires n >= 1, got {n}"
        )));
    }
    // bracket the root
    let mut lo = 1e-9;
    let mut hi = 1.0;
    while lambda_sum(seq, hi) > n {
        hi *= 2.0;
        if hi > 1e6 {
            return Err(Error::Solver(
                "failed to bracket the saddle point from above".into(),
            ));
        }
    }
    while lambda_sum(seq, lo) < n {
        lo /= 4.0;
        if lo < 1e-300 {
            return Err(Error::Solver(
                "failed to bracket the saddle point from below".into(),
            ));
        }
    }
    // bisect to ~1e-3 relative, then polish with Newton
    while (hi - lo) > 1e-3 * lo {
        let mid = 0.5 * (lo + hi);
        if lambda_sum(seq, mid) > n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut alpha = 0.5 * (lo + hi);
    let mut residual = f64::INFINITY;
    for _ in 0..60 {
        let f = lambda_sum(seq, alpha) - n;
        residual = f.abs() / n;
        if residual <= 5e-12 {
            break;
        }
        let fp = lambda_sum_derivative(seq, alpha);
        let step = f / fp;
        let mut next = alpha - step;
        if next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        if lambda_sum(seq, next) > n {
            lo = next;
        } else {
            hi = next;
        }
        alpha = next;
    }
    if residual > 1e-10 {
        return Err(Error::Solver(format!(
            "saddle iteration stalled at relative residual {residual:.3e}"
        )));
    }
    // the truncation must not contaminate the root; complete sequences have
    // no tail by construction
    if !seq.is_complete() {
        let tail = lambda_sum_tail_estimate(seq, alpha);
        if !(tail < 1e-12 * n) {
            return Err(Error::InsufficientCutoff {
                tail,
                budget: 1e-12 * n,
                suggested: (55.0 / alpha).ceil() as u64,
            });
        }
    }
    Ok(SaddleResult {
        n,
        alpha,
        residual,
        method: AlphaMethod::Numeric,
        series_order: 0,
    })
}

/// Truncated pole-sum approximation of `n(alpha)`:
/// `sum mu_i zeta_R(mu_i + 1) A_{-mu_i} alpha^{-(mu_i+1)} + A_0 / alpha`.
pub fn n_of_alpha(family: &SequenceFamily, alpha: f64) -> Result<f64> {
    if matches!(family, SequenceFamily::Custom(_)) {
        return Err(Error::UnsupportedFamily(
            "custom sequences have no pole-sum approximation".into(),
        ));
    }
    let expansion = default_expansion(family)?;
    let mut total = expansion.a0() / alpha;
    for (mu, a) in expansion.poles() {
        total += mu * riemann_zeta(mu + 1.0)? * a * alpha.powf(-(mu + 1.0));
    }
    Ok(total)
}

/// Cutoff heuristic: large enough that the tail of the saddle sum at the
/// expected root is far below the solver budget.
pub fn recommended_cutoff(family: &SequenceFamily, n: f64) -> Result<u64> {
    let lead = alpha_expansion(family)?;
    let alpha_guess = lead.eval(n).max(1e-12);
    Ok(((60.0 / alpha_guess).ceil() as u64).max(64))
}

/// Enumerate a family with a self-healing cutoff and solve for the saddle.
pub fn solve_for_family(
    family: &SequenceFamily,
    n: f64,
) -> Result<(WeightedSequence, SaddleResult)> {
    let mut cutoff = recommended_cutoff(family, n)?;
    for _ in 0..3 {
        let seq = enumerate(family, cutoff)?;
        match solve_saddle(&seq, n) {
            Ok(sp) => return Ok((seq, sp)),
            Err(Error::InsufficientCutoff { .. }) => cutoff *= 2,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Solver(format!(
        "cutoff did not stabilize for {family} at n = {n}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_element_sequence_has_closed_form() {
        // {1}: n = 1/(e^alpha - 1)  =>  alpha = ln(1 + 1/n)
        let seq = WeightedSequence::new(vec![(1, 1)], 1).unwrap();
        let sp = solve_saddle(&seq, 1.0).unwrap();
        assert!((sp.alpha - 2f64.ln()).abs() < 1e-10);
        let sp = solve_saddle(&seq, 10.0).unwrap();
        assert!((sp.alpha - 1.1f64.ln()).abs() < 1e-10);
    }

    #[test]
    fn naturals_root_matches_expansion_at_large_n() {
        let family = SequenceFamily::Naturals;
        let (_, sp) = solve_for_family(&family, 1000.0).unwrap();
        let series = alpha_series(&family, 1000.0).unwrap();
        // discrepancy is O(n^{-3/2}) ~ 3e-5 at n = 1000
        assert!((sp.alpha - series.alpha).abs() < 3e-4 * sp.alpha);
        assert!(sp.residual <= 1e-10);
    }

    #[test]
    fn residual_contract_across_families() {
        let families = [
            SequenceFamily::Naturals,
            SequenceFamily::Barnes(2),
            SequenceFamily::Barnes(3),
            SequenceFamily::Epstein(2),
            SequenceFamily::Epstein(3),
        ];
        for family in families {
            for n in [100.0, 10_000.0] {
                let (_, sp) = solve_for_family(&family, n).unwrap();
                assert!(
                    sp.residual <= 1e-10,
                    "{family} at n={n}: residual {:.3e}",
                    sp.residual
                );
            }
        }
    }

    #[test]
    fn insufficient_cutoff_is_reported() {
        let seq = crate::sequences::enumerate(&SequenceFamily::Naturals, 20).unwrap();
        // n = 10^4 forces alpha ~ 0.0128; a cutoff of 20 is far too small
        match solve_saddle(&seq, 10_000.0) {
            Err(Error::InsufficientCutoff { suggested, .. }) => {
                assert!(suggested > 20);
            }
            other => panic!("expected InsufficientCutoff, got {other:?}"),
        }
    }

    #[test]
    fn n_of_alpha_tracks_exact_sum_for_naturals() {
        let family = SequenceFamily::Naturals;
        let alpha = 0.01;
        let approx = n_of_alpha(&family, alpha).unwrap();
        let seq = crate::sequences::enumerate(&family, 10_000).unwrap();
        let exact = lambda_sum(&seq, alpha);
        // the dropped constant term is ~ zeta(-1) zeta(0) = 1/24
        assert!(
            (approx - exact).abs() < 0.1,
            "approx {approx} vs exact {exact}"
        );
    }

    #[test]
    fn n_of_alpha_unsupported_for_custom() {
        let table = [(1u64, 1u64)].into_iter().collect();
        assert!(matches!(
            n_of_alpha(&SequenceFamily::Custom(table), 0.1),
            Err(Error::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn epstein2_half_integer_pole_improves_n_of_alpha() {
        let family = SequenceFamily::Epstein(2);
        let alpha = 0.005;
        let seq = crate::sequences::enumerate(&family, 20_000).unwrap();
        let exact = lambda_sum(&seq, alpha);
        let full = n_of_alpha(&family, alpha).unwrap();
        // drop the mu = 1/2 pole term and watch the fit degrade
        let z32 = riemann_zeta(1.5).unwrap();
        let half_term = 0.5 * z32 * (PI.sqrt() / 2.0) * alpha.powf(-1.5);
        let without = full - half_term;
        assert!(
            (full - exact).abs() * 10.0 < (without - exact).abs(),
            "half-integer pole term should dominate the correction: \
             with {:.3e}, without {:.3e}",
            (full - exact).abs(),
            (without - exact).abs()
        );
    }

    #[test]
    fn series_values_match_printed_terms() {
        let n = 1e6;
        let nat = alpha_series(&SequenceFamily::Naturals, n).unwrap();
        let want = PI / (6.0 * n).sqrt() - 1.0 / (4.0 * n);
        assert!((nat.alpha - want).abs() < 1e-18);
        assert_eq!(nat.series_order, 2);

        let z2 = riemann_zeta(2.0).unwrap();
        let z3 = riemann_zeta(3.0).unwrap();
        let b2 = alpha_series(&SequenceFamily::Barnes(2), n).unwrap();
        let want = (2.0 * z3 / n).powf(1.0 / 3.0)
            + z2 / (3.0 * (2.0 * z3).powf(1.0 / 3.0) * n.powf(2.0 / 3.0))
            - 7.0 / (36.0 * n);
        assert!((b2.alpha - want).abs() < 1e-16);
    }

    #[test]
    fn one_singularity_expansion_follows_pattern() {
        let coefficients =
            crate::sequences::ThetaExpansion::new(vec![(-1.5, 2.0), (0.0, -0.5)]).unwrap();
        let family = SequenceFamily::OneSingularity {
            mu: 1.5,
            coefficients,
        };
        let exp = alpha_expansion(&family).unwrap();
        let lead = (riemann_zeta(2.5).unwrap() * 1.5 * 2.0).powf(1.0 / 2.5);
        assert!((exp.terms[0].0 - lead).abs() < 1e-15);
        assert!((exp.terms[0].1 - -0.4).abs() < 1e-15);
        assert!((exp.terms[1].0 - -0.2).abs() < 1e-15); // A0/(mu+1)
        assert_eq!(exp.terms[1].1, -1.0);
    }

    #[test]
    fn monotonicity_of_lambda_sum() {
        let seq = crate::sequences::enumerate(&SequenceFamily::Barnes(2), 2000).unwrap();
        let mut prev = f64::INFINITY;
        let mut alpha = 0.01;
        while alpha <= 1.0 {
            let v = lambda_sum(&seq, alpha);
            assert!(v < prev, "lambda_sum must decrease in alpha");
            prev = v;
            alpha *= 1.5;
        }
    }
}
