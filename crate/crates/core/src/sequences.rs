//! Weighted integer sequences, their partition function `Theta(t)`, and the
//! closed-form small-`t` expansion coefficients that drive every asymptotic
//! constant downstream.

use crate::bernoulli::{series_pow, t_over_one_minus_exp_neg};
use crate::combinatorics::barnes_degeneracy;
use crate::error::{Error, Result};
use num_traits::ToPrimitive;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::path::Path;

/// Exponent/coefficient pairs `(i_n, A_{i_n})` of the small-`t` expansion
/// `Theta(t) ~ sum A_{i_n} t^{i_n}`.
///
/// Exponents are strictly increasing and the first one is negative; the
/// negated negative exponents are the poles `mu_n` of the associated zeta
/// function.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaExpansion {
    terms: Vec<(f64, f64)>,
}

impl ThetaExpansion {
    pub fn new(terms: Vec<(f64, f64)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidArgument(
                "expansion needs at least one term".into(),
            ));
        }
        if terms[0].0 >= 0.0 {
            return Err(Error::InvalidArgument(
                "leading expansion exponent must be negative".into(),
            ));
        }
        for w in terms.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(Error::InvalidArgument(
                    "expansion exponents must be strictly increasing".into(),
                ));
            }
        }
        Ok(ThetaExpansion { terms })
    }

    pub fn terms(&self) -> &[(f64, f64)] {
        &self.terms
    }

    /// Poles `(mu, A_{-mu})` in decreasing `mu` order.
    pub fn poles(&self) -> Vec<(f64, f64)> {
        let mut p: Vec<(f64, f64)> = self
            .terms
            .iter()
            .filter(|(e, _)| *e < 0.0)
            .map(|&(e, a)| (-e, a))
            .collect();
        p.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        p
    }

    /// Coefficient `A_0` at exponent zero (0 when absent).
    pub fn a0(&self) -> f64 {
        self.terms
            .iter()
            .find(|(e, _)| e.abs() < 1e-12)
            .map(|&(_, a)| a)
            .unwrap_or(0.0)
    }

    /// Partial sum `sum A t^i` over the stored terms.
    pub fn eval(&self, t: f64) -> f64 {
        self.terms.iter().map(|&(e, a)| a * t.powf(e)).sum()
    }

    pub fn mu0(&self) -> f64 {
        -self.terms[0].0
    }
}

/// A family of weighted sequences.
#[derive(Debug, Clone, PartialEq)]
pub enum SequenceFamily {
    /// All natural numbers, multiplicity one.
    Naturals,
    /// `lambda = m1 + ... + md` over `N_0^d \ {0}`, `d` in {2, 3}.
    Barnes(u32),
    /// `lambda = m1^2 + ... + md^2` over `N_0^d \ {0}`, `d` in {2, 3}.
    Epstein(u32),
    /// Abstract family whose zeta function has a single pole at `mu`; only
    /// the expansion is known, so it supports series evaluation but no
    /// concrete enumeration.
    OneSingularity {
        mu: f64,
        coefficients: ThetaExpansion,
    },
    /// Explicit multiplicity table, exact computations only.
    Custom(BTreeMap<u64, u64>),
}

impl SequenceFamily {
    pub fn validate(&self) -> Result<()> {
        match self {
            SequenceFamily::Naturals => Ok(()),
            SequenceFamily::Barnes(d) | SequenceFamily::Epstein(d) => {
                if *d == 2 || *d == 3 {
                    Ok(())
                } else {
                    Err(Error::InvalidArgument(format!(
                        "dimension {d} not supported; use 2 or 3"
                    )))
                }
            }
            SequenceFamily::OneSingularity { mu, coefficients } => {
                if !(*mu > 0.0) {
                    return Err(Error::InvalidArgument("mu must be positive".into()));
                }
                let negs: Vec<_> = coefficients
                    .terms()
                    .iter()
                    .filter(|(e, _)| *e < 0.0)
                    .collect();
                if negs.len() != 1 || (negs[0].0 + mu).abs() > 1e-12 {
                    return Err(Error::InvalidArgument(
                        "one-singularity expansion must have exactly one negative exponent, -mu"
                            .into(),
                    ));
                }
                Ok(())
            }
            SequenceFamily::Custom(table) => {
                if table.get(&1).copied().unwrap_or(0) == 0 {
                    Err(Error::InvalidSequence(
                        "custom table must contain lambda = 1".into(),
                    ))
                } else if table.values().any(|&g| g == 0) {
                    Err(Error::InvalidSequence("multiplicities must be >= 1".into()))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Parse a family label as used by the CLI: `naturals`, `barnes2`,
    /// `barnes3`, `epstein2`, `epstein3`.
    pub fn parse(label: &str) -> Result<SequenceFamily> {
        match label.to_ascii_lowercase().as_str() {
            "naturals" | "n" => Ok(SequenceFamily::Naturals),
            "barnes2" | "b2" => Ok(SequenceFamily::Barnes(2)),
            "barnes3" | "b3" => Ok(SequenceFamily::Barnes(3)),
            "epstein2" | "e2" => Ok(SequenceFamily::Epstein(2)),
            "epstein3" | "e3" => Ok(SequenceFamily::Epstein(3)),
            other => Err(Error::InvalidArgument(format!("unknown family '{other}'"))),
        }
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceFamily::Naturals => write!(f, "naturals"),
            SequenceFamily::Barnes(d) => write!(f, "barnes{d}"),
            SequenceFamily::Epstein(d) => write!(f, "epstein{d}"),
            SequenceFamily::OneSingularity { mu, .. } => write!(f, "one-singularity(mu={mu})"),
            SequenceFamily::Custom(_) => write!(f, "custom"),
        }
    }
}

/// Finite truncation of a weighted sequence: ordered `(lambda, multiplicity)`
/// pairs up to `cutoff`.
#[derive(Debug, Clone)]
pub struct WeightedSequence {
    entries: Vec<(u64, u64)>,
    cutoff: u64,
    /// True when the entries are the whole sequence rather than a
    /// truncation of an infinite family; saddle tail checks are skipped.
    complete: bool,
}

impl WeightedSequence {
    /// A sequence given in full; there is nothing beyond the entries.
    pub fn new(entries: Vec<(u64, u64)>, cutoff: u64) -> Result<Self> {
        Self::build(entries, cutoff, true)
    }

    /// A truncation of an infinite family.
    pub fn truncated(entries: Vec<(u64, u64)>, cutoff: u64) -> Result<Self> {
        Self::build(entries, cutoff, false)
    }

    fn build(entries: Vec<(u64, u64)>, cutoff: u64, complete: bool) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSequence("empty sequence".into()));
        }
        for w in entries.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(Error::InvalidSequence(
                    "values must be strictly increasing".into(),
                ));
            }
        }
        if entries.iter().any(|&(_, g)| g == 0) {
            return Err(Error::InvalidSequence("multiplicities must be >= 1".into()));
        }
        if entries[0].0 != 1 {
            return Err(Error::InvalidSequence(
                "sequence must contain lambda = 1".into(),
            ));
        }
        if entries.last().unwrap().0 > cutoff {
            return Err(Error::InvalidSequence("entry beyond cutoff".into()));
        }
        Ok(WeightedSequence {
            entries,
            cutoff,
            complete,
        })
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn cutoff(&self) -> u64 {
        self.cutoff
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn multiplicity(&self, lambda: u64) -> u64 {
        match self.entries.binary_search_by_key(&lambda, |&(l, _)| l) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0,
        }
    }
}

/// Materialize a family as a weighted sequence truncated at `cutoff`.
pub fn enumerate(family: &SequenceFamily, cutoff: u64) -> Result<WeightedSequence> {
    family.validate()?;
    if cutoff == 0 {
        return Err(Error::InvalidArgument("cutoff must be >= 1".into()));
    }
    let entries: Vec<(u64, u64)> = match family {
        SequenceFamily::Naturals => (1..=cutoff).map(|l| (l, 1)).collect(),
        SequenceFamily::Barnes(d) => (1..=cutoff)
            .map(|l| {
                let g = barnes_degeneracy(l, *d)
                    .to_u64()
                    .ok_or_else(|| Error::InvalidArgument("degeneracy overflows u64".into()))?;
                Ok((l, g))
            })
            .collect::<Result<Vec<_>>>()?,
        SequenceFamily::Epstein(d) => {
            let counts = epstein_multiplicities(*d, cutoff);
            counts
                .into_iter()
                .enumerate()
                .filter(|&(_, g)| g > 0)
                .map(|(l, g)| (l as u64, g))
                .collect()
        }
        SequenceFamily::Custom(table) => {
            let entries: Vec<(u64, u64)> = table
                .iter()
                .filter(|&(&l, _)| l <= cutoff)
                .map(|(&l, &g)| (l, g))
                .collect();
            let whole = table.keys().all(|&l| l <= cutoff);
            return if whole {
                WeightedSequence::new(entries, cutoff)
            } else {
                WeightedSequence::truncated(entries, cutoff)
            };
        }
        SequenceFamily::OneSingularity { .. } => {
            return Err(Error::UnsupportedFamily(
                "one-singularity families have no concrete sequence to enumerate".into(),
            ))
        }
    };
    WeightedSequence::truncated(entries, cutoff)
}

/// Representation counts `#{m in N_0^d \ {0} : sum m_i^2 = lambda}` for
/// `lambda <= cutoff`, index 0 unused.
pub fn epstein_multiplicities(d: u32, cutoff: u64) -> Vec<u64> {
    let n = cutoff as usize;
    let mut counts = vec![0u64; n + 1];
    let root = (cutoff as f64).sqrt() as u64 + 1;
    match d {
        2 => {
            for m1 in 0..=root {
                let q1 = m1 * m1;
                if q1 > cutoff {
                    break;
                }
                for m2 in 0..=root {
                    let q = q1 + m2 * m2;
                    if q > cutoff {
                        break;
                    }
                    if q >= 1 {
                        counts[q as usize] += 1;
                    }
                }
            }
        }
        3 => {
            for m1 in 0..=root {
                let q1 = m1 * m1;
                if q1 > cutoff {
                    break;
                }
                for m2 in 0..=root {
                    let q2 = q1 + m2 * m2;
                    if q2 > cutoff {
                        break;
                    }
                    for m3 in 0..=root {
                        let q = q2 + m3 * m3;
                        if q > cutoff {
                            break;
                        }
                        if q >= 1 {
                            counts[q as usize] += 1;
                        }
                    }
                }
            }
        }
        _ => panic!("epstein_multiplicities: d must be 2 or 3"),
    }
    counts
}

/// Value of the truncated partition function together with a geometric
/// estimate of the truncation tail.
#[derive(Debug, Clone, Copy)]
pub struct ThetaValue {
    pub value: f64,
    pub tail_bound: f64,
}

/// `Theta(t) = sum g(lambda) e^{-lambda t}` over the truncation.
pub fn theta(seq: &WeightedSequence, t: f64) -> Result<ThetaValue> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("theta requires t > 0, got {t}")));
    }
    let mut value = 0.0;
    let mut comp = 0.0; // Kahan correction
    for &(l, g) in seq.entries() {
        let term = g as f64 * (-(l as f64) * t).exp();
        let y = term - comp;
        let s = value + y;
        comp = (s - value) - y;
        value = s;
    }
    let g_last = seq.entries().last().unwrap().1 as f64;
    let tail_bound = g_last * (-(seq.cutoff() as f64) * t).exp() / (1.0 - (-t).exp());
    Ok(ThetaValue { value, tail_bound })
}

/// Evaluate `Theta` with the cutoff grown until the tail estimate drops
/// below `1e-14` of the value.
pub fn theta_auto(family: &SequenceFamily, t: f64) -> Result<ThetaValue> {
    let mut cutoff = ((40.0 / t).ceil() as u64).max(64);
    for _ in 0..8 {
        let seq = enumerate(family, cutoff)?;
        let tv = theta(&seq, t)?;
        if tv.tail_bound < 1e-14 * tv.value.abs() {
            return Ok(tv);
        }
        cutoff *= 2;
    }
    Err(Error::Solver("theta cutoff did not converge".into()))
}

/// Closed-form expansion of `Theta(t)` about `t = 0`, with all nonzero terms
/// up to exponent `order` (plus, for Epstein families, exponentially small
/// positive-exponent terms recorded as exact zeros).
pub fn theta_expansion(family: &SequenceFamily, order: i32) -> Result<ThetaExpansion> {
    family.validate()?;
    match family {
        SequenceFamily::Naturals => bernoulli_tail_expansion(1, order),
        SequenceFamily::Barnes(d) => bernoulli_tail_expansion(*d, order),
        SequenceFamily::Epstein(d) => {
            let d = *d;
            let mut terms = Vec::new();
            for n in (1..=d).rev() {
                let a = crate::combinatorics::binomial(d as u64, n as u64)
                    .to_f64()
                    .unwrap()
                    * PI.powf(n as f64 / 2.0)
                    / 2f64.powi(d as i32);
                terms.push((-(n as f64) / 2.0, a));
            }
            terms.push((0.0, 1.0 / 2f64.powi(d as i32) - 1.0));
            // positive half-integer corrections are O(e^{-pi^2/t}); record zeros
            let mut e = 0.5;
            while e <= order as f64 {
                terms.push((e, 0.0));
                e += 0.5;
            }
            ThetaExpansion::new(terms)
        }
        SequenceFamily::OneSingularity { coefficients, .. } => Ok(coefficients.clone()),
        SequenceFamily::Custom(_) => Err(Error::UnsupportedFamily(
            "custom sequences have no closed-form expansion".into(),
        )),
    }
}

/// Default expansion: everything through exponent 0 plus two positive
/// nonzero-exponent terms (Naturals / Barnes) or two recorded zeros (Epstein).
pub fn default_expansion(family: &SequenceFamily) -> Result<ThetaExpansion> {
    match family {
        SequenceFamily::Naturals => theta_expansion(family, 3),
        _ => theta_expansion(family, 2),
    }
}

/// `(1/(1 - e^{-t}))^d - 1` expanded about `t = 0`, exponents from `-d`.
fn bernoulli_tail_expansion(d: u32, order: i32) -> Result<ThetaExpansion> {
    use num_rational::BigRational;
    use num_traits::One;
    let n_coeffs = (order + d as i32).max(0) as usize;
    let base = t_over_one_minus_exp_neg(n_coeffs);
    let powered = series_pow(&base, d, n_coeffs);
    let mut terms = Vec::new();
    for (k, c) in powered.iter().enumerate() {
        let e = k as i32 - d as i32;
        if e > order {
            break;
        }
        let exact = if e == 0 {
            c - BigRational::one()
        } else {
            c.clone()
        };
        let a = exact.to_f64().unwrap();
        if a != 0.0 || e == 0 {
            terms.push((e as f64, a));
        }
    }
    ThetaExpansion::new(terms)
}

/// Parse a custom sequence from two whitespace-separated columns
/// `lambda multiplicity`. Lines starting with `#` are ignored.
pub fn parse_custom(text: &str) -> Result<BTreeMap<u64, u64>> {
    let mut table = BTreeMap::new();
    let mut last = 0u64;
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let l: u64 = it
            .next()
            .ok_or_else(|| Error::Parse(format!("line {}: missing lambda", idx + 1)))?
            .parse()
            .map_err(|e| Error::Parse(format!("line {}: {e}", idx + 1)))?;
        let g: u64 = it
            .next()
            .ok_or_else(|| Error::Parse(format!("line {}: missing multiplicity", idx + 1)))?
            .parse()
            .map_err(|e| Error::Parse(format!("line {}: {e}", idx + 1)))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("line {}: trailing fields", idx + 1)));
        }
        if l <= last {
            return Err(Error::Parse(format!(
                "line {}: lambda must increase",
                idx + 1
            )));
        }
        last = l;
        table.insert(l, g);
    }
    if table.get(&1).copied().unwrap_or(0) == 0 {
        return Err(Error::InvalidSequence(
            "custom table must contain lambda = 1".into(),
        ));
    }
    Ok(table)
}

pub fn custom_from_file(path: &Path) -> Result<BTreeMap<u64, u64>> {
    parse_custom(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_barnes2() {
        let seq = enumerate(&SequenceFamily::Barnes(2), 4).unwrap();
        assert_eq!(seq.entries(), &[(1, 2), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn enumerate_epstein2() {
        // brute force over (m1, m2) in {0..3}^2 \ {0} gives the multiset
        // {1: 2, 2: 1, 4: 2, 5: 2} for lambda <= 5
        let seq = enumerate(&SequenceFamily::Epstein(2), 5).unwrap();
        assert_eq!(seq.entries(), &[(1, 2), (2, 1), (4, 2), (5, 2)]);
    }

    #[test]
    fn enumerate_naturals() {
        let seq = enumerate(&SequenceFamily::Naturals, 3).unwrap();
        assert_eq!(seq.entries(), &[(1, 1), (2, 1), (3, 1)]);
    }

    #[test]
    fn enumerate_rejects_bad_input() {
        assert!(matches!(
            enumerate(&SequenceFamily::Naturals, 0),
            Err(Error::InvalidArgument(_))
        ));
        let no_one: BTreeMap<u64, u64> = [(2u64, 1u64)].into_iter().collect();
        assert!(matches!(
            enumerate(&SequenceFamily::Custom(no_one), 5),
            Err(Error::InvalidSequence(_))
        ));
    }

    #[test]
    fn theta_naturals_large_t_is_dominated_by_first_term() {
        let seq = enumerate(&SequenceFamily::Naturals, 100).unwrap();
        let t = 30.0;
        let tv = theta(&seq, t).unwrap();
        assert!((tv.value - (-t).exp()).abs() < 1e-20);
    }

    #[test]
    fn theta_naturals_matches_geometric_closed_form() {
        let seq = enumerate(&SequenceFamily::Naturals, 60).unwrap();
        let tv = theta(&seq, 1.0).unwrap();
        let exact = 1.0 / (1f64.exp() - 1.0);
        assert!(
            (tv.value - exact).abs() < 1e-12,
            "got {}, want {exact}",
            tv.value
        );
    }

    #[test]
    fn theta_barnes2_matches_closed_form() {
        let seq = enumerate(&SequenceFamily::Barnes(2), 80).unwrap();
        let tv = theta(&seq, 1.0).unwrap();
        let exact = 1.0 / (1.0 - (-1f64).exp()).powi(2) - 1.0;
        assert!((tv.value - exact).abs() < 1e-12);
    }

    #[test]
    fn theta_rejects_nonpositive_t() {
        let seq = enumerate(&SequenceFamily::Naturals, 10).unwrap();
        assert!(theta(&seq, 0.0).is_err());
        assert!(theta(&seq, -1.0).is_err());
    }

    #[test]
    fn expansion_epstein2_coefficients() {
        let exp = default_expansion(&SequenceFamily::Epstein(2)).unwrap();
        let terms = exp.terms();
        assert_eq!(terms[0], (-1.0, PI / 4.0));
        assert!((terms[1].0 - -0.5).abs() < 1e-15);
        assert!((terms[1].1 - PI.sqrt() / 2.0).abs() < 1e-15);
        assert_eq!(terms[2], (0.0, -0.75));
    }

    #[test]
    fn expansion_barnes2_coefficients() {
        let exp = default_expansion(&SequenceFamily::Barnes(2)).unwrap();
        let t = exp.terms();
        assert_eq!(&t[..3], &[(-2.0, 1.0), (-1.0, 1.0), (0.0, -7.0 / 12.0)]);
        // positive tail: t/12 + t^2/240
        assert!((t[3].1 - 1.0 / 12.0).abs() < 1e-15);
        assert!((t[4].1 - 1.0 / 240.0).abs() < 1e-15);
    }

    #[test]
    fn expansion_barnes3_coefficients() {
        let exp = default_expansion(&SequenceFamily::Barnes(3)).unwrap();
        let t = exp.terms();
        assert_eq!(
            &t[..4],
            &[(-3.0, 1.0), (-2.0, 1.5), (-1.0, 1.0), (0.0, -5.0 / 8.0)]
        );
    }

    #[test]
    fn expansion_naturals_coefficients() {
        let exp = default_expansion(&SequenceFamily::Naturals).unwrap();
        let t = exp.terms();
        assert_eq!(t[0], (-1.0, 1.0));
        assert_eq!(t[1], (0.0, -0.5));
        assert!((t[2].1 - 1.0 / 12.0).abs() < 1e-15);
        assert_eq!(t[3].0, 3.0);
        assert!((t[3].1 - -1.0 / 720.0).abs() < 1e-18);
    }

    #[test]
    fn expansion_is_asymptotically_consistent() {
        // log-log slope of the residual must be at least the first omitted
        // exponent (within fitting slack) for the closed-form families.
        for (family, min_slope) in [
            (SequenceFamily::Naturals, 4.0),
            (SequenceFamily::Barnes(2), 2.5),
            (SequenceFamily::Barnes(3), 0.5),
        ] {
            let exp = default_expansion(&family).unwrap();
            let ts = [0.05, 0.0707, 0.1, 0.1414, 0.2, 0.2828, 0.4];
            let pts: Vec<(f64, f64)> = ts
                .iter()
                .map(|&t| {
                    let tv = theta_auto(&family, t).unwrap();
                    (t.ln(), (tv.value - exp.eval(t)).abs().max(1e-300).ln())
                })
                .collect();
            let slope = fit_slope(&pts);
            assert!(
                slope > min_slope,
                "{family}: residual slope {slope} too shallow"
            );
        }
        // Epstein residuals are exponentially small rather than algebraic
        for d in [2u32, 3] {
            let family = SequenceFamily::Epstein(d);
            let exp = default_expansion(&family).unwrap();
            for (t, budget) in [(0.5, 1e-7f64), (0.2, 1e-17), (0.1, 1e-30)] {
                let tv = theta_auto(&family, t).unwrap();
                let resid = (tv.value - exp.eval(t)).abs();
                assert!(
                    resid <= budget.max(1e-14 * tv.value),
                    "epstein{d} residual {resid:.3e} at t={t}"
                );
            }
        }
    }

    fn fit_slope(pts: &[(f64, f64)]) -> f64 {
        let n = pts.len() as f64;
        let sx: f64 = pts.iter().map(|p| p.0).sum();
        let sy: f64 = pts.iter().map(|p| p.1).sum();
        let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
        (n * sxy - sx * sy) / (n * sxx - sx * sx)
    }

    #[test]
    fn barnes_multiplicities_satisfy_hockey_stick() {
        use crate::combinatorics::binomial;
        use num_bigint::BigUint;
        for d in [2u32, 3] {
            let seq = enumerate(&SequenceFamily::Barnes(d), 60).unwrap();
            let mut acc = BigUint::from(0u32);
            for &(l, g) in seq.entries() {
                acc += BigUint::from(g);
                let expect = binomial(l + d as u64, d as u64) - BigUint::from(1u32);
                assert_eq!(acc, expect, "hockey stick fails at d={d}, L={l}");
            }
        }
    }

    #[test]
    fn epstein_multiplicities_match_bruteforce() {
        for d in [2u32, 3] {
            let counts = epstein_multiplicities(d, 200);
            // independent brute force with explicit nested loops and no
            // early-break bookkeeping
            let mut brute = vec![0u64; 201];
            let m = 15u64; // 15^2 > 200
            if d == 2 {
                for a in 0..=m {
                    for b in 0..=m {
                        let q = a * a + b * b;
                        if (1..=200).contains(&q) {
                            brute[q as usize] += 1;
                        }
                    }
                }
            } else {
                for a in 0..=m {
                    for b in 0..=m {
                        for c in 0..=m {
                            let q = a * a + b * b + c * c;
                            if (1..=200).contains(&q) {
                                brute[q as usize] += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(counts, brute, "epstein d={d}");
        }
    }

    #[test]
    fn custom_parsing() {
        let table = parse_custom("# comment\n1 2\n3 1\n").unwrap();
        assert_eq!(table.get(&1), Some(&2));
        assert_eq!(table.get(&3), Some(&1));
        assert!(parse_custom("2 1\n3 1\n").is_err()); // no lambda = 1
        assert!(parse_custom("1 1\n1 2\n").is_err()); // not increasing
    }

    #[test]
    fn one_singularity_validation() {
        let ok = SequenceFamily::OneSingularity {
            mu: 1.5,
            coefficients: ThetaExpansion::new(vec![(-1.5, 2.0), (0.0, -0.5)]).unwrap(),
        };
        assert!(ok.validate().is_ok());
        let bad = SequenceFamily::OneSingularity {
            mu: 1.0,
            coefficients: ThetaExpansion::new(vec![(-1.5, 2.0), (0.0, -0.5)]).unwrap(),
        };
        assert!(bad.validate().is_err());
    }
}
