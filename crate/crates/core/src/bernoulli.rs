//! Exact Bernoulli numbers and small rational power-series helpers.
//!
//! Everything here works in `BigRational` so that series coefficients used as
//! test oracles and expansion constants are exact until the final conversion
//! to `f64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::sync::Mutex;

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

static BERNOULLI_CACHE: Lazy<Mutex<Vec<BigRational>>> = Lazy::new(|| Mutex::new(vec![big(1)]));

/// Bernoulli number `B_n` with the convention `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> BigRational {
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    while cache.len() <= n {
        let m = cache.len();
        // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(m+1, 0)
        for (j, b) in cache.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * b;
            binom = binom * BigInt::from((m + 1 - j) as u64) / BigInt::from((j + 1) as u64);
        }
        let b_m = -acc / big((m + 1) as i64);
        cache.push(b_m);
    }
    cache[n].clone()
}

/// Bernoulli number with the `B_1 = +1/2` convention; all other indices agree.
pub fn bernoulli_plus(n: usize) -> BigRational {
    if n == 1 {
        big(1) / big(2)
    } else {
        bernoulli(n)
    }
}

/// Coefficients `a_0..a_order` of `t / (1 - e^{-t}) = sum B^+_k t^k / k!`.
pub fn t_over_one_minus_exp_neg(order: usize) -> Vec<BigRational> {
    let mut fact = BigRational::one();
    (0..=order)
        .map(|k| {
            if k > 0 {
                fact *= big(k as i64);
            }
            bernoulli_plus(k) / fact.clone()
        })
        .collect()
}

/// Coefficients of `e^{ct}` up to `t^order`.
pub fn exp_series(c: &BigRational, order: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut term = BigRational::one();
    out.push(term.clone());
    for k in 1..=order {
        term = term * c / big(k as i64);
        out.push(term.clone());
    }
    out
}

/// Truncated product of two power series.
pub fn series_mul(a: &[BigRational], b: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Truncated `d`-th power of a power series.
pub fn series_pow(a: &[BigRational], d: u32, order: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); order + 1];
    out[0] = BigRational::one();
    for _ in 0..d {
        out = series_mul(&out, a, order);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_bernoulli_values() {
        assert_eq!(bernoulli(0), big(1));
        assert_eq!(bernoulli(1), big(-1) / big(2));
        assert_eq!(bernoulli(2), big(1) / big(6));
        assert_eq!(bernoulli(3), big(0));
        assert_eq!(bernoulli(4), big(-1) / big(30));
        assert_eq!(bernoulli(12), big(-691) / big(2730));
    }

    #[test]
    fn base_series_matches_known_coefficients() {
        // t/(1-e^{-t}) = 1 + t/2 + t^2/12 - t^4/720 + ...
        let s = t_over_one_minus_exp_neg(4);
        assert_eq!(s[0], big(1));
        assert_eq!(s[1], big(1) / big(2));
        assert_eq!(s[2], big(1) / big(12));
        assert_eq!(s[3], big(0));
        assert_eq!(s[4], big(-1) / big(720));
    }

    #[test]
    fn series_pow_squares_correctly() {
        let s = t_over_one_minus_exp_neg(3);
        let sq = series_pow(&s, 2, 3);
        // (1 + t/2 + t^2/12)^2 = 1 + t + 5t^2/12 + t^3/12 + ...
        assert_eq!(sq[0], big(1));
        assert_eq!(sq[1], big(1));
        assert_eq!(sq[2], big(5) / big(12));
        assert_eq!(sq[3], big(1) / big(12));
    }
}
