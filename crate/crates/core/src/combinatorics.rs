//! Exact coefficient machinery: the `c_j^{(s)}` recursion, lattice
//! degeneracies, and the constrained composition sum that turns derivative
//! data into moment factors.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Table of rows `[c_1^{(s)}, ..., c_s^{(s)}]`, exact integers.
///
/// Defined by `c_1^{(1)} = 1` and
/// `c_j^{(s+1)} = j c_j^{(s)} + (s - j + 1) c_{j-1}^{(s)}` with
/// `c_{s+1}^{(s+1)} = 0`. Row `s` sums to `(s-1)!`.
pub struct CTable {
    rows: Vec<Vec<BigInt>>,
}

impl CTable {
    pub fn up_to(s_max: usize) -> CTable {
        assert!(s_max >= 1);
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        while rows.len() < s_max {
            let s = rows.len();
            let prev = &rows[s - 1];
            let at = |j: usize| -> BigInt {
                if j == 0 || j > s {
                    BigInt::zero()
                } else {
                    prev[j - 1].clone()
                }
            };
            let mut row = Vec::with_capacity(s + 1);
            for j in 1..=s {
                row.push(
                    BigInt::from(j as u64) * at(j) + BigInt::from((s - j + 1) as u64) * at(j - 1),
                );
            }
            row.push(BigInt::zero()); // c_{s+1}^{(s+1)}
            rows.push(row);
        }
        CTable { rows }
    }

    pub fn row(&self, s: usize) -> &[BigInt] {
        &self.rows[s - 1]
    }
}

/// Row `[c_1^{(s)}, ..., c_s^{(s)}]` of the coefficient table.
pub fn c_coeffs(s: usize) -> Vec<BigInt> {
    CTable::up_to(s).rows.pop().unwrap()
}

/// `c_j^{(s)}` rounded into `f64` (exact for the ranges used here).
pub fn c_coeffs_f64(s: usize) -> Vec<f64> {
    use num_traits::ToPrimitive;
    c_coeffs(s).iter().map(|c| c.to_f64().unwrap()).collect()
}

/// Lattice degeneracy `e_l^{(d)} = C(l + d - 1, d - 1)`: the number of
/// points of `N_0^d` on the hyperplane with coordinate sum `l`.
pub fn barnes_degeneracy(l: u64, d: u32) -> BigUint {
    binomial(l + d as u64 - 1, d as u64 - 1)
}

/// Binomial coefficient `C(n, k)` as an exact big integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

type CompositionCache = HashMap<usize, Arc<Vec<Vec<u32>>>>;
static COMPOSITIONS: Lazy<Mutex<CompositionCache>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// All `(b_1, ..., b_k)` with `b_j >= 0` and `sum j*b_j = k`, memoized.
///
/// The solution count equals the number of partitions of `k`.
pub fn compositions(k: usize) -> Arc<Vec<Vec<u32>>> {
    assert!(
        (1..=30).contains(&k),
        "composition enumeration supports 1 <= k <= 30"
    );
    let mut cache = COMPOSITIONS.lock().unwrap();
    cache
        .entry(k)
        .or_insert_with(|| {
            let mut out = Vec::new();
            let mut b = vec![0u32; k];
            enumerate(k, k, &mut b, &mut out);
            Arc::new(out)
        })
        .clone()
}

fn enumerate(remaining: usize, max_part: usize, b: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining == 0 {
        out.push(b.clone());
        return;
    }
    let top = max_part.min(remaining);
    for j in (1..=top).rev() {
        b[j - 1] += 1;
        enumerate(remaining - j, j, b, out);
        b[j - 1] -= 1;
    }
}

/// The constrained composition sum
/// `sum over {b : sum j b_j = k} of k!/(prod b_j!) * prod (x_{j-1}/j!)^{b_j}`.
pub fn bell_sum(k: usize, x: &[f64]) -> Result<f64> {
    if x.len() != k {
        return Err(Error::InvalidArgument(format!(
            "bell_sum expects {} arguments, got {}",
            k,
            x.len()
        )));
    }
    let fact = factorials(k);
    let mut total = 0.0;
    for b in compositions(k).iter() {
        let mut term = fact[k];
        for (j, &bj) in b.iter().enumerate() {
            if bj == 0 {
                continue;
            }
            term /= fact[bj as usize];
            term *= (x[j] / fact[j + 1]).powi(bj as i32);
        }
        total += term;
    }
    Ok(total)
}

fn factorials(k: usize) -> Vec<f64> {
    let mut f = vec![1.0; k + 1];
    for i in 1..=k {
        f[i] = f[i - 1] * i as f64;
    }
    f
}
