//! Ground-truth computation: big-integer dynamic programming over the
//! generating function `prod (1 - z x^lambda)^{-g(lambda)}`, plus a
//! brute-force colored-multiset enumerator used as the independent oracle.

use crate::error::{Error, Result};
use crate::sequences::WeightedSequence;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Full table `p(n, m)` of partitions of `n` into `m` parts, where a value
/// with multiplicity `g` counts as `g` distinguishable part types.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionTable {
    n_max: usize,
    /// `rows[n][m]` for `0 <= m <= n`; `rows[0] = [1]` by the series identity.
    rows: Vec<Vec<BigUint>>,
}

impl PartitionTable {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, n: usize, m: usize) -> &BigUint {
        static ZERO: once_cell::sync::Lazy<BigUint> = once_cell::sync::Lazy::new(BigUint::zero);
        if n <= self.n_max && m <= n {
            &self.rows[n][m]
        } else {
            &ZERO
        }
    }

    /// `sum_m p(n, m)` (the total partition count of `n`).
    pub fn count(&self, n: usize) -> BigUint {
        self.rows[n].iter().sum()
    }
}

/// DP over the sequence entries; one pass per distinguishable part type.
pub fn partition_table(seq: &WeightedSequence, n_max: usize) -> Result<PartitionTable> {
    if n_max < 1 {
        return Err(Error::InvalidArgument("n_max must be >= 1".into()));
    }
    let mut rows: Vec<Vec<BigUint>> = (0..=n_max).map(|n| vec![BigUint::zero(); n + 1]).collect();
    rows[0][0] = BigUint::one();
    for &(lambda, g) in seq.entries() {
        let lambda = lambda as usize;
        if lambda > n_max {
            break;
        }
        for _ in 0..g {
            for n in lambda..=n_max {
                let (head, tail) = rows.split_at_mut(n);
                let src = &head[n - lambda];
                let dst = &mut tail[0];
                for m in 1..=(n - lambda + 1) {
                    if !src[m - 1].is_zero() {
                        dst[m] += &src[m - 1];
                    }
                }
            }
        }
    }
    Ok(PartitionTable { n_max, rows })
}

/// `n -> [t^0(n), ..., t^{k_max}(n)]` as exact integers, `n` from 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMomentTable {
    pub n_max: usize,
    pub k_max: usize,
    /// `moments[k][n]`; `moments[0][0] = 1` is the internal series seed and
    /// is excluded from exports.
    moments: Vec<Vec<BigUint>>,
}

impl ExactMomentTable {
    pub fn moment(&self, n: usize, k: usize) -> &BigUint {
        &self.moments[k][n]
    }

    /// CSV with header `n,t0,...,tK`, one row per `n >= 1`, big integers as
    /// decimal strings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n");
        for k in 0..=self.k_max {
            out.push_str(&format!(",t{k}"));
        }
        out.push('\n');
        for n in 1..=self.n_max {
            out.push_str(&n.to_string());
            for k in 0..=self.k_max {
                out.push(',');
                out.push_str(&self.moments[k][n].to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Parse the exact CSV format produced by [`Self::to_csv`].
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty csv".into()))?;
        let k_max = header
            .split(',')
            .count()
            .checked_sub(2)
            .ok_or_else(|| Error::Parse("csv header must be n,t0,...".into()))?;
        let mut moments: Vec<Vec<BigUint>> = vec![vec![BigUint::zero()]; k_max + 1];
        moments[0][0] = BigUint::one();
        let mut n_max = 0;
        for (i, line) in lines.enumerate() {
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split(',');
            let n: usize = fields
                .next()
                .unwrap()
                .parse()
                .map_err(|e| Error::Parse(format!("row {}: {e}", i + 1)))?;
            if n != i + 1 {
                return Err(Error::Parse(format!(
                    "row {}: expected n = {}",
                    i + 1,
                    i + 1
                )));
            }
            for k in 0..=k_max {
                let field = fields
                    .next()
                    .ok_or_else(|| Error::Parse(format!("row {}: missing t{k}", i + 1)))?;
                let v = field
                    .parse::<BigUint>()
                    .map_err(|e| Error::Parse(format!("row {}: {e}", i + 1)))?;
                moments[k].push(v);
            }
            if fields.next().is_some() {
                return Err(Error::Parse(format!("row {}: trailing fields", i + 1)));
            }
            n_max = n;
        }
        Ok(ExactMomentTable {
            n_max,
            k_max,
            moments,
        })
    }
}

/// Moments-only DP: folds `m^k` weights on the fly, so only `k_max + 1`
/// arrays of length `n_max + 1` are kept. Incorporating one part type maps
/// `T_k(n) += sum_i C(k, i) T_i(n - lambda)`.
pub fn exact_moments(
    seq: &WeightedSequence,
    n_max: usize,
    k_max: usize,
) -> Result<ExactMomentTable> {
    if n_max < 1 {
        return Err(Error::InvalidArgument("n_max must be >= 1".into()));
    }
    if k_max > 12 {
        return Err(Error::InvalidArgument("k_max must be <= 12".into()));
    }
    let binom: Vec<Vec<u32>> = (0..=k_max)
        .map(|k| {
            let mut row = vec![1u32; k + 1];
            for i in 1..k {
                row[i] = row[i - 1] * (k as u32 - i as u32 + 1) / i as u32;
            }
            row
        })
        .collect();
    let mut t: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); n_max + 1]; k_max + 1];
    t[0][0] = BigUint::one();
    for &(lambda, g) in seq.entries() {
        let lambda = lambda as usize;
        if lambda > n_max {
            break;
        }
        for _ in 0..g {
            for n in lambda..=n_max {
                for k in 0..=k_max {
                    let mut acc = BigUint::zero();
                    for (i, &c) in binom[k].iter().enumerate() {
                        if c == 1 {
                            acc += &t[i][n - lambda];
                        } else {
                            acc += &t[i][n - lambda] * c;
                        }
                    }
                    t[k][n] += acc;
                }
            }
        }
    }
    Ok(ExactMomentTable {
        n_max,
        k_max,
        moments: t,
    })
}

/// Exact expected number of summands `t^1(n) / t^0(n)`.
pub fn expected_summands_exact(seq: &WeightedSequence, n: usize) -> Result<BigRational> {
    let table = exact_moments(seq, n, 1)?;
    let t0 = table.moment(n, 0);
    if t0.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "no partitions of {n} over this sequence"
        )));
    }
    Ok(BigRational::new(
        BigInt::from(table.moment(n, 1).clone()),
        BigInt::from(t0.clone()),
    ))
}

/// Verify `t^1 = t^0 * S` coefficientwise: the first-moment series must be
/// the Cauchy product of the count series with
/// `S(x) = sum_r (sum_{d | r} g(d)) x^r`, exactly.
pub fn first_moment_crosscheck(seq: &WeightedSequence, n_max: usize) -> Result<bool> {
    let table = exact_moments(seq, n_max, 1)?;
    // s[r] = sum of g(d) over divisors d of r present in the sequence
    let mut s = vec![BigUint::zero(); n_max + 1];
    for &(lambda, g) in seq.entries() {
        let lambda = lambda as usize;
        if lambda > n_max {
            break;
        }
        let mut r = lambda;
        while r <= n_max {
            s[r] += BigUint::from(g);
            r += lambda;
        }
    }
    for n in 1..=n_max {
        let mut cauchy = BigUint::zero();
        for r in 1..=n {
            if !s[r].is_zero() {
                cauchy += &s[r] * table.moment(n - r, 0);
            }
        }
        if &cauchy != table.moment(n, 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive colored-multiset enumeration: the independent oracle for the
/// DP. Each `(lambda, g)` entry expands to `g` distinguishable part types;
/// the return value is `p(n, m)` for `n <= n_max`. Exponential cost — keep
/// `n_max` small.
pub fn enumerate_colored_multisets(seq: &WeightedSequence, n_max: usize) -> Vec<Vec<BigUint>> {
    let mut types = Vec::new();
    for &(lambda, g) in seq.entries() {
        if lambda as usize > n_max {
            break;
        }
        for _ in 0..g {
            types.push(lambda as usize);
        }
    }
    let mut table: Vec<Vec<BigUint>> = (0..=n_max).map(|n| vec![BigUint::zero(); n + 1]).collect();

    // each complete assignment of a repetition count to every type is one
    // multiset; tally it when the last type has been decided
    fn walk(
        types: &[usize],
        idx: usize,
        used: usize,
        parts: usize,
        n_max: usize,
        table: &mut [Vec<BigUint>],
    ) {
        if idx == types.len() {
            table[used][parts] += BigUint::one();
            return;
        }
        let mut used = used;
        let mut parts = parts;
        loop {
            walk(types, idx + 1, used, parts, n_max, table);
            if used + types[idx] > n_max {
                break;
            }
            used += types[idx];
            parts += 1;
        }
    }
    walk(&types, 0, 0, 0, n_max, &mut table);
    table
}

/// Natural log of a big integer, exact to f64 rounding.
pub fn ln_biguint(v: &BigUint) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = v.bits();
    if bits <= 900 {
        v.to_f64().unwrap().ln()
    } else {
        let shift = (bits - 512) as usize;
        let top = (v >> shift).to_f64().unwrap();
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{enumerate, SequenceFamily};

    fn naturals(n: u64) -> WeightedSequence {
        enumerate(&SequenceFamily::Naturals, n).unwrap()
    }

    #[test]
    fn naturals_partition_counts() {
        let table = partition_table(&naturals(10), 10).unwrap();
        // p(n) for n = 1..10
        let p = [1u32, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &pn) in p.iter().enumerate() {
            assert_eq!(table.count(n + 1), BigUint::from(pn));
        }
        assert_eq!(table.count(5), BigUint::from(7u32));
    }

    #[test]
    fn single_part_column_is_one() {
        let table = partition_table(&naturals(30), 30).unwrap();
        for n in 1..=30 {
            assert_eq!(table.get(n, 1), &BigUint::one());
        }
    }

    #[test]
    fn barnes2_small_count_resolved_by_bruteforce() {
        // two colors of 1 and three colors of 2 give six partitions of 2:
        // {2a},{2b},{2c},{1a,1a},{1a,1b},{1b,1b}
        let seq = enumerate(&SequenceFamily::Barnes(2), 4).unwrap();
        let brute = enumerate_colored_multisets(&seq, 2);
        let total: BigUint = brute[2].iter().sum();
        assert_eq!(total, BigUint::from(6u32));
        let table = partition_table(&seq, 2).unwrap();
        assert_eq!(table.count(2), BigUint::from(6u32));
    }

    #[test]
    fn dp_equals_bruteforce_for_three_families() {
        for family in [
            SequenceFamily::Naturals,
            SequenceFamily::Barnes(2),
            SequenceFamily::Epstein(2),
        ] {
            let seq = enumerate(&family, 12).unwrap();
            let dp = partition_table(&seq, 12).unwrap();
            let brute = enumerate_colored_multisets(&seq, 12);
            for n in 0..=12usize {
                for m in 0..=n {
                    assert_eq!(
                        dp.get(n, m),
                        &brute[n][m],
                        "{family}: mismatch at p({n}, {m})"
                    );
                }
            }
        }
    }

    #[test]
    fn moments_match_hand_enumeration_for_naturals() {
        let table = exact_moments(&naturals(5), 5, 2).unwrap();
        // partitions of 5 have part counts 1,2,2,3,3,4,5
        assert_eq!(table.moment(5, 0), &BigUint::from(7u32));
        assert_eq!(table.moment(5, 1), &BigUint::from(20u32));
        assert_eq!(table.moment(5, 2), &BigUint::from(68u32));
    }

    #[test]
    fn moments_at_one_are_all_one() {
        let table = exact_moments(&naturals(1), 1, 6).unwrap();
        for k in 0..=6 {
            assert_eq!(table.moment(1, k), &BigUint::one());
        }
    }

    #[test]
    fn moments_only_table_agrees_with_full_table() {
        for family in [SequenceFamily::Barnes(2), SequenceFamily::Epstein(2)] {
            let seq = enumerate(&family, 16).unwrap();
            let full = partition_table(&seq, 16).unwrap();
            let fold = exact_moments(&seq, 16, 3).unwrap();
            for n in 1..=16usize {
                for k in 0..=3usize {
                    let mut want = BigUint::zero();
                    for m in 1..=n {
                        want += full.get(n, m) * BigUint::from(m).pow(k as u32);
                    }
                    assert_eq!(fold.moment(n, k), &want, "{family} t^{k}({n})");
                }
            }
        }
    }

    #[test]
    fn expected_summands_small_values() {
        let e5 = expected_summands_exact(&naturals(5), 5).unwrap();
        assert_eq!(e5, BigRational::new(20.into(), 7.into()));
        let e1 = expected_summands_exact(&naturals(1), 1).unwrap();
        assert_eq!(e1, BigRational::from_integer(1.into()));
        let e2 = expected_summands_exact(&naturals(2), 2).unwrap();
        assert_eq!(e2, BigRational::new(3.into(), 2.into()));
    }

    #[test]
    fn first_moment_crosscheck_families() {
        assert!(first_moment_crosscheck(&naturals(50), 50).unwrap());
        let b2 = enumerate(&SequenceFamily::Barnes(2), 40).unwrap();
        assert!(first_moment_crosscheck(&b2, 40).unwrap());
        // single-element sequence {1}: t^1(n) = n
        let single = WeightedSequence::new(vec![(1, 1)], 1).unwrap();
        assert!(first_moment_crosscheck(&single, 30).unwrap());
        let table = exact_moments(&single, 30, 1).unwrap();
        for n in 1..=30usize {
            assert_eq!(table.moment(n, 1), &BigUint::from(n));
        }
    }

    #[test]
    fn moment_table_invariants() {
        for family in [SequenceFamily::Naturals, SequenceFamily::Barnes(2)] {
            let seq = enumerate(&family, 40).unwrap();
            let t = exact_moments(&seq, 40, 3).unwrap();
            for n in 1..=40usize {
                assert!(!t.moment(n, 0).is_zero(), "t0({n}) >= 1");
                for k in 1..=3usize {
                    assert!(
                        t.moment(n, k) >= t.moment(n, k - 1),
                        "monotone at ({n}, {k})"
                    );
                    let bound = BigUint::from(n).pow(k as u32) * t.moment(n, 0);
                    assert!(t.moment(n, k) <= &bound, "n^k bound at ({n}, {k})");
                }
                // Cauchy-Schwarz: t1^2 <= t0 t2
                let lhs = t.moment(n, 1) * t.moment(n, 1);
                let rhs = t.moment(n, 0) * t.moment(n, 2);
                assert!(lhs <= rhs, "Cauchy-Schwarz at n={n}");
            }
        }
    }

    #[test]
    fn csv_round_trip() {
        let seq = enumerate(&SequenceFamily::Barnes(2), 25).unwrap();
        let table = exact_moments(&seq, 25, 2).unwrap();
        let csv = table.to_csv();
        let parsed = ExactMomentTable::from_csv(&csv).unwrap();
        assert_eq!(table, parsed);
    }

    mod random_tables {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]
            #[test]
            fn dp_matches_bruteforce_on_random_custom_tables(
                g1 in 1u64..4,
                extra in proptest::collection::btree_map(2u64..9, 1u64..4, 0..4),
            ) {
                let mut entries = vec![(1u64, g1)];
                entries.extend(extra.into_iter());
                let seq = WeightedSequence::new(entries, 8).unwrap();
                let dp = partition_table(&seq, 9).unwrap();
                let brute = enumerate_colored_multisets(&seq, 9);
                for n in 0..=9usize {
                    for m in 0..=n {
                        prop_assert_eq!(dp.get(n, m), &brute[n][m]);
                    }
                }
            }
        }
    }

    #[test]
    fn ln_biguint_handles_large_values() {
        let big = BigUint::from(7u32).pow(3000);
        let want = 3000.0 * (7f64).ln();
        assert!((ln_biguint(&big) - want).abs() < 1e-9 * want);
        let small = BigUint::from(42u32);
        assert!((ln_biguint(&small) - 42f64.ln()).abs() < 1e-14);
    }
}
