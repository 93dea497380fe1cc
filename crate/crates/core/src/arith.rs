//! Mobius function sieving and the classical identities downstream modules
//! lean on.
//!
//! The table is built once by a linear sieve and is immutable afterwards, so
//! it can be shared freely across worker threads.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("sieve limit must be at least 1")]
    InvalidLimit,
    #[error("argument {n} exceeds the sieve limit {limit}")]
    OutOfRange { n: u64, limit: u64 },
}

/// Sieved Mobius values mu(1..=limit), stored as signed bytes.
///
/// Invariants: `mu(1) = 1`; `mu(k) = 0` exactly when `k` has a squared prime
/// factor; `mu` is multiplicative on coprime arguments.
pub struct MobiusTable {
    limit: u64,
    values: Vec<i8>,
}

impl MobiusTable {
    /// Linear sieve: every composite is crossed off exactly once through its
    /// smallest prime factor, so the cost is O(limit).
    pub fn sieve(limit: u64) -> Result<Self, ArithError> {
        if limit == 0 {
            return Err(ArithError::InvalidLimit);
        }
        let n = limit as usize;
        let mut values = vec![0i8; n + 1];
        values[1] = 1;
        let mut smallest_factor = vec![0u32; n + 1];
        let mut primes: Vec<usize> = Vec::new();
        for i in 2..=n {
            if smallest_factor[i] == 0 {
                primes.push(i);
                values[i] = -1;
            } else {
                let p = smallest_factor[i] as usize;
                let m = i / p;
                values[i] = if m % p == 0 { 0 } else { -values[m] };
            }
            for &p in &primes {
                let ip = i * p;
                if ip > n {
                    break;
                }
                smallest_factor[ip] = p as u32;
                if i % p == 0 {
                    break;
                }
            }
        }
        Ok(Self { limit, values })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// mu(n). Panics if `n` is 0 or beyond the sieve limit.
    pub fn mu(&self, n: u64) -> i8 {
        assert!(n >= 1 && n <= self.limit, "mu({n}) outside sieved range");
        self.values[n as usize]
    }

    /// Mertens function M(n) = sum_{a<=n} mu(a).
    pub fn mertens(&self, n: u64) -> Result<i64, ArithError> {
        self.check_range(n)?;
        Ok(self.values[1..=n as usize]
            .iter()
            .map(|&v| i64::from(v))
            .sum())
    }

    /// Prefix sums M(0..=limit), M(0) = 0. One pass; handy for the grouped
    /// floor-sum evaluation below.
    pub fn mertens_prefix(&self) -> Vec<i64> {
        let mut prefix = vec![0i64; self.values.len()];
        for k in 1..self.values.len() {
            prefix[k] = prefix[k - 1] + i64::from(self.values[k]);
        }
        prefix
    }

    /// sum_{a<=N} mu(a) * floor(N/a), evaluated term by term. Equals 1 for
    /// every N >= 1.
    pub fn mobius_floor_sum(&self, n: u64) -> Result<i64, ArithError> {
        self.check_range(n)?;
        let mut total = 0i64;
        for a in 1..=n {
            let mu = i64::from(self.values[a as usize]);
            if mu != 0 {
                total += mu * (n / a) as i64;
            }
        }
        Ok(total)
    }

    fn check_range(&self, n: u64) -> Result<(), ArithError> {
        if n == 0 || n > self.limit {
            return Err(ArithError::OutOfRange {
                n,
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// Same sum as [`MobiusTable::mobius_floor_sum`], grouped over the O(sqrt N)
/// blocks on which floor(N/a) is constant, using Mertens prefix sums. This is
/// the route that makes sweeping every N up to 10^6 affordable.
pub fn mobius_floor_sum_grouped(mertens_prefix: &[i64], n: u64) -> i64 {
    debug_assert!(mertens_prefix.len() as u64 > n);
    let mut total = 0i64;
    let mut a = 1u64;
    while a <= n {
        let v = n / a;
        let a_end = n / v;
        total += v as i64 * (mertens_prefix[a_end as usize] - mertens_prefix[(a - 1) as usize]);
        a = a_end + 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }

    #[test]
    fn sieve_rejects_zero_limit() {
        assert_eq!(MobiusTable::sieve(0).unwrap_err(), ArithError::InvalidLimit);
    }

    #[test]
    fn sieve_small_values() {
        let t = MobiusTable::sieve(30).unwrap();
        assert_eq!(t.mu(1), 1);
        assert_eq!(t.mu(2), -1);
        assert_eq!(t.mu(4), 0);
        assert_eq!(t.mu(6), 1);
        assert_eq!(t.mu(12), 0); // 12 = 2^2 * 3
        assert_eq!(t.mu(30), -1); // three distinct primes
    }

    #[test]
    fn sieve_limit_one() {
        let t = MobiusTable::sieve(1).unwrap();
        assert_eq!(t.mu(1), 1);
        assert_eq!(t.limit(), 1);
    }

    #[test]
    fn mertens_values() {
        let t = MobiusTable::sieve(100).unwrap();
        assert_eq!(t.mertens(1).unwrap(), 1);
        assert_eq!(t.mertens(2).unwrap(), 0);
        assert_eq!(t.mertens(5).unwrap(), -2); // 1 - 1 - 1 + 0 - 1
        assert!(matches!(
            t.mertens(101),
            Err(ArithError::OutOfRange { n: 101, limit: 100 })
        ));
    }

    #[test]
    fn divisor_sum_identity() {
        // sum_{d|n} mu(d) = [n = 1], checked by a divisor-count sieve.
        let limit = 100_000usize;
        let t = MobiusTable::sieve(limit as u64).unwrap();
        let mut sums = vec![0i32; limit + 1];
        for d in 1..=limit {
            let mu = i32::from(t.mu(d as u64));
            if mu != 0 {
                let mut m = d;
                while m <= limit {
                    sums[m] += mu;
                    m += d;
                }
            }
        }
        assert_eq!(sums[1], 1);
        for n in 2..=limit {
            assert_eq!(sums[n], 0, "divisor sum failed at n = {n}");
        }
    }

    #[test]
    fn multiplicative_on_coprime_pairs() {
        let t = MobiusTable::sieve(1_000_000).unwrap();
        let mut rng = StdRng::seed_from_u64(0x6d6f6269);
        let mut checked = 0;
        while checked < 10_000 {
            let m = rng.gen_range(1..=1000u64);
            let n = rng.gen_range(1..=1000u64);
            if gcd(m, n) != 1 {
                continue;
            }
            assert_eq!(t.mu(m * n), t.mu(m) * t.mu(n), "mu({m} * {n})");
            checked += 1;
        }
    }

    #[test]
    fn floor_sum_examples() {
        let t = MobiusTable::sieve(1_000_000).unwrap();
        assert_eq!(t.mobius_floor_sum(1).unwrap(), 1);
        assert_eq!(t.mobius_floor_sum(10).unwrap(), 1);
        assert_eq!(t.mobius_floor_sum(1_000_000).unwrap(), 1);
    }

    #[test]
    fn floor_sum_grouped_matches_direct() {
        let t = MobiusTable::sieve(20_000).unwrap();
        let prefix = t.mertens_prefix();
        for n in 1..=10_000u64 {
            assert_eq!(mobius_floor_sum_grouped(&prefix, n), 1, "N = {n}");
        }
        for n in [1u64, 7, 100, 9999, 20_000] {
            assert_eq!(
                t.mobius_floor_sum(n).unwrap(),
                mobius_floor_sum_grouped(&prefix, n)
            );
        }
    }

    #[test]
    fn out_of_range_floor_sum() {
        let t = MobiusTable::sieve(10).unwrap();
        assert!(t.mobius_floor_sum(11).is_err());
        assert!(t.mobius_floor_sum(0).is_err());
    }
}
