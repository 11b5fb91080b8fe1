//! Number-theoretic primitives: Möbius sieve, Mertens prefix sums, divisor
//! enumeration, gcd, exact binomial coefficients, and Euler's phi.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Sieved Möbius values `mu[1..=limit]` together with their prefix sums
/// (the Mertens function `M(n)`).
///
/// The table is immutable after construction; asking for `mu(d)` or
/// `mertens(n)` beyond `limit` is an error rather than a silent resieve,
/// so memory use is fixed by the caller up front.
#[derive(Debug, Clone)]
pub struct MobiusTable {
    limit: u64,
    mu: Vec<i8>,
    mertens_prefix: Vec<i64>,
}

impl MobiusTable {
    /// Builds the table for `1 <= d <= limit` with a linear sieve.
    pub fn new(limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(Error::domain("mobius table limit must be at least 1"));
        }
        let n = usize::try_from(limit)
            .map_err(|_| Error::domain("mobius table limit does not fit in memory"))?;

        // Linear sieve: every composite is marked exactly once, by its
        // least prime factor.
        let mut mu = vec![0i8; n + 1];
        mu[1] = 1;
        let mut primes: Vec<usize> = Vec::new();
        let mut least_factor = vec![0u32; n + 1];
        for i in 2..=n {
            if least_factor[i] == 0 {
                least_factor[i] = i as u32;
                mu[i] = -1;
                primes.push(i);
            }
            for &p in &primes {
                let ip = match i.checked_mul(p) {
                    Some(ip) if ip <= n => ip,
                    _ => break,
                };
                least_factor[ip] = p as u32;
                if i % p == 0 {
                    mu[ip] = 0;
                    break;
                }
                mu[ip] = -mu[i];
            }
        }

        let mut mertens_prefix = vec![0i64; n + 1];
        for d in 1..=n {
            mertens_prefix[d] = mertens_prefix[d - 1] + i64::from(mu[d]);
        }

        Ok(MobiusTable {
            limit,
            mu,
            mertens_prefix,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `mu(d)` for `1 <= d <= limit`.
    pub fn mu(&self, d: u64) -> Result<i8> {
        if d == 0 {
            return Err(Error::domain("mu(0) is undefined"));
        }
        if d > self.limit {
            return Err(Error::SieveLimit {
                requested: d,
                limit: self.limit,
            });
        }
        Ok(self.mu[d as usize])
    }

    /// Mertens function `M(n) = sum of mu(d) for d = 1..=n`.
    pub fn mertens(&self, n: u64) -> Result<i64> {
        if n == 0 {
            return Err(Error::domain("mertens(0) is undefined"));
        }
        if n > self.limit {
            return Err(Error::SieveLimit {
                requested: n,
                limit: self.limit,
            });
        }
        Ok(self.mertens_prefix[n as usize])
    }

    /// Errors with `SieveLimit` unless the table covers `1..=needed`.
    pub(crate) fn require(&self, needed: u64) -> Result<()> {
        if needed > self.limit {
            Err(Error::SieveLimit {
                requested: needed,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

/// All divisors of `n` in ascending order.
///
/// `n` must be at least 1.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of 0 are undefined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i <= n / i {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// gcd of a nonempty slice; `gcd_set(&[a]) == a`.
pub fn gcd_set(values: &[u64]) -> Result<u64> {
    let (&first, rest) = values
        .split_first()
        .ok_or_else(|| Error::domain("gcd of an empty set is undefined"))?;
    let mut g = first;
    for &v in rest {
        g = gcd(g, v);
        if g == 1 {
            break;
        }
    }
    Ok(g)
}

/// Exact binomial coefficient `C(n, k)`, with `C(n, k) = 0` for `k > n`.
///
/// Computed by multiplicative descent (multiply by `n-k+i`, divide by `i`);
/// each intermediate value is itself a binomial coefficient, so every
/// division is exact and no factorial is ever formed.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 1..=k {
        result *= n - k + i;
        result /= i;
    }
    result
}

/// Euler's totient: the count of integers in `[1, n]` coprime to `n`.
pub fn euler_phi(n: u64) -> BigUint {
    assert!(n >= 1, "euler_phi(0) is undefined");
    let mut phi = n;
    let mut m = n;
    let mut p = 2;
    while p <= m / p {
        if m.is_multiple_of(p) {
            phi = phi / p * (p - 1);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi = phi / m * (m - 1);
    }
    BigUint::from(phi)
}
