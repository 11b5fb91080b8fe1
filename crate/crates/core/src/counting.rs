//! Closed-form subset counts over a set `A` of positive integers.
//!
//! `phi_set`/`phi_alpha` count subsets relatively prime to a fixed `n`
//! (Möbius sums over the divisors of `n`); `f_set`/`f_alpha` count
//! relatively prime subsets (Möbius sums over `d = 1..=sup A`);
//! `f_incremental` evaluates the same counts by growing the set one
//! element at a time under an arbitrary permutation; the interval
//! variants use floor-difference exponents instead of per-divisor scans.
//!
//! All results are exact arbitrary-precision integers. Intermediate sums
//! are signed (the Möbius weights alternate) but every final count is
//! nonnegative.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{binomial, divisors, MobiusTable};
use crate::error::{Error, Result};
use crate::intset::IntSet;

fn pow2(exp: usize) -> BigInt {
    BigInt::one() << exp
}

fn signed_binomial(n: u64, k: u64) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// Final counts are nonnegative; a negative sum here means a broken
/// Möbius table or a bug in the summation, so fail hard.
fn into_count(sum: BigInt, what: &str) -> BigUint {
    sum.to_biguint()
        .unwrap_or_else(|| panic!("{what} produced a negative count"))
}

fn check_alpha(alpha: usize, size: usize) -> Result<()> {
    if alpha == 0 || alpha > size {
        return Err(Error::domain(format!(
            "alpha = {alpha} out of range 1..={size}"
        )));
    }
    Ok(())
}

/// Number of nonempty subsets `X` of `A` with `gcd(X, n) = 1`.
///
/// Evaluates `sum over d | n of mu(d) * 2^v(A,d)`. For `n = 1` the sum
/// also counts the empty subset, so one is subtracted to keep the
/// definitional contract (`2^|A| - 1` nonempty subsets, all coprime to 1).
pub fn phi_set(table: &MobiusTable, set: &IntSet, n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    table.require(n)?;
    let mut sum = BigInt::zero();
    for d in divisors(n) {
        let mu = table.mu(d)?;
        if mu == 0 {
            continue;
        }
        let term = pow2(set.v(d));
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if n == 1 {
        sum -= 1;
    }
    Ok(into_count(sum, "phi_set"))
}

/// Number of subsets of `A` with cardinality `alpha` and `gcd(X, n) = 1`:
/// `sum over d | n of mu(d) * C(v(A,d), alpha)`.
pub fn phi_alpha(table: &MobiusTable, set: &IntSet, n: u64, alpha: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    check_alpha(alpha, set.len())?;
    table.require(n)?;
    let mut sum = BigInt::zero();
    for d in divisors(n) {
        let mu = table.mu(d)?;
        if mu == 0 {
            continue;
        }
        let v = set.v(d);
        if v < alpha {
            continue;
        }
        let term = signed_binomial(v as u64, alpha as u64);
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(into_count(sum, "phi_alpha"))
}

/// Number of nonempty relatively prime subsets of `A` (`gcd(X) = 1`):
/// `sum over d = 1..=sup A of mu(d) * (2^v(A,d) - 1)`.
pub fn f_set(table: &MobiusTable, set: &IntSet) -> Result<BigUint> {
    table.require(set.sup())?;
    let mut sum = BigInt::zero();
    for d in 1..=set.sup() {
        let mu = table.mu(d)?;
        if mu == 0 {
            continue;
        }
        let v = set.v(d);
        if v == 0 {
            continue;
        }
        let term = pow2(v) - 1;
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(into_count(sum, "f_set"))
}

/// Number of relatively prime subsets of `A` with cardinality `alpha`:
/// `sum over d = 1..=sup A of mu(d) * C(v(A,d), alpha)`.
pub fn f_alpha(table: &MobiusTable, set: &IntSet, alpha: usize) -> Result<BigUint> {
    check_alpha(alpha, set.len())?;
    table.require(set.sup())?;
    let mut sum = BigInt::zero();
    for d in 1..=set.sup() {
        let mu = table.mu(d)?;
        if mu == 0 {
            continue;
        }
        let v = set.v(d);
        if v < alpha {
            continue;
        }
        let term = signed_binomial(v as u64, alpha as u64);
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(into_count(sum, "f_alpha"))
}

/// Checks that `perm` is a bijection on `0..len`.
fn check_permutation(perm: &[usize], len: usize) -> Result<()> {
    if perm.len() != len {
        return Err(Error::domain(format!(
            "permutation has length {}, set has {len} elements",
            perm.len()
        )));
    }
    let mut seen = vec![false; len];
    for &p in perm {
        if p >= len || seen[p] {
            return Err(Error::domain("not a permutation of the set indices"));
        }
        seen[p] = true;
    }
    Ok(())
}

/// `f(A)` (or `f_alpha(A)` when `alpha` is given) evaluated incrementally:
/// elements are added in the order `perm` (0-based indices into the sorted
/// elements), and each step sums `mu(d)` over the divisors of the new
/// element against the multiples count of the prefix built so far.
///
/// The result is the same for every permutation.
pub fn f_incremental(
    table: &MobiusTable,
    set: &IntSet,
    perm: &[usize],
    alpha: Option<usize>,
) -> Result<BigUint> {
    check_permutation(perm, set.len())?;
    if let Some(alpha) = alpha {
        check_alpha(alpha, set.len())?;
    }
    table.require(set.sup())?;
    let elements = set.elements();
    let mut prefix = IntSet::empty();
    let mut sum = BigInt::zero();
    for &idx in perm {
        let a = elements[idx];
        for d in divisors(a) {
            let mu = table.mu(d)?;
            if mu == 0 {
                continue;
            }
            let v = prefix.v(d);
            let term = match alpha {
                None => pow2(v),
                Some(alpha) => signed_binomial(v as u64, alpha as u64 - 1),
            };
            if mu > 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        prefix.insert(a);
    }
    Ok(into_count(sum, "f_incremental"))
}

fn check_interval(l: u64, m: u64) -> Result<()> {
    if l == 0 {
        return Err(Error::domain("interval bound l must be positive"));
    }
    if l > m {
        return Err(Error::domain(format!("empty interval: l = {l} > m = {m}")));
    }
    Ok(())
}

/// Multiples of `d` in `[l, m]` via floors, without materializing the set.
fn interval_multiples(l: u64, m: u64, d: u64) -> u64 {
    m / d - (l - 1) / d
}

fn shift_amount(count: u64) -> Result<usize> {
    usize::try_from(count)
        .map_err(|_| Error::domain(format!("interval with {count} multiples is too large")))
}

/// `f([l, m])`, or `f_alpha([l, m])` when `alpha` is given, using the
/// floor-difference exponents. Agrees with `f_set`/`f_alpha` on the
/// materialized interval.
pub fn f_interval(table: &MobiusTable, l: u64, m: u64, alpha: Option<usize>) -> Result<BigUint> {
    check_interval(l, m)?;
    if let Some(alpha) = alpha {
        if alpha == 0 || alpha as u64 > m - l + 1 {
            return Err(Error::domain(format!(
                "alpha = {alpha} out of range 1..={}",
                m - l + 1
            )));
        }
    }
    table.require(m)?;
    let mut sum = BigInt::zero();
    for d in 1..=m {
        let mu = table.mu(d)?;
        if mu == 0 {
            continue;
        }
        let count = interval_multiples(l, m, d);
        let term = match alpha {
            None => {
                if count == 0 {
                    continue;
                }
                pow2(shift_amount(count)?) - 1
            }
            Some(alpha) => {
                if count < alpha as u64 {
                    continue;
                }
                signed_binomial(count, alpha as u64)
            }
        };
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(into_count(sum, "f_interval"))
}

/// `Phi([l, m], n)`, or `Phi_alpha([l, m], n)` when `alpha` is given,
/// with the same `n = 1` adjustment as `phi_set`.
pub fn phi_interval(
    table: &MobiusTable,
    l: u64,
    m: u64,
    n: u64,
    alpha: Option<usize>,
) -> Result<BigUint> {
    check_interval(l, m)?;
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    if let Some(alpha) = alpha {
        if alpha == 0 || alpha as u64 > m - l + 1 {
            return Err(Error::domain(format!(
                "alpha = {alpha} out of range 1..={}",
                m - l + 1
            )));
        }
    }
    table.require(n)?;
    let mut sum = BigInt::zero();
    for d in divisors(n) {
        let mu = table.mu(d)?;
        if mu == 0 {
            continue;
        }
        let count = interval_multiples(l, m, d);
        let term = match alpha {
            None => pow2(shift_amount(count)?),
            Some(alpha) => {
                if count < alpha as u64 {
                    continue;
                }
                signed_binomial(count, alpha as u64)
            }
        };
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if n == 1 && alpha.is_none() {
        sum -= 1;
    }
    Ok(into_count(sum, "phi_interval"))
}

/// How many single elements of `A` are coprime to `n`:
/// `sum over d | n of mu(d) * v(A, d)`.
pub fn coprime_element_count(table: &MobiusTable, set: &IntSet, n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    table.require(n)?;
    let mut sum: i128 = 0;
    for d in divisors(n) {
        let mu = table.mu(d)?;
        if mu == 0 {
            continue;
        }
        sum += i128::from(mu) * set.v(d) as i128;
    }
    assert!(sum >= 0, "coprime_element_count produced a negative count");
    Ok(BigUint::from(sum as u128))
}
