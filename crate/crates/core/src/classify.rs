//! Classification of alpha-relatively-prime structure and integer-exact
//! characterizations of pairwise-coprime / coprime-free sets.
//!
//! The square-root characterizations are evaluated as exact integer
//! identities, e.g. `(2|A| - 1)^2 = 1 + 4*S(A)` with
//! `S(A) = sum over d of mu(d) * v(A,d) * (v(A,d) - 1)`; no floating-point
//! square root is ever taken.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::arith::{binomial, divisors, gcd, MobiusTable};
use crate::counting::{f_alpha, phi_alpha};
use crate::error::{Error, Result};
use crate::intset::IntSet;
use crate::oracle::DEFAULT_ENUM_LIMIT;

/// Whether all, none, or some of the cardinality-alpha subsets satisfy a
/// relative-primality condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaStatus {
    All,
    None,
    Mixed,
}

impl fmt::Display for AlphaStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlphaStatus::All => "All",
            AlphaStatus::None => "None",
            AlphaStatus::Mixed => "Mixed",
        };
        f.write_str(s)
    }
}

fn status_from(count: BigUint, total: BigUint) -> AlphaStatus {
    if count == total {
        AlphaStatus::All
    } else if count.is_zero() {
        AlphaStatus::None
    } else {
        AlphaStatus::Mixed
    }
}

/// `All` iff every alpha-subset of `A` is relatively prime
/// (`f_alpha(A) = C(|A|, alpha)`), `None` iff no alpha-subset is
/// (`f_alpha(A) = 0`).
pub fn alpha_status(table: &MobiusTable, set: &IntSet, alpha: usize) -> Result<AlphaStatus> {
    let count = f_alpha(table, set, alpha)?;
    Ok(status_from(count, binomial(set.len() as u64, alpha as u64)))
}

/// `All` iff every alpha-subset of `A` is relatively prime to `n`
/// (`Phi_alpha(A, n) = C(|A|, alpha)`), `None` iff none is.
pub fn alpha_status_to_n(
    table: &MobiusTable,
    set: &IntSet,
    alpha: usize,
    n: u64,
) -> Result<AlphaStatus> {
    let count = phi_alpha(table, set, n, alpha)?;
    Ok(status_from(count, binomial(set.len() as u64, alpha as u64)))
}

/// How to decide the pairwise characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairwiseMethod {
    /// Exact-square test on `S(A)` summed over `d = 1..=sup A`.
    SqrtForm,
    /// Exact-square test on the incremental sum over divisor lists,
    /// with the identity permutation.
    Incremental,
    /// gcd over all pairs, no Möbius machinery.
    Direct,
}

/// `S(A) = sum over d = 1..=sup A of mu(d) * v(A,d) * (v(A,d) - 1)`,
/// evaluated on a slice of elements.
fn pair_sum(table: &MobiusTable, elements: &[u64]) -> Result<BigInt> {
    let sup = *elements.iter().max().expect("nonempty slice");
    table.require(sup)?;
    let mut sum = BigInt::zero();
    for d in 1..=sup {
        let mu = table.mu(d)?;
        if mu == 0 {
            continue;
        }
        let v = elements.iter().filter(|&&a| a % d == 0).count() as u64;
        if v < 2 {
            continue;
        }
        let term = BigInt::from(v * (v - 1));
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// `T(A) = sum over j, d | a_perm(j) of mu(d) * v(prefix_(j-1), d)`;
/// equals `S(A) / 2` for every permutation.
fn pair_sum_incremental(table: &MobiusTable, set: &IntSet, perm: &[usize]) -> Result<BigInt> {
    if perm.len() != set.len() {
        return Err(Error::domain(format!(
            "permutation has length {}, set has {} elements",
            perm.len(),
            set.len()
        )));
    }
    let mut seen = vec![false; set.len()];
    for &p in perm {
        if p >= set.len() || seen[p] {
            return Err(Error::domain("not a permutation of the set indices"));
        }
        seen[p] = true;
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
            if v == 0 {
                continue;
            }
            let term = BigInt::from(v);
            if mu > 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        prefix.insert(a);
    }
    Ok(sum)
}

fn identity_perm(len: usize) -> Vec<usize> {
    (0..len).collect()
}

fn direct_pairwise(elements: &[u64], want_coprime: bool) -> bool {
    for (i, &a) in elements.iter().enumerate() {
        for &b in &elements[i + 1..] {
            if (gcd(a, b) == 1) != want_coprime {
                return false;
            }
        }
    }
    true
}

/// Square of `2k - 1` as a big integer.
fn odd_square(k: usize) -> BigInt {
    let odd = BigInt::from(2 * k as i64 - 1);
    &odd * &odd
}

/// True iff every pair of distinct elements of `A` is coprime.
///
/// All three methods agree; `Incremental` uses the identity permutation
/// (see [`is_pairwise_coprime_with_perm`] for an explicit one).
pub fn is_pairwise_coprime(
    table: &MobiusTable,
    set: &IntSet,
    method: PairwiseMethod,
) -> Result<bool> {
    match method {
        PairwiseMethod::Direct => Ok(direct_pairwise(set.elements(), true)),
        PairwiseMethod::SqrtForm => {
            let s = pair_sum(table, set.elements())?;
            Ok(odd_square(set.len()) == s * 4 + 1)
        }
        PairwiseMethod::Incremental => {
            is_pairwise_coprime_with_perm(table, set, &identity_perm(set.len()))
        }
    }
}

/// Incremental characterization under an explicit permutation:
/// `(2|A| - 1)^2 = 1 + 8*T(A)`.
pub fn is_pairwise_coprime_with_perm(
    table: &MobiusTable,
    set: &IntSet,
    perm: &[usize],
) -> Result<bool> {
    let t = pair_sum_incremental(table, set, perm)?;
    Ok(odd_square(set.len()) == t * 8 + 1)
}

/// True iff no pair of distinct elements of `A` is coprime.
pub fn is_coprime_free(table: &MobiusTable, set: &IntSet, method: PairwiseMethod) -> Result<bool> {
    match method {
        PairwiseMethod::Direct => Ok(direct_pairwise(set.elements(), false)),
        PairwiseMethod::SqrtForm => Ok(pair_sum(table, set.elements())?.is_zero()),
        PairwiseMethod::Incremental => {
            is_coprime_free_with_perm(table, set, &identity_perm(set.len()))
        }
    }
}

/// Coprime-free characterization under an explicit permutation: `T(A) = 0`.
pub fn is_coprime_free_with_perm(
    table: &MobiusTable,
    set: &IntSet,
    perm: &[usize],
) -> Result<bool> {
    Ok(pair_sum_incremental(table, set, perm)?.is_zero())
}

/// Number of nonempty subsets of `A` whose elements are pairwise coprime,
/// by enumerating subsets and applying the exact-square test to each.
pub fn count_pairwise_coprime_subsets(table: &MobiusTable, set: &IntSet) -> Result<BigUint> {
    count_pairwise_coprime_subsets_limited(table, set, DEFAULT_ENUM_LIMIT)
}

pub fn count_pairwise_coprime_subsets_limited(
    table: &MobiusTable,
    set: &IntSet,
    max_size: usize,
) -> Result<BigUint> {
    count_subsets_by_pair_sum(table, set, max_size, |s, k| odd_square(k) == s * 4 + 1)
}

/// Number of nonempty subsets of `A` that are coprime-free (`S(B) = 0`).
pub fn count_coprime_free_subsets(table: &MobiusTable, set: &IntSet) -> Result<BigUint> {
    count_coprime_free_subsets_limited(table, set, DEFAULT_ENUM_LIMIT)
}

pub fn count_coprime_free_subsets_limited(
    table: &MobiusTable,
    set: &IntSet,
    max_size: usize,
) -> Result<BigUint> {
    count_subsets_by_pair_sum(table, set, max_size, |s, _| s.is_zero())
}

fn count_subsets_by_pair_sum(
    table: &MobiusTable,
    set: &IntSet,
    max_size: usize,
    accept: impl Fn(BigInt, usize) -> bool,
) -> Result<BigUint> {
    let k = set.len();
    // Masks are u64, so 63 elements is a hard ceiling no matter the cap.
    if k > max_size.min(63) {
        return Err(Error::EnumerationLimit {
            size: k,
            limit: max_size.min(63),
        });
    }
    table.require(set.sup())?;
    let elements = set.elements();
    let mut count: u64 = 0;
    let mut subset: Vec<u64> = Vec::with_capacity(k);
    for mask in 1u64..(1u64 << k) {
        subset.clear();
        for (i, &a) in elements.iter().enumerate() {
            if mask >> i & 1 == 1 {
                subset.push(a);
            }
        }
        let s = pair_sum(table, &subset)?;
        if accept(s, subset.len()) {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}
