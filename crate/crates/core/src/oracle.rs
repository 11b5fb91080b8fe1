//! Brute-force subset enumeration: the ground truth the closed forms are
//! checked against.
//!
//! Deliberately naive. Every nonempty subset is visited in mask order and
//! the predicate is evaluated from first principles (gcd scans, pair
//! scans); nothing here touches the Möbius machinery it exists to verify.

use num_bigint::BigUint;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::intset::IntSet;

/// Default cap on `|A|` for full subset enumeration (2^20 subsets).
pub const DEFAULT_ENUM_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredicateKind {
    /// `gcd(X) = 1`.
    RelPrime,
    /// `gcd(X, n) = 1`, i.e. the gcd of `X` together with `n` is 1.
    RelPrimeToN(u64),
    /// Every pair of distinct elements is coprime; singletons vacuously so.
    PairwiseCoprime,
    /// No pair of distinct elements is coprime; singletons vacuously so.
    CoprimeFree,
}

/// What to count: a predicate on subsets, optionally restricted to a fixed
/// cardinality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetPredicate {
    pub kind: PredicateKind,
    pub cardinality: Option<usize>,
}

impl SubsetPredicate {
    pub fn new(kind: PredicateKind) -> Self {
        SubsetPredicate {
            kind,
            cardinality: None,
        }
    }

    pub fn with_cardinality(kind: PredicateKind, alpha: usize) -> Self {
        SubsetPredicate {
            kind,
            cardinality: Some(alpha),
        }
    }

    /// Evaluates the predicate on a nonempty subset given as a slice.
    pub fn matches(&self, subset: &[u64]) -> bool {
        debug_assert!(!subset.is_empty());
        if let Some(alpha) = self.cardinality {
            if subset.len() != alpha {
                return false;
            }
        }
        match self.kind {
            PredicateKind::RelPrime => gcd_all(subset, None) == 1,
            PredicateKind::RelPrimeToN(n) => gcd_all(subset, Some(n)) == 1,
            PredicateKind::PairwiseCoprime => pairs(subset, |a, b| gcd(a, b) == 1),
            PredicateKind::CoprimeFree => pairs(subset, |a, b| gcd(a, b) > 1),
        }
    }
}

fn gcd_all(values: &[u64], extra: Option<u64>) -> u64 {
    let mut g = extra.unwrap_or(0);
    for &v in values {
        g = gcd(g, v);
        if g == 1 {
            return 1;
        }
    }
    g
}

fn pairs(values: &[u64], ok: impl Fn(u64, u64) -> bool) -> bool {
    for (i, &a) in values.iter().enumerate() {
        for &b in &values[i + 1..] {
            if !ok(a, b) {
                return false;
            }
        }
    }
    true
}

/// Counts the nonempty subsets of `set` satisfying `pred`, by enumerating
/// all `2^|A| - 1` of them. Uses the default size cap.
pub fn brute_count(set: &IntSet, pred: &SubsetPredicate) -> Result<BigUint> {
    brute_count_limited(set, pred, DEFAULT_ENUM_LIMIT)
}

/// As `brute_count` with an explicit cap on `|A|`.
pub fn brute_count_limited(
    set: &IntSet,
    pred: &SubsetPredicate,
    max_size: usize,
) -> Result<BigUint> {
    let k = set.len();
    // Masks are u64, so 63 elements is a hard ceiling no matter the cap.
    if k > max_size.min(63) {
        return Err(Error::EnumerationLimit {
            size: k,
            limit: max_size.min(63),
        });
    }
    let elements = set.elements();
    let mut count: u64 = 0;
    let mut subset: Vec<u64> = Vec::with_capacity(k);
    for mask in 1u64..(1u64 << k) {
        if let Some(alpha) = pred.cardinality {
            if mask.count_ones() as usize != alpha {
                continue;
            }
        }
        subset.clear();
        for (i, &a) in elements.iter().enumerate() {
            if mask >> i & 1 == 1 {
                subset.push(a);
            }
        }
        if pred.matches(&subset) {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}
