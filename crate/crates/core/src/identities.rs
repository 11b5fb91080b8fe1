//! Executable Mertens-function identities: each operation evaluates the
//! Möbius-weighted sum on the left, the predicted `M(n)`-based value on the
//! right, and reports whether they agree.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{gcd, MobiusTable};
use crate::error::{Error, Result};
use crate::intset::{gcd_of, IntSet};

/// Both sides of an identity, the branch that applied, and the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: &'static str,
    pub lhs: BigInt,
    pub rhs_expected: BigInt,
    pub case_label: String,
    pub holds: bool,
}

impl IdentityReport {
    fn new(name: &'static str, lhs: BigInt, rhs_expected: BigInt, case_label: String) -> Self {
        let holds = lhs == rhs_expected;
        IdentityReport {
            name,
            lhs,
            rhs_expected,
            case_label,
            holds,
        }
    }
}

/// `sum over d = 1..=n of mu(d) * 2^(number of x in xs divisible by d)`,
/// with multiplicity: repeated values contribute to the exponent twice.
/// Exponents stay tiny (at most `xs.len()`), so this runs in plain i128.
fn indicator_sum(table: &MobiusTable, bound: u64, xs: &[u64]) -> Result<i128> {
    table.require(bound)?;
    let mut sum: i128 = 0;
    for d in 1..=bound {
        let mu = table.mu(d)?;
        if mu == 0 {
            continue;
        }
        let exponent = xs.iter().filter(|&&x| x % d == 0).count() as u32;
        sum += i128::from(mu) << exponent;
    }
    Ok(sum)
}

/// The two-variable identity: for `1 < m <= n`,
/// `sum mu(d) * 2^([d|n] + [d|m])` is `M(n)` when `gcd(m, n) > 1` and
/// `1 + M(n)` when `m` and `n` are coprime.
///
/// Exponents are sums of divisibility indicators, so `m = n` contributes 2
/// (the multiset behavior the identity requires), not 1.
pub fn mertens_pair(table: &MobiusTable, m: u64, n: u64) -> Result<IdentityReport> {
    if m <= 1 {
        return Err(Error::domain(format!("m = {m} must be greater than 1")));
    }
    if m > n {
        return Err(Error::domain(format!("require m <= n, got m = {m}, n = {n}")));
    }
    let lhs = indicator_sum(table, n, &[m, n])?;
    let mertens = table.mertens(n)?;
    let (rhs, case_label) = if gcd(m, n) > 1 {
        (i128::from(mertens), "common-factor")
    } else {
        (i128::from(mertens) + 1, "coprime")
    };
    Ok(IdentityReport::new(
        "mertens-pair",
        BigInt::from(lhs),
        BigInt::from(rhs),
        case_label.to_string(),
    ))
}

/// The three-variable identity: for `1 < l < m <= n`, the sum
/// `sum mu(d) * 2^([d|l] + [d|m] + [d|n])` equals `M(n) + k` where `k`
/// counts down from 4 with the number of coprime pairs among
/// `(l,m), (l,n), (m,n)`, with a separate branch for
/// "no coprime pair but gcd(l,m,n) = 1".
pub fn mertens_triple(table: &MobiusTable, l: u64, m: u64, n: u64) -> Result<IdentityReport> {
    if l <= 1 {
        return Err(Error::domain(format!("l = {l} must be greater than 1")));
    }
    if !(l < m && m <= n) {
        return Err(Error::domain(format!(
            "require l < m <= n, got l = {l}, m = {m}, n = {n}"
        )));
    }
    let lhs = indicator_sum(table, n, &[l, m, n])?;
    let coprime_pairs = [(l, m), (l, n), (m, n)]
        .iter()
        .filter(|&&(a, b)| gcd(a, b) == 1)
        .count();
    let (k, case_label) = match coprime_pairs {
        3 => (4, "all-pairs-coprime"),
        2 => (3, "two-pairs-coprime"),
        1 => (2, "one-pair-coprime"),
        _ => {
            if gcd(gcd(l, m), n) == 1 {
                (1, "no-pair-coprime-gcd-one")
            } else {
                (0, "common-factor")
            }
        }
    };
    let rhs = i128::from(table.mertens(n)?) + k;
    Ok(IdentityReport::new(
        "mertens-triple",
        BigInt::from(lhs),
        BigInt::from(rhs),
        case_label.to_string(),
    ))
}

/// The lower bound `M(sup A) <= sum over d = 1..=sup A of mu(d) * 2^v(A,d)`.
///
/// `holds` reports equality, which occurs exactly when `gcd(A) > 1`; the
/// surplus `lhs - M(sup A)` is the number of relatively prime subsets of
/// `A`.
pub fn mertens_bound(table: &MobiusTable, set: &IntSet) -> Result<IdentityReport> {
    let sup = set.sup();
    table.require(sup)?;
    let mut lhs = BigInt::zero();
    for d in 1..=sup {
        let mu = table.mu(d)?;
        if mu == 0 {
            continue;
        }
        let term = BigInt::one() << set.v(d);
        if mu > 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = BigInt::from(table.mertens(sup)?);
    let case_label = if gcd_of(set) > 1 { "equality" } else { "strict" };
    debug_assert!(lhs >= rhs, "Mertens lower bound violated");
    debug_assert_eq!(lhs == rhs, gcd_of(set) > 1, "equality condition violated");
    Ok(IdentityReport::new(
        "mertens-bound",
        lhs,
        rhs,
        case_label.to_string(),
    ))
}

/// The scaled-set identity: for composite `c = a * b` (`a, b > 1`) and
/// `sup A = a`, the sum `sum over d = 1..=c of mu(d) * 2^v(bA, d)` equals
/// `M(c)` outright, because `gcd(bA) >= b > 1` forces the equality case of
/// the lower bound.
pub fn scaled_mertens(table: &MobiusTable, set: &IntSet, a: u64, b: u64) -> Result<IdentityReport> {
    if a <= 1 || b <= 1 {
        return Err(Error::domain(format!(
            "require a > 1 and b > 1, got a = {a}, b = {b}"
        )));
    }
    if set.sup() != a {
        return Err(Error::domain(format!(
            "sup of the set is {}, expected a = {a}",
            set.sup()
        )));
    }
    let c = a
        .checked_mul(b)
        .ok_or_else(|| Error::domain(format!("{a} * {b} overflows")))?;
    table.require(c)?;
    let scaled = set.scale(b)?;
    let mut lhs = BigInt::zero();
    for d in 1..=c {
        let mu = table.mu(d)?;
        if mu == 0 {
            continue;
        }
        let term = BigInt::one() << scaled.v(d);
        if mu > 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = BigInt::from(table.mertens(c)?);
    Ok(IdentityReport::new(
        "scaled-mertens",
        lhs,
        rhs,
        format!("c={c}"),
    ))
}
