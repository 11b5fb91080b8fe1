//! Finite sets of positive integers, their multiples structure `v(A, d)`,
//! and scaling `bA`.

use std::fmt;
use std::str::FromStr;

use crate::arith;
use crate::error::{Error, Result};

/// A nonempty finite set of positive integers, stored as a strictly
/// increasing vector.
///
/// The sorted-vector layout keeps divisibility scans linear and gives
/// `sup` and `len` in O(1); it is also the canonical form used by the text
/// serialization (`Display` / `FromStr`). Public constructors reject empty
/// input; an empty value exists only crate-internally as the growing prefix
/// of the incremental counting formula, where `v(empty, d) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSet {
    elements: Vec<u64>,
}

impl IntSet {
    /// Sorts, deduplicates, and validates: every value must be >= 1 and the
    /// input nonempty.
    pub fn new(values: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut elements: Vec<u64> = values.into_iter().collect();
        if elements.is_empty() {
            return Err(Error::domain("set must be nonempty"));
        }
        if elements.contains(&0) {
            return Err(Error::domain("set elements must be positive"));
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(IntSet { elements })
    }

    /// The empty intermediate allowed only inside the incremental formulas.
    pub(crate) fn empty() -> Self {
        IntSet {
            elements: Vec::new(),
        }
    }

    /// Inserts a new element, keeping the vector sorted. Crate-internal,
    /// used to grow incremental prefixes one element at a time.
    pub(crate) fn insert(&mut self, value: u64) {
        debug_assert!(value >= 1);
        match self.elements.binary_search(&value) {
            Ok(_) => {}
            Err(pos) => self.elements.insert(pos, value),
        }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Largest element. Panics on the internal empty value.
    pub fn sup(&self) -> u64 {
        *self.elements.last().expect("sup of an empty set")
    }

    pub fn contains(&self, value: u64) -> bool {
        self.elements.binary_search(&value).is_ok()
    }

    /// The elements of `self` divisible by `d`, in order (the set `V(A, d)`).
    pub fn multiples_of(&self, d: u64) -> Result<Vec<u64>> {
        if d == 0 {
            return Err(Error::domain("divisor d must be positive"));
        }
        Ok(self.iter().filter(|a| a % d == 0).collect())
    }

    /// `v(A, d)`: how many elements of `self` are divisible by `d`.
    pub fn count_multiples(&self, d: u64) -> Result<usize> {
        if d == 0 {
            return Err(Error::domain("divisor d must be positive"));
        }
        Ok(self.v(d))
    }

    /// `v(A, d)` computed by the floor identity
    /// `sum over a in A of (floor(a/d) - floor((a-1)/d))`
    /// instead of a divisibility scan. Always equals `count_multiples`.
    pub fn count_multiples_floor(&self, d: u64) -> Result<usize> {
        if d == 0 {
            return Err(Error::domain("divisor d must be positive"));
        }
        Ok(self
            .iter()
            .map(|a| (a / d - (a - 1) / d) as usize)
            .sum())
    }

    /// Unchecked `v(A, d)` for the crate's summation loops; `d >= 1`.
    pub(crate) fn v(&self, d: u64) -> usize {
        debug_assert!(d >= 1);
        self.elements.iter().filter(|&&a| a % d == 0).count()
    }

    /// The scaled set `bA = { b * a : a in A }`.
    pub fn scale(&self, b: u64) -> Result<IntSet> {
        if b == 0 {
            return Err(Error::domain("scale factor b must be positive"));
        }
        let elements = self
            .iter()
            .map(|a| {
                a.checked_mul(b)
                    .ok_or_else(|| Error::domain(format!("{a} * {b} overflows")))
            })
            .collect::<Result<Vec<u64>>>()?;
        // Scaling by a positive constant preserves strict ordering.
        Ok(IntSet { elements })
    }

    /// Parses the one-integer-per-line file format. Blank lines and lines
    /// starting with `#` are ignored.
    pub fn from_lines(text: &str) -> Result<IntSet> {
        let mut values = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let value: u64 = line.parse().map_err(|_| {
                Error::domain(format!("line {}: invalid integer {line:?}", idx + 1))
            })?;
            values.push(value);
        }
        IntSet::new(values)
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
            first = false;
        }
        Ok(())
    }
}

/// Comma-separated form, whitespace ignored: `"2, 3, 4"`.
impl FromStr for IntSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<IntSet> {
        let mut values = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::domain(format!("empty entry in set {s:?}")));
            }
            let value: u64 = part
                .parse()
                .map_err(|_| Error::domain(format!("invalid integer {part:?}")))?;
            values.push(value);
        }
        IntSet::new(values)
    }
}

/// gcd of the whole set.
pub fn gcd_of(set: &IntSet) -> u64 {
    arith::gcd_set(set.elements()).expect("IntSet is nonempty")
}
