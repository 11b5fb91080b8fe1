//! Exact counting of relatively prime subsets of finite integer sets.
//!
//! Given a nonempty finite set `A` of positive integers, this crate counts
//! (exactly, in arbitrary precision):
//!
//! * nonempty subsets `X` with `gcd(X) = 1`, optionally of fixed
//!   cardinality ([`counting::f_set`], [`counting::f_alpha`]);
//! * nonempty subsets relatively prime to a fixed `n`
//!   ([`counting::phi_set`], [`counting::phi_alpha`]);
//! * elements of `A` coprime to `n` ([`counting::coprime_element_count`]),
//!   which specializes to Euler's phi on `A = [1, n]`;
//! * subsets whose elements are pairwise coprime, or free of coprime
//!   pairs ([`classify`]).
//!
//! The closed forms are Möbius sums over divisors backed by a sieved
//! [`arith::MobiusTable`]; intermediate sums are signed, final counts are
//! nonnegative. A deliberately naive subset-enumeration [`oracle`]
//! provides ground truth on small instances, and [`identities`] evaluates
//! the companion Mertens-function identities with branch-by-branch
//! reports.
//!
//! ```
//! use coprime_counts::counting::{f_set, phi_set};
//! use coprime_counts::{IntSet, MobiusTable};
//!
//! # fn main() -> coprime_counts::Result<()> {
//! let table = MobiusTable::new(10)?;
//! let a = IntSet::new([2, 3, 4])?;
//! // {2,3}, {3,4}, and {2,3,4} have gcd 1 ...
//! assert_eq!(f_set(&table, &a)?.to_string(), "3");
//! // ... and the same three subsets are relatively prime to 6.
//! assert_eq!(phi_set(&table, &a, 6)?.to_string(), "3");
//! # Ok(())
//! # }
//! ```

pub mod arith;
pub mod classify;
pub mod counting;
pub mod error;
pub mod identities;
pub mod intset;
pub mod oracle;

pub use arith::MobiusTable;
pub use classify::{AlphaStatus, PairwiseMethod};
pub use error::{Error, Result};
pub use identities::IdentityReport;
pub use intset::IntSet;
pub use oracle::{PredicateKind, SubsetPredicate};
