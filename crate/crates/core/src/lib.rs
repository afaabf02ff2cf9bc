//! Over-Mahonian numbers: permutations of `{1,...,n}` in which any entry
//! heading an inversion may independently carry an overline, counted by
//! inversion number.
//!
//! The crate computes the resulting triangle by four independent routes
//! (two recurrences, a product generating function, and brute-force
//! enumeration), materializes three bijective carriers for the same counts
//! (constrained lattice paths, restricted overpartitions, board tilings)
//! as executable round-trip maps, and implements the constructive
//! inversion-transfer injection that certifies log-concavity and
//! unimodality of every row, with exhaustive verification at small sizes.
//!
//! Modules:
//!
//! * [`numbers`]: the triangle, scalar identities, row sums `(2n-1)!!`,
//!   and total inversion counts.
//! * [`perm`]: overlined permutations, inversion statistics, enumeration.
//! * [`paths`]: constrained lattice paths, the path <-> permutation
//!   bijection, and the tail-swapping involution on path pairs.
//! * [`overpartitions`], [`tilings`]: the other two carriers.
//! * [`logconcavity`]: the injection, injectivity verification,
//!   log-concavity / unimodality / mode reports.

pub mod error;
pub mod logconcavity;
pub mod numbers;
pub mod overpartitions;
pub mod paths;
pub mod perm;
pub mod tilings;

pub use error::{Error, Result};
pub use numbers::BigNat;
pub use perm::OverlinedPermutation;
