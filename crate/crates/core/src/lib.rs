//! Exact and asymptotic moments of partitions over weighted integer
//! sequences.
//!
//! The library has two independent halves that are cross-validated against
//! each other:
//!
//! - an exact half ([`exact`]) that counts partitions and their
//!   part-number moments by big-integer dynamic programming, and
//! - an asymptotic half ([`asymptotics`]) that evaluates large-`n` moment
//!   formulas from saddle-point data ([`saddle`]) and zeta-function
//!   constants ([`zeta`]).
//!
//! [`sequences`] defines the supported families and their partition-function
//! expansions; [`combinatorics`] holds the exact coefficient machinery both
//! halves share.

// negated float comparisons are deliberate NaN guards; indexed loops mirror
// the recurrences they implement
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::needless_range_loop)]

pub mod bernoulli;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod saddle;
pub mod sequences;
pub mod zeta;

pub mod asymptotics;

pub use error::{Error, Result};
