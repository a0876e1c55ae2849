//! Exact counting of partitions and bipartitions, a truncated q-series engine
//! over big integers, and the Lusztig symbol calculus used to prove and check
//! the recursion
//!
//! ```text
//! p2(n) = p(n/2) + sum_{k != 0} (-1)^(k-1) p2(n - k^2)
//! ```
//!
//! together with the mod-5 congruences for `p2(5n+2)`, `p2(5n+3)`, `p2(5n+4)`.
//!
//! Every quantity is an exact [`num_bigint::BigInt`]; there is no floating point
//! anywhere in the crate. Identity checks return a [`report::Report`] carrying
//! the first mismatching coefficient rather than a bare boolean.

pub mod error;
pub mod partition;
pub mod qseries;
pub mod report;
pub mod symbols;

pub use error::{Error, Result};
pub use partition::{Bipartition, Partition};
pub use qseries::{BivariateSeries, ProductSpec, TruncatedSeries};
pub use report::{Check, Fault, Location, Mismatch, Report};
pub use symbols::{Symbol, SymbolClass};
